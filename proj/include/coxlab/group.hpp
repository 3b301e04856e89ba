#pragma once

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include "coxlab/matrix.hpp"
#include "coxlab/report.hpp"

namespace coxlab {

enum class Family { Symmetric, Gr1n, Grrn, H3 };

// Permutation-with-twist element. For the monomial families G(r,p,n) this is
// the matrix with entry zeta_r^{twist[i]} in position (perm[i], i); for
// Sym(N) and H3 the twist is empty and perm acts on letters resp. roots.
struct GroupElement {
    std::vector<uint8_t> perm;
    std::vector<uint8_t> twist;

    std::string key() const {
        std::string k(perm.begin(), perm.end());
        k.push_back('|');
        k.append(twist.begin(), twist.end());
        return k;
    }
};

struct Hyperplane {
    std::vector<CycScalar> normal;    // coordinates in the working basis, phase-fixed
    std::vector<CycScalar> cond_row;  // v lies on H  iff  cond_row . v == 0
    int order = 2;                    // e_H, order of the pointwise stabilizer
    std::vector<int> block;           // element indices tau_H^1 .. tau_H^{e_H - 1}
};

inline long group_cap_from_env() {
    const char* s = std::getenv("COXLAB_GROUP_CAP");
    if (!s) return 50000;
    return std::atol(s);
}

class ReflectionGroup {
  public:
    Family family;
    std::string name;
    int r = 1;          // twist modulus (1 when unused)
    int letters = 0;    // size of the permutation domain
    int rank = 0;
    int coxeter_number = 0;

    std::vector<GroupElement> elements;   // index 0 is the identity
    std::vector<int> reflections;         // element indices, block-major per hyperplane
    std::vector<Hyperplane> hyperplanes;
    std::vector<int> hyp_of_refl;         // position in `reflections` -> hyperplane index
    std::vector<int> generators;          // element indices of the standard generators
    Mat<CycScalar> gram;                  // hermitian form making the rep unitary

    long order() const { return (long)elements.size(); }
    int num_reflections() const { return (int)reflections.size(); }
    int num_hyperplanes() const { return (int)hyperplanes.size(); }

    int index_of(const GroupElement& e) const {
        auto it = index_.find(e.key());
        if (it == index_.end()) throw std::logic_error("element not in group: " + name);
        return it->second;
    }

    // matrix convention: mult(a, b) applies b first, so rep(mult(a,b)) = rep(a)*rep(b)
    int mult(int a, int b) const {
        const GroupElement &x = elements[a], &y = elements[b];
        GroupElement z;
        z.perm.resize(letters);
        for (int i = 0; i < letters; ++i) z.perm[i] = x.perm[y.perm[i]];
        if (r > 1) {
            z.twist.resize(letters);
            for (int i = 0; i < letters; ++i)
                z.twist[i] = (uint8_t)((y.twist[i] + x.twist[y.perm[i]]) % r);
        }
        return index_of(z);
    }

    int inv(int a) const {
        const GroupElement& x = elements[a];
        GroupElement z;
        z.perm.resize(letters);
        for (int i = 0; i < letters; ++i) z.perm[x.perm[i]] = i;
        if (r > 1) {
            z.twist.resize(letters);
            for (int i = 0; i < letters; ++i)
                z.twist[x.perm[i]] = (uint8_t)((r - x.twist[i]) % r);
        }
        return index_of(z);
    }

    int element_order(int a) const {
        int k = 1, cur = a;
        while (cur != 0) {
            cur = mult(cur, a);
            ++k;
            if (k > (int)elements.size()) throw std::logic_error("order runaway");
        }
        return k;
    }

    std::vector<int> conjugacy_class(int a) const {
        std::vector<int> out{a};
        std::vector<bool> seen(elements.size(), false);
        seen[a] = true;
        for (size_t head = 0; head < out.size(); ++head) {
            for (int g : generators) {
                int c = mult(mult(g, out[head]), inv(g));
                if (!seen[c]) {
                    seen[c] = true;
                    out.push_back(c);
                }
            }
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    // subgroup generated by the given element indices (BFS closure)
    std::vector<int> generated_subgroup(const std::vector<int>& gens) const {
        std::vector<int> out{0};
        std::vector<bool> seen(elements.size(), false);
        seen[0] = true;
        for (size_t head = 0; head < out.size(); ++head) {
            for (int g : gens) {
                int c = mult(out[head], g);
                if (!seen[c]) {
                    seen[c] = true;
                    out.push_back(c);
                }
            }
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    Mat<CycScalar> rep(int a) const {
        switch (family) {
            case Family::H3:
                return h3_reps_[a];
            case Family::Symmetric: {
                const auto& p = elements[a].perm;
                Mat<CycScalar> m(rank, rank);
                for (int j = 0; j < rank; ++j) {
                    auto col = sym_root_coords(p[j], p[j + 1]);
                    for (int i = 0; i < rank; ++i) m.at(i, j) = col[i];
                }
                return m;
            }
            default: {
                const auto& e = elements[a];
                Mat<CycScalar> m(rank, rank);
                for (int j = 0; j < rank; ++j)
                    m.at(e.perm[j], j) = CycScalar::root_of_unity(r, e.twist.empty() ? 0 : e.twist[j]);
                return m;
            }
        }
    }

    Eigen::MatrixXcd rep_complex(int a) const {
        Mat<CycScalar> m = rep(a);
        Eigen::MatrixXcd out(rank, rank);
        for (int i = 0; i < rank; ++i)
            for (int j = 0; j < rank; ++j) out(i, j) = m.at(i, j).to_complex();
        return out;
    }

    int refl_position(int elem_idx) const {
        auto it = refl_pos_.find(elem_idx);
        if (it == refl_pos_.end()) return -1;
        return it->second;
    }

    // pairing <u, n_H> used for "does u lie on hyperplane H"
    CycScalar hyperplane_pairing(const std::vector<CycScalar>& u, int hyp) const {
        CycScalar s;
        for (int i = 0; i < rank; ++i) s += hyperplanes[hyp].cond_row[i] * u[i];
        return s;
    }

    // --- construction ------------------------------------------------------

    static ReflectionGroup symmetric(int n_letters, long cap = group_cap_from_env());
    static ReflectionGroup g_r1n(int rr, int n, long cap = group_cap_from_env());
    static ReflectionGroup g_rrn(int rr, int n, long cap = group_cap_from_env());
    static ReflectionGroup h3(long cap = group_cap_from_env());
    static ReflectionGroup parse(const std::string& descriptor, long cap = group_cap_from_env());

  private:
    std::unordered_map<std::string, int> index_;
    std::unordered_map<int, int> refl_pos_;
    std::vector<Mat<CycScalar>> h3_reps_;

    void finish_indexing() {
        index_.reserve(elements.size() * 2);
        for (size_t i = 0; i < elements.size(); ++i) index_[elements[i].key()] = (int)i;
        for (size_t i = 0; i < reflections.size(); ++i) refl_pos_[reflections[i]] = (int)i;
    }

    void set_coxeter_number() {
        long total = (long)reflections.size() + (long)hyperplanes.size();
        if (total % rank != 0)
            throw std::logic_error("(|R|+|R*|)/n is not an integer for " + name);
        coxeter_number = (int)(total / rank);
    }

    std::vector<CycScalar> sym_root_coords(int a, int b) const {
        // coordinates of e_a - e_b in the simple-root basis of Sym(letters)
        std::vector<CycScalar> v(rank);
        if (a < b)
            for (int k = a; k < b; ++k) v[k] = CycScalar::one();
        else
            for (int k = b; k < a; ++k) v[k] = CycScalar(Rational(-1));
        return v;
    }

    void compute_cond_rows() {
        for (auto& h : hyperplanes) {
            h.cond_row.assign(rank, CycScalar());
            for (int i = 0; i < rank; ++i)
                for (int j = 0; j < rank; ++j)
                    h.cond_row[i] += gram.at(i, j) * h.normal[j].conj();
        }
    }

    friend struct GroupBuilder;
};

struct CoxeterClass {
    int representative;        // element index
    std::vector<int> members;  // the full conjugacy class
};

namespace detail {

inline void check_cap(long order, long cap, const std::string& name) {
    if (order > cap)
        throw BudgetExceeded("group " + name + " has order " + std::to_string(order) +
                             " exceeding the cap " + std::to_string(cap));
}

}  // namespace detail

inline ReflectionGroup ReflectionGroup::symmetric(int n_letters, long cap) {
    if (n_letters < 2) throw std::invalid_argument("Sym(n): need n >= 2");
    ReflectionGroup G;
    G.family = Family::Symmetric;
    G.name = "A" + std::to_string(n_letters - 1);
    G.r = 1;
    G.letters = n_letters;
    G.rank = n_letters - 1;
    long order = 1;
    for (int i = 2; i <= n_letters; ++i) order *= i;
    detail::check_cap(order, cap, G.name);

    std::vector<uint8_t> p(n_letters);
    std::iota(p.begin(), p.end(), 0);
    do {
        G.elements.push_back({p, {}});
    } while (std::next_permutation(p.begin(), p.end()));

    G.gram = Mat<CycScalar>(G.rank, G.rank);
    for (int i = 0; i < G.rank; ++i)
        for (int j = 0; j < G.rank; ++j) {
            if (i == j) G.gram.at(i, j) = CycScalar(Rational(2));
            else if (std::abs(i - j) == 1) G.gram.at(i, j) = CycScalar(Rational(-1));
        }

    G.finish_indexing();

    for (int a = 0; a < n_letters; ++a)
        for (int b = a + 1; b < n_letters; ++b) {
            GroupElement t;
            t.perm.resize(n_letters);
            std::iota(t.perm.begin(), t.perm.end(), 0);
            std::swap(t.perm[a], t.perm[b]);
            int idx = G.index_of(t);
            Hyperplane h;
            h.normal = G.sym_root_coords(a, b);
            h.order = 2;
            h.block = {idx};
            G.reflections.push_back(idx);
            G.hyp_of_refl.push_back((int)G.hyperplanes.size());
            G.hyperplanes.push_back(std::move(h));
        }
    for (size_t i = 0; i < G.reflections.size(); ++i) G.refl_pos_[G.reflections[i]] = (int)i;

    for (int i = 0; i + 1 < n_letters; ++i) {
        GroupElement t;
        t.perm.resize(n_letters);
        std::iota(t.perm.begin(), t.perm.end(), 0);
        std::swap(t.perm[i], t.perm[i + 1]);
        G.generators.push_back(G.index_of(t));
    }
    G.set_coxeter_number();
    G.compute_cond_rows();
    return G;
}

inline ReflectionGroup ReflectionGroup::g_r1n(int rr, int n, long cap) {
    if (rr < 2 || n < 1) throw std::invalid_argument("G(r,1,n): need r >= 2, n >= 1");
    ReflectionGroup G;
    G.family = Family::Gr1n;
    G.name = (rr == 2) ? "B" + std::to_string(n)
                       : "G(" + std::to_string(rr) + ",1," + std::to_string(n) + ")";
    G.r = rr;
    G.letters = n;
    G.rank = n;
    long order = 1;
    for (int i = 2; i <= n; ++i) order *= i;
    for (int i = 0; i < n; ++i) order *= rr;
    detail::check_cap(order, cap, G.name);

    std::vector<uint8_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
        std::vector<uint8_t> tw(n, 0);
        while (true) {
            G.elements.push_back({p, tw});
            int pos = n - 1;
            while (pos >= 0 && tw[pos] == rr - 1) tw[pos--] = 0;
            if (pos < 0) break;
            ++tw[pos];
        }
    } while (std::next_permutation(p.begin(), p.end()));
    // reorder so identity is first
    for (size_t i = 0; i < G.elements.size(); ++i) {
        bool id = true;
        for (int j = 0; j < n; ++j)
            if (G.elements[i].perm[j] != j || G.elements[i].twist[j] != 0) { id = false; break; }
        if (id) {
            std::swap(G.elements[0], G.elements[i]);
            break;
        }
    }

    G.gram = Mat<CycScalar>::identity(n);
    G.finish_indexing();

    auto diag_elem = [&](int i, int k) {
        GroupElement e;
        e.perm.resize(n);
        std::iota(e.perm.begin(), e.perm.end(), 0);
        e.twist.assign(n, 0);
        e.twist[i] = (uint8_t)k;
        return e;
    };
    auto mixed_elem = [&](int i, int j, int k) {
        GroupElement e;
        e.perm.resize(n);
        std::iota(e.perm.begin(), e.perm.end(), 0);
        std::swap(e.perm[i], e.perm[j]);
        e.twist.assign(n, 0);
        e.twist[i] = (uint8_t)k;
        e.twist[j] = (uint8_t)((rr - k) % rr);
        return e;
    };

    for (int i = 0; i < n; ++i) {
        Hyperplane h;
        h.normal.assign(n, CycScalar());
        h.normal[i] = CycScalar::one();
        h.order = rr;
        for (int k = 1; k < rr; ++k) {
            int idx = G.index_of(diag_elem(i, k));
            h.block.push_back(idx);
            G.reflections.push_back(idx);
            G.hyp_of_refl.push_back((int)G.hyperplanes.size());
        }
        G.hyperplanes.push_back(std::move(h));
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = 0; k < rr; ++k) {
                Hyperplane h;
                h.normal.assign(n, CycScalar());
                h.normal[i] = CycScalar::one();
                h.normal[j] = -CycScalar::root_of_unity(rr, k);
                h.order = 2;
                int idx = G.index_of(mixed_elem(i, j, k));
                h.block = {idx};
                G.reflections.push_back(idx);
                G.hyp_of_refl.push_back((int)G.hyperplanes.size());
                G.hyperplanes.push_back(std::move(h));
            }
    for (size_t i = 0; i < G.reflections.size(); ++i) G.refl_pos_[G.reflections[i]] = (int)i;

    G.generators.push_back(G.index_of(diag_elem(0, 1)));
    for (int i = 0; i + 1 < n; ++i) G.generators.push_back(G.index_of(mixed_elem(i, i + 1, 0)));
    G.set_coxeter_number();
    G.compute_cond_rows();
    return G;
}

inline ReflectionGroup ReflectionGroup::g_rrn(int rr, int n, long cap) {
    if (rr < 2 || n < 2 || (rr == 2 && n == 2))
        throw std::invalid_argument("G(r,r,n): need n >= 2 and (r,n) != (2,2)");
    ReflectionGroup G;
    G.family = Family::Grrn;
    if (n == 2) G.name = "I2(" + std::to_string(rr) + ")";
    else if (rr == 2) G.name = "D" + std::to_string(n);
    else G.name = "G(" + std::to_string(rr) + "," + std::to_string(rr) + "," + std::to_string(n) + ")";
    G.r = rr;
    G.letters = n;
    G.rank = n;
    long order = 1;
    for (int i = 2; i <= n; ++i) order *= i;
    for (int i = 0; i < n - 1; ++i) order *= rr;
    detail::check_cap(order, cap, G.name);

    std::vector<uint8_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
        std::vector<uint8_t> tw(n, 0);
        while (true) {  // iterate twists on the first n-1 coords, last balances
            int s = 0;
            for (int i = 0; i + 1 < n; ++i) s += tw[i];
            tw[n - 1] = (uint8_t)((rr - s % rr) % rr);
            G.elements.push_back({p, tw});
            int pos = n - 2;
            while (pos >= 0 && tw[pos] == rr - 1) tw[pos--] = 0;
            if (pos < 0) break;
            ++tw[pos];
        }
    } while (std::next_permutation(p.begin(), p.end()));
    for (size_t i = 0; i < G.elements.size(); ++i) {
        bool id = true;
        for (int j = 0; j < n; ++j)
            if (G.elements[i].perm[j] != j || G.elements[i].twist[j] != 0) { id = false; break; }
        if (id) {
            std::swap(G.elements[0], G.elements[i]);
            break;
        }
    }

    G.gram = Mat<CycScalar>::identity(n);
    G.finish_indexing();

    auto mixed_elem = [&](int i, int j, int k) {
        GroupElement e;
        e.perm.resize(n);
        std::iota(e.perm.begin(), e.perm.end(), 0);
        std::swap(e.perm[i], e.perm[j]);
        e.twist.assign(n, 0);
        e.twist[i] = (uint8_t)k;
        e.twist[j] = (uint8_t)((rr - k) % rr);
        return e;
    };

    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = 0; k < rr; ++k) {
                Hyperplane h;
                h.normal.assign(n, CycScalar());
                h.normal[i] = CycScalar::one();
                h.normal[j] = -CycScalar::root_of_unity(rr, k);
                h.order = 2;
                int idx = G.index_of(mixed_elem(i, j, k));
                h.block = {idx};
                G.reflections.push_back(idx);
                G.hyp_of_refl.push_back((int)G.hyperplanes.size());
                G.hyperplanes.push_back(std::move(h));
            }
    for (size_t i = 0; i < G.reflections.size(); ++i) G.refl_pos_[G.reflections[i]] = (int)i;

    G.generators.push_back(G.index_of(mixed_elem(0, 1, 1)));
    for (int i = 0; i + 1 < n; ++i) G.generators.push_back(G.index_of(mixed_elem(i, i + 1, 0)));
    G.set_coxeter_number();
    G.compute_cond_rows();
    return G;
}

inline ReflectionGroup ReflectionGroup::h3(long cap) {
    ReflectionGroup G;
    G.family = Family::H3;
    G.name = "H3";
    G.r = 1;
    G.rank = 3;
    detail::check_cap(120, cap, G.name);

    // golden ratio = -zeta_5^2 - zeta_5^3
    CycScalar phi = -(CycScalar::root_of_unity(5, 2) + CycScalar::root_of_unity(5, 3));
    Mat<CycScalar> B(3, 3);
    B.at(0, 0) = B.at(1, 1) = B.at(2, 2) = CycScalar(Rational(2));
    B.at(0, 1) = B.at(1, 0) = -phi;
    B.at(1, 2) = B.at(2, 1) = CycScalar(Rational(-1));
    G.gram = B;

    auto pair_with = [&](const std::vector<CycScalar>& v, int i) {
        CycScalar s;  // <v, alpha_i> with real coordinates
        for (int j = 0; j < 3; ++j) s += B.at(j, i) * v[j];
        return s;
    };
    auto reflect = [&](const std::vector<CycScalar>& v, int i) {
        CycScalar c = pair_with(v, i);
        std::vector<CycScalar> w = v;
        w[i] -= c;
        return w;
    };
    auto vec_key = [](const std::vector<CycScalar>& v) {
        return v[0].str() + ";" + v[1].str() + ";" + v[2].str();
    };

    // orbit closure of the simple roots
    std::vector<std::vector<CycScalar>> roots;
    std::map<std::string, int> root_index;
    auto add_root = [&](const std::vector<CycScalar>& v) {
        auto k = vec_key(v);
        auto it = root_index.find(k);
        if (it != root_index.end()) return it->second;
        root_index[k] = (int)roots.size();
        roots.push_back(v);
        return (int)roots.size() - 1;
    };
    for (int i = 0; i < 3; ++i) {
        std::vector<CycScalar> e(3);
        e[i] = CycScalar::one();
        add_root(e);
    }
    for (size_t head = 0; head < roots.size(); ++head) {
        auto v = roots[head];
        for (int i = 0; i < 3; ++i) add_root(reflect(v, i));
    }
    if (roots.size() != 30) throw std::logic_error("H3 root count != 30");

    int nr = 30;
    auto perm_of_matrix = [&](const Mat<CycScalar>& m) {
        std::vector<uint8_t> perm(nr);
        for (int i = 0; i < nr; ++i) {
            std::vector<CycScalar> img(3);
            for (int a = 0; a < 3; ++a)
                for (int b = 0; b < 3; ++b) img[a] += m.at(a, b) * roots[i][b];
            auto it = root_index.find(vec_key(img));
            if (it == root_index.end()) throw std::logic_error("H3: image not a root");
            perm[i] = (uint8_t)it->second;
        }
        return perm;
    };

    std::vector<Mat<CycScalar>> gen_mats;
    for (int i = 0; i < 3; ++i) {
        Mat<CycScalar> m = Mat<CycScalar>::identity(3);
        for (int j = 0; j < 3; ++j) m.at(i, j) -= B.at(j, i);  // s_i(alpha_j) = alpha_j - B_{ji} alpha_i
        gen_mats.push_back(m);
    }

    // BFS over the group, storing root-permutations and matrices in parallel
    std::map<std::vector<uint8_t>, int> seen;
    GroupElement id;
    id.perm.resize(nr);
    std::iota(id.perm.begin(), id.perm.end(), 0);
    G.elements.push_back(id);
    G.h3_reps_.push_back(Mat<CycScalar>::identity(3));
    seen[id.perm] = 0;
    std::vector<std::vector<uint8_t>> gen_perms;
    for (auto& m : gen_mats) gen_perms.push_back(perm_of_matrix(m));
    for (size_t head = 0; head < G.elements.size(); ++head) {
        for (int gi = 0; gi < 3; ++gi) {
            // right-multiply: apply generator first
            std::vector<uint8_t> np(nr);
            for (int i = 0; i < nr; ++i) np[i] = G.elements[head].perm[gen_perms[gi][i]];
            if (seen.count(np)) continue;
            seen[np] = (int)G.elements.size();
            Mat<CycScalar> nm = G.h3_reps_[head] * gen_mats[gi];
            G.elements.push_back({np, {}});
            G.h3_reps_.push_back(std::move(nm));
        }
    }
    if (G.elements.size() != 120) throw std::logic_error("H3 order != 120");
    G.letters = nr;

    // reflections: rank(M - I) == 1; hyperplane normal is the root it negates
    std::map<int, int> neg_of;
    for (int i = 0; i < nr; ++i) {
        std::vector<CycScalar> m(3);
        for (int j = 0; j < 3; ++j) m[j] = -roots[i][j];
        neg_of[i] = root_index.at(vec_key(m));
    }
    for (size_t a = 0; a < G.elements.size(); ++a) {
        Mat<CycScalar> d = G.h3_reps_[a] - Mat<CycScalar>::identity(3);
        if (rank_of(d) != 1) continue;
        int root_idx = -1;
        for (int i = 0; i < nr; ++i)
            if (G.elements[a].perm[i] == neg_of[i]) { root_idx = i; break; }
        if (root_idx < 0) throw std::logic_error("H3 reflection without negated root");
        // phase-fix: first nonzero coordinate positive
        std::vector<CycScalar> nrm = roots[root_idx];
        for (int j = 0; j < 3; ++j) {
            if (nrm[j].is_zero()) continue;
            if (nrm[j].to_complex().real() < 0)
                for (auto& c : nrm) c = -c;
            break;
        }
        bool dup = false;
        for (auto& h : G.hyperplanes)
            if (h.normal == nrm) { dup = true; break; }
        if (dup) continue;
        Hyperplane h;
        h.normal = nrm;
        h.order = 2;
        h.block = {(int)a};
        G.reflections.push_back((int)a);
        G.hyp_of_refl.push_back((int)G.hyperplanes.size());
        G.hyperplanes.push_back(std::move(h));
    }
    if (G.reflections.size() != 15) throw std::logic_error("H3 reflection count != 15");

    G.finish_indexing();
    for (int i = 0; i < 3; ++i) {
        GroupElement e;
        e.perm = gen_perms[i];
        G.generators.push_back(G.index_of(e));
    }
    G.set_coxeter_number();
    G.compute_cond_rows();
    return G;
}

inline ReflectionGroup ReflectionGroup::parse(const std::string& s, long cap) {
    auto bad = [&]() -> ReflectionGroup {
        throw std::invalid_argument("unsupported group descriptor: " + s);
    };
    if (s.empty()) return bad();
    if (s == "H3" || s == "h3") return h3(cap);
    char c = (char)std::toupper(s[0]);
    if ((c == 'A' || c == 'S' || c == 'B' || c == 'D') && s.size() > 1 &&
        std::isdigit((unsigned char)s[1])) {
        int k = std::atoi(s.c_str() + 1);
        if (c == 'A') return symmetric(k + 1, cap);
        if (c == 'S') return symmetric(k, cap);  // Sym(k) alias
        if (c == 'B') return g_r1n(2, k, cap);
        return g_rrn(2, k, cap);
    }
    if (s.rfind("I2(", 0) == 0 && s.back() == ')') {
        int m = std::atoi(s.c_str() + 3);
        if (m < 3) return bad();
        return g_rrn(m, 2, cap);
    }
    if (s.rfind("G(", 0) == 0 && s.back() == ')') {
        int a = 0, b = 0, n = 0;
        if (std::sscanf(s.c_str(), "G(%d,%d,%d)", &a, &b, &n) != 3) return bad();
        if (b == 1) return g_r1n(a, n, cap);
        if (b == a) {
            if (n == 2 && a >= 3) return g_rrn(a, 2, cap);
            if (n >= 3) return g_rrn(a, n, cap);
        }
        return bad();
    }
    return bad();
}

// --- Coxeter elements and regularity --------------------------------------

// True iff w has an e^{2 pi i k / h}-eigenvector avoiding every reflecting
// hyperplane. Floating point candidates, then the certificate checks all
// hyperplane pairings stay away from zero (tolerance 1e-8).
inline bool is_regular_element(const ReflectionGroup& G, int w, int k) {
    Eigen::MatrixXcd m = G.rep_complex(w);
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(m);
    std::complex<double> target = std::polar(1.0, 2.0 * 3.14159265358979323846 * (double)k /
                                                      (double)G.coxeter_number);
    // precompute float condition rows, scaled to unit norm
    std::vector<std::vector<std::complex<double>>> rows;
    for (auto& h : G.hyperplanes) {
        std::vector<std::complex<double>> row(G.rank);
        double norm = 0;
        for (int i = 0; i < G.rank; ++i) {
            row[i] = h.cond_row[i].to_complex();
            norm += std::norm(row[i]);
        }
        norm = std::sqrt(norm);
        for (auto& v : row) v /= norm;
        rows.push_back(std::move(row));
    }
    auto certify = [&](const Eigen::VectorXcd& v) {
        for (auto& row : rows) {
            std::complex<double> s(0, 0);
            for (int i = 0; i < G.rank; ++i) s += row[i] * v(i);
            if (std::abs(s) <= 1e-8) return false;
        }
        return true;
    };
    std::vector<int> hits;
    for (int i = 0; i < G.rank; ++i)
        if (std::abs(es.eigenvalues()(i) - target) < 1e-6) hits.push_back(i);
    if (hits.empty()) return false;
    for (int i : hits) {
        Eigen::VectorXcd v = es.eigenvectors().col(i).normalized();
        if (certify(v)) return true;
    }
    // multiplicity > 1: try generic combinations of the eigenspace
    if (hits.size() > 1) {
        std::mt19937 rng(12345);
        std::uniform_real_distribution<double> u(-1.0, 1.0);
        for (int t = 0; t < 50; ++t) {
            Eigen::VectorXcd v = Eigen::VectorXcd::Zero(G.rank);
            for (int i : hits)
                v += std::complex<double>(u(rng), u(rng)) * es.eigenvectors().col(i);
            v.normalize();
            if (certify(v)) return true;
        }
    }
    return false;
}

// Conjugacy class of the product of the standard generators in listed order.
inline CoxeterClass coxeter_class(const ReflectionGroup& G) {
    int c = G.generators.at(0);
    for (size_t i = 1; i < G.generators.size(); ++i) c = G.mult(c, G.generators[i]);
    if (G.element_order(c) != G.coxeter_number)
        throw std::logic_error("coxeter_class: generator product has wrong order in " + G.name);
    if (!is_regular_element(G, c, 1))
        throw std::logic_error("coxeter_class: regularity certificate failed in " + G.name);
    CoxeterClass cc;
    cc.representative = c;
    cc.members = G.conjugacy_class(c);
    if ((long)cc.members.size() * G.coxeter_number != G.order())
        throw std::logic_error("coxeter_class: |C| != |W|/h in " + G.name);
    return cc;
}

}  // namespace coxlab
