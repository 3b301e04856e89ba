#pragma once

#include "coxlab/convolution.hpp"
#include "coxlab/laplacian.hpp"

namespace coxlab {

// Flat of a hyperplane arrangement, keyed by its closed hyperplane set.
struct Flat {
    std::vector<int> hyperplane_set;                 // sorted, closed
    std::vector<std::vector<CycScalar>> basis;       // exact basis of the subspace
    int codim = 0;
    // group decorations (filled when the arrangement comes from a group)
    std::vector<int> refl_positions;                 // parabolic reflection set
    std::vector<Component> components;
};

struct IntersectionLattice {
    std::vector<Flat> flats;  // ordered by codimension, V first

    const Flat& full_space() const { return flats.front(); }
};

namespace detail {

inline std::vector<std::vector<CycScalar>> subspace_of_hyperplanes(const Arrangement& A,
                                                                   const std::vector<int>& hyps) {
    if (hyps.empty()) {
        std::vector<std::vector<CycScalar>> basis;
        for (int i = 0; i < A.dim; ++i) {
            std::vector<CycScalar> e(A.dim);
            e[i] = CycScalar::one();
            basis.push_back(e);
        }
        return basis;
    }
    Mat<CycScalar> rows((int)hyps.size(), A.dim);
    for (size_t i = 0; i < hyps.size(); ++i) {
        auto row = pairing_row(A.gram, A.normals[hyps[i]].v);
        for (int j = 0; j < A.dim; ++j) rows.at((int)i, j) = row[j];
    }
    return nullspace(rows);
}

inline std::vector<int> closed_set_of_subspace(const Arrangement& A,
                                               const std::vector<std::vector<CycScalar>>& basis) {
    std::vector<int> out;
    for (size_t h = 0; h < A.normals.size(); ++h) {
        bool contains = true;
        for (const auto& v : basis) {
            if (!A.pairing_with_normal(v, (int)h).is_zero()) {
                contains = false;
                break;
            }
        }
        if (contains) out.push_back((int)h);
    }
    return out;
}

}  // namespace detail

// Complete intersection lattice by BFS over closures of one-hyperplane
// extensions, memoized by the closed hyperplane set.
inline IntersectionLattice enumerate_flats(const Arrangement& A,
                                           const ReflectionGroup* G = nullptr) {
    if ((int)A.normals.size() > 30)
        throw BudgetExceeded("enumerate_flats: capped at 30 hyperplanes");
    std::map<std::vector<int>, Flat> seen;
    auto make_flat = [&](const std::vector<std::vector<CycScalar>>& basis) {
        Flat f;
        f.basis = basis;
        f.hyperplane_set = detail::closed_set_of_subspace(A, basis);
        f.codim = A.dim - (int)basis.size();
        return f;
    };
    Flat top = make_flat(detail::subspace_of_hyperplanes(A, {}));
    std::vector<std::vector<int>> frontier{top.hyperplane_set};
    seen[top.hyperplane_set] = top;
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& key : frontier) {
            const Flat cur = seen.at(key);
            for (int h = 0; h < (int)A.normals.size(); ++h) {
                if (std::binary_search(cur.hyperplane_set.begin(), cur.hyperplane_set.end(), h))
                    continue;
                std::vector<int> gen = cur.hyperplane_set;
                gen.push_back(h);
                auto basis = detail::subspace_of_hyperplanes(A, gen);
                Flat f = make_flat(basis);
                if (!seen.count(f.hyperplane_set)) {
                    next.push_back(f.hyperplane_set);
                    seen[f.hyperplane_set] = std::move(f);
                }
            }
        }
        frontier = std::move(next);
    }
    IntersectionLattice lat;
    for (auto& [key, f] : seen) lat.flats.push_back(std::move(f));
    std::sort(lat.flats.begin(), lat.flats.end(),
              [](const Flat& a, const Flat& b) {
                  if (a.codim != b.codim) return a.codim < b.codim;
                  return a.hyperplane_set < b.hyperplane_set;
              });
    if (G) {
        for (auto& f : lat.flats) {
            for (int p = 0; p < G->num_reflections(); ++p)
                if (std::binary_search(f.hyperplane_set.begin(), f.hyperplane_set.end(),
                                       G->hyp_of_refl[p]))
                    f.refl_positions.push_back(p);
            if (!f.refl_positions.empty()) f.components = components_of(*G, f.refl_positions);
            int rank_sum = 0;
            for (const auto& c : f.components) rank_sum += c.rank;
            if (rank_sum != f.codim)
                throw std::logic_error("flat: component ranks do not add up to the codim");
        }
    }
    return lat;
}

// closure of an arbitrary hyperplane subset (used by property tests)
inline std::vector<int> flat_closure(const Arrangement& A, const std::vector<int>& hyps) {
    return detail::closed_set_of_subspace(A, detail::subspace_of_hyperplanes(A, hyps));
}

// multiset {h_i(W_X)}: component Coxeter numbers with rank multiplicity
inline std::vector<int> multiset_coxeter_numbers(const Flat& f) {
    std::vector<int> out;
    for (const auto& c : f.components)
        for (int i = 0; i < c.rank; ++i) out.push_back(c.coxeter_number);
    std::sort(out.begin(), out.end());
    return out;
}

// localized arrangement Laplacian: only the hyperplanes through the flat
inline Mat<PolyW> localized_laplacian_formal(const Arrangement& A, const Flat& f) {
    Arrangement sub = A;
    sub.normals.clear();
    sub.weight_var.clear();
    for (int h : f.hyperplane_set) {
        sub.normals.push_back(A.normals[h]);
        sub.weight_var.push_back(A.weight_var[h]);
    }
    return arr_laplacian_formal(sub);
}

// Laplacian recursion: det(x + L_A) = sum_X pdet(L_{A_X}) x^{dim X}
inline CheckReport verify_laplacian_recursion(const Arrangement& A,
                                              const IntersectionLattice& lat) {
    auto cp = char_poly(arr_laplacian_formal(A));
    std::vector<PolyW> rhs(A.dim + 1);
    for (const auto& f : lat.flats) {
        auto lcp = char_poly(localized_laplacian_formal(A, f));
        // pdet = lowest nonzero coefficient, which sits at x^{dim X}
        int dim_x = A.dim - f.codim;
        for (int k = 0; k < dim_x; ++k)
            if (!lcp[k].is_zero())
                return CheckReport::fail("localized Laplacian has unexpected low-order terms");
        rhs[dim_x] += lcp[dim_x];
    }
    for (int k = 0; k <= A.dim; ++k) {
        if (cp[k] != rhs[k])
            return CheckReport::fail("Laplacian recursion fails at x^" + std::to_string(k),
                                     {{"lhs", cp[k].str()}, {"rhs", rhs[k].str()}});
    }
    return CheckReport::pass();
}

// --- parabolic Coxeter classes and the Matrix-Forest theorem ----------------

// regularity within a parabolic: the eigenvector must avoid the component's
// hyperplanes only
inline bool is_regular_in_component(const ReflectionGroup& G, int w, int order,
                                    const std::vector<int>& hyps) {
    Eigen::MatrixXcd m = G.rep_complex(w);
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(m);
    std::complex<double> target = std::polar(1.0, 2.0 * 3.14159265358979323846 / (double)order);
    for (int i = 0; i < G.rank; ++i) {
        if (std::abs(es.eigenvalues()(i) - target) > 1e-6) continue;
        Eigen::VectorXcd v = es.eigenvectors().col(i).normalized();
        bool ok = true;
        for (int h : hyps) {
            std::complex<double> s(0, 0);
            double norm = 0;
            for (int a = 0; a < G.rank; ++a) {
                auto rc = G.hyperplanes[h].cond_row[a].to_complex();
                s += rc * v(a);
                norm += std::norm(rc);
            }
            if (std::abs(s) <= 1e-8 * std::sqrt(norm)) { ok = false; break; }
        }
        if (ok) return true;
    }
    return false;
}

// Coxeter class of an irreducible parabolic component: elements of order h
// with a regular e^{2 pi i/h}-eigenvector, closed under component conjugation.
inline std::vector<int> component_coxeter_class(const ReflectionGroup& G, const Component& comp) {
    std::vector<int> gens;
    for (int p : comp.refl_positions) gens.push_back(G.reflections[p]);
    std::vector<int> subgroup = G.generated_subgroup(gens);
    int h = comp.coxeter_number;
    int c0 = -1;
    for (int g : subgroup) {
        if (g == 0) continue;
        if (G.element_order(g) != h) continue;
        if (is_regular_in_component(G, g, h, comp.hyps)) { c0 = g; break; }
    }
    if (c0 < 0) throw std::logic_error("component has no Coxeter element");
    // class closure within the component subgroup
    std::vector<int> cls{c0};
    std::set<int> seen{c0};
    for (size_t head = 0; head < cls.size(); ++head) {
        for (int g : gens) {
            int c = G.mult(G.mult(g, cls[head]), G.inv(g));
            if (seen.insert(c).second) cls.push_back(c);
        }
    }
    if (cls.size() * (size_t)h != subgroup.size())
        throw std::logic_error("component Coxeter class has wrong size");
    std::sort(cls.begin(), cls.end());
    return cls;
}

// Weighted reduced-factorization count of the component's Coxeter class by
// the component's reflections, with the ambient weight system restricted.
inline PolyW component_reduced_count(const ReflectionGroup& G, const Component& comp,
                                     const WeightSystem& w) {
    std::vector<int> gens;
    for (int p : comp.refl_positions) gens.push_back(G.reflections[p]);
    std::vector<int> subgroup = G.generated_subgroup(gens);
    std::map<int, int> idx;
    for (size_t i = 0; i < subgroup.size(); ++i) idx[subgroup[i]] = (int)i;
    std::vector<int> cls = component_coxeter_class(G, comp);
    std::vector<PolyW> state(subgroup.size());
    state[idx.at(0)] = PolyW(1);
    for (int step = 0; step < comp.rank; ++step) {
        std::vector<PolyW> next(subgroup.size());
        for (size_t g = 0; g < subgroup.size(); ++g) {
            if (state[g].is_zero()) continue;
            for (int p : comp.refl_positions) {
                int tgt = idx.at(G.mult(subgroup[g], G.reflections[p]));
                next[tgt] += state[g] * w.weight_poly(p);
            }
        }
        state = std::move(next);
    }
    PolyW out;
    for (int c : cls) out += state[idx.at(c)];
    return out;
}

// W Matrix-Forest theorem: det(x + L_W^T(w)) expanded over flats, each flat
// contributing |C_{W_X}(c_X)| * (reduced factorizations of W_X) / (n-k)!.
inline CheckReport verify_matrix_forest(const ReflectionGroup& G, const ParabolicTower& T) {
    WeightSystem w = tower_weight_system(T);
    auto lhs = char_poly(w_laplacian_formal(G, w));
    Arrangement A = arr_from_group(G, w);
    auto lat = enumerate_flats(A, &G);
    std::vector<PolyW> rhs(G.rank + 1);
    for (const auto& f : lat.flats) {
        int k = G.rank - f.codim;  // dim X
        PolyW contrib(1);
        long long centralizer = 1;
        mpz_class shuffles = factorial_z(f.codim);
        for (const auto& comp : f.components) {
            contrib *= component_reduced_count(G, comp, w);
            centralizer *= comp.coxeter_number;
            shuffles /= factorial_z(comp.rank);
        }
        contrib = contrib.scaled(Rational(shuffles) * Rational(centralizer) /
                                 Rational(factorial_z(f.codim)));
        rhs[k] += contrib;
    }
    for (int k = 0; k <= G.rank; ++k)
        if (lhs[k] != rhs[k])
            return CheckReport::fail("matrix-forest fails for " + G.name + " at x^" +
                                         std::to_string(k),
                                     {{"lhs", lhs[k].str()}, {"rhs", rhs[k].str()}});
    return CheckReport::pass();
}

// Coxeter-number identity (h+x)^n = sum_X prod h_i(W_X) x^{dim X}
inline CheckReport verify_coxeter_identity(const ReflectionGroup& G) {
    WeightSystem w = unweighted(G);
    Arrangement A = arr_from_group(G, w);
    auto lat = enumerate_flats(A, &G);
    std::vector<mpz_class> rhs(G.rank + 1);
    for (const auto& f : lat.flats) {
        mpz_class prod = 1;
        for (int h : multiset_coxeter_numbers(f)) prod *= h;
        rhs[G.rank - f.codim] += prod;
    }
    for (int k = 0; k <= G.rank; ++k) {
        mpz_class expect = binomial_z(G.rank, k);
        mpz_class hp;
        mpz_ui_pow_ui(hp.get_mpz_t(), (unsigned long)G.coxeter_number,
                      (unsigned long)(G.rank - k));
        expect *= hp;
        if (rhs[k] != expect)
            return CheckReport::fail("Coxeter-number identity fails for " + G.name + " at x^" +
                                         std::to_string(k),
                                     {{"lhs", expect.get_str()}, {"rhs", rhs[k].get_str()}});
    }
    return CheckReport::pass();
}

// integer nonzero-eigenvalue multiset of the unweighted localized Laplacian,
// asserted to match the component Coxeter numbers
inline CheckReport verify_flat_spectrum(const Arrangement& A, const Flat& f) {
    Mat<PolyW> Lp = localized_laplacian_formal(A, f);
    Mat<CycScalar> L(Lp.rows, Lp.cols);
    std::vector<CycScalar> ones(A.nvars, CycScalar::one());
    for (int i = 0; i < Lp.rows; ++i)
        for (int j = 0; j < Lp.cols; ++j) L.at(i, j) = Lp.at(i, j).eval(ones);
    auto cp = charpoly_xI_plus(-L);  // det(xI - L)
    // strip the kernel: lowest dim(X) coefficients must vanish
    int dim_x = A.dim - f.codim;
    std::vector<CycScalar> reduced(cp.begin() + dim_x, cp.end());
    auto roots = detail::integer_roots(reduced, 0, 1000);
    if (!roots) return CheckReport::fail("localized Laplacian spectrum is not integral");
    std::vector<int> got;
    for (auto [val, mult] : *roots)
        for (int i = 0; i < mult; ++i)
            if (val != 0) got.push_back((int)val);
    std::sort(got.begin(), got.end());
    if (got != multiset_coxeter_numbers(f))
        return CheckReport::fail("flat spectrum disagrees with component Coxeter numbers");
    return CheckReport::pass();
}

}  // namespace coxlab
