#pragma once

#include <optional>
#include <set>

#include "coxlab/group.hpp"
#include "coxlab/linear_form.hpp"
#include "coxlab/poly.hpp"

namespace coxlab {

// Irreducible factor of a parabolic subgroup, carried as index sets.
struct Component {
    std::vector<int> refl_positions;  // positions into G.reflections
    std::vector<int> hyps;            // hyperplane indices
    int rank = 0;
    int coxeter_number = 0;           // (|R| + |R*|) / rank, always on the component
};

// common fixed space of a set of elements, as basis columns
inline std::vector<std::vector<CycScalar>> fixed_space(const ReflectionGroup& G,
                                                       const std::vector<int>& elems) {
    if (elems.empty()) {
        std::vector<std::vector<CycScalar>> basis;
        for (int i = 0; i < G.rank; ++i) {
            std::vector<CycScalar> e(G.rank);
            e[i] = CycScalar::one();
            basis.push_back(e);
        }
        return basis;
    }
    Mat<CycScalar> stacked((int)elems.size() * G.rank, G.rank);
    for (size_t k = 0; k < elems.size(); ++k) {
        Mat<CycScalar> d = G.rep(elems[k]) - Mat<CycScalar>::identity(G.rank);
        for (int i = 0; i < G.rank; ++i)
            for (int j = 0; j < G.rank; ++j) stacked.at((int)k * G.rank + i, j) = d.at(i, j);
    }
    return nullspace(stacked);
}

// all reflections whose hyperplane contains every basis vector (Steinberg closure)
inline std::vector<int> closure_positions(const ReflectionGroup& G,
                                          const std::vector<std::vector<CycScalar>>& basis) {
    std::vector<int> out;
    for (int p = 0; p < G.num_reflections(); ++p) {
        int h = G.hyp_of_refl[p];
        bool contains = true;
        for (const auto& v : basis) {
            if (!G.hyperplane_pairing(v, h).is_zero()) {
                contains = false;
                break;
            }
        }
        if (contains) out.push_back(p);
    }
    return out;
}

inline std::vector<Component> components_of(const ReflectionGroup& G,
                                            const std::vector<int>& refl_positions) {
    std::set<int> hypset;
    for (int p : refl_positions) hypset.insert(G.hyp_of_refl[p]);
    std::vector<int> hyps(hypset.begin(), hypset.end());
    int m = (int)hyps.size();
    std::vector<int> parent(m);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b) {
            // root lines orthogonal iff the pairing vanishes
            if (!G.hyperplane_pairing(G.hyperplanes[hyps[a]].normal, hyps[b]).is_zero())
                parent[find(a)] = find(b);
        }
    std::map<int, Component> comps;
    for (int a = 0; a < m; ++a) comps[find(a)].hyps.push_back(hyps[a]);
    for (int p : refl_positions) {
        int h = G.hyp_of_refl[p];
        for (int a = 0; a < m; ++a)
            if (hyps[a] == h) {
                comps[find(a)].refl_positions.push_back(p);
                break;
            }
    }
    std::vector<Component> out;
    for (auto& [root, c] : comps) {
        Mat<CycScalar> normals((int)c.hyps.size(), G.rank);
        for (size_t i = 0; i < c.hyps.size(); ++i)
            for (int j = 0; j < G.rank; ++j)
                normals.at((int)i, j) = G.hyperplanes[c.hyps[i]].normal[j];
        c.rank = rank_of(normals);
        long total = (long)c.refl_positions.size() + (long)c.hyps.size();
        if (c.rank == 0 || total % c.rank != 0)
            throw std::logic_error("component Coxeter number (|R|+|R*|)/rank is not an integer");
        c.coxeter_number = (int)(total / c.rank);
        out.push_back(std::move(c));
    }
    return out;
}

// Maximal chain of parabolic subgroups, stored as the reflection sets of
// each level together with the level flats. Non-maximal input chains are
// refined to maximal ones; var_of_level remembers which original weight
// each refined step carries.
struct ParabolicTower {
    const ReflectionGroup* G = nullptr;
    std::vector<std::vector<int>> levels;                     // size rank+1, level 0 empty
    std::vector<std::vector<std::vector<CycScalar>>> flats;   // flat basis per level
    std::vector<int> var_of_level;                            // size rank+1, entry 0 unused
    int nvars = 0;

    std::vector<int> block(int level) const {
        std::vector<int> out;
        const auto& prev = levels[level - 1];
        for (int p : levels[level])
            if (std::find(prev.begin(), prev.end(), p) == prev.end()) out.push_back(p);
        return out;
    }

    // block of reflection positions carrying weight variable v
    std::vector<int> var_block(int v) const {
        std::vector<int> out;
        for (size_t i = 1; i < levels.size(); ++i) {
            if (var_of_level[i] != v) continue;
            auto b = block((int)i);
            out.insert(out.end(), b.begin(), b.end());
        }
        return out;
    }
};

inline ParabolicTower standard_tower(const ReflectionGroup& G, const std::vector<int>& ordering) {
    if ((int)ordering.size() != (int)G.generators.size())
        throw std::invalid_argument("standard_tower: ordering must permute all generators");
    ParabolicTower T;
    T.G = &G;
    T.nvars = G.rank;
    T.levels.resize(G.rank + 1);
    T.flats.resize(G.rank + 1);
    T.var_of_level.resize(G.rank + 1, 0);
    T.flats[0] = fixed_space(G, {});
    std::vector<int> gens;
    for (int i = 1; i <= G.rank; ++i) {
        gens.push_back(G.generators.at(ordering[i - 1]));
        auto flat = fixed_space(G, gens);
        if ((int)flat.size() != G.rank - i)
            throw std::logic_error("standard_tower: generator prefix has wrong fixed-space codim");
        T.levels[i] = closure_positions(G, flat);
        T.flats[i] = std::move(flat);
        T.var_of_level[i] = i - 1;
    }
    if ((int)T.levels[G.rank].size() != G.num_reflections())
        throw std::logic_error("standard_tower: top level is not the full group");
    return T;
}

inline ParabolicTower identity_standard_tower(const ReflectionGroup& G) {
    std::vector<int> ordering(G.generators.size());
    std::iota(ordering.begin(), ordering.end(), 0);
    return standard_tower(G, ordering);
}

// Build a tower from explicit reflection-position sets per level (the chain
// need not be maximal; each set must be parabolically closed).
inline ParabolicTower tower_from_levels(const ReflectionGroup& G,
                                        const std::vector<std::vector<int>>& chain) {
    ParabolicTower T;
    T.G = &G;
    T.levels.assign(1, {});
    T.flats.assign(1, fixed_space(G, {}));
    T.var_of_level.assign(1, 0);
    T.nvars = (int)chain.size();
    int codim = 0;
    std::set<int> cur_set;
    for (size_t step = 0; step < chain.size(); ++step) {
        std::vector<int> want = chain[step];
        std::sort(want.begin(), want.end());
        // verify the target is closed
        std::vector<int> want_elems;
        for (int p : want) want_elems.push_back(G.reflections[p]);
        auto target_flat = fixed_space(G, want_elems);
        auto closed = closure_positions(G, target_flat);
        if (closed != want)
            throw std::invalid_argument("tower_from_levels: level is not parabolically closed");
        int target_codim = G.rank - (int)target_flat.size();
        for (int p : T.levels.back())
            if (!std::binary_search(want.begin(), want.end(), p))
                throw std::invalid_argument("tower_from_levels: chain not nested");
        // refine: add one hyperplane at a time until reaching the target flat
        while (codim < target_codim) {
            int add = -1;
            for (int p : want)
                if (!cur_set.count(p)) { add = G.hyp_of_refl[p]; break; }
            std::vector<int> elems;
            for (int p : T.levels.back()) elems.push_back(G.reflections[p]);
            elems.push_back(G.hyperplanes[add].block[0]);
            auto flat = fixed_space(G, elems);
            auto lvl = closure_positions(G, flat);
            // keep the refinement inside the target parabolic
            std::vector<int> clipped;
            for (int p : lvl)
                if (std::binary_search(want.begin(), want.end(), p)) clipped.push_back(p);
            if (clipped != lvl) {
                // the closure escaped the target; intersect flats instead
                throw std::logic_error("tower_from_levels: refinement left the target parabolic");
            }
            codim = G.rank - (int)flat.size();
            T.levels.push_back(lvl);
            T.flats.push_back(std::move(flat));
            T.var_of_level.push_back((int)step);
            cur_set = std::set<int>(lvl.begin(), lvl.end());
        }
    }
    if ((int)T.levels.back().size() != G.num_reflections() || codim != G.rank)
        throw std::invalid_argument("tower_from_levels: chain must end at the full group");
    return T;
}

inline ParabolicTower conjugate_tower(const ParabolicTower& T, int g) {
    const ReflectionGroup& G = *T.G;
    int gi = G.inv(g);
    std::vector<std::vector<int>> chain;
    for (size_t i = 1; i < T.levels.size(); ++i) {
        std::vector<int> lvl;
        for (int p : T.levels[i]) {
            int e = G.mult(G.mult(g, G.reflections[p]), gi);
            int q = G.refl_position(e);
            if (q < 0) throw std::logic_error("conjugate of a reflection is not a reflection");
            lvl.push_back(q);
        }
        std::sort(lvl.begin(), lvl.end());
        chain.push_back(std::move(lvl));
    }
    // conjugated maximal chain: remap each refined level back to its variable
    ParabolicTower out = tower_from_levels(G, chain);
    out.var_of_level = T.var_of_level;
    out.nvars = T.nvars;
    return out;
}

// --- weight systems --------------------------------------------------------

struct WeightSystem {
    int nvars = 0;
    std::vector<int> var_of;                        // reflection position -> variable
    std::optional<std::vector<Rational>> values;    // numeric mode

    bool numeric() const { return values.has_value(); }

    PolyW weight_poly(int pos) const { return PolyW::variable(var_of.at(pos)); }
    Rational weight_value(int pos) const { return values->at(var_of.at(pos)); }

    // sum of all reflection weights as a linear form in the variables
    LinearForm total() const {
        std::vector<long long> a(nvars, 0);
        for (int v : var_of) a[v] += 1;
        return LinearForm(a);
    }

    WeightSystem specialized(const std::vector<Rational>& vals) const {
        WeightSystem w = *this;
        w.values = vals;
        return w;
    }
};

inline WeightSystem tower_weight_system(const ParabolicTower& T) {
    const ReflectionGroup& G = *T.G;
    WeightSystem w;
    w.nvars = T.nvars;
    w.var_of.assign(G.num_reflections(), -1);
    for (size_t i = 1; i < T.levels.size(); ++i)
        for (int p : T.block((int)i)) w.var_of[p] = T.var_of_level[i];
    for (int v : w.var_of)
        if (v < 0) throw std::logic_error("tower weight system does not cover all reflections");
    return w;
}

inline WeightSystem per_reflection_weights(const ReflectionGroup& G) {
    WeightSystem w;
    w.nvars = G.num_reflections();
    w.var_of.resize(G.num_reflections());
    std::iota(w.var_of.begin(), w.var_of.end(), 0);
    return w;
}

inline WeightSystem per_hyperplane_weights(const ReflectionGroup& G) {
    WeightSystem w;
    w.nvars = G.num_hyperplanes();
    w.var_of.resize(G.num_reflections());
    for (int p = 0; p < G.num_reflections(); ++p) w.var_of[p] = G.hyp_of_refl[p];
    return w;
}

inline WeightSystem unweighted(const ReflectionGroup& G) {
    WeightSystem w;
    w.nvars = 1;
    w.var_of.assign(G.num_reflections(), 0);
    w.values = std::vector<Rational>{Rational(1)};
    return w;
}

// --- the combinatorial spectrum algorithm ----------------------------------

struct HMatrix {
    int n = 0;
    std::vector<std::vector<long long>> h;  // h[j][i], upper triangular, entries >= 0
};

// Fill the matrix whose row j tracks the Coxeter numbers of the component
// created at step j as it grows along the tower: entry (j,i) is
// h(G_j^i) - h(G_j^{i-1}), so partial row sums give the Coxeter number of
// the active component.
inline HMatrix h_matrix(const ReflectionGroup& G, const ParabolicTower& T) {
    int n = (int)T.levels.size() - 1;
    std::vector<std::vector<Component>> per_level(n + 1);
    for (int i = 1; i <= n; ++i) per_level[i] = components_of(G, T.levels[i]);

    // representative reflection of the new component at each step
    std::vector<int> rep_refl(n + 1, -1);
    for (int j = 1; j <= n; ++j) {
        std::set<int> prev(T.levels[j - 1].begin(), T.levels[j - 1].end());
        int found = -1;
        for (const auto& c : per_level[j]) {
            bool contained = true;
            for (int p : c.refl_positions)
                if (!prev.count(p)) { contained = false; break; }
            if (!contained) {
                if (found >= 0)
                    throw std::logic_error("h_matrix: more than one new component at a step");
                found = c.refl_positions.front();
                // pick a representative that is new at this step when possible
                for (int p : c.refl_positions)
                    if (!prev.count(p)) { found = p; break; }
            }
        }
        if (found < 0) throw std::logic_error("h_matrix: no new component at a step");
        rep_refl[j] = found;
    }

    HMatrix H;
    H.n = n;
    H.h.assign(n, std::vector<long long>(n, 0));
    for (int j = 1; j <= n; ++j) {
        long long prev_h = 0;
        for (int i = j; i <= n; ++i) {
            long long cur = 0;
            for (const auto& c : per_level[i]) {
                if (std::find(c.refl_positions.begin(), c.refl_positions.end(), rep_refl[j]) !=
                    c.refl_positions.end()) {
                    cur = c.coxeter_number;
                    break;
                }
            }
            if (cur == 0) throw std::logic_error("h_matrix: lost track of a component");
            long long d = cur - prev_h;
            if (d < 0) throw std::logic_error("h_matrix: negative increment");
            H.h[j - 1][i - 1] = d;
            prev_h = cur;
        }
    }
    return H;
}

// Row reads of the H matrix, mapped onto the tower's weight variables.
inline std::vector<LinearForm> tower_spectrum(const ReflectionGroup& G, const ParabolicTower& T) {
    HMatrix H = h_matrix(G, T);
    std::vector<LinearForm> out;
    for (int j = 0; j < H.n; ++j) {
        std::vector<long long> a(T.nvars, 0);
        for (int i = j; i < H.n; ++i) a[T.var_of_level[i + 1]] += H.h[j][i];
        out.push_back(LinearForm(a));
    }
    return out;
}

// --- generalized Jucys-Murphy elements --------------------------------------

inline Mat<CycScalar> jm_matrix_reflection_rep(const ReflectionGroup& G,
                                               const std::vector<int>& block) {
    Mat<CycScalar> m(G.rank, G.rank);
    for (int p : block) m = m + G.rep(G.reflections[p]);
    return m;
}

// left-multiplication matrix of the block sum on the group algebra
inline std::vector<std::vector<long long>> jm_matrix_regular_rep(const ReflectionGroup& G,
                                                                 const std::vector<int>& block) {
    int N = (int)G.order();
    std::vector<std::vector<long long>> m(N, std::vector<long long>(N, 0));
    for (int p : block) {
        int t = G.reflections[p];
        for (int g = 0; g < N; ++g) m[G.mult(t, g)][g] += 1;
    }
    return m;
}

struct JMBlockReport {
    int var = 0;
    long long lower_bound = 0, upper_bound = 0;  // [-|R*_i \ R*_{i-1}|, |R_i \ R_{i-1}|]
    std::vector<std::pair<long long, int>> spectrum;  // (eigenvalue, multiplicity)
    bool integral = false;
    bool within_bounds = false;
};

struct JMReport {
    std::vector<JMBlockReport> blocks;
    bool ok = true;
};

namespace detail {

// integer roots with multiplicity of a monic charpoly det(xI - M) given by
// coefficients (ascending); returns nullopt if it does not split over Z
inline std::optional<std::vector<std::pair<long long, int>>> integer_roots(
    std::vector<CycScalar> coeffs, long long lo, long long hi) {
    int deg = (int)coeffs.size() - 1;
    std::vector<Rational> p(deg + 1);
    for (int i = 0; i <= deg; ++i) {
        if (!coeffs[i].is_rational()) return std::nullopt;
        p[i] = coeffs[i].as_rational();
    }
    std::vector<std::pair<long long, int>> roots;
    int remaining = deg;
    for (long long k = lo; k <= hi; ++k) {
        int mult = 0;
        while (remaining > 0) {
            // evaluate p at k; if zero, deflate
            Rational val(0);
            Rational kk(1);
            for (int i = 0; i <= remaining; ++i) {
                val += p[i] * kk;
                kk *= Rational(k);
            }
            if (!val.is_zero()) break;
            std::vector<Rational> q(remaining);
            Rational carry(0);
            for (int i = remaining; i >= 1; --i) {
                carry = p[i] + carry * Rational(k);
                q[i - 1] = carry;
            }
            p = q;
            p.resize(remaining);
            --remaining;
            ++mult;
        }
        if (mult > 0) roots.push_back({k, mult});
    }
    if (remaining != 0) return std::nullopt;
    return roots;
}

}  // namespace detail

enum class JMRep { Reflection, Regular };

inline JMReport jm_spectrum_check(const ReflectionGroup& G, const ParabolicTower& T, JMRep rep) {
    if (rep == JMRep::Regular && G.order() > 400)
        throw BudgetExceeded("jm_spectrum_check: regular representation capped at |W| <= 400");
    JMReport report;
    WeightSystem w = tower_weight_system(T);
    for (int v = 0; v < T.nvars; ++v) {
        std::vector<int> block = T.var_block(v);
        if (block.empty()) continue;
        JMBlockReport br;
        br.var = v;
        std::set<int> hyps_new, hyps_old;
        for (int p : block) hyps_new.insert(G.hyp_of_refl[p]);
        br.upper_bound = (long long)block.size();
        br.lower_bound = -(long long)hyps_new.size();
        if (rep == JMRep::Reflection) {
            Mat<CycScalar> m = jm_matrix_reflection_rep(G, block);
            auto coeffs = charpoly_xI_plus(-m);  // det(xI - m)
            auto roots = detail::integer_roots(coeffs, br.lower_bound, br.upper_bound);
            if (!roots) {
                // retry over the widest possible range before declaring failure
                roots = detail::integer_roots(coeffs, -(long long)G.num_hyperplanes(),
                                              (long long)G.num_reflections());
                br.integral = roots.has_value();
                br.within_bounds = false;
                if (roots) br.spectrum = *roots;
            } else {
                br.integral = true;
                br.within_bounds = true;
                br.spectrum = *roots;
            }
        } else {
            auto m = jm_matrix_regular_rep(G, block);
            int N = (int)m.size();
            int total = 0;
            for (long long k = br.lower_bound; k <= br.upper_bound; ++k) {
                Mat<CycScalar> shifted(N, N);
                for (int i = 0; i < N; ++i)
                    for (int j = 0; j < N; ++j) {
                        long long val = m[i][j] - (i == j ? k : 0);
                        if (val != 0) shifted.at(i, j) = CycScalar(Rational(val));
                    }
                int mult = N - rank_of(shifted);
                if (mult > 0) br.spectrum.push_back({k, mult});
                total += mult;
            }
            br.integral = (total == N);  // eigenspaces for integer eigenvalues fill the space
            br.within_bounds = br.integral;
        }
        if (!br.integral || !br.within_bounds) report.ok = false;
        report.blocks.push_back(std::move(br));
    }
    return report;
}

}  // namespace coxlab
