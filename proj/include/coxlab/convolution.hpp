#pragma once

#include "coxlab/egf.hpp"
#include "coxlab/laplacian.hpp"
#include "coxlab/report.hpp"
#include "coxlab/tower.hpp"

namespace coxlab {

inline long budget_bytes_from_env() {
    const char* s = std::getenv("COXLAB_BUDGET_MB");
    long mb = s ? std::atol(s) : 2048;
    return mb * 1024L * 1024L;
}

inline size_t term_count_of(const PolyW& p) { return p.term_count(); }
inline size_t term_count_of(const CycScalar&) { return 1; }

// Weighted walk in the group algebra: after l steps state[g] is the sum of
// w(tau_1)...w(tau_l) over tuples with tau_1 tau_2 ... tau_l = g. The series
// coefficient at l is the state summed over the target elements.
//
// The step applies "state <- state * A(w)" as l successive sparse
// multiplications; A(w)^l is never materialized.
template <class C, class WeightFn>
TruncatedEGF convolution_series(const ReflectionGroup& G, WeightFn&& weight_of,
                                const std::vector<int>& targets, int L,
                                std::vector<std::vector<C>>* keep_states = nullptr) {
    long N = G.order();
    int R = G.num_reflections();
    // right-multiplication table g -> g * tau
    std::vector<int> table((size_t)N * R);
    for (long g = 0; g < N; ++g)
        for (int p = 0; p < R; ++p) table[(size_t)g * R + p] = G.mult((int)g, G.reflections[p]);

    std::vector<C> state(N);
    state[0] = C(1);
    TruncatedEGF out(L);
    auto record = [&](int l) {
        PolyW sum;
        for (int t : targets) sum += PolyW(state[t]);
        out.c[l] = std::move(sum);
    };
    record(0);
    if (keep_states) keep_states->push_back(state);
    long budget = budget_bytes_from_env();
    for (int l = 1; l <= L; ++l) {
        std::vector<C> next(N);
        for (long g = 0; g < N; ++g) {
            if (state[g].is_zero()) continue;
            for (int p = 0; p < R; ++p) {
                int tgt = table[(size_t)g * R + p];
                next[tgt] += state[g] * weight_of(p);
            }
        }
        state = std::move(next);
        if (keep_states) keep_states->push_back(state);
        record(l);
        long approx = 0;
        for (const auto& c : state) approx += (long)term_count_of(c);
        if (approx * 96 > budget)
            throw BudgetExceeded("convolution_series: memory budget exceeded");
    }
    return out;
}

enum class TargetMode { WholeClass, FixedElement };

// Exact EGF of weighted reflection factorizations of Coxeter elements,
// truncated at order L. Formal weights give PolyW coefficients (one monomial
// per weight multiset); numeric weights give constant coefficients.
inline TruncatedEGF enumerate_series(const ReflectionGroup& G, const WeightSystem& w,
                                     const std::vector<int>& targets, int L) {
    if (w.numeric()) {
        return convolution_series<CycScalar>(
            G, [&](int p) { return CycScalar(w.weight_value(p)); }, targets, L);
    }
    std::vector<PolyW> wp;
    for (int p = 0; p < G.num_reflections(); ++p) wp.push_back(w.weight_poly(p));
    return convolution_series<PolyW>(G, [&](int p) { return wp[p]; }, targets, L);
}

inline TruncatedEGF enumerate_series(const ReflectionGroup& G, const WeightSystem& w,
                                     const CoxeterClass& cc, TargetMode mode, int L) {
    std::vector<int> targets = (mode == TargetMode::WholeClass)
                                   ? cc.members
                                   : std::vector<int>{cc.representative};
    return enumerate_series(G, w, targets, L);
}

// Weighted count of reduced factorizations over the whole Coxeter class,
// asserted against the Matrix-Tree value n!/h * det L.
inline PolyW reduced_count(const ReflectionGroup& G, const ParabolicTower& T) {
    WeightSystem w = tower_weight_system(T);
    auto cc = coxeter_class(G);
    auto series = enumerate_series(G, w, cc.members, G.rank);
    PolyW lhs = series.c[G.rank];
    auto cp = char_poly(w_laplacian_formal(G, w));
    PolyW rhs = cp[0].scaled(Rational(factorial_z(G.rank)) / Rational(G.coxeter_number));
    if (lhs != rhs)
        throw std::logic_error("reduced_count: enumeration disagrees with n!/h det L in " + G.name);
    return lhs;
}

}  // namespace coxlab
