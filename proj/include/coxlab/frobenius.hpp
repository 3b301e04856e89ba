#pragma once

#include "coxlab/charfns.hpp"
#include "coxlab/convolution.hpp"

namespace coxlab {

inline Partition cycle_type(const std::vector<uint8_t>& perm) {
    int n = (int)perm.size();
    std::vector<bool> seen(n, false);
    Partition mu;
    for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        int len = 0, cur = i;
        while (!seen[cur]) {
            seen[cur] = true;
            cur = perm[cur];
            ++len;
        }
        mu.push_back(len);
    }
    std::sort(mu.rbegin(), mu.rend());
    return mu;
}

// Frobenius route: F = |C|/|G| sum_chi chi(c^{-1}) chi(e^{t A(w)}), with
// chi(A(w)^l) read off the materialized group-algebra expansion. Compared
// against the direct class-sum of the same expansion.
inline CheckReport frobenius_crosscheck_Sn(int n, const WeightSystem& w, int L) {
    if (n > 5) throw BudgetExceeded("frobenius_crosscheck_Sn: n <= 5 (A(w)^l is materialized)");
    auto G = ReflectionGroup::symmetric(n);
    auto cc = coxeter_class(G);
    std::vector<std::vector<PolyW>> states;
    std::vector<PolyW> wp;
    for (int p = 0; p < G.num_reflections(); ++p) wp.push_back(w.weight_poly(p));
    TruncatedEGF lhs = convolution_series<PolyW>(
        G, [&](int p) { return wp[p]; }, cc.members, L, &states);

    // cycle type of every element, grouped
    std::map<Partition, std::vector<int>> classes;
    for (long g = 0; g < G.order(); ++g) classes[cycle_type(G.elements[g].perm)].push_back((int)g);

    auto table_rows = partitions_of(n);
    TruncatedEGF rhs(L);
    Partition ncycle{n};
    for (const auto& lam : table_rows) {
        long long chi_cinv = mn_character(lam, ncycle);
        if (chi_cinv == 0) continue;
        for (int l = 0; l <= L; ++l) {
            PolyW chi_Al;
            for (const auto& [mu, members] : classes) {
                long long val = mn_character(lam, mu);
                if (val == 0) continue;
                PolyW s;
                for (int g : members) s += states[l][g];
                chi_Al += s.scaled(Rational(val));
            }
            rhs.c[l] += chi_Al.scaled(Rational(chi_cinv));
        }
    }
    TruncatedEGF scaled(L);
    for (int l = 0; l <= L; ++l)
        scaled.c[l] = rhs.c[l].scaled(Rational((long)cc.members.size(), (long)G.order()));
    auto diff = lhs.first_difference(scaled);
    if (!diff) return CheckReport::pass();
    return CheckReport::fail("Frobenius cross-check failed for S" + std::to_string(n),
                             {{"coefficient", std::to_string(*diff)},
                              {"lhs", lhs.c[*diff].str()},
                              {"rhs", scaled.c[*diff].str()}});
}

// All add-a-box chains lambda^(2) c ... c lambda^(n) ending at lambda,
// together with the normalized-trace increments per tower step.
struct GTChain {
    std::vector<Partition> shapes;      // sizes 2..n
    std::vector<long long> increments;  // length n-1, increments of chi~(A_i)
};

inline Rational normalized_transposition_trace(const Partition& lam) {
    int j = partition_size(lam);
    if (j < 2) return Rational(0);
    Partition transp{2};
    for (int i = 0; i < j - 2; ++i) transp.push_back(1);
    return Rational(binomial_z(j, 2)) * Rational(mn_character(lam, transp)) /
           Rational(dimension_of(lam));
}

inline std::vector<GTChain> gt_chains(int n) {
    std::vector<GTChain> out;
    std::function<void(GTChain&)> rec = [&](GTChain& chain) {
        const Partition top = chain.shapes.back();  // by value: push_back below reallocates
        int sz = partition_size(top);
        if (sz == n) {
            out.push_back(chain);
            return;
        }
        // add a box in every valid position
        for (size_t i = 0; i <= top.size(); ++i) {
            Partition nxt = top;
            if (i < top.size()) {
                if (i > 0 && top[i] + 1 > top[i - 1]) continue;
                nxt[i] += 1;
            } else {
                nxt.push_back(1);
            }
            Rational inc = normalized_transposition_trace(nxt) - normalized_transposition_trace(top);
            if (!inc.is_integer())
                throw std::logic_error("GT increment is not an integer");
            chain.shapes.push_back(nxt);
            chain.increments.push_back(inc.to_long());
            rec(chain);
            chain.shapes.pop_back();
            chain.increments.pop_back();
        }
    };
    for (const Partition& start : partitions_of(2)) {
        GTChain chain;
        chain.shapes.push_back(start);
        chain.increments.push_back(normalized_transposition_trace(start).to_long());
        rec(chain);
    }
    return out;
}

// Gelfand-Tsetlin route for the standard tower of Sym(n): the generating
// function is (1/h) sum_chi chi(c^{-1}) sum_chains exp(t sum_i inc_i w_i),
// with chain multiplicities all 1 (branching is multiplicity free).
inline CheckReport gt_crosscheck_Sn(int n, int L) {
    if (n > 6) throw BudgetExceeded("gt_crosscheck_Sn: n <= 6");
    auto G = ReflectionGroup::symmetric(n);
    auto T = identity_standard_tower(G);
    WeightSystem w = tower_weight_system(T);
    auto cc = coxeter_class(G);
    TruncatedEGF lhs = enumerate_series(G, w, cc.members, L);

    TruncatedEGF rhs(L);
    Partition ncycle{n};
    for (const auto& chain : gt_chains(n)) {
        long long chi_cinv = mn_character(chain.shapes.back(), ncycle);
        if (chi_cinv == 0) continue;
        LinearForm e{std::vector<long long>(chain.increments)};
        TruncatedEGF term = TruncatedEGF::exp_of_linear(e, L);
        for (int l = 0; l <= L; ++l) rhs.c[l] += term.c[l].scaled(Rational(chi_cinv));
    }
    for (int l = 0; l <= L; ++l)
        rhs.c[l] = rhs.c[l].scaled(Rational(1, G.coxeter_number));
    auto diff = lhs.first_difference(rhs);
    if (!diff) return CheckReport::pass();
    return CheckReport::fail("Gelfand-Tsetlin cross-check failed for S" + std::to_string(n),
                             {{"coefficient", std::to_string(*diff)},
                              {"lhs", lhs.c[*diff].str()},
                              {"rhs", rhs.c[*diff].str()}});
}

}  // namespace coxlab
