#pragma once

#include "regstab/extint.hpp"
#include "regstab/groebner.hpp"

namespace regstab {

inline bool divisible_by_any(const Monomial& m, const std::vector<Monomial>& gens) {
    for (const auto& g : gens)
        if (g.divides(m)) return true;
    return false;
}

/// Number of standard monomials of degree e: monomials not divisible by any
/// lead-term generator. Counting needs only the lead ideal.
inline long long standard_monomial_count(const std::vector<Monomial>& lead_gens, int n, int e) {
    if (e < 0) return 0;
    long long cnt = 0;
    for (const auto& m : monomial_basis(n, e))
        if (!divisible_by_any(m, lead_gens)) ++cnt;
    return cnt;
}

/// dim_k (A/I)_e from a Groebner basis of I.
template <class F>
long long hilbert_function(const GroebnerBasis<F>& G, int e) {
    if (e < 0) return 0;
    if (!G.complete_through(e)) throw InputError("hilbert_function: basis truncated below degree " + std::to_string(e));
    return standard_monomial_count(G.lead_monomials(), G.source.ring.nvars(), e);
}

/// Hilbert data of an Artinian quotient A/I: the dimensions for
/// e = 0..end+1 and the end degree (-inf for the zero module).
struct HilbertTable {
    std::vector<long long> dims; // index e, runs one past the end degree
    ExtInt end;

    long long at(int e) const {
        if (e < 0 || e >= (int)dims.size()) return 0;
        return dims[e];
    }
};

/// Largest e with dim (A/I)_e != 0. The scan stops at the first zero, which
/// is valid for quotient rings of A: a zero graded piece stays zero.
template <class F>
ExtInt artinian_end(const GroebnerBasis<F>& G) {
    if (!is_m_primary(G)) throw DomainError("artinian_end: ideal is not m-primary (end would be infinite)");
    int n = G.source.ring.nvars();
    auto leads = G.lead_monomials();
    for (int e = 0;; ++e) {
        if (standard_monomial_count(leads, n, e) == 0) return e == 0 ? ExtInt::neg_inf() : ExtInt::exact(e - 1);
    }
}

template <class F>
HilbertTable hilbert_table(const GroebnerBasis<F>& G) {
    if (!is_m_primary(G)) throw DomainError("hilbert_table: ideal is not m-primary");
    int n = G.source.ring.nvars();
    auto leads = G.lead_monomials();
    HilbertTable t;
    for (int e = 0;; ++e) {
        long long d = standard_monomial_count(leads, n, e);
        t.dims.push_back(d);
        if (d == 0) break;
    }
    t.end = t.dims.size() >= 2 ? ExtInt::exact((int)t.dims.size() - 2) : ExtInt::neg_inf();
    return t;
}

/// reg(I) for m-primary I: the quotient has finite length, so all local
/// cohomology sits in H^0 and reg(I) = end(A/I) + 1.
template <class F>
ExtInt reg_mprimary(const GroebnerBasis<F>& G) {
    return artinian_end(G).plus(1);
}

/// Hilbert function of A/(f_1..f_n) for a regular sequence of forms of
/// degrees d_i: coefficients of prod_i (1 + z + ... + z^{d_i - 1}).
inline HilbertTable ci_hilbert_table(const std::vector<int>& degrees) {
    std::vector<long long> h{1};
    for (int d : degrees) {
        if (d < 1) throw InputError("ci_hilbert_table: degrees must be >= 1");
        std::vector<long long> nh(h.size() + d - 1, 0);
        for (size_t i = 0; i < h.size(); ++i)
            for (int j = 0; j < d; ++j) nh[i + j] += h[i];
        h = std::move(nh);
    }
    HilbertTable t;
    t.dims = std::move(h);
    t.dims.push_back(0);
    t.end = (int)t.dims.size() >= 2 && t.dims[t.dims.size() - 2] != 0
                ? ExtInt::exact((int)t.dims.size() - 2)
                : ExtInt::neg_inf();
    return t;
}

/// Closed form for an equigenerated complete intersection of n forms of
/// degree d:
///   dim (A/I^t)_{mu+td} = sum_{i=0}^{t-1} C(i+n-1, n-1) * dim (A/I)_{mu+(t-i)d}.
inline long long ci_power_dimension(const std::vector<int>& degrees, const HilbertTable& base, int mu, int t) {
    if (t < 1) throw InputError("ci_power_dimension: power must be >= 1");
    if (degrees.empty()) throw InputError("ci_power_dimension: empty degree list");
    int d = degrees.front();
    for (int di : degrees)
        if (di != d)
            throw InputError("ci_power_dimension: only the equigenerated case has a closed form");
    int n = static_cast<int>(degrees.size());
    long long sum = 0;
    for (int i = 0; i < t; ++i) sum += binomial(i + n - 1, n - 1) * base.at(mu + (t - i) * d);
    return sum;
}

// --- cached, auto-extending variants used by the power pipeline ----------

/// dim (A/I^t)_e with the cache extending the basis as needed.
template <class F>
long long power_quotient_dim(PowerCache<F>& cache, int t, int e) {
    if (e < 0) return 0;
    if (t == 0) return 0; // A/I^0 = 0
    auto leads = cache.leads(t, e);
    return standard_monomial_count(leads, cache.ring().nvars(), e);
}

/// end(A/I^t) via an ascending scan, auto-extending and stopping at the
/// first zero dimension.
template <class F>
ExtInt power_quotient_end(PowerCache<F>& cache, int t) {
    if (t == 0) return ExtInt::neg_inf();
    for (int e = 0;; ++e) {
        if (power_quotient_dim(cache, t, e) == 0) return e == 0 ? ExtInt::neg_inf() : ExtInt::exact(e - 1);
    }
}

} // namespace regstab
