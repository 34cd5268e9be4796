#pragma once

#include "regstab/checks.hpp"
#include "regstab/hilbert.hpp"

namespace regstab {

/// d = min{ mu : (I_{<= mu}) is m-primary }. Scans from the smallest to the
/// largest generator degree; I itself being m-primary certifies termination.
template <class F>
int compute_d(const IdealSpec<F>& I) {
    I.validate();
    if (I.gens.empty() || !is_m_primary(groebner(I)))
        throw DomainError("compute_d: ideal is not m-primary");
    for (int mu = I.min_gen_degree(); mu <= I.max_gen_degree(); ++mu) {
        if (is_m_primary(groebner(subideal_up_to_degree(I, mu)))) return mu;
    }
    throw TheoremViolation("compute_d: no m-primary truncation found up to the maximal generator degree");
}

inline int t0_cap(long long reg_iprime, int d) {
    long long num = reg_iprime - d;
    long long cap = num <= 0 ? 1 : (num + d) / (d + 1); // ceil(num / (d+1))
    return (int)std::max(1ll, cap);
}

/// t0 = min{ t >= 1 : m^d I^t is contained in I' }. The scan is capped by
/// ceil((reg(I') - d) / (d + 1)); running past the cap would contradict a
/// proved bound and raises TheoremViolation.
template <class F>
int compute_t0(const IdealSpec<F>& I, int d) {
    auto iprime = subideal_up_to_degree(I, d);
    auto Gp = groebner(iprime);
    ExtInt regp = reg_mprimary(Gp);
    int cap = t0_cap(regp.value(), d);
    auto md = power_of_maximal_ideal(I.ring, d);
    for (int t = 1; t <= cap; ++t) {
        if (contains_ideal(Gp, ideal_product(md, ideal_power(I, t)))) return t;
    }
    throw TheoremViolation("compute_t0: containment m^d I^t in I' not reached by the bound t <= " +
                           std::to_string(cap));
}

struct StabRow {
    int t;
    long long reg;
    long long f; // reg - d*t
};

/// Exact regularities of the powers: reg(I^t) = end(A/I^t) + 1 for t = 1..T.
template <class F>
std::vector<StabRow> reg_table(PowerCache<F>& cache, int d, int T) {
    if (T < 1) throw InputError("reg_table: horizon must be >= 1");
    std::vector<StabRow> rows;
    for (int t = 1; t <= T; ++t) {
        ExtInt end = power_quotient_end(cache, t);
        long long reg = end.plus(1).value(); // powers of a proper ideal have nonzero quotient
        rows.push_back(StabRow{t, reg, reg - (long long)d * t});
    }
    return rows;
}

/// dim N_{mu,t} = dim (A/I^t)_{mu + t d} for t = 1..T.
template <class F>
std::vector<long long> n_strand_dimensions(PowerCache<F>& cache, int d, int mu, int T) {
    std::vector<long long> dims;
    for (int t = 1; t <= T; ++t) dims.push_back(power_quotient_dim(cache, t, mu + t * d));
    return dims;
}

template <class F>
std::vector<long long> n_strand_dimensions(const IdealSpec<F>& I, int mu, int T) {
    PowerCache<F> cache(I);
    return n_strand_dimensions(cache, compute_d(I), mu, T);
}

/// Rectangular grid of dim N_{mu,t}, rows mu = 0..M, columns t = 1..T.
struct DimGrid {
    int t0 = 1;
    std::vector<std::vector<long long>> dims;
};

/// Zero-propagation of the strand dimensions: upward in mu for every t, and
/// forward in t once t >= t0. A violation is a theorem-level failure.
inline CheckRecord verify_monotonicity(const DimGrid& grid) {
    CheckRecord c;
    c.name = "strand-zero-propagation";
    c.anchor = "stability-two-directions";
    c.relation = "grid";
    int violations = 0;
    std::string first;
    int M = (int)grid.dims.size();
    for (int mu = 0; mu < M; ++mu) {
        int T = (int)grid.dims[mu].size();
        for (int ti = 0; ti < T; ++ti) {
            int t = ti + 1;
            if (grid.dims[mu][ti] != 0) continue;
            if (mu + 1 < M && grid.dims[mu + 1][ti] != 0) {
                ++violations;
                if (first.empty())
                    first = "N(mu=" + std::to_string(mu) + ",t=" + std::to_string(t) + ")=0 but N(mu=" +
                            std::to_string(mu + 1) + ",t=" + std::to_string(t) + ")!=0";
            }
            if (t >= grid.t0 && ti + 1 < T && grid.dims[mu][ti + 1] != 0) {
                ++violations;
                if (first.empty())
                    first = "N(mu=" + std::to_string(mu) + ",t=" + std::to_string(t) + ")=0 but N(mu=" +
                            std::to_string(mu) + ",t=" + std::to_string(t + 1) + ")!=0";
            }
        }
    }
    c.lhs = std::to_string(violations);
    c.rhs = "0";
    c.outcome = violations == 0 ? CheckRecord::Outcome::Pass : CheckRecord::Outcome::Fail;
    c.note = first;
    return c;
}

template <class F>
struct StabReport {
    int d = 0;
    IdealSpec<F> iprime;
    bool iprime_proper = false; // I' strictly smaller than I (as generator sets)
    int t0 = 1;
    long long reg_iprime = 0;
    std::vector<StabRow> table;
    long long b = 0;
    long long c = 0;
    int c_argmax = 1; // smallest t attaining c
    std::vector<std::pair<int, ExtInt>> e_table;
    ExtInt e_b;
    int stab = 1;
    bool degenerate = false; // the b-strand of N vanishes identically
    int horizon = 0, window = 0;
    bool certified = false;
    DimGrid grid;
    std::vector<CheckRecord> checks;
};

/// Default scan horizon: the natural scale of late drops is n (the sandwich
/// bound ends at max(Stab, n)), padded to at least 8 rows.
inline int default_horizon(int n, int t0) { return std::max({2 * n, t0 + n, 8}); }

template <class F>
StabReport<F> stabilization_report(PowerCache<F>& cache, std::optional<int> horizon = std::nullopt,
                                   std::optional<int> window = std::nullopt) {
    const IdealSpec<F>& I = cache.ideal();
    const int n = I.ring.nvars();
    StabReport<F> rep;

    rep.d = compute_d(I);
    rep.iprime = subideal_up_to_degree(I, rep.d);
    rep.iprime_proper = rep.iprime.gens.size() < I.gens.size();
    auto Gp = groebner(rep.iprime);
    rep.reg_iprime = reg_mprimary(Gp).value();
    rep.t0 = compute_t0(I, rep.d);

    rep.window = window.value_or(n);
    rep.horizon = horizon.value_or(default_horizon(n, rep.t0));
    if (rep.horizon < rep.t0 + rep.window)
        throw InputError("horizon too small: need tmax >= t0 + window = " +
                         std::to_string(rep.t0 + rep.window));

    rep.table = reg_table(cache, rep.d, rep.horizon);
    rep.b = rep.table.back().f;
    if (rep.b < 0)
        throw TheoremViolation("stabilization_report: f at the horizon is negative (b must be >= 0)");
    rep.c = rep.table.front().f;
    rep.c_argmax = 1;
    for (const auto& row : rep.table)
        if (row.f > rep.c) { rep.c = row.f; rep.c_argmax = row.t; }

    // e_mu from the strand dimensions, mu = 0 .. max(b, c) + 1. A zero at the
    // horizon is exact: zeros propagate forward from t0 on (verified below).
    int mu_max = (int)std::max({rep.b, rep.c, 0ll}) + 1;
    rep.grid.t0 = rep.t0;
    for (int mu = 0; mu <= mu_max; ++mu)
        rep.grid.dims.push_back(n_strand_dimensions(cache, rep.d, mu, rep.horizon));
    for (int mu = 0; mu <= mu_max; ++mu) {
        const auto& dims = rep.grid.dims[mu];
        ExtInt e = ExtInt::neg_inf();
        if (dims.back() != 0) {
            e = ExtInt::at_least(rep.horizon);
        } else {
            for (int ti = (int)dims.size() - 1; ti >= 0; --ti)
                if (dims[ti] != 0) { e = ExtInt::exact(ti + 1); break; }
        }
        rep.e_table.emplace_back(mu, e);
    }

    rep.e_b = rep.e_table[(size_t)rep.b].second;
    if (rep.e_b.is_at_least())
        throw TheoremViolation("stabilization_report: b-strand nonzero at the horizon contradicts f(T) = b");
    rep.degenerate = rep.e_b.is_neg_inf();
    int stab_from_strand = rep.e_b.is_exact() ? (int)std::max(1ll, rep.e_b.value() + 1) : 1;
    int last_above = 0;
    for (const auto& row : rep.table)
        if (row.f > rep.b) last_above = row.t;
    rep.stab = std::max(1, last_above + 1);

    rep.certified = true;
    for (int i = 0; i < rep.window; ++i)
        if (rep.table[rep.table.size() - 1 - i].f != rep.b) rep.certified = false;

    // -- bound and theorem checks -----------------------------------------
    auto add = [&](CheckRecord c) { rep.checks.push_back(std::move(c)); };

    {
        CheckRecord c;
        c.name = "reg-subideal-bound";
        c.anchor = "initial-subideal-regularity";
        c.relation = "<=";
        c.lhs = std::to_string(rep.reg_iprime);
        c.rhs = std::to_string((long long)(rep.d - 1) * n + 1);
        c.outcome = rep.reg_iprime <= (long long)(rep.d - 1) * n + 1 ? CheckRecord::Outcome::Pass
                                                                     : CheckRecord::Outcome::Fail;
        add(std::move(c));
    }
    {
        CheckRecord c;
        c.name = "t0-upper-bound";
        c.anchor = "t0-bound";
        c.relation = "<=";
        c.lhs = std::to_string(rep.t0);
        c.rhs = std::to_string(t0_cap(rep.reg_iprime, rep.d));
        c.outcome = rep.t0 <= t0_cap(rep.reg_iprime, rep.d) ? CheckRecord::Outcome::Pass
                                                            : CheckRecord::Outcome::Fail;
        add(std::move(c));
    }
    {
        CheckRecord c;
        c.name = "f-weakly-decreasing";
        c.anchor = "f-monotone-after-t0";
        c.relation = "grid";
        int viol = 0;
        std::string note;
        for (size_t i = 0; i + 1 < rep.table.size(); ++i) {
            if (rep.table[i].t >= rep.t0 && rep.table[i + 1].f > rep.table[i].f) {
                ++viol;
                if (note.empty())
                    note = "f(" + std::to_string(rep.table[i + 1].t) + ") > f(" + std::to_string(rep.table[i].t) + ")";
            }
        }
        c.lhs = std::to_string(viol);
        c.rhs = "0";
        c.outcome = viol == 0 ? CheckRecord::Outcome::Pass : CheckRecord::Outcome::Fail;
        c.note = note;
        add(std::move(c));
    }
    {
        CheckRecord c;
        c.name = "f-at-least-b";
        c.anchor = "f-monotone-after-t0";
        c.relation = "grid";
        int viol = 0;
        for (const auto& row : rep.table)
            if (row.t >= rep.t0 && row.f < rep.b) ++viol;
        c.lhs = std::to_string(viol);
        c.rhs = "0";
        c.outcome = viol == 0 ? CheckRecord::Outcome::Pass : CheckRecord::Outcome::Fail;
        c.certified = rep.certified;
        add(std::move(c));
    }
    {
        CheckRecord c;
        c.name = "c-attained-by-t0";
        c.anchor = "c-attained-early";
        c.relation = "<=";
        c.lhs = std::to_string(rep.c_argmax);
        c.rhs = std::to_string(rep.t0);
        c.outcome = rep.c_argmax <= rep.t0 ? CheckRecord::Outcome::Pass : CheckRecord::Outcome::Fail;
        add(std::move(c));
    }
    add(verify_monotonicity(rep.grid));
    {
        CheckRecord c;
        c.name = "stab-consistency";
        c.anchor = "stabilization-from-b-strand";
        c.relation = "=";
        c.lhs = std::to_string(rep.stab);
        c.rhs = std::to_string(stab_from_strand);
        c.outcome = rep.stab == stab_from_strand ? CheckRecord::Outcome::Pass : CheckRecord::Outcome::Fail;
        c.certified = rep.certified;
        add(std::move(c));
    }
    {
        CheckRecord c;
        c.name = "low-strand-nonvanishing";
        c.anchor = "strands-below-b-nonzero";
        c.relation = "grid";
        int viol = 0;
        for (int mu = 0; mu < rep.b && mu < (int)rep.grid.dims.size(); ++mu)
            for (int ti = rep.t0 - 1; ti < (int)rep.grid.dims[mu].size(); ++ti)
                if (rep.grid.dims[mu][ti] == 0) ++viol;
        c.lhs = std::to_string(viol);
        c.rhs = "0";
        c.outcome = viol == 0 ? CheckRecord::Outcome::Pass : CheckRecord::Outcome::Fail;
        c.certified = rep.certified;
        add(std::move(c));
    }

    return rep;
}

template <class F>
StabReport<F> stabilization_report(const IdealSpec<F>& I, std::optional<int> horizon = std::nullopt,
                                   std::optional<int> window = std::nullopt) {
    PowerCache<F> cache(I);
    return stabilization_report(cache, horizon, window);
}

/// Standalone evaluation of the two t0-related bounds, with slack.
template <class F>
std::vector<CheckRecord> verify_t0_bounds(const IdealSpec<F>& I) {
    int n = I.ring.nvars();
    int d = compute_d(I);
    auto Gp = groebner(subideal_up_to_degree(I, d));
    long long regp = reg_mprimary(Gp).value();
    int t0 = compute_t0(I, d);
    std::vector<CheckRecord> out;
    {
        CheckRecord c;
        c.name = "reg-subideal-bound";
        c.anchor = "initial-subideal-regularity";
        c.relation = "<=";
        c.lhs = std::to_string(regp);
        c.rhs = std::to_string((long long)(d - 1) * n + 1);
        c.outcome = regp <= (long long)(d - 1) * n + 1 ? CheckRecord::Outcome::Pass : CheckRecord::Outcome::Fail;
        c.note = "slack " + std::to_string((long long)(d - 1) * n + 1 - regp);
        out.push_back(std::move(c));
    }
    {
        CheckRecord c;
        c.name = "t0-upper-bound";
        c.anchor = "t0-bound";
        c.relation = "<=";
        int cap = t0_cap(regp, d);
        c.lhs = std::to_string(t0);
        c.rhs = std::to_string(cap);
        c.outcome = t0 <= cap ? CheckRecord::Outcome::Pass : CheckRecord::Outcome::Fail;
        c.note = "slack " + std::to_string(cap - t0);
        out.push_back(std::move(c));
    }
    return out;
}

} // namespace regstab
