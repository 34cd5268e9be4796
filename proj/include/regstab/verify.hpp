#pragma once

#include "regstab/koszul.hpp"

namespace regstab {

inline CheckRecord::Outcome outcome_of(std::optional<bool> decided) {
    if (!decided.has_value()) return CheckRecord::Outcome::Inconclusive;
    return *decided ? CheckRecord::Outcome::Pass : CheckRecord::Outcome::Fail;
}

inline CheckRecord relation_check(std::string name, std::string anchor, std::string relation, const ExtInt& lhs,
                                  const ExtInt& rhs, bool certified, std::string note = "") {
    CheckRecord c;
    c.name = std::move(name);
    c.anchor = std::move(anchor);
    c.relation = std::move(relation);
    c.lhs = lhs.str();
    c.rhs = rhs.str();
    c.outcome = outcome_of(c.relation == "=" ? ExtInt::eq(lhs, rhs) : ExtInt::le(lhs, rhs));
    c.certified = certified;
    c.note = std::move(note);
    return c;
}

inline CheckRecord::Outcome combine_outcomes(const std::vector<CheckRecord>& checks, bool certified_inputs) {
    bool inconclusive = !certified_inputs;
    for (const auto& c : checks) {
        if (c.fail()) return CheckRecord::Outcome::Fail;
        if (c.outcome == CheckRecord::Outcome::Inconclusive || !c.certified) inconclusive = true;
    }
    return inconclusive ? CheckRecord::Outcome::Inconclusive : CheckRecord::Outcome::Pass;
}

template <class F>
struct SimpleStabVerdict {
    StabReport<F> stab;
    Reduction<F> reduction;
    BettiTable betti;   // b-strand of the Rees module
    CohEndReport coh;   // its H^0/H^1 ends
    bool degenerate = false;
    std::vector<CheckRecord> checks;
    CheckRecord::Outcome overall = CheckRecord::Outcome::Inconclusive;
};

/// The stabilization index against the cohomology of the b-strand of the
/// Rees module: the equality Stab = end(H^1) + 1, the regularity sandwich
/// Stab <= reg_B <= max(Stab, n), and the forced equality when either side
/// exceeds n. A b-strand with vanishing H^1 is flagged as degenerate: the
/// index is floored at 1 and the lower sandwich bound is vacuous.
template <class F>
SimpleStabVerdict<F> verify_simple_stab(PowerCache<F>& cache, uint64_t seed,
                                        std::optional<int> horizon = std::nullopt,
                                        std::optional<int> cutoff_opt = std::nullopt) {
    const int n = cache.ring().nvars();
    SimpleStabVerdict<F> V;
    V.stab = stabilization_report(cache, horizon);
    V.reduction = sample_general_reduction(cache.ideal(), V.stab.d, seed);
    int cutoff = cutoff_opt.value_or(std::max(V.stab.stab, n) + 2 * n);
    V.betti = rees_betti(cache, V.reduction, (int)V.stab.b, cutoff);
    V.coh = rees_h1_end(cache, V.reduction, (int)V.stab.b, V.stab.stab + n);

    ExtInt stab = ExtInt::exact(V.stab.stab);
    ExtInt raw = V.coh.end_h1.plus(1); // the index as the theorem writes it
    V.degenerate = V.coh.end_h1.is_neg_inf();
    bool sub_certified = V.stab.certified && V.betti.certified && V.coh.certified;

    if (V.degenerate) {
        V.checks.push_back(relation_check("degenerate-stab-floor", "stabilization-from-strand-cohomology", "=",
                                          stab, ExtInt::exact(1), V.stab.certified && V.coh.certified,
                                          "b-strand cohomology vanishes; index floored at 1"));
    } else {
        V.checks.push_back(relation_check("stab-equals-end-h1-plus-1", "stabilization-from-strand-cohomology", "=",
                                          stab, raw, V.stab.certified && V.coh.certified));
    }
    ExtInt lower = V.degenerate ? raw : stab;
    V.checks.push_back(relation_check("sandwich-lower", "stab-regularity-sandwich", "<=", lower, V.betti.reg_B,
                                      sub_certified,
                                      V.degenerate ? "vacuous for a zero b-strand" : ""));
    ExtInt upper_rhs = ExtInt::exact(std::max((long long)V.stab.stab, (long long)n));
    V.checks.push_back(
        relation_check("sandwich-upper", "stab-regularity-sandwich", "<=", V.betti.reg_B, upper_rhs, sub_certified));
    {
        // Equality branch: triggered by Stab >= n or reg_B > n.
        ExtInt cond_stab = V.degenerate ? raw : stab;
        bool cond1 = cond_stab.is_exact() && cond_stab.value() >= n;
        std::optional<bool> cond2 = ExtInt::le(ExtInt::exact(n + 1), V.betti.reg_B);
        CheckRecord c;
        c.name = "stab-equals-regB-when-large";
        c.anchor = "stab-regularity-sandwich";
        c.relation = "implies";
        c.lhs = cond_stab.str() + ">=" + std::to_string(n) + " or " + V.betti.reg_B.str() + ">" + std::to_string(n);
        c.rhs = "equal";
        c.certified = sub_certified;
        if (cond1 || (cond2.has_value() && *cond2)) {
            c.outcome = outcome_of(ExtInt::eq(stab, V.betti.reg_B));
        } else if (!cond2.has_value()) {
            c.outcome = CheckRecord::Outcome::Inconclusive;
        } else {
            c.outcome = CheckRecord::Outcome::Pass;
            c.note = "hypothesis not met";
        }
        V.checks.push_back(std::move(c));
    }
    for (const auto& c : V.stab.checks)
        if (c.fail()) V.checks.push_back(c);
    V.overall = combine_outcomes(V.checks, sub_certified);
    return V;
}

template <class F>
SimpleStabVerdict<F> verify_simple_stab(const IdealSpec<F>& I, uint64_t seed,
                                        std::optional<int> horizon = std::nullopt,
                                        std::optional<int> cutoff = std::nullopt) {
    PowerCache<F> cache(I);
    return verify_simple_stab(cache, seed, horizon, cutoff);
}

struct CompcohVerdict {
    int mu = 0;
    ExtInt reg_N;
    ExtInt reg_R;
    ExtInt dim_N;  // Krull dimension of the quotient strand (growth + 1)
    ExtInt cd_R;   // cohomological-dimension estimate of the Rees strand
    BettiTable betti_N;
    BettiTable betti_R;
    std::vector<CheckRecord> checks;
    CheckRecord::Outcome overall = CheckRecord::Outcome::Inconclusive;
};

/// Regularity comparison of a quotient strand and the matching Rees strand:
///   reg_B(N_mu) <= max(reg_B(R_mu) - 1, dim N_mu),
///   reg_B(R_mu) <= max(reg_B(N_mu) + 1, cd(R_mu)),       cd(R_mu) <= n,
/// and the equality reg_B(N_mu) = reg_B(R_mu) - 1 under either trigger
/// (reg_B(N_mu) >= n with a generator below degree d, or either regularity
/// above n). Dimensions enter through growth degrees of the piece sizes.
template <class F>
CompcohVerdict verify_compcoh(PowerCache<F>& cache, const Reduction<F>& J, int mu, int cutoff) {
    const Ring<F>& ring = cache.ring();
    const int n = ring.nvars();
    if (mu <= -n) throw InputError("verify_compcoh: offset mu must exceed -n");
    int d = J.degree();

    CompcohVerdict V;
    V.mu = mu;
    auto Q = build_strand(cache, J, mu, cutoff + n, StrandModule<F>::Kind::Quotient);
    V.betti_N = koszul_betti(Q, cutoff);
    V.betti_R = rees_betti(cache, J, mu, cutoff);
    V.reg_N = V.betti_N.reg_B;
    V.reg_R = V.betti_R.reg_B;

    auto gq = growth_degree(Q);
    V.dim_N = gq.degree ? ExtInt::exact(*gq.degree + 1) : ExtInt::unknown();
    std::vector<long long> rees_dims;
    for (int t = 0; t <= cutoff + n; ++t)
        rees_dims.push_back(dim_poly_ring_piece(n, mu + t * d) - Q.dim(t));
    auto gr = growth_of_dims(rees_dims, n, n, true);
    V.cd_R = gr.degree ? ExtInt::exact(*gr.degree + 1) : ExtInt::unknown();

    bool certified = V.betti_N.certified && V.betti_R.certified;
    V.checks.push_back(relation_check("regN-bounded-by-regR", "strand-regularity-comparison", "<=", V.reg_N,
                                      ExtInt::max(V.reg_R.plus(-1), V.dim_N), certified));
    V.checks.push_back(relation_check("regR-bounded-by-regN", "strand-regularity-comparison", "<=", V.reg_R,
                                      ExtInt::max(V.reg_N.plus(1), V.cd_R), certified));
    V.checks.push_back(relation_check("cd-at-most-n", "strand-cohomological-dimension", "<=", V.cd_R,
                                      ExtInt::exact(n), certified));
    {
        bool has_low_gen = false;
        for (const auto& g : cache.ideal().gens)
            if (g.degree() < d) has_low_gen = true;
        std::optional<bool> trig1 = has_low_gen ? ExtInt::le(ExtInt::exact(n), V.reg_N)
                                                : std::optional<bool>(false);
        std::optional<bool> trig2 = ExtInt::le(ExtInt::exact(n + 1), ExtInt::max(V.reg_N, V.reg_R));
        CheckRecord c;
        c.name = "regN-equals-regR-minus-1-when-large";
        c.anchor = "strand-regularity-comparison";
        c.relation = "implies";
        c.lhs = "regN=" + V.reg_N.str() + ", regR=" + V.reg_R.str();
        c.rhs = "regN = regR - 1";
        c.certified = certified;
        if ((trig1.has_value() && *trig1) || (trig2.has_value() && *trig2)) {
            c.outcome = outcome_of(ExtInt::eq(V.reg_N, V.reg_R.plus(-1)));
        } else if (!trig1.has_value() || !trig2.has_value()) {
            c.outcome = CheckRecord::Outcome::Inconclusive;
        } else {
            c.outcome = CheckRecord::Outcome::Pass;
            c.note = "hypothesis not met";
        }
        V.checks.push_back(std::move(c));
    }
    V.overall = combine_outcomes(V.checks, certified);
    return V;
}

template <class F>
CompcohVerdict verify_compcoh(const IdealSpec<F>& I, uint64_t seed, int mu, std::optional<int> cutoff = std::nullopt) {
    PowerCache<F> cache(I);
    int d = compute_d(I);
    auto J = sample_general_reduction(I, d, seed);
    int n = I.ring.nvars();
    return verify_compcoh(cache, J, mu, cutoff.value_or(3 * n));
}

} // namespace regstab
