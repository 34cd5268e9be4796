#pragma once

#include "regstab/strand.hpp"

namespace regstab {

/// Graded Betti numbers of a strand over B = k[T_1..T_n], computed as Koszul
/// homology, with the regularity reg_B = max{t - j : beta_{j,t} != 0}.
struct BettiTable {
    int nmaps = 0;
    int cutoff = -1;
    std::vector<std::vector<long long>> beta; // beta[j][t], j = 0..nmaps, t = 0..cutoff
    ExtInt reg_B = ExtInt::neg_inf();
    bool certified = false;
    std::optional<int> growth;
    bool infinite_reg = false;

    long long at(int j, int t) const {
        if (j < 0 || j > nmaps || t < 0 || t > cutoff) return 0;
        return beta[j][t];
    }
};

struct CohEndReport {
    ExtInt end_h0 = ExtInt::neg_inf();
    ExtInt end_h1 = ExtInt::neg_inf();
    int saturation_power = 0;
    bool certified = false;
};

struct GrowthReport {
    std::optional<int> degree; // -1 means an eventually-zero dimension sequence
    bool infinite_reg = false;
};

namespace detail {

inline constexpr long long kDenseEntryCap = 4'000'000;

inline std::vector<std::vector<std::vector<int>>> subsets_by_size(int n) {
    std::vector<std::vector<std::vector<int>>> by(n + 1);
    for (int mask = 0; mask < (1 << n); ++mask) {
        std::vector<int> s;
        for (int i = 0; i < n; ++i)
            if (mask & (1 << i)) s.push_back(i);
        by[(int)s.size()].push_back(std::move(s));
    }
    for (auto& v : by) std::sort(v.begin(), v.end());
    return by;
}

/// Rank of the Koszul differential K_j -> K_{j-1} in internal degree t:
/// source blocks Lambda^j x M_{t-j}, signs (-1)^{k+1} on dropping the k-th
/// subset element.
template <class F>
long long koszul_differential_rank(const StrandModule<F>& M, const std::vector<std::vector<std::vector<int>>>& subs,
                                   int j, int t) {
    const F& K = M.ring.field;
    int n = M.nmaps;
    long long src_block = M.dim(t - j);
    long long dst_block = M.dim(t - j + 1);
    long long cols = (long long)subs[j].size() * src_block;
    long long rows = (long long)subs[j - 1].size() * dst_block;
    if (cols == 0 || rows == 0) return 0;
    if (rows * cols > kDenseEntryCap)
        throw ResourceError("koszul: dense block of " + std::to_string(rows) + "x" + std::to_string(cols) +
                            " entries exceeds the desk-scale cap");
    std::map<std::vector<int>, int> pos;
    for (size_t a = 0; a < subs[j - 1].size(); ++a) pos[subs[j - 1][a]] = (int)a;
    DenseMatrix<F> D(K, (int)rows, (int)cols);
    for (size_t sIdx = 0; sIdx < subs[j].size(); ++sIdx) {
        const auto& S = subs[j][sIdx];
        for (int k = 0; k < j; ++k) {
            std::vector<int> S2 = S;
            S2.erase(S2.begin() + k);
            int tgt = pos[S2];
            bool negative = k % 2 == 1; // signs + - + ... on dropped positions
            const auto& sm = M.maps[S[k]][t - j]; // t - j >= 0 since the source block is nonzero
            for (int c = 0; c < sm.cols; ++c)
                for (const auto& [r, v] : sm.col[c]) {
                    long long row = (long long)tgt * dst_block + r;
                    long long col = (long long)sIdx * src_block + c;
                    D.at((int)row, (int)col) = negative ? K.neg(v) : v;
                }
        }
    }
    return D.rank(K);
}

/// All Koszul homology dimensions H_j(K(T_1..T_n) tensor M)_t for
/// j = 0..nmaps and t = 0..cutoff. Needs pieces and maps through cutoff.
template <class F>
std::vector<std::vector<long long>> koszul_homology_dims(const StrandModule<F>& M, int cutoff) {
    if (cutoff > M.horizon)
        throw InputError("koszul: cutoff " + std::to_string(cutoff) + " needs horizon >= " + std::to_string(cutoff));
    int n = M.nmaps;
    auto subs = subsets_by_size(n);
    std::vector<std::vector<long long>> H(n + 1, std::vector<long long>(cutoff + 1, 0));
    for (int t = 0; t <= cutoff; ++t) {
        std::vector<long long> rank(n + 2, 0);
        for (int j = 1; j <= n; ++j) rank[j] = koszul_differential_rank(M, subs, j, t);
        for (int j = 0; j <= n; ++j) {
            long long chains = (long long)subs[j].size() * M.dim(t - j);
            H[j][t] = chains - rank[j] - rank[j + 1];
            if (H[j][t] < 0)
                throw TheoremViolation("koszul: negative homology dimension (internal error)");
        }
    }
    return H;
}

inline void finalize_betti(BettiTable& B) {
    long long best = std::numeric_limits<long long>::min();
    bool any = false;
    for (int j = 0; j <= B.nmaps; ++j)
        for (int t = 0; t <= B.cutoff; ++t)
            if (B.beta[j][t] != 0) {
                any = true;
                best = std::max(best, (long long)t - j);
            }
    // Certified when a trailing window of nmaps internal degrees is zero in
    // every homological position.
    bool window = B.cutoff + 1 >= B.nmaps + 1;
    if (window)
        for (int t = B.cutoff - B.nmaps + 1; t <= B.cutoff && window; ++t)
            for (int j = 0; j <= B.nmaps; ++j)
                if (B.beta[j][t] != 0) { window = false; break; }
    B.certified = window;
    if (!any)
        B.reg_B = ExtInt::neg_inf();
    else
        B.reg_B = B.certified ? ExtInt::exact(best) : ExtInt::at_least(best);
}

} // namespace detail

/// Full Betti table by dense Koszul homology. The generic route: correct for
/// any strand, intended for desk-scale pieces.
template <class F>
BettiTable koszul_betti(const StrandModule<F>& M, int cutoff) {
    if (cutoff < 0) throw InputError("koszul_betti: cutoff must be >= 0");
    if (cutoff > M.horizon - M.nmaps)
        throw InputError("koszul_betti: cutoff " + std::to_string(cutoff) + " needs a strand horizon of at least " +
                         std::to_string(cutoff + M.nmaps));
    BettiTable B;
    B.nmaps = M.nmaps;
    B.cutoff = cutoff;
    B.beta = detail::koszul_homology_dims(M, cutoff);
    detail::finalize_betti(B);
    return B;
}

/// Betti table of a Rees strand (I^t)_{mu+td} through the ambient strand
/// P_t = A_{mu+td}. P is free over B in internal degrees t >= n+1 (A is a
/// free module over the complete-intersection subring k[g_1..g_n]), so the
/// long exact homology sequence of 0 -> M -> P -> Q -> 0 collapses there:
///   beta_{j,t}(M) = H_{j+1}(Q)_t                      for j >= 1,
///   beta_{0,t}(M) = H_1(Q)_t + dim (A/J)_{mu+td} - H_0(Q)_t,
/// with Q the quotient strand (small pieces). Low degrees t <= n are done
/// directly on the Rees pieces.
template <class F>
BettiTable rees_betti(PowerCache<F>& cache, const Reduction<F>& J, int mu, int cutoff) {
    const int n = cache.ring().nvars();
    if ((int)J.gens.size() != n)
        throw InputError("rees_betti: the reduction must have exactly n generators");
    if (n < 2 || cutoff <= n) {
        auto M = build_strand(cache, J, mu, cutoff + n, StrandModule<F>::Kind::Rees);
        return koszul_betti(M, cutoff);
    }
    int d = J.degree();
    auto Q = build_strand(cache, J, mu, cutoff, StrandModule<F>::Kind::Quotient);
    auto Hq = detail::koszul_homology_dims(Q, cutoff);
    auto Ms = build_strand(cache, J, mu, n, StrandModule<F>::Kind::Rees);
    auto Hm_low = detail::koszul_homology_dims(Ms, n);
    auto aj = ci_hilbert_table(std::vector<int>(n, d));

    BettiTable B;
    B.nmaps = n;
    B.cutoff = cutoff;
    B.beta.assign(n + 1, std::vector<long long>(cutoff + 1, 0));
    for (int t = 0; t <= cutoff; ++t) {
        if (t <= n) {
            for (int j = 0; j <= n; ++j) B.beta[j][t] = Hm_low[j][t];
        } else {
            for (int j = 1; j <= n; ++j) B.beta[j][t] = j + 1 <= n ? Hq[j + 1][t] : 0;
            long long b0 = Hq[1][t] + aj.at(mu + t * d) - Hq[0][t];
            if (b0 < 0) throw TheoremViolation("rees_betti: negative Betti number from the exact sequence");
            B.beta[0][t] = b0;
        }
    }
    detail::finalize_betti(B);
    return B;
}

struct H0Report {
    ExtInt end = ExtInt::neg_inf();
    bool certified = false;
};

/// End of the torsion submodule H^0_n(M). The end of the torsion equals the
/// end of the socle (a minimal-power torsion element pushes a nonzero socle
/// element upward), so a single stacked kernel per degree suffices.
template <class F>
H0Report h0_end(const StrandModule<F>& M) {
    const F& K = M.ring.field;
    int T = M.horizon;
    std::vector<long long> socle(T, 0);
    for (int t = 0; t < T; ++t) {
        long long dt = M.dim(t);
        if (dt == 0) continue;
        DenseMatrix<F> stacked(K, (int)(M.nmaps * M.dim(t + 1)), (int)dt);
        for (int i = 0; i < M.nmaps; ++i) {
            const auto& sm = M.maps[i][t];
            for (int c = 0; c < sm.cols; ++c)
                for (const auto& [r, v] : sm.col[c]) stacked.at((int)(i * M.dim(t + 1) + r), c) = v;
        }
        socle[t] = dt - stacked.rank(K);
    }
    H0Report rep;
    int last = -1;
    for (int t = 0; t < T; ++t)
        if (socle[t] > 0) last = t;
    // Certified when the socle is silent on a trailing window of width nmaps
    // (Rees strands built from an ideal are torsion-free outright: the maps
    // are multiplication by nonzero forms inside the polynomial ring).
    int window = std::min(M.nmaps, T);
    bool tail_clear = true;
    for (int t = T - window; t < T; ++t)
        if (t >= 0 && socle[t] > 0) tail_clear = false;
    if (last < 0) {
        rep.end = ExtInt::neg_inf();
        rep.certified = tail_clear || (M.ideal_backed && M.kind == StrandModule<F>::Kind::Rees);
    } else if (tail_clear) {
        rep.end = ExtInt::exact(last);
        rep.certified = true;
    } else {
        rep.end = ExtInt::at_least(last);
        rep.certified = false;
    }
    return rep;
}

namespace detail {

/// Index lookup within monomial_basis(n, deg) (descending order).
struct MonoIndexer {
    std::vector<Monomial> monos;
    explicit MonoIndexer(int n, int deg) : monos(monomial_basis(n, deg)) {}
    int index(const Monomial& m) const {
        auto it = std::lower_bound(monos.begin(), monos.end(), m,
                                   [](const Monomial& a, const Monomial& b) { return degrevlex_less(b, a); });
        return (int)(it - monos.begin());
    }
    int size() const { return (int)monos.size(); }
};

/// dim coker(M_t -> Hom(n^K, M)_t): the saturation defect at one degree.
/// Hom(n^K, M)_t is cut out of families (v_m in M_{t+K}) by the relations
/// T_i v_{w/T_i} = T_j v_{w/T_j} over the degree-(K+1) monomials w.
template <class F>
long long saturation_coker_dim(const StrandModule<F>& M, int t, int Ksat) {
    const F& K = M.ring.field;
    int n = M.nmaps;
    MonoIndexer gens(n, Ksat);
    MonoIndexer rels(n, Ksat + 1);
    long long block = M.dim(t + Ksat);
    long long unknowns = (long long)gens.size() * block;
    if (unknowns == 0) {
        // Hom into the zero piece is zero; the cokernel vanishes.
        return 0;
    }
    long long rel_block = M.dim(t + Ksat + 1);
    // Monomial multiplication matrices M_t -> M_{t+len} along memoized paths.
    std::vector<std::vector<DenseMatrix<F>>> path(Ksat + 1);
    path[0].push_back(DenseMatrix<F>::identity(K, (int)M.dim(t)));
    for (int len = 1; len <= Ksat; ++len) {
        MonoIndexer lvl(n, len);
        MonoIndexer prev(n, len - 1);
        path[len].resize(lvl.size(), DenseMatrix<F>());
        for (int a = 0; a < lvl.size(); ++a) {
            const Monomial& m = lvl.monos[a];
            int i = 0;
            while (m.e[i] == 0) ++i;
            Monomial m2 = m / Monomial::var(n, i);
            path[len][a] = M.dense_map(i, t + len - 1).mul(K, path[len - 1][prev.index(m2)]);
        }
    }

    long long rows = 0;
    std::vector<std::tuple<int, int, int>> rel_rows; // (w index, i, j)
    for (int w = 0; w < rels.size(); ++w)
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rels.monos[w].e[i] > 0 && rels.monos[w].e[j] > 0) rel_rows.emplace_back(w, i, j);
    rows = (long long)rel_rows.size() * rel_block;
    if (rows * unknowns > kDenseEntryCap || unknowns * unknowns > kDenseEntryCap)
        throw ResourceError("saturation: dense system exceeds the desk-scale cap");

    long long hom_dim;
    if (rows == 0) {
        hom_dim = unknowns;
    } else {
        DenseMatrix<F> C(K, (int)rows, (int)unknowns);
        long long r0 = 0;
        for (const auto& [w, i, j] : rel_rows) {
            auto place = [&](int var, const Monomial& gen, bool negate) {
                int g = gens.index(gen);
                const auto& sm = M.maps[var][t + Ksat];
                for (int c = 0; c < sm.cols; ++c)
                    for (const auto& [r, v] : sm.col[c])
                        C.at((int)(r0 + r), (int)((long long)g * block + c)) =
                            negate ? K.neg(v) : v;
            };
            Monomial w_mono = rels.monos[w];
            place(i, w_mono / Monomial::var(n, i), false);
            place(j, w_mono / Monomial::var(n, j), true);
            r0 += rel_block;
        }
        hom_dim = unknowns - C.rank(K);
    }
    // Natural map u -> (m * u)_m lands inside Hom; its rank is measured on
    // the stacked coordinates directly.
    long long dim_t = M.dim(t);
    long long img_rank = 0;
    if (dim_t > 0) {
        DenseMatrix<F> img(K, (int)dim_t, (int)unknowns);
        for (int g = 0; g < gens.size(); ++g) {
            const auto& P = path[Ksat][g];
            for (int r = 0; r < P.rows(); ++r)
                for (int c = 0; c < P.cols(); ++c)
                    img.at(c, (int)((long long)g * block + r)) = P.at(r, c);
        }
        img_rank = img.rank(K);
    }
    return hom_dim - img_rank;
}

} // namespace detail

/// end(H^1_n(M)) over internal degrees t in [0, cutoff] via the saturation
/// exact sequence, with a K vs K+1 stability check per degree. The default
/// saturation power is nmaps + cutoff - t.
template <class F>
CohEndReport h1_end(const StrandModule<F>& M, std::optional<int> K_opt, int cutoff) {
    if (cutoff < 0) throw InputError("h1_end: cutoff must be >= 0");
    int n = M.nmaps;
    CohEndReport rep;
    rep.end_h0 = h0_end(M).end;
    bool all_known = true, all_stable = true;
    std::vector<long long> h1(cutoff + 1, -1);
    int maxK = 0;
    for (int t = 0; t <= cutoff; ++t) {
        int Ksat = K_opt ? *K_opt : (n + cutoff - t);
        if (t + Ksat + 1 > M.horizon) {
            all_known = false;
            continue;
        }
        long long c1 = detail::saturation_coker_dim(M, t, Ksat);
        maxK = std::max(maxK, Ksat);
        if (t + Ksat + 2 <= M.horizon) {
            long long c2 = detail::saturation_coker_dim(M, t, Ksat + 1);
            if (c2 != c1) all_stable = false;
            maxK = std::max(maxK, Ksat + 1);
        } else {
            all_stable = false;
        }
        h1[t] = c1;
    }
    rep.saturation_power = maxK;
    int last = -1;
    bool unknown_above = false;
    for (int t = 0; t <= cutoff; ++t) {
        if (h1[t] > 0) last = t;
    }
    for (int t = std::max(last + 1, 0); t <= cutoff; ++t)
        if (h1[t] < 0) unknown_above = true;
    bool window_clear = cutoff + 1 >= n;
    for (int t = cutoff - n + 1; t <= cutoff && window_clear; ++t)
        if (t < 0 || h1[t] != 0) window_clear = false;
    if (last < 0) {
        rep.end_h1 = all_known ? ExtInt::neg_inf() : ExtInt::unknown();
        rep.certified = all_known && all_stable && window_clear;
    } else if (!unknown_above && window_clear) {
        rep.end_h1 = ExtInt::exact(last);
        rep.certified = all_stable;
    } else {
        rep.end_h1 = ExtInt::at_least(last);
        rep.certified = false;
    }
    return rep;
}

/// end(H^1_n) of a Rees strand via the ambient exact sequence: in internal
/// degrees t >= 0 and n >= 2, H^1_n(M)_t is the torsion of the quotient
/// strand, which is the whole quotient strand once its tail vanishes.
template <class F>
CohEndReport rees_h1_end(PowerCache<F>& cache, const Reduction<F>& J, int mu, int cutoff) {
    const int n = cache.ring().nvars();
    if (n < 2) {
        auto M = build_strand(cache, J, mu, cutoff + n + 3, StrandModule<F>::Kind::Rees);
        return h1_end(M, std::nullopt, cutoff);
    }
    int Tq = cutoff + n;
    auto Q = build_strand(cache, J, mu, Tq, StrandModule<F>::Kind::Quotient);
    CohEndReport rep;
    rep.end_h0 = ExtInt::neg_inf(); // Rees strands are torsion-free
    rep.saturation_power = 0;
    int last = -1;
    for (int t = 0; t <= Tq; ++t)
        if (Q.dim(t) > 0) last = t;
    bool tail_vanished = last <= Tq - n;
    if (tail_vanished) {
        rep.end_h1 = last < 0 ? ExtInt::neg_inf() : ExtInt::exact(last);
        rep.certified = true;
    } else {
        // The quotient strand has not died within the horizon, so its
        // torsion part is not pinned down: nothing can be asserted.
        rep.end_h1 = ExtInt::unknown();
        rep.certified = false;
    }
    return rep;
}

/// Degree of the eventual polynomial t -> dim M_t by finite differences:
/// the smallest order whose difference sequence is constant on a trailing
/// window of nmaps+1 values. An eventually-zero sequence reports -1. Raises
/// the infinite-regularity flag for a Rees strand whose T-variable count is
/// below the ambient variable count while the growth is full.
inline GrowthReport growth_of_dims(const std::vector<long long>& dims, int nmaps, int nvars, bool rees_kind) {
    int T = (int)dims.size() - 1;
    int n = nmaps;
    if (T + 1 < n + 2) throw InputError("growth_degree: need at least nmaps+2 piece dimensions");
    GrowthReport rep;
    int W = n + 1;
    std::vector<long long> seq = dims;
    bool tail_zero = true;
    for (int t = T - W + 1; t <= T; ++t)
        if (t < 0 || seq[t] != 0) tail_zero = false;
    if (tail_zero) {
        rep.degree = -1;
        return rep;
    }
    for (int r = 0; (int)seq.size() >= W; ++r) {
        bool constant = true;
        for (size_t i = seq.size() - W; i + 1 < seq.size(); ++i)
            if (seq[i] != seq[i + 1]) constant = false;
        if (constant) {
            rep.degree = r;
            break;
        }
        for (size_t i = 0; i + 1 < seq.size(); ++i) seq[i] = seq[i + 1] - seq[i];
        seq.pop_back();
    }
    if (rep.degree && rees_kind && n < nvars && *rep.degree == nvars - 1) rep.infinite_reg = true;
    return rep;
}

template <class F>
GrowthReport growth_degree(const StrandModule<F>& M) {
    return growth_of_dims(M.dims, M.nmaps, M.ring.nvars(), M.kind == StrandModule<F>::Kind::Rees);
}

} // namespace regstab
