#pragma once

#include <random>

#include "regstab/matrix.hpp"
#include "regstab/stabilization.hpp"

namespace regstab {

/// n general degree-d elements of I_d spanning an m-primary ideal J.
template <class F>
struct Reduction {
    std::vector<Polynomial<F>> gens; // g_1..g_n, all of degree d
    uint64_t seed = 0;
    int attempts = 0;

    int degree() const { return gens.empty() ? 0 : gens.front().degree(); }
};

/// Column-sparse matrix: multiplication maps have at most |g| entries per
/// column, so strands stay cheap to store at any horizon.
template <class F>
struct SparseMat {
    int rows = 0, cols = 0;
    std::vector<std::vector<std::pair<int, typename F::Elem>>> col;

    static SparseMat zero(int r, int c) {
        SparseMat m;
        m.rows = r;
        m.cols = c;
        m.col.resize(c);
        return m;
    }
    DenseMatrix<F> dense(const F& K) const {
        DenseMatrix<F> d(K, rows, cols);
        for (int c = 0; c < cols; ++c)
            for (const auto& [r, v] : col[c]) d.at(r, c) = v;
        return d;
    }
};

/// Standard/non-standard split of the degree-e monomials with respect to a
/// lead ideal, plus the normal-form table of the non-standard ones. The
/// polynomials u - NF(u), u non-standard, form a triangular basis of the
/// ideal's graded piece: coordinates are read off at non-standard positions.
template <class F>
struct DegreeSplit {
    int degree = -1;
    std::vector<Monomial> monos;     // descending degrevlex
    std::vector<int> std_index;      // per mono, or -1
    std::vector<int> ns_index;       // per mono, or -1
    std::vector<Monomial> std_monos; // descending
    std::vector<Monomial> ns_monos;  // descending
    // nf[k]: normal form of ns_monos[k] as (std index, coefficient) pairs
    std::vector<std::vector<std::pair<int, typename F::Elem>>> nf;

    int mono_index(const Monomial& m) const {
        auto it = std::lower_bound(monos.begin(), monos.end(), m,
                                   [](const Monomial& a, const Monomial& b) { return degrevlex_less(b, a); });
        if (it == monos.end() || !(*it == m)) return -1;
        return (int)(it - monos.begin());
    }
    long long std_dim() const { return (long long)std_monos.size(); }
    long long ns_dim() const { return (long long)ns_monos.size(); }
};

/// Build the split at one degree from a (possibly truncated) basis that is
/// lead-complete through that degree.
template <class F>
DegreeSplit<F> build_degree_split(const Ring<F>& ring, const GroebnerBasis<F>& G, int e) {
    const F& K = ring.field;
    DegreeSplit<F> sp;
    sp.degree = e;
    if (e < 0) return sp;
    if (!G.complete_through(e)) throw InputError("degree split: basis truncated below degree " + std::to_string(e));
    sp.monos = monomial_basis(ring.nvars(), e);
    size_t count = sp.monos.size();
    sp.std_index.assign(count, -1);
    sp.ns_index.assign(count, -1);
    for (size_t i = 0; i < count; ++i) {
        bool reducible = false;
        for (const auto& g : G.basis)
            if (g.lead_mono().divides(sp.monos[i])) { reducible = true; break; }
        if (reducible) {
            sp.ns_index[i] = (int)sp.ns_monos.size();
            sp.ns_monos.push_back(sp.monos[i]);
        } else {
            sp.std_index[i] = (int)sp.std_monos.size();
            sp.std_monos.push_back(sp.monos[i]);
        }
    }
    // One division step per non-standard monomial, processed in ascending
    // order so every lower term already has a known normal form.
    sp.nf.resize(sp.ns_monos.size());
    std::vector<typename F::Elem> acc(sp.std_monos.size(), K.zero());
    for (int i = (int)count - 1; i >= 0; --i) {
        if (sp.ns_index[i] < 0) continue;
        const Monomial& u = sp.monos[i];
        const Polynomial<F>* g = nullptr;
        for (const auto& cand : G.basis)
            if (cand.lead_mono().divides(u)) { g = &cand; break; }
        Polynomial<F> r = Polynomial<F>::monomial(K, u, K.one())
                              .sub(K, g->times_monomial(K, u / g->lead_mono(), K.one()));
        std::fill(acc.begin(), acc.end(), K.zero());
        for (const auto& term : r.terms()) {
            int idx = sp.mono_index(term.mono);
            if (sp.std_index[idx] >= 0) {
                int s = sp.std_index[idx];
                acc[s] = K.add(acc[s], term.coef);
            } else {
                for (const auto& [s, c] : sp.nf[sp.ns_index[idx]])
                    acc[s] = K.add(acc[s], K.mul(term.coef, c));
            }
        }
        auto& row = sp.nf[sp.ns_index[i]];
        for (size_t s = 0; s < acc.size(); ++s)
            if (!K.is_zero(acc[s])) row.emplace_back((int)s, acc[s]);
    }
    return sp;
}

/// Degreewise model of a graded strand over B = k[T_1..T_n]: bases of the
/// pieces and one multiplication matrix per T-variable per degree step.
template <class F>
struct StrandModule {
    enum class Kind { Rees, Quotient };

    Kind kind = Kind::Rees;
    Ring<F> ring;
    int mu = 0;
    int horizon = 0; // pieces t = 0..horizon
    int nmaps = 0;
    bool ideal_backed = false;
    std::vector<long long> dims;                  // size horizon+1
    std::vector<std::vector<Monomial>> bases;     // labels; may be empty for synthetic modules
    std::vector<std::vector<SparseMat<F>>> maps;  // maps[i][t]: piece t -> t+1

    long long dim(int t) const { return t < 0 || t > horizon ? 0 : dims[t]; }

    /// Synthetic module from dense matrices (tests and counterexamples).
    static StrandModule synthetic(const Ring<F>& ring, Kind kind, int nmaps,
                                  std::vector<long long> piece_dims,
                                  std::vector<std::vector<DenseMatrix<F>>> dense_maps) {
        StrandModule M;
        M.kind = kind;
        M.ring = ring;
        M.nmaps = nmaps;
        M.horizon = (int)piece_dims.size() - 1;
        M.dims = std::move(piece_dims);
        M.ideal_backed = false;
        M.maps.resize(nmaps);
        for (int i = 0; i < nmaps; ++i) {
            M.maps[i].resize(M.horizon);
            for (int t = 0; t < M.horizon; ++t) {
                const auto& D = dense_maps[i][t];
                auto S = SparseMat<F>::zero((int)M.dims[t + 1], (int)M.dims[t]);
                for (int c = 0; c < D.cols(); ++c)
                    for (int r = 0; r < D.rows(); ++r)
                        if (!ring.field.is_zero(D.at(r, c))) S.col[c].emplace_back(r, D.at(r, c));
                M.maps[i][t] = std::move(S);
            }
        }
        return M;
    }

    DenseMatrix<F> dense_map(int i, int t) const { return maps[i][t].dense(ring.field); }

    /// Exact commutativity of the multiplication maps, degreewise.
    bool maps_commute() const {
        const F& K = ring.field;
        for (int i = 0; i < nmaps; ++i)
            for (int j = i + 1; j < nmaps; ++j)
                for (int t = 0; t + 2 <= horizon; ++t) {
                    auto a = dense_map(j, t + 1).mul(K, dense_map(i, t));
                    auto b = dense_map(i, t + 1).mul(K, dense_map(j, t));
                    if (!a.equals(K, b)) return false;
                }
        return true;
    }
};

namespace detail {

template <class F>
SparseMat<F> rees_multiplication_matrix(const F& K, const Polynomial<F>& g, const DegreeSplit<F>& from,
                                        const DegreeSplit<F>& to) {
    auto S = SparseMat<F>::zero((int)to.ns_dim(), (int)from.ns_dim());
    for (int u = 0; u < (int)from.ns_dim(); ++u) {
        // g * (u - NF(u)); coordinates in the triangular basis of the next
        // piece are the coefficients at its non-standard monomials.
        Polynomial<F> p = g.times_monomial(K, from.ns_monos[u], K.one());
        for (const auto& [s, c] : from.nf[u])
            p = p.sub(K, g.times_monomial(K, from.std_monos[s], c));
        for (const auto& term : p.terms()) {
            int idx = to.mono_index(term.mono);
            if (idx >= 0 && to.ns_index[idx] >= 0) S.col[u].emplace_back(to.ns_index[idx], term.coef);
        }
        std::sort(S.col[u].begin(), S.col[u].end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
    }
    return S;
}

template <class F>
SparseMat<F> quotient_multiplication_matrix(const F& K, const Polynomial<F>& g, const DegreeSplit<F>& from,
                                            const DegreeSplit<F>& to) {
    auto S = SparseMat<F>::zero((int)to.std_dim(), (int)from.std_dim());
    std::vector<typename F::Elem> acc((size_t)to.std_dim(), K.zero());
    for (int s = 0; s < (int)from.std_dim(); ++s) {
        Polynomial<F> p = g.times_monomial(K, from.std_monos[s], K.one());
        std::fill(acc.begin(), acc.end(), K.zero());
        for (const auto& term : p.terms()) {
            int idx = to.mono_index(term.mono);
            if (idx < 0) continue;
            if (to.std_index[idx] >= 0) {
                acc[to.std_index[idx]] = K.add(acc[to.std_index[idx]], term.coef);
            } else {
                for (const auto& [si, c] : to.nf[to.ns_index[idx]])
                    acc[si] = K.add(acc[si], K.mul(term.coef, c));
            }
        }
        for (size_t r = 0; r < acc.size(); ++r)
            if (!K.is_zero(acc[r])) S.col[s].emplace_back((int)r, acc[r]);
    }
    return S;
}

} // namespace detail

/// Degreewise strand of the Rees module (pieces (I^t)_{mu+td}) or of
/// N = sum_t (A/I^t)(td) (pieces (A/I^t)_{mu+td}), with multiplication by
/// the reduction generators as the B-action.
template <class F>
StrandModule<F> build_strand(PowerCache<F>& cache, const Reduction<F>& J, int mu, int T,
                             typename StrandModule<F>::Kind kind) {
    const Ring<F>& ring = cache.ring();
    const F& K = ring.field;
    const int n = ring.nvars();
    if (mu <= -n) throw InputError("build_strand: offset mu must exceed -n");
    if (T < 1) throw InputError("build_strand: horizon must be >= 1");
    if ((int)J.gens.size() == 0) throw InputError("build_strand: empty reduction");
    int d = J.degree();
    for (const auto& g : J.gens)
        if (g.degree() != d) throw InputError("build_strand: reduction generators must share one degree");

    StrandModule<F> M;
    M.kind = kind;
    M.ring = ring;
    M.mu = mu;
    M.horizon = T;
    M.nmaps = (int)J.gens.size();
    M.ideal_backed = true;

    std::vector<DegreeSplit<F>> splits;
    splits.reserve(T + 1);
    for (int t = 0; t <= T; ++t) {
        int e = mu + t * d;
        splits.push_back(build_degree_split(ring, cache.snapshot(t, std::max(e, 0)), e));
    }
    bool rees = kind == StrandModule<F>::Kind::Rees;
    for (int t = 0; t <= T; ++t) {
        M.dims.push_back(rees ? splits[t].ns_dim() : splits[t].std_dim());
        M.bases.push_back(rees ? splits[t].ns_monos : splits[t].std_monos);
    }
    M.maps.resize(M.nmaps);
    for (int i = 0; i < M.nmaps; ++i) {
        M.maps[i].resize(T);
        for (int t = 0; t < T; ++t) {
            M.maps[i][t] = rees ? detail::rees_multiplication_matrix(K, J.gens[i], splits[t], splits[t + 1])
                                : detail::quotient_multiplication_matrix(K, J.gens[i], splits[t], splits[t + 1]);
        }
    }
    return M;
}

template <class F>
StrandModule<F> build_strand(const IdealSpec<F>& I, const Reduction<F>& J, int mu, int T,
                             typename StrandModule<F>::Kind kind) {
    PowerCache<F> cache(I);
    return build_strand(cache, J, mu, T, kind);
}

/// Random field elements from a seeded, reproducible generator.
class SeededRng {
public:
    SeededRng(uint64_t seed, uint64_t stream) {
        std::seed_seq seq{(uint32_t)(seed & 0xffffffffu), (uint32_t)(seed >> 32), (uint32_t)(stream & 0xffffffffu),
                          (uint32_t)(stream >> 32)};
        eng_.seed(seq);
    }
    uint64_t next() { return eng_(); }
    uint32_t mod(uint32_t p) { return (uint32_t)(eng_() % p); }

private:
    std::mt19937_64 eng_;
};

/// A basis of the graded piece I_d, reduced to row echelon form so the
/// sampled combinations are reproducible and coordinate-free.
template <class F>
std::vector<Polynomial<F>> graded_piece_basis(const IdealSpec<F>& I, int d) {
    const F& K = I.ring.field;
    auto monos = monomial_basis(I.ring.nvars(), d);
    DenseMatrix<F> rows(K, 0, (int)monos.size());
    auto index_of = [&](const Monomial& m) {
        auto it = std::lower_bound(monos.begin(), monos.end(), m,
                                   [](const Monomial& a, const Monomial& b) { return degrevlex_less(b, a); });
        return (int)(it - monos.begin());
    };
    for (const auto& g : I.gens) {
        if (g.degree() > d) continue;
        for (const auto& m : monomial_basis(I.ring.nvars(), d - g.degree())) {
            auto p = g.times_monomial(K, m, K.one());
            std::vector<typename F::Elem> row(monos.size(), K.zero());
            for (const auto& term : p.terms()) row[index_of(term.mono)] = term.coef;
            rows.append_row(row);
        }
    }
    auto pivots = rows.row_echelon(K);
    std::vector<Polynomial<F>> basis;
    for (size_t r = 0; r < pivots.size(); ++r) {
        std::vector<typename Polynomial<F>::Term> terms;
        for (int c = 0; c < rows.cols(); ++c)
            if (!K.is_zero(rows.at((int)r, c))) terms.push_back({monos[c], rows.at((int)r, c)});
        basis.push_back(Polynomial<F>::from_terms(K, std::move(terms)));
    }
    return basis;
}

/// n random coefficient combinations of a basis of I_d, retried until the
/// sampled ideal is m-primary. Deterministic in (seed, attempt).
template <class F>
Reduction<F> sample_general_reduction(const IdealSpec<F>& I, int d, uint64_t seed, int max_attempts = 32) {
    if constexpr (!F::is_prime_field) {
        throw InputError("general reductions require a prime field (use field Fp <p>)");
    } else {
        const F& K = I.ring.field;
        if (K.characteristic() < 101)
            throw InputError("general reductions need p >= 101; raise the field characteristic");
        const int n = I.ring.nvars();
        auto basis = graded_piece_basis(I, d);
        for (int attempt = 0; attempt < max_attempts; ++attempt) {
            SeededRng rng(seed, (uint64_t)attempt);
            Reduction<F> J;
            J.seed = seed;
            J.attempts = attempt + 1;
            for (int i = 0; i < n; ++i) {
                Polynomial<F> g;
                for (const auto& bp : basis) g = g.add(K, bp.scaled(K, K.from_int((long long)rng.mod(K.characteristic()))));
                J.gens.push_back(std::move(g));
            }
            bool ok = true;
            for (const auto& g : J.gens)
                if (g.is_zero() || g.degree() != d) ok = false;
            if (!ok) continue;
            IdealSpec<F> JI{I.ring, J.gens};
            if (is_m_primary(groebner(JI))) return J;
        }
        throw DomainError("sample_general_reduction: no m-primary reduction found in " +
                          std::to_string(max_attempts) + " attempts; the field may be too small (raise p)");
    }
}

} // namespace regstab
