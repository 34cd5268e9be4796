#pragma once

#include <algorithm>
#include <limits>
#include <map>
#include <memory>
#include <optional>

#include "regstab/ideal.hpp"

namespace regstab {

/// Total deterministic order on polynomials (degree, then lead-descending
/// term sequence, then coefficient text). Used for canonical sorting only.
template <class F>
bool poly_less(const F& K, const Polynomial<F>& a, const Polynomial<F>& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    const auto& ta = a.terms();
    const auto& tb = b.terms();
    for (size_t i = 0; i < std::min(ta.size(), tb.size()); ++i) {
        Ordering c = compare_degrevlex(ta[i].mono, tb[i].mono);
        if (c != Ordering::Equal) return c == Ordering::Greater; // bigger lead first
        if (!K.eq(ta[i].coef, tb[i].coef)) return K.to_string(ta[i].coef) < K.to_string(tb[i].coef);
    }
    return ta.size() < tb.size();
}

/// Reduced Groebner basis (degrevlex). `lead_complete_to` bounds the degrees
/// in which the lead terms are known to generate the lead ideal; nullopt
/// means the basis is a complete reduced Groebner basis.
template <class F>
struct GroebnerBasis {
    static constexpr const char* order = "degrevlex";
    IdealSpec<F> source;
    std::vector<Polynomial<F>> basis;
    std::optional<int> lead_complete_to;

    bool complete() const { return !lead_complete_to.has_value(); }
    bool complete_through(int d) const { return complete() || *lead_complete_to >= d; }

    std::vector<Monomial> lead_monomials() const {
        std::vector<Monomial> r;
        r.reserve(basis.size());
        for (const auto& g : basis) r.push_back(g.lead_mono());
        return r;
    }
};

/// Full division: remainder of f by G, every term irreducible. Divisor
/// search takes the first match in basis order, so results are deterministic.
template <class F>
Polynomial<F> reduce_full(const F& K, Polynomial<F> h, const std::vector<Polynomial<F>>& basis) {
    using Poly = Polynomial<F>;
    std::vector<typename Poly::Term> kept;
    while (!h.is_zero()) {
        const Monomial& lm = h.lead_mono();
        const Poly* div = nullptr;
        for (const auto& g : basis) {
            if (!g.is_zero() && g.lead_mono().divides(lm)) { div = &g; break; }
        }
        if (div) {
            // g monic: h -= LC(h) * (lm/LT(g)) * g
            h = h.sub(K, div->times_monomial(K, lm / div->lead_mono(), h.lead_coef()));
        } else {
            kept.push_back(h.terms().front());
            h = h.sub(K, Poly::monomial(K, lm, h.lead_coef()));
        }
    }
    return Poly::from_terms(K, std::move(kept));
}

/// Incremental homogeneous Buchberger. Inputs and S-pairs are consumed in
/// ascending degree with Gebauer-Moeller pruning (product + chain criteria);
/// after extend_to(D) the lead terms of degree <= D generate the lead ideal
/// in those degrees.
template <class F>
class BuchbergerEngine {
public:
    using Poly = Polynomial<F>;

    BuchbergerEngine(Ring<F> ring, std::vector<Poly> gens) : ring_(std::move(ring)) {
        const F& K = ring_.field;
        for (auto& g : gens) {
            if (g.is_zero()) continue;
            pending_.push_back(g.monic(K));
        }
        std::sort(pending_.begin(), pending_.end(),
                  [&](const Poly& a, const Poly& b) { return poly_less(K, a, b); });
        pending_.erase(std::unique(pending_.begin(), pending_.end(),
                                   [&](const Poly& a, const Poly& b) { return a.equals(K, b); }),
                       pending_.end());
        next_pending_ = 0;
    }

    bool complete() const { return complete_; }
    int completed_degree() const { return complete_ ? std::numeric_limits<int>::max() : done_deg_; }

    void extend_to(int D) {
        while (!complete_ && done_deg_ < D) step_degree();
    }
    void run_to_completion() {
        while (!complete_) step_degree();
    }

    const std::vector<Poly>& working_basis() const { return basis_; }

    /// Minimal generators of the lead ideal among elements of degree <= D.
    std::vector<Monomial> minimal_leads(int D) const {
        std::vector<Monomial> leads;
        for (const auto& g : basis_)
            if (g.degree() <= D) leads.push_back(g.lead_mono());
        std::sort(leads.begin(), leads.end(), degrevlex_less);
        std::vector<Monomial> min;
        for (const auto& m : leads) {
            bool dominated = false;
            for (const auto& s : min)
                if (s.divides(m)) { dominated = true; break; }
            if (!dominated) min.push_back(m);
        }
        return min;
    }

    /// Reduced basis of the elements with lead degree <= D (D = INT_MAX for
    /// everything; engine must already be complete through D).
    std::vector<Poly> reduced_basis(int D) const {
        const F& K = ring_.field;
        std::vector<Monomial> min = minimal_leads(D);
        std::vector<Poly> out;
        for (const auto& m : min) {
            for (const auto& g : basis_) {
                if (g.lead_mono() == m) { out.push_back(g); break; }
            }
        }
        // Tail-reduce each element against the others. Leads are pairwise
        // non-dividing, and homogeneity keeps self-reduction out of play.
        for (size_t i = 0; i < out.size(); ++i) {
            std::vector<Poly> others;
            others.reserve(out.size() - 1);
            for (size_t j = 0; j < out.size(); ++j)
                if (j != i) others.push_back(out[j]);
            Poly lead = Poly::monomial(K, out[i].lead_mono(), K.one());
            Poly tail = out[i].sub(K, lead);
            out[i] = lead.add(K, reduce_full(K, tail, others));
        }
        std::sort(out.begin(), out.end(),
                  [&](const Poly& a, const Poly& b) { return poly_less(K, a, b); });
        return out;
    }

private:
    struct Pair {
        int i, j;
        Monomial lcm;
    };

    static bool pair_less(const Pair& a, const Pair& b) {
        Ordering c = compare_degrevlex(a.lcm, b.lcm);
        if (c != Ordering::Equal) return c == Ordering::Less;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    }

    void step_degree() {
        const F& K = ring_.field;
        int deg = done_deg_ + 1;
        // Incorporate inputs of this degree first.
        while (next_pending_ < pending_.size() && pending_[next_pending_].degree() == deg) {
            Poly h = reduce_full(K, pending_[next_pending_], basis_);
            pending_[next_pending_] = Poly();
            ++next_pending_;
            if (!h.is_zero()) add_element(h.monic(K));
        }
        // Then the S-pairs whose lcm has this degree. New pairs created while
        // adding elements always live in strictly higher degree.
        std::vector<Pair> todo;
        {
            auto it = std::partition(pairs_.begin(), pairs_.end(),
                                     [&](const Pair& p) { return (int)p.lcm.deg != deg; });
            todo.assign(it, pairs_.end());
            pairs_.erase(it, pairs_.end());
        }
        std::sort(todo.begin(), todo.end(), pair_less);
        for (const auto& p : todo) {
            Poly s = spoly(p);
            Poly h = reduce_full(K, s, basis_);
            if (!h.is_zero()) add_element(h.monic(K));
        }
        done_deg_ = deg;
        if (next_pending_ >= pending_.size() && pairs_.empty()) {
            complete_ = true;
            pending_.clear();
        }
    }

    Poly spoly(const Pair& p) const {
        const F& K = ring_.field;
        const Poly& f = basis_[p.i];
        const Poly& g = basis_[p.j];
        Poly a = f.times_monomial(K, p.lcm / f.lead_mono(), K.one());
        Poly b = g.times_monomial(K, p.lcm / g.lead_mono(), K.one());
        return a.sub(K, b);
    }

    void add_element(Poly h) {
        int s = static_cast<int>(basis_.size());
        const Monomial& us = h.lead_mono();

        // Gebauer-Moeller update of the pending pair set.
        std::vector<Pair> fresh;
        fresh.reserve(basis_.size());
        for (int i = 0; i < s; ++i) fresh.push_back(Pair{i, s, basis_[i].lead_mono().lcm(us)});

        // Chain criterion among the new pairs: drop (i,s) when another new
        // pair's lcm strictly divides its lcm.
        std::vector<char> drop(fresh.size(), 0);
        for (size_t a = 0; a < fresh.size(); ++a) {
            for (size_t b = 0; b < fresh.size(); ++b) {
                if (a == b || drop[a]) continue;
                if (fresh[b].lcm != fresh[a].lcm && fresh[b].lcm.divides(fresh[a].lcm)) drop[a] = 1;
            }
        }
        // Within an equal-lcm class keep one pair, preferring a coprime pair
        // (the whole class then dies by the product criterion).
        for (size_t a = 0; a < fresh.size(); ++a) {
            if (drop[a]) continue;
            bool class_has_coprime = false;
            size_t keep = a;
            for (size_t b = a; b < fresh.size(); ++b) {
                if (drop[b] || fresh[b].lcm != fresh[a].lcm) continue;
                if (basis_[fresh[b].i].lead_mono().coprime(us)) class_has_coprime = true;
            }
            for (size_t b = a; b < fresh.size(); ++b) {
                if (fresh[b].lcm != fresh[a].lcm || drop[b]) continue;
                if (b != keep) drop[b] = 1;
            }
            if (class_has_coprime) drop[keep] = 1;
        }
        // Update the old pairs (chain criterion with the new element).
        std::vector<Pair> kept_old;
        kept_old.reserve(pairs_.size());
        for (const auto& p : pairs_) {
            const Monomial& li = basis_[p.i].lead_mono();
            const Monomial& lj = basis_[p.j].lead_mono();
            if (us.divides(p.lcm) && li.lcm(us) != p.lcm && lj.lcm(us) != p.lcm) continue;
            kept_old.push_back(p);
        }
        pairs_ = std::move(kept_old);
        for (size_t a = 0; a < fresh.size(); ++a)
            if (!drop[a]) pairs_.push_back(fresh[a]);

        basis_.push_back(std::move(h));
    }

    Ring<F> ring_;
    std::vector<Poly> pending_; // inputs not yet incorporated, ascending degree
    size_t next_pending_ = 0;
    std::vector<Poly> basis_;
    std::vector<Pair> pairs_;
    int done_deg_ = -1;
    bool complete_ = false;
};

// ---------------------------------------------------------------------------
// Ideal-level operations
// ---------------------------------------------------------------------------

/// Complete reduced degrevlex Groebner basis.
template <class F>
GroebnerBasis<F> groebner(const IdealSpec<F>& I) {
    I.validate();
    BuchbergerEngine<F> eng(I.ring, I.gens);
    eng.run_to_completion();
    return GroebnerBasis<F>{I, eng.reduced_basis(std::numeric_limits<int>::max()), std::nullopt};
}

/// Remainder of full reduction; zero iff f lies in the ideal.
template <class F>
Polynomial<F> normal_form(const Polynomial<F>& f, const GroebnerBasis<F>& G) {
    if (!G.complete_through(f.degree()))
        throw InputError("normal_form: basis truncated below the degree of f");
    return reduce_full(G.source.ring.field, f, G.basis);
}

/// I^t, generated by all t-fold products of the given generators
/// (multiset combinations, deduplicated). Shared prefixes are reused.
template <class F>
IdealSpec<F> ideal_power(const IdealSpec<F>& I, int t) {
    if (t <= 0) throw InputError("ideal_power: exponent must be >= 1");
    I.validate();
    const F& K = I.ring.field;
    std::vector<Polynomial<F>> out;
    std::vector<Polynomial<F>> stack;
    // DFS over non-decreasing index multisets, sharing partial products.
    auto rec = [&](auto&& self, size_t first, int remaining, const Polynomial<F>& acc) -> void {
        if (remaining == 0) {
            out.push_back(acc);
            return;
        }
        for (size_t i = first; i < I.gens.size(); ++i)
            self(self, i, remaining - 1, acc.mul(K, I.gens[i]));
    };
    Polynomial<F> one = Polynomial<F>::monomial(K, Monomial::one(I.ring.nvars()), K.one());
    rec(rec, 0, t, one);
    std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) { return poly_less(K, a, b); });
    out.erase(std::unique(out.begin(), out.end(), [&](const auto& a, const auto& b) { return a.equals(K, b); }),
              out.end());
    return IdealSpec<F>{I.ring, std::move(out)};
}

/// Zero-dimensionality test: every variable carries a pure power among the
/// lead terms. Requires a complete basis.
template <class F>
bool is_m_primary(const GroebnerBasis<F>& G) {
    if (!G.complete()) throw InputError("is_m_primary: requires a complete Groebner basis");
    int n = G.source.ring.nvars();
    for (int i = 0; i < n; ++i) {
        bool found = false;
        for (const auto& g : G.basis)
            if (g.lead_mono().pure_power_of(i)) { found = true; break; }
        if (!found) return false;
    }
    return true;
}

/// Variables without a pure lead-term power (witnesses for a failed
/// m-primarity test).
template <class F>
std::vector<std::string> non_primary_witnesses(const GroebnerBasis<F>& G) {
    std::vector<std::string> out;
    int n = G.source.ring.nvars();
    for (int i = 0; i < n; ++i) {
        bool found = false;
        for (const auto& g : G.basis)
            if (g.lead_mono().pure_power_of(i)) { found = true; break; }
        if (!found) out.push_back(G.source.ring.vars[i]);
    }
    return out;
}

/// (I_{<= mu}): the subideal generated by the generators of degree <= mu.
/// The result may have an empty generator list (the zero ideal).
template <class F>
IdealSpec<F> subideal_up_to_degree(const IdealSpec<F>& I, int mu) {
    IdealSpec<F> r{I.ring, {}};
    for (const auto& g : I.gens)
        if (g.degree() <= mu) r.gens.push_back(g);
    return r;
}

/// Every generator of H reduces to zero modulo G.
template <class F>
bool contains_ideal(const GroebnerBasis<F>& G, const IdealSpec<F>& H) {
    if (!G.source.ring.same_as(H.ring)) throw InputError("contains_ideal: mismatched rings");
    for (const auto& h : H.gens)
        if (!normal_form(h, G).is_zero()) return false;
    return true;
}

/// Generator-wise product of two ideals, deduplicated.
template <class F>
IdealSpec<F> ideal_product(const IdealSpec<F>& I, const IdealSpec<F>& H) {
    if (!I.ring.same_as(H.ring)) throw InputError("ideal_product: mismatched rings");
    const F& K = I.ring.field;
    std::vector<Polynomial<F>> out;
    for (const auto& a : I.gens)
        for (const auto& b : H.gens) out.push_back(a.mul(K, b));
    std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) { return poly_less(K, a, b); });
    out.erase(std::unique(out.begin(), out.end(), [&](const auto& a, const auto& b) { return a.equals(K, b); }),
              out.end());
    return IdealSpec<F>{I.ring, std::move(out)};
}

/// The ideal m^d, generated by the degree-d monomials.
template <class F>
IdealSpec<F> power_of_maximal_ideal(const Ring<F>& ring, int d) {
    IdealSpec<F> r{ring, {}};
    for (const auto& m : monomial_basis(ring.nvars(), d))
        r.gens.push_back(Polynomial<F>::monomial(ring.field, m, ring.field.one()));
    return r;
}

/// Lazily-extended Groebner data for the powers I^t of a fixed ideal.
/// Engines are extended on demand; reduced snapshots are cached per degree.
template <class F>
class PowerCache {
public:
    explicit PowerCache(IdealSpec<F> I) : I_(std::move(I)) { I_.validate(); }

    const IdealSpec<F>& ideal() const { return I_; }
    const Ring<F>& ring() const { return I_.ring; }

    /// Minimal lead-term generators of GB(I^t) valid through degree D.
    std::vector<Monomial> leads(int t, int D) {
        if (t == 0) return {Monomial::one(I_.ring.nvars())};
        State& st = state(t);
        st.engine->extend_to(D);
        return st.engine->minimal_leads(D);
    }

    /// Reduced basis usable for normal forms at degrees <= D.
    const GroebnerBasis<F>& snapshot(int t, int D) {
        State& st = state(t);
        if (t == 0) return *st.snapshot;
        st.engine->extend_to(D);
        int have = st.engine->complete() ? std::numeric_limits<int>::max() : st.engine->completed_degree();
        if (!st.snapshot || st.snapshot_deg < std::min(D, have)) {
            int snap_deg = have;
            st.snapshot = std::make_unique<GroebnerBasis<F>>(GroebnerBasis<F>{
                I_, st.engine->reduced_basis(snap_deg),
                st.engine->complete() ? std::nullopt : std::optional<int>(snap_deg)});
            st.snapshot_deg = snap_deg;
        }
        return *st.snapshot;
    }

private:
    struct State {
        std::unique_ptr<BuchbergerEngine<F>> engine;
        std::unique_ptr<GroebnerBasis<F>> snapshot;
        int snapshot_deg = -1;
    };

    State& state(int t) {
        auto it = states_.find(t);
        if (it != states_.end()) return it->second;
        State st;
        if (t == 0) {
            // unit ideal: basis {1}
            const F& K = I_.ring.field;
            auto one = Polynomial<F>::monomial(K, Monomial::one(I_.ring.nvars()), K.one());
            st.snapshot = std::make_unique<GroebnerBasis<F>>(
                GroebnerBasis<F>{IdealSpec<F>{I_.ring, {one}}, {one}, std::nullopt});
            st.snapshot_deg = std::numeric_limits<int>::max();
        } else {
            IdealSpec<F> gens = t == 1 ? I_ : ideal_power(I_, t);
            st.engine = std::make_unique<BuchbergerEngine<F>>(I_.ring, gens.gens);
        }
        return states_.emplace(t, std::move(st)).first->second;
    }

    IdealSpec<F> I_;
    std::map<int, State> states_;
};

} // namespace regstab
