#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "regstab/monomial.hpp"

namespace regstab {

/// Sparse polynomial over field F: terms in strictly descending degrevlex
/// order, no zero coefficients stored.
template <class F>
class Polynomial {
public:
    struct Term {
        Monomial mono;
        typename F::Elem coef;
    };

    Polynomial() = default;

    /// Build from arbitrary (monomial, coefficient) pairs; merges and sorts.
    static Polynomial from_terms(const F& K, std::vector<Term> terms) {
        std::sort(terms.begin(), terms.end(),
                  [](const Term& a, const Term& b) { return degrevlex_less(b.mono, a.mono); });
        Polynomial p;
        for (auto& t : terms) {
            if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
                p.terms_.back().coef = K.add(p.terms_.back().coef, t.coef);
            } else {
                p.terms_.push_back(std::move(t));
            }
        }
        p.strip_zeros(K);
        return p;
    }

    static Polynomial monomial(const F& K, Monomial m, typename F::Elem c) {
        Polynomial p;
        if (!K.is_zero(c)) p.terms_.push_back(Term{m, c});
        return p;
    }
    static Polynomial zero() { return Polynomial(); }

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }

    const Monomial& lead_mono() const { return terms_.front().mono; }
    const typename F::Elem& lead_coef() const { return terms_.front().coef; }

    bool is_homogeneous() const {
        for (const auto& t : terms_)
            if (t.mono.deg != terms_.front().mono.deg) return false;
        return true;
    }
    /// Total degree of the lead term (max degree); -1 for the zero polynomial.
    int degree() const { return terms_.empty() ? -1 : (int)terms_.front().mono.deg; }
    /// Common degree of a homogeneous polynomial, nullopt otherwise.
    std::optional<int> homogeneous_degree() const {
        if (terms_.empty() || !is_homogeneous()) return std::nullopt;
        return (int)terms_.front().mono.deg;
    }

    bool equals(const F& K, const Polynomial& o) const {
        if (terms_.size() != o.terms_.size()) return false;
        for (size_t i = 0; i < terms_.size(); ++i)
            if (terms_[i].mono != o.terms_[i].mono || !K.eq(terms_[i].coef, o.terms_[i].coef)) return false;
        return true;
    }

    Polynomial add(const F& K, const Polynomial& o) const { return merge(K, o, false); }
    Polynomial sub(const F& K, const Polynomial& o) const { return merge(K, o, true); }

    Polynomial scaled(const F& K, const typename F::Elem& c) const {
        Polynomial r;
        if (K.is_zero(c)) return r;
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) r.terms_.push_back(Term{t.mono, K.mul(t.coef, c)});
        return r;
    }
    Polynomial times_monomial(const F& K, const Monomial& m, const typename F::Elem& c) const {
        Polynomial r;
        if (K.is_zero(c)) return r;
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) r.terms_.push_back(Term{t.mono * m, K.mul(t.coef, c)});
        return r;
    }
    Polynomial monic(const F& K) const {
        if (is_zero()) return *this;
        return scaled(K, K.inv(lead_coef()));
    }

    Polynomial mul(const F& K, const Polynomial& o) const {
        Polynomial acc;
        for (const auto& t : o.terms_) acc = acc.add(K, times_monomial(K, t.mono, t.coef));
        return acc;
    }

    Polynomial pow(const F& K, int e) const {
        Polynomial r = Polynomial::monomial(K, Monomial::one(terms_.empty() ? 1 : terms_[0].mono.nvars), K.one());
        for (int i = 0; i < e; ++i) r = r.mul(K, *this);
        return r;
    }

    /// Coefficient of monomial m (zero if absent); binary search on the order.
    typename F::Elem coef_of(const F& K, const Monomial& m) const {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [](const Term& t, const Monomial& mm) {
            return degrevlex_less(mm, t.mono);
        });
        if (it != terms_.end() && it->mono == m) return it->coef;
        return K.zero();
    }

    std::string str(const F& K, const std::vector<std::string>& vars) const {
        if (terms_.empty()) return "0";
        std::string s;
        for (size_t i = 0; i < terms_.size(); ++i) {
            if (i) s += " + ";
            const auto& t = terms_[i];
            std::string cs = K.to_string(t.coef);
            if (t.mono.is_one()) {
                s += cs;
            } else if (cs == "1") {
                s += t.mono.str(vars);
            } else {
                s += cs + "*" + t.mono.str(vars);
            }
        }
        return s;
    }

private:
    Polynomial merge(const F& K, const Polynomial& o, bool subtract) const {
        Polynomial r;
        r.terms_.reserve(terms_.size() + o.terms_.size());
        size_t i = 0, j = 0;
        while (i < terms_.size() && j < o.terms_.size()) {
            Ordering c = compare_degrevlex(terms_[i].mono, o.terms_[j].mono);
            if (c == Ordering::Greater) {
                r.terms_.push_back(terms_[i++]);
            } else if (c == Ordering::Less) {
                auto t = o.terms_[j++];
                if (subtract) t.coef = K.neg(t.coef);
                r.terms_.push_back(std::move(t));
            } else {
                auto c2 = subtract ? K.sub(terms_[i].coef, o.terms_[j].coef)
                                   : K.add(terms_[i].coef, o.terms_[j].coef);
                if (!K.is_zero(c2)) r.terms_.push_back(Term{terms_[i].mono, c2});
                ++i, ++j;
            }
        }
        for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
        for (; j < o.terms_.size(); ++j) {
            auto t = o.terms_[j];
            if (subtract) t.coef = K.neg(t.coef);
            r.terms_.push_back(std::move(t));
        }
        return r;
    }

    void strip_zeros(const F& K) {
        terms_.erase(std::remove_if(terms_.begin(), terms_.end(),
                                    [&](const Term& t) { return K.is_zero(t.coef); }),
                     terms_.end());
    }

    std::vector<Term> terms_;
};

} // namespace regstab
