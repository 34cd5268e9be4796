#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "regstab/field.hpp"

namespace regstab {

/// Hard cap on ambient variables. Instances here are desk scale (n <= 4);
/// the fixed-width exponent array keeps monomials trivially copyable.
inline constexpr int kMaxVars = 8;

/// A monomial in n variables: exponent vector plus cached total degree.
struct Monomial {
    std::array<uint16_t, kMaxVars> e{};
    uint16_t nvars = 0;
    uint32_t deg = 0;

    static Monomial one(int n) {
        check_nvars(n);
        Monomial m;
        m.nvars = static_cast<uint16_t>(n);
        return m;
    }
    static Monomial var(int n, int i, int exp = 1) {
        Monomial m = one(n);
        m.e[i] = static_cast<uint16_t>(exp);
        m.deg = exp;
        return m;
    }
    static Monomial from_exponents(const std::vector<int>& exps) {
        check_nvars(static_cast<int>(exps.size()));
        Monomial m = one(static_cast<int>(exps.size()));
        for (size_t i = 0; i < exps.size(); ++i) {
            if (exps[i] < 0) throw InputError("negative exponent");
            m.e[i] = static_cast<uint16_t>(exps[i]);
            m.deg += exps[i];
        }
        return m;
    }

    static void check_nvars(int n) {
        if (n < 1 || n > kMaxVars)
            throw InputError("variable count must be between 1 and " + std::to_string(kMaxVars));
    }

    bool operator==(const Monomial& o) const { return nvars == o.nvars && deg == o.deg && e == o.e; }
    bool operator!=(const Monomial& o) const { return !(*this == o); }

    bool is_one() const { return deg == 0; }

    Monomial operator*(const Monomial& o) const {
        Monomial r = *this;
        for (int i = 0; i < nvars; ++i) r.e[i] += o.e[i];
        r.deg += o.deg;
        return r;
    }
    bool divides(const Monomial& o) const {
        if (deg > o.deg) return false;
        for (int i = 0; i < nvars; ++i)
            if (e[i] > o.e[i]) return false;
        return true;
    }
    /// Quotient this / o; caller guarantees divisibility.
    Monomial operator/(const Monomial& o) const {
        Monomial r = *this;
        for (int i = 0; i < nvars; ++i) r.e[i] -= o.e[i];
        r.deg -= o.deg;
        return r;
    }
    Monomial lcm(const Monomial& o) const {
        Monomial r = *this;
        r.deg = 0;
        for (int i = 0; i < nvars; ++i) {
            r.e[i] = std::max(e[i], o.e[i]);
            r.deg += r.e[i];
        }
        return r;
    }
    bool coprime(const Monomial& o) const {
        for (int i = 0; i < nvars; ++i)
            if (e[i] > 0 && o.e[i] > 0) return false;
        return true;
    }
    /// True when the support is contained in variable i (pure power or 1).
    bool pure_power_of(int i) const {
        for (int j = 0; j < nvars; ++j)
            if (j != i && e[j] > 0) return false;
        return true;
    }

    std::string str(const std::vector<std::string>& vars) const {
        if (deg == 0) return "1";
        std::string s;
        for (int i = 0; i < nvars; ++i) {
            if (e[i] == 0) continue;
            if (!s.empty()) s += "*";
            s += vars[i];
            if (e[i] > 1) s += "^" + std::to_string(e[i]);
        }
        return s;
    }
};

enum class Ordering { Less = -1, Equal = 0, Greater = 1 };

/// Degrevlex: compare by total degree; ties broken reverse-lexicographically,
/// where a smaller exponent on the last differing variable wins.
inline Ordering compare_degrevlex(const Monomial& a, const Monomial& b) {
    if (a.nvars != b.nvars) throw InputError("degrevlex compare: mismatched variable counts");
    if (a.deg != b.deg) return a.deg < b.deg ? Ordering::Less : Ordering::Greater;
    for (int i = a.nvars - 1; i >= 0; --i) {
        if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? Ordering::Less : Ordering::Greater;
    }
    return Ordering::Equal;
}

inline bool degrevlex_less(const Monomial& a, const Monomial& b) {
    return compare_degrevlex(a, b) == Ordering::Less;
}

namespace detail {
// Descending degrevlex at fixed degree: smaller exponent on the last
// variable first, recursing on the leading block of variables.
inline void enumerate_rec(int n, int last, int remaining, Monomial& cur, std::vector<Monomial>& out) {
    if (last == 0) {
        cur.e[0] = static_cast<uint16_t>(remaining);
        cur.deg = 0;
        for (int i = 0; i < n; ++i) cur.deg += cur.e[i];
        out.push_back(cur);
        return;
    }
    for (int k = 0; k <= remaining; ++k) {
        cur.e[last] = static_cast<uint16_t>(k);
        enumerate_rec(n, last - 1, remaining - k, cur, out);
    }
}
} // namespace detail

/// All monomials of total degree e in n variables, in descending degrevlex
/// order. Degree < 0 yields the empty list (zero graded piece).
inline std::vector<Monomial> monomial_basis(int n, int e) {
    Monomial::check_nvars(n);
    std::vector<Monomial> out;
    if (e < 0) return out;
    Monomial cur = Monomial::one(n);
    detail::enumerate_rec(n, n - 1, e, cur, out);
    return out;
}

/// C(n, k) in exact 64-bit arithmetic; arguments stay desk scale here.
inline long long binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    long long r = 1;
    for (long long i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    return r;
}

/// dim A_e for A a polynomial ring in n variables.
inline long long dim_poly_ring_piece(int n, int e) {
    if (e < 0) return 0;
    return binomial(e + n - 1, n - 1);
}

} // namespace regstab
