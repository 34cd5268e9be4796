#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace regstab {

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
/// A computed value contradicts a proved bound. This is either an
/// implementation bug or a genuine counterexample; it is never swallowed.
struct TheoremViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};
/// A computation would exceed the desk-scale resource envelope (dense
/// matrices too large, horizons exhausted). Callers may degrade to an
/// uncertified result instead of aborting.
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline bool is_prime_u32(uint32_t n) {
    if (n < 2) return false;
    for (uint64_t q = 2; q * q <= n; ++q)
        if (n % q == 0) return false;
    return true;
}

/// Runtime description of the coefficient field (what an input file declares).
struct FieldSpec {
    enum class Kind { Prime, Rationals };
    Kind kind = Kind::Prime;
    uint32_t p = 32003;

    static FieldSpec prime(uint32_t p) {
        if (!is_prime_u32(p)) throw InputError("field characteristic " + std::to_string(p) + " is not prime");
        if (p >= (1u << 31)) throw InputError("field characteristic too large (must be < 2^31)");
        return FieldSpec{Kind::Prime, p};
    }
    static FieldSpec rationals() { return FieldSpec{Kind::Rationals, 0}; }

    bool operator==(const FieldSpec& o) const { return kind == o.kind && (kind == Kind::Rationals || p == o.p); }

    std::string str() const { return kind == Kind::Rationals ? "Q" : "Fp " + std::to_string(p); }
};

/// Prime field F_p with p < 2^31. Elements are canonical representatives in
/// [0, p); all products fit in uint64.
class FpField {
public:
    using Elem = uint32_t;
    static constexpr bool is_prime_field = true;

    FpField() : p_(32003) {}
    explicit FpField(uint32_t p) : p_(p) {
        if (!is_prime_u32(p) || p >= (1u << 31)) throw InputError("bad prime field characteristic");
    }

    uint32_t characteristic() const { return p_; }

    Elem zero() const { return 0; }
    Elem one() const { return 1 % p_; }
    bool is_zero(Elem a) const { return a == 0; }
    bool eq(Elem a, Elem b) const { return a == b; }

    Elem add(Elem a, Elem b) const {
        uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
    Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
    Elem mul(Elem a, Elem b) const { return static_cast<Elem>((uint64_t)a * b % p_); }
    Elem inv(Elem a) const {
        if (a == 0) throw DomainError("inverse of zero");
        // extended Euclid on (a, p)
        int64_t t = 0, newt = 1, r = p_, newr = a;
        while (newr != 0) {
            int64_t q = r / newr;
            int64_t tmp = t - q * newt;
            t = newt; newt = tmp;
            tmp = r - q * newr;
            r = newr; newr = tmp;
        }
        if (t < 0) t += p_;
        return static_cast<Elem>(t);
    }
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

    Elem from_int(long long v) const {
        long long r = v % (long long)p_;
        if (r < 0) r += p_;
        return static_cast<Elem>(r);
    }
    Elem from_bigint(const boost::multiprecision::cpp_int& v) const {
        boost::multiprecision::cpp_int r = v % p_;
        if (r < 0) r += p_;
        return static_cast<Elem>(r.convert_to<uint32_t>());
    }

    std::string to_string(Elem a) const { return std::to_string(a); }
    FieldSpec spec() const { return FieldSpec{FieldSpec::Kind::Prime, p_}; }

    bool operator==(const FpField& o) const { return p_ == o.p_; }

private:
    uint32_t p_;
};

/// The rationals with arbitrary-precision numerator/denominator. Exact and
/// slow; intended for small instances and cross-checks.
class RatField {
public:
    using Elem = boost::multiprecision::cpp_rational;
    static constexpr bool is_prime_field = false;

    Elem zero() const { return Elem(0); }
    Elem one() const { return Elem(1); }
    bool is_zero(const Elem& a) const { return a == 0; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }

    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem inv(const Elem& a) const {
        if (a == 0) throw DomainError("inverse of zero");
        return 1 / a;
    }
    Elem div(const Elem& a, const Elem& b) const {
        if (b == 0) throw DomainError("division by zero");
        return a / b;
    }

    Elem from_int(long long v) const { return Elem(v); }
    Elem from_bigint(const boost::multiprecision::cpp_int& v) const { return Elem(v); }

    std::string to_string(const Elem& a) const {
        if (boost::multiprecision::denominator(a) == 1)
            return boost::multiprecision::numerator(a).str();
        return boost::multiprecision::numerator(a).str() + "/" + boost::multiprecision::denominator(a).str();
    }
    FieldSpec spec() const { return FieldSpec::rationals(); }

    bool operator==(const RatField&) const { return true; }
};

} // namespace regstab
