#pragma once

#include <cassert>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>

namespace regstab {

/// Degree-like quantity that may be -inf (zero module), +inf, an exact
/// integer, a lower bound ">= b" (a nonzero value was seen at b but the scan
/// hit the horizon), or undetermined (the scan settled nothing).
class ExtInt {
public:
    enum class Kind { NegInf, Exact, AtLeast, PosInf, Unknown };

    ExtInt() : kind_(Kind::NegInf), value_(0) {}

    static ExtInt neg_inf() { return ExtInt(Kind::NegInf, 0); }
    static ExtInt pos_inf() { return ExtInt(Kind::PosInf, 0); }
    static ExtInt exact(long long v) { return ExtInt(Kind::Exact, v); }
    static ExtInt at_least(long long v) { return ExtInt(Kind::AtLeast, v); }
    static ExtInt unknown() { return ExtInt(Kind::Unknown, 0); }

    Kind kind() const { return kind_; }
    bool is_neg_inf() const { return kind_ == Kind::NegInf; }
    bool is_pos_inf() const { return kind_ == Kind::PosInf; }
    bool is_exact() const { return kind_ == Kind::Exact; }
    bool is_at_least() const { return kind_ == Kind::AtLeast; }
    bool is_unknown() const { return kind_ == Kind::Unknown; }

    /// Exact value; only valid for Kind::Exact.
    long long value() const {
        assert(kind_ == Kind::Exact);
        return value_;
    }
    /// Known lower bound (for Exact and AtLeast).
    long long bound() const {
        assert(kind_ == Kind::Exact || kind_ == Kind::AtLeast);
        return value_;
    }

    /// Shift by a constant: -inf + c = -inf, (>= b) + c = (>= b + c).
    ExtInt plus(long long c) const {
        switch (kind_) {
        case Kind::NegInf:
        case Kind::PosInf:
        case Kind::Unknown: return *this;
        default: return ExtInt(kind_, value_ + c);
        }
    }

    bool operator==(const ExtInt& o) const {
        return kind_ == o.kind_ &&
               (kind_ == Kind::NegInf || kind_ == Kind::PosInf || kind_ == Kind::Unknown || value_ == o.value_);
    }
    bool operator!=(const ExtInt& o) const { return !(*this == o); }

    /// <=, treating both sides as exact where possible. Returns nullopt when
    /// the comparison cannot be decided (an Unknown, or an AtLeast on the
    /// wrong side).
    static std::optional<bool> le(const ExtInt& a, const ExtInt& b) {
        if (a.is_unknown() || b.is_unknown()) return std::nullopt;
        if (a.is_neg_inf() || b.is_pos_inf()) return true;
        if (a.is_pos_inf()) return false;
        if (b.is_neg_inf()) return false;
        if (a.is_exact() && b.is_exact()) return a.value_ <= b.value_;
        if (a.is_at_least() && (b.is_exact() || b.is_at_least())) {
            // a >= a.bound; if a.bound > b's exact value the inequality fails.
            if (b.is_exact() && a.value_ > b.value_) return false;
            return std::nullopt;
        }
        // a exact, b at-least: a <= b holds if a <= b.bound, else unknown.
        if (a.value_ <= b.value_) return true;
        return std::nullopt;
    }

    /// Equality as a decidable predicate; nullopt when either side carries
    /// only partial information.
    static std::optional<bool> eq(const ExtInt& a, const ExtInt& b) {
        if (a.is_unknown() || b.is_unknown()) return std::nullopt;
        if (a.is_at_least() || b.is_at_least()) {
            if (a.is_exact() && b.is_at_least() && a.value_ < b.value_) return false;
            if (b.is_exact() && a.is_at_least() && b.value_ < a.value_) return false;
            if (a.is_neg_inf() || b.is_neg_inf()) return false;
            return std::nullopt;
        }
        return a == b;
    }

    static ExtInt max(const ExtInt& a, const ExtInt& b) {
        if (a.is_unknown() || b.is_unknown()) return unknown();
        if (a.is_pos_inf() || b.is_pos_inf()) return pos_inf();
        if (a.is_neg_inf()) return b;
        if (b.is_neg_inf()) return a;
        if (a.is_exact() && b.is_exact()) return exact(std::max(a.value_, b.value_));
        return at_least(std::max(a.value_, b.value_));
    }

    std::string str() const {
        switch (kind_) {
        case Kind::NegInf: return "-inf";
        case Kind::PosInf: return "inf";
        case Kind::AtLeast: return ">=" + std::to_string(value_);
        case Kind::Unknown: return "undetermined";
        default: return std::to_string(value_);
        }
    }

private:
    ExtInt(Kind k, long long v) : kind_(k), value_(v) {}
    Kind kind_;
    long long value_;
};

} // namespace regstab
