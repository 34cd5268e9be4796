#pragma once

#include <random>
#include <string>
#include <vector>

#include "regstab/groebner.hpp"

namespace regstab::testing {

inline Ring<FpField> ring_fp(const std::vector<std::string>& vars, uint32_t p = 32003) {
    return Ring<FpField>{FpField(p), vars};
}

inline Monomial mono(const std::vector<int>& exps) { return Monomial::from_exponents(exps); }

/// Term-list constructor: {{coef, {exponents...}}, ...}
inline Polynomial<FpField> poly(const Ring<FpField>& R,
                                std::vector<std::pair<long long, std::vector<int>>> terms) {
    std::vector<Polynomial<FpField>::Term> ts;
    for (auto& [c, e] : terms) ts.push_back({Monomial::from_exponents(e), R.field.from_int(c)});
    return Polynomial<FpField>::from_terms(R.field, std::move(ts));
}

inline IdealSpec<FpField> ideal(const Ring<FpField>& R, std::vector<Polynomial<FpField>> gens) {
    IdealSpec<FpField> I{R, std::move(gens)};
    I.validate();
    return I;
}

/// Deterministic RNG for property tests.
struct Rng {
    std::mt19937_64 eng;
    explicit Rng(uint64_t seed) : eng(seed) {}
    uint64_t next() { return eng(); }
    int range(int lo, int hi) { return lo + (int)(next() % (uint64_t)(hi - lo + 1)); }
};

} // namespace regstab::testing
