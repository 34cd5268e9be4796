#pragma once

#include <set>
#include <string>
#include <variant>
#include <vector>

#include "regstab/polynomial.hpp"

namespace regstab {

/// Ambient standard graded polynomial ring: coefficient field + variables.
template <class F>
struct Ring {
    F field;
    std::vector<std::string> vars;

    int nvars() const { return static_cast<int>(vars.size()); }

    bool same_as(const Ring& o) const { return field == o.field && vars == o.vars; }
};

/// A graded ideal given by homogeneous nonzero generators.
template <class F>
struct IdealSpec {
    Ring<F> ring;
    std::vector<Polynomial<F>> gens;

    /// Validates the structural invariants: >= 1 variable, distinct names,
    /// all generators homogeneous nonzero with matching variable counts.
    void validate() const {
        Monomial::check_nvars(ring.nvars());
        std::set<std::string> seen;
        for (const auto& v : ring.vars) {
            if (v.empty()) throw InputError("empty variable name");
            if (!seen.insert(v).second) throw InputError("duplicate variable '" + v + "'");
        }
        // An empty generator list is legal (the zero ideal, e.g. from a
        // degree filter); input files require at least one generator.
        for (size_t i = 0; i < gens.size(); ++i) {
            const auto& g = gens[i];
            if (g.is_zero()) throw InputError("generator " + std::to_string(i + 1) + " is zero");
            for (const auto& t : g.terms())
                if (t.mono.nvars != ring.nvars())
                    throw InputError("generator " + std::to_string(i + 1) + " has wrong variable count");
            if (!g.is_homogeneous()) {
                std::set<int> degs;
                for (const auto& t : g.terms()) degs.insert((int)t.mono.deg);
                std::string ds;
                for (int d : degs) ds += (ds.empty() ? "" : ",") + std::to_string(d);
                throw InputError("generator " + std::to_string(i + 1) + " is not homogeneous: term degrees {" + ds + "}");
            }
        }
    }

    int min_gen_degree() const {
        int m = gens.front().degree();
        for (const auto& g : gens) m = std::min(m, g.degree());
        return m;
    }
    int max_gen_degree() const {
        int m = gens.front().degree();
        for (const auto& g : gens) m = std::max(m, g.degree());
        return m;
    }
};

using FpIdeal = IdealSpec<FpField>;
using QIdeal = IdealSpec<RatField>;
using AnyIdeal = std::variant<FpIdeal, QIdeal>;

inline FieldSpec field_spec_of(const AnyIdeal& I) {
    return std::visit([](const auto& i) { return i.ring.field.spec(); }, I);
}

} // namespace regstab
