#pragma once

#include <cstdint>
#include <string>

#include "mukai/exterior.hpp"
#include "mukai/orbit.hpp"

namespace mukai {

struct ScenarioOptions {
    int degree_cap;   // default 2g
    long max_rounds;  // 0 = ambient dimension bound + 1
    uint64_t seed;    // drives word sampling in certificates

    friend bool operator==(const ScenarioOptions &a, const ScenarioOptions &b)
    {
        return a.degree_cap == b.degree_cap && a.max_rounds == b.max_rounds && a.seed == b.seed;
    }
    friend bool operator!=(const ScenarioOptions &a, const ScenarioOptions &b) { return !(a == b); }
};

/// Declarative input: model parameters, the cycle whose orbit is studied,
/// the semigroup generators, and run options. All shapes are validated at
/// parse time.
struct Scenario {
    ModelSpec model;
    PicClass cycle;
    GeneratorSet generators;
    ScenarioOptions options;

    long resolved_max_rounds() const;

    friend bool operator==(const Scenario &a, const Scenario &b);
    friend bool operator!=(const Scenario &a, const Scenario &b) { return !(a == b); }
};

/// Parses the JSON scenario schema:
///   { "model": {"g", "d", "rho"},
///     "cycle": {"ns": [[quad]], "pic0": [[quad]]},
///     "generators": [{"type": "endo", "matrix": [[quad]]} |
///                    {"type": "translation", "point": [[quad]]}],
///     "options": {"degree"?, "max_rounds"?, "seed"?} }
/// where quad = [re_num, re_den, im_num, im_den], integers (decimal strings
/// accepted and emitted when a value exceeds 64 bits). Throws Error with
/// codes "schema", "non-hermitian", "d-mismatch", "bad-shape", "bad-model".
Scenario parse_scenario(const std::string &text);

/// Canonical serialization; parse(serialize(s)) == s, byte-stable.
std::string serialize_scenario(const Scenario &s);

/// Built-in generator shapes:
///   endo-only        group endomorphisms, no translations
///   fg-translations  a finite translation basis, no endomorphisms
///   semidirect       both of the above
///   number-field     the full endomorphism matrix basis plus the
///                    Mordell-Weil point basis
/// The cycle is the principal polarization class (identity Hermitian
/// matrix, zero Pic^0 part).
Scenario make_preset(const std::string &name, int g = 1, int d = 0, int rho = 1);

/// Parses the tiny class-expression grammar
///   expr := term (('+'|'-') term)*
///   term := rational? atom ('^' atom)*
///   atom := generator label, e.g. e1 or f2
///   rational := INT ('/' INT)?
/// onto the given ground space. A bare rational is accepted as a scalar
/// term. Errors carry line and column.
Multivector parse_class_expr(const std::string &text, const Ground &ground);

} // namespace mukai
