// Graded-trace assembly of a cobordism word into the summed
// Seiberg-Witten invariant, plus the generating-series sweeps and the
// Alexander-style cross-check.

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "swtqft/cobordism.hpp"
#include "swtqft/rational.hpp"

namespace swtqft {

/// Result of one trace computation.  `value` is the sum of SW invariants
/// over all Spin-c structures glued from the word's data; it is never
/// split into per-structure values.  The sign convention is the one fixed
/// by our basis; the underlying theory leaves one global sign free.
struct InvariantReport {
    CobordismWord word;
    std::vector<std::pair<int, long long>> k_trail;
    Integer value = 0;
    bool empty = false;
    std::vector<std::string> warnings;
};

/// Trace of compose_word(word), asserted integral (IntegralityError on
/// violation: that is an engine bug, not bad input).
InvariantReport sw_sum(const CobordismWord& word);

/// sw_sum swept over d in [d_min, d_max] with the template's chamber and
/// moves; one flux serves the whole sweep (d_max + 1 in chamber +,
/// d_min - 1 in chamber -).  Sweep entries are computed in parallel.
std::vector<std::pair<long long, Integer>> sw_series(
    const CobordismWord& word_template, long long d_min, long long d_max);

struct AlexanderCheck {
    bool ok = false;
    std::vector<Rational> lhs;  // (sum_k trace_k t^k) * (1-t)^2, truncated
    std::vector<Rational> rhs;  // det(I - tM), zero-padded
};

/// Verifies sum_k graded_trace(induced_map(M, Sym^k)) t^k * (1-t)^2
/// == det(I - tM) exactly through degree k_max (requires k_max >= 2g).
/// The left side is computed on the invariant path (basis enumeration),
/// the right side from the characteristic polynomial.
AlexanderCheck alexander_check(const SpMatrix& m, long long k_max);

}  // namespace swtqft
