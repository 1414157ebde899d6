// Elementary cobordism morphisms and their composition into words.
//
// Standard-position conventions: a 1-handle Sigma_g -> Sigma_{g+1}
// creates the pair (a_{g+1}, b_{g+1}) and acts by w -> b_{g+1} ^ w;
// a 2-handle Sigma_{g+1} -> Sigma_g is attached along a_{g+1} and acts
// by contraction with a_{g+1} followed by projection onto the subalgebra
// generated by e_1..e_{2g}.  Any other handle position is this one
// conjugated by a twist.

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "swtqft/rational.hpp"
#include "swtqft/surface_algebra.hpp"
#include "swtqft/symmetric_product.hpp"

namespace swtqft {

enum class Chamber { plus, minus };

char chamber_to_char(Chamber c);
Chamber chamber_from_char(char c);

/// Spin-c / perturbation data: d = (1/2)<c_1(s), Sigma>, the chamber sign,
/// and the perturbation flux eta_bar.  Requires eta_bar != d and the
/// chamber inequality (+: d < eta_bar, -: d > eta_bar).
struct SpincParams {
    long long d = 0;
    Chamber chamber = Chamber::plus;
    Rational eta_bar = 0;

    SpincParams(long long degree, Chamber ch, Rational eta);
    /// Minimal valid flux: d+1 in chamber +, d-1 in chamber -.
    static SpincParams with_default_eta(long long degree, Chamber ch);

    friend bool operator==(const SpincParams&, const SpincParams&) = default;
};

/// k(+) = (g-1) + d, k(-) = (g-1) - d.  A negative result encodes the
/// empty vortex moduli space, not an error.  Throws MorseBottError when
/// eta_bar == d.
long long vortex_degree(int genus, const SpincParams& params);

struct Move {
    enum class Kind { one_handle, two_handle, twist };

    Kind kind = Kind::one_handle;
    std::optional<SpMatrix> matrix;  // present iff kind == twist

    static Move h1() { return Move{Kind::one_handle, std::nullopt}; }
    static Move h2() { return Move{Kind::two_handle, std::nullopt}; }
    static Move twist(SpMatrix m) { return Move{Kind::twist, std::move(m)}; }

    /// +1, -1, 0.
    int genus_step() const;

    friend bool operator==(const Move&, const Move&) = default;
};

/// A composite of elementary cobordisms Sigma_{g0} -> Sigma_{g0} closed
/// up by the diffeomorphism recorded in glue.
struct CobordismWord {
    int start_genus = 0;
    SpincParams params;
    std::vector<Move> moves;
    SpMatrix glue;

    CobordismWord(int genus, SpincParams p, std::vector<Move> mv,
                  SpMatrix closing);
    static CobordismWord identity_word(int genus, SpincParams p);

    /// start_genus, then the genus after each move.  Validates underflow,
    /// twist sizes and closability; throws WordError.
    std::vector<int> genus_trail() const;

    friend bool operator==(const CobordismWord&, const CobordismWord&) =
        default;
};

/// (genus, k) at the start and after each move.
std::vector<std::pair<int, long long>> k_trail(const CobordismWord& word);

/// w -> b_{g+1} ^ w: (S,j) -> (-1)^{|S|} (S u {2g+2}, j); degree shift +1.
GradedOperator rho_one_handle(int genus, long long k);

/// Contraction with a_{g+1} then projection; arguments are the source
/// (g+1, k+1); degree shift -1.
GradedOperator rho_two_handle(int genus_plus_1, long long k_plus_1);

/// induced_map(m) on Sym(genus, k); degree shift 0.
GradedOperator rho_twist(const SpMatrix& m, int genus, long long k);

/// Composite of the moves alone (no glue, no closability requirement),
/// from Sym(start_genus, k(start)) to the trail-end space.
GradedOperator compose_moves(int start_genus, const SpincParams& params,
                             const std::vector<Move>& moves);

/// induced_map(glue) o rho_n o ... o rho_1 on the start space.  Any
/// stage with k < 0 makes the composite the zero operator.
GradedOperator compose_word(const CobordismWord& word);

/// True iff span(U) + span(V) = Q^{2g}, by exact rank computation.
/// Every vector must have length two_g.
bool check_transverse(const std::vector<std::vector<Rational>>& u,
                      const std::vector<std::vector<Rational>>& v,
                      int two_g);

}  // namespace swtqft
