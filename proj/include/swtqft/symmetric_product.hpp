// Graded cohomology of symmetric products of a surface.
//
// H^*(Sym^k Sigma) = (+)_{i=0..k} Lambda^i(H^1) (x) Sym^{k-i}(H^0 (+) H^2),
// with basis keys (S, j): S a subset of {1..2g} with |S| <= min(2g, k),
// j the exponent of the point class x, 0 <= j <= k - |S|, and degree
// |S| + 2j.  k < 0 encodes the empty moduli space (the zero vector space).

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "swtqft/rational.hpp"
#include "swtqft/surface_algebra.hpp"

namespace swtqft {

struct SymSpace {
    Surface surface;
    long long k = 0;  // vortex degree; negative = zero space

    SymSpace(Surface s, long long degree) : surface(s), k(degree) {}

    bool is_zero_space() const { return k < 0; }
    long long dimension() const;

    friend bool operator==(const SymSpace&, const SymSpace&) = default;
};

/// Basis key (S, j); ordered by (|S|, mask, j) so that operator columns
/// have a fixed layout.
struct SymKey {
    std::uint64_t mask = 0;
    long long x_exp = 0;

    int lambda_degree() const;
    long long degree() const { return lambda_degree() + 2 * x_exp; }
    std::string to_string() const;

    friend bool operator==(const SymKey&, const SymKey&) = default;
};

struct SymKeyLess {
    bool operator()(const SymKey& a, const SymKey& b) const;
};

/// Sparse class in H^*(Sym^k Sigma); keys are checked against the space
/// bounds, zero coefficients are never stored.
class SymCohClass {
  public:
    explicit SymCohClass(SymSpace space) : space_(space) {}

    const SymSpace& space() const { return space_; }
    const std::map<SymKey, Rational, SymKeyLess>& terms() const {
        return terms_;
    }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const SymKey& key, const Rational& coeff);
    Rational coefficient(const SymKey& key) const;

    SymCohClass& operator+=(const SymCohClass& other);
    SymCohClass& operator*=(const Rational& scalar);
    friend bool operator==(const SymCohClass&, const SymCohClass&) = default;

  private:
    SymSpace space_;
    std::map<SymKey, Rational, SymKeyLess> terms_;
};

/// Degree-graded linear map stored by sparse columns (missing column =
/// zero image).  degree_shift is +1 for 1-handles, -1 for 2-handles,
/// 0 for twists.
class GradedOperator {
  public:
    GradedOperator(SymSpace domain, SymSpace codomain, int degree_shift)
        : domain_(domain), codomain_(codomain), degree_shift_(degree_shift) {}

    static GradedOperator identity(SymSpace space);

    const SymSpace& domain() const { return domain_; }
    const SymSpace& codomain() const { return codomain_; }
    int degree_shift() const { return degree_shift_; }
    const std::map<SymKey, SymCohClass, SymKeyLess>& columns() const {
        return columns_;
    }

    /// Sets the image of a domain basis key; zero columns are dropped.
    void set_column(const SymKey& key, SymCohClass image);
    SymCohClass column(const SymKey& key) const;
    SymCohClass apply(const SymCohClass& v) const;

    friend bool operator==(const GradedOperator&, const GradedOperator&) =
        default;

  private:
    SymSpace domain_;
    SymSpace codomain_;
    int degree_shift_;
    std::map<SymKey, SymCohClass, SymKeyLess> columns_;
};

/// after o before, checked for space compatibility.
GradedOperator compose(const GradedOperator& after,
                       const GradedOperator& before);

/// All keys in the fixed (|S|, mask, j) order; empty iff k < 0.
std::vector<SymKey> enumerate_basis(const SymSpace& space);

/// dims[d] = #{keys of degree d}; length 2k+1 for k >= 0, empty for k < 0.
/// Computed combinatorially, not by enumeration.
std::vector<long long> betti(const SymSpace& space);

long long euler_char(const SymSpace& space);

/// Mapping-class action: sp_apply on the Lambda factor, identity on (u, x).
GradedOperator induced_map(const SpMatrix& m, const SymSpace& space);

/// sum over keys of (-1)^{|S|} (diagonal coefficient).
Rational graded_trace(const GradedOperator& op);

/// Coefficients of det(I - tM) as an integer polynomial (degree 2g).
std::vector<Integer> char_poly_reversed(const SpMatrix& m);

/// Coefficients t^0..t^{k_max} of det(I - tM) / (1-t)^2: the generating
/// series of the graded traces of the induced maps on H^*(Sym^k).
/// Validation oracle only; never used on the invariant path.
std::vector<Rational> macdonald_series(const SpMatrix& m, long long k_max);

/// Dense matrix of an operator over the enumerate_basis orders,
/// rows indexed by the codomain basis.
std::vector<std::vector<Rational>> operator_matrix(const GradedOperator& op);

}  // namespace swtqft
