// Exact exterior algebra on H^1 of a closed oriented surface.
//
// The basis of H^1(Sigma_g; Q) is e_1..e_{2g} with a_i = e_{2i-1},
// b_i = e_{2i} and intersection pairing <a_i, b_i> = +1.  Monomials
// e_S (S an ascending subset of {1..2g}) are stored as bitmasks; all
// coefficients are exact rationals.

#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

#include "swtqft/rational.hpp"

namespace swtqft {

/// A closed oriented genus-g surface with its fixed symplectic basis.
/// The intersection matrix Q is derived data: block-diagonal copies of
/// [[0,1],[-1,0]], never user-supplied.
struct Surface {
    int genus = 0;

    explicit Surface(int g);

    int dim() const { return 2 * genus; }

    /// <e_i, e_j> for 1-based basis indices.
    int pairing(int i, int j) const;

    /// "a1", "b1", "a2", ... for 1-based basis index.
    std::string basis_label(int index) const;

    /// The 2g x 2g matrix Q as explicit rows (mostly for tests).
    std::vector<std::vector<int>> intersection_matrix() const;

    friend bool operator==(const Surface&, const Surface&) = default;
};

inline Surface new_surface(int g) { return Surface(g); }

/// Sparse element of Lambda^*(H^1(Sigma; Q)).  Keys are subset bitmasks
/// (bit i-1 set iff e_i divides the monomial); zero coefficients are
/// never stored.
class MultiVector {
  public:
    explicit MultiVector(Surface ambient) : ambient_(ambient) {}

    static MultiVector zero(Surface ambient) { return MultiVector(ambient); }
    static MultiVector unit(Surface ambient);
    /// e_index, 1-based.
    static MultiVector basis_element(Surface ambient, int index);
    static MultiVector monomial(Surface ambient, std::uint64_t mask,
                                const Rational& coeff = 1);

    const Surface& ambient() const { return ambient_; }
    const std::map<std::uint64_t, Rational>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    /// Adds coeff * e_mask, erasing the entry if the sum cancels.
    void add_term(std::uint64_t mask, const Rational& coeff);
    Rational coefficient(std::uint64_t mask) const;

    /// -1 for the zero vector, else the common exterior degree, or throws
    /// if the element is inhomogeneous.
    int homogeneous_degree() const;
    bool is_homogeneous(int degree) const;

    MultiVector& operator+=(const MultiVector& other);
    MultiVector& operator*=(const Rational& scalar);
    friend MultiVector operator+(MultiVector lhs, const MultiVector& rhs) {
        lhs += rhs;
        return lhs;
    }
    friend MultiVector operator*(const Rational& scalar, MultiVector v) {
        v *= scalar;
        return v;
    }
    friend MultiVector operator-(MultiVector v) {
        v *= -1;
        return v;
    }
    friend bool operator==(const MultiVector&, const MultiVector&) = default;

    std::string to_string() const;

  private:
    Surface ambient_;
    std::map<std::uint64_t, Rational> terms_;
};

/// Integer matrix preserving the intersection form: M^T Q M = Q,
/// checked at construction.  Entries are row-major, 1-based accessors.
class SpMatrix {
  public:
    SpMatrix(Surface surface, std::vector<Integer> row_major_entries);

    static SpMatrix identity(Surface surface);
    /// Symplectic transvection x -> x + <x,v> v.  This is how a Dehn
    /// twist about a curve with homology class v acts on H^1.
    static SpMatrix transvection(Surface surface,
                                 const std::vector<Integer>& v);

    const Surface& surface() const { return surface_; }
    int size() const { return surface_.dim(); }
    const Integer& entry(int row, int col) const;  // 1-based

    SpMatrix transpose() const;
    /// Exact inverse: -Q M^T Q.
    SpMatrix inverse() const;
    Integer trace() const;

    friend SpMatrix operator*(const SpMatrix& lhs, const SpMatrix& rhs);
    friend bool operator==(const SpMatrix&, const SpMatrix&) = default;

  private:
    SpMatrix(Surface surface, std::vector<Integer> entries, bool skip_check);

    Surface surface_;
    std::vector<Integer> entries_;
};

/// Exterior product with the Koszul sign rule.  Throws on ambient mismatch.
MultiVector wedge(const MultiVector& left, const MultiVector& right);

/// Contraction iota_c with respect to the intersection pairing; c must be
/// homogeneous of degree 1.  Degree -1 graded derivation.
MultiVector contract(const MultiVector& c, const MultiVector& omega);

/// Applies e_j -> sum_i M[i][j] e_i as an algebra map.
MultiVector sp_apply(const SpMatrix& m, const MultiVector& omega);

/// Inner product making the subset monomials orthonormal.
Rational monomial_pairing(const MultiVector& x, const MultiVector& y);

}  // namespace swtqft
