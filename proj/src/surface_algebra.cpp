#include "swtqft/surface_algebra.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

#include "swtqft/errors.hpp"

namespace swtqft {

namespace {

constexpr int kMaxGenus = 30;  // monomial masks live in 64 bits

void require_same_ambient(const Surface& a, const Surface& b) {
    if (!(a == b)) throw UserError("ambient surface mismatch");
}

int popcount_below(std::uint64_t mask, int index_1based) {
    // #{s in mask : s < index}, indices 1-based, bit i-1 <-> e_i.
    const std::uint64_t below = (std::uint64_t{1} << (index_1based - 1)) - 1;
    return std::popcount(mask & below);
}

using IntGrid = std::vector<Integer>;  // row-major n x n

IntGrid mat_mul(const IntGrid& a, const IntGrid& b, int n) {
    IntGrid out(static_cast<std::size_t>(n) * n, Integer(0));
    for (int i = 0; i < n; ++i)
        for (int r = 0; r < n; ++r) {
            const Integer& air = a[static_cast<std::size_t>(i) * n + r];
            if (air == 0) continue;
            for (int j = 0; j < n; ++j)
                out[static_cast<std::size_t>(i) * n + j] +=
                    air * b[static_cast<std::size_t>(r) * n + j];
        }
    return out;
}

IntGrid mat_transpose(const IntGrid& a, int n) {
    IntGrid out(a.size());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            out[static_cast<std::size_t>(j) * n + i] =
                a[static_cast<std::size_t>(i) * n + j];
    return out;
}

IntGrid omega_grid(const Surface& s) {
    const int n = s.dim();
    IntGrid q(static_cast<std::size_t>(n) * n, Integer(0));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            q[static_cast<std::size_t>(i - 1) * n + (j - 1)] = s.pairing(i, j);
    return q;
}

}  // namespace

Surface::Surface(int g) : genus(g) {
    if (g < 0) throw UserError("genus must be non-negative");
    if (g > kMaxGenus) throw UserError("genus too large (max 30)");
}

int Surface::pairing(int i, int j) const {
    if (i < 1 || j < 1 || i > dim() || j > dim())
        throw UserError("basis index out of range");
    if (j == i + 1 && i % 2 == 1) return 1;   // <a_m, b_m>
    if (j == i - 1 && i % 2 == 0) return -1;  // <b_m, a_m>
    return 0;
}

std::string Surface::basis_label(int index) const {
    if (index < 1 || index > dim()) throw UserError("basis index out of range");
    const int handle = (index + 1) / 2;
    return (index % 2 == 1 ? "a" : "b") + std::to_string(handle);
}

std::vector<std::vector<int>> Surface::intersection_matrix() const {
    std::vector<std::vector<int>> q(dim(), std::vector<int>(dim(), 0));
    for (int i = 1; i <= dim(); ++i)
        for (int j = 1; j <= dim(); ++j) q[i - 1][j - 1] = pairing(i, j);
    return q;
}

MultiVector MultiVector::unit(Surface ambient) {
    return monomial(ambient, 0);
}

MultiVector MultiVector::basis_element(Surface ambient, int index) {
    if (index < 1 || index > ambient.dim())
        throw UserError("basis index out of range");
    return monomial(ambient, std::uint64_t{1} << (index - 1));
}

MultiVector MultiVector::monomial(Surface ambient, std::uint64_t mask,
                                  const Rational& coeff) {
    MultiVector v(ambient);
    v.add_term(mask, coeff);
    return v;
}

void MultiVector::add_term(std::uint64_t mask, const Rational& coeff) {
    if (mask >> ambient_.dim())
        throw UserError("monomial uses indices beyond the surface basis");
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(mask, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

Rational MultiVector::coefficient(std::uint64_t mask) const {
    auto it = terms_.find(mask);
    return it == terms_.end() ? Rational(0) : it->second;
}

int MultiVector::homogeneous_degree() const {
    if (terms_.empty()) return -1;
    const int deg = std::popcount(terms_.begin()->first);
    for (const auto& [mask, coeff] : terms_)
        if (std::popcount(mask) != deg)
            throw UserError("multivector is not homogeneous");
    return deg;
}

bool MultiVector::is_homogeneous(int degree) const {
    for (const auto& [mask, coeff] : terms_)
        if (std::popcount(mask) != degree) return false;
    return true;
}

MultiVector& MultiVector::operator+=(const MultiVector& other) {
    require_same_ambient(ambient_, other.ambient_);
    for (const auto& [mask, coeff] : other.terms_) add_term(mask, coeff);
    return *this;
}

MultiVector& MultiVector::operator*=(const Rational& scalar) {
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [mask, coeff] : terms_) coeff *= scalar;
    return *this;
}

std::string MultiVector::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [mask, coeff] : terms_) {
        if (!first) out << " + ";
        first = false;
        out << "(" << coeff.get_str() << ")";
        if (mask == 0) {
            out << "*1";
            continue;
        }
        for (int i = 1; i <= ambient_.dim(); ++i)
            if (mask >> (i - 1) & 1) out << "*" << ambient_.basis_label(i);
    }
    return out.str();
}

MultiVector wedge(const MultiVector& left, const MultiVector& right) {
    require_same_ambient(left.ambient(), right.ambient());
    MultiVector out(left.ambient());
    for (const auto& [s, a] : left.terms()) {
        for (const auto& [t, b] : right.terms()) {
            if (s & t) continue;
            // Each factor of t moves left past the larger factors of s.
            int inversions = 0;
            for (std::uint64_t rest = t; rest != 0; rest &= rest - 1) {
                const int index = std::countr_zero(rest) + 1;
                inversions += std::popcount(s) - popcount_below(s, index);
            }
            Rational coeff = a * b;
            if (inversions % 2 != 0) coeff = -coeff;
            out.add_term(s | t, coeff);
        }
    }
    return out;
}

MultiVector contract(const MultiVector& c, const MultiVector& omega) {
    require_same_ambient(c.ambient(), omega.ambient());
    if (!c.is_homogeneous(1))
        throw UserError("contraction direction must be homogeneous of degree 1");

    const Surface& sigma = c.ambient();
    // <c, e_s> = sum_j c_j <e_j, e_s>; only the symplectic partner of s
    // contributes.
    auto pair_with = [&](int s) -> Rational {
        const int partner = (s % 2 == 1) ? s + 1 : s - 1;
        const Rational cj = c.coefficient(std::uint64_t{1} << (partner - 1));
        return cj * sigma.pairing(partner, s);
    };

    MultiVector out(sigma);
    for (const auto& [mask, coeff] : omega.terms()) {
        int position = 0;  // 1-based slot of s in the ascending monomial
        for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1) {
            ++position;
            const int s = std::countr_zero(rest) + 1;
            Rational factor = pair_with(s);
            if (factor == 0) continue;
            if (position % 2 == 0) factor = -factor;  // (-1)^{position-1}
            out.add_term(mask & ~(std::uint64_t{1} << (s - 1)), coeff * factor);
        }
    }
    return out;
}

MultiVector sp_apply(const SpMatrix& m, const MultiVector& omega) {
    if (m.size() != omega.ambient().dim())
        throw UserError("matrix size does not match the surface");
    const Surface& sigma = omega.ambient();

    // Images of the degree-1 generators, by matrix column.
    std::vector<MultiVector> images;
    images.reserve(sigma.dim());
    for (int j = 1; j <= sigma.dim(); ++j) {
        MultiVector img(sigma);
        for (int i = 1; i <= sigma.dim(); ++i)
            img.add_term(std::uint64_t{1} << (i - 1), Rational(m.entry(i, j)));
        images.push_back(std::move(img));
    }

    MultiVector out(sigma);
    for (const auto& [mask, coeff] : omega.terms()) {
        MultiVector term = coeff * MultiVector::unit(sigma);
        for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1)
            term = wedge(term, images[std::countr_zero(rest)]);
        out += term;
    }
    return out;
}

Rational monomial_pairing(const MultiVector& x, const MultiVector& y) {
    require_same_ambient(x.ambient(), y.ambient());
    Rational sum = 0;
    const auto& smaller = x.terms().size() <= y.terms().size() ? x : y;
    const auto& larger = x.terms().size() <= y.terms().size() ? y : x;
    for (const auto& [mask, coeff] : smaller.terms())
        sum += coeff * larger.coefficient(mask);
    return sum;
}

SpMatrix::SpMatrix(Surface surface, std::vector<Integer> entries, bool)
    : surface_(surface), entries_(std::move(entries)) {}

SpMatrix::SpMatrix(Surface surface, std::vector<Integer> row_major_entries)
    : surface_(surface), entries_(std::move(row_major_entries)) {
    const int n = surface_.dim();
    if (static_cast<int>(entries_.size()) != n * n)
        throw UserError("matrix entry count must be (2g)^2");

    const IntGrid mtqm =
        mat_mul(mat_transpose(entries_, n), mat_mul(omega_grid(surface_), entries_, n), n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            const Integer& value = mtqm[static_cast<std::size_t>(i - 1) * n + (j - 1)];
            if (value != surface_.pairing(i, j))
                throw UserError("matrix is not symplectic: (M^T Q M)[" +
                                std::to_string(i) + "][" + std::to_string(j) +
                                "] = " + value.get_str() + ", expected " +
                                std::to_string(surface_.pairing(i, j)));
        }
}

SpMatrix SpMatrix::identity(Surface surface) {
    const int n = surface.dim();
    IntGrid e(static_cast<std::size_t>(n) * n, Integer(0));
    for (int i = 0; i < n; ++i) e[static_cast<std::size_t>(i) * n + i] = 1;
    return SpMatrix(surface, std::move(e), true);
}

SpMatrix SpMatrix::transvection(Surface surface, const std::vector<Integer>& v) {
    const int n = surface.dim();
    if (static_cast<int>(v.size()) != n)
        throw UserError("transvection vector must have length 2g");
    IntGrid e(static_cast<std::size_t>(n) * n, Integer(0));
    for (int j = 1; j <= n; ++j) {
        Integer pairing_ej_v = 0;  // <e_j, v>
        for (int s = 1; s <= n; ++s) pairing_ej_v += surface.pairing(j, s) * v[s - 1];
        for (int i = 1; i <= n; ++i) {
            Integer& cell = e[static_cast<std::size_t>(i - 1) * n + (j - 1)];
            if (i == j) cell += 1;
            cell += pairing_ej_v * v[i - 1];
        }
    }
    return SpMatrix(surface, std::move(e));
}

const Integer& SpMatrix::entry(int row, int col) const {
    const int n = surface_.dim();
    if (row < 1 || col < 1 || row > n || col > n)
        throw UserError("matrix index out of range");
    return entries_[static_cast<std::size_t>(row - 1) * n + (col - 1)];
}

SpMatrix SpMatrix::transpose() const {
    return SpMatrix(surface_, mat_transpose(entries_, surface_.dim()), true);
}

SpMatrix SpMatrix::inverse() const {
    const int n = surface_.dim();
    // M^T Q M = Q and Q^2 = -I give M^{-1} = -Q M^T Q, all integer.
    const IntGrid q = omega_grid(surface_);
    IntGrid out = mat_mul(q, mat_mul(mat_transpose(entries_, n), q, n), n);
    for (auto& x : out) x = -x;
    return SpMatrix(surface_, std::move(out));
}

Integer SpMatrix::trace() const {
    const int n = surface_.dim();
    Integer t = 0;
    for (int i = 0; i < n; ++i) t += entries_[static_cast<std::size_t>(i) * n + i];
    return t;
}

SpMatrix operator*(const SpMatrix& lhs, const SpMatrix& rhs) {
    if (!(lhs.surface_ == rhs.surface_))
        throw UserError("matrix size mismatch in product");
    return SpMatrix(lhs.surface_,
                    mat_mul(lhs.entries_, rhs.entries_, lhs.surface_.dim()), true);
}

}  // namespace swtqft
