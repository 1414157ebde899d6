#include "swtqft/symmetric_product.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "swtqft/errors.hpp"

namespace swtqft {

namespace {

// C(n, r) for n <= 62 fits comfortably in a 64-bit Integer anyway; keep
// exact and convert at the boundary.
Integer binomial(int n, long long r) {
    if (r < 0 || r > n) return 0;
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(r));
    return out;
}

long long to_longlong_checked(const Integer& value, const char* what) {
    if (!value.fits_slong_p())
        throw UserError(std::string(what) + " exceeds 64-bit range");
    return value.get_si();
}

bool key_in_space(const SymKey& key, const SymSpace& space) {
    if (space.is_zero_space()) return false;
    const int two_g = space.surface.dim();
    if (two_g < 64 && (key.mask >> two_g)) return false;
    const int lambda = std::popcount(key.mask);
    return lambda <= space.k && key.x_exp >= 0 &&
           key.x_exp <= space.k - lambda;
}

// Next-larger mask with the same popcount (Gosper); 0 when exhausted.
std::uint64_t next_same_popcount(std::uint64_t m) {
    const std::uint64_t c = m & (~m + 1);
    const std::uint64_t r = m + c;
    if (r == 0) return 0;
    return (((r ^ m) >> 2) / c) | r;
}

constexpr long long kMaxEnumeratedKeys = 50'000'000;
constexpr long long kMaxBettiDegree = 1'000'000;

}  // namespace

long long SymSpace::dimension() const {
    if (is_zero_space()) return 0;
    const int two_g = surface.dim();
    Integer total = 0;
    for (int i = 0; i <= std::min<long long>(two_g, k); ++i)
        total += binomial(two_g, i) * make_integer(k - i + 1);
    return to_longlong_checked(total, "space dimension");
}

int SymKey::lambda_degree() const { return std::popcount(mask); }

std::string SymKey::to_string() const {
    std::ostringstream out;
    out << "({";
    bool first = true;
    for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1) {
        if (!first) out << ",";
        first = false;
        out << std::countr_zero(rest) + 1;
    }
    out << "}," << x_exp << ")";
    return out.str();
}

bool SymKeyLess::operator()(const SymKey& a, const SymKey& b) const {
    const int pa = std::popcount(a.mask), pb = std::popcount(b.mask);
    if (pa != pb) return pa < pb;
    if (a.mask != b.mask) return a.mask < b.mask;
    return a.x_exp < b.x_exp;
}

void SymCohClass::add_term(const SymKey& key, const Rational& coeff) {
    if (!key_in_space(key, space_))
        throw InternalError("symmetric-product key " + key.to_string() +
                            " outside basis bounds (g=" +
                            std::to_string(space_.surface.genus) +
                            ", k=" + std::to_string(space_.k) + ")");
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(key, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

Rational SymCohClass::coefficient(const SymKey& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Rational(0) : it->second;
}

SymCohClass& SymCohClass::operator+=(const SymCohClass& other) {
    if (!(space_ == other.space_))
        throw UserError("symmetric-product space mismatch");
    for (const auto& [key, coeff] : other.terms_) add_term(key, coeff);
    return *this;
}

SymCohClass& SymCohClass::operator*=(const Rational& scalar) {
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [key, coeff] : terms_) coeff *= scalar;
    return *this;
}

GradedOperator GradedOperator::identity(SymSpace space) {
    GradedOperator op(space, space, 0);
    for (const SymKey& key : enumerate_basis(space)) {
        SymCohClass col(space);
        col.add_term(key, 1);
        op.set_column(key, std::move(col));
    }
    return op;
}

void GradedOperator::set_column(const SymKey& key, SymCohClass image) {
    if (!key_in_space(key, domain_))
        throw InternalError("operator column key outside the domain basis");
    if (!(image.space() == codomain_))
        throw InternalError("operator column lives in the wrong codomain");
    if (image.is_zero()) {
        columns_.erase(key);
        return;
    }
    columns_.insert_or_assign(key, std::move(image));
}

SymCohClass GradedOperator::column(const SymKey& key) const {
    auto it = columns_.find(key);
    return it == columns_.end() ? SymCohClass(codomain_) : it->second;
}

SymCohClass GradedOperator::apply(const SymCohClass& v) const {
    if (!(v.space() == domain_))
        throw UserError("operator applied to a class from the wrong space");
    SymCohClass out(codomain_);
    for (const auto& [key, coeff] : v.terms()) {
        auto it = columns_.find(key);
        if (it == columns_.end()) continue;
        for (const auto& [target, c] : it->second.terms())
            out.add_term(target, coeff * c);
    }
    return out;
}

GradedOperator compose(const GradedOperator& after,
                       const GradedOperator& before) {
    if (!(before.codomain() == after.domain()))
        throw UserError("operators are not composable");
    GradedOperator out(before.domain(), after.codomain(),
                       before.degree_shift() + after.degree_shift());
    for (const auto& [key, col] : before.columns()) {
        SymCohClass image = after.apply(col);
        if (!image.is_zero()) out.set_column(key, std::move(image));
    }
    return out;
}

std::vector<SymKey> enumerate_basis(const SymSpace& space) {
    std::vector<SymKey> keys;
    if (space.is_zero_space()) return keys;
    if (space.dimension() > kMaxEnumeratedKeys)
        throw UserError("symmetric-product basis too large to enumerate");
    keys.reserve(static_cast<std::size_t>(space.dimension()));

    const int two_g = space.surface.dim();
    const std::uint64_t limit = std::uint64_t{1} << two_g;
    const int max_lambda = static_cast<int>(std::min<long long>(two_g, space.k));
    for (int i = 0; i <= max_lambda; ++i) {
        if (i == 0) {
            for (long long j = 0; j <= space.k; ++j) keys.push_back({0, j});
            continue;
        }
        for (std::uint64_t mask = (std::uint64_t{1} << i) - 1;
             mask != 0 && mask < limit; mask = next_same_popcount(mask))
            for (long long j = 0; j <= space.k - i; ++j)
                keys.push_back({mask, j});
    }
    return keys;
}

std::vector<long long> betti(const SymSpace& space) {
    std::vector<long long> dims;
    if (space.is_zero_space()) return dims;
    if (space.k > kMaxBettiDegree)
        throw UserError("vortex degree too large for a Betti table");

    const int two_g = space.surface.dim();
    dims.assign(static_cast<std::size_t>(2 * space.k + 1), 0);
    for (long long d = 0; d <= 2 * space.k; ++d) {
        Integer count = 0;
        const long long max_i = std::min<long long>({space.k, d, two_g});
        for (long long i = (d % 2); i <= max_i; i += 2)
            if ((d - i) / 2 <= space.k - i)
                count += binomial(two_g, i);
        dims[static_cast<std::size_t>(d)] =
            to_longlong_checked(count, "Betti number");
    }
    return dims;
}

long long euler_char(const SymSpace& space) {
    Integer chi = 0;
    const auto dims = betti(space);
    for (std::size_t d = 0; d < dims.size(); ++d)
        chi += (d % 2 == 0) ? make_integer(dims[d]) : make_integer(-dims[d]);
    return to_longlong_checked(chi, "Euler characteristic");
}

GradedOperator induced_map(const SpMatrix& m, const SymSpace& space) {
    if (m.size() != space.surface.dim())
        throw UserError("matrix size does not match the space's surface");
    GradedOperator op(space, space, 0);
    if (space.is_zero_space()) return op;

    const Surface& sigma = space.surface;
    for (const SymKey& key : enumerate_basis(space)) {
        if (key.mask == 0) {
            SymCohClass col(space);
            col.add_term(key, 1);  // (u, x) are fixed by every mapping class
            op.set_column(key, std::move(col));
            continue;
        }
        const MultiVector image =
            sp_apply(m, MultiVector::monomial(sigma, key.mask));
        SymCohClass col(space);
        for (const auto& [mask, coeff] : image.terms())
            col.add_term({mask, key.x_exp}, coeff);
        op.set_column(key, std::move(col));
    }
    return op;
}

Rational graded_trace(const GradedOperator& op) {
    if (!(op.domain() == op.codomain()))
        throw UserError("graded trace requires domain == codomain");
    Rational trace = 0;
    for (const auto& [key, col] : op.columns()) {
        const Rational diag = col.coefficient(key);
        if (diag == 0) continue;
        trace += (key.lambda_degree() % 2 == 0) ? diag : -diag;
    }
    return trace;
}

std::vector<Integer> char_poly_reversed(const SpMatrix& m) {
    const int n = m.size();
    // Newton's identities on the power sums tr(M^i) give the elementary
    // symmetric functions e_k of the eigenvalues; det(I - tM) has
    // coefficients (-1)^k e_k.
    std::vector<Integer> power_sums(n + 1, Integer(0));
    SpMatrix acc = m;
    for (int i = 1; i <= n; ++i) {
        power_sums[i] = acc.trace();
        if (i < n) acc = acc * m;
    }
    std::vector<Integer> elementary(n + 1, Integer(0));
    elementary[0] = 1;
    for (int k = 1; k <= n; ++k) {
        Integer sum = 0;
        for (int i = 1; i <= k; ++i) {
            const Integer term = elementary[k - i] * power_sums[i];
            sum += (i % 2 == 1) ? term : -term;
        }
        if (!mpz_divisible_ui_p(sum.get_mpz_t(), static_cast<unsigned long>(k)))
            throw InternalError("Newton identity division failed");
        mpz_divexact_ui(elementary[k].get_mpz_t(), sum.get_mpz_t(),
                        static_cast<unsigned long>(k));
    }
    std::vector<Integer> coeffs(n + 1);
    for (int k = 0; k <= n; ++k)
        coeffs[k] = (k % 2 == 0) ? elementary[k] : -elementary[k];
    return coeffs;
}

std::vector<Rational> macdonald_series(const SpMatrix& m, long long k_max) {
    if (k_max < 0) throw UserError("k_max must be non-negative");
    std::vector<Integer> series(static_cast<std::size_t>(k_max) + 1, Integer(0));
    const std::vector<Integer> cp = char_poly_reversed(m);
    for (std::size_t i = 0; i < cp.size() && i < series.size(); ++i)
        series[i] = cp[i];
    // Divide by (1-t) twice: running prefix sums.
    for (int pass = 0; pass < 2; ++pass)
        for (std::size_t i = 1; i < series.size(); ++i)
            series[i] += series[i - 1];
    std::vector<Rational> out;
    out.reserve(series.size());
    for (const Integer& c : series) out.emplace_back(c);
    return out;
}

std::vector<std::vector<Rational>> operator_matrix(const GradedOperator& op) {
    const auto domain_keys = enumerate_basis(op.domain());
    const auto codomain_keys = enumerate_basis(op.codomain());
    std::vector<std::vector<Rational>> mat(
        codomain_keys.size(), std::vector<Rational>(domain_keys.size(), 0));
    std::map<SymKey, std::size_t, SymKeyLess> row_of;
    for (std::size_t r = 0; r < codomain_keys.size(); ++r)
        row_of.emplace(codomain_keys[r], r);
    for (std::size_t c = 0; c < domain_keys.size(); ++c) {
        auto it = op.columns().find(domain_keys[c]);
        if (it == op.columns().end()) continue;
        for (const auto& [key, coeff] : it->second.terms())
            mat[row_of.at(key)][c] = coeff;
    }
    return mat;
}

}  // namespace swtqft
