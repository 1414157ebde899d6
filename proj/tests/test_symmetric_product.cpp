#include <doctest.h>

#include <map>

#include "swtqft/errors.hpp"
#include "swtqft/symmetric_product.hpp"
#include "test_util.hpp"

using namespace swtqft;
using namespace swtqft::testutil;

namespace {

// Independent Betti oracle: tally degrees straight off the enumerated keys.
std::vector<long long> betti_by_enumeration(const SymSpace& space) {
    std::vector<long long> dims;
    for (const SymKey& key : enumerate_basis(space)) {
        const auto d = static_cast<std::size_t>(key.degree());
        if (dims.size() <= d) dims.resize(d + 1, 0);
        ++dims[d];
    }
    if (!space.is_zero_space())
        dims.resize(static_cast<std::size_t>(2 * space.k + 1), 0);
    return dims;
}

long long binomial_oracle(int n, long long r) {
    if (r < 0 || r > n) return 0;
    long long out = 1;
    for (long long i = 0; i < r; ++i) out = out * (n - i) / (i + 1);
    return out;
}

}  // namespace

TEST_CASE("basis enumeration follows the (|S|, mask, j) order") {
    const SymSpace space(Surface(2), 1);
    const auto keys = enumerate_basis(space);
    REQUIRE(keys.size() == 6);
    CHECK(keys[0] == SymKey{0, 0});
    CHECK(keys[1] == SymKey{0, 1});
    CHECK(keys[2] == SymKey{0b0001, 0});
    CHECK(keys[3] == SymKey{0b0010, 0});
    CHECK(keys[4] == SymKey{0b0100, 0});
    CHECK(keys[5] == SymKey{0b1000, 0});

    CHECK(enumerate_basis(SymSpace(Surface(3), 0)) ==
          std::vector<SymKey>{SymKey{0, 0}});
    CHECK(enumerate_basis(SymSpace(Surface(2), -2)).empty());
}

TEST_CASE("Betti numbers of small symmetric products") {
    CHECK(betti(SymSpace(Surface(2), 1)) == std::vector<long long>{1, 4, 1});
    CHECK(betti(SymSpace(Surface(2), 2)) ==
          std::vector<long long>{1, 4, 7, 4, 1});
    CHECK(betti(SymSpace(Surface(5), 0)) == std::vector<long long>{1});
    CHECK(betti(SymSpace(Surface(1), -1)).empty());
}

TEST_CASE("Betti numbers match the enumeration oracle with duality") {
    for (int g = 0; g <= 4; ++g)
        for (long long k = 0; k <= 2 * g + 2; ++k) {
            const SymSpace space(Surface(g), k);
            const auto dims = betti(space);
            CHECK(dims == betti_by_enumeration(space));
            for (std::size_t d = 0; d < dims.size(); ++d)
                CHECK(dims[d] == dims[static_cast<std::size_t>(2 * k) - d]);
            if (k >= 1) {
                CHECK(dims[0] == 1);
                CHECK(dims[1] == 2 * g);
            }
        }
}

TEST_CASE("Euler characteristics") {
    CHECK(euler_char(SymSpace(Surface(2), 1)) == -2);
    CHECK(euler_char(SymSpace(Surface(3), 2)) == 6);
    // Sym^2(S^2) = CP^2.
    CHECK(euler_char(SymSpace(Surface(0), 2)) == 3);
    CHECK(euler_char(SymSpace(Surface(2), -3)) == 0);

    // chi(Sym^k Sigma_g) = (-1)^k C(2g-2, k), the coefficient of
    // (1-t)^{2g-2}; 0 beyond the binomial row.
    for (int g = 1; g <= 5; ++g)
        for (long long k = 0; k <= 2 * g; ++k) {
            const long long expected =
                (k % 2 == 0 ? 1 : -1) * binomial_oracle(2 * g - 2, k);
            CHECK(euler_char(SymSpace(Surface(g), k)) == expected);
        }
    // g = 0 continues the expansion of (1-t)^{-2}: k+1.
    for (long long k = 0; k <= 4; ++k)
        CHECK(euler_char(SymSpace(Surface(0), k)) == k + 1);
}

TEST_CASE("induced maps act through the Lambda factor only") {
    const Surface s1(1);
    const SymSpace space(s1, 1);
    const SpMatrix rot(s1, {Integer(0), Integer(-1), Integer(1), Integer(0)});

    CHECK(induced_map(SpMatrix::identity(s1), space) ==
          GradedOperator::identity(space));

    const GradedOperator op = induced_map(rot, space);
    CHECK(op.column(SymKey{0b01, 0}).coefficient(SymKey{0b10, 0}) == 1);
    CHECK(op.column(SymKey{0b10, 0}).coefficient(SymKey{0b01, 0}) == -1);
    CHECK(op.column(SymKey{0, 0}).coefficient(SymKey{0, 0}) == 1);
    CHECK(op.column(SymKey{0, 1}).coefficient(SymKey{0, 1}) == 1);
}

TEST_CASE("graded traces") {
    const Surface s2(2);
    CHECK(graded_trace(GradedOperator::identity(SymSpace(s2, 1))) == -2);
    CHECK(graded_trace(GradedOperator::identity(SymSpace(s2, -1))) == 0);

    const Surface s1(1);
    const SpMatrix rot(s1, {Integer(0), Integer(-1), Integer(1), Integer(0)});
    // Lefschetz number of the order-4 torus map: 1 - tr + 1 = 2.
    CHECK(graded_trace(induced_map(rot, SymSpace(s1, 1))) == 2);

    const GradedOperator shifted(SymSpace(s1, 0), SymSpace(s1, 1), 1);
    CHECK_THROWS_AS(graded_trace(shifted), UserError);
}

TEST_CASE("macdonald series of simple matrices") {
    const Surface s2(2);
    const auto id_series = macdonald_series(SpMatrix::identity(s2), 4);
    CHECK(id_series == std::vector<Rational>{1, -2, 1, 0, 0});

    const Surface s1(1);
    const SpMatrix rot(s1, {Integer(0), Integer(-1), Integer(1), Integer(0)});
    CHECK(macdonald_series(rot, 4) == std::vector<Rational>{1, 2, 4, 6, 8});

    const SpMatrix dehn(s1, {Integer(1), Integer(1), Integer(0), Integer(1)});
    CHECK(macdonald_series(dehn, 3) == std::vector<Rational>{1, 0, 0, 0});
}

TEST_CASE("graded trace equals the macdonald coefficient") {
    auto gen = rng(0x02ac1e);
    for (int g = 1; g <= 3; ++g) {
        const Surface s(g);
        for (int trial = 0; trial < 20; ++trial) {
            const SpMatrix m = random_symplectic(s, gen);
            const auto series = macdonald_series(m, 2 * g - 2 >= 0 ? 2 * g - 2 : 0);
            for (long long k = 0; k <= 2 * g - 2; ++k)
                CHECK(graded_trace(induced_map(m, SymSpace(s, k))) ==
                      series[static_cast<std::size_t>(k)]);
        }
    }
}

TEST_CASE("traces are similarity-invariant") {
    auto gen = rng(0x5111);
    for (int g = 1; g <= 2; ++g) {
        const Surface s(g);
        for (int trial = 0; trial < 10; ++trial) {
            const SymSpace space(s, g);  // k = g keeps it small
            const SpMatrix m = random_symplectic(s, gen);
            const SpMatrix n = random_symplectic(s, gen);
            const GradedOperator a = induced_map(m, space);
            const GradedOperator p = induced_map(n, space);
            const GradedOperator p_inv = induced_map(n.inverse(), space);
            CHECK(graded_trace(compose(p, compose(a, p_inv))) ==
                  graded_trace(a));
        }
    }
}

TEST_CASE("operator plumbing: compose, apply, matrices") {
    const SymSpace space(Surface(1), 1);
    const SpMatrix dehn(Surface(1),
                        {Integer(1), Integer(1), Integer(0), Integer(1)});
    const GradedOperator t = induced_map(dehn, space);
    const GradedOperator t_inv = induced_map(dehn.inverse(), space);
    CHECK(compose(t_inv, t) == GradedOperator::identity(space));

    const auto mat = operator_matrix(t);
    REQUIRE(mat.size() == 4);
    REQUIRE(mat[0].size() == 4);
    // Column of ({2},0) is a1 + b1 in rows ({1},0), ({2},0).
    const auto keys = enumerate_basis(space);
    CHECK(mat[2][3] == 1);
    CHECK(mat[3][3] == 1);

    SymCohClass v(space);
    v.add_term(SymKey{0b10, 0}, 2);
    const SymCohClass image = t.apply(v);
    CHECK(image.coefficient(SymKey{0b01, 0}) == 2);
    CHECK(image.coefficient(SymKey{0b10, 0}) == 2);

    v *= Rational(1, 2);
    CHECK(v.coefficient(SymKey{0b10, 0}) == 1);
    v *= 0;
    CHECK(v.is_zero());
    CHECK(SymKey{0b1010, 3}.to_string() == "({2,4},3)");

    CHECK_THROWS_AS(
        compose(t, GradedOperator::identity(SymSpace(Surface(1), 2))),
        UserError);
}
