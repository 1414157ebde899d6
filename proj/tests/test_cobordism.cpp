#include <doctest.h>

#include "swtqft/cobordism.hpp"
#include "swtqft/errors.hpp"
#include "test_util.hpp"

using namespace swtqft;
using namespace swtqft::testutil;

namespace {

// Random closable move sequence that keeps the genus in [floor, ceiling].
std::vector<Move> random_word_moves(std::mt19937_64& gen, int start_genus,
                                    int length, int floor_genus = 0,
                                    int ceiling_genus = 3) {
    std::vector<Move> moves;
    int g = start_genus;
    for (int i = 0; i < length; ++i) {
        const int remaining = length - i;
        // Keep |g - start| reachable in the remaining steps.
        std::vector<int> options;
        if (g + 1 <= ceiling_genus && (g + 1) - start_genus < remaining)
            options.push_back(0);  // h1
        if (g - 1 >= floor_genus && start_genus - (g - 1) < remaining)
            options.push_back(1);  // h2
        options.push_back(2);      // twist
        const int pick = options[gen() % options.size()];
        if (pick == 0) {
            moves.push_back(Move::h1());
            ++g;
        } else if (pick == 1) {
            moves.push_back(Move::h2());
            --g;
        } else {
            moves.push_back(Move::twist(random_symplectic(Surface(g), gen, 4)));
        }
    }
    // Close the trail with plain handles.
    while (g > start_genus) {
        moves.push_back(Move::h2());
        --g;
    }
    while (g < start_genus) {
        moves.push_back(Move::h1());
        ++g;
    }
    return moves;
}

}  // namespace

TEST_CASE("vortex degrees per chamber") {
    CHECK(vortex_degree(2, SpincParams(0, Chamber::plus, Rational(1, 2))) == 1);
    // g=0, d=3 in chamber +: k = 2 and chi(Sym^2 S^2) = 3.
    CHECK(vortex_degree(0, SpincParams(3, Chamber::plus, Rational(7, 2))) == 2);
    CHECK(euler_char(SymSpace(Surface(0), 2)) == 3);
    // Anti-vortex chamber with d beyond the range: empty moduli.
    CHECK(vortex_degree(2, SpincParams(3, Chamber::minus, Rational(0))) == -2);

    CHECK_THROWS_AS(SpincParams(1, Chamber::plus, Rational(1)), MorseBottError);
    CHECK_THROWS_AS(SpincParams(0, Chamber::plus, Rational(-1)), UserError);
    CHECK_THROWS_AS(SpincParams(0, Chamber::minus, Rational(1)), UserError);

    CHECK(SpincParams::with_default_eta(2, Chamber::plus).eta_bar == 3);
    CHECK(SpincParams::with_default_eta(2, Chamber::minus).eta_bar == 1);
}

TEST_CASE("one-handle columns wedge with the new b and shift degree by +1") {
    const GradedOperator op = rho_one_handle(1, 1);
    CHECK(op.degree_shift() == 1);
    CHECK(op.domain() == SymSpace(Surface(1), 1));
    CHECK(op.codomain() == SymSpace(Surface(2), 2));

    // (emptyset, j) -> ({2g+2}, j) with sign +1.
    CHECK(op.column(SymKey{0, 0}).coefficient(SymKey{0b1000, 0}) == 1);
    CHECK(op.column(SymKey{0, 1}).coefficient(SymKey{0b1000, 1}) == 1);
    // ({1}, 0) -> -({1,4}, 0): Koszul sign (-1)^{|S|}.
    CHECK(op.column(SymKey{0b0001, 0}).coefficient(SymKey{0b1001, 0}) == -1);

    CHECK(rho_one_handle(1, -1).columns().empty());
}

TEST_CASE("two-handle columns contract with a and project") {
    const GradedOperator op = rho_two_handle(2, 2);
    CHECK(op.degree_shift() == -1);
    CHECK(op.domain() == SymSpace(Surface(2), 2));
    CHECK(op.codomain() == SymSpace(Surface(1), 1));

    // ({2g+2}, j) -> (emptyset, j) with <a,b> = +1.
    CHECK(op.column(SymKey{0b1000, 0}).coefficient(SymKey{0, 0}) == 1);
    CHECK(op.column(SymKey{0b1000, 1}).coefficient(SymKey{0, 1}) == 1);
    // ({2g+1}, j) -> 0 since <a,a> = 0.
    CHECK(op.column(SymKey{0b0100, 0}).is_zero());
    // ({1, 2g+1}, j): the survivor still contains e_{2g+1}; projected away.
    CHECK(op.column(SymKey{0b0101, 0}).is_zero());
    // ({1, 2g+2}, j) -> -({1}, j): position sign.
    CHECK(op.column(SymKey{0b1001, 0}).coefficient(SymKey{0b0001, 0}) == -1);
}

TEST_CASE("two-handle is the transpose of the one-handle, exhaustively") {
    for (int g = 0; g <= 2; ++g)
        for (long long k = 0; k <= 2; ++k) {
            const auto up = operator_matrix(rho_one_handle(g, k));
            const auto down = operator_matrix(rho_two_handle(g + 1, k + 1));
            REQUIRE(up.size() == down[0].size());
            REQUIRE(down.size() == up[0].size());
            for (std::size_t r = 0; r < up.size(); ++r)
                for (std::size_t c = 0; c < up[r].size(); ++c)
                    CHECK(up[r][c] == down[c][r]);
        }
}

TEST_CASE("canceling handle pair composes to the identity") {
    for (int g = 0; g <= 3; ++g)
        for (long long k = 0; k <= std::max(0, 2 * g - 2); ++k) {
            const GradedOperator pair =
                compose(rho_two_handle(g + 1, k + 1), rho_one_handle(g, k));
            CHECK(pair == GradedOperator::identity(SymSpace(Surface(g), k)));
        }
}

TEST_CASE("twists compose functorially and invert") {
    auto gen = rng(0x7157);
    const Surface s2(2);
    for (int trial = 0; trial < 10; ++trial) {
        const SpMatrix m = random_symplectic(s2, gen);
        const SpMatrix n = random_symplectic(s2, gen);
        const GradedOperator tm = rho_twist(m, 2, 1);
        const GradedOperator tn = rho_twist(n, 2, 1);
        CHECK(compose(tm, tn) == rho_twist(m * n, 2, 1));
        CHECK(compose(rho_twist(m.inverse(), 2, 1), tm) ==
              GradedOperator::identity(SymSpace(s2, 1)));
    }
    CHECK(rho_twist(SpMatrix::identity(s2), 2, 1) ==
          GradedOperator::identity(SymSpace(s2, 1)));
}

TEST_CASE("words validate their trails") {
    const SpincParams params(0, Chamber::plus, Rational(1, 2));
    CHECK_THROWS_AS(CobordismWord(1, params, {Move::h2(), Move::h2()},
                                  SpMatrix::identity(Surface(1))),
                    WordError);
    CHECK_THROWS_AS(CobordismWord(1, params, {Move::h1()},
                                  SpMatrix::identity(Surface(1))),
                    WordError);
    CHECK_THROWS_AS(
        CobordismWord(1, params,
                      {Move::twist(SpMatrix::identity(Surface(2)))},
                      SpMatrix::identity(Surface(1))),
        WordError);
    CHECK_THROWS_AS(CobordismWord(1, params, {},
                                  SpMatrix::identity(Surface(2))),
                    WordError);

    const CobordismWord word(2, params, {Move::h1(), Move::h2()},
                             SpMatrix::identity(Surface(2)));
    CHECK(word.genus_trail() == std::vector<int>{2, 3, 2});
    CHECK(k_trail(word) ==
          std::vector<std::pair<int, long long>>{{2, 1}, {3, 2}, {2, 1}});
}

TEST_CASE("k rises by exactly one across a 1-handle in both chambers") {
    for (const Chamber ch : {Chamber::plus, Chamber::minus})
        for (long long d = -3; d <= 3; ++d) {
            const SpincParams params = SpincParams::with_default_eta(d, ch);
            for (int g = 0; g <= 4; ++g)
                CHECK(vortex_degree(g, params) + 1 ==
                      vortex_degree(g + 1, params));
        }
}

TEST_CASE("composite words") {
    const SpincParams params(0, Chamber::plus, Rational(1, 2));

    // Empty move list, identity glue: identity on a 6-dimensional space.
    const CobordismWord idw = CobordismWord::identity_word(2, params);
    CHECK(SymSpace(Surface(2), 1).dimension() == 6);
    CHECK(compose_word(idw) ==
          GradedOperator::identity(SymSpace(Surface(2), 1)));

    // Canceling pair within a word.
    const CobordismWord cancel(2, params, {Move::h1(), Move::h2()},
                               SpMatrix::identity(Surface(2)));
    CHECK(compose_word(cancel) ==
          GradedOperator::identity(SymSpace(Surface(2), 1)));

    // A word that dips through k < 0 composes to zero.
    const CobordismWord dip(1, params,
                            {Move::h2(), Move::h1()},
                            SpMatrix::identity(Surface(1)));
    // k trail: 0 -> -1 -> 0.
    CHECK(compose_word(dip).columns().empty());

    // Degree discipline: closable words have total shift 0; open move
    // lists shift by #h1 - #h2.
    CHECK(compose_word(cancel).degree_shift() == 0);
    CHECK(compose_moves(1, params, {Move::h1(), Move::h1()}).degree_shift() ==
          2);
}

TEST_CASE("composite degree shift is #h1 - #h2") {
    auto gen = rng(0xd15c);
    for (int trial = 0; trial < 10; ++trial) {
        const SpincParams params(0, Chamber::plus, Rational(1, 2));
        const auto moves = random_word_moves(gen, 1, 3);
        int h1 = 0, h2 = 0;
        for (const Move& move : moves) {
            h1 += move.kind == Move::Kind::one_handle;
            h2 += move.kind == Move::Kind::two_handle;
        }
        CHECK(compose_moves(1, params, moves).degree_shift() == h1 - h2);
        CHECK(h1 == h2);  // random_word_moves closes the trail
    }
}

TEST_CASE("composition of concatenated words is the composite of operators") {
    auto gen = rng(0xf33d);
    for (int trial = 0; trial < 12; ++trial) {
        const int g0 = 1 + static_cast<int>(gen() % 2);
        const SpincParams params =
            SpincParams::with_default_eta(static_cast<long long>(gen() % 3) - 1,
                                          trial % 2 ? Chamber::plus
                                                    : Chamber::minus);
        const auto first = random_word_moves(gen, g0, 2);
        const auto second = random_word_moves(gen, g0, 2);
        auto joined = first;
        joined.insert(joined.end(), second.begin(), second.end());
        CHECK(compose_moves(g0, params, joined) ==
              compose(compose_moves(g0, params, second),
                      compose_moves(g0, params, first)));
    }
}

TEST_CASE("transversality of explicit subspaces") {
    using Vec = std::vector<Rational>;
    const Vec a1{1, 0}, b1{0, 1};
    CHECK(check_transverse({a1, b1}, {a1, b1}, 2));
    CHECK_FALSE(check_transverse({a1}, {a1}, 2));
    CHECK(check_transverse({a1}, {b1}, 2));
    CHECK(check_transverse({}, {}, 0));
    CHECK_FALSE(check_transverse({}, {}, 2));
    CHECK(check_transverse({Vec{Rational(1, 2), 0}}, {Vec{0, Rational(3)}}, 2));
    CHECK_THROWS_AS(check_transverse({Vec{1}}, {}, 2), UserError);
}
