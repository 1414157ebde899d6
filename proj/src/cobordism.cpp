#include "swtqft/cobordism.hpp"

#include <algorithm>
#include <bit>

#include "swtqft/errors.hpp"

namespace swtqft {

char chamber_to_char(Chamber c) { return c == Chamber::plus ? '+' : '-'; }

Chamber chamber_from_char(char c) {
    if (c == '+') return Chamber::plus;
    if (c == '-') return Chamber::minus;
    throw UserError("chamber must be '+' or '-'");
}

SpincParams::SpincParams(long long degree, Chamber ch, Rational eta)
    : d(degree), chamber(ch), eta_bar(std::move(eta)) {
    if (eta_bar == make_rational(d))
        throw MorseBottError("Morse-Bott violation: eta_bar equals d");
    if (chamber == Chamber::plus && !(make_rational(d) < eta_bar))
        throw UserError("chamber + requires d < eta_bar");
    if (chamber == Chamber::minus && !(make_rational(d) > eta_bar))
        throw UserError("chamber - requires d > eta_bar");
}

SpincParams SpincParams::with_default_eta(long long degree, Chamber ch) {
    const long long eta = ch == Chamber::plus ? degree + 1 : degree - 1;
    return SpincParams(degree, ch, make_rational(eta));
}

long long vortex_degree(int genus, const SpincParams& params) {
    if (params.eta_bar == make_rational(params.d))
        throw MorseBottError("Morse-Bott violation: eta_bar equals d");
    const long long k_g = genus - 1;  // deg K^{1/2}
    return params.chamber == Chamber::plus ? k_g + params.d : k_g - params.d;
}

int Move::genus_step() const {
    switch (kind) {
        case Kind::one_handle: return 1;
        case Kind::two_handle: return -1;
        case Kind::twist: return 0;
    }
    return 0;
}

CobordismWord::CobordismWord(int genus, SpincParams p, std::vector<Move> mv,
                             SpMatrix closing)
    : start_genus(genus),
      params(std::move(p)),
      moves(std::move(mv)),
      glue(std::move(closing)) {
    if (genus < 0) throw WordError("start genus must be non-negative");
    if (glue.size() != 2 * genus)
        throw WordError("glue matrix size must match the start genus");
    genus_trail();  // validates underflow, twist sizes, closability
}

CobordismWord CobordismWord::identity_word(int genus, SpincParams p) {
    return CobordismWord(genus, std::move(p), {},
                         SpMatrix::identity(Surface(genus)));
}

std::vector<int> CobordismWord::genus_trail() const {
    std::vector<int> trail{start_genus};
    int g = start_genus;
    for (const Move& move : moves) {
        if (move.kind == Move::Kind::two_handle && g < 1)
            throw WordError("genus underflow: h2 at genus 0");
        if (move.kind == Move::Kind::twist) {
            if (!move.matrix)
                throw WordError("twist move is missing its matrix");
            if (move.matrix->size() != 2 * g)
                throw WordError(
                    "twist matrix size " + std::to_string(move.matrix->size()) +
                    " does not match genus " + std::to_string(g));
        }
        g += move.genus_step();
        trail.push_back(g);
    }
    if (g != start_genus)
        throw WordError("unclosed word: final genus " + std::to_string(g) +
                        " != start genus " + std::to_string(start_genus));
    return trail;
}

std::vector<std::pair<int, long long>> k_trail(const CobordismWord& word) {
    std::vector<std::pair<int, long long>> trail;
    for (int g : word.genus_trail())
        trail.emplace_back(g, vortex_degree(g, word.params));
    return trail;
}

GradedOperator rho_one_handle(int genus, long long k) {
    const SymSpace domain(Surface(genus), k);
    const SymSpace codomain(Surface(genus + 1), k + 1);
    GradedOperator op(domain, codomain, +1);
    if (domain.is_zero_space()) return op;

    const std::uint64_t new_bit = std::uint64_t{1} << (2 * genus + 1);  // e_{2g+2}
    for (const SymKey& key : enumerate_basis(domain)) {
        SymCohClass col(codomain);
        const Rational sign = (std::popcount(key.mask) % 2 == 0) ? 1 : -1;
        col.add_term({key.mask | new_bit, key.x_exp}, sign);
        op.set_column(key, std::move(col));
    }
    return op;
}

GradedOperator rho_two_handle(int genus_plus_1, long long k_plus_1) {
    if (genus_plus_1 < 1)
        throw UserError("two-handle source genus must be at least 1");
    const int genus = genus_plus_1 - 1;
    const SymSpace domain(Surface(genus_plus_1), k_plus_1);
    const SymSpace codomain(Surface(genus), k_plus_1 - 1);
    GradedOperator op(domain, codomain, -1);
    if (domain.is_zero_space() || codomain.is_zero_space()) return op;

    // iota_{a_{g+1}} only pairs with b_{g+1} = e_{2g+2}, which sits at the
    // top of every ascending monomial containing it; the projection then
    // kills anything still containing a_{g+1} = e_{2g+1}.
    const std::uint64_t a_bit = std::uint64_t{1} << (2 * genus);
    const std::uint64_t b_bit = std::uint64_t{1} << (2 * genus + 1);
    for (const SymKey& key : enumerate_basis(domain)) {
        if (!(key.mask & b_bit) || (key.mask & a_bit)) continue;
        SymCohClass col(codomain);
        const Rational sign = (std::popcount(key.mask) % 2 == 1) ? 1 : -1;
        col.add_term({key.mask & ~b_bit, key.x_exp}, sign);
        op.set_column(key, std::move(col));
    }
    return op;
}

GradedOperator rho_twist(const SpMatrix& m, int genus, long long k) {
    if (m.size() != 2 * genus)
        throw UserError("twist matrix size does not match genus");
    return induced_map(m, SymSpace(Surface(genus), k));
}

GradedOperator compose_moves(int start_genus, const SpincParams& params,
                             const std::vector<Move>& moves) {
    int g = start_genus;
    long long k = vortex_degree(g, params);
    GradedOperator total = GradedOperator::identity(SymSpace(Surface(g), k));
    for (const Move& move : moves) {
        if (move.kind == Move::Kind::two_handle && g < 1)
            throw WordError("genus underflow: h2 at genus 0");
        GradedOperator step = [&] {
            switch (move.kind) {
                case Move::Kind::one_handle: return rho_one_handle(g, k);
                case Move::Kind::two_handle: return rho_two_handle(g, k);
                case Move::Kind::twist: return rho_twist(*move.matrix, g, k);
            }
            throw InternalError("unknown move kind");
        }();
        total = compose(step, total);
        g += move.genus_step();
        k = vortex_degree(g, params);
    }
    return total;
}

GradedOperator compose_word(const CobordismWord& word) {
    word.genus_trail();  // validate before composing
    GradedOperator body =
        compose_moves(word.start_genus, word.params, word.moves);
    return compose(induced_map(word.glue, body.codomain()), body);
}

bool check_transverse(const std::vector<std::vector<Rational>>& u,
                      const std::vector<std::vector<Rational>>& v,
                      int two_g) {
    if (two_g < 0) throw UserError("ambient dimension must be non-negative");
    std::vector<std::vector<Rational>> rows;
    for (const auto* family : {&u, &v})
        for (const auto& vec : *family) {
            if (static_cast<int>(vec.size()) != two_g)
                throw UserError("subspace vector length must be 2g = " +
                                std::to_string(two_g));
            rows.push_back(vec);
        }

    // Exact rational row reduction.
    int rank = 0;
    for (int col = 0; col < two_g && rank < static_cast<int>(rows.size());
         ++col) {
        int pivot = -1;
        for (int r = rank; r < static_cast<int>(rows.size()); ++r)
            if (rows[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(rows[rank], rows[pivot]);
        for (int r = rank + 1; r < static_cast<int>(rows.size()); ++r) {
            if (rows[r][col] == 0) continue;
            const Rational factor = rows[r][col] / rows[rank][col];
            for (int c = col; c < two_g; ++c)
                rows[r][c] -= factor * rows[rank][c];
        }
        ++rank;
    }
    return rank == two_g;
}

}  // namespace swtqft
