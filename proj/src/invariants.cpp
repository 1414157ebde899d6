#include "swtqft/invariants.hpp"

#include <algorithm>
#include <atomic>
#include <future>
#include <thread>

#include "swtqft/errors.hpp"
#include "swtqft/symmetric_product.hpp"

namespace swtqft {

namespace {

Integer integral_trace(const Rational& trace) {
    if (!is_integral(trace))
        throw IntegralityError("graded trace has a non-unit denominator: " +
                               trace.get_str());
    return trace.get_num();
}

}  // namespace

InvariantReport sw_sum(const CobordismWord& word) {
    InvariantReport report{word, k_trail(word), 0, false, {}};
    report.empty = std::any_of(report.k_trail.begin(), report.k_trail.end(),
                               [](const auto& gk) { return gk.second < 0; });
    if (word.moves.size() >= 2)
        report.warnings.push_back(
            "transversality of the composed cobordisms was not verified");

    report.value = integral_trace(graded_trace(compose_word(word)));
    if (report.empty && report.value != 0)
        throw InternalError("empty moduli produced a nonzero trace");
    return report;
}

std::vector<std::pair<long long, Integer>> sw_series(
    const CobordismWord& word_template, long long d_min, long long d_max) {
    if (d_min > d_max) throw UserError("series requires d_min <= d_max");

    const Chamber chamber = word_template.params.chamber;
    const Rational eta =
        chamber == Chamber::plus ? make_rational(d_max + 1) : make_rational(d_min - 1);

    auto value_at = [&](long long d) {
        const CobordismWord word(word_template.start_genus,
                                 SpincParams(d, chamber, eta),
                                 word_template.moves, word_template.glue);
        return sw_sum(word).value;
    };

    // Each d is an independent pure computation; fan out across a small
    // pool and collect in index order.
    const std::size_t count = static_cast<std::size_t>(d_max - d_min + 1);
    std::vector<std::pair<long long, Integer>> out(count);
    const unsigned workers =
        std::min<unsigned>(std::max(1u, std::thread::hardware_concurrency()),
                           static_cast<unsigned>(count));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) {
            const long long d = d_min + static_cast<long long>(i);
            out[i] = {d, value_at(d)};
        }
        return out;
    }
    std::vector<std::future<void>> futures;
    std::atomic<std::size_t> next{0};
    for (unsigned w = 0; w < workers; ++w)
        futures.push_back(std::async(std::launch::async, [&] {
            for (std::size_t i = next.fetch_add(1); i < count;
                 i = next.fetch_add(1)) {
                const long long d = d_min + static_cast<long long>(i);
                out[i] = {d, value_at(d)};
            }
        }));
    for (auto& f : futures) f.get();
    return out;
}

AlexanderCheck alexander_check(const SpMatrix& m, long long k_max) {
    const int two_g = m.size();
    if (k_max < two_g)
        throw UserError("alexander check requires k_max >= 2g");

    // Left side: graded traces computed on the invariant path, times (1-t)^2.
    std::vector<Rational> traces;
    traces.reserve(static_cast<std::size_t>(k_max) + 1);
    const Surface sigma(two_g / 2);
    for (long long k = 0; k <= k_max; ++k)
        traces.push_back(graded_trace(induced_map(m, SymSpace(sigma, k))));

    AlexanderCheck result;
    result.lhs.assign(static_cast<std::size_t>(k_max) + 1, 0);
    for (long long n = 0; n <= k_max; ++n) {
        Rational c = traces[static_cast<std::size_t>(n)];
        if (n >= 1) c -= 2 * traces[static_cast<std::size_t>(n - 1)];
        if (n >= 2) c += traces[static_cast<std::size_t>(n - 2)];
        result.lhs[static_cast<std::size_t>(n)] = c;
    }

    result.rhs.assign(static_cast<std::size_t>(k_max) + 1, 0);
    const std::vector<Integer> cp = char_poly_reversed(m);
    for (std::size_t i = 0; i < cp.size() && i <= static_cast<std::size_t>(k_max); ++i)
        result.rhs[i] = Rational(cp[i]);

    result.ok = result.lhs == result.rhs;
    return result;
}

}  // namespace swtqft
