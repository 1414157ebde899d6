// Pybind11 bindings for the main operations: Betti tables, graded traces,
// the generating-series oracle, word parsing and the invariant itself.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <utility>
#include <vector>

#include "swtqft/errors.hpp"
#include "swtqft/invariants.hpp"
#include "swtqft/word_format.hpp"

namespace py = pybind11;
using namespace swtqft;

namespace {

py::int_ to_py_int(const Integer& value) {
    return py::module_::import("builtins").attr("int")(value.get_str());
}

py::object to_py_fraction(const Rational& value) {
    if (is_integral(value)) return to_py_int(value.get_num());
    return py::module_::import("fractions")
        .attr("Fraction")(rational_to_string(value));
}

SpMatrix matrix_from_rows(int genus,
                          const std::vector<std::vector<long long>>& rows) {
    const int n = 2 * genus;
    if (static_cast<int>(rows.size()) != n)
        throw UserError("matrix must have 2g rows");
    std::vector<Integer> entries;
    entries.reserve(static_cast<std::size_t>(n) * n);
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != n)
            throw UserError("matrix must have 2g columns");
        for (long long x : row) entries.push_back(make_integer(x));
    }
    return SpMatrix(Surface(genus), std::move(entries));
}

py::dict report_to_dict(const InvariantReport& report) {
    py::dict out;
    out["genus"] = report.word.start_genus;
    out["degree"] = report.word.params.d;
    out["chamber"] = std::string(1, chamber_to_char(report.word.params.chamber));
    out["eta_bar"] = to_py_fraction(report.word.params.eta_bar);
    py::list trail;
    for (const auto& [g, k] : report.k_trail)
        trail.append(py::make_tuple(g, k));
    out["k_trail"] = trail;
    out["value"] = to_py_int(report.value);
    out["empty"] = report.empty;
    out["warnings"] = report.warnings;
    return out;
}

}  // namespace

PYBIND11_MODULE(swtqft, m) {
    m.doc() =
        "Sums of Seiberg-Witten invariants of closed 3-manifolds with b1 > 0, "
        "computed as graded traces over symmetric-product cohomology of "
        "closed-up cobordism words.";

    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const InternalError& e) {
            PyErr_SetString(PyExc_RuntimeError, e.what());
        } catch (const UserError& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        }
    });

    m.def(
        "betti",
        [](int genus, long long k) {
            return betti(SymSpace(Surface(genus), k));
        },
        py::arg("genus"), py::arg("k"),
        "Betti numbers of H*(Sym^k Sigma_g); empty list when k < 0.");

    m.def(
        "euler_char",
        [](int genus, long long k) {
            return euler_char(SymSpace(Surface(genus), k));
        },
        py::arg("genus"), py::arg("k"));

    m.def(
        "enumerate_basis",
        [](int genus, long long k) {
            py::list out;
            for (const SymKey& key : enumerate_basis(SymSpace(Surface(genus), k))) {
                py::list subset;
                for (int i = 1; i <= 2 * genus; ++i)
                    if (key.mask >> (i - 1) & 1) subset.append(i);
                out.append(py::make_tuple(py::tuple(subset), key.x_exp));
            }
            return out;
        },
        py::arg("genus"), py::arg("k"),
        "Basis keys (subset, point-class exponent) in the fixed order.");

    m.def(
        "graded_trace",
        [](int genus, long long k,
           const std::vector<std::vector<long long>>& matrix) {
            const SpMatrix m_ = matrix_from_rows(genus, matrix);
            const Rational t =
                graded_trace(induced_map(m_, SymSpace(Surface(genus), k)));
            if (!is_integral(t))
                throw IntegralityError("graded trace has a non-unit denominator");
            return to_py_int(t.get_num());
        },
        py::arg("genus"), py::arg("k"), py::arg("matrix"),
        "Graded trace of the action induced on H*(Sym^k) by a symplectic "
        "matrix.");

    m.def(
        "macdonald_series",
        [](int genus, const std::vector<std::vector<long long>>& matrix,
           long long k_max) {
            py::list out;
            for (const Rational& c :
                 macdonald_series(matrix_from_rows(genus, matrix), k_max))
                out.append(to_py_fraction(c));
            return out;
        },
        py::arg("genus"), py::arg("matrix"), py::arg("k_max"),
        "Coefficients of det(I - tM)/(1-t)^2 through degree k_max.");

    m.def(
        "alexander_check",
        [](int genus, const std::vector<std::vector<long long>>& matrix,
           long long k_max) {
            const AlexanderCheck result =
                alexander_check(matrix_from_rows(genus, matrix), k_max);
            py::list lhs, rhs;
            for (const Rational& c : result.lhs) lhs.append(to_py_fraction(c));
            for (const Rational& c : result.rhs) rhs.append(to_py_fraction(c));
            return py::make_tuple(result.ok, lhs, rhs);
        },
        py::arg("genus"), py::arg("matrix"), py::arg("k_max"),
        "Verify sum_k trace_k t^k * (1-t)^2 == det(I - tM); returns "
        "(ok, lhs, rhs).");

    m.def(
        "vortex_degree",
        [](int genus, long long d, const std::string& chamber,
           const std::string& eta) {
            if (chamber.size() != 1) throw UserError("chamber must be '+' or '-'");
            const Chamber ch = chamber_from_char(chamber[0]);
            const SpincParams params =
                eta.empty() ? SpincParams::with_default_eta(d, ch)
                            : SpincParams(d, ch, parse_rational(eta));
            return vortex_degree(genus, params);
        },
        py::arg("genus"), py::arg("d"), py::arg("chamber"),
        py::arg("eta") = std::string(),
        "k = (g-1) +/- d; negative means the empty moduli space.");

    m.def(
        "sw_sum",
        [](const std::string& word_text) {
            return report_to_dict(sw_sum(parse_word_file(word_text)));
        },
        py::arg("word_text"), "Invariant report for a word-file text.");

    m.def(
        "sw_series",
        [](const std::string& word_text, long long d_min, long long d_max) {
            const CobordismWord word = parse_word_file(word_text);
            py::list out;
            for (const auto& [d, value] : sw_series(word, d_min, d_max))
                out.append(py::make_tuple(d, to_py_int(value)));
            return out;
        },
        py::arg("word_text"), py::arg("d_min"), py::arg("d_max"));

    m.def(
        "canonical_word",
        [](const std::string& word_text) {
            return serialize_word(parse_word_file(word_text));
        },
        py::arg("word_text"), "Canonical serialization of a word-file text.");

    m.def(
        "check_transverse",
        [](const std::vector<std::vector<std::string>>& u,
           const std::vector<std::vector<std::string>>& v, int two_g) {
            auto convert = [](const std::vector<std::vector<std::string>>& rows) {
                std::vector<std::vector<Rational>> out;
                for (const auto& row : rows) {
                    std::vector<Rational> vec;
                    for (const auto& entry : row) vec.push_back(parse_rational(entry));
                    out.push_back(std::move(vec));
                }
                return out;
            };
            return check_transverse(convert(u), convert(v), two_g);
        },
        py::arg("u"), py::arg("v"), py::arg("two_g"),
        "True iff span(u) + span(v) is all of Q^{2g}; entries are rational "
        "strings.");
}
