// swtqft — invariants of closed-up cobordism words over exact rationals.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "swtqft/errors.hpp"
#include "swtqft/invariants.hpp"
#include "swtqft/report_json.hpp"
#include "swtqft/word_format.hpp"

namespace {

using namespace swtqft;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UserError("cannot open file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::vector<std::string> split_numbers(const std::string& text) {
    std::string normalized = text;
    for (char& c : normalized)
        if (c == ',') c = ' ';
    std::vector<std::string> tokens;
    std::istringstream in(normalized);
    std::string tok;
    while (in >> tok) tokens.push_back(tok);
    return tokens;
}

SpMatrix matrix_from_string(const std::string& text, int genus) {
    const auto tokens = split_numbers(text);
    const std::size_t need = static_cast<std::size_t>(2 * genus) * (2 * genus);
    if (tokens.size() != need)
        throw UserError("--matrix needs " + std::to_string(need) +
                        " integers for genus " + std::to_string(genus) +
                        ", got " + std::to_string(tokens.size()));
    std::vector<Integer> entries;
    entries.reserve(need);
    for (const auto& tok : tokens) {
        try {
            entries.push_back(Integer(tok, 10));
        } catch (const std::invalid_argument&) {
            throw UserError("malformed integer '" + tok + "' in --matrix");
        }
    }
    return SpMatrix(Surface(genus), std::move(entries));
}

std::vector<std::vector<Rational>> subspace_from_string(
    const std::string& text) {
    std::vector<std::vector<Rational>> vectors;
    std::string chunk;
    std::istringstream in(text);
    while (std::getline(in, chunk, ';')) {
        std::vector<Rational> vec;
        for (const auto& tok : split_numbers(chunk)) vec.push_back(parse_rational(tok));
        if (!vec.empty()) vectors.push_back(std::move(vec));
    }
    return vectors;
}

Integer require_integral(const Rational& value) {
    if (!is_integral(value))
        throw IntegralityError("graded trace has a non-unit denominator: " +
                               value.get_str());
    return value.get_num();
}

void print_report_plain(const InvariantReport& report, std::ostream& out) {
    out << "genus: " << report.word.start_genus << "\n";
    out << "degree: " << report.word.params.d << "\n";
    out << "chamber: " << chamber_to_char(report.word.params.chamber) << "\n";
    out << "eta_bar: " << rational_to_string(report.word.params.eta_bar)
        << "\n";
    out << "k_trail:";
    for (const auto& [g, k] : report.k_trail) out << " (" << g << "," << k << ")";
    out << "\n";
    out << "value: " << report.value.get_str() << "\n";
    out << "empty: " << (report.empty ? "true" : "false") << "\n";
    for (const auto& w : report.warnings) out << "warning: " << w << "\n";
}

int run(int argc, char** argv) {
    CLI::App app{"Seiberg-Witten invariant sums of closed 3-manifolds presented "
                 "as closed-up words of elementary cobordisms"};
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "emit machine-readable JSON");

    auto* sw_cmd = app.add_subcommand("sw", "invariant of a word file");
    std::string sw_file;
    sw_cmd->add_option("file", sw_file, "word file")->required();
    sw_cmd->add_flag("--json", json);

    auto* series_cmd =
        app.add_subcommand("series", "sweep the word's degree parameter");
    std::string series_file;
    long long d_min = 0, d_max = 0;
    series_cmd->add_option("file", series_file, "word file template")->required();
    series_cmd->add_option("--dmin", d_min, "first degree")->required();
    series_cmd->add_option("--dmax", d_max, "last degree")->required();
    series_cmd->add_flag("--json", json);

    auto* betti_cmd =
        app.add_subcommand("betti", "Betti numbers of H*(Sym^k Sigma_g)");
    int betti_g = 0;
    long long betti_k = 0;
    betti_cmd->add_option("-g", betti_g, "genus")->required();
    betti_cmd->add_option("-k", betti_k, "vortex degree")->required();
    betti_cmd->add_flag("--json", json);

    auto* trace_cmd = app.add_subcommand(
        "trace", "graded trace of the induced map of a symplectic matrix");
    int trace_g = 0;
    long long trace_k = 0;
    std::string trace_matrix;
    trace_cmd->add_option("-g", trace_g, "genus")->required();
    trace_cmd->add_option("-k", trace_k, "vortex degree")->required();
    trace_cmd->add_option("--matrix", trace_matrix, "2g*2g integers, row-major")
        ->required();
    trace_cmd->add_flag("--json", json);

    auto* oracle_cmd = app.add_subcommand(
        "oracle", "trace generating series det(I-tM)/(1-t)^2");
    int oracle_g = 0;
    long long oracle_kmax = 0;
    std::string oracle_matrix;
    oracle_cmd->add_option("-g", oracle_g, "genus")->required();
    oracle_cmd->add_option("--matrix", oracle_matrix, "2g*2g integers, row-major")
        ->required();
    oracle_cmd->add_option("--kmax", oracle_kmax, "last coefficient")->required();
    oracle_cmd->add_flag("--json", json);

    auto* check_cmd =
        app.add_subcommand("check", "validate a word file (and transversality)");
    std::string check_file, subspace_u, subspace_v;
    check_cmd->add_option("file", check_file, "word file")->required();
    check_cmd->add_option("--subspace-u", subspace_u,
                          "rational vectors, ';'-separated");
    check_cmd->add_option("--subspace-v", subspace_v,
                          "rational vectors, ';'-separated");
    check_cmd->add_flag("--json", json);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    if (*sw_cmd) {
        const InvariantReport report = sw_sum(parse_word_file(read_file(sw_file)));
        if (json)
            std::cout << emit_json(report);
        else
            print_report_plain(report, std::cout);
        return 0;
    }

    if (*series_cmd) {
        const CobordismWord word = parse_word_file(read_file(series_file));
        const auto values = sw_series(word, d_min, d_max);
        if (json) {
            std::cout << emit_series_json(word, d_min, d_max, values);
        } else {
            for (const auto& [d, value] : values)
                std::cout << "d=" << d << " value=" << value.get_str() << "\n";
        }
        return 0;
    }

    if (*betti_cmd) {
        const auto dims = betti(SymSpace(Surface(betti_g), betti_k));
        if (json) {
            nlohmann::ordered_json j;
            j["genus"] = betti_g;
            j["k"] = betti_k;
            j["dims"] = dims;
            std::cout << j.dump(2) << "\n";
        } else {
            for (std::size_t i = 0; i < dims.size(); ++i)
                std::cout << (i ? " " : "") << dims[i];
            std::cout << "\n";
        }
        return 0;
    }

    if (*trace_cmd) {
        const SpMatrix m = matrix_from_string(trace_matrix, trace_g);
        const Integer value = require_integral(
            graded_trace(induced_map(m, SymSpace(Surface(trace_g), trace_k))));
        if (json) {
            nlohmann::ordered_json j;
            j["genus"] = trace_g;
            j["k"] = trace_k;
            j["trace"] = value.fits_slong_p()
                             ? nlohmann::ordered_json(static_cast<std::int64_t>(
                                   value.get_si()))
                             : nlohmann::ordered_json(value.get_str());
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << value.get_str() << "\n";
        }
        return 0;
    }

    if (*oracle_cmd) {
        const SpMatrix m = matrix_from_string(oracle_matrix, oracle_g);
        const auto series = macdonald_series(m, oracle_kmax);
        if (json) {
            nlohmann::ordered_json j;
            j["genus"] = oracle_g;
            j["k_max"] = oracle_kmax;
            auto coeffs = nlohmann::ordered_json::array();
            for (const Rational& c : series) {
                const Integer n = require_integral(c);
                coeffs.push_back(
                    n.fits_slong_p()
                        ? nlohmann::ordered_json(
                              static_cast<std::int64_t>(n.get_si()))
                        : nlohmann::ordered_json(n.get_str()));
            }
            j["coefficients"] = coeffs;
            std::cout << j.dump(2) << "\n";
        } else {
            for (std::size_t i = 0; i < series.size(); ++i)
                std::cout << (i ? " " : "") << series[i].get_str();
            std::cout << "\n";
        }
        return 0;
    }

    if (*check_cmd) {
        const CobordismWord word = parse_word_file(read_file(check_file));
        const auto trail = k_trail(word);
        const bool has_u = !subspace_u.empty(), has_v = !subspace_v.empty();
        if (has_u != has_v)
            throw UserError("--subspace-u and --subspace-v must be given together");
        std::optional<bool> transverse;
        if (has_u)
            transverse = check_transverse(subspace_from_string(subspace_u),
                                          subspace_from_string(subspace_v),
                                          2 * word.start_genus);
        if (json) {
            nlohmann::ordered_json j;
            j["valid"] = true;
            j["genus"] = word.start_genus;
            j["moves"] = word.moves.size();
            j["k_trail"] = nlohmann::ordered_json::array();
            for (const auto& [g, k] : trail) j["k_trail"].push_back({g, k});
            if (transverse) j["transverse"] = *transverse;
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "ok\n";
            std::cout << "k_trail:";
            for (const auto& [g, k] : trail) std::cout << " (" << g << "," << k << ")";
            std::cout << "\n";
            if (transverse)
                std::cout << "transverse: " << (*transverse ? "true" : "false")
                          << "\n";
        }
        return 0;
    }

    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const swtqft::InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    } catch (const swtqft::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
