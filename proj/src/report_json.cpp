#include "swtqft/report_json.hpp"

#include <json.hpp>

namespace swtqft {

namespace {

// Traces are almost always tiny; fall back to a decimal string rather
// than lose digits past 64 bits.
nlohmann::ordered_json integer_to_json(const Integer& value) {
    if (value.fits_slong_p())
        return static_cast<std::int64_t>(value.get_si());
    return value.get_str();
}

}  // namespace

std::string emit_json(const InvariantReport& report) {
    nlohmann::ordered_json j;
    j["genus"] = report.word.start_genus;
    j["degree"] = report.word.params.d;
    j["chamber"] = std::string(1, chamber_to_char(report.word.params.chamber));
    j["eta_bar"] = rational_to_string(report.word.params.eta_bar);
    j["k_trail"] = nlohmann::ordered_json::array();
    for (const auto& [g, k] : report.k_trail)
        j["k_trail"].push_back({g, k});
    j["value"] = integer_to_json(report.value);
    j["empty"] = report.empty;
    j["warnings"] = report.warnings;
    return j.dump(2) + "\n";
}

std::string emit_series_json(
    const CobordismWord& word_template, long long d_min, long long d_max,
    const std::vector<std::pair<long long, Integer>>& values) {
    nlohmann::ordered_json j;
    j["genus"] = word_template.start_genus;
    j["chamber"] =
        std::string(1, chamber_to_char(word_template.params.chamber));
    j["eta_bar"] = rational_to_string(
        word_template.params.chamber == Chamber::plus
            ? make_rational(d_max + 1)
            : make_rational(d_min - 1));
    j["d_min"] = d_min;
    j["d_max"] = d_max;
    j["values"] = nlohmann::ordered_json::array();
    for (const auto& [d, value] : values)
        j["values"].push_back({d, integer_to_json(value)});
    return j.dump(2) + "\n";
}

}  // namespace swtqft
