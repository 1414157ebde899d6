#include "swtqft/word_format.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>
#include <vector>

#include "swtqft/errors.hpp"

namespace swtqft {

namespace {

std::string to_lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) {
        return static_cast<char>(std::tolower(c));
    });
    return s;
}

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> tokens;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) tokens.push_back(tok);
    return tokens;
}

long long parse_int(const std::string& token, const char* what, int line) {
    std::size_t pos = 0;
    try {
        const long long value = std::stoll(token, &pos);
        if (pos == token.size()) return value;
    } catch (const std::exception&) {
    }
    throw ParseError(std::string("malformed ") + what + " '" + token + "'",
                     line);
}

Integer parse_big_int(const std::string& token, int line) {
    std::string_view body = token;
    if (!body.empty() && (body.front() == '+' || body.front() == '-'))
        body.remove_prefix(1);
    const bool ok = !body.empty() &&
                    std::all_of(body.begin(), body.end(), [](unsigned char c) {
                        return std::isdigit(c) != 0;
                    });
    if (!ok) throw ParseError("malformed integer '" + token + "'", line);
    Integer value(std::string(body), 10);
    if (token.front() == '-') value = -value;
    return value;
}

SpMatrix parse_matrix(const std::vector<std::string>& tokens,
                      std::size_t first, int genus, int line,
                      const char* what) {
    const std::size_t need = static_cast<std::size_t>(2 * genus) * (2 * genus);
    if (tokens.size() - first != need)
        throw ParseError(std::string(what) + " needs " + std::to_string(need) +
                             " integers for genus " + std::to_string(genus) +
                             ", got " + std::to_string(tokens.size() - first),
                         line);
    std::vector<Integer> entries;
    entries.reserve(need);
    for (std::size_t i = first; i < tokens.size(); ++i)
        entries.push_back(parse_big_int(tokens[i], line));
    try {
        return SpMatrix(Surface(genus), std::move(entries));
    } catch (const UserError& e) {
        throw ParseError(std::string(what) + ": " + e.what(), line);
    }
}

struct Field {
    int line = 0;
    std::vector<std::string> tokens;
};

}  // namespace

CobordismWord parse_word_file(std::string_view text) {
    std::optional<Field> genus, degree, chamber, eta, glue;
    std::vector<std::pair<int, std::vector<std::string>>> move_lines;
    bool in_moves = false;
    int moves_line = 0;

    std::vector<std::string> lines;
    {
        std::string current;
        for (char c : text) {
            if (c == '\n') {
                lines.push_back(std::move(current));
                current.clear();
            } else {
                current.push_back(c);
            }
        }
        lines.push_back(std::move(current));
    }

    for (std::size_t index = 0; index < lines.size(); ++index) {
        const int line_number = static_cast<int>(index) + 1;
        std::string line = lines[index];
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto tokens = tokenize(line);
        if (tokens.empty()) continue;

        const std::string keyword = to_lower(tokens[0]);
        if (glue)
            throw ParseError("'glue' must be the last entry", line_number);
        auto set_once = [&](std::optional<Field>& slot, const char* name) {
            if (slot)
                throw ParseError(std::string("duplicate keyword '") + name + "'",
                                 line_number);
            if (tokens.size() != 2)
                throw ParseError(
                    std::string("'") + name + "' takes exactly one argument",
                    line_number);
            slot = Field{line_number, {tokens.begin() + 1, tokens.end()}};
        };

        if (keyword == "genus" || keyword == "degree" || keyword == "chamber" ||
            keyword == "eta") {
            if (in_moves)
                throw ParseError("'" + keyword + "' must precede 'moves:'",
                                 line_number);
            if (keyword == "genus") set_once(genus, "genus");
            else if (keyword == "degree") set_once(degree, "degree");
            else if (keyword == "chamber") set_once(chamber, "chamber");
            else set_once(eta, "eta");
        } else if (keyword == "moves:" || keyword == "moves") {
            if (in_moves)
                throw ParseError("duplicate keyword 'moves:'", line_number);
            if (tokens.size() > 1)
                throw ParseError("'moves:' takes no arguments", line_number);
            in_moves = true;
            moves_line = line_number;
        } else if (keyword == "h1" || keyword == "h2" || keyword == "twist") {
            if (!in_moves)
                throw ParseError(
                    "move '" + keyword + "' outside a 'moves:' section",
                    line_number);
            move_lines.emplace_back(line_number, tokens);
        } else if (keyword == "glue") {
            if (glue)
                throw ParseError("duplicate keyword 'glue'", line_number);
            glue = Field{line_number, {tokens.begin() + 1, tokens.end()}};
        } else {
            throw ParseError("unknown keyword '" + tokens[0] + "'", line_number);
        }
    }

    if (!genus) throw ParseError("missing 'genus'", 0);
    if (!degree) throw ParseError("missing 'degree'", 0);
    if (!chamber) throw ParseError("missing 'chamber'", 0);

    const long long g_ll =
        parse_int(genus->tokens[0], "genus", genus->line);
    if (g_ll < 0)
        throw ParseError("genus must be non-negative", genus->line);
    if (g_ll > 30) throw ParseError("genus too large (max 30)", genus->line);
    const int g0 = static_cast<int>(g_ll);
    const long long d = parse_int(degree->tokens[0], "degree", degree->line);

    if (chamber->tokens[0].size() != 1)
        throw ParseError("chamber must be '+' or '-'", chamber->line);
    Chamber ch;
    try {
        ch = chamber_from_char(chamber->tokens[0][0]);
    } catch (const UserError& e) {
        throw ParseError(e.what(), chamber->line);
    }

    Rational eta_value;
    if (eta) {
        try {
            eta_value = parse_rational(eta->tokens[0]);
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what(), eta->line);
        }
    } else {
        eta_value = make_rational(ch == Chamber::plus ? d + 1 : d - 1);
    }

    // Moves, tracking the genus so twist sizes and underflow diagnose
    // with their own line numbers.
    std::vector<Move> moves;
    int g = g0;
    for (const auto& [line, tokens] : move_lines) {
        const std::string keyword = to_lower(tokens[0]);
        if (keyword == "h1") {
            if (tokens.size() > 1)
                throw ParseError("'h1' takes no arguments", line);
            moves.push_back(Move::h1());
            ++g;
        } else if (keyword == "h2") {
            if (tokens.size() > 1)
                throw ParseError("'h2' takes no arguments", line);
            if (g < 1) throw ParseError("genus underflow", line);
            moves.push_back(Move::h2());
            --g;
        } else {
            moves.push_back(Move::twist(parse_matrix(tokens, 1, g, line, "twist")));
        }
    }
    if (g != g0)
        throw ParseError("unclosed word: final genus " + std::to_string(g) +
                             " != start genus " + std::to_string(g0),
                         move_lines.empty() ? moves_line
                                            : move_lines.back().first);

    SpMatrix closing = glue ? parse_matrix(glue->tokens, 0, g0, glue->line, "glue")
                            : SpMatrix::identity(Surface(g0));

    SpincParams params(d, ch, eta_value);  // may throw MorseBott / chamber
    return CobordismWord(g0, std::move(params), std::move(moves),
                         std::move(closing));
}

std::string serialize_word(const CobordismWord& word) {
    std::ostringstream out;
    out << "genus " << word.start_genus << "\n";
    out << "degree " << word.params.d << "\n";
    out << "chamber " << chamber_to_char(word.params.chamber) << "\n";
    out << "eta " << rational_to_string(word.params.eta_bar) << "\n";
    out << "moves:\n";
    int g = word.start_genus;
    for (const Move& move : word.moves) {
        switch (move.kind) {
            case Move::Kind::one_handle:
                out << "h1\n";
                break;
            case Move::Kind::two_handle:
                out << "h2\n";
                break;
            case Move::Kind::twist: {
                out << "twist";
                for (int i = 1; i <= 2 * g; ++i)
                    for (int j = 1; j <= 2 * g; ++j)
                        out << " " << move.matrix->entry(i, j).get_str();
                out << "\n";
                break;
            }
        }
        g += move.genus_step();
    }
    out << "glue";
    for (int i = 1; i <= 2 * word.start_genus; ++i)
        for (int j = 1; j <= 2 * word.start_genus; ++j)
            out << " " << word.glue.entry(i, j).get_str();
    out << "\n";
    return out.str();
}

}  // namespace swtqft
