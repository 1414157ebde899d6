#include "swtqft/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace swtqft {

namespace {

bool valid_integer_token(std::string_view s) {
    if (!s.empty() && (s.front() == '+' || s.front() == '-'))
        s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den =
        slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);

    if (!valid_integer_token(num) ||
        (slash != std::string_view::npos && !valid_integer_token(den)))
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");

    auto to_integer = [](std::string_view token) {
        std::string_view body = token;
        bool negative = false;
        if (body.front() == '+' || body.front() == '-') {
            negative = body.front() == '-';
            body.remove_prefix(1);
        }
        Integer value(std::string(body), 10);
        return negative ? Integer(-value) : value;
    };

    Integer p = to_integer(num);
    Integer q = slash == std::string_view::npos ? Integer(1) : to_integer(den);
    if (q == 0)
        throw std::invalid_argument("malformed rational '" + std::string(text) +
                                    "': zero denominator");
    Rational value(p, q);
    value.canonicalize();
    return value;
}

std::string rational_to_string(const Rational& value) {
    return value.get_str();
}

}  // namespace swtqft
