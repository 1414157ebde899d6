// Line-oriented cobordism word files.
//
//   # comment (anywhere; UTF-8 allowed after '#')
//   genus <int>
//   degree <int>
//   chamber +|-
//   eta <p/q or int>          (optional; default d+1 / d-1 per chamber)
//   moves:                    (optional)
//   h1 | h2 | twist <2g*2g ints row-major at the current genus>
//   glue <2g0*2g0 ints row-major>   (optional; default identity)
//
// Keywords are case-insensitive; LF and CRLF both accepted.

#pragma once

#include <string>
#include <string_view>

#include "swtqft/cobordism.hpp"

namespace swtqft {

/// Throws ParseError (with line number) on any malformed input.
CobordismWord parse_word_file(std::string_view text);

/// Canonical form: lowercase keywords, all fields explicit, LF endings.
/// serialize_word(parse_word_file(s)) is idempotent.
std::string serialize_word(const CobordismWord& word);

}  // namespace swtqft
