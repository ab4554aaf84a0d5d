#ifndef HCSP_FORMAT_HPP
#define HCSP_FORMAT_HPP

#include "hcsp/set_system.hpp"

#include <optional>
#include <string>
#include <string_view>

// The "hcsp-1" document:
//
//   {
//     "format_version": "hcsp-1",
//     "s": 5,
//     "name": "A6",
//     "sets": [
//       [1, 2, 3],
//       [1, 4, 5],
//       [2, 4],
//       [3, 5]
//     ]
//   }
//
// "name" is optional and "format_version" may be omitted on input. Sets are
// emitted sorted by their ascending element sequences. The plaintext form
// has s on the first line and one space-separated block per further line;
// blank lines and lines starting with '#' are skipped, so the empty block
// can only be written in JSON.

namespace hcsp {

inline constexpr std::string_view kFormatVersion = "hcsp-1";

struct SystemDocument {
  SetSystem system;
  std::optional<std::string> name;
};

/// Parses JSON (first non-blank character '{') or the plaintext fallback.
/// Duplicate blocks are rejected, not collapsed. Throws ParseError.
SystemDocument parse_document(std::string_view text);

inline SetSystem parse_system(std::string_view text) { return parse_document(text).system; }

std::string emit_document(const SystemDocument &doc);

inline std::string emit_system(const SetSystem &sys) { return emit_document({sys, std::nullopt}); }

/// Blocks as element lists sorted lexicographically (the emission order).
std::vector<ElementList> sorted_block_lists(const SetSystem &sys);

} // namespace hcsp

#endif
