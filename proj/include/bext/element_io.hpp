#ifndef BEXT_ELEMENT_IO_HPP
#define BEXT_ELEMENT_IO_HPP

#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

#include "bext/bicyclic_ext.hpp"
#include "bext/conv_iso.hpp"
#include "bext/matrix_units.hpp"
#include "bext/omega_family.hpp"

namespace bext {

template <typename T>
std::string show(const T& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

// Text grammars (whitespace is free between tokens):
//   set:     "{}" | "[0;k]" | "{a,b,c}"
//   family:  "{" set ("," set)* "}"          ("{}" member = empty set)
//   ext:     "0" | "(i,j,<set>)"
//   conv:    "0" | "conv(s,t,k)"
//   unit:    "0" | "mu(a,b)"
// Parsers consume the whole string and throw ParseError with a position.
OmegaSet parse_omega_set(std::string_view text);
OmegaFamily parse_family(std::string_view text);
BExtElt parse_ext_elt(std::string_view text);
ConvIso parse_conv_elt(std::string_view text);
MatUnit parse_unit_elt(std::string_view text);

enum class EltKind { ambiguous_zero, ext, conv, unit };

// What an element literal looks like, judged by its prefix.  A bare "0"
// belongs to every grammar and stays ambiguous.
EltKind detect_kind(std::string_view text);

nlohmann::json to_json(const OmegaSet&);
nlohmann::json to_json(const BExtElt&);
nlohmann::json to_json(const ConvIso&);
nlohmann::json to_json(const MatUnit&);

// Line-oriented "elem -> elem" table files; '#' starts a comment.  Elements
// may use the conv grammar directly or the extension grammar, which is
// carried over by the rank-grading correspondence with bound n.
std::vector<std::pair<ConvIso, ConvIso>> parse_conv_table(
    std::istream& in, std::uint32_t n);
std::vector<std::pair<ConvIso, ConvIso>> parse_conv_table_file(
    const std::string& path, std::uint32_t n);

}  // namespace bext

#endif
