#ifndef BEXT_ERRORS_HPP
#define BEXT_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace bext {

// Index arithmetic is checked: overflow is reported, never wrapped.
struct ArithmeticOverflow : std::overflow_error {
  explicit ArithmeticOverflow(const std::string& what)
      : std::overflow_error(what) {}
};

// A product computation stepped outside the ambient family, i.e. the family
// is not omega-closed (or lacks the empty set needed for a Zero).
struct StructureError : std::runtime_error {
  explicit StructureError(const std::string& what)
      : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
  std::size_t position;
  ParseError(std::size_t pos, const std::string& what)
      : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"),
        position(pos) {}
};

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_add_overflow(a, b, &r))
    throw ArithmeticOverflow("index addition overflows");
  return r;
}

}  // namespace bext

#endif
