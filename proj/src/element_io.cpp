#include "bext/element_io.hpp"

#include <cctype>
#include <fstream>
#include <istream>

#include "bext/errors.hpp"

namespace bext {

namespace {

struct Cursor {
  std::string_view s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }
  bool at_end() {
    skip_ws();
    return pos == s.size();
  }
  char peek() {
    skip_ws();
    if (pos == s.size()) throw ParseError(pos, "unexpected end of input");
    return s[pos];
  }
  bool try_eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    skip_ws();
    if (pos >= s.size() || s[pos] != c)
      throw ParseError(pos, std::string("expected '") + c + "'");
    ++pos;
  }
  void expect_word(std::string_view w) {
    skip_ws();
    if (s.substr(pos, w.size()) != w)
      throw ParseError(pos, "expected '" + std::string(w) + "'");
    pos += w.size();
  }
  std::uint64_t number() {
    skip_ws();
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
      throw ParseError(pos, "expected a number");
    std::uint64_t v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      std::uint64_t d = static_cast<std::uint64_t>(s[pos] - '0');
      if (v > (UINT64_MAX - d) / 10) throw ParseError(pos, "number too large");
      v = v * 10 + d;
      ++pos;
    }
    return v;
  }
  std::uint32_t small_number(const char* what) {
    std::size_t at = pos;
    std::uint64_t v = number();
    if (v > 0xffffffffu) throw ParseError(at, std::string(what) + " too large");
    return static_cast<std::uint32_t>(v);
  }
  void done() {
    skip_ws();
    if (pos != s.size()) throw ParseError(pos, "trailing input");
  }
};

OmegaSet set_body(Cursor& c) {
  if (c.try_eat('[')) {
    std::size_t at = c.pos;
    if (c.number() != 0)
      throw ParseError(at, "intervals must start at 0");
    c.expect(';');
    std::uint32_t k = c.small_number("interval bound");
    c.expect(']');
    return OmegaSet::initial_interval(k);
  }
  c.expect('{');
  std::vector<std::uint32_t> xs;
  if (!c.try_eat('}')) {
    do {
      xs.push_back(c.small_number("set element"));
    } while (c.try_eat(','));
    c.expect('}');
  }
  return OmegaSet(std::move(xs));
}

}  // namespace

OmegaSet parse_omega_set(std::string_view text) {
  Cursor c{text};
  OmegaSet s = set_body(c);
  c.done();
  return s;
}

OmegaFamily parse_family(std::string_view text) {
  Cursor c{text};
  c.expect('{');
  std::vector<OmegaSet> members;
  bool contains_empty = false;
  std::size_t at = c.pos;
  if (c.try_eat('}')) throw ParseError(at, "family must have at least one set");
  do {
    OmegaSet s = set_body(c);
    if (s.empty())
      contains_empty = true;
    else
      members.push_back(std::move(s));
  } while (c.try_eat(','));
  c.expect('}');
  c.done();
  return OmegaFamily(std::move(members), contains_empty);
}

BExtElt parse_ext_elt(std::string_view text) {
  Cursor c{text};
  if (c.try_eat('0')) {
    c.done();
    return BExtElt{};
  }
  c.expect('(');
  BExtElt e;
  e.i = c.number();
  c.expect(',');
  e.j = c.number();
  c.expect(',');
  std::size_t at = c.pos;
  e.F = set_body(c);
  if (e.F.empty())
    throw ParseError(at, "the F-part of a nonzero element must be nonempty");
  c.expect(')');
  c.done();
  return e;
}

ConvIso parse_conv_elt(std::string_view text) {
  Cursor c{text};
  if (c.try_eat('0')) {
    c.done();
    return ConvIso::zero();
  }
  c.expect_word("conv");
  c.expect('(');
  std::uint64_t s = c.number();
  c.expect(',');
  std::uint64_t t = c.number();
  c.expect(',');
  std::size_t at = c.pos;
  std::uint32_t k = c.small_number("rank");
  if (k == 0) throw ParseError(at, "rank must be >= 1 (use 0 for Zero)");
  c.expect(')');
  c.done();
  return ConvIso{s, t, k};
}

MatUnit parse_unit_elt(std::string_view text) {
  Cursor c{text};
  if (c.try_eat('0')) {
    c.done();
    return MatUnit::zero();
  }
  c.expect_word("mu");
  c.expect('(');
  std::uint32_t a = c.small_number("row index");
  c.expect(',');
  std::uint32_t b = c.small_number("column index");
  c.expect(')');
  c.done();
  return MatUnit::unit(a, b);
}

EltKind detect_kind(std::string_view text) {
  Cursor c{text};
  c.skip_ws();
  auto rest = text.substr(c.pos);
  if (rest.rfind("conv", 0) == 0) return EltKind::conv;
  if (rest.rfind("mu", 0) == 0) return EltKind::unit;
  if (!rest.empty() && rest[0] == '(') return EltKind::ext;
  return EltKind::ambiguous_zero;
}

nlohmann::json to_json(const OmegaSet& s) {
  return nlohmann::json(s.elements());
}

nlohmann::json to_json(const BExtElt& x) {
  if (x.is_zero()) return {{"zero", true}};
  return {{"i", x.i}, {"j", x.j}, {"F", to_json(x.F)}};
}

nlohmann::json to_json(const ConvIso& a) {
  if (a.is_zero()) return {{"zero", true}};
  return {{"s", a.s}, {"t", a.t}, {"k", a.k}};
}

nlohmann::json to_json(const MatUnit& x) {
  if (x.is_zero()) return {{"zero", true}};
  return {{"a", x.a}, {"b", x.b}};
}

std::vector<std::pair<ConvIso, ConvIso>> parse_conv_table(std::istream& in,
                                                          std::uint32_t n) {
  std::vector<std::pair<ConvIso, ConvIso>> entries;
  std::string line;
  std::size_t lineno = 0;
  auto one = [&](std::string_view text) {
    switch (detect_kind(text)) {
      case EltKind::ext:
        return ext_to_conv(parse_ext_elt(text), n);
      default:
        return parse_conv_elt(text);
    }
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    std::string_view sv = line;
    while (!sv.empty() && std::isspace(static_cast<unsigned char>(sv.back())))
      sv.remove_suffix(1);
    while (!sv.empty() && std::isspace(static_cast<unsigned char>(sv.front())))
      sv.remove_prefix(1);
    if (sv.empty()) continue;
    auto arrow = sv.find("->");
    if (arrow == std::string_view::npos)
      throw ParseError(lineno, "table line " + std::to_string(lineno) +
                                   " has no '->'");
    try {
      entries.emplace_back(one(sv.substr(0, arrow)), one(sv.substr(arrow + 2)));
    } catch (const ParseError& pe) {
      throw ParseError(lineno, "table line " + std::to_string(lineno) + ": " +
                                   pe.what());
    } catch (const std::invalid_argument& ia) {
      throw ParseError(lineno, "table line " + std::to_string(lineno) + ": " +
                                   ia.what());
    }
  }
  return entries;
}

std::vector<std::pair<ConvIso, ConvIso>> parse_conv_table_file(
    const std::string& path, std::uint32_t n) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open table file: " + path);
  return parse_conv_table(in, n);
}

}  // namespace bext
