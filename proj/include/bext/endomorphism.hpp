#ifndef BEXT_ENDOMORPHISM_HPP
#define BEXT_ENDOMORPHISM_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "bext/conv_iso.hpp"
#include "bext/errors.hpp"

namespace bext {

enum class EndoKind { shift, annihilate, table };

// A represented endomorphism of a semigroup context Sgp (ConvSemigroup or
// ExtSemigroup): symbolic shift-by-p, symbolic constant map at an idempotent,
// or an explicit total map on a window.  Composition is left-to-right
// throughout: (x)(e1 ∘ e2) applies e1 first.
template <typename Elt>
struct Endo {
  EndoKind kind = EndoKind::shift;
  std::uint64_t shift_by = 0;                 // kind == shift
  Elt target{};                               // kind == annihilate
  std::vector<std::pair<Elt, Elt>> entries;   // kind == table, sorted by key

  static Endo shift(std::uint64_t p) {
    Endo e;
    e.kind = EndoKind::shift;
    e.shift_by = p;
    return e;
  }

  static Endo table(std::vector<std::pair<Elt, Elt>> map) {
    Endo e;
    e.kind = EndoKind::table;
    e.entries = std::move(map);
    std::sort(e.entries.begin(), e.entries.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t i = 1; i < e.entries.size(); ++i)
      if (e.entries[i - 1].first == e.entries[i].first)
        throw std::invalid_argument("duplicate key in endomorphism table");
    return e;
  }

  const Elt* lookup(const Elt& x) const {
    auto it = std::lower_bound(
        entries.begin(), entries.end(), x,
        [](const auto& entry, const Elt& key) { return entry.first < key; });
    if (it == entries.end() || !(it->first == x)) return nullptr;
    return &it->second;
  }

  friend bool operator==(const Endo&, const Endo&) = default;
};

// Constant map at `target`; valid only when the target is idempotent (or
// Zero), which is exactly when the constant map is an endomorphism.
template <typename Sgp, typename Elt = typename Sgp::elt_type>
Endo<Elt> make_annihilator(const Sgp& sgp, const Elt& target) {
  if (!(sgp.mul(target, target) == target))
    throw std::invalid_argument("annihilator target must be idempotent");
  Endo<Elt> e;
  e.kind = EndoKind::annihilate;
  e.target = target;
  return e;
}

// Build the explicit table of `e` on the window of width w.
template <typename Sgp, typename Elt = typename Sgp::elt_type>
Endo<Elt> table_of(const Sgp& sgp, const Endo<Elt>& e, std::uint64_t w);

template <typename Sgp, typename Elt = typename Sgp::elt_type>
Elt apply(const Sgp& sgp, const Endo<Elt>& e, const Elt& x) {
  switch (e.kind) {
    case EndoKind::shift:
      return sgp.apply_shift(e.shift_by, x);
    case EndoKind::annihilate:
      return e.target;
    case EndoKind::table: {
      const Elt* v = e.lookup(x);
      if (!v) throw StructureError("element is outside the table window");
      return *v;
    }
  }
  throw std::logic_error("unreachable");
}

template <typename Sgp, typename Elt>
Endo<Elt> table_of(const Sgp& sgp, const Endo<Elt>& e, std::uint64_t w) {
  std::vector<std::pair<Elt, Elt>> map;
  for (const auto& x : sgp.window(w)) map.emplace_back(x, apply(sgp, e, x));
  return Endo<Elt>::table(std::move(map));
}

template <typename Elt>
struct VerifyResult {
  bool ok = true;
  std::uint64_t checked = 0, skipped = 0;
  std::optional<std::pair<Elt, Elt>> witness;  // first failing pair
};

// Checks apply(e,x) * apply(e,y) == apply(e, x*y) over all pairs from the
// window.  Pairs that e cannot evaluate (an operand or the product left a
// table window, or image arithmetic overflows) are skipped and counted.  The
// scan stops at the first failing pair, so `checked` counts the pairs seen
// up to and including the witness.
template <typename Sgp, typename Elt = typename Sgp::elt_type>
VerifyResult<Elt> verify_endomorphism(const Sgp& sgp, const Endo<Elt>& e,
                                      std::uint64_t w) {
  VerifyResult<Elt> res;
  auto win = sgp.window(w);
  std::vector<std::optional<Elt>> img;
  img.reserve(win.size());
  for (const auto& x : win) {
    try {
      img.push_back(apply(sgp, e, x));
    } catch (const StructureError&) {
      img.push_back(std::nullopt);
    } catch (const ArithmeticOverflow&) {
      img.push_back(std::nullopt);
    }
  }
  for (std::size_t a = 0; a < win.size(); ++a) {
    for (std::size_t b = 0; b < win.size(); ++b) {
      if (!img[a] || !img[b]) {
        ++res.skipped;
        continue;
      }
      Elt prod = sgp.mul(win[a], win[b]);
      Elt lhs, rhs;
      try {
        rhs = apply(sgp, e, prod);
        lhs = sgp.mul(*img[a], *img[b]);
      } catch (const StructureError&) {
        ++res.skipped;
        continue;
      } catch (const ArithmeticOverflow&) {
        ++res.skipped;
        continue;
      }
      ++res.checked;
      if (!(lhs == rhs)) {
        res.ok = false;
        res.witness = std::make_pair(win[a], win[b]);
        return res;
      }
    }
  }
  return res;
}

// Left-to-right composition.  Symbolic where possible; anything involving a
// table becomes a table.  Table windows must be compatible: every value the
// first factor produces must be readable by the second.
template <typename Sgp, typename Elt = typename Sgp::elt_type>
Endo<Elt> compose_endos(const Sgp& sgp, const Endo<Elt>& e1,
                        const Endo<Elt>& e2) {
  if (e2.kind == EndoKind::annihilate) return e2;
  if (e1.kind == EndoKind::shift && e2.kind == EndoKind::shift)
    return Endo<Elt>::shift(checked_add(e1.shift_by, e2.shift_by));
  if (e1.kind == EndoKind::annihilate) {
    Endo<Elt> e;
    e.kind = EndoKind::annihilate;
    try {
      e.target = apply(sgp, e2, e1.target);
    } catch (const StructureError&) {
      throw StructureError(
          "window mismatch: annihilator target is outside the second table");
    }
    return e;
  }
  if (e1.kind == EndoKind::table) {
    std::vector<std::pair<Elt, Elt>> map;
    map.reserve(e1.entries.size());
    for (const auto& [x, v] : e1.entries) {
      try {
        map.emplace_back(x, apply(sgp, e2, v));
      } catch (const StructureError&) {
        std::ostringstream msg;
        msg << "window mismatch: first table's value at " << x
            << " is outside the second table";
        throw StructureError(msg.str());
      }
    }
    return Endo<Elt>::table(std::move(map));
  }
  // e1 is a shift, e2 a table: domain is the preimage of e2's window.
  std::vector<std::pair<Elt, Elt>> map;
  for (const auto& [y, v] : e2.entries) {
    Elt x = y;
    bool has_preimage = false;
    if constexpr (std::is_same_v<Elt, ConvIso>) {
      if (y.is_zero()) {
        has_preimage = true;
      } else if (y.s >= e1.shift_by && y.t >= e1.shift_by) {
        x = ConvIso{y.s - e1.shift_by, y.t - e1.shift_by, y.k};
        has_preimage = true;
      }
    } else {
      if (y.is_zero()) {
        has_preimage = true;
      } else if (y.i >= e1.shift_by && y.j >= e1.shift_by) {
        x = Elt{y.i - e1.shift_by, y.j - e1.shift_by, y.F};
        has_preimage = true;
      }
    }
    if (has_preimage) map.emplace_back(x, v);
  }
  if (map.empty())
    throw StructureError("window mismatch: shifted domain misses the table");
  return Endo<Elt>::table(std::move(map));
}

enum class ViolationKind {
  zero_not_fixed,
  not_injective,
  max_idempotent_image_not_maximal,
  order_not_preserved,
  pointwise_mismatch,
};

std::string to_string(ViolationKind k);

struct ClassifyViolation {
  ViolationKind kind;
  std::string detail;  // rendered witness
};

using ClassifyOutcome = std::variant<std::uint64_t, ClassifyViolation>;

// Decides whether a table over a convex-map window is the shift-by-i0
// endomorphism, reading i0 off the image of the maximal idempotent
// conv(0,0,n).  Checks run in dependency order: Zero fixed, injectivity,
// image of the maximal idempotent is maximal, order preservation, pointwise
// agreement with the shift.  Requires n >= 2 (rank 1 is the matrix-units
// world) and a window containing conv(0,0,n) and its image.
ClassifyOutcome classify_injective(const ConvSemigroup& sgp,
                                   const Endo<ConvIso>& table);

struct MonoidCheckResult {
  bool ok = true;
  bool composition_law = true;   // shift(p) then shift(q) == shift(p+q)
  bool commutative = true;
  bool distinct_actions = true;  // p != q act differently on the window
  bool surjective_only_zero = true;
  std::string detail;
};

// Realizes "the injective endomorphisms form a copy of (omega, +)" at window
// scale: composition law and commutativity pointwise for p, q <= pmax, the
// shifts act pairwise differently, and only shift-by-0 maps the window onto
// itself.
template <typename Sgp, typename Elt = typename Sgp::elt_type>
MonoidCheckResult injective_endo_monoid_check(const Sgp& sgp,
                                              std::uint64_t pmax,
                                              std::uint64_t w) {
  MonoidCheckResult res;
  auto win = sgp.window(w);
  for (std::uint64_t p = 0; p <= pmax && res.composition_law; ++p) {
    for (std::uint64_t q = 0; q <= pmax && res.composition_law; ++q) {
      auto composed = compose_endos(sgp, Endo<Elt>::shift(p), Endo<Elt>::shift(q));
      if (composed.kind != EndoKind::shift || composed.shift_by != p + q)
        res.composition_law = false;
      for (const auto& x : win) {
        Elt via_pq = sgp.apply_shift(q, sgp.apply_shift(p, x));
        Elt direct = sgp.apply_shift(p + q, x);
        Elt via_qp = sgp.apply_shift(p, sgp.apply_shift(q, x));
        if (!(via_pq == direct)) res.composition_law = false;
        if (!(via_qp == direct)) res.commutative = false;
      }
    }
  }
  for (std::uint64_t p = 0; p <= pmax && res.distinct_actions; ++p)
    for (std::uint64_t q = p + 1; q <= pmax; ++q) {
      bool differ = false;
      for (const auto& x : win)
        if (!(sgp.apply_shift(p, x) == sgp.apply_shift(q, x))) {
          differ = true;
          break;
        }
      if (!differ) {
        res.distinct_actions = false;
        break;
      }
    }
  for (std::uint64_t p = 0; p <= pmax; ++p) {
    // image of the window under shift-by-p, compared against the window
    std::vector<Elt> image;
    image.reserve(win.size());
    for (const auto& x : win) image.push_back(sgp.apply_shift(p, x));
    std::sort(image.begin(), image.end());
    bool onto = true;
    for (const auto& y : win)
      if (!std::binary_search(image.begin(), image.end(), y)) {
        onto = false;
        break;
      }
    if (onto != (p == 0)) {
      res.surjective_only_zero = false;
      break;
    }
  }
  res.ok = res.composition_law && res.commutative && res.distinct_actions &&
           res.surjective_only_zero;
  return res;
}

}  // namespace bext

#endif
