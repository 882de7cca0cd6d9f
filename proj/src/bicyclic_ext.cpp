#include "bext/bicyclic_ext.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "bext/errors.hpp"

namespace bext {

BicyclicElt bicyclic_mul(const BicyclicElt& x, const BicyclicElt& y) {
  if (x.j <= y.i) return {checked_add(x.i, y.i - x.j), y.j};
  return {x.i, checked_add(x.j - y.i, y.j)};
}

std::ostream& operator<<(std::ostream& os, const BicyclicElt& x) {
  return os << '(' << x.i << ',' << x.j << ')';
}

std::ostream& operator<<(std::ostream& os, const BExtElt& x) {
  if (x.is_zero()) return os << '0';
  return os << '(' << x.i << ',' << x.j << ',' << x.F << ')';
}

ExtSemigroup::ExtSemigroup(OmegaFamily family) : family_(std::move(family)) {}

ExtSemigroup ExtSemigroup::initial_intervals(std::uint32_t n) {
  return ExtSemigroup(OmegaFamily::initial_intervals(n));
}

BExtElt ExtSemigroup::zero() const {
  if (!family_.contains_empty())
    throw StructureError("family has no empty set, so no Zero exists");
  return BExtElt{};
}

BExtElt ExtSemigroup::make(std::uint64_t i, std::uint64_t j, OmegaSet F) const {
  if (F.empty())
    throw std::invalid_argument("use zero() for the zero element");
  if (!family_.contains(F)) {
    std::ostringstream msg;
    msg << "F-part " << F << " is not a member of the ambient family";
    throw std::invalid_argument(msg.str());
  }
  return BExtElt{i, j, std::move(F)};
}

BExtElt ExtSemigroup::mul(const BExtElt& x, const BExtElt& y) const {
  if (x.is_zero() || y.is_zero()) return zero();
  std::uint64_t i, j;
  OmegaSet F;
  if (x.j <= y.i) {
    i = checked_add(x.i, y.i - x.j);
    j = y.j;
    // (j1 - i2 + F1) ∩ F2 with j1 <= i2
    F = shift_intersect_down(y.i - x.j, y.F, x.F);
  } else {
    i = x.i;
    j = checked_add(x.j - y.i, y.j);
    // F1 ∩ (i2 - j1 + F2) with i2 < j1
    F = shift_intersect_down(x.j - y.i, x.F, y.F);
  }
  if (F.empty()) {
    if (!family_.contains_empty()) {
      std::ostringstream msg;
      msg << "product of " << x << " and " << y
          << " has empty F-part but the family has no empty set"
             " (family is not omega-closed)";
      throw StructureError(msg.str());
    }
    return zero();
  }
  if (!family_.contains(F)) {
    std::ostringstream msg;
    msg << "product of " << x << " and " << y << " has F-part " << F
        << " outside the family (family is not omega-closed)";
    throw StructureError(msg.str());
  }
  return BExtElt{i, j, std::move(F)};
}

BExtElt ExtSemigroup::inv(const BExtElt& x) const {
  if (x.is_zero()) return x;
  return BExtElt{x.j, x.i, x.F};
}

bool ExtSemigroup::nat_leq(const BExtElt& x, const BExtElt& y) const {
  return mul(mul(x, inv(x)), y) == x;
}

GreenRelations ExtSemigroup::green_classify(const BExtElt& x,
                                            const BExtElt& y) const {
  GreenRelations g;
  g.l = mul(inv(x), x) == mul(inv(y), y);
  g.r = mul(x, inv(x)) == mul(y, inv(y));
  g.h = g.l && g.r;
  // Nonzero elements are D-related iff their F-parts agree: (i_y, j_x, F)
  // always exists and links them through L and R.  Zero is D-only to itself.
  if (x.is_zero() || y.is_zero())
    g.d = x.is_zero() && y.is_zero();
  else
    g.d = x.F == y.F;
  return g;
}

std::vector<BExtElt> ExtSemigroup::window(std::uint64_t w) const {
  std::vector<BExtElt> out;
  if (family_.contains_empty()) out.push_back(BExtElt{});
  for (std::uint64_t i = 0; i <= w; ++i)
    for (std::uint64_t j = 0; j <= w; ++j)
      for (const auto& F : family_.members())
        out.push_back(BExtElt{i, j, F});
  return out;
}

bool ExtSemigroup::in_window(const BExtElt& x, std::uint64_t w) const {
  return x.is_zero() || (x.i <= w && x.j <= w);
}

BExtElt ExtSemigroup::apply_shift(std::uint64_t p, const BExtElt& x) const {
  if (x.is_zero()) return x;
  return BExtElt{checked_add(p, x.i), checked_add(p, x.j), x.F};
}

namespace detail {

std::vector<std::vector<BExtElt>> rees_classes_impl(
    const ExtSemigroup& sgp, std::uint64_t w,
    const std::vector<char>& ideal_mask) {
  auto win = sgp.window(w);
  std::vector<std::size_t> ideal;
  for (std::size_t k = 0; k < win.size(); ++k)
    if (ideal_mask[k]) ideal.push_back(k);
  if (ideal.empty())
    throw std::invalid_argument("ideal predicate selects nothing on the window");

  std::map<BExtElt, std::size_t> index;
  for (std::size_t k = 0; k < win.size(); ++k) index.emplace(win[k], k);
  auto in_ideal = [&](const BExtElt& e) {
    auto it = index.find(e);
    return it != index.end() && ideal_mask[it->second];
  };

  // Ideal property inside the window: products with ideal members that stay
  // in the window must land back in the ideal.
  for (std::size_t s : ideal) {
    for (const auto& a : win) {
      for (const BExtElt& p : {sgp.mul(a, win[s]), sgp.mul(win[s], a)}) {
        if (!sgp.in_window(p, w)) continue;
        if (!in_ideal(p)) {
          std::ostringstream msg;
          msg << "not an ideal on the window: witness (" << a << ", " << win[s]
              << ", " << p << ")";
          throw std::invalid_argument(msg.str());
        }
      }
    }
  }

  // Congruence property for (ideal x ideal) ∪ diagonal: translate every
  // related pair on both sides; products leaving the window are skipped.
  for (std::size_t sa : ideal) {
    for (std::size_t sb : ideal) {
      for (const auto& a : win) {
        BExtElt l1 = sgp.mul(a, win[sa]), l2 = sgp.mul(a, win[sb]);
        if (sgp.in_window(l1, w) && sgp.in_window(l2, w) &&
            !(in_ideal(l1) && in_ideal(l2)) && l1 != l2)
          throw std::invalid_argument("left translation broke the congruence");
        BExtElt r1 = sgp.mul(win[sa], a), r2 = sgp.mul(win[sb], a);
        if (sgp.in_window(r1, w) && sgp.in_window(r2, w) &&
            !(in_ideal(r1) && in_ideal(r2)) && r1 != r2)
          throw std::invalid_argument("right translation broke the congruence");
      }
    }
  }

  std::vector<std::vector<BExtElt>> blocks;
  std::vector<BExtElt> ideal_block;
  for (std::size_t s : ideal) ideal_block.push_back(win[s]);
  blocks.push_back(std::move(ideal_block));
  for (std::size_t k = 0; k < win.size(); ++k)
    if (!ideal_mask[k]) blocks.push_back({win[k]});
  return blocks;
}

}  // namespace detail

}  // namespace bext
