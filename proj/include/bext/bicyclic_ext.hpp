#ifndef BEXT_BICYCLIC_EXT_HPP
#define BEXT_BICYCLIC_EXT_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "bext/omega_family.hpp"

namespace bext {

// Element of the bicyclic monoid on omega x omega.
struct BicyclicElt {
  std::uint64_t i = 0, j = 0;

  friend bool operator==(const BicyclicElt&, const BicyclicElt&) = default;
  friend auto operator<=>(const BicyclicElt&, const BicyclicElt&) = default;
};

BicyclicElt bicyclic_mul(const BicyclicElt& x, const BicyclicElt& y);

std::ostream& operator<<(std::ostream&, const BicyclicElt&);

// Element of an extension semigroup over an omega-closed family: Zero, or a
// triple (i, j, F) with F a nonempty member of the ambient family.  Zero is
// encoded by an empty F (with i = j = 0); use ExtSemigroup to build elements
// so the family invariants actually hold.
struct BExtElt {
  std::uint64_t i = 0, j = 0;
  OmegaSet F;

  bool is_zero() const { return F.empty(); }

  friend bool operator==(const BExtElt&, const BExtElt&) = default;
  friend auto operator<=>(const BExtElt&, const BExtElt&) = default;
};

std::ostream& operator<<(std::ostream&, const BExtElt&);

struct GreenRelations {
  bool l = false, r = false, h = false, d = false;
};

// The extension of the bicyclic monoid by an omega-closed family, with the
// ideal of empty-F triples collapsed to Zero.  Instances carry the ambient
// family; elements are plain values and only make sense relative to one
// semigroup.
class ExtSemigroup {
 public:
  explicit ExtSemigroup(OmegaFamily family);

  // F_n shorthand: family of initial intervals [0;0].. [0;n] plus empty set.
  static ExtSemigroup initial_intervals(std::uint32_t n);

  const OmegaFamily& family() const { return family_; }

  BExtElt zero() const;  // pre: family contains the empty set
  BExtElt make(std::uint64_t i, std::uint64_t j, OmegaSet F) const;

  // (i1,j1,F1)(i2,j2,F2) with the F-part the matching shift-intersection.
  // An empty F-part collapses to Zero; a product whose F-part escapes the
  // family throws StructureError (the family was not omega-closed).
  BExtElt mul(const BExtElt& x, const BExtElt& y) const;

  BExtElt inv(const BExtElt& x) const;  // Zero -> Zero, (i,j,F) -> (j,i,F)

  // Natural partial order: x <= y iff x = (x x^-1) y.
  bool nat_leq(const BExtElt& x, const BExtElt& y) const;

  // L: equal right idempotents x^-1 x; R: equal left idempotents x x^-1;
  // H = L and R; D: both Zero, or both nonzero with equal F-parts.
  GreenRelations green_classify(const BExtElt& x, const BExtElt& y) const;

  // All nonzero (i, j, F) with i, j <= w and F a member, preceded by Zero
  // when the family has one.  Deterministic order.
  std::vector<BExtElt> window(std::uint64_t w) const;

  bool in_window(const BExtElt& x, std::uint64_t w) const;

  // Endomorphism support: adds p to both indices, keeps the F-part.
  BExtElt apply_shift(std::uint64_t p, const BExtElt& x) const;

  using elt_type = BExtElt;

 private:
  OmegaFamily family_;
};

// Partition of a window into Rees congruence classes: the selected ideal is
// one block, everything else stays a singleton.  Checks that the predicate
// picks out a nonempty set closed under in-window multiplication, then
// verifies the congruence property on all in-window pairs/translations.
// Throws std::invalid_argument (with a witness rendered into the message) if
// the predicate is not an ideal on the window.
template <typename Pred>
std::vector<std::vector<BExtElt>> rees_congruence_classes(
    const ExtSemigroup& sgp, std::uint64_t w, Pred&& in_ideal);

namespace detail {
std::vector<std::vector<BExtElt>> rees_classes_impl(
    const ExtSemigroup& sgp, std::uint64_t w,
    const std::vector<char>& ideal_mask);
}

template <typename Pred>
std::vector<std::vector<BExtElt>> rees_congruence_classes(
    const ExtSemigroup& sgp, std::uint64_t w, Pred&& in_ideal) {
  auto win = sgp.window(w);
  std::vector<char> mask(win.size(), 0);
  for (std::size_t k = 0; k < win.size(); ++k)
    mask[k] = in_ideal(win[k]) ? 1 : 0;
  return detail::rees_classes_impl(sgp, w, mask);
}

}  // namespace bext

#endif
