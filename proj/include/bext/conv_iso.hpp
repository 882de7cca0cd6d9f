#ifndef BEXT_CONV_ISO_HPP
#define BEXT_CONV_ISO_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "bext/bicyclic_ext.hpp"

namespace bext {

// A convex order isomorphism between two intervals of omega: maps s+r to t+r
// for 0 <= r < k.  k == 0 encodes Zero (the empty map), with s = t = 0.
struct ConvIso {
  std::uint64_t s = 0, t = 0;
  std::uint32_t k = 0;

  static ConvIso zero() { return {}; }
  static ConvIso make(std::uint64_t s, std::uint64_t t, std::uint32_t k);

  bool is_zero() const { return k == 0; }
  bool is_idempotent() const { return !is_zero() && s == t; }
  std::uint32_t rank() const { return k; }

  friend bool operator==(const ConvIso&, const ConvIso&) = default;
  friend auto operator<=>(const ConvIso&, const ConvIso&) = default;
};

std::ostream& operator<<(std::ostream&, const ConvIso&);

// Left-to-right composition of partial maps: x(ab) = (xa)b.  Empty overlap
// of ran(a) with dom(b) gives Zero.
ConvIso compose(const ConvIso& a, const ConvIso& b);

ConvIso inverse(const ConvIso& a);

// Natural partial order: a <= b iff a = (a a^-1) b, i.e. b extends a.
bool nat_leq(const ConvIso& a, const ConvIso& b);

// The rank-grading isomorphism with the extension semigroup over initial
// intervals: (i, j, [0;k]) corresponds to the convex map of rank k+1 from
// [i, i+k] onto [j, j+k]; Zero corresponds to Zero.  `n` is the rank bound
// of the convex side, so the extension side runs over the family of initial
// intervals [0;0] .. [0;n-1].
ConvIso ext_to_conv(const BExtElt& x, std::uint32_t n);
BExtElt conv_to_ext(const ConvIso& a, std::uint32_t n);

// All idempotents f with e <= f, rank bound n.  Finite because dom(f) must
// be a convex superset of dom(e) of size at most n.  Rejects Zero (its
// up-set is all idempotents) and non-idempotents.
std::vector<ConvIso> up_set(const ConvIso& e, std::uint32_t n);

// The maximal idempotents of rank n whose domain starts at 0..w.
std::vector<ConvIso> maximal_idempotents(std::uint64_t w, std::uint32_t n);

// Maximal chains in the idempotent semilattice restricted to domains inside
// [0, w].  Each chain starts at Zero and climbs one rank per step; with
// w + 1 >= n every chain has exactly n + 1 elements.
std::vector<std::vector<ConvIso>> maximal_chains(std::uint64_t w,
                                                 std::uint32_t n);

// Graphviz rendering of the idempotent order restricted to [0, w], one
// rank-graded layer per subgraph, edges are covering relations.
std::string idempotent_hasse_dot(std::uint64_t w, std::uint32_t n);

// Semigroup-context adapter for the endomorphism machinery.  Windows hold
// every element with dom ∪ ran inside [0, w] and rank <= n; they are closed
// under composition.
struct ConvSemigroup {
  std::uint32_t n;

  using elt_type = ConvIso;

  ConvIso zero() const { return ConvIso::zero(); }
  ConvIso mul(const ConvIso& a, const ConvIso& b) const { return compose(a, b); }
  ConvIso inv(const ConvIso& a) const { return inverse(a); }
  bool nat_leq(const ConvIso& a, const ConvIso& b) const {
    return bext::nat_leq(a, b);
  }
  ConvIso apply_shift(std::uint64_t p, const ConvIso& a) const;
  std::vector<ConvIso> window(std::uint64_t w) const;
  bool in_window(const ConvIso& a, std::uint64_t w) const;
};

}  // namespace bext

#endif
