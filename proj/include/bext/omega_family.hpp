#ifndef BEXT_OMEGA_FAMILY_HPP
#define BEXT_OMEGA_FAMILY_HPP

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <vector>

namespace bext {

// A finite subset of omega = {0, 1, 2, ...}, kept sorted and duplicate-free.
class OmegaSet {
 public:
  OmegaSet() = default;
  OmegaSet(std::initializer_list<std::uint32_t> xs);
  explicit OmegaSet(std::vector<std::uint32_t> xs);  // normalizes

  // {0, 1, ..., k}
  static OmegaSet initial_interval(std::uint32_t k);

  bool empty() const { return elems_.empty(); }
  std::size_t size() const { return elems_.size(); }
  std::uint32_t max() const;  // pre: nonempty
  bool contains(std::uint32_t x) const;

  // k such that *this == {0..k}, if any.
  std::optional<std::uint32_t> as_initial_interval() const;

  const std::vector<std::uint32_t>& elements() const { return elems_; }
  auto begin() const { return elems_.begin(); }
  auto end() const { return elems_.end(); }

  friend bool operator==(const OmegaSet&, const OmegaSet&) = default;
  friend auto operator<=>(const OmegaSet&, const OmegaSet&) = default;

 private:
  std::vector<std::uint32_t> elems_;
};

std::ostream& operator<<(std::ostream&, const OmegaSet&);

// f1 ∩ (d + f2), where d + f2 = {d + x : x in f2} and elements that fall
// below zero are dropped.  d may be negative; the empty set shifts to the
// empty set.
OmegaSet shift_intersect(std::int64_t d, const OmegaSet& f1, const OmegaSet& f2);

// Same with d = -n for n given as an unsigned magnitude (the only shape
// multiplication ever needs; avoids signed overflow for huge indices).
OmegaSet shift_intersect_down(std::uint64_t n, const OmegaSet& f1, const OmegaSet& f2);

struct ClosureWitness {
  std::uint64_t n;
  OmegaSet f1, f2;
};

struct ClosureVerdict {
  bool closed;
  std::optional<ClosureWitness> witness;  // set iff !closed
};

// A family of nonempty finite subsets of omega, plus a flag recording whether
// the empty set belongs to it.  Canonical member order, no duplicates.
class OmegaFamily {
 public:
  OmegaFamily(std::vector<OmegaSet> members, bool contains_empty);

  // {[0;0], [0;1], ..., [0;n]} with the empty set adjoined, so the attached
  // extension semigroup has a Zero.
  static OmegaFamily initial_intervals(std::uint32_t n);

  const std::vector<OmegaSet>& members() const { return members_; }
  bool contains_empty() const { return contains_empty_; }
  bool contains(const OmegaSet& s) const;

  // Checks F1 ∩ (-n + F2) ∈ family for all members F1, F2 and all n up to
  // max(F2) + 1; larger n only reproduce the empty intersection.
  ClosureVerdict is_omega_closed() const;

  friend bool operator==(const OmegaFamily&, const OmegaFamily&) = default;

 private:
  std::vector<OmegaSet> members_;
  bool contains_empty_;
};

std::ostream& operator<<(std::ostream&, const OmegaFamily&);

}  // namespace bext

#endif
