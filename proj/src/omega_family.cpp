#include "bext/omega_family.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

#include "bext/errors.hpp"

namespace bext {

OmegaSet::OmegaSet(std::initializer_list<std::uint32_t> xs)
    : OmegaSet(std::vector<std::uint32_t>(xs)) {}

OmegaSet::OmegaSet(std::vector<std::uint32_t> xs) : elems_(std::move(xs)) {
  std::sort(elems_.begin(), elems_.end());
  elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
}

OmegaSet OmegaSet::initial_interval(std::uint32_t k) {
  std::vector<std::uint32_t> xs(static_cast<std::size_t>(k) + 1);
  for (std::uint32_t i = 0; i <= k; ++i) xs[i] = i;
  OmegaSet s;
  s.elems_ = std::move(xs);  // already sorted and unique
  return s;
}

std::uint32_t OmegaSet::max() const {
  if (elems_.empty()) throw std::invalid_argument("max() of empty set");
  return elems_.back();
}

bool OmegaSet::contains(std::uint32_t x) const {
  return std::binary_search(elems_.begin(), elems_.end(), x);
}

std::optional<std::uint32_t> OmegaSet::as_initial_interval() const {
  if (elems_.empty()) return std::nullopt;
  for (std::size_t i = 0; i < elems_.size(); ++i)
    if (elems_[i] != i) return std::nullopt;
  return elems_.back();
}

std::ostream& operator<<(std::ostream& os, const OmegaSet& s) {
  if (auto k = s.as_initial_interval()) return os << "[0;" << *k << "]";
  os << '{';
  bool first = true;
  for (auto x : s) {
    if (!first) os << ',';
    first = false;
    os << x;
  }
  return os << '}';
}

OmegaSet shift_intersect_down(std::uint64_t n, const OmegaSet& f1,
                              const OmegaSet& f2) {
  // f1 ∩ (-n + f2) = {y in f1 : y + n in f2}; elements are uint32, so any
  // n beyond the largest element of f2 empties the result.
  std::vector<std::uint32_t> out;
  if (!f2.empty() && n <= f2.max()) {
    for (auto y : f1) {
      std::uint64_t up = static_cast<std::uint64_t>(y) + n;
      if (up <= f2.max() && f2.contains(static_cast<std::uint32_t>(up)))
        out.push_back(y);
    }
  }
  return OmegaSet(std::move(out));
}

OmegaSet shift_intersect(std::int64_t d, const OmegaSet& f1,
                         const OmegaSet& f2) {
  if (d <= 0) {
    // -d as a magnitude, careful around INT64_MIN
    std::uint64_t n = d == 0 ? 0 : static_cast<std::uint64_t>(-(d + 1)) + 1;
    return shift_intersect_down(n, f1, f2);
  }
  // d > 0: {y in f1 : y - d in f2}
  std::vector<std::uint32_t> out;
  for (auto y : f1) {
    if (y < static_cast<std::uint64_t>(d)) continue;
    std::uint64_t down = y - static_cast<std::uint64_t>(d);
    if (down <= 0xffffffffu && f2.contains(static_cast<std::uint32_t>(down)))
      out.push_back(y);
  }
  return OmegaSet(std::move(out));
}

OmegaFamily::OmegaFamily(std::vector<OmegaSet> members, bool contains_empty)
    : members_(std::move(members)), contains_empty_(contains_empty) {
  for (const auto& m : members_)
    if (m.empty())
      throw std::invalid_argument(
          "empty set goes in the contains_empty flag, not the member list");
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()),
                 members_.end());
}

OmegaFamily OmegaFamily::initial_intervals(std::uint32_t n) {
  std::vector<OmegaSet> ms;
  ms.reserve(n + 1);
  for (std::uint32_t k = 0; k <= n; ++k)
    ms.push_back(OmegaSet::initial_interval(k));
  return OmegaFamily(std::move(ms), /*contains_empty=*/true);
}

bool OmegaFamily::contains(const OmegaSet& s) const {
  if (s.empty()) return contains_empty_;
  return std::binary_search(members_.begin(), members_.end(), s);
}

ClosureVerdict OmegaFamily::is_omega_closed() const {
  if (members_.empty() && !contains_empty_)
    throw std::invalid_argument("family is empty");
  for (const auto& f1 : members_) {
    for (const auto& f2 : members_) {
      // n > max(f2) only reproduces the empty intersection, so one
      // representative past the top suffices.
      std::uint64_t top = f2.empty() ? 0 : f2.max();
      for (std::uint64_t n = 0; n <= top + 1; ++n) {
        OmegaSet r = shift_intersect_down(n, f1, f2);
        if (!contains(r)) return {false, ClosureWitness{n, f1, f2}};
      }
    }
  }
  return {true, std::nullopt};
}

std::ostream& operator<<(std::ostream& os, const OmegaFamily& fam) {
  os << '{';
  bool first = true;
  for (const auto& m : fam.members()) {
    if (!first) os << ',';
    first = false;
    os << m;
  }
  if (fam.contains_empty()) {
    if (!first) os << ',';
    os << "{}";
  }
  return os << '}';
}

}  // namespace bext
