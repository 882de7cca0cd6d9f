#include "bext/conv_iso.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "bext/errors.hpp"

namespace bext {

ConvIso ConvIso::make(std::uint64_t s, std::uint64_t t, std::uint32_t k) {
  if (k == 0) throw std::invalid_argument("rank must be >= 1; use zero()");
  return {s, t, k};
}

std::ostream& operator<<(std::ostream& os, const ConvIso& a) {
  if (a.is_zero()) return os << '0';
  return os << "conv(" << a.s << ',' << a.t << ',' << a.k << ')';
}

ConvIso compose(const ConvIso& a, const ConvIso& b) {
  if (a.is_zero() || b.is_zero()) return ConvIso::zero();
  // Overlap of ran(a) = [a.t, a.t + a.k) with dom(b) = [b.s, b.s + b.k).
  std::uint64_t lo = std::max(a.t, b.s);
  std::uint64_t hi = std::min(checked_add(a.t, a.k), checked_add(b.s, b.k));
  if (hi <= lo) return ConvIso::zero();
  ConvIso r;
  r.k = static_cast<std::uint32_t>(hi - lo);
  r.s = checked_add(a.s, lo - a.t);
  r.t = checked_add(b.t, lo - b.s);
  return r;
}

ConvIso inverse(const ConvIso& a) {
  ConvIso r = a;
  std::swap(r.s, r.t);
  return r;
}

bool nat_leq(const ConvIso& a, const ConvIso& b) {
  if (a.is_zero()) return true;
  if (b.is_zero()) return false;
  // b restricted to dom(a) equals a: same offset, containing domain.
  if (b.s > a.s) return false;
  if (checked_add(a.s, a.k) > checked_add(b.s, b.k)) return false;
  // offsets t - s agree, compared without signed arithmetic
  return checked_add(a.t, b.s) == checked_add(b.t, a.s);
}

ConvIso ext_to_conv(const BExtElt& x, std::uint32_t n) {
  if (n == 0) throw std::invalid_argument("rank bound must be >= 1");
  if (x.is_zero()) return ConvIso::zero();
  auto k = x.F.as_initial_interval();
  if (!k) {
    std::ostringstream msg;
    msg << "F-part " << x.F << " is not an initial interval";
    throw std::invalid_argument(msg.str());
  }
  if (*k + 1 > n)
    throw std::invalid_argument("F-part exceeds the rank bound");
  return ConvIso{x.i, x.j, *k + 1};
}

BExtElt conv_to_ext(const ConvIso& a, std::uint32_t n) {
  if (n == 0) throw std::invalid_argument("rank bound must be >= 1");
  if (a.k > n) throw std::invalid_argument("rank exceeds the bound");
  if (a.is_zero()) return BExtElt{};
  return BExtElt{a.s, a.t, OmegaSet::initial_interval(a.k - 1)};
}

std::vector<ConvIso> up_set(const ConvIso& e, std::uint32_t n) {
  if (e.is_zero())
    throw std::invalid_argument(
        "up-set of Zero is every idempotent, which is infinite");
  if (!e.is_idempotent())
    throw std::invalid_argument("up-set is defined for idempotents only");
  if (e.k > n) throw std::invalid_argument("rank exceeds the bound");
  std::vector<ConvIso> out;
  for (std::uint32_t m = e.k; m <= n; ++m) {
    std::uint64_t end = checked_add(e.s, e.k);  // one past dom(e)
    std::uint64_t lo = end > m ? end - m : 0;
    for (std::uint64_t u = lo; u <= e.s; ++u)
      out.push_back(ConvIso{u, u, m});
  }
  return out;
}

std::vector<ConvIso> maximal_idempotents(std::uint64_t w, std::uint32_t n) {
  if (n == 0) throw std::invalid_argument("rank bound must be >= 1");
  std::vector<ConvIso> out;
  out.reserve(w + 1);
  for (std::uint64_t i = 0; i <= w; ++i) out.push_back(ConvIso{i, i, n});
  return out;
}

namespace {

void grow_chains(std::uint64_t lo, std::uint64_t hi, std::uint64_t w,
                 std::uint32_t target, std::vector<ConvIso>& chain,
                 std::vector<std::vector<ConvIso>>& out) {
  if (chain.size() == static_cast<std::size_t>(target) + 1) {
    out.push_back(chain);
    return;
  }
  // extend the interval [lo, hi] one step left or right inside [0, w]
  if (lo > 0) {
    chain.push_back(ConvIso{lo - 1, lo - 1, static_cast<std::uint32_t>(hi - lo + 2)});
    grow_chains(lo - 1, hi, w, target, chain, out);
    chain.pop_back();
  }
  if (hi < w) {
    chain.push_back(ConvIso{lo, lo, static_cast<std::uint32_t>(hi - lo + 2)});
    grow_chains(lo, hi + 1, w, target, chain, out);
    chain.pop_back();
  }
}

}  // namespace

std::vector<std::vector<ConvIso>> maximal_chains(std::uint64_t w,
                                                 std::uint32_t n) {
  if (n == 0) throw std::invalid_argument("rank bound must be >= 1");
  // A maximal chain climbs Zero, rank 1, rank 2, ... with nested convex
  // domains; inside [0, w] growth stops at rank min(n, w + 1).
  std::uint32_t target =
      static_cast<std::uint32_t>(std::min<std::uint64_t>(n, w + 1));
  std::vector<std::vector<ConvIso>> out;
  for (std::uint64_t a = 0; a <= w; ++a) {
    std::vector<ConvIso> chain{ConvIso::zero(), ConvIso{a, a, 1}};
    grow_chains(a, a, w, target, chain, out);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string idempotent_hasse_dot(std::uint64_t w, std::uint32_t n) {
  std::ostringstream dot;
  auto node = [](const ConvIso& e) {
    std::ostringstream id;
    if (e.is_zero())
      id << "z";
    else
      id << "e_" << e.s << "_" << e.k;
    return id.str();
  };
  dot << "digraph idempotents {\n  rankdir=BT;\n  node [shape=box];\n";
  dot << "  { rank=same; z [label=\"0\"]; }\n";
  std::uint32_t top =
      static_cast<std::uint32_t>(std::min<std::uint64_t>(n, w + 1));
  for (std::uint32_t m = 1; m <= top; ++m) {
    dot << "  { rank=same;";
    for (std::uint64_t u = 0; u + m <= w + 1; ++u) {
      ConvIso e{u, u, m};
      dot << ' ' << node(e) << " [label=\"conv(" << u << ',' << u << ',' << m
          << ")\"];";
    }
    dot << " }\n";
  }
  // covering edges: one rank up, domain grows by one endpoint
  for (std::uint64_t u = 0; u + 1 <= w + 1; ++u)
    dot << "  z -> " << node(ConvIso{u, u, 1}) << ";\n";
  for (std::uint32_t m = 1; m + 1 <= top; ++m)
    for (std::uint64_t u = 0; u + m <= w + 1; ++u) {
      ConvIso e{u, u, m};
      if (u > 0)
        dot << "  " << node(e) << " -> " << node(ConvIso{u - 1, u - 1, m + 1})
            << ";\n";
      if (u + m <= w)
        dot << "  " << node(e) << " -> " << node(ConvIso{u, u, m + 1})
            << ";\n";
    }
  dot << "}\n";
  return dot.str();
}

ConvIso ConvSemigroup::apply_shift(std::uint64_t p, const ConvIso& a) const {
  if (a.is_zero()) return a;
  return ConvIso{checked_add(p, a.s), checked_add(p, a.t), a.k};
}

std::vector<ConvIso> ConvSemigroup::window(std::uint64_t w) const {
  std::vector<ConvIso> out;
  out.push_back(ConvIso::zero());
  for (std::uint32_t k = 1; k <= n && k <= w + 1; ++k)
    for (std::uint64_t s = 0; s + k <= w + 1; ++s)
      for (std::uint64_t t = 0; t + k <= w + 1; ++t)
        out.push_back(ConvIso{s, t, k});
  return out;
}

bool ConvSemigroup::in_window(const ConvIso& a, std::uint64_t w) const {
  if (a.is_zero()) return true;
  if (a.k > n || a.k > w + 1) return false;
  std::uint64_t top = w + 1 - a.k;  // largest admissible start index
  return a.s <= top && a.t <= top;
}

}  // namespace bext
