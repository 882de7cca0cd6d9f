#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <stdexcept>
#include <vector>

#include "bext/conv_iso.hpp"
#include "bext/element_io.hpp"
#include "bext/errors.hpp"
#include "doctest.h"

using bext::ConvIso;
using bext::ConvSemigroup;

namespace {

// Composition recomputed point by point on an explicit finite map.
ConvIso naive_compose(const ConvIso& a, const ConvIso& b) {
  std::map<std::uint64_t, std::uint64_t> graph;
  for (std::uint32_t r = 0; r < a.k; ++r) {
    std::uint64_t mid = a.t + r;
    if (mid >= b.s && mid < b.s + b.k) graph[a.s + r] = b.t + (mid - b.s);
  }
  if (graph.empty()) return ConvIso::zero();
  ConvIso out{graph.begin()->first, graph.begin()->second,
              static_cast<std::uint32_t>(graph.size())};
  // the composite of convex maps is convex, so the graph must be a run
  for (const auto& [x, y] : graph) {
    REQUIRE(y == out.t + (x - out.s));
  }
  return out;
}

std::vector<ConvIso> bounded_idempotents(std::uint64_t w, std::uint32_t n) {
  std::vector<ConvIso> out{ConvIso::zero()};
  for (std::uint32_t m = 1; m <= n && m <= w + 1; ++m)
    for (std::uint64_t u = 0; u + m <= w + 1; ++u)
      out.push_back(ConvIso{u, u, m});
  return out;
}

// Maximal chains found the slow way: walk the covering relation of the
// restricted idempotent poset from Zero to the top.
std::vector<std::vector<ConvIso>> naive_chains(std::uint64_t w,
                                               std::uint32_t n) {
  auto poset = bounded_idempotents(w, n);
  auto strictly_below = [](const ConvIso& a, const ConvIso& b) {
    return !(a == b) && bext::nat_leq(a, b);
  };
  auto covers = [&](const ConvIso& a, const ConvIso& b) {
    if (!strictly_below(a, b)) return false;
    for (const auto& mid : poset)
      if (strictly_below(a, mid) && strictly_below(mid, b)) return false;
    return true;
  };
  std::vector<std::vector<ConvIso>> out;
  std::vector<ConvIso> chain{ConvIso::zero()};
  auto dfs = [&](auto&& self, const ConvIso& at) -> void {
    bool extended = false;
    for (const auto& next : poset)
      if (covers(at, next)) {
        extended = true;
        chain.push_back(next);
        self(self, next);
        chain.pop_back();
      }
    if (!extended) out.push_back(chain);
  };
  dfs(dfs, ConvIso::zero());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("composition, worked examples") {
  CHECK(bext::compose(ConvIso{0, 2, 3}, ConvIso{3, 5, 2}) ==
        ConvIso{1, 5, 2});
  CHECK(bext::compose(ConvIso{0, 0, 1}, ConvIso{5, 5, 1}).is_zero());
  CHECK(bext::compose(ConvIso::zero(), ConvIso{0, 0, 3}).is_zero());
  CHECK(bext::compose(ConvIso{0, 0, 3}, ConvIso::zero()).is_zero());
}

TEST_CASE("composition matches the pointwise oracle across a window") {
  ConvSemigroup sgp{3};
  auto win = sgp.window(6);
  for (const auto& a : win)
    for (const auto& b : win) {
      CAPTURE(bext::show(a));
      CAPTURE(bext::show(b));
      CHECK(bext::compose(a, b) == naive_compose(a, b));
    }
}

TEST_CASE("windows are closed under composition") {
  ConvSemigroup sgp{2};
  auto win = sgp.window(5);
  for (const auto& a : win)
    for (const auto& b : win)
      CHECK(sgp.in_window(bext::compose(a, b), 5));
}

TEST_CASE("inverse swaps domain and range") {
  ConvIso a{1, 4, 2};
  CHECK(bext::inverse(a) == ConvIso{4, 1, 2});
  CHECK(bext::inverse(bext::inverse(a)) == a);
  ConvSemigroup sgp{3};
  for (const auto& x : sgp.window(5)) {
    CHECK(bext::compose(bext::compose(x, bext::inverse(x)), x) == x);
    CHECK(bext::compose(bext::compose(bext::inverse(x), x),
                        bext::inverse(x)) == bext::inverse(x));
  }
}

TEST_CASE("natural order means restriction") {
  CHECK(bext::nat_leq(ConvIso{1, 1, 1}, ConvIso{0, 0, 2}));
  CHECK(!bext::nat_leq(ConvIso{0, 1, 1}, ConvIso{0, 0, 2}));  // offsets differ
  CHECK(bext::nat_leq(ConvIso{1, 4, 2}, ConvIso{0, 3, 3}));
  CHECK(bext::nat_leq(ConvIso::zero(), ConvIso{7, 7, 1}));
  CHECK(!bext::nat_leq(ConvIso{7, 7, 1}, ConvIso::zero()));

  ConvSemigroup sgp{2};
  auto win = sgp.window(4);
  for (const auto& a : win)
    for (const auto& b : win) {
      bool by_definition =
          a == bext::compose(bext::compose(a, bext::inverse(a)), b);
      CHECK(bext::nat_leq(a, b) == by_definition);
    }
}

TEST_CASE("rank grading carries elements both ways") {
  bext::BExtElt x{2, 3, bext::OmegaSet::initial_interval(1)};
  CHECK(bext::ext_to_conv(x, 2) == ConvIso{2, 3, 2});
  CHECK(bext::conv_to_ext(ConvIso{2, 3, 2}, 2) == x);
  CHECK(bext::ext_to_conv(bext::BExtElt{}, 1).is_zero());
  CHECK(bext::conv_to_ext(ConvIso::zero(), 1).is_zero());

  CHECK_THROWS_AS(bext::ext_to_conv(x, 1), std::invalid_argument);  // k+1 > n
  bext::BExtElt ragged{0, 0, bext::OmegaSet{0, 2}};
  CHECK_THROWS_AS(bext::ext_to_conv(ragged, 4), std::invalid_argument);
  CHECK_THROWS_AS(bext::conv_to_ext(ConvIso{0, 0, 3}, 2),
                  std::invalid_argument);
  CHECK_THROWS_AS(bext::ext_to_conv(x, 0), std::invalid_argument);
}

TEST_CASE("up-sets of idempotents, worked examples and oracle") {
  auto up1 = bext::up_set(ConvIso{0, 0, 1}, 3);
  CHECK(up1 == std::vector<ConvIso>{ConvIso{0, 0, 1}, ConvIso{0, 0, 2},
                                    ConvIso{0, 0, 3}});
  auto up2 = bext::up_set(ConvIso{1, 1, 1}, 2);
  CHECK(up2 == std::vector<ConvIso>{ConvIso{1, 1, 1}, ConvIso{0, 0, 2},
                                    ConvIso{1, 1, 2}});

  for (std::uint32_t n = 1; n <= 3; ++n)
    for (std::uint64_t u = 0; u <= 4; ++u)
      for (std::uint32_t m = 1; m <= n; ++m) {
        ConvIso e{u, u, m};
        auto fast = bext::up_set(e, n);
        std::sort(fast.begin(), fast.end());
        std::vector<ConvIso> slow;
        for (const auto& f : bounded_idempotents(u + n, n))
          if (!f.is_zero() && bext::nat_leq(e, f)) slow.push_back(f);
        std::sort(slow.begin(), slow.end());
        CAPTURE(bext::show(e));
        CHECK(fast == slow);
      }
}

TEST_CASE("up-set rejects Zero and non-idempotents") {
  CHECK_THROWS_AS(bext::up_set(ConvIso::zero(), 3), std::invalid_argument);
  CHECK_THROWS_AS(bext::up_set(ConvIso{0, 1, 1}, 3), std::invalid_argument);
  CHECK_THROWS_AS(bext::up_set(ConvIso{0, 0, 4}, 3), std::invalid_argument);
}

TEST_CASE("the top idempotent layer") {
  auto tops = bext::maximal_idempotents(2, 2);
  CHECK(tops == std::vector<ConvIso>{ConvIso{0, 0, 2}, ConvIso{1, 1, 2},
                                     ConvIso{2, 2, 2}});
  for (const auto& e : tops) {
    auto up = bext::up_set(e, 2);
    CHECK(up.size() == 1);
    CHECK(up.front() == e);
  }
}

TEST_CASE("maximal chains climb one rank per step") {
  auto chains = bext::maximal_chains(2, 2);
  REQUIRE(chains.size() == 4);
  for (const auto& ch : chains) {
    REQUIRE(ch.size() == 3);
    CHECK(ch[0].is_zero());
    CHECK(ch[1].rank() == 1);
    CHECK(ch[2].rank() == 2);
    CHECK(bext::nat_leq(ch[1], ch[2]));
  }
}

TEST_CASE("maximal chains match the cover-walk oracle") {
  for (auto [w, n] : std::vector<std::pair<std::uint64_t, std::uint32_t>>{
           {2, 2}, {3, 1}, {4, 3}}) {
    CAPTURE(w);
    CAPTURE(n);
    CHECK(bext::maximal_chains(w, n) == naive_chains(w, n));
  }
}

TEST_CASE("order diagram export") {
  std::string dot = bext::idempotent_hasse_dot(1, 2);
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("rankdir=BT") != std::string::npos);
  CHECK(dot.find("z -> e_0_1") != std::string::npos);
  CHECK(dot.find("e_0_1 -> e_0_2") != std::string::npos);
  CHECK(dot.find("e_1_1 -> e_0_2") != std::string::npos);
}

TEST_CASE("window membership respects both endpoints and rank") {
  ConvSemigroup sgp{2};
  CHECK(sgp.in_window(ConvIso::zero(), 0));
  CHECK(sgp.in_window(ConvIso{5, 0, 2}, 6));
  CHECK(!sgp.in_window(ConvIso{6, 0, 2}, 6));
  CHECK(!sgp.in_window(ConvIso{0, 6, 2}, 6));
  CHECK(!sgp.in_window(ConvIso{0, 0, 3}, 6));  // rank above the bound
  auto win = sgp.window(4);
  CHECK(win.front().is_zero());
  CHECK(win.size() == 1 + 5 * 5 + 4 * 4);
}

TEST_CASE("index shifts on convex maps") {
  ConvSemigroup sgp{2};
  CHECK(sgp.apply_shift(3, ConvIso{1, 4, 2}) == ConvIso{4, 7, 2});
  CHECK(sgp.apply_shift(0, ConvIso{1, 4, 2}) == ConvIso{1, 4, 2});
  CHECK(sgp.apply_shift(9, ConvIso::zero()).is_zero());
}

TEST_CASE("construction and arithmetic guard their bounds") {
  CHECK_THROWS_AS(ConvIso::make(0, 0, 0), std::invalid_argument);
  CHECK(ConvIso::make(1, 2, 1) == ConvIso{1, 2, 1});
  const std::uint64_t huge = std::numeric_limits<std::uint64_t>::max() - 1;
  CHECK_THROWS_AS(bext::compose(ConvIso{5, huge, 3}, ConvIso{huge, 0, 3}),
                  bext::ArithmeticOverflow);
}
