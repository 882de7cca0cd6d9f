#include "bext/acceptance.hpp"

#include <array>
#include <atomic>
#include <cstdint>
#include <map>
#include <queue>
#include <random>
#include <sstream>
#include <thread>
#include <variant>
#include <vector>

#include "bext/bicyclic_ext.hpp"
#include "bext/conv_iso.hpp"
#include "bext/endomorphism.hpp"
#include "bext/matrix_units.hpp"

namespace bext {
namespace {

// Window Cayley table: prod[a*n + b] is the index of win[a] * win[b], or -1
// when the product lies outside the window.
template <typename Sgp, typename Elt = typename Sgp::elt_type>
struct WindowTable {
  std::vector<Elt> win;
  std::vector<std::int32_t> prod;
  std::uint64_t out_of_window = 0;

  WindowTable(const Sgp& sgp, std::uint64_t w) : win(sgp.window(w)) {
    std::map<Elt, std::int32_t> idx;
    for (std::size_t k = 0; k < win.size(); ++k)
      idx.emplace(win[k], static_cast<std::int32_t>(k));
    prod.resize(win.size() * win.size());
    for (std::size_t a = 0; a < win.size(); ++a)
      for (std::size_t b = 0; b < win.size(); ++b) {
        auto it = idx.find(sgp.mul(win[a], win[b]));
        std::int32_t v = it == idx.end() ? -1 : it->second;
        if (v < 0) ++out_of_window;
        prod[a * win.size() + b] = v;
      }
  }

  std::size_t size() const { return win.size(); }
  std::int32_t at(std::size_t a, std::size_t b) const {
    return prod[a * win.size() + b];
  }
};

CriterionResult crit1_extension_axioms() {
  CriterionResult r{1,
                    "extension windows: associativity and inverse laws "
                    "(n = 1..3, window 8)",
                    true,
                    {}};
  std::ostringstream d;
  for (std::uint32_t n = 1; n <= 3; ++n) {
    auto sgp = ExtSemigroup::initial_intervals(n);
    WindowTable<ExtSemigroup> t(sgp, 8);
    const std::size_t N = t.size();
    std::uint64_t tested = 0, skipped = 0, bad = 0;
    for (std::size_t a = 0; a < N; ++a)
      for (std::size_t b = 0; b < N; ++b) {
        std::int32_t ab = t.at(a, b);
        for (std::size_t c = 0; c < N; ++c) {
          std::int32_t bc = t.at(b, c);
          if (ab < 0 || bc < 0) {
            ++skipped;
            continue;
          }
          std::int32_t lhs = t.at(static_cast<std::size_t>(ab), c);
          std::int32_t rhs = t.at(a, static_cast<std::size_t>(bc));
          if (lhs < 0 || rhs < 0) {
            ++skipped;
            continue;
          }
          ++tested;
          if (lhs != rhs) ++bad;
        }
      }
    std::uint64_t inv_bad = 0;
    for (const auto& x : t.win) {
      BExtElt xi = sgp.inv(x);
      if (!(sgp.mul(sgp.mul(x, xi), x) == x)) ++inv_bad;
      if (!(sgp.mul(sgp.mul(xi, x), xi) == xi)) ++inv_bad;
    }
    if (bad || inv_bad) r.passed = false;
    d << "n=" << n << ": " << tested << " triples ok, " << skipped
      << " skipped, inverse laws on " << N << " elements";
    if (bad) d << ", " << bad << " associativity failures";
    if (inv_bad) d << ", " << inv_bad << " inverse-law failures";
    d << (n < 3 ? "; " : "");
  }
  r.detail = d.str();
  return r;
}

CriterionResult crit2_rank_grading() {
  CriterionResult r{2,
                    "rank grading is a homomorphism with two-sided inverse "
                    "(n = 1..4, indices <= 8)",
                    true,
                    {}};
  std::ostringstream d;
  std::uint64_t pairs = 0, round_trips = 0;
  for (std::uint32_t n = 1; n <= 4; ++n) {
    auto ext = ExtSemigroup::initial_intervals(n - 1);
    auto ewin = ext.window(8);
    for (const auto& x : ewin) {
      if (!(conv_to_ext(ext_to_conv(x, n), n) == x)) {
        r.passed = false;
        std::ostringstream msg;
        msg << "round trip failed at " << x << " (n=" << n << ")";
        r.detail = msg.str();
        return r;
      }
      ++round_trips;
      for (const auto& y : ewin) {
        ConvIso lhs = ext_to_conv(ext.mul(x, y), n);
        ConvIso rhs = compose(ext_to_conv(x, n), ext_to_conv(y, n));
        ++pairs;
        if (!(lhs == rhs)) {
          r.passed = false;
          std::ostringstream msg;
          msg << "homomorphism failed at " << x << " * " << y << " (n=" << n
              << ")";
          r.detail = msg.str();
          return r;
        }
      }
    }
    ConvSemigroup conv{n};
    for (const auto& a : conv.window(8)) {
      if (!(ext_to_conv(conv_to_ext(a, n), n) == a)) {
        r.passed = false;
        std::ostringstream msg;
        msg << "round trip failed at " << a << " (n=" << n << ")";
        r.detail = msg.str();
        return r;
      }
      ++round_trips;
    }
  }
  d << pairs << " products matched across the correspondence, "
    << round_trips << " round trips exact";
  r.detail = d.str();
  return r;
}

CriterionResult crit3_shift_verifies() {
  CriterionResult r{3,
                    "index shifts verify as endomorphisms on both models "
                    "(p <= 4, n <= 4, window 12)",
                    true,
                    {}};
  std::uint64_t checked = 0, skipped = 0, failures = 0;
  for (std::uint32_t n = 1; n <= 4; ++n) {
    ConvSemigroup conv{n};
    auto ext = ExtSemigroup::initial_intervals(n - 1);
    for (std::uint64_t p = 0; p <= 4; ++p) {
      auto vc = verify_endomorphism(conv, Endo<ConvIso>::shift(p), 12);
      auto ve = verify_endomorphism(ext, Endo<BExtElt>::shift(p), 12);
      checked += vc.checked + ve.checked;
      skipped += vc.skipped + ve.skipped;
      if (!vc.ok) ++failures;
      if (!ve.ok) ++failures;
    }
  }
  if (failures || skipped) r.passed = false;
  std::ostringstream d;
  d << checked << " product pairs verified, " << skipped << " skipped, "
    << failures << " failures";
  r.detail = d.str();
  return r;
}

CriterionResult crit4_classifier() {
  CriterionResult r{4,
                    "shift classifier: exact round trip and full mutation "
                    "kill (n = 2,3; shifts <= 5; 50 mutants each)",
                    true,
                    {}};
  std::mt19937 rng(0xbe575eedu);
  std::uint64_t tables = 0, mutants = 0, kills = 0;
  std::array<std::uint64_t, 5> kinds{};
  for (std::uint32_t n = 2; n <= 3; ++n) {
    ConvSemigroup sgp{n};
    auto win = sgp.window(12);
    for (std::uint64_t i0 = 0; i0 <= 5; ++i0) {
      auto tab = table_of(sgp, Endo<ConvIso>::shift(i0), 12);
      ++tables;
      auto out = classify_injective(sgp, tab);
      if (!std::holds_alternative<std::uint64_t>(out) ||
          std::get<std::uint64_t>(out) != i0) {
        r.passed = false;
        std::ostringstream msg;
        msg << "clean table for shift " << i0 << " (n=" << n
            << ") did not classify back";
        r.detail = msg.str();
        return r;
      }
      for (int m = 0; m < 50; ++m) {
        Endo<ConvIso> mutant = tab;
        std::size_t pos = static_cast<std::size_t>(rng() % win.size());
        ConvIso v;
        do {
          v = win[static_cast<std::size_t>(rng() % win.size())];
        } while (v == mutant.entries[pos].second);
        mutant.entries[pos].second = v;
        ++mutants;
        auto verdict = classify_injective(sgp, mutant);
        if (std::holds_alternative<ClassifyViolation>(verdict)) {
          ++kills;
          ++kinds[static_cast<std::size_t>(
              std::get<ClassifyViolation>(verdict).kind)];
        } else {
          r.passed = false;
        }
      }
    }
  }
  std::ostringstream d;
  d << tables << " clean tables classified, " << kills << "/" << mutants
    << " mutants rejected (zero " << kinds[0] << ", injectivity " << kinds[1]
    << ", top image " << kinds[2] << ", order " << kinds[3] << ", pointwise "
    << kinds[4] << ")";
  r.detail = d.str();
  return r;
}

CriterionResult crit5_shift_monoid() {
  CriterionResult r{5,
                    "shift monoid: additive composition, distinct actions, "
                    "onto only at p = 0 (p,q <= 16, window 12)",
                    true,
                    {}};
  std::ostringstream d;
  auto run = [&](const char* tag, const MonoidCheckResult& m) {
    if (!m.ok) r.passed = false;
    d << tag << (m.ok ? " ok" : " FAILED");
    if (!m.composition_law) d << " [composition]";
    if (!m.commutative) d << " [commutativity]";
    if (!m.distinct_actions) d << " [distinctness]";
    if (!m.surjective_only_zero) d << " [surjectivity]";
  };
  run("convex n=2:", injective_endo_monoid_check(ConvSemigroup{2}, 16, 12));
  d << "; ";
  run("convex n=3:", injective_endo_monoid_check(ConvSemigroup{3}, 16, 12));
  d << "; ";
  run("extension n=1:",
      injective_endo_monoid_check(ExtSemigroup::initial_intervals(1), 16, 12));
  d << "; ";
  run("extension n=2:",
      injective_endo_monoid_check(ExtSemigroup::initial_intervals(2), 16, 12));
  r.detail = d.str();
  return r;
}

CriterionResult crit6_zero_movers_constant() {
  CriterionResult r{6,
                    "verified tables that move Zero are constant at an "
                    "idempotent (window 8, n = 2)",
                    true,
                    {}};
  ConvSemigroup sgp{2};
  auto win = sgp.window(8);
  std::vector<ConvIso> idems;
  for (const auto& x : win)
    if (x.is_idempotent()) idems.push_back(x);
  const std::vector<ConvIso> reps = {ConvIso::zero(), ConvIso{0, 0, 1},
                                     ConvIso{0, 0, 2}, ConvIso{0, 1, 1},
                                     ConvIso{2, 1, 1}};
  std::uint64_t candidates = 0, verified = 0, zero_moving = 0, rejected = 0,
                nonconstant_zero_moving = 0;
  auto is_constant_table = [](const Endo<ConvIso>& t) {
    for (const auto& [k, v] : t.entries)
      if (!(v == t.entries.front().second)) return false;
    return true;
  };
  auto weigh = [&](const Endo<ConvIso>& t) {
    ++candidates;
    auto vr = verify_endomorphism(sgp, t, 8);
    if (!vr.ok) {
      ++rejected;
      return;
    }
    ++verified;
    const ConvIso* at_zero = t.lookup(ConvIso::zero());
    if (at_zero && !at_zero->is_zero()) {
      ++zero_moving;
      if (!is_constant_table(t)) {
        ++nonconstant_zero_moving;
        r.passed = false;
      }
    }
  };
  for (const auto& e : idems) {
    auto base = table_of(sgp, make_annihilator(sgp, e), 8);
    weigh(base);
    for (std::size_t pos = 0; pos < base.entries.size(); ++pos)
      for (const auto& v : reps) {
        if (v == e) continue;
        Endo<ConvIso> mutant = base;
        mutant.entries[pos].second = v;
        weigh(mutant);
      }
  }
  // Shift tables redirected at Zero: zero-moving, not constant, so they must
  // all fail verification.
  for (std::uint64_t p = 0; p <= 1; ++p) {
    auto base = table_of(sgp, Endo<ConvIso>::shift(p), 8);
    for (const auto& e : idems) {
      Endo<ConvIso> mutant = base;
      mutant.entries.front().second = e;  // Zero sorts first
      weigh(mutant);
    }
  }
  if (zero_moving != idems.size()) r.passed = false;
  std::ostringstream d;
  d << candidates << " candidate tables, " << verified << " verified, "
    << zero_moving << " of those move Zero (every one constant), "
    << rejected << " rejected";
  if (nonconstant_zero_moving)
    d << "; " << nonconstant_zero_moving
      << " verified zero-moving tables were NOT constant";
  r.detail = d.str();
  return r;
}

CriterionResult crit7_chains() {
  CriterionResult r{7,
                    "idempotent order: maximal chains, top layer, up-set of "
                    "conv(0,0,1) (n = 1..4, window 6)",
                    true,
                    {}};
  std::ostringstream d;
  for (std::uint32_t n = 1; n <= 4; ++n) {
    auto chains = maximal_chains(6, n);
    // nested-interval flags: choose the top domain, then peel one endpoint
    // per step down
    std::uint64_t expected = (8 - n) * (1ull << (n - 1));
    if (chains.size() != expected) r.passed = false;
    auto tops = maximal_idempotents(6, n);
    std::vector<ConvIso> expected_tops;
    for (std::uint64_t i = 0; i <= 6; ++i)
      expected_tops.push_back(ConvIso{i, i, n});
    if (tops != expected_tops) r.passed = false;
    for (const auto& m : tops) {
      auto up = up_set(m, n);
      if (up.size() != 1 || !(up.front() == m)) r.passed = false;
    }
    for (const auto& ch : chains) {
      if (ch.size() != static_cast<std::size_t>(n) + 1) r.passed = false;
      if (!ch.front().is_zero()) r.passed = false;
      for (std::size_t l = 1; l < ch.size(); ++l) {
        if (!ch[l].is_idempotent() || ch[l].rank() != l) r.passed = false;
        if (!nat_leq(ch[l - 1], ch[l]) || ch[l - 1] == ch[l]) r.passed = false;
      }
      bool top_is_maximal = false;
      for (const auto& m : tops)
        if (ch.back() == m) top_is_maximal = true;
      if (!top_is_maximal) r.passed = false;
    }
    auto up1 = up_set(ConvIso{0, 0, 1}, n);
    std::vector<ConvIso> expected_up;
    for (std::uint32_t m = 1; m <= n; ++m)
      expected_up.push_back(ConvIso{0, 0, m});
    if (up1 != expected_up) r.passed = false;
    d << "n=" << n << ": " << chains.size() << " chains of length " << (n + 1)
      << (n < 4 ? "; " : "");
  }
  r.detail = d.str();
  return r;
}

CriterionResult crit8_matrix_unit_monoid() {
  CriterionResult r{8,
                    "matrix-unit endomorphism monoids: counts 5/10/29, "
                    "structure laws, automorphisms (lambda = 2..4)",
                    true,
                    {}};
  std::ostringstream d;
  const std::uint64_t expected_total[] = {5, 10, 29};
  const std::uint64_t expected_aut[] = {2, 6, 24};
  for (std::uint32_t lam = 2; lam <= 4; ++lam) {
    auto rep = end_structure_report(lam);
    bool here = rep.ok() && rep.total == expected_total[lam - 2] &&
                rep.aut_order == expected_aut[lam - 2];
    if (!here) r.passed = false;
    d << "lambda=" << lam << ": " << rep.total << " endomorphisms ("
      << rep.injective << " injective, " << rep.annihilating
      << " annihilating), |Aut|=" << rep.aut_order
      << (here ? "" : " FAILED") << "; ";
  }
  bool naive_match =
      enumerate_endomorphisms(2) == enumerate_endomorphisms_naive(2);
  if (!naive_match) r.passed = false;
  d << "lambda=2 exhaustive cross-check "
    << (naive_match ? "matches" : "DIVERGES");
  r.detail = d.str();
  return r;
}

CriterionResult crit9_congruence_free() {
  CriterionResult r{9,
                    "matrix-unit semigroups have exactly two congruences "
                    "(lambda = 2, 3)",
                    true,
                    {}};
  std::ostringstream d;
  for (std::uint32_t lam = 2; lam <= 3; ++lam) {
    auto rep = congruence_freeness_check(lam);
    bool here = rep.congruence_free && rep.congruence_count == 2 &&
                !rep.proper_witness.has_value();
    if (!here) r.passed = false;
    d << "lambda=" << lam << ": " << rep.congruence_count << " congruences"
      << (here ? "" : " FAILED") << (lam < 3 ? "; " : "");
  }
  r.detail = d.str();
  return r;
}

CriterionResult crit10_green_structure() {
  CriterionResult r{10,
                    "trivial H-classes and D = J through in-window principal "
                    "ideals (n = 1..3, window 6)",
                    true,
                    {}};
  std::ostringstream d;
  for (std::uint32_t n = 1; n <= 3; ++n) {
    auto sgp = ExtSemigroup::initial_intervals(n);
    WindowTable<ExtSemigroup> t(sgp, 6);
    const std::size_t N = t.size();
    // two-sided reachability closure of each element within the window
    std::vector<std::vector<char>> ideal(N);
    for (std::size_t x = 0; x < N; ++x) {
      std::vector<char>& seen = ideal[x];
      seen.assign(N, 0);
      std::queue<std::size_t> q;
      seen[x] = 1;
      q.push(x);
      while (!q.empty()) {
        std::size_t u = q.front();
        q.pop();
        for (std::size_t a = 0; a < N; ++a)
          for (std::int32_t v : {t.at(a, u), t.at(u, a)})
            if (v >= 0 && !seen[static_cast<std::size_t>(v)]) {
              seen[static_cast<std::size_t>(v)] = 1;
              q.push(static_cast<std::size_t>(v));
            }
      }
    }
    std::uint64_t h_failures = 0, dj_failures = 0, pairs = 0;
    for (std::size_t a = 0; a < N; ++a)
      for (std::size_t b = a; b < N; ++b) {
        GreenRelations g = sgp.green_classify(t.win[a], t.win[b]);
        ++pairs;
        if (a != b && g.h) ++h_failures;
        if (g.d != (ideal[a] == ideal[b])) ++dj_failures;
      }
    if (h_failures || dj_failures) r.passed = false;
    d << "n=" << n << ": " << pairs << " pairs, H trivial, D = J";
    if (h_failures) d << " (" << h_failures << " H failures)";
    if (dj_failures) d << " (" << dj_failures << " D/J mismatches)";
    d << (n < 3 ? "; " : "");
  }
  r.detail = d.str();
  return r;
}

CriterionResult guarded(CriterionResult (*fn)()) {
  try {
    return fn();
  } catch (const std::exception& e) {
    CriterionResult r;
    r.passed = false;
    r.detail = std::string("exception: ") + e.what();
    return r;
  }
}

}  // namespace

std::vector<CriterionResult> run_acceptance(unsigned jobs) {
  struct Entry {
    CriterionResult (*fn)();
    const char* name;
  };
  static constexpr Entry entries[] = {
      {crit1_extension_axioms, "extension window axioms"},
      {crit2_rank_grading, "rank grading correspondence"},
      {crit3_shift_verifies, "shift endomorphism verification"},
      {crit4_classifier, "shift classifier round trip"},
      {crit5_shift_monoid, "shift monoid laws"},
      {crit6_zero_movers_constant, "zero-moving tables are constant"},
      {crit7_chains, "idempotent chains"},
      {crit8_matrix_unit_monoid, "matrix-unit endomorphism monoid"},
      {crit9_congruence_free, "matrix-unit congruence freeness"},
      {crit10_green_structure, "Green structure on windows"},
  };
  constexpr std::size_t count = sizeof(entries) / sizeof(entries[0]);
  std::vector<CriterionResult> out(count);
  auto run_one = [&](std::size_t k) {
    out[k] = guarded(entries[k].fn);
    out[k].id = static_cast<int>(k) + 1;
    if (out[k].name.empty()) out[k].name = entries[k].name;
  };
  if (jobs <= 1) {
    for (std::size_t k = 0; k < count; ++k) run_one(k);
    return out;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      std::size_t k = next.fetch_add(1);
      if (k >= count) return;
      run_one(k);
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < std::min<unsigned>(jobs, count); ++t)
    pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  return out;
}

}  // namespace bext
