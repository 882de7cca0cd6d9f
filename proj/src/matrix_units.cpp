#include "bext/matrix_units.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace bext {

MatUnit mu_mul(const MatUnit& x, const MatUnit& y) {
  if (x.is_zero() || y.is_zero() || x.b != y.a) return MatUnit::zero();
  return MatUnit::unit(x.a, y.b);
}

std::ostream& operator<<(std::ostream& os, const MatUnit& x) {
  if (x.is_zero()) return os << '0';
  return os << "mu(" << x.a << ',' << x.b << ')';
}

std::uint16_t mu_index(std::uint32_t lambda, const MatUnit& x) {
  if (x.is_zero()) return 0;
  if (x.a >= lambda || x.b >= lambda)
    throw std::invalid_argument("unit index out of range for this lambda");
  return static_cast<std::uint16_t>(1 + x.a * lambda + x.b);
}

MatUnit mu_of_index(std::uint32_t lambda, std::uint16_t idx) {
  if (idx == 0) return MatUnit::zero();
  std::uint32_t r = idx - 1;
  if (r >= lambda * lambda)
    throw std::invalid_argument("index out of range for this lambda");
  return MatUnit::unit(r / lambda, r % lambda);
}

namespace {

// Cayley table over indices, row-major.
std::vector<std::uint16_t> mu_cayley(std::uint32_t lambda) {
  std::size_t n = mu_count(lambda);
  std::vector<std::uint16_t> t(n * n, 0);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      t[x * n + y] = mu_index(
          lambda, mu_mul(mu_of_index(lambda, static_cast<std::uint16_t>(x)),
                         mu_of_index(lambda, static_cast<std::uint16_t>(y))));
  return t;
}

std::uint64_t factorial(std::uint32_t n) {
  std::uint64_t r = 1;
  for (std::uint32_t i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace

FiniteEndo::FiniteEndo(std::uint32_t lambda, std::vector<std::uint16_t> map)
    : lambda_(lambda), map_(std::move(map)) {
  if (lambda_ == 0) throw std::invalid_argument("lambda must be >= 1");
  std::size_t n = mu_count(lambda_);
  if (map_.size() != n)
    throw std::invalid_argument("endomorphism table has the wrong size");
  for (auto v : map_)
    if (v >= n) throw std::invalid_argument("table value out of range");
  auto cay = mu_cayley(lambda_);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (map_[cay[x * n + y]] != cay[map_[x] * n + map_[y]])
        throw std::invalid_argument("not a homomorphism");
}

MatUnit FiniteEndo::apply(const MatUnit& x) const {
  return mu_of_index(lambda_, map_[mu_index(lambda_, x)]);
}

bool FiniteEndo::is_injective() const {
  auto sorted = map_;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

bool FiniteEndo::is_constant() const {
  return std::all_of(map_.begin(), map_.end(),
                     [&](std::uint16_t v) { return v == map_[0]; });
}

FiniteEndo compose(const FiniteEndo& e1, const FiniteEndo& e2) {
  if (e1.lambda() != e2.lambda())
    throw std::invalid_argument("lambda mismatch");
  std::vector<std::uint16_t> m(e1.map().size());
  for (std::size_t x = 0; x < m.size(); ++x)
    m[x] = e2.apply_idx(e1.apply_idx(static_cast<std::uint16_t>(x)));
  return FiniteEndo(e1.lambda(), std::move(m));
}

FiniteEndo identity_endo(std::uint32_t lambda) {
  std::vector<std::uint16_t> m(mu_count(lambda));
  std::iota(m.begin(), m.end(), 0);
  return FiniteEndo(lambda, std::move(m));
}

FiniteEndo endo_from_injection(std::uint32_t lambda,
                               const std::vector<std::uint32_t>& img) {
  if (img.size() != lambda)
    throw std::invalid_argument("self-map must cover 0..lambda-1");
  std::vector<bool> seen(lambda, false);
  for (auto v : img) {
    if (v >= lambda) throw std::invalid_argument("image out of range");
    if (seen[v]) throw std::invalid_argument("self-map is not injective");
    seen[v] = true;
  }
  std::vector<std::uint16_t> m(mu_count(lambda), 0);
  for (std::uint32_t a = 0; a < lambda; ++a)
    for (std::uint32_t b = 0; b < lambda; ++b)
      m[mu_index(lambda, MatUnit::unit(a, b))] =
          mu_index(lambda, MatUnit::unit(img[a], img[b]));
  return FiniteEndo(lambda, std::move(m));
}

FiniteEndo annihilating_endo(std::uint32_t lambda, const MatUnit& target) {
  if (!target.is_idempotent())
    throw std::invalid_argument(
        "constant maps are endomorphisms only at idempotents");
  std::uint16_t t = mu_index(lambda, target);
  return FiniteEndo(lambda,
                    std::vector<std::uint16_t>(mu_count(lambda), t));
}

std::vector<std::uint32_t> injection_of(const FiniteEndo& e) {
  std::uint32_t lambda = e.lambda();
  std::vector<std::uint32_t> img(lambda);
  for (std::uint32_t a = 0; a < lambda; ++a) {
    MatUnit d = e.apply(MatUnit::unit(a, a));
    if (d.is_zero() || d.a != d.b)
      throw std::invalid_argument(
          "endomorphism does not map diagonal units to diagonal units");
    img[a] = d.a;
  }
  return img;
}

namespace {

struct EndoSearch {
  std::uint32_t lambda;
  std::size_t n;
  std::vector<std::uint16_t> cay;
  std::vector<std::uint16_t> gens;
  std::vector<FiniteEndo> found;

  std::uint16_t mul(std::uint16_t x, std::uint16_t y) const {
    return cay[static_cast<std::size_t>(x) * n + y];
  }

  // Close the partial map under products; false on contradiction.
  bool propagate(std::vector<int>& h) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t x = 0; x < n; ++x) {
        if (h[x] < 0) continue;
        for (std::size_t y = 0; y < n; ++y) {
          if (h[y] < 0) continue;
          std::uint16_t p = mul(static_cast<std::uint16_t>(x),
                                static_cast<std::uint16_t>(y));
          std::uint16_t v = mul(static_cast<std::uint16_t>(h[x]),
                                static_cast<std::uint16_t>(h[y]));
          if (h[p] < 0) {
            h[p] = v;
            changed = true;
          } else if (h[p] != v) {
            return false;
          }
        }
      }
    }
    return true;
  }

  void dfs(std::vector<int>& h, std::size_t g) {
    if (g == gens.size()) {
      // Generators reach everything (lambda >= 2), so the map is total now.
      std::vector<std::uint16_t> m(n);
      for (std::size_t x = 0; x < n; ++x) {
        if (h[x] < 0) return;
        m[x] = static_cast<std::uint16_t>(h[x]);
      }
      found.emplace_back(lambda, std::move(m));  // ctor re-validates
      return;
    }
    if (h[gens[g]] >= 0) {
      dfs(h, g + 1);
      return;
    }
    for (std::size_t c = 0; c < n; ++c) {
      std::vector<int> h2 = h;
      h2[gens[g]] = static_cast<int>(c);
      if (propagate(h2)) dfs(h2, g + 1);
    }
  }
};

}  // namespace

std::vector<FiniteEndo> enumerate_endomorphisms(std::uint32_t lambda) {
  if (lambda == 0) throw std::invalid_argument("lambda must be >= 1");
  if (lambda > 4)
    throw std::invalid_argument("resource guard: lambda must be <= 4");
  if (lambda == 1) return enumerate_endomorphisms_naive(1);

  EndoSearch s;
  s.lambda = lambda;
  s.n = mu_count(lambda);
  s.cay = mu_cayley(lambda);
  s.gens.push_back(mu_index(lambda, MatUnit::unit(0, 0)));
  for (std::uint32_t a = 0; a + 1 < lambda; ++a) {
    s.gens.push_back(mu_index(lambda, MatUnit::unit(a, a + 1)));
    s.gens.push_back(mu_index(lambda, MatUnit::unit(a + 1, a)));
  }
  std::vector<int> h(s.n, -1);
  s.dfs(h, 0);
  std::sort(s.found.begin(), s.found.end());
  return s.found;
}

std::vector<FiniteEndo> enumerate_endomorphisms_naive(std::uint32_t lambda) {
  if (lambda == 0) throw std::invalid_argument("lambda must be >= 1");
  if (lambda > 2)
    throw std::invalid_argument("naive enumeration is for lambda <= 2");
  std::size_t n = mu_count(lambda);
  std::vector<FiniteEndo> found;
  std::vector<std::uint16_t> m(n, 0);
  for (;;) {
    try {
      found.emplace_back(lambda, m);
    } catch (const std::invalid_argument&) {
    }
    // odometer over all n^n maps
    std::size_t pos = 0;
    while (pos < n && ++m[pos] == n) m[pos++] = 0;
    if (pos == n) break;
  }
  std::sort(found.begin(), found.end());
  return found;
}

EndStructureReport end_structure_report(std::uint32_t lambda) {
  EndStructureReport rep;
  rep.lambda = lambda;
  auto all = enumerate_endomorphisms(lambda);
  std::vector<FiniteEndo> inj, ann;
  rep.partition_ok = true;
  for (const auto& e : all) {
    bool i = e.is_injective(), c = e.is_constant();
    if (i) inj.push_back(e);
    if (c) ann.push_back(e);
    if (i == c) rep.partition_ok = false;  // must be exactly one of the two
  }
  rep.total = all.size();
  rep.injective = inj.size();
  rep.annihilating = ann.size();
  if (rep.injective + rep.annihilating != rep.total) rep.partition_ok = false;
  rep.counts_match_formula =
      rep.total == factorial(lambda) + lambda + 1;

  auto contains = [&](const FiniteEndo& e) {
    return std::binary_search(all.begin(), all.end(), e);
  };
  auto is_ann = [&](const FiniteEndo& e) {
    return std::binary_search(ann.begin(), ann.end(), e);
  };

  rep.closed_under_composition = true;
  for (const auto& a : all)
    for (const auto& b : all)
      if (!contains(compose(a, b))) rep.closed_under_composition = false;

  rep.right_zero_ok = true;
  for (const auto& x : ann)
    for (const auto& y : ann)
      if (compose(x, y) != y) rep.right_zero_ok = false;

  rep.ideal_ok = true;
  for (const auto& x : ann)
    for (const auto& e : all)
      if (!is_ann(compose(x, e)) || !is_ann(compose(e, x)))
        rep.ideal_ok = false;

  // Minimality: every ideal of End contains End^ann.  For small End check
  // every subset; otherwise use that each ideal contains a principal one.
  rep.minimal_ideal_ok = true;
  if (all.size() <= 10) {
    for (std::uint64_t bits = 1; bits < (1ull << all.size()); ++bits) {
      bool ideal = true;
      for (std::size_t i = 0; i < all.size() && ideal; ++i) {
        if (!(bits >> i & 1)) continue;
        for (const auto& e : all) {
          auto l = compose(e, all[i]), r = compose(all[i], e);
          auto idx_of = [&](const FiniteEndo& x) {
            return std::lower_bound(all.begin(), all.end(), x) - all.begin();
          };
          if (!(bits >> idx_of(l) & 1) || !(bits >> idx_of(r) & 1)) {
            ideal = false;
            break;
          }
        }
      }
      if (!ideal) continue;
      for (const auto& x : ann) {
        auto idx = std::lower_bound(all.begin(), all.end(), x) - all.begin();
        if (!(bits >> idx & 1)) rep.minimal_ideal_ok = false;
      }
    }
  } else {
    for (const auto& x : all) {
      // principal ideal of x (End has an identity, so left/right factors
      // range over End itself)
      std::vector<FiniteEndo> princ;
      for (const auto& a : all)
        for (const auto& b : all)
          princ.push_back(compose(compose(a, x), b));
      std::sort(princ.begin(), princ.end());
      princ.erase(std::unique(princ.begin(), princ.end()), princ.end());
      for (const auto& y : ann)
        if (!std::binary_search(princ.begin(), princ.end(), y))
          rep.minimal_ideal_ok = false;
    }
  }

  rep.absorb_into_ok = true;
  rep.transport_ok = true;
  for (const auto& x : ann) {
    MatUnit tx = x.apply(MatUnit::zero());  // constant value of x
    for (const auto& e : all) {
      if (compose(e, x) != x) rep.absorb_into_ok = false;
      if (compose(x, e) != annihilating_endo(lambda, e.apply(tx)))
        rep.transport_ok = false;
    }
  }

  rep.cancel_first_ok = rep.cancel_second_ok = true;
  for (const auto& a : inj)
    for (const auto& b : inj)
      for (const auto& c : inj) {
        if (compose(a, b) == compose(a, c) && b != c)
          rep.cancel_first_ok = false;
        if (compose(b, a) == compose(c, a) && b != c)
          rep.cancel_second_ok = false;
      }

  // Injective endomorphisms against permutations of {0..lambda-1}: the
  // diagonal readout must be a bijection onto all of them and must turn
  // composition of endomorphisms into composition of self-maps.
  rep.aut_order = inj.size();
  rep.perm_correspondence_ok = inj.size() == factorial(lambda);
  std::vector<std::vector<std::uint32_t>> perms;
  {
    std::vector<std::uint32_t> p(lambda);
    std::iota(p.begin(), p.end(), 0);
    do {
      perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
  }
  std::vector<std::vector<std::uint32_t>> images;
  for (const auto& e : inj) {
    auto i = injection_of(e);
    if (endo_from_injection(lambda, i) != e) rep.perm_correspondence_ok = false;
    if (!e.is_injective() ||
        std::find(perms.begin(), perms.end(), i) == perms.end())
      rep.perm_correspondence_ok = false;
    images.push_back(i);
  }
  std::sort(images.begin(), images.end());
  images.erase(std::unique(images.begin(), images.end()), images.end());
  if (images.size() != perms.size()) rep.perm_correspondence_ok = false;
  for (const auto& e1 : inj)
    for (const auto& e2 : inj) {
      auto i1 = injection_of(e1), i2 = injection_of(e2);
      auto ic = injection_of(compose(e1, e2));
      for (std::uint32_t a = 0; a < lambda; ++a)
        if (ic[a] != i2[i1[a]]) rep.perm_correspondence_ok = false;
    }

  rep.note =
      "finite index sets make every injective self-map a permutation, so "
      "both cancellation directions hold; over an infinite index set a "
      "non-surjective injection cannot be cancelled as the first-applied "
      "factor (see the cancellation demo)";
  return rep;
}

namespace {

struct UnionFind {
  std::vector<std::uint16_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  std::uint16_t find(std::uint16_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::uint16_t a, std::uint16_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
};

}  // namespace

CongruenceReport congruence_freeness_check(std::uint32_t lambda) {
  if (lambda == 0) throw std::invalid_argument("lambda must be >= 1");
  if (lambda > 4)
    throw std::invalid_argument("resource guard: lambda must be <= 4");
  CongruenceReport rep;
  rep.lambda = lambda;
  rep.lambda_one_flag = lambda == 1;
  std::size_t n = mu_count(lambda);
  auto cay = mu_cayley(lambda);
  auto mul = [&](std::uint16_t x, std::uint16_t y) {
    return cay[static_cast<std::size_t>(x) * n + y];
  };

  rep.congruence_free = true;
  for (std::uint16_t x = 0; x < n && rep.congruence_free; ++x) {
    for (std::uint16_t y = x + 1; y < n && rep.congruence_free; ++y) {
      // principal congruence generated by identifying x with y
      UnionFind uf(n);
      std::queue<std::pair<std::uint16_t, std::uint16_t>> work;
      uf.unite(x, y);
      work.emplace(x, y);
      while (!work.empty()) {
        auto [u, v] = work.front();
        work.pop();
        for (std::uint16_t a = 0; a < n; ++a) {
          for (auto [p, q] : {std::pair{mul(a, u), mul(a, v)},
                              std::pair{mul(u, a), mul(v, a)}}) {
            if (uf.unite(p, q)) work.emplace(p, q);
          }
        }
      }
      std::uint16_t root = uf.find(0);
      bool universal = true;
      for (std::uint16_t z = 1; z < n; ++z)
        if (uf.find(z) != root) universal = false;
      if (!universal) {
        rep.congruence_free = false;
        std::vector<std::vector<MatUnit>> blocks;
        for (std::uint16_t r = 0; r < n; ++r) {
          if (uf.find(r) != r) continue;
          std::vector<MatUnit> block;
          for (std::uint16_t z = 0; z < n; ++z)
            if (uf.find(z) == r) block.push_back(mu_of_index(lambda, z));
          blocks.push_back(std::move(block));
        }
        rep.proper_witness = std::move(blocks);
      }
    }
  }
  rep.congruence_count = rep.congruence_free ? 2 : 0;
  return rep;
}

EventualInjection::EventualInjection(std::uint64_t shift,
                                     std::vector<std::uint64_t> head)
    : shift_(shift), head_(std::move(head)) {
  // injectivity: head values distinct and disjoint from the tail image
  // [head.size() + shift, infinity)
  for (std::size_t i = 0; i < head_.size(); ++i) {
    if (head_[i] >= head_.size() + shift_)
      throw std::invalid_argument("head value collides with the tail image");
    for (std::size_t j = i + 1; j < head_.size(); ++j)
      if (head_[i] == head_[j])
        throw std::invalid_argument("head values must be distinct");
  }
  while (!head_.empty() && head_.back() == head_.size() - 1 + shift_)
    head_.pop_back();
}

std::uint64_t EventualInjection::operator()(std::uint64_t x) const {
  if (x < head_.size()) return head_[x];
  return x + shift_;
}

bool EventualInjection::is_surjective() const {
  // image = head values plus [head.size() + shift, inf); the m head values
  // must cover the m + shift numbers below that
  return shift_ == 0;
}

std::string EventualInjection::describe() const {
  std::ostringstream os;
  os << "x -> x+" << shift_;
  if (!head_.empty()) {
    os << " except";
    for (std::size_t i = 0; i < head_.size(); ++i)
      os << ' ' << i << "->" << head_[i];
  }
  return os.str();
}

EventualInjection compose(const EventualInjection& f,
                          const EventualInjection& g) {
  std::uint64_t m1 = f.head().size(), m2 = g.head().size();
  // past this point both factors follow their tail rule
  std::uint64_t m = m1;
  if (m2 > f.shift_amount() && m2 - f.shift_amount() > m)
    m = m2 - f.shift_amount();
  std::vector<std::uint64_t> head(m);
  for (std::uint64_t x = 0; x < m; ++x) head[x] = g(f(x));
  return EventualInjection(f.shift_amount() + g.shift_amount(),
                           std::move(head));
}

CancellationDemo cancellation_demo() {
  CancellationDemo d{
      EventualInjection::shift_map(1),
      // g and h agree from 1 on (x -> x+2) but differ at 0; both injective
      EventualInjection(2, {0}),
      EventualInjection(2, {1}),
  };
  d.g_ne_h = !(d.g == d.h);
  d.f_then_g_eq_f_then_h = compose(d.f, d.g) == compose(d.f, d.h);
  d.g_then_f_ne_h_then_f = !(compose(d.g, d.f) == compose(d.h, d.f));
  return d;
}

}  // namespace bext
