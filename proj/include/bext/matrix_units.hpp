#ifndef BEXT_MATRIX_UNITS_HPP
#define BEXT_MATRIX_UNITS_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace bext {

// Element of the semigroup of lambda x lambda matrix units: Zero or a unit
// (a, b).  The product (a,b)(c,d) is (a,d) when b = c and Zero otherwise.
struct MatUnit {
  bool nonzero = false;
  std::uint32_t a = 0, b = 0;

  static MatUnit zero() { return {}; }
  static MatUnit unit(std::uint32_t a, std::uint32_t b) {
    return {true, a, b};
  }

  bool is_zero() const { return !nonzero; }
  bool is_idempotent() const { return !nonzero || a == b; }

  friend bool operator==(const MatUnit&, const MatUnit&) = default;
  friend auto operator<=>(const MatUnit&, const MatUnit&) = default;
};

MatUnit mu_mul(const MatUnit& x, const MatUnit& y);

std::ostream& operator<<(std::ostream&, const MatUnit&);

// Index encoding used by the endomorphism tables: 0 is Zero, 1 + a*lambda + b
// is the unit (a, b).
inline std::size_t mu_count(std::uint32_t lambda) {
  return static_cast<std::size_t>(lambda) * lambda + 1;
}
std::uint16_t mu_index(std::uint32_t lambda, const MatUnit& x);
MatUnit mu_of_index(std::uint32_t lambda, std::uint16_t idx);

// A total endomorphism of the matrix-unit semigroup for a fixed lambda,
// stored as an index map.  The constructor verifies the homomorphism
// property on every pair and throws std::invalid_argument otherwise.
class FiniteEndo {
 public:
  FiniteEndo(std::uint32_t lambda, std::vector<std::uint16_t> map);

  std::uint32_t lambda() const { return lambda_; }
  const std::vector<std::uint16_t>& map() const { return map_; }

  std::uint16_t apply_idx(std::uint16_t x) const { return map_[x]; }
  MatUnit apply(const MatUnit& x) const;

  bool is_injective() const;
  bool is_constant() const;

  friend bool operator==(const FiniteEndo&, const FiniteEndo&) = default;
  friend auto operator<=>(const FiniteEndo&, const FiniteEndo&) = default;

 private:
  std::uint32_t lambda_;
  std::vector<std::uint16_t> map_;
};

// Left-to-right: (x)(e1 ∘ e2) = ((x)e1)e2.
FiniteEndo compose(const FiniteEndo& e1, const FiniteEndo& e2);

FiniteEndo identity_endo(std::uint32_t lambda);

// The endomorphism (a,b) -> (img[a], img[b]), Zero -> Zero, for an injective
// self-map img of {0..lambda-1}.
FiniteEndo endo_from_injection(std::uint32_t lambda,
                               const std::vector<std::uint32_t>& img);

// The constant map at an idempotent (Zero or a diagonal unit).
FiniteEndo annihilating_endo(std::uint32_t lambda, const MatUnit& target);

// Reads the underlying self-map back off an injective endomorphism via the
// images of the diagonal units.  Throws if the endomorphism is not of the
// diagonal-respecting form (which, for an injective one, cannot happen).
std::vector<std::uint32_t> injection_of(const FiniteEndo& e);

// Every endomorphism, found by assigning images to the generators
// {(a,a+1), (a+1,a), (0,0)} and closing under products with immediate
// consistency pruning.  Resource-guarded to lambda <= 4.  Sorted.
std::vector<FiniteEndo> enumerate_endomorphisms(std::uint32_t lambda);

// Brute-force cross-check: all (lambda^2+1)^(lambda^2+1) self-maps, filtered
// by the homomorphism property.  Only sensible for lambda <= 2.
std::vector<FiniteEndo> enumerate_endomorphisms_naive(std::uint32_t lambda);

struct EndStructureReport {
  std::uint32_t lambda = 0;
  std::uint64_t total = 0, injective = 0, annihilating = 0;
  std::uint64_t aut_order = 0;
  bool counts_match_formula = false;  // total == lambda! + lambda + 1
  bool partition_ok = false;       // injective xor constant, no overlap
  bool closed_under_composition = false;
  bool right_zero_ok = false;      // a_x ∘ a_y = a_y
  bool ideal_ok = false;           // End^ann absorbs End on both sides
  bool minimal_ideal_ok = false;   // every ideal of End contains End^ann
  bool absorb_into_ok = false;     // e ∘ a_x = a_x
  bool transport_ok = false;       // a_x ∘ e = a_{(x)e}
  bool cancel_first_ok = false;    // within End^inj: a∘b = a∘c implies b = c
  bool cancel_second_ok = false;   // within End^inj: b∘a = c∘a implies b = c
  bool perm_correspondence_ok = false;  // e -> induced self-map is a monoid
                                        // isomorphism onto the permutations
  std::string note;

  bool ok() const {
    return counts_match_formula && partition_ok && closed_under_composition &&
           right_zero_ok && ideal_ok && minimal_ideal_ok && absorb_into_ok &&
           transport_ok && cancel_first_ok && cancel_second_ok &&
           perm_correspondence_ok;
  }
};

EndStructureReport end_structure_report(std::uint32_t lambda);

struct CongruenceReport {
  std::uint32_t lambda = 0;
  bool congruence_free = false;  // exactly two congruences
  std::uint64_t congruence_count = 0;  // 2 when free
  // a proper, non-identity congruence partition when one exists
  std::optional<std::vector<std::vector<MatUnit>>> proper_witness;
  bool lambda_one_flag = false;  // lambda = 1 sits outside the usual reading
};

// Closes every single-pair identification under the congruence axioms; the
// semigroup is congruence-free iff each closure is already universal.
CongruenceReport congruence_freeness_check(std::uint32_t lambda);

// Finitely described injection of omega into itself: x -> head[x] below the
// head, x -> x + shift from there on.  Canonical form trims head entries that
// agree with the tail rule.
class EventualInjection {
 public:
  EventualInjection(std::uint64_t shift, std::vector<std::uint64_t> head);

  static EventualInjection shift_map(std::uint64_t s) {
    return EventualInjection(s, {});
  }

  std::uint64_t operator()(std::uint64_t x) const;
  std::uint64_t shift_amount() const { return shift_; }
  const std::vector<std::uint64_t>& head() const { return head_; }
  bool is_surjective() const;
  std::string describe() const;

  friend bool operator==(const EventualInjection&,
                         const EventualInjection&) = default;

 private:
  std::uint64_t shift_;
  std::vector<std::uint64_t> head_;
};

// Apply f first, then g.
EventualInjection compose(const EventualInjection& f,
                          const EventualInjection& g);

// The divergence that only appears for infinite index sets: with g != h and a
// non-surjective f, applying f first erases the difference (f∘g = f∘h), while
// f can always be cancelled when applied last.  Finite-lambda injections are
// permutations, where both cancellations hold.
struct CancellationDemo {
  EventualInjection f, g, h;
  bool g_ne_h = false;
  bool f_then_g_eq_f_then_h = false;
  bool g_then_f_ne_h_then_f = false;

  bool demonstrates() const {
    return g_ne_h && f_then_g_eq_f_then_h && g_then_f_ne_h_then_f;
  }
};

CancellationDemo cancellation_demo();

}  // namespace bext

#endif
