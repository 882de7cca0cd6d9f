#include <stdexcept>
#include <utility>
#include <variant>
#include <vector>

#include "bext/bicyclic_ext.hpp"
#include "bext/conv_iso.hpp"
#include "bext/element_io.hpp"
#include "bext/endomorphism.hpp"
#include "bext/errors.hpp"
#include "doctest.h"

using bext::BExtElt;
using bext::ConvIso;
using bext::ConvSemigroup;
using bext::Endo;
using bext::EndoKind;
using bext::ExtSemigroup;
using bext::OmegaSet;
using bext::ViolationKind;

namespace {

// overwrite the value stored under `key` (the key must be present)
void put(Endo<ConvIso>& tab, const ConvIso& key, const ConvIso& value) {
  for (auto& [k, v] : tab.entries)
    if (k == key) {
      v = value;
      return;
    }
  FAIL("key not in table");
}

}  // namespace

TEST_CASE("table construction rejects duplicate keys") {
  std::vector<std::pair<ConvIso, ConvIso>> entries = {
      {ConvIso{0, 0, 1}, ConvIso{0, 0, 1}},
      {ConvIso{0, 0, 1}, ConvIso{1, 1, 1}},
  };
  CHECK_THROWS_AS(Endo<ConvIso>::table(entries), std::invalid_argument);
}

TEST_CASE("annihilators exist exactly at idempotents") {
  ConvSemigroup sgp{2};
  CHECK_NOTHROW(bext::make_annihilator(sgp, ConvIso{3, 3, 1}));
  CHECK_NOTHROW(bext::make_annihilator(sgp, ConvIso::zero()));
  CHECK_THROWS_AS(bext::make_annihilator(sgp, ConvIso{0, 1, 1}),
                  std::invalid_argument);

  auto ext = ExtSemigroup::initial_intervals(1);
  CHECK_NOTHROW(bext::make_annihilator(ext, ext.make(2, 2, OmegaSet{0, 1})));
  CHECK_THROWS_AS(bext::make_annihilator(ext, ext.make(1, 2, OmegaSet{0})),
                  std::invalid_argument);
}

TEST_CASE("applying the three endomorphism shapes") {
  ConvSemigroup sgp{2};
  CHECK(bext::apply(sgp, Endo<ConvIso>::shift(3), ConvIso{1, 4, 2}) ==
        ConvIso{4, 7, 2});

  auto ext = ExtSemigroup::initial_intervals(1);
  BExtElt x = ext.make(2, 3, OmegaSet{0, 1});
  CHECK(bext::apply(ext, Endo<BExtElt>::shift(5), x) ==
        ext.make(7, 8, OmegaSet{0, 1}));

  auto ann = bext::make_annihilator(sgp, ConvIso{1, 1, 1});
  CHECK(bext::apply(sgp, ann, ConvIso{4, 2, 2}) == ConvIso{1, 1, 1});
  CHECK(bext::apply(sgp, ann, ConvIso::zero()) == ConvIso{1, 1, 1});

  auto tab = bext::table_of(sgp, Endo<ConvIso>::shift(1), 3);
  CHECK(bext::apply(sgp, tab, ConvIso{2, 0, 1}) == ConvIso{3, 1, 1});
  CHECK_THROWS_AS(bext::apply(sgp, tab, ConvIso{9, 9, 1}),
                  bext::StructureError);
}

TEST_CASE("shifts verify on both models") {
  ConvSemigroup conv{3};
  auto vr = bext::verify_endomorphism(conv, Endo<ConvIso>::shift(2), 6);
  CHECK(vr.ok);
  CHECK(vr.skipped == 0);
  CHECK(vr.checked == conv.window(6).size() * conv.window(6).size());

  auto ext = ExtSemigroup::initial_intervals(1);
  auto ve = bext::verify_endomorphism(ext, Endo<BExtElt>::shift(2), 5);
  CHECK(ve.ok);
  CHECK(ve.skipped == 0);
}

TEST_CASE("a constant map at any idempotent verifies, including rank one") {
  ConvSemigroup sgp{1};
  auto ann = bext::make_annihilator(sgp, ConvIso{0, 0, 1});
  auto vr = bext::verify_endomorphism(sgp, ann, 4);
  CHECK(vr.ok);

  auto ext = ExtSemigroup::initial_intervals(0);
  auto vz = bext::verify_endomorphism(
      ext, bext::make_annihilator(ext, ext.make(0, 0, OmegaSet{0})), 4);
  CHECK(vz.ok);

  auto at_zero = bext::verify_endomorphism(
      sgp, bext::make_annihilator(sgp, ConvIso::zero()), 4);
  CHECK(at_zero.ok);
}

TEST_CASE("verification skips pairs a partial table cannot evaluate") {
  ConvSemigroup sgp{2};
  auto small = bext::table_of(sgp, Endo<ConvIso>::shift(0), 2);
  auto vr = bext::verify_endomorphism(sgp, small, 4);
  CHECK(vr.ok);            // no false failures from missing entries
  CHECK(vr.skipped > 0);   // window 4 elements are not in the table
  CHECK(vr.checked > 0);
}

TEST_CASE("a corrupted table fails verification with a witness") {
  ConvSemigroup sgp{2};
  auto tab = bext::table_of(sgp, Endo<ConvIso>::shift(0), 4);
  put(tab, ConvIso{0, 0, 1}, ConvIso{1, 1, 1});
  auto vr = bext::verify_endomorphism(sgp, tab, 4);
  CHECK(!vr.ok);
  REQUIRE(vr.witness.has_value());
}

TEST_CASE("composition is symbolic where it can be") {
  ConvSemigroup sgp{2};
  auto s = bext::compose_endos(sgp, Endo<ConvIso>::shift(2),
                               Endo<ConvIso>::shift(3));
  CHECK(s.kind == EndoKind::shift);
  CHECK(s.shift_by == 5);

  // constant map composed after anything stays that constant map
  auto ann = bext::make_annihilator(sgp, ConvIso{1, 1, 1});
  CHECK(bext::compose_endos(sgp, Endo<ConvIso>::shift(4), ann) == ann);

  // constant map applied first: the target is carried through the second map
  auto carried = bext::compose_endos(sgp, ann, Endo<ConvIso>::shift(2));
  CHECK(carried.kind == EndoKind::annihilate);
  CHECK(carried.target == ConvIso{3, 3, 1});
}

TEST_CASE("table composition agrees with pointwise application") {
  ConvSemigroup sgp{2};
  auto t1 = bext::table_of(sgp, Endo<ConvIso>::shift(1), 4);
  auto t2 = bext::table_of(sgp, Endo<ConvIso>::shift(2), 8);
  CHECK(bext::compose_endos(sgp, t1, t2) ==
        bext::table_of(sgp, Endo<ConvIso>::shift(3), 4));

  // second table too small for the first table's values
  auto tiny = bext::table_of(sgp, Endo<ConvIso>::shift(0), 2);
  CHECK_THROWS_AS(bext::compose_endos(sgp, t1, tiny), bext::StructureError);
}

TEST_CASE("shift-then-table composition pulls the window back") {
  ConvSemigroup sgp{2};
  auto t = bext::table_of(sgp, Endo<ConvIso>::shift(1), 6);
  auto c = bext::compose_endos(sgp, Endo<ConvIso>::shift(2), t);
  REQUIRE(c.kind == EndoKind::table);
  CHECK(bext::apply(sgp, c, ConvIso{0, 0, 1}) == ConvIso{3, 3, 1});
  CHECK(bext::apply(sgp, c, ConvIso::zero()).is_zero());

  auto ext = ExtSemigroup::initial_intervals(1);
  auto te = bext::table_of(ext, Endo<BExtElt>::shift(1), 4);
  auto ce = bext::compose_endos(ext, Endo<BExtElt>::shift(2), te);
  CHECK(bext::apply(ext, ce, ext.make(1, 0, OmegaSet{0})) ==
        ext.make(4, 3, OmegaSet{0}));

  // a shifted domain that misses the whole table
  auto one_entry = Endo<ConvIso>::table(
      {{ConvIso{0, 0, 1}, ConvIso{0, 0, 1}}});
  CHECK_THROWS_AS(bext::compose_endos(sgp, Endo<ConvIso>::shift(5), one_entry),
                  bext::StructureError);
}

TEST_CASE("classifier recovers a clean shift") {
  ConvSemigroup sgp{2};
  for (std::uint64_t i0 : {0, 1, 3}) {
    auto tab = bext::table_of(sgp, Endo<ConvIso>::shift(i0), 8);
    auto out = bext::classify_injective(sgp, tab);
    REQUIRE(std::holds_alternative<std::uint64_t>(out));
    CHECK(std::get<std::uint64_t>(out) == i0);
  }
}

TEST_CASE("classifier violations fire in dependency order") {
  ConvSemigroup sgp{2};
  auto fresh = [&] { return bext::table_of(sgp, Endo<ConvIso>::shift(0), 8); };
  auto kind_of = [&](const Endo<ConvIso>& tab) {
    auto out = bext::classify_injective(sgp, tab);
    REQUIRE(std::holds_alternative<bext::ClassifyViolation>(out));
    return std::get<bext::ClassifyViolation>(out).kind;
  };

  auto t1 = fresh();
  put(t1, ConvIso::zero(), ConvIso{0, 0, 1});
  CHECK(kind_of(t1) == ViolationKind::zero_not_fixed);

  auto t2 = fresh();
  put(t2, ConvIso{0, 1, 1}, ConvIso{1, 2, 1});  // collides with another image
  CHECK(kind_of(t2) == ViolationKind::not_injective);

  auto t3 = fresh();
  put(t3, ConvIso{0, 0, 2}, ConvIso{0, 1, 2});  // swap keeps injectivity
  put(t3, ConvIso{0, 1, 2}, ConvIso{0, 0, 2});
  CHECK(kind_of(t3) == ViolationKind::max_idempotent_image_not_maximal);

  auto t4 = fresh();
  put(t4, ConvIso{1, 2, 1}, ConvIso{2, 1, 1});
  put(t4, ConvIso{2, 1, 1}, ConvIso{1, 2, 1});
  CHECK(kind_of(t4) == ViolationKind::order_not_preserved);

  // an element with no order constraints in a tight window can only be
  // caught by the final pointwise comparison
  auto t5 = bext::table_of(sgp, Endo<ConvIso>::shift(0), 4);
  put(t5, ConvIso{4, 0, 1}, ConvIso{7, 0, 1});
  CHECK(kind_of(t5) == ViolationKind::pointwise_mismatch);
}

TEST_CASE("classifier preconditions") {
  ConvSemigroup rank1{1};
  auto t = bext::table_of(rank1, Endo<ConvIso>::shift(0), 4);
  CHECK_THROWS_AS(bext::classify_injective(rank1, t), std::invalid_argument);

  ConvSemigroup sgp{2};
  CHECK_THROWS_AS(bext::classify_injective(sgp, Endo<ConvIso>::shift(1)),
                  std::invalid_argument);

  auto no_zero = Endo<ConvIso>::table({{ConvIso{0, 0, 1}, ConvIso{0, 0, 1}},
                                       {ConvIso{0, 0, 2}, ConvIso{0, 0, 2}}});
  CHECK_THROWS_AS(bext::classify_injective(sgp, no_zero),
                  std::invalid_argument);

  auto no_top = Endo<ConvIso>::table({{ConvIso::zero(), ConvIso::zero()},
                                      {ConvIso{0, 0, 1}, ConvIso{0, 0, 1}}});
  CHECK_THROWS_AS(bext::classify_injective(sgp, no_top),
                  std::invalid_argument);
}

TEST_CASE("violation kinds render as stable labels") {
  CHECK(bext::to_string(ViolationKind::zero_not_fixed) == "zero-not-fixed");
  CHECK(bext::to_string(ViolationKind::not_injective) == "not-injective");
  CHECK(bext::to_string(ViolationKind::max_idempotent_image_not_maximal) ==
        "max-idempotent-image-not-maximal");
  CHECK(bext::to_string(ViolationKind::order_not_preserved) ==
        "order-not-preserved");
  CHECK(bext::to_string(ViolationKind::pointwise_mismatch) ==
        "pointwise-mismatch");
}

TEST_CASE("the shift family acts like addition on indices") {
  auto m = bext::injective_endo_monoid_check(ConvSemigroup{2}, 3, 5);
  CHECK(m.ok);
  auto e = bext::injective_endo_monoid_check(
      ExtSemigroup::initial_intervals(1), 3, 5);
  CHECK(e.ok);
}
