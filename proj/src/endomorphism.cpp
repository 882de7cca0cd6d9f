#include "bext/endomorphism.hpp"

#include <map>
#include <sstream>

namespace bext {

std::string to_string(ViolationKind k) {
  switch (k) {
    case ViolationKind::zero_not_fixed:
      return "zero-not-fixed";
    case ViolationKind::not_injective:
      return "not-injective";
    case ViolationKind::max_idempotent_image_not_maximal:
      return "max-idempotent-image-not-maximal";
    case ViolationKind::order_not_preserved:
      return "order-not-preserved";
    case ViolationKind::pointwise_mismatch:
      return "pointwise-mismatch";
  }
  return "?";
}

ClassifyOutcome classify_injective(const ConvSemigroup& sgp,
                                   const Endo<ConvIso>& table) {
  if (sgp.n < 2)
    throw std::invalid_argument(
        "classification needs rank bound >= 2; rank 1 collapses to the "
        "matrix-units semigroup");
  if (table.kind != EndoKind::table)
    throw std::invalid_argument("classification takes an explicit table");

  const ConvIso max_idem{0, 0, sgp.n};
  if (!table.lookup(ConvIso::zero()) || !table.lookup(max_idem))
    throw std::invalid_argument(
        "window too small: it must contain Zero and conv(0,0,n)");

  auto render = [](const auto&... xs) {
    std::ostringstream os;
    ((os << xs), ...);
    return os.str();
  };

  // 1. Zero must be fixed.
  const ConvIso zimg = *table.lookup(ConvIso::zero());
  if (!zimg.is_zero())
    return ClassifyViolation{ViolationKind::zero_not_fixed,
                             render("0 maps to ", zimg)};

  // 2. Injectivity on the window.
  {
    std::map<ConvIso, ConvIso> seen;
    for (const auto& [x, v] : table.entries) {
      auto [it, fresh] = seen.emplace(v, x);
      if (!fresh)
        return ClassifyViolation{
            ViolationKind::not_injective,
            render(it->second, " and ", x, " both map to ", v)};
    }
  }

  // 3. The image of the maximal idempotent conv(0,0,n) must again be a
  //    maximal idempotent conv(i0,i0,n); that pins i0.
  const ConvIso mimg = *table.lookup(max_idem);
  if (mimg.is_zero() || mimg.s != mimg.t || mimg.k != sgp.n)
    return ClassifyViolation{
        ViolationKind::max_idempotent_image_not_maximal,
        render(max_idem, " maps to ", mimg)};
  const std::uint64_t i0 = mimg.s;
  if (!table.lookup(sgp.apply_shift(i0, max_idem)))
    throw std::invalid_argument(
        "window too small: the image of conv(0,0,n) must be inside it");

  // 4. The natural partial order must be preserved.
  for (const auto& [x, vx] : table.entries)
    for (const auto& [y, vy] : table.entries)
      if (nat_leq(x, y) && !nat_leq(vx, vy))
        return ClassifyViolation{
            ViolationKind::order_not_preserved,
            render(x, " <= ", y, " but ", vx, " !<= ", vy)};

  // 5. Pointwise agreement with shift-by-i0.
  for (const auto& [x, v] : table.entries) {
    ConvIso expect = sgp.apply_shift(i0, x);
    if (!(v == expect))
      return ClassifyViolation{
          ViolationKind::pointwise_mismatch,
          render(x, " maps to ", v, ", shift-by-", i0, " gives ", expect)};
  }
  return i0;
}

}  // namespace bext
