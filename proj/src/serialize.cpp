#include "motive/serialize.hpp"

namespace motive {

std::string scalar_string(const Rational &r) { return to_string(r); }
std::string scalar_string(const GF &a) { return to_string(a); }

template <> Rational parse_scalar<Rational>(const std::string &text, const CoefficientRing &ring) {
  const Rational r = parse_rational(text);
  if (!belongs_to(r, ring)) throw std::invalid_argument("coefficient " + text + " is not in " + ring.name());
  return r;
}

template <> GF parse_scalar<GF>(const std::string &text, const CoefficientRing &ring) {
  const FiniteField &f = ring.field();
  if (f.degree() == 1) return reduce(parse_rational(text), f);
  for (int v = 0; v < f.order(); ++v)
    if (f.element_string(static_cast<std::uint32_t>(v)) == text) return GF(f, static_cast<std::uint32_t>(v));
  throw std::invalid_argument("not an element of " + ring.name() + ": " + text);
}

} // namespace motive
