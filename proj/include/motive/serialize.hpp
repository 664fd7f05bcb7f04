#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "motive/mackey.hpp"

namespace motive {

using Json = nlohmann::ordered_json;

std::string scalar_string(const Rational &r);
std::string scalar_string(const GF &a);
/// Parses a coefficient string into the ring: "p/q" for characteristic zero, an integer for F_p.
template <class Scalar> Scalar parse_scalar(const std::string &text, const CoefficientRing &ring);

/// {class_name: "p/q"} over the nonzero coefficients, in class order.
template <class Scalar> Json to_json(const BurnsideRing &b, const BurnsideElement<Scalar> &x) {
  Json out = Json::object();
  for (int i = 0; i < b.dimension(); ++i)
    if (!is_zero(x.coefficients[i])) out[b.classes()[i].name] = scalar_string(x.coefficients[i]);
  return out;
}

/// {"[H,a]": "p/q"} over the nonzero coefficients, in basis order.
template <class Scalar> Json to_json(const CrossedBurnsideRing &c, const CrossedElement<Scalar> &x) {
  Json out = Json::object();
  for (int i = 0; i < c.dimension(); ++i)
    if (!is_zero(x.coefficients[i])) out[c.basis_name(i)] = scalar_string(x.coefficients[i]);
  return out;
}

/// Keyed by the smallest element of each conjugacy class, in cycle notation.
template <class Scalar> Json to_json(const CenterAlgebra &z, const CenterElement<Scalar> &x) {
  Json out = Json::object();
  for (int c = 0; c < z.dimension(); ++c)
    if (!is_zero(x.coordinates[c])) out[z.group().element_string(z.classes()[c].front())] = scalar_string(x.coordinates[c]);
  return out;
}

/// [{"S", "x", "y", "coeff"}] over the nonzero coefficients.
template <class Scalar> Json to_json(const MackeyAlgebra &m, const SpanElement<Scalar> &x) {
  Json out = Json::array();
  for (int i = 0; i < m.dimension(); ++i) {
    if (is_zero(x.coefficients[i])) continue;
    const auto &b = m.basis()[i];
    out.push_back({{"S", m.classes()[b.stabilizer_class].name},
                   {"x", m.omega().point_name(b.source)},
                   {"y", m.omega().point_name(b.target)},
                   {"coeff", scalar_string(x.coefficients[i])}});
  }
  return out;
}

template <class Scalar>
BurnsideElement<Scalar> burnside_from_json(const BurnsideRing &b, const Json &j, const CoefficientRing &ring) {
  if (!j.is_object()) throw std::invalid_argument("Burnside element must be a JSON object");
  BurnsideElement<Scalar> x = b.zero<Scalar>(ring);
  for (const auto &[key, value] : j.items())
    x.coefficients[b.classes().class_by_name(key)] += parse_scalar<Scalar>(value.template get<std::string>(), ring);
  return x;
}

template <class Scalar>
CrossedElement<Scalar> crossed_from_json(const CrossedBurnsideRing &c, const Json &j, const CoefficientRing &ring) {
  if (!j.is_object()) throw std::invalid_argument("crossed element must be a JSON object");
  CrossedElement<Scalar> x = c.zero<Scalar>(ring);
  for (const auto &[key, value] : j.items())
    x.coefficients[c.basis_by_name(key)] += parse_scalar<Scalar>(value.template get<std::string>(), ring);
  return x;
}

template <class Scalar>
CenterElement<Scalar> center_from_json(const CenterAlgebra &z, const Json &j, const CoefficientRing &ring) {
  if (!j.is_object()) throw std::invalid_argument("center element must be a JSON object");
  CenterElement<Scalar> x = z.zero<Scalar>(ring);
  for (const auto &[key, value] : j.items()) {
    const int g = z.group().index_of(Permutation::parse_cycles(key, z.group().degree()));
    const int c = z.class_of(g);
    if (z.classes()[c].front() != g) throw std::invalid_argument("not a canonical class representative: " + key);
    x.coordinates[c] += parse_scalar<Scalar>(value.template get<std::string>(), ring);
  }
  return x;
}

} // namespace motive
