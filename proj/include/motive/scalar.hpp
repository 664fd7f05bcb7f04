#pragma once

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Core>
#include <boost/multiprecision/gmp.hpp>

namespace motive {

using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

/// Arithmetic tables for the field with p^e elements; elements are indices in [0, q)
/// read as base-p digit strings of polynomials modulo a fixed monic irreducible.
class FiniteField {
public:
  /// Shared instance for (p, e); instances live for the whole program.
  static const FiniteField &get(int p, int e = 1);

  int characteristic() const { return p_; }
  int degree() const { return e_; }
  int order() const { return q_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return add_[a * q_ + b]; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return mul_[a * q_ + b]; }
  std::uint32_t neg(std::uint32_t a) const { return neg_[a]; }
  std::uint32_t inv(std::uint32_t a) const;
  std::uint32_t from_integer(std::int64_t n) const;
  /// Coefficients (constant term first) of the defining polynomial.
  const std::vector<int> &modulus() const { return modulus_; }

  std::string element_string(std::uint32_t a) const;

private:
  FiniteField(int p, int e);

  int p_;
  int e_;
  int q_;
  std::vector<int> modulus_;
  std::vector<std::uint32_t> add_;
  std::vector<std::uint32_t> mul_;
  std::vector<std::uint32_t> neg_;
  std::vector<std::uint32_t> inv_;
};

/// Element of a finite field. A value without a field is an integer literal
/// (what Eigen produces through Scalar(0) and Scalar(1)); it adopts the field of
/// the other operand as soon as it meets one.
class GF {
public:
  GF() = default;
  GF(int literal) : literal_(literal) {}
  GF(long literal) : literal_(literal) {}
  GF(const FiniteField &field, std::uint32_t value) : field_(&field), value_(value) {}
  static GF from_integer(const FiniteField &field, std::int64_t n) {
    return GF(field, field.from_integer(n));
  }

  const FiniteField *field() const { return field_; }
  std::uint32_t value() const { return value_; }
  bool is_literal() const { return field_ == nullptr; }
  std::int64_t literal() const { return literal_; }
  bool is_zero() const { return field_ ? value_ == 0 : literal_ == 0; }

  GF &operator+=(const GF &o);
  GF &operator-=(const GF &o);
  GF &operator*=(const GF &o);
  GF &operator/=(const GF &o);
  GF operator-() const;

  friend GF operator+(GF a, const GF &b) { return a += b; }
  friend GF operator-(GF a, const GF &b) { return a -= b; }
  friend GF operator*(GF a, const GF &b) { return a *= b; }
  friend GF operator/(GF a, const GF &b) { return a /= b; }
  friend bool operator==(const GF &a, const GF &b);
  friend bool operator!=(const GF &a, const GF &b) { return !(a == b); }
  friend std::ostream &operator<<(std::ostream &os, const GF &a);

private:
  static const FiniteField *common(const GF &a, const GF &b);
  std::uint32_t in(const FiniteField &f) const {
    return field_ ? value_ : f.from_integer(literal_);
  }

  const FiniteField *field_ = nullptr;
  std::uint32_t value_ = 0;
  std::int64_t literal_ = 0;
};

inline bool is_zero(const Rational &r) { return r.is_zero(); }
inline bool is_zero(const GF &a) { return a.is_zero(); }

std::string to_string(const Rational &r);
std::string to_string(const GF &a);
Rational parse_rational(const std::string &text);

enum class RingKind { Integer, Rational, PLocal, PrimeField };

/// Tag describing which coefficient ring a vector of scalars lives in.
struct CoefficientRing {
  RingKind kind = RingKind::Integer;
  int prime = 0;
  int exponent = 1;

  static CoefficientRing integers() { return {RingKind::Integer, 0, 1}; }
  static CoefficientRing rationals() { return {RingKind::Rational, 0, 1}; }
  static CoefficientRing p_local(int p) { return {RingKind::PLocal, p, 1}; }
  static CoefficientRing prime_field(int p, int e = 1) { return {RingKind::PrimeField, p, e}; }
  /// Parses "Z", "Q", "Zp:<p>", "Fp:<p>[:<e>]".
  static CoefficientRing parse(const std::string &text);

  const FiniteField &field() const { return FiniteField::get(prime, exponent); }
  std::string name() const;

  friend bool operator==(const CoefficientRing &, const CoefficientRing &) = default;
};

struct mixed_rings_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

inline void require_same_ring(const CoefficientRing &a, const CoefficientRing &b) {
  if (!(a == b))
    throw mixed_rings_error("mixed scalar rings: " + a.name() + " vs " + b.name());
}

/// True when r is a member of the (exact, characteristic zero) ring.
bool belongs_to(const Rational &r, const CoefficientRing &ring);

/// Reduction of a p-local (or integral) rational into F_q; throws if p divides the denominator.
GF reduce(const Rational &r, const FiniteField &field);

bool is_prime(int n);
std::vector<int> prime_divisors(std::uint64_t n);

} // namespace motive

namespace Eigen {

template <> struct NumTraits<motive::Rational> : GenericNumTraits<motive::Rational> {
  using Real = motive::Rational;
  using NonInteger = motive::Rational;
  using Nested = motive::Rational;
  using Literal = motive::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 10,
    AddCost = 40,
    MulCost = 80
  };
  static motive::Rational epsilon() { return 0; }
  static motive::Rational dummy_precision() { return 0; }
  static int digits10() { return 0; }
};

template <> struct NumTraits<motive::GF> : GenericNumTraits<motive::GF> {
  using Real = motive::GF;
  using NonInteger = motive::GF;
  using Nested = motive::GF;
  using Literal = motive::GF;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 0,
    RequireInitialization = 1,
    ReadCost = 2,
    AddCost = 3,
    MulCost = 3
  };
  static motive::GF epsilon() { return 0; }
  static motive::GF dummy_precision() { return 0; }
  static int digits10() { return 0; }
};

} // namespace Eigen

namespace motive {

template <class Scalar> using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <class Scalar> using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// Integer n as a scalar of the given ring (the field is needed for GF).
template <class Scalar> Scalar scalar_from_integer(std::int64_t n, const CoefficientRing &ring);

template <> inline Rational scalar_from_integer<Rational>(std::int64_t n, const CoefficientRing &) {
  return Rational(n);
}
template <> inline GF scalar_from_integer<GF>(std::int64_t n, const CoefficientRing &ring) {
  return GF::from_integer(ring.field(), n);
}

template <class Scalar> Vector<Scalar> zero_vector(Eigen::Index n, const CoefficientRing &ring) {
  Vector<Scalar> v(n);
  for (Eigen::Index i = 0; i < n; ++i) v[i] = scalar_from_integer<Scalar>(0, ring);
  return v;
}

} // namespace motive
