#include "motive/scalar.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>

namespace motive {

namespace {

// polynomials over F_p as digit vectors, constant term first
using Poly = std::vector<int>;

Poly digits(std::uint32_t a, int p, int e) {
  Poly d(e, 0);
  for (int i = 0; i < e; ++i) {
    d[i] = static_cast<int>(a % p);
    a /= p;
  }
  return d;
}

std::uint32_t undigits(const Poly &d, int p) {
  std::uint32_t a = 0;
  for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i) a = a * p + d[i];
  return a;
}

// remainder of a modulo the monic polynomial m
Poly poly_mod(Poly a, const Poly &m, int p) {
  const int dm = static_cast<int>(m.size()) - 1;
  for (int i = static_cast<int>(a.size()) - 1; i >= dm; --i) {
    const int c = a[i] % p;
    if (c == 0) continue;
    for (int j = 0; j <= dm; ++j) a[i - dm + j] = ((a[i - dm + j] - c * m[j]) % p + p) % p;
  }
  a.resize(dm);
  return a;
}

bool has_no_roots_or_factors(const Poly &m, int p) {
  const int e = static_cast<int>(m.size()) - 1;
  for (int d = 1; d <= e / 2; ++d) {
    long count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (long c = 0; c < count; ++c) {
      Poly f = digits(static_cast<std::uint32_t>(c), p, d);
      f.push_back(1);
      if (poly_mod(m, f, p) == Poly(d, 0)) return false;
    }
  }
  return true;
}

Poly find_irreducible(int p, int e) {
  long count = 1;
  for (int i = 0; i < e; ++i) count *= p;
  for (long c = 0; c < count; ++c) {
    Poly m = digits(static_cast<std::uint32_t>(c), p, e);
    m.push_back(1);
    if (e > 1 && m[0] == 0) continue;
    if (has_no_roots_or_factors(m, p)) return m;
  }
  throw std::logic_error("no irreducible polynomial found");
}

} // namespace

FiniteField::FiniteField(int p, int e) : p_(p), e_(e), q_(1) {
  for (int i = 0; i < e; ++i) q_ *= p;
  modulus_ = find_irreducible(p, e);
  add_.resize(static_cast<std::size_t>(q_) * q_);
  mul_.resize(static_cast<std::size_t>(q_) * q_);
  neg_.resize(q_);
  inv_.assign(q_, 0);
  for (int a = 0; a < q_; ++a) {
    const Poly da = digits(a, p, e);
    Poly na(e);
    for (int i = 0; i < e; ++i) na[i] = (p - da[i]) % p;
    neg_[a] = undigits(na, p);
    for (int b = 0; b < q_; ++b) {
      const Poly db = digits(b, p, e);
      Poly s(e);
      for (int i = 0; i < e; ++i) s[i] = (da[i] + db[i]) % p;
      add_[a * q_ + b] = undigits(s, p);
      Poly prod(2 * e - 1, 0);
      for (int i = 0; i < e; ++i)
        for (int j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
      mul_[a * q_ + b] = undigits(poly_mod(prod, modulus_, p), p);
    }
  }
  for (int a = 1; a < q_; ++a)
    for (int b = 1; b < q_; ++b)
      if (mul_[a * q_ + b] == 1) {
        inv_[a] = b;
        break;
      }
}

const FiniteField &FiniteField::get(int p, int e) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime: " + std::to_string(p));
  if (e < 1) throw std::invalid_argument("field degree must be positive");
  long q = 1;
  for (int i = 0; i < e; ++i) q *= p;
  if (q > 256) throw std::invalid_argument("field too large (q <= 256): " + std::to_string(q));
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::unique_ptr<FiniteField>> fields;
  std::lock_guard lock(mutex);
  auto &slot = fields[{p, e}];
  if (!slot) slot.reset(new FiniteField(p, e));
  return *slot;
}

std::uint32_t FiniteField::inv(std::uint32_t a) const {
  if (a == 0) throw std::domain_error("division by zero in finite field");
  return inv_[a];
}

std::uint32_t FiniteField::from_integer(std::int64_t n) const {
  return static_cast<std::uint32_t>(((n % p_) + p_) % p_);
}

std::string FiniteField::element_string(std::uint32_t a) const {
  if (e_ == 1) return std::to_string(a);
  const Poly d = digits(a, p_, e_);
  std::string out;
  for (int i = e_ - 1; i >= 0; --i) {
    if (d[i] == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0 || d[i] != 1) out += std::to_string(d[i]);
    if (i >= 1) out += (d[i] != 1 ? "*z" : "z");
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

const FiniteField *GF::common(const GF &a, const GF &b) {
  if (a.field_ && b.field_ && a.field_ != b.field_)
    throw mixed_rings_error("finite field elements from different fields");
  return a.field_ ? a.field_ : b.field_;
}

GF &GF::operator+=(const GF &o) {
  if (const FiniteField *f = common(*this, o)) {
    value_ = f->add(in(*f), o.in(*f));
    field_ = f;
  } else {
    literal_ += o.literal_;
  }
  return *this;
}

GF &GF::operator-=(const GF &o) { return *this += -o; }

GF &GF::operator*=(const GF &o) {
  if (const FiniteField *f = common(*this, o)) {
    value_ = f->mul(in(*f), o.in(*f));
    field_ = f;
  } else {
    literal_ *= o.literal_;
  }
  return *this;
}

GF &GF::operator/=(const GF &o) {
  if (const FiniteField *f = common(*this, o)) {
    value_ = f->mul(in(*f), f->inv(o.in(*f)));
    field_ = f;
  } else {
    if (o.literal_ == 0 || literal_ % o.literal_ != 0)
      throw std::domain_error("inexact division of field literals");
    literal_ /= o.literal_;
  }
  return *this;
}

GF GF::operator-() const {
  GF r = *this;
  if (field_)
    r.value_ = field_->neg(value_);
  else
    r.literal_ = -literal_;
  return r;
}

bool operator==(const GF &a, const GF &b) {
  if (const FiniteField *f = GF::common(a, b)) return a.in(*f) == b.in(*f);
  return a.literal_ == b.literal_;
}

std::ostream &operator<<(std::ostream &os, const GF &a) { return os << to_string(a); }

std::string to_string(const Rational &r) {
  std::ostringstream os;
  os << numerator(r);
  if (denominator(r) != 1) os << "/" << denominator(r);
  return os.str();
}

std::string to_string(const GF &a) {
  if (a.is_literal()) {
    return std::to_string(a.literal());
  }
  return a.field()->element_string(a.value());
}

Rational parse_rational(const std::string &text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(text));
    const Integer den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(Integer(text.substr(0, slash)), den);
  } catch (const std::runtime_error &) {
    throw std::invalid_argument("malformed rational: " + text);
  }
}

CoefficientRing CoefficientRing::parse(const std::string &text) {
  auto number = [&](const std::string &s) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(s, &used);
    } catch (const std::exception &) {
      used = 0;
    }
    if (used != s.size() || s.empty()) throw std::invalid_argument("malformed coefficient tag: " + text);
    return v;
  };
  if (text == "Z") return integers();
  if (text == "Q") return rationals();
  if (text.rfind("Zp:", 0) == 0) {
    const int p = number(text.substr(3));
    if (!is_prime(p)) throw std::invalid_argument("Zp needs a prime: " + text);
    return p_local(p);
  }
  if (text.rfind("Fp:", 0) == 0) {
    const std::string rest = text.substr(3);
    const auto colon = rest.find(':');
    const int p = number(rest.substr(0, colon));
    const int e = colon == std::string::npos ? 1 : number(rest.substr(colon + 1));
    if (!is_prime(p) || e < 1) throw std::invalid_argument("malformed field tag: " + text);
    return prime_field(p, e);
  }
  throw std::invalid_argument("unknown coefficient tag: " + text);
}

std::string CoefficientRing::name() const {
  switch (kind) {
  case RingKind::Integer: return "Z";
  case RingKind::Rational: return "Q";
  case RingKind::PLocal: return "Zp:" + std::to_string(prime);
  case RingKind::PrimeField:
    return "Fp:" + std::to_string(prime) + (exponent == 1 ? "" : ":" + std::to_string(exponent));
  }
  return "?";
}

bool belongs_to(const Rational &r, const CoefficientRing &ring) {
  switch (ring.kind) {
  case RingKind::Integer: return denominator(r) == 1;
  case RingKind::Rational: return true;
  case RingKind::PLocal: return denominator(r) % ring.prime != 0;
  case RingKind::PrimeField: return denominator(r) % ring.prime != 0;
  }
  return false;
}

GF reduce(const Rational &r, const FiniteField &field) {
  const int p = field.characteristic();
  const Integer den = denominator(r);
  if (den % p == 0) throw std::domain_error("denominator divisible by " + std::to_string(p));
  const Integer num = numerator(r);
  const auto n = static_cast<std::int64_t>(((num % p) + p) % p);
  const auto d = static_cast<std::int64_t>(den % p);
  return GF::from_integer(field, n) / GF::from_integer(field, d);
}

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<int> prime_divisors(std::uint64_t n) {
  std::vector<int> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(static_cast<int>(d));
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(static_cast<int>(n));
  return out;
}

} // namespace motive
