#include "motive/center.hpp"

#include <algorithm>
#include <numeric>

namespace motive {

CenterAlgebra::CenterAlgebra(FiniteGroup g) : group_(std::move(g)) {
  classes_ = conjugacy_classes(group_);
  class_of_.assign(group_.size(), -1);
  for (int c = 0; c < dimension(); ++c)
    for (int x : classes_[c]) class_of_[x] = c;
  structure_ = StructureConstants(dimension());
  // C_i C_j = sum_k #{x in C_i : x^-1 z_k in C_j} C_k for a fixed z_k in C_k
  for (int i = 0; i < dimension(); ++i)
    for (int j = 0; j < dimension(); ++j) {
      std::vector<StructureConstants::Term> terms;
      for (int k = 0; k < dimension(); ++k) {
        const int z = classes_[k].front();
        long count = 0;
        for (int x : classes_[i])
          if (class_of_[group_.mul(group_.inv(x), z)] == j) ++count;
        if (count) terms.emplace_back(k, count);
      }
      structure_.set_product(i, j, std::move(terms));
    }
}

namespace {

using Element = CenterElement<GF>;

Vector<GF> power(const CenterAlgebra &z, const Vector<GF> &x, long n, const CoefficientRing &ring) {
  Vector<GF> result = z.one<GF>(ring).coordinates;
  Vector<GF> base = x;
  while (n > 0) {
    if (n & 1) result = z.structure().multiply(result, base, ring);
    base = z.structure().multiply(base, base, ring);
    n >>= 1;
  }
  return result;
}

/// Matrix whose column j is the image of class sum j under x -> x^n.
Matrix<GF> power_map(const CenterAlgebra &z, long n, const CoefficientRing &ring) {
  Matrix<GF> m(z.dimension(), z.dimension());
  for (int j = 0; j < z.dimension(); ++j) m.col(j) = power(z, z.class_sum<GF>(j, ring).coordinates, n, ring);
  return m;
}

/// Rank of multiplication by x on f A.
Eigen::Index rank_on(const CenterAlgebra &z, const Vector<GF> &x, const Vector<GF> &f, const CoefficientRing &ring) {
  const auto &s = z.structure();
  return rank(s.left_multiplication(x, ring) * s.left_multiplication(f, ring));
}

bool less_by_values(const Element &a, const Element &b) {
  for (Eigen::Index i = 0; i < a.coordinates.size(); ++i)
    if (a.coordinates[i].value() != b.coordinates[i].value())
      return a.coordinates[i].value() > b.coordinates[i].value();
  return false;
}

/// Primitive idempotents of Z F_q G, q = field order, via the Frobenius-fixed subalgebra.
std::vector<Element> split(const CenterAlgebra &z, const CoefficientRing &ring) {
  const FiniteField &field = ring.field();
  const int q = field.order();
  const auto &s = z.structure();
  const GF zero = GF(field, 0), one = GF(field, 1);
  // every element of B = ker(x -> x^q - x) is a F_q-combination of primitive idempotents
  Matrix<GF> frob = power_map(z, q, ring);
  for (int i = 0; i < z.dimension(); ++i) frob(i, i) -= one;
  const Matrix<GF> basis = nullspace(frob, zero, one);
  const Eigen::Index target = basis.cols();

  std::vector<Vector<GF>> idempotents{z.one<GF>(ring).coordinates};
  for (Eigen::Index col = 0; col < basis.cols() && static_cast<Eigen::Index>(idempotents.size()) < target; ++col) {
    std::vector<Vector<GF>> next;
    for (const auto &f : idempotents) {
      const Vector<GF> y = s.multiply(f, Vector<GF>(basis.col(col)), ring);
      const Eigen::Index full = rank_on(z, f, f, ring);
      std::vector<GF> roots;
      for (int v = 0; v < q; ++v) {
        const GF lambda(field, static_cast<std::uint32_t>(v));
        if (rank_on(z, y - f * lambda, f, ring) < full) roots.push_back(lambda);
      }
      if (roots.size() <= 1) {
        next.push_back(f);
        continue;
      }
      for (std::size_t i = 0; i < roots.size(); ++i) {
        Vector<GF> e = f;
        for (std::size_t j = 0; j < roots.size(); ++j) {
          if (i == j) continue;
          e = s.multiply(e, Vector<GF>((y - f * roots[j]) / (roots[i] - roots[j])), ring);
        }
        next.push_back(std::move(e));
      }
    }
    idempotents = std::move(next);
  }
  if (static_cast<Eigen::Index>(idempotents.size()) != target)
    throw std::logic_error("block decomposition did not separate the Frobenius-fixed subalgebra");
  std::vector<Element> out;
  for (auto &f : idempotents) out.push_back({ring, std::move(f)});
  std::sort(out.begin(), out.end(), less_by_values);
  return out;
}

} // namespace

int splitting_exponent(const CenterAlgebra &z, int p) {
  const CoefficientRing ring = CoefficientRing::prime_field(p);
  const auto &s = z.structure();
  // x -> x^(p^m) kills the radical once p^m exceeds the dimension; its image is A / rad A
  long pm = p;
  while (pm <= z.dimension()) pm *= p;
  const Matrix<GF> semisimple = power_map(z, pm, ring);
  int e = 1;
  for (const auto &f : split(z, ring)) {
    const int degree = static_cast<int>(rank(s.left_multiplication(f.coordinates, ring) * semisimple));
    e = std::lcm(e, degree);
  }
  return e;
}

std::vector<CenterElement<GF>> blocks_mod_p(const CenterAlgebra &z, int p, std::optional<int> e) {
  if (!is_prime(p)) throw std::invalid_argument("not a prime: " + std::to_string(p));
  const int exponent = e ? *e : splitting_exponent(z, p);
  std::uint64_t q = 1;
  for (int i = 0; i < exponent; ++i) q *= static_cast<std::uint64_t>(p);
  if (exponent < 1 || q > 256) throw group_too_large("field bound", 256, q);
  return split(z, CoefficientRing::prime_field(p, exponent));
}

std::vector<CenterElement<GF>> idempotents_by_scan(const CenterAlgebra &z, const CoefficientRing &ring) {
  const FiniteField &field = ring.field();
  const int q = field.order();
  std::uint64_t total = 1;
  for (int i = 0; i < z.dimension(); ++i) {
    total *= static_cast<std::uint64_t>(q);
    if (total > (1u << 20)) throw group_too_large("scan bound", 1u << 20, total);
  }
  std::vector<Vector<GF>> found;
  for (std::uint64_t code = 1; code < total; ++code) {
    Vector<GF> x(z.dimension());
    std::uint64_t c = code;
    for (int i = 0; i < z.dimension(); ++i, c /= q) x[i] = GF(field, static_cast<std::uint32_t>(c % q));
    if (z.structure().multiply(x, x, ring) == x) found.push_back(std::move(x));
  }
  std::vector<Element> out;
  for (const auto &e : found) {
    bool minimal = true;
    for (const auto &f : found)
      if (!(f == e) && z.structure().multiply(e, f, ring) == f) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back({ring, e});
  }
  std::sort(out.begin(), out.end(), less_by_values);
  return out;
}

} // namespace motive
