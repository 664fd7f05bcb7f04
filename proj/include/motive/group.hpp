#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace motive {

/// Bijection of {0, ..., n-1}; the product p * q applies q first.
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(std::vector<std::uint16_t> images);

  static Permutation identity(int degree);
  /// Cycle notation with 1-based points, e.g. "(1 2)(3 4)" or "(1,2,3)"; "()" is the identity.
  static Permutation parse_cycles(const std::string &text, int degree);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int point) const { return images_[point]; }
  const std::vector<std::uint16_t> &images() const { return images_; }

  Permutation operator*(const Permutation &other) const;
  Permutation inverse() const;
  bool is_identity() const;
  /// 1-based cycle notation, "()" for the identity.
  std::string cycle_string() const;

  auto operator<=>(const Permutation &) const = default;

private:
  std::vector<std::uint16_t> images_;
};

struct group_too_large : std::runtime_error {
  group_too_large(const std::string &bound, std::uint64_t limit, std::uint64_t actual)
      : std::runtime_error(bound + " exceeded: " + std::to_string(actual) + " > " +
                           std::to_string(limit)),
        bound_name(bound) {}
  std::string bound_name;
};

/// Safety bounds. The group-order bound may be overridden by MOTIVE_RING_MAX_ORDER.
struct GroupLimits {
  int max_degree = 16;
  std::uint64_t max_order = 200;

  static GroupLimits from_environment();
};

/// Finite permutation group. The order is known right away (Schreier-Sims); the
/// element table is materialized on first use and shared between copies.
class FiniteGroup {
public:
  FiniteGroup(int degree, std::vector<Permutation> generators, GroupLimits limits = {});

  /// Named family or explicit generators:
  ///   sym:N | alt:N | cyclic:N | dihedral:N | gens:"<cycles>;<cycles>;..."
  static FiniteGroup parse(const std::string &spec, GroupLimits limits = GroupLimits::from_environment());
  static FiniteGroup symmetric(int n, GroupLimits limits = {});
  static FiniteGroup alternating(int n, GroupLimits limits = {});
  static FiniteGroup cyclic(int n, GroupLimits limits = {});
  /// Dihedral group of order 2n acting on n points.
  static FiniteGroup dihedral(int n, GroupLimits limits = {});

  int degree() const { return degree_; }
  const std::vector<Permutation> &generators() const { return generators_; }
  std::uint64_t order() const { return order_; }
  const GroupLimits &limits() const { return limits_; }

  /// Number of materialized elements; throws group_too_large past the order bound.
  int size() const { return static_cast<int>(table().elements.size()); }
  const Permutation &element(int i) const { return table().elements[i]; }
  int index_of(const Permutation &p) const;
  int identity() const { return 0; }
  int mul(int a, int b) const { return table().mul[static_cast<std::size_t>(a) * size() + b]; }
  int inv(int a) const { return table().inv[a]; }
  /// g a g^-1
  int conj(int g, int a) const { return mul(mul(g, a), inv(g)); }
  int element_order(int a) const { return table().orders[a]; }
  const std::vector<int> &generator_indices() const { return table().generators; }
  std::string element_string(int i) const { return element(i).cycle_string(); }

private:
  struct Table {
    std::vector<Permutation> elements; // lexicographic, identity first
    std::vector<int> mul;
    std::vector<int> inv;
    std::vector<int> orders;
    std::vector<int> generators;
  };
  struct Lazy;

  const Table &table() const;

  int degree_;
  std::vector<Permutation> generators_;
  std::uint64_t order_;
  GroupLimits limits_;
  std::shared_ptr<Lazy> lazy_;
};

/// Subset of a group's element indices stored as a bitset.
class ElementSet {
public:
  ElementSet() = default;
  explicit ElementSet(int universe) : size_(universe), words_((universe + 63) / 64, 0) {}

  int universe() const { return size_; }
  bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(int i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  int count() const;
  std::vector<int> indices() const;
  ElementSet operator&(const ElementSet &o) const;
  bool is_subset_of(const ElementSet &o) const;
  std::size_t hash() const;

  bool operator==(const ElementSet &o) const { return words_ == o.words_; }

private:
  int size_ = 0;
  std::vector<std::uint64_t> words_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet &s) const { return s.hash(); }
};

/// Subgroup of a FiniteGroup as a set of element indices.
class Subgroup {
public:
  Subgroup() = default;
  explicit Subgroup(ElementSet members);

  const ElementSet &members() const { return members_; }
  /// Sorted element indices; this is also the canonical key.
  const std::vector<int> &elements() const { return elements_; }
  int order() const { return static_cast<int>(elements_.size()); }
  bool contains(int g) const { return members_.test(g); }
  bool is_subgroup_of(const Subgroup &o) const { return members_.is_subset_of(o.members_); }
  bool operator==(const Subgroup &o) const { return members_ == o.members_; }

private:
  ElementSet members_;
  std::vector<int> elements_;
};

/// Lexicographic comparison of canonical keys.
bool key_less(const Subgroup &a, const Subgroup &b);

Subgroup generate(const FiniteGroup &g, std::span<const int> generators);
Subgroup trivial_subgroup(const FiniteGroup &g);
Subgroup whole_group(const FiniteGroup &g);
/// Smallest subgroup containing h and x.
Subgroup join(const FiniteGroup &g, const Subgroup &h, int x);
/// x H x^-1
Subgroup conjugate(const FiniteGroup &g, const Subgroup &h, int x);
Subgroup intersection(const Subgroup &a, const Subgroup &b);
/// Short generating list, greedy over the element order.
std::vector<int> generating_set(const FiniteGroup &g, const Subgroup &h);
Subgroup centralizer(const FiniteGroup &g, const Subgroup &h);
Subgroup normalizer(const FiniteGroup &g, const Subgroup &h);
/// True when n is a normal subgroup of h.
bool is_normal_in(const FiniteGroup &g, const Subgroup &n, const Subgroup &h);
bool is_abelian(const FiniteGroup &g, const Subgroup &h);
Subgroup derived_subgroup(const FiniteGroup &g, const Subgroup &h);

} // namespace motive
