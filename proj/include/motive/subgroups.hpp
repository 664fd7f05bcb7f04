#pragma once

#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "motive/group.hpp"

namespace motive {

/// Which residual: the last term of the derived series, or O^p for a prime p.
struct ResidualMode {
  int prime = 0; // 0 selects the solvable residual

  static ResidualMode solvable() { return {0}; }
  static ResidualMode p(int prime) { return {prime}; }
  bool is_solvable() const { return prime == 0; }
};

/// Solvable residual H^inf, or O^p(H): smallest normal subgroup with soluble (resp. p-group) quotient.
Subgroup residual(const FiniteGroup &g, const Subgroup &h, ResidualMode mode);

struct SubgroupClass {
  Subgroup representative;
  Subgroup centralizer;
  Subgroup normalizer;
  int solvable_residual = 0;
  /// prime -> class index of O^p(representative), for every prime dividing |G|
  std::map<int, int> p_residuals;
  /// isomorphism-type hint plus running index, e.g. "C2#1"
  std::string name;
  std::string type_hint;
};

/// Conjugacy classes of subgroups ordered by (order, canonical key) with fusion.
class SubgroupClassTable {
public:
  struct Fusion {
    int index = -1;
    /// c with c H c^-1 equal to the class representative
    int conjugator = 0;
  };

  /// Throws group_too_large("lattice bound", ...) when |G| exceeds max_order.
  static SubgroupClassTable compute(const FiniteGroup &g);

  const FiniteGroup &group() const { return group_; }
  const std::vector<SubgroupClass> &classes() const { return classes_; }
  const SubgroupClass &operator[](int i) const { return classes_[i]; }
  int size() const { return static_cast<int>(classes_.size()); }

  Fusion fuse(const Subgroup &h) const;
  /// Every subgroup of G, grouped by class and then by canonical key.
  const std::vector<Subgroup> &all_subgroups() const { return all_; }
  /// Class index of each entry of all_subgroups().
  int class_of_subgroup(int subgroup_index) const { return all_class_[subgroup_index]; }
  int subgroup_index(const Subgroup &h) const;

  /// True when a conjugate of class i is contained in class j's representative.
  bool subconjugate(int i, int j) const;
  int residual_class(int i, ResidualMode mode) const;
  /// Classes J whose representative equals its own residual, in class order.
  std::vector<int> residual_fixed_classes(ResidualMode mode) const;
  int class_by_name(const std::string &name) const;

private:
  explicit SubgroupClassTable(FiniteGroup g) : group_(std::move(g)) {}

  FiniteGroup group_;
  std::vector<SubgroupClass> classes_;
  std::vector<Subgroup> all_;
  std::vector<int> all_class_;
  std::unordered_map<ElementSet, Fusion, ElementSetHash> fusion_;
  std::unordered_map<ElementSet, int, ElementSetHash> all_index_;
};

/// All subgroups of a small group by exhaustive closure of joins; no conjugacy data.
/// Test oracle for the class table.
std::vector<Subgroup> all_subgroups_by_closure(const FiniteGroup &g);

/// Left cosets xK, each represented by its smallest element index.
struct CosetSpace {
  std::vector<int> representatives;
  std::vector<int> coset_of; // element index -> coset number
  int size() const { return static_cast<int>(representatives.size()); }
};

CosetSpace left_cosets(const FiniteGroup &g, const Subgroup &k);

struct CosetGeometry {
  /// smallest element of each double coset H g K, in increasing order
  std::vector<int> double_coset_representatives;
  std::vector<int> double_coset_sizes;
  /// cosets gK (by representative) with H <= g K g^-1
  std::vector<int> fixed_cosets;
};

CosetGeometry coset_geometry(const FiniteGroup &g, const Subgroup &h, const Subgroup &k);

struct not_normal_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// N/J realised by left multiplication on the cosets of J in N.
struct QuotientGroup {
  FiniteGroup group;
  /// element index of G -> element index of the quotient, -1 outside N
  std::vector<int> projection;
};

QuotientGroup quotient_group(const FiniteGroup &g, const Subgroup &n, const Subgroup &j);

/// Conjugacy classes of elements: identity class first, then by smallest member.
std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup &g);

} // namespace motive
