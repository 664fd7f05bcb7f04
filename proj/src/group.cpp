#include "motive/group.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cstdlib>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <unordered_set>

namespace motive {

namespace {

struct ImagesHash {
  std::size_t operator()(const std::vector<std::uint16_t> &v) const {
    std::size_t h = 1469598103934665603ull;
    for (auto x : v) h = (h ^ x) * 1099511628211ull;
    return h;
  }
};

// Knuth's incremental Schreier-Sims: level k holds coset representatives of the
// pointwise stabilizer of {k+1, ..., n-1} modulo the stabilizer of {k, ..., n-1}.
class StabilizerChain {
public:
  explicit StabilizerChain(int n) : n_(n), gens_(n), table_(n, std::vector<std::optional<Permutation>>(n)) {
    for (int k = 0; k < n; ++k) table_[k][k] = Permutation::identity(n);
  }

  void add_generator(const Permutation &g) {
    if (n_ > 0) add(n_ - 1, g);
  }

  std::uint64_t order() const {
    std::uint64_t o = 1;
    for (const auto &level : table_)
      o *= static_cast<std::uint64_t>(std::count_if(level.begin(), level.end(), [](const auto &x) { return x.has_value(); }));
    return o;
  }

private:
  bool member(int k, Permutation g) const {
    for (int i = k; i >= 0; --i) {
      const int j = g(i);
      if (!table_[i][j]) return false;
      g = table_[i][j]->inverse() * g;
    }
    return g.is_identity();
  }

  void add(int k, const Permutation &g) {
    if (k < 0 || member(k, g)) return;
    gens_[k].push_back(g);
    std::vector<Permutation> existing;
    for (const auto &t : table_[k])
      if (t) existing.push_back(*t);
    for (const auto &t : existing) extend(k, g * t);
  }

  void extend(int k, const Permutation &t) {
    const int j = t(k);
    if (!table_[k][j]) {
      table_[k][j] = t;
      const auto gens = gens_[k];
      for (const auto &g : gens) extend(k, g * t);
    } else {
      add(k - 1, table_[k][j]->inverse() * t);
    }
  }

  int n_;
  std::vector<std::vector<Permutation>> gens_;
  std::vector<std::vector<std::optional<Permutation>>> table_;
};

std::uint64_t env_order_bound(std::uint64_t fallback) {
  if (const char *v = std::getenv("MOTIVE_RING_MAX_ORDER")) {
    char *end = nullptr;
    const unsigned long long x = std::strtoull(v, &end, 10);
    if (end && *end == '\0' && x > 0) return x;
  }
  return fallback;
}

int parse_positive(const std::string &text, const std::string &spec) {
  if (text.empty() || !std::all_of(text.begin(), text.end(), [](unsigned char c) { return std::isdigit(c); }))
    throw std::invalid_argument("malformed group specification: " + spec);
  return std::stoi(text);
}

} // namespace

Permutation::Permutation(std::vector<std::uint16_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (auto x : images_) {
    if (x >= images_.size() || seen[x]) throw std::invalid_argument("not a permutation");
    seen[x] = true;
  }
}

Permutation Permutation::identity(int degree) {
  std::vector<std::uint16_t> im(degree);
  for (int i = 0; i < degree; ++i) im[i] = static_cast<std::uint16_t>(i);
  Permutation p;
  p.images_ = std::move(im);
  return p;
}

Permutation Permutation::parse_cycles(const std::string &text, int degree) {
  std::vector<std::uint16_t> im(degree);
  for (int i = 0; i < degree; ++i) im[i] = static_cast<std::uint16_t>(i);
  std::vector<bool> used(degree, false);
  std::size_t pos = 0;
  auto fail = [&](const std::string &why) {
    throw std::invalid_argument("malformed cycle notation (" + why + "): " + text);
  };
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_space();
  while (pos < text.size()) {
    if (text[pos] != '(') fail("expected '('");
    ++pos;
    std::vector<int> cycle;
    while (true) {
      skip_space();
      if (pos >= text.size()) fail("unterminated cycle");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (text[pos] == ',') {
        ++pos;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[pos]))) fail("unexpected character");
      int v = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) v = v * 10 + (text[pos++] - '0');
      if (v < 1 || v > degree) fail("point out of range");
      if (used[v - 1]) fail("point repeated");
      used[v - 1] = true;
      cycle.push_back(v - 1);
    }
    for (std::size_t i = 0; i < cycle.size(); ++i)
      im[cycle[i]] = static_cast<std::uint16_t>(cycle[(i + 1) % cycle.size()]);
    skip_space();
  }
  return Permutation(std::move(im));
}

Permutation Permutation::operator*(const Permutation &other) const {
  std::vector<std::uint16_t> im(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) im[i] = images_[other.images_[i]];
  Permutation p;
  p.images_ = std::move(im);
  return p;
}

Permutation Permutation::inverse() const {
  std::vector<std::uint16_t> im(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) im[images_[i]] = static_cast<std::uint16_t>(i);
  Permutation p;
  p.images_ = std::move(im);
  return p;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

std::string Permutation::cycle_string() const {
  std::string out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    out += "(";
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) out += ",";
      out += std::to_string(j + 1);
      first = false;
      j = images_[j];
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

GroupLimits GroupLimits::from_environment() {
  GroupLimits l;
  l.max_order = env_order_bound(l.max_order);
  return l;
}

struct FiniteGroup::Lazy {
  std::once_flag once;
  Table table;
};

FiniteGroup::FiniteGroup(int degree, std::vector<Permutation> generators, GroupLimits limits)
    : degree_(degree), generators_(std::move(generators)), limits_(limits), lazy_(std::make_shared<Lazy>()) {
  if (degree_ < 1) throw std::invalid_argument("group degree must be positive");
  if (degree_ > limits_.max_degree)
    throw group_too_large("degree bound", static_cast<std::uint64_t>(limits_.max_degree), static_cast<std::uint64_t>(degree_));
  StabilizerChain chain(degree_);
  for (const auto &g : generators_) {
    if (g.degree() != degree_) throw std::invalid_argument("generator degree mismatch");
    chain.add_generator(g);
  }
  order_ = chain.order();
}

const FiniteGroup::Table &FiniteGroup::table() const {
  std::call_once(lazy_->once, [this] {
    if (order_ > limits_.max_order) throw group_too_large("group order bound", limits_.max_order, order_);
    Table &t = lazy_->table;
    std::unordered_set<std::vector<std::uint16_t>, ImagesHash> seen;
    std::vector<Permutation> frontier{Permutation::identity(degree_)};
    seen.insert(frontier[0].images());
    t.elements = frontier;
    while (!frontier.empty()) {
      std::vector<Permutation> next;
      for (const auto &x : frontier)
        for (const auto &g : generators_) {
          Permutation y = g * x;
          if (seen.insert(y.images()).second) {
            next.push_back(y);
            t.elements.push_back(std::move(y));
          }
        }
      frontier = std::move(next);
    }
    std::sort(t.elements.begin(), t.elements.end());
    const int n = static_cast<int>(t.elements.size());
    std::unordered_map<std::vector<std::uint16_t>, int, ImagesHash> index;
    for (int i = 0; i < n; ++i) index.emplace(t.elements[i].images(), i);
    t.mul.resize(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) t.mul[static_cast<std::size_t>(a) * n + b] = index.at((t.elements[a] * t.elements[b]).images());
    t.inv.resize(n);
    for (int a = 0; a < n; ++a) t.inv[a] = index.at(t.elements[a].inverse().images());
    t.orders.resize(n);
    for (int a = 0; a < n; ++a) {
      int k = 1, x = a;
      while (x != 0) {
        x = t.mul[static_cast<std::size_t>(x) * n + a];
        ++k;
      }
      t.orders[a] = k;
    }
    for (const auto &g : generators_) t.generators.push_back(index.at(g.images()));
  });
  return lazy_->table;
}

int FiniteGroup::index_of(const Permutation &p) const {
  const auto &els = table().elements;
  auto it = std::lower_bound(els.begin(), els.end(), p);
  if (it == els.end() || *it != p) throw std::invalid_argument("permutation is not in the group");
  return static_cast<int>(it - els.begin());
}

FiniteGroup FiniteGroup::parse(const std::string &spec, GroupLimits limits) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("malformed group specification: " + spec);
  const std::string family = spec.substr(0, colon);
  std::string arg = spec.substr(colon + 1);
  if (family == "sym") return symmetric(parse_positive(arg, spec), limits);
  if (family == "alt") return alternating(parse_positive(arg, spec), limits);
  if (family == "cyclic") return cyclic(parse_positive(arg, spec), limits);
  if (family == "dihedral") return dihedral(parse_positive(arg, spec), limits);
  if (family != "gens") throw std::invalid_argument("unknown group family: " + family);
  if (arg.size() >= 2 && arg.front() == '"' && arg.back() == '"') arg = arg.substr(1, arg.size() - 2);
  // generators are separated by ';' or by ',' outside parentheses
  std::vector<std::string> pieces;
  std::string cur;
  int depth = 0;
  for (char c : arg) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (depth < 0 || depth > 1) throw std::invalid_argument("malformed cycle notation: " + arg);
    if ((c == ';' || c == ',') && depth == 0) {
      pieces.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (depth != 0) throw std::invalid_argument("malformed cycle notation: " + arg);
  pieces.push_back(cur);
  int degree = 1;
  for (const auto &piece : pieces) {
    int v = 0;
    bool in_number = false;
    for (char c : piece) {
      if (std::isdigit(static_cast<unsigned char>(c))) {
        v = in_number ? v * 10 + (c - '0') : c - '0';
        in_number = true;
        if (v > 1000000) throw group_too_large("degree bound", limits.max_degree, v);
        degree = std::max(degree, v);
      } else {
        in_number = false;
      }
    }
  }
  if (degree > limits.max_degree) throw group_too_large("degree bound", limits.max_degree, degree);
  std::vector<Permutation> gens;
  for (const auto &piece : pieces) {
    if (std::all_of(piece.begin(), piece.end(), [](unsigned char c) { return std::isspace(c); }))
      throw std::invalid_argument("empty generator in: " + arg);
    gens.push_back(Permutation::parse_cycles(piece, degree));
  }
  return FiniteGroup(degree, std::move(gens), limits);
}

FiniteGroup FiniteGroup::symmetric(int n, GroupLimits limits) {
  if (n < 1) throw std::invalid_argument("sym:N needs N >= 1");
  std::vector<Permutation> gens;
  if (n >= 2) {
    gens.push_back(Permutation::parse_cycles("(1 2)", n));
    if (n >= 3) {
      std::string c = "(";
      for (int i = 1; i <= n; ++i) c += std::to_string(i) + (i < n ? " " : ")");
      gens.push_back(Permutation::parse_cycles(c, n));
    }
  }
  return FiniteGroup(n, std::move(gens), limits);
}

FiniteGroup FiniteGroup::alternating(int n, GroupLimits limits) {
  if (n < 1) throw std::invalid_argument("alt:N needs N >= 1");
  std::vector<Permutation> gens;
  for (int i = 3; i <= n; ++i) gens.push_back(Permutation::parse_cycles("(1 2 " + std::to_string(i) + ")", n));
  return FiniteGroup(n, std::move(gens), limits);
}

FiniteGroup FiniteGroup::cyclic(int n, GroupLimits limits) {
  if (n < 1) throw std::invalid_argument("cyclic:N needs N >= 1");
  std::vector<Permutation> gens;
  if (n >= 2) {
    std::string c = "(";
    for (int i = 1; i <= n; ++i) c += std::to_string(i) + (i < n ? " " : ")");
    gens.push_back(Permutation::parse_cycles(c, n));
  }
  return FiniteGroup(n, std::move(gens), limits);
}

FiniteGroup FiniteGroup::dihedral(int n, GroupLimits limits) {
  if (n < 3) throw std::invalid_argument("dihedral:N needs N >= 3 (order 2N on N points)");
  std::vector<std::uint16_t> rot(n), refl(n);
  for (int i = 0; i < n; ++i) {
    rot[i] = static_cast<std::uint16_t>((i + 1) % n);
    refl[i] = static_cast<std::uint16_t>((n - i) % n);
  }
  return FiniteGroup(n, {Permutation(rot), Permutation(refl)}, limits);
}

int ElementSet::count() const {
  int c = 0;
  for (auto w : words_) c += std::popcount(w);
  return c;
}

std::vector<int> ElementSet::indices() const {
  std::vector<int> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t x = words_[w];
    while (x) {
      out.push_back(static_cast<int>(w * 64 + std::countr_zero(x)));
      x &= x - 1;
    }
  }
  return out;
}

ElementSet ElementSet::operator&(const ElementSet &o) const {
  ElementSet r = *this;
  for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= o.words_[i];
  return r;
}

bool ElementSet::is_subset_of(const ElementSet &o) const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~o.words_[i]) return false;
  return true;
}

std::size_t ElementSet::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (auto w : words_) h = (h ^ w) * 1099511628211ull + (h >> 29);
  return h;
}

Subgroup::Subgroup(ElementSet members) : members_(std::move(members)), elements_(members_.indices()) {}

bool key_less(const Subgroup &a, const Subgroup &b) { return a.elements() < b.elements(); }

Subgroup generate(const FiniteGroup &g, std::span<const int> generators) {
  ElementSet set(g.size());
  std::vector<int> elems{g.identity()};
  set.set(g.identity());
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (int s : generators) {
      const int y = g.mul(s, elems[i]);
      if (!set.test(y)) {
        set.set(y);
        elems.push_back(y);
      }
    }
  return Subgroup(std::move(set));
}

Subgroup trivial_subgroup(const FiniteGroup &g) { return generate(g, {}); }

Subgroup whole_group(const FiniteGroup &g) {
  ElementSet set(g.size());
  for (int i = 0; i < g.size(); ++i) set.set(i);
  return Subgroup(std::move(set));
}

Subgroup join(const FiniteGroup &g, const Subgroup &h, int x) {
  if (h.contains(x)) return h;
  std::vector<int> gens = generating_set(g, h);
  gens.push_back(x);
  return generate(g, gens);
}

Subgroup conjugate(const FiniteGroup &g, const Subgroup &h, int x) {
  ElementSet set(g.size());
  for (int e : h.elements()) set.set(g.conj(x, e));
  return Subgroup(std::move(set));
}

Subgroup intersection(const Subgroup &a, const Subgroup &b) { return Subgroup(a.members() & b.members()); }

std::vector<int> generating_set(const FiniteGroup &g, const Subgroup &h) {
  std::vector<int> gens;
  Subgroup cur = trivial_subgroup(g);
  for (int e : h.elements()) {
    if (cur.contains(e)) continue;
    gens.push_back(e);
    cur = generate(g, gens);
    if (cur.order() == h.order()) break;
  }
  return gens;
}

Subgroup centralizer(const FiniteGroup &g, const Subgroup &h) {
  const auto gens = generating_set(g, h);
  ElementSet set(g.size());
  for (int x = 0; x < g.size(); ++x)
    if (std::all_of(gens.begin(), gens.end(), [&](int s) { return g.mul(x, s) == g.mul(s, x); })) set.set(x);
  return Subgroup(std::move(set));
}

Subgroup normalizer(const FiniteGroup &g, const Subgroup &h) {
  const auto gens = generating_set(g, h);
  ElementSet set(g.size());
  for (int x = 0; x < g.size(); ++x)
    if (std::all_of(gens.begin(), gens.end(), [&](int s) { return h.contains(g.conj(x, s)); })) set.set(x);
  return Subgroup(std::move(set));
}

bool is_normal_in(const FiniteGroup &g, const Subgroup &n, const Subgroup &h) {
  if (!n.is_subgroup_of(h)) return false;
  const auto hg = generating_set(g, h);
  const auto ng = generating_set(g, n);
  for (int x : hg)
    for (int s : ng)
      if (!n.contains(g.conj(x, s))) return false;
  return true;
}

bool is_abelian(const FiniteGroup &g, const Subgroup &h) {
  const auto gens = generating_set(g, h);
  for (int a : gens)
    for (int b : gens)
      if (g.mul(a, b) != g.mul(b, a)) return false;
  return true;
}

Subgroup derived_subgroup(const FiniteGroup &g, const Subgroup &h) {
  std::vector<int> comms;
  ElementSet seen(g.size());
  for (int a : h.elements())
    for (int b : h.elements()) {
      const int c = g.mul(g.mul(a, b), g.mul(g.inv(a), g.inv(b)));
      if (!seen.test(c)) {
        seen.set(c);
        comms.push_back(c);
      }
    }
  return generate(g, comms);
}

} // namespace motive
