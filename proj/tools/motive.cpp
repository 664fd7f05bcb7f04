#include <algorithm>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "motive/checks.hpp"
#include "motive/serialize.hpp"

using namespace motive;

namespace {

struct Options {
  std::string group;
  std::string coeff = "Z";
  std::optional<int> prime;
  std::optional<std::uint64_t> bound;
  bool tsv = false;
  std::uint64_t seed = 1;
  std::string lhs, rhs, element;
};

/// Lazily built algebra for one invocation.
class Context {
public:
  explicit Context(const Options &o) : options_(o), ring_(CoefficientRing::parse(o.coeff)) {
    GroupLimits limits = GroupLimits::from_environment();
    if (o.bound) limits.max_order = *o.bound;
    group_.emplace(FiniteGroup::parse(o.group, limits));
  }

  const Options &options() const { return options_; }
  const CoefficientRing &ring() const { return ring_; }
  const FiniteGroup &group() const { return *group_; }
  const CrossedBurnsideRing &crossed() {
    if (!crossed_) crossed_ = make_crossed_ring(*group_);
    return *crossed_;
  }
  const BurnsideRing &burnside() { return crossed().burnside(); }
  const SubgroupClassTable &classes() { return crossed().classes(); }
  const MackeyAlgebra &mackey() {
    if (!mackey_) {
      crossed();
      mackey_ = std::make_unique<MackeyAlgebra>(crossed_, options_.bound ? *options_.bound : kMaxSpanOrder);
    }
    return *mackey_;
  }
  /// --prime, else the prime of a Zp/Fp tag.
  int prime() const {
    if (options_.prime) return *options_.prime;
    if (ring_.prime) return ring_.prime;
    throw std::invalid_argument("this command needs --prime or a Zp/Fp coefficient tag");
  }
  CheckOptions check_options() const { return {options_.seed, CheckOptions{}.samples}; }

private:
  Options options_;
  CoefficientRing ring_;
  std::optional<FiniteGroup> group_;
  std::shared_ptr<const CrossedBurnsideRing> crossed_;
  std::unique_ptr<MackeyAlgebra> mackey_;
};

Json checks_json(const CheckList &checks) {
  Json out = Json::array();
  for (const auto &c : checks) {
    Json j = {{"name", c.name}, {"pass", c.pass}};
    if (!c.detail.empty()) j["detail"] = c.detail;
    out.push_back(j);
  }
  return out;
}

std::vector<std::string> class_names(const SubgroupClassTable &t, const std::vector<int> &ids) {
  std::vector<std::string> out;
  for (int i : ids) out.push_back(t[i].name);
  return out;
}

void flatten(const Json &j, const std::string &path, std::ostream &os) {
  if (j.is_object()) {
    for (const auto &[k, v] : j.items()) flatten(v, path.empty() ? k : path + "." + k, os);
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "[" + std::to_string(i) + "]", os);
  } else {
    os << (path.empty() ? "." : path) << '\t' << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
  }
}

/// Idempotent, orthogonal, summing to one, for elements of any of the rings.
template <class Element, class Multiply>
CheckList decomposition_checks(const std::string &prefix, const std::vector<Element> &es, const Element &one,
                               const Element &zero, Multiply &&multiply) {
  bool idempotent = true, orthogonal = true;
  Element sum = zero;
  for (std::size_t a = 0; a < es.size(); ++a) {
    sum.coefficients += es[a].coefficients;
    for (std::size_t b = 0; b < es.size(); ++b) {
      const Element p = multiply(es[a], es[b]);
      if (a == b) idempotent = idempotent && p == es[a];
      else orthogonal = orthogonal && p == zero;
    }
  }
  return {{prefix + ".idempotent", idempotent, std::to_string(es.size()) + " elements"},
          {prefix + ".orthogonal", orthogonal, {}},
          {prefix + ".sum_to_one", sum == one, {}}};
}

template <class Scalar> BurnsideElement<Scalar> in_ring(const BurnsideElement<Rational> &x, const CoefficientRing &ring) {
  return {ring, convert<Scalar>(x.coefficients, ring)};
}
template <class Scalar> CrossedElement<Scalar> in_ring(const CrossedElement<Rational> &x, const CoefficientRing &ring) {
  return {ring, convert<Scalar>(x.coefficients, ring)};
}

/// Rational idempotents for Q, Dress idempotents for Z (solvable) and Zp / Fp (p-residual).
struct IdempotentFamily {
  std::vector<int> labels;
  std::vector<std::vector<int>> fibers;
  std::vector<BurnsideElement<Rational>> elements;
  /// true when the family is the set of primitive idempotents over the ring
  bool primitive = true;
};

IdempotentFamily burnside_family(const BurnsideRing &b, const CoefficientRing &ring) {
  IdempotentFamily f;
  if (ring.kind == RingKind::Rational) {
    f.elements = rational_idempotents(b);
    for (int h = 0; h < b.dimension(); ++h) {
      f.labels.push_back(h);
      f.fibers.push_back({h});
    }
    return f;
  }
  const ResidualMode mode = ring.kind == RingKind::Integer ? ResidualMode::solvable() : ResidualMode::p(ring.prime);
  for (auto &d : dress_idempotents(b, mode)) {
    f.labels.push_back(d.residual_class);
    f.fibers.push_back(d.fiber);
    f.elements.push_back(std::move(d.element));
  }
  return f;
}

template <class Scalar> Json family_payload(Context &ctx, const IdempotentFamily &f, bool crossed, CheckList &checks) {
  const auto &ring = ctx.ring();
  const auto &t = ctx.classes();
  Json list = Json::array();
  if (crossed) {
    const auto &c = ctx.crossed();
    std::vector<CrossedElement<Scalar>> es;
    for (std::size_t i = 0; i < f.elements.size(); ++i) {
      es.push_back(in_ring<Scalar>(c.iota(f.elements[i]), ring));
      list.push_back({{"J", t[f.labels[i]].name}, {"fiber", class_names(t, f.fibers[i])}, {"element", to_json(c, es.back())}});
    }
    checks = decomposition_checks("cbr", es, c.one<Scalar>(ring), c.zero<Scalar>(ring),
                                  [&](const auto &x, const auto &y) { return c.multiply(x, y); });
  } else {
    const auto &b = ctx.burnside();
    std::vector<BurnsideElement<Scalar>> es;
    for (std::size_t i = 0; i < f.elements.size(); ++i) {
      es.push_back(in_ring<Scalar>(f.elements[i], ring));
      list.push_back({{"J", t[f.labels[i]].name}, {"fiber", class_names(t, f.fibers[i])}, {"element", to_json(b, es.back())}});
    }
    checks = decomposition_checks("burnside", es, b.one<Scalar>(ring), b.zero<Scalar>(ring),
                                  [&](const auto &x, const auto &y) { return b.multiply(x, y); });
  }
  return {{"primitive", f.primitive}, {"idempotents", list}};
}

bool prime_field(const CoefficientRing &r) { return r.kind == RingKind::PrimeField; }

Json cmd_subgroups(Context &ctx, CheckList &checks) {
  const auto &t = ctx.classes();
  const auto &g = ctx.group();
  Json list = Json::array();
  for (int i = 0; i < t.size(); ++i) {
    const auto &c = t[i];
    Json gens = Json::array();
    for (int x : generating_set(g, c.representative)) gens.push_back(g.element_string(x));
    Json residuals = Json::object();
    for (const auto &[p, r] : c.p_residuals) residuals[std::to_string(p)] = t[r].name;
    list.push_back({{"name", c.name},
                    {"order", c.representative.order()},
                    {"generators", gens},
                    {"class_size", g.order() / c.normalizer.order()},
                    {"normalizer_order", c.normalizer.order()},
                    {"centralizer_order", c.centralizer.order()},
                    {"solvable_residual", t[c.solvable_residual].name},
                    {"p_residuals", residuals}});
  }
  checks = group_checks(t);
  return {{"order", g.order()}, {"classes", list}};
}

Json cmd_marks(Context &ctx, CheckList &checks) {
  const auto &b = ctx.burnside();
  Json rows = Json::array();
  for (int h = 0; h < b.dimension(); ++h) {
    Json row = Json::array();
    for (int u = 0; u < b.dimension(); ++u) row.push_back(b.marks()(h, u));
    rows.push_back(row);
  }
  for (auto &c : burnside_checks(b, ctx.check_options()))
    if (c.name.rfind("burnside.marks", 0) == 0) checks.push_back(std::move(c));
  std::vector<int> all(b.dimension());
  for (int i = 0; i < b.dimension(); ++i) all[i] = i;
  return {{"classes", class_names(ctx.classes(), all)}, {"marks", rows}};
}

Json cmd_idempotents(Context &ctx, CheckList &checks, bool crossed) {
  IdempotentFamily f = burnside_family(ctx.burnside(), ctx.ring());
  // over Q the images of e_H split further in the crossed ring
  if (crossed && ctx.ring().kind == RingKind::Rational) f.primitive = false;
  return prime_field(ctx.ring()) ? family_payload<GF>(ctx, f, crossed, checks)
                                 : family_payload<Rational>(ctx, f, crossed, checks);
}

Json cmd_cbr_basis(Context &ctx, CheckList &) {
  const auto &c = ctx.crossed();
  const auto &t = ctx.classes();
  Json list = Json::array();
  for (int i = 0; i < c.dimension(); ++i) {
    const auto &b = c.basis()[i];
    list.push_back({{"index", i},
                    {"name", c.basis_name(i)},
                    {"subgroup", t[b.subgroup_class].name},
                    {"label", ctx.group().element_string(b.label)},
                    {"orbit_size", b.orbit.size()}});
  }
  return {{"dimension", c.dimension()}, {"basis", list}};
}

template <class Scalar> Json cbr_multiply(Context &ctx, CheckList &checks) {
  const auto &c = ctx.crossed();
  const auto x = crossed_from_json<Scalar>(c, Json::parse(ctx.options().lhs), ctx.ring());
  const auto y = crossed_from_json<Scalar>(c, Json::parse(ctx.options().rhs), ctx.ring());
  const auto xy = c.multiply(x, y);
  checks.push_back({"cbr.commutative", xy == c.multiply(y, x), {}});
  checks.push_back({"cbr.marks_multiplicative",
                    c.crossed_marks(xy) == c.ghost_multiply(c.crossed_marks(x), c.crossed_marks(y)), {}});
  return {{"lhs", to_json(c, x)}, {"rhs", to_json(c, y)}, {"product", to_json(c, xy)}};
}

template <class Scalar> Json rho_payload(Context &ctx, CheckList &checks) {
  const auto &c = ctx.crossed();
  const auto &ring = ctx.ring();
  if (!ctx.options().element.empty()) {
    const auto x = crossed_from_json<Scalar>(c, Json::parse(ctx.options().element), ring);
    return {{"element", to_json(c, x)}, {"rho", to_json(c.center(), c.rho(x))}};
  }
  Json list = Json::array();
  Matrix<Scalar> image(c.center().dimension(), c.dimension());
  for (int i = 0; i < c.dimension(); ++i) {
    const auto r = c.rho(c.basis_element<Scalar>(i, ring));
    image.col(i) = r.coordinates;
    list.push_back({{"basis", c.basis_name(i)}, {"rho", to_json(c.center(), r)}});
  }
  const auto r = rank(image);
  checks.push_back({"rho.surjective." + ring.name(), r == c.center().dimension(),
                    "rank " + std::to_string(r) + " of " + std::to_string(c.center().dimension())});
  return {{"images", list}, {"rank", r}, {"classes", c.center().dimension()}};
}

template <class Scalar> Json motivic_payload(Context &ctx, CheckList &checks) {
  const auto &c = ctx.crossed();
  const auto &z = c.center();
  const auto &ring = ctx.ring();
  const auto &t = ctx.classes();
  IdempotentFamily f = burnside_family(ctx.burnside(), ring);
  f.primitive = ring.kind == RingKind::Integer;
  Json summands = Json::array(), survivors = Json::array();
  auto images = z.zero<Scalar>(ring);
  bool values = true;
  for (std::size_t i = 0; i < f.elements.size(); ++i) {
    const auto e = in_ring<Scalar>(c.iota(f.elements[i]), ring);
    const auto r = c.rho(e);
    images.coordinates += r.coordinates;
    const bool survives = !(r == z.zero<Scalar>(ring));
    values = values && (r == z.zero<Scalar>(ring) || r == z.one<Scalar>(ring));
    if (survives) survivors.push_back(t[f.labels[i]].name);
    summands.push_back({{"J", t[f.labels[i]].name},
                        {"fiber", class_names(t, f.fibers[i])},
                        {"idempotent", to_json(c, e)},
                        {"rho", to_json(z, r)},
                        {"survives", survives}});
  }
  checks.push_back({"motivic.rho_images_sum_to_one", images == z.one<Scalar>(ring), {}});
  checks.push_back({"motivic.rho_images_are_zero_or_one", values, {}});
  return {{"primitive", f.primitive}, {"summands", summands}, {"survivors", survivors}};
}

Json cmd_p_local(Context &ctx, CheckList &checks) {
  const int p = ctx.prime();
  const auto &t = ctx.classes();
  const auto report = p_local_report(ctx.crossed(), p);
  checks.push_back({"plocal.idempotent", report.idempotent, {}});
  checks.push_back({"plocal.orthogonal", report.orthogonal, {}});
  checks.push_back({"plocal.sum_to_one", report.complete, {}});
  // fibers against O^p computed afresh
  std::vector<int> covered(t.size(), 0);
  bool fibers = true;
  for (const auto &s : report.summands)
    for (int h : s.fiber) {
      ++covered[h];
      fibers = fibers && t.fuse(residual(ctx.group(), t[h].representative, ResidualMode::p(p))).index == s.residual_class;
    }
  for (int n : covered) fibers = fibers && n == 1;
  checks.push_back({"plocal.fibers_match_residuals", fibers, {}});

  Json list = Json::array();
  for (const auto &s : report.summands) {
    const std::string j = t[s.residual_class].name;
    list.push_back({{"J", j},
                    {"fiber", class_names(t, s.fiber)},
                    {"idempotent", to_json(ctx.crossed(), s.idempotent)},
                    {"rank", s.rank},
                    {"weyl_order", s.weyl_order},
                    {"weyl_rank", s.weyl_rank},
                    {"burnside_rank", s.burnside_rank},
                    {"weyl_burnside_rank", s.weyl_burnside_rank}});
    checks.push_back({"plocal.crossed_rank." + j, s.rank == s.weyl_rank,
                      std::to_string(s.rank) + " vs Weyl group " + std::to_string(s.weyl_rank)});
    checks.push_back({"plocal.burnside_rank." + j, s.burnside_rank == s.weyl_burnside_rank,
                      std::to_string(s.burnside_rank) + " vs Weyl group " + std::to_string(s.weyl_burnside_rank)});
  }
  return {{"prime", p}, {"summands", list}};
}

Json cmd_blocks(Context &ctx, CheckList &checks) {
  const int p = ctx.prime();
  std::optional<int> e;
  if (prime_field(ctx.ring()) && std::count(ctx.options().coeff.begin(), ctx.options().coeff.end(), ':') == 2)
    e = ctx.ring().exponent;
  const auto &z = ctx.crossed().center();
  const auto blocks = blocks_mod_p(z, p, e);
  Json list = Json::array();
  for (const auto &b : blocks) list.push_back(to_json(z, b));
  checks = block_checks(ctx.crossed(), p, e);
  return {{"prime", p}, {"field", blocks.front().ring.name()}, {"blocks", list}};
}

Json cmd_mackey(Context &ctx, CheckList &checks) {
  const auto &m = ctx.mackey();
  const CoefficientRing ring = ctx.ring().kind == RingKind::Integer ? CoefficientRing::rationals() : ctx.ring();
  if (ring.kind == RingKind::PLocal) throw std::invalid_argument("mackey-check takes Q or Fp coefficients");
  checks = mackey_checks(m, ring);
  checks.push_back(zeta_surjectivity(m, ring));
  const HeckeAlgebra y(m.omega());
  const auto center_dim = prime_field(ring) ? m.center<GF>(ring).cols() : m.center<Rational>(ring).cols();
  return {{"coeff", ring.name()},
          {"omega", m.omega().size()},
          {"span_dimension", m.dimension()},
          {"span_count_formula", span_count_by_formula(m)},
          {"center_dimension", center_dim},
          {"hecke_dimension", y.dimension()},
          {"hecke_center_dimension",
           prime_field(ring) ? y.center_dimension<GF>(ring) : y.center_dimension<Rational>(ring)}};
}

Json cmd_verify_all(Context &ctx, CheckList &checks, Json &reproducer) {
  const auto options = ctx.check_options();
  std::vector<std::pair<std::string, std::function<CheckList()>>> suites = {
      {"group", [&] { return group_checks(ctx.classes()); }},
      {"burnside", [&] { return burnside_checks(ctx.burnside(), options); }},
      {"crossed", [&] { return crossed_checks(ctx.crossed(), options); }},
      {"center", [&] { return center_checks(ctx.crossed(), options); }},
  };
  // the span algebra is only built when it fits its bounds; the document records a skip
  std::string skipped;
  try {
    ctx.mackey();
  } catch (const group_too_large &e) {
    skipped = e.what();
  }
  const bool spans = skipped.empty();
  if (spans) {
    const CoefficientRing ring = prime_field(ctx.ring()) ? ctx.ring() : CoefficientRing::rationals();
    suites.push_back({"mackey", [&ctx, ring] { return mackey_checks(ctx.mackey(), ring); }});
  }
  Json ran = Json::array();
  for (const auto &[name, run] : suites) {
    ran.push_back(name);
    for (auto &c : run()) {
      checks.push_back(c);
      if (!c.pass) {
        reproducer = {{"command", "verify-all"},
                      {"group", ctx.options().group},
                      {"coeff", ctx.options().coeff},
                      {"seed", ctx.options().seed},
                      {"suite", name},
                      {"check", c.name},
                      {"detail", c.detail}};
        return {{"suites", ran}, {"mackey_skipped", skipped.empty() ? Json(nullptr) : Json(skipped)}};
      }
    }
  }
  return {{"suites", ran}, {"mackey_skipped", skipped.empty() ? Json(nullptr) : Json(skipped)}};
}

void add_common(CLI::App *sub, Options &o) {
  sub->add_option("--group", o.group, "sym:N | alt:N | cyclic:N | dihedral:N | gens:\"(1,2);(1,2,3)\"")->required();
  sub->add_option("--coeff", o.coeff, "Z | Q | Zp:<p> | Fp:<p>[:<e>]");
  sub->add_option("--prime", o.prime, "prime for p-local reports and blocks");
  sub->add_option("--bound", o.bound, "group-order safety bound (also the span-algebra bound)");
  sub->add_flag("--tsv", o.tsv, "flatten the JSON document to path<TAB>value lines");
  sub->add_option("--seed", o.seed, "seed for sampled property checks");
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Burnside and crossed Burnside rings, idempotents and Mackey algebra checks"};
  app.require_subcommand(1);
  Options o;
  const std::vector<std::pair<std::string, std::string>> commands = {
      {"subgroups", "conjugacy classes of subgroups"},
      {"marks", "table of marks"},
      {"burnside-idempotents", "idempotents of the Burnside ring"},
      {"cbr-basis", "basis [H,a] of the crossed Burnside ring"},
      {"cbr-multiply", "product of two crossed Burnside ring elements"},
      {"cbr-idempotents", "idempotents of the crossed Burnside ring"},
      {"rho", "the map to the centre of the group algebra"},
      {"motivic-report", "idempotents and their images under rho"},
      {"p-local-report", "p-local decomposition with rank comparison"},
      {"blocks", "blocks of the centre over a finite field"},
      {"mackey-check", "span algebra, zeta, projection and iota_k"},
      {"verify-all", "every invariant suite, stopping at the first failure"},
  };
  for (const auto &[name, help] : commands) {
    auto *sub = app.add_subcommand(name, help);
    add_common(sub, o);
    if (name == "cbr-multiply") {
      sub->add_option("--lhs", o.lhs, "JSON object {\"[H,a]\": \"coeff\"}")->required();
      sub->add_option("--rhs", o.rhs, "JSON object {\"[H,a]\": \"coeff\"}")->required();
    }
    if (name == "rho") sub->add_option("--element", o.element, "JSON object; default: every basis element");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    std::cerr << app.help();
    return 2;
  }
  const std::string command = app.get_subcommands().front()->get_name();

  Json doc = {{"command", command}, {"group", o.group}, {"coeff", o.coeff}};
  CheckList checks;
  Json reproducer;
  try {
    Context ctx(o);
    doc["order"] = ctx.group().order();
    Json payload;
    const bool gf = prime_field(ctx.ring());
    if (command == "subgroups") payload = cmd_subgroups(ctx, checks);
    else if (command == "marks") payload = cmd_marks(ctx, checks);
    else if (command == "burnside-idempotents") payload = cmd_idempotents(ctx, checks, false);
    else if (command == "cbr-basis") payload = cmd_cbr_basis(ctx, checks);
    else if (command == "cbr-multiply") payload = gf ? cbr_multiply<GF>(ctx, checks) : cbr_multiply<Rational>(ctx, checks);
    else if (command == "cbr-idempotents") payload = cmd_idempotents(ctx, checks, true);
    else if (command == "rho") payload = gf ? rho_payload<GF>(ctx, checks) : rho_payload<Rational>(ctx, checks);
    else if (command == "motivic-report") payload = gf ? motivic_payload<GF>(ctx, checks) : motivic_payload<Rational>(ctx, checks);
    else if (command == "p-local-report") payload = cmd_p_local(ctx, checks);
    else if (command == "blocks") payload = cmd_blocks(ctx, checks);
    else if (command == "mackey-check") payload = cmd_mackey(ctx, checks);
    else payload = cmd_verify_all(ctx, checks, reproducer);
    doc["payload"] = payload;
  } catch (const group_too_large &e) {
    doc["error"] = {{"bound", e.bound_name}, {"message", e.what()}};
    std::cout << doc.dump(2) << '\n';
    std::cerr << "bound exceeded: " << e.what() << '\n';
    return 3;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  doc["checks"] = checks_json(checks);
  if (!reproducer.is_null()) doc["reproducer"] = reproducer;

  if (o.tsv) flatten(doc, "", std::cout);
  else std::cout << doc.dump(2) << '\n';
  if (!all_pass(checks)) {
    for (const auto &c : checks)
      if (!c.pass) std::cerr << "FAILED " << c.name << (c.detail.empty() ? "" : ": " + c.detail) << '\n';
    return 1;
  }
  return EXIT_SUCCESS;
}
