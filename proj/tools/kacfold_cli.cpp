#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "kacfold/kacfold.hpp"

using namespace kacfold;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct RunConfig {
  std::string input;
  std::string field = "2";
  std::int64_t max_height = 3;
  std::string dim;
  std::string vector;
  bool json = false;
  bool folded = false;
  std::uint64_t cap_states = std::uint64_t{1} << 24;
  std::uint64_t cap_end = std::uint64_t{1} << 20;
  std::uint64_t seed = SearchOptions{}.seed;
  std::string which;
};

LatticeVector parse_vector(const std::string& s) {
  LatticeVector v;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      v.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw Error(ErrorKind::ParseError, "cannot parse vector '" + s + "'");
    }
  }
  if (v.empty()) throw Error(ErrorKind::ParseError, "empty vector");
  return v;
}

EnumeratorOptions enumerator_options(const RunConfig& cfg) {
  if (cfg.cap_states == 0 || cfg.cap_end == 0) throw Error(ErrorKind::BadParameter, "caps must be positive");
  EnumeratorOptions o;
  o.cap_states = cfg.cap_states;
  o.search.cap = cfg.cap_end;
  o.search.seed = cfg.seed;
  return o;
}

void check_height(const RunConfig& cfg) {
  if (cfg.max_height < 1) throw Error(ErrorKind::BadParameter, "--max-height must be at least 1");
}

std::string matrix_text(const IntMatrix& m) {
  std::string s;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    s += "  [";
    for (std::size_t j = 0; j < m.cols(); ++j) s += (j ? " " : "") + std::to_string(m(i, j));
    s += "]\n";
  }
  return s;
}

/// The root lattice selected by the input kind and --folded.
RootLattice lattice_for(const RunConfig& cfg, const Json& j) {
  if (is_valued_quiver_json(j)) return valued_lattice(valued_quiver_from_json(j));
  const auto qa = quiver_from_json(j);
  if (cfg.folded) return folded_lattice(fold(qa.quiver, qa.automorphism));
  return quiver_lattice(qa.quiver);
}

int cmd_fold(const RunConfig& cfg) {
  const auto qa = quiver_from_json(load_json_file(cfg.input));
  const FoldData f = fold(qa.quiver, qa.automorphism);
  if (cfg.json) {
    Json out = fold_to_json(qa.quiver, f);
    out["valued_quiver"] = valued_quiver_to_json(folded_valued_quiver(qa.quiver, qa.automorphism));
    std::cout << out.dump(2) << "\n";
    return kExitOk;
  }
  std::cout << "B =\n" << matrix_text(f.B) << "D = " << to_string(f.d) << "\nC =\n" << matrix_text(f.C);
  for (const auto& e : f.valued_graph) {
    const auto [x, y] = f.valuation(e.i, e.j);
    std::cout << "edge " << qa.quiver.vertices()[f.orbits.vertex_orbits[e.i].front()] << " - "
              << qa.quiver.vertices()[f.orbits.vertex_orbits[e.j].front()] << " valued (" << x << "," << y << ")\n";
  }
  return kExitOk;
}

int cmd_unfold(const RunConfig& cfg) {
  const auto u = unfold(valued_quiver_from_json(load_json_file(cfg.input)));
  std::cout << quiver_to_json(u.quiver, u.automorphism).dump(2) << "\n";
  return kExitOk;
}

int cmd_skew(const RunConfig& cfg) {
  const auto qa = quiver_from_json(load_json_file(cfg.input));
  const SkewQuiver s = skew(qa.quiver, qa.automorphism);
  if (cfg.json) {
    std::cout << skew_to_json(qa.quiver, s).dump(2) << "\n";
    return kExitOk;
  }
  std::cout << s.quiver.vertex_count() << " vertices, " << s.quiver.arrow_count() << " arrows, dual automorphism of order "
            << s.dual.order << "\n";
  for (const auto& a : s.quiver.arrows())
    std::cout << "  " << a.id << ": " << s.quiver.vertices()[a.source] << " -> " << s.quiver.vertices()[a.target] << "\n";
  return kExitOk;
}

int cmd_roots(const RunConfig& cfg) {
  check_height(cfg);
  const RootSet roots = positive_roots_up_to(lattice_for(cfg, load_json_file(cfg.input)), cfg.max_height);
  if (cfg.json) {
    std::cout << root_set_to_json(roots).dump(2) << "\n";
    return kExitOk;
  }
  for (const auto& v : roots.sorted()) std::cout << to_string(v) << " " << to_string(roots.kind_of(v)) << "\n";
  return kExitOk;
}

int cmd_classify(const RunConfig& cfg) {
  const LatticeVector v = parse_vector(cfg.vector);
  const RootClassification c = classify(lattice_for(cfg, load_json_file(cfg.input)), v);
  if (cfg.json) {
    std::cout << classification_to_json(v, c).dump(2) << "\n";
    return kExitOk;
  }
  std::cout << to_string(c.kind) << "\n";
  if (!c.witness.empty()) {
    std::cout << "reflections:";
    for (int i : c.witness) std::cout << " " << i;
    std::cout << "\n";
  }
  if (!c.reason.empty()) std::cout << c.reason << "\n";
  return kExitOk;
}

int cmd_indecs(const RunConfig& cfg) {
  const auto qa = quiver_from_json(load_json_file(cfg.input));
  Enumerator e(share(qa.quiver), parse_field(cfg.field), enumerator_options(cfg));
  const LatticeVector d = parse_vector(cfg.dim);
  const Json cat = catalog_to_json(e, d, true);
  if (cfg.json) {
    std::cout << cat.dump(2) << "\n";
    return kExitOk;
  }
  std::cout << cat["class_count"] << " classes of dimension " << to_string(d) << " over F_" << cfg.field << ", "
            << cat["indecomposable_count"] << " indecomposable\n";
  for (const auto& c : cat["classes"]) std::cout << "  #" << c["index"] << " " << c["maps"].dump() << "\n";
  return kExitOk;
}

int cmd_ii_indecs(const RunConfig& cfg) {
  const auto qa = quiver_from_json(load_json_file(cfg.input));
  Enumerator e(share(qa.quiver), parse_field(cfg.field), enumerator_options(cfg));
  const LatticeVector d = parse_vector(cfg.dim);
  const auto orbits = ii_classes(e, qa.automorphism, d);
  if (cfg.json) {
    std::cout << Json{{"dim", d}, {"field", e.field().name()}, {"classes", twist_orbits_to_json(orbits)}}.dump(2) << "\n";
    return kExitOk;
  }
  std::cout << orbits.size() << " ii-indecomposable classes of dimension " << to_string(d) << "\n";
  for (const auto& o : orbits) {
    std::cout << "  " << o.period << " summand" << (o.period == 1 ? "" : "s") << ":";
    for (const auto& m : o.members) std::cout << " " << to_string(m.dim) << "#" << m.index;
    std::cout << "\n";
  }
  return kExitOk;
}

int cmd_species_count(const RunConfig& cfg) {
  const ValuedQuiver vq = valued_quiver_from_json(load_json_file(cfg.input));
  const LatticeVector alpha = parse_vector(cfg.dim);
  const std::size_t n = species_count(vq, alpha, parse_field(cfg.field), enumerator_options(cfg));
  if (cfg.json)
    std::cout << Json{{"alpha", alpha}, {"q", parse_field(cfg.field).size()}, {"count", n}}.dump(2) << "\n";
  else
    std::cout << "I(" << to_string(alpha) << ", " << cfg.field << ") = " << n << "\n";
  return kExitOk;
}

int print_violations(const std::vector<std::string>& v) {
  for (const auto& s : v) std::cout << "  violation: " << s << "\n";
  return v.empty() ? kExitOk : kExitCheckFailed;
}

int cmd_verify(const RunConfig& cfg) {
  check_height(cfg);
  const FiniteField f = parse_field(cfg.field);
  const EnumeratorOptions opts = enumerator_options(cfg);
  const Json input = load_json_file(cfg.input);
  if (cfg.which == "species") {
    const ValuedQuiver vq = is_valued_quiver_json(input) ? valued_quiver_from_json(input) : [&] {
      const auto qa = quiver_from_json(input);
      return folded_valued_quiver(qa.quiver, qa.automorphism);
    }();
    const SpeciesReport r = verify_species_theorem(vq, f, cfg.max_height, opts);
    if (cfg.json) {
      std::cout << species_report_to_json(r).dump(2) << "\n";
      return r.pass() ? kExitOk : kExitCheckFailed;
    }
    for (const auto& row : r.rows)
      if (row.count || row.kind != RootKind::NonRoot) std::cout << to_string(row.alpha) << " " << to_string(row.kind) << " I=" << row.count << "\n";
    std::cout << (r.pass() ? "PASS" : "FAIL") << "\n";
    return print_violations(r.violations);
  }
  const auto qa = quiver_from_json(input);
  const QuiverPtr q = share(qa.quiver);
  if (cfg.which == "kac") {
    const KacReport r = verify_kac(q, f, cfg.max_height, opts);
    if (cfg.json) {
      std::cout << kac_report_to_json(r).dump(2) << "\n";
      return r.pass() ? kExitOk : kExitCheckFailed;
    }
    for (const auto& row : r.rows) std::cout << to_string(row.dim) << " " << to_string(row.kind) << " classes=" << row.count << "\n";
    std::cout << (r.pass() ? "PASS" : "FAIL") << "\n";
    return print_violations(r.violations);
  }
  const MainReport r = verify_main_theorem(q, qa.automorphism, f, cfg.max_height, opts);
  if (r.characteristic_warning)
    std::cerr << "warning: characteristic " << f.characteristic() << " divides the automorphism order " << qa.automorphism.order << "\n";
  if (cfg.json) {
    std::cout << main_report_to_json(r).dump(2) << "\n";
    return r.pass() ? kExitOk : kExitCheckFailed;
  }
  for (const auto& row : r.rows) {
    std::cout << to_string(row.alpha) << " " << to_string(row.kind) << " length=" << row.root_length << " summands:";
    for (int p : row.periods) std::cout << " " << p;
    std::cout << "\n";
  }
  for (const auto& a : r.imaginary_unique) std::cout << "imaginary root " << to_string(a) << " has a unique ii class\n";
  std::cout << (r.pass() ? "PASS" : "FAIL") << "\n";
  return print_violations(r.violations);
}

int cmd_fixtures(const RunConfig& cfg) {
  const std::string& name = cfg.which;
  if (name.empty() || name == "list") {
    std::cout << "dtilde4-4cycle\ndtilde4-3cycle\na3-flip\ncounterexample\na3-flip-valued\ncalibrate\n";
    return kExitOk;
  }
  if (name == "calibrate") {
    const CalibrationReport r = calibrate_dtilde4(build_dtilde4(), make_field(5), make_field(7));
    Json four = Json::object(), three = Json::object();
    for (const auto& [l, m] : r.four_cycle_action) four[std::to_string(l)] = m;
    for (const auto& [l, m] : r.three_cycle_action) three[std::to_string(l)] = m;
    auto names = [](const std::vector<std::vector<RegularSimple>>& orbits) {
      Json out = Json::array();
      for (const auto& o : orbits) {
        Json row = Json::array();
        for (auto e : o) row.push_back(to_string(e));
        out.push_back(std::move(row));
      }
      return out;
    };
    const Json out{{"ok", r.ok()},
                   {"four_cycle_orbits", names(r.four_cycle_orbits)},
                   {"three_cycle_orbits", names(r.three_cycle_orbits)},
                   {"four_cycle_action_F5", four},
                   {"three_cycle_action_F7", three},
                   {"three_cycle_fixed_F7", r.three_cycle_fixed},
                   {"violations", r.violations}};
    std::cout << out.dump(2) << "\n";
    return r.ok() ? kExitOk : kExitCheckFailed;
  }
  if (name == "dtilde4-4cycle" || name == "dtilde4-3cycle") {
    const auto fx = build_dtilde4();
    std::cout << quiver_to_json(*fx.quiver, name == "dtilde4-4cycle" ? fx.four_cycle : fx.three_cycle).dump(2) << "\n";
    return kExitOk;
  }
  if (name == "a3-flip" || name == "a3-flip-valued") {
    const auto fx = build_a3_flip();
    const Json out = name == "a3-flip" ? quiver_to_json(*fx.quiver, fx.automorphism)
                                       : valued_quiver_to_json(folded_valued_quiver(*fx.quiver, fx.automorphism));
    std::cout << out.dump(2) << "\n";
    return kExitOk;
  }
  if (name == "counterexample") {
    const auto fx = build_counterexample();
    std::cout << quiver_to_json(*fx.quiver, fx.automorphism).dump(2) << "\n";
    return kExitOk;
  }
  throw Error(ErrorKind::BadParameter, "unknown fixture '" + name + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quiver folding, root systems and desk-scale enumeration over finite fields"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto common = [&cfg](CLI::App* sub, bool needs_input = true) {
    if (needs_input) sub->add_option("input", cfg.input, "quiver or valued-quiver JSON file")->required()->check(CLI::ExistingFile);
    sub->add_flag("--json", cfg.json, "machine-readable output");
  };
  auto enumeration = [&cfg](CLI::App* sub) {
    sub->add_option("--field", cfg.field, "finite field, p or p^m")->capture_default_str();
    sub->add_option("--cap-states", cfg.cap_states, "reduced states per dimension vector")->capture_default_str();
    sub->add_option("--cap-end", cfg.cap_end, "exhaustive endomorphism / isomorphism search cap")->capture_default_str();
    sub->add_option("--seed", cfg.seed, "seed for randomised splitting probes")->capture_default_str();
  };

  auto* fold_cmd = app.add_subcommand("fold", "B, D, C and the valued graph of (Q, a)");
  common(fold_cmd);
  auto* unfold_cmd = app.add_subcommand("unfold", "quiver with automorphism from a valued quiver");
  common(unfold_cmd);
  auto* skew_cmd = app.add_subcommand("skew", "skew quiver with its dual automorphism");
  common(skew_cmd);
  auto* roots_cmd = app.add_subcommand("roots", "positive roots up to a height bound");
  common(roots_cmd);
  roots_cmd->add_option("--max-height", cfg.max_height)->capture_default_str();
  roots_cmd->add_flag("--folded", cfg.folded, "use the folded lattice of (Q, a)");
  auto* classify_cmd = app.add_subcommand("classify", "real, imaginary or non-root");
  common(classify_cmd);
  classify_cmd->add_option("--vector", cfg.vector, "comma separated coordinates")->required();
  classify_cmd->add_flag("--folded", cfg.folded, "use the folded lattice of (Q, a)");
  auto* indecs_cmd = app.add_subcommand("indecs", "indecomposable isomorphism classes of one dimension vector");
  common(indecs_cmd);
  enumeration(indecs_cmd);
  indecs_cmd->add_option("--dim", cfg.dim, "dimension vector")->required();
  auto* ii_cmd = app.add_subcommand("ii-indecs", "ii-indecomposable classes of an a-fixed dimension vector");
  common(ii_cmd);
  enumeration(ii_cmd);
  ii_cmd->add_option("--dim", cfg.dim, "dimension vector")->required();
  auto* species_cmd = app.add_subcommand("species-count", "indecomposable species representations over F_q");
  common(species_cmd);
  enumeration(species_cmd);
  species_cmd->add_option("--dim", cfg.dim, "folded dimension vector")->required();
  auto* verify_cmd = app.add_subcommand("verify", "check a theorem up to a height bound");
  verify_cmd->add_option("which", cfg.which, "kac, main or species")->required()->check(CLI::IsMember({"kac", "main", "species"}));
  common(verify_cmd);
  enumeration(verify_cmd);
  verify_cmd->add_option("--max-height", cfg.max_height)->capture_default_str();
  auto* fixtures_cmd = app.add_subcommand("fixtures", "export built-in fixtures or run the D4 calibration");
  fixtures_cmd->add_option("name", cfg.which, "fixture name, 'list' or 'calibrate'");
  common(fixtures_cmd, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*fold_cmd) return cmd_fold(cfg);
    if (*unfold_cmd) return cmd_unfold(cfg);
    if (*skew_cmd) return cmd_skew(cfg);
    if (*roots_cmd) return cmd_roots(cfg);
    if (*classify_cmd) return cmd_classify(cfg);
    if (*indecs_cmd) return cmd_indecs(cfg);
    if (*ii_cmd) return cmd_ii_indecs(cfg);
    if (*species_cmd) return cmd_species_count(cfg);
    if (*verify_cmd) return cmd_verify(cfg);
    if (*fixtures_cmd) return cmd_fixtures(cfg);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
