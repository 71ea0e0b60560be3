#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "kacfold/cartan.hpp"
#include "kacfold/enumerator.hpp"
#include "kacfold/error.hpp"
#include "kacfold/field.hpp"
#include "kacfold/quiver.hpp"
#include "kacfold/representation.hpp"
#include "kacfold/roots.hpp"
#include "kacfold/skew.hpp"

namespace kacfold {

using Json = nlohmann::json;

inline Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::ParseError, "'" + path + "': " + e.what());
  }
}

namespace detail {

template <typename T, typename Fn>
T parse_field_of(const Json& j, const std::string& what, Fn&& fn) {
  try {
    return fn(j);
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::ParseError, what + ": " + e.what());
  }
}

}  // namespace detail

/// Quiver file with an optional "automorphism" block (identity when absent).
inline QuiverWithAutomorphism quiver_from_json(const Json& j) {
  const RawQuiver raw = detail::parse_field_of<RawQuiver>(j, "quiver", [](const Json& j) {
    RawQuiver r;
    r.vertices = j.at("vertices").get<std::vector<std::string>>();
    for (const auto& a : j.at("arrows")) r.arrows.push_back({a.at("id").get<std::string>(), a.at("from").get<std::string>(), a.at("to").get<std::string>()});
    return r;
  });
  Quiver q = validate_quiver(raw);
  Automorphism a = identity_automorphism(q);
  if (j.contains("automorphism")) {
    const RawAutomorphism ra = detail::parse_field_of<RawAutomorphism>(j.at("automorphism"), "automorphism", [](const Json& j) {
      RawAutomorphism r;
      if (j.contains("vertices")) r.vertices = j.at("vertices").get<std::map<std::string, std::string>>();
      if (j.contains("arrows")) r.arrows = j.at("arrows").get<std::map<std::string, std::string>>();
      return r;
    });
    a = validate_automorphism(q, ra);
  }
  return {std::move(q), std::move(a)};
}

inline Json quiver_to_json(const Quiver& q, const std::optional<Automorphism>& a = std::nullopt) {
  Json j;
  j["vertices"] = q.vertices();
  j["arrows"] = Json::array();
  for (const auto& r : q.arrows()) j["arrows"].push_back({{"id", r.id}, {"from", q.vertices()[r.source]}, {"to", q.vertices()[r.target]}});
  if (a && !a->is_identity()) {
    Json v = Json::object(), r = Json::object();
    for (std::size_t i = 0; i < q.vertex_count(); ++i) v[q.vertices()[i]] = q.vertices()[a->vertex_map[i]];
    for (std::size_t k = 0; k < q.arrow_count(); ++k) r[q.arrows()[k].id] = q.arrows()[a->arrow_map[k]].id;
    j["automorphism"] = {{"vertices", v}, {"arrows", r}};
  }
  return j;
}

inline bool is_valued_quiver_json(const Json& j) { return j.contains("edges") || j.contains("d"); }

inline ValuedQuiver valued_quiver_from_json(const Json& j) {
  ValuedQuiver vq = detail::parse_field_of<ValuedQuiver>(j, "valued quiver", [](const Json& j) {
    ValuedQuiver v;
    v.vertices = j.at("vertices").get<std::vector<std::string>>();
    const Json& d = j.at("d");
    for (const auto& name : v.vertices) v.d.push_back(d.contains(name) ? d.at(name).get<std::int64_t>() : 1);
    for (const auto& [name, value] : d.items())
      if (std::find(v.vertices.begin(), v.vertices.end(), name) == v.vertices.end())
        throw Error(ErrorKind::DanglingEndpoint, "symmetriser names unknown vertex '" + name + "'");
    for (const auto& e : j.at("edges")) v.arrows.push_back({e.at("from").get<std::string>(), e.at("to").get<std::string>(), e.at("b").get<std::int64_t>()});
    return v;
  });
  return validate_valued_quiver(std::move(vq));
}

inline Json valued_quiver_to_json(const ValuedQuiver& vq) {
  Json j;
  j["vertices"] = vq.vertices;
  j["d"] = Json::object();
  for (std::size_t i = 0; i < vq.vertices.size(); ++i) j["d"][vq.vertices[i]] = vq.d[i];
  j["edges"] = Json::array();
  for (const auto& e : vq.arrows) j["edges"].push_back({{"from", e.from}, {"to", e.to}, {"b", e.b}});
  return j;
}

inline Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows; ++i) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols; ++c) row.push_back(m(i, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Json int_matrix_to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(i, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

/// {"field": "p^m", "dim": [...], "maps": {"arrow id": rows}}
inline Json representation_to_json(const Representation& x) {
  Json maps = Json::object();
  for (std::size_t k = 0; k < x.maps.size(); ++k) maps[x.quiver->arrows()[k].id] = matrix_to_json(x.maps[k]);
  return {{"field", x.field.name()}, {"dim", x.dim}, {"maps", maps}};
}

inline Representation representation_from_json(const Json& j, QuiverPtr q) {
  const FiniteField f = parse_field(detail::parse_field_of<std::string>(j, "representation", [](const Json& j) {
    return j.at("field").is_string() ? j.at("field").get<std::string>() : std::to_string(j.at("field").get<int>());
  }));
  const LatticeVector dim = detail::parse_field_of<LatticeVector>(j, "representation", [](const Json& j) { return j.at("dim").get<LatticeVector>(); });
  if (dim.size() != q->vertex_count()) throw Error(ErrorKind::LatticeMismatch, "representation dimension vector has the wrong length");
  std::vector<Matrix> maps;
  for (const auto& a : q->arrows()) {
    const std::size_t rows = dim[a.target] < 0 ? 0 : dim[a.target];
    const std::size_t cols = dim[a.source] < 0 ? 0 : dim[a.source];
    const Json* m = j.contains("maps") && j.at("maps").contains(a.id) ? &j.at("maps").at(a.id) : nullptr;
    if (!m) {
      if (rows * cols != 0) throw Error(ErrorKind::ParseError, "representation has no matrix for arrow '" + a.id + "'");
      maps.emplace_back(rows, cols);
      continue;
    }
    const auto entries = detail::parse_field_of<std::vector<std::vector<Elem>>>(*m, "matrix of arrow '" + a.id + "'",
                                                                                [](const Json& j) { return j.get<std::vector<std::vector<Elem>>>(); });
    // [] stands for any matrix with a zero dimension
    if (entries.empty() && rows * cols != 0) throw Error(ErrorKind::BadParameter, "empty matrix for arrow '" + a.id + "'");
    maps.push_back(entries.empty() ? Matrix(rows, cols) : Matrix::from_rows(entries));
  }
  return make_representation(std::move(q), f, dim, std::move(maps));
}

inline Json fold_to_json(const Quiver& q, const FoldData& f) {
  Json orbits = Json::array();
  for (const auto& o : f.orbits.vertex_orbits) {
    Json names = Json::array();
    for (int v : o) names.push_back(q.vertices()[v]);
    orbits.push_back(std::move(names));
  }
  Json edges = Json::array();
  for (const auto& e : f.valued_graph) {
    const auto [x, y] = f.valuation(e.i, e.j);
    edges.push_back({{"i", e.i}, {"j", e.j}, {"b", e.weight}, {"valuation", {x, y}}});
  }
  return {{"orbits", orbits}, {"B", int_matrix_to_json(f.B)}, {"D", f.d}, {"C", int_matrix_to_json(f.C)}, {"edges", edges}};
}

inline Json root_set_to_json(const RootSet& roots) {
  Json out = Json::array();
  for (const auto& v : roots.sorted()) out.push_back({{"vector", v}, {"kind", to_string(roots.kind_of(v))}});
  return out;
}

inline Json classification_to_json(const LatticeVector& v, const RootClassification& c) {
  Json j{{"vector", v}, {"kind", to_string(c.kind)}, {"positive", c.positive}, {"witness", c.witness}, {"terminal", c.terminal}};
  if (c.simple >= 0) j["simple"] = c.simple;
  if (!c.reason.empty()) j["reason"] = c.reason;
  return j;
}

inline Json skew_to_json(const Quiver& q, const SkewQuiver& s) {
  Json j = quiver_to_json(s.quiver, s.dual);
  Json labels = Json::object();
  for (std::size_t v = 0; v < s.label.size(); ++v) labels[s.quiver.vertices()[v]] = {{"orbit", s.label[v].first}, {"mu", s.label[v].second}};
  Json prov = Json::object();
  for (std::size_t k = 0; k < s.provenance.size(); ++k)
    prov[s.quiver.arrows()[k].id] = {{"arrow_orbit", s.provenance[k].arrow_orbit}, {"residue", s.provenance[k].residue}};
  (void)q;
  j["provenance"] = {{"vertices", labels}, {"arrows", prov}};
  return j;
}

inline Json catalog_to_json(Enumerator& e, const LatticeVector& d, bool indecomposable_only) {
  const IsoClassCatalog& cat = e.catalog(d);
  Json classes = Json::array();
  std::size_t indecs = 0;
  for (std::size_t k = 0; k < cat.size(); ++k) {
    const bool indec = !is_zero(d) && support_connected(*e.quiver(), d) && e.is_indecomposable(d, k);
    indecs += indec ? 1 : 0;
    if (indecomposable_only && !indec) continue;
    Json c = representation_to_json(cat[k].representative);
    c["index"] = k;
    c["indecomposable"] = indec;
    c["orbit_size"] = to_string(cat[k].orbit_size);
    classes.push_back(std::move(c));
  }
  return {{"dim", d},
          {"field", e.field().name()},
          {"class_count", cat.size()},
          {"indecomposable_count", indecs},
          {"reduced_states", cat.reduced_states()},
          {"classes", classes}};
}

inline Json twist_orbits_to_json(const std::vector<TwistOrbit>& orbits) {
  Json out = Json::array();
  for (const auto& o : orbits) {
    Json members = Json::array();
    for (const auto& m : o.members) members.push_back({{"dim", m.dim}, {"index", m.index}});
    out.push_back({{"period", o.period}, {"members", members}, {"sum", representation_to_json(o.sum)}});
  }
  return out;
}

inline Json kac_report_to_json(const KacReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows) rows.push_back({{"dim", row.dim}, {"kind", to_string(row.kind)}, {"count", row.count}});
  return {{"pass", r.pass()}, {"rows", rows}, {"violations", r.violations}};
}

inline Json main_report_to_json(const MainReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows)
    rows.push_back({{"alpha", row.alpha}, {"dim", row.dim}, {"kind", to_string(row.kind)}, {"root_length", row.root_length}, {"periods", row.periods}});
  return {{"pass", r.pass()},
          {"characteristic_warning", r.characteristic_warning},
          {"imaginary_unique", r.imaginary_unique},
          {"rows", rows},
          {"violations", r.violations}};
}

inline Json species_report_to_json(const SpeciesReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows) rows.push_back({{"alpha", row.alpha}, {"kind", to_string(row.kind)}, {"count", row.count}});
  return {{"pass", r.pass()}, {"rows", rows}, {"violations", r.violations}};
}

}  // namespace kacfold
