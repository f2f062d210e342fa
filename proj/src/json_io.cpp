#include "stemlie/json_io.hpp"

namespace stemlie {

Json kscalar_to_json(const KScalar& x) {
  Json j;
  j["a"] = rational_to_string(x.a);
  j["b"] = rational_to_string(x.b);
  j["c"] = rational_to_string(x.c);
  j["d"] = rational_to_string(x.d);
  return j;
}

KScalar kscalar_from_json(const Json& j) {
  return {rational_from_string(j.at("a").get<std::string>()),
          rational_from_string(j.at("b").get<std::string>()),
          rational_from_string(j.at("c").get<std::string>()),
          rational_from_string(j.at("d").get<std::string>())};
}

Json element_to_json(const ReductiveAlgebra& alg, const Element& e) {
  Json coeffs = Json::object();
  for (const auto& [idx, v] : e.coeffs) coeffs[alg.label(idx)] = kscalar_to_json(v);
  Json j;
  j["coeffs"] = std::move(coeffs);
  return j;
}

Element element_from_json(const ReductiveAlgebra& alg, const Json& j) {
  Element e(alg.dim());
  for (const auto& [label, value] : j.at("coeffs").items())
    e.set(alg.parse_label(label), kscalar_from_json(value));
  return e;
}

Json matrix_to_json(const KMatrix& m) {
  Json cols = Json::array();
  const int rows = static_cast<int>(m.size());
  const int ncols = rows ? static_cast<int>(m[0].size()) : 0;
  for (int c = 0; c < ncols; ++c) {
    Json col = Json::array();
    for (int r = 0; r < rows; ++r) col.push_back(kscalar_to_json(m[r][c]));
    cols.push_back(std::move(col));
  }
  return cols;
}

KMatrix matrix_from_json(const Json& j, int rows, int cols) {
  if (static_cast<int>(j.size()) != cols) throw std::invalid_argument("matrix: wrong column count");
  KMatrix m(rows, std::vector<KScalar>(cols));
  for (int c = 0; c < cols; ++c) {
    if (static_cast<int>(j[c].size()) != rows) throw std::invalid_argument("matrix: wrong row count");
    for (int r = 0; r < rows; ++r) m[r][c] = kscalar_from_json(j[c][r]);
  }
  return m;
}

Json report_to_json(const Report& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json e;
    e["name"] = c.name;
    e["pass"] = c.pass;
    if (!c.detail.empty()) e["detail"] = c.detail;
    checks.push_back(std::move(e));
  }
  return checks;
}

namespace {

Json root_coords(const Root& r) {
  Json a = Json::array();
  for (int x : r.coords) a.push_back(x);
  return a;
}

} // namespace

Json roots_to_json(const RootSystem& rs) {
  Json j;
  j["spec"] = rs.spec().to_string();
  j["rank"] = rs.rank();
  j["center_rank"] = rs.center_rank();
  j["n_roots"] = rs.n_roots();
  j["n_positive"] = rs.n_positive();
  Json roots = Json::array();
  for (int i = 0; i < rs.n_roots(); ++i) roots.push_back(root_coords(rs.root(i)));
  j["roots"] = std::move(roots);
  return j;
}

Json stem_to_json(const RootSystem& rs, const Stem& stem) {
  Json j;
  Json gammas = Json::array();
  for (int g : stem.gammas) gammas.push_back(root_coords(rs.root(g)));
  j["gammas"] = std::move(gammas);
  Json branches = Json::object();
  for (int k = 0; k < stem.size(); ++k) {
    Json br = Json::array();
    for (int b : stem.branches[k]) br.push_back(root_coords(rs.root(b)));
    branches["g" + std::to_string(k + 1)] = std::move(br);
  }
  j["branches"] = std::move(branches);
  j["d"] = stem.size();
  Json order = Json::array();
  for (int k = 0; k < stem.size(); ++k)
    for (int t = 0; t < stem.size(); ++t) {
      if (k == t) continue;
      if (stem.theta_component[k].count(stem.gammas[t])) order.push_back(Json::array({k + 1, t + 1}));
    }
  j["order"] = std::move(order);
  return j;
}

Json constants_to_json(const RootSystem& rs, const StructureConstants& sc) {
  Json j;
  j["spec"] = rs.spec().to_string();
  Json triples = Json::array();
  for (int a = 0; a < sc.n_roots(); ++a)
    for (int b = 0; b < sc.n_roots(); ++b)
      if (sc.N(a, b) != 0) triples.push_back(Json::array({a, b, sc.N(a, b)}));
  j["nonzero"] = std::move(triples);
  return j;
}

Json classification_to_json(const ClassificationRecord& rec) {
  Json j;
  j["spec"] = rec.spec;
  j["rank"] = rec.rank;
  j["dim"] = rec.dim;
  j["d"] = rec.d;
  j["complex_ok"] = rec.complex_ok;
  j["hyper_ok"] = rec.hyper_ok;
  if (rec.hyper_ok) j["p"] = rec.p;
  if (!rec.notes.empty()) j["notes"] = rec.notes;
  if (!rec.moduli_note.empty()) j["moduli"] = rec.moduli_note;
  return j;
}

Json hyperstructure_to_json(const ReductiveAlgebra& alg, const std::string& spec,
                            const HyperStructure& hs, const Report& certificate) {
  Json j;
  j["version"] = kToolVersion;
  j["spec"] = spec;
  Json rho = Json::object();
  for (size_t k = 0; k < hs.rho.size(); ++k) rho["g" + std::to_string(k + 1)] = kscalar_to_json(hs.rho[k]);
  j["rho"] = std::move(rho);
  j["b"] = matrix_to_json(hs.b);
  Json basis = Json::array();
  for (int i = 0; i < alg.dim(); ++i) basis.push_back(alg.label(i));
  j["basis"] = std::move(basis);
  j["I"] = matrix_to_json(hs.I.mat);
  j["J"] = matrix_to_json(hs.J.mat);
  j["K"] = matrix_to_json(hs.K.mat);
  j["provenance"] = hs.provenance;
  j["report"] = report_to_json(certificate);
  j["status"] = certificate.all_pass() ? 0 : 3;
  return j;
}

LoadedStructure hyperstructure_from_json(const Json& j) {
  LoadedStructure s;
  s.spec = AlgebraSpec::parse(j.at("spec").get<std::string>());
  RootSystem rs = RootSystem::generate(s.spec);
  Stem stem = compute_stem(rs);
  const int dim = rs.n_roots() + rs.rank() + s.spec.center_rank;

  const Json& rho = j.at("rho");
  for (int k = 0; k < stem.size(); ++k) {
    const std::string key = "g" + std::to_string(k + 1);
    if (!rho.contains(key)) throw std::invalid_argument("missing rho entry " + key);
    s.rho.push_back(kscalar_from_json(rho.at(key)));
  }
  const Json& bj = j.at("b");
  const int p = static_cast<int>(bj.size());
  s.b = matrix_from_json(bj, p, p);

  s.I.dim = s.J.dim = s.K.dim = dim;
  s.I.mat = matrix_from_json(j.at("I"), dim, dim);
  s.J.mat = matrix_from_json(j.at("J"), dim, dim);
  s.K.mat = matrix_from_json(j.at("K"), dim, dim);
  return s;
}

} // namespace stemlie
