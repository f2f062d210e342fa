#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "stemlie/json_io.hpp"

namespace {

using namespace stemlie;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitObstruction = 2;
constexpr int kExitVerifyFail = 3;

struct Output {
  std::string format = "text";
  std::string path;

  void emit(const Json& j, const std::string& text) const {
    std::string payload = format == "json" ? j.dump(2) + "\n" : text;
    if (path.empty()) {
      std::cout << payload;
    } else {
      std::ofstream f(path);
      f << payload;
    }
  }
};

std::string spec_component_emodel(const RootSystem& rs, const Root& r) {
  // e-model coordinates of a root inside its irreducible component.
  const auto& spec = rs.spec();
  const int idx = rs.index_of(r);
  const int comp = rs.component_of(idx);
  int offset = 0;
  for (int c = 0; c < comp; ++c) offset += spec.components[c].rank;
  std::vector<int> sub(r.coords.begin() + offset,
                       r.coords.begin() + offset + spec.components[comp].rank);
  return emodel_to_string(emodel_vector(spec.components[comp], sub));
}

std::string coords_str(const Root& r) {
  std::string s = "(";
  for (size_t i = 0; i < r.coords.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(r.coords[i]);
  }
  return s + ")";
}

std::string report_text(const Report& rep) {
  std::string s;
  for (const auto& c : rep.checks) {
    s += (c.pass ? "PASS " : "FAIL ") + c.name;
    if (!c.detail.empty()) s += "  [" + c.detail + "]";
    s += "\n";
  }
  return s;
}

std::vector<KScalar> parse_rho_flags(const std::vector<std::string>& flags, int d) {
  std::vector<KScalar> rho(d, KScalar::one());
  for (const auto& f : flags) {
    auto eq = f.find('=');
    if (eq == std::string::npos || f.substr(0, 1) != "g")
      throw std::invalid_argument("bad --rho value, expected g<k>=<1|i|-1|-i>: " + f);
    const int k = std::stoi(f.substr(1, eq - 1));
    if (k < 1 || k > d) throw std::invalid_argument("rho index out of range: " + f);
    const std::string v = f.substr(eq + 1);
    if (v == "1")
      rho[k - 1] = KScalar::one();
    else if (v == "-1")
      rho[k - 1] = KScalar(-1);
    else if (v == "i")
      rho[k - 1] = KScalar::i();
    else if (v == "-i")
      rho[k - 1] = -KScalar::i();
    else
      throw std::invalid_argument("rho must be one of 1, i, -1, -i: " + f);
  }
  return rho;
}

int cmd_roots(const std::string& spec_text, const Output& out) {
  RootSystem rs = RootSystem::generate(AlgebraSpec::parse(spec_text));
  std::string text = "root system " + rs.spec().to_string() + ": " + std::to_string(rs.n_roots()) +
                     " roots, " + std::to_string(rs.n_positive()) + " positive\n";
  for (int i = 0; i < rs.n_positive(); ++i)
    text += "  " + coords_str(rs.root(i)) + "  " + spec_component_emodel(rs, rs.root(i)) + "\n";
  out.emit(roots_to_json(rs), text);
  return kExitOk;
}

int cmd_stem(const std::string& spec_text, const Output& out) {
  RootSystem rs = RootSystem::generate(AlgebraSpec::parse(spec_text));
  Stem stem = compute_stem(rs);
  std::string text = "stem of " + rs.spec().to_string() + ": d = " + std::to_string(stem.size()) + "\n";
  for (int k = 0; k < stem.size(); ++k) {
    const Root g = rs.root(stem.gammas[k]);
    text += "  gamma_" + std::to_string(k + 1) + " = " + coords_str(g) + "  " +
            spec_component_emodel(rs, g) + "  |branch| = " + std::to_string(stem.branches[k].size()) +
            "\n";
  }
  out.emit(stem_to_json(rs, stem), text);
  return kExitOk;
}

int cmd_constants(const std::string& spec_text, const Output& out) {
  RootSystem rs = RootSystem::generate(AlgebraSpec::parse(spec_text));
  StructureConstants sc = StructureConstants::compute(rs);
  int nonzero = 0;
  for (int a = 0; a < sc.n_roots(); ++a)
    for (int b = 0; b < sc.n_roots(); ++b)
      if (sc.N(a, b) != 0) ++nonzero;
  std::string text = "structure constants of " + rs.spec().to_string() + ": " +
                     std::to_string(nonzero) + " nonzero entries\n";
  out.emit(constants_to_json(rs, sc), text);
  return kExitOk;
}

int cmd_classify(const std::string& spec_text, const Output& out) {
  ClassificationRecord rec = classify_algebra(AlgebraSpec::parse(spec_text));
  std::string text = rec.spec + ": rank = " + std::to_string(rec.rank) +
                     ", dim = " + std::to_string(rec.dim) + ", d = " + std::to_string(rec.d) + "\n";
  text += std::string("  complex structures: ") + (rec.complex_ok ? "yes" : "no") + "\n";
  text += std::string("  hypercomplex structures: ") + (rec.hyper_ok ? "yes" : "no");
  if (rec.hyper_ok) text += " (p = " + std::to_string(rec.p) + ")";
  if (!rec.notes.empty()) text += "  [" + rec.notes + "]";
  text += "\n";
  if (!rec.moduli_note.empty()) text += "  " + rec.moduli_note + "\n";
  out.emit(classification_to_json(rec), text);
  return rec.hyper_ok ? kExitOk : kExitObstruction;
}

int cmd_build(const std::string& spec_text, const std::vector<std::string>& rho_flags,
              const std::string& b_source, const Output& out) {
  AlgebraSpec spec = AlgebraSpec::parse(spec_text);
  ClassificationRecord rec = classify_algebra(spec);
  if (!rec.hyper_ok) {
    std::cerr << "obstruction: " << rec.notes << "\n";
    return kExitObstruction;
  }
  RootSystem rs = RootSystem::generate(spec);
  StructureConstants sc = StructureConstants::compute(rs);
  ReductiveAlgebra alg(rs, sc);
  Stem stem = compute_stem(alg.rs());
  std::vector<KScalar> rho = parse_rho_flags(rho_flags, stem.size());
  StemFrame frame = stem_frame(alg, stem, rho);

  KMatrix b;
  if (b_source == "default") {
    b = default_b_matrix(rec.p);
  } else {
    std::ifstream f(b_source);
    if (!f) throw std::invalid_argument("cannot open b-matrix file: " + b_source);
    Json j = Json::parse(f);
    b = matrix_from_json(j, rec.p, rec.p);
  }

  ComplexStructureI I = build_I_canonical(alg, stem, frame);
  Report certificate;
  auto adm = check_admissible(alg, stem, frame, I);
  certificate.add("admissibility", adm.ok, adm.reason);
  certificate.merge(verify_stem_axioms(alg.rs(), stem), "stem_");
  certificate.merge(heisenberg_check(alg, stem));

  HyperStructure direct = build_J_direct(alg, stem, frame, I, b);
  HyperStructure cayley = build_J_cayley(alg, stem, frame, I, b);
  certificate.add("direct_cayley_agreement", direct.J == cayley.J);
  certificate.merge(direct.report);
  auto [blocks, block_report] = extract_matching_blocks(alg, stem, frame, I, direct.J);
  certificate.merge(block_report);

  std::string text = "built hypercomplex structure on " + rec.spec + " (dim " +
                     std::to_string(rec.dim) + ", d = " + std::to_string(rec.d) +
                     ", p = " + std::to_string(rec.p) + ")\n" + report_text(certificate);
  out.emit(hyperstructure_to_json(alg, rec.spec, direct, certificate), text);
  return certificate.all_pass() ? kExitOk : kExitVerifyFail;
}

int cmd_verify(const std::string& path, const Output& out) {
  std::ifstream f(path);
  if (!f) {
    std::cerr << "cannot open " << path << "\n";
    return kExitUsage;
  }
  Json j;
  try {
    j = Json::parse(f);
  } catch (const std::exception& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  }
  LoadedStructure loaded;
  try {
    loaded = hyperstructure_from_json(j);
  } catch (const std::exception& e) {
    std::cerr << "invalid structure file: " << e.what() << "\n";
    return kExitUsage;
  }

  RootSystem rs = RootSystem::generate(loaded.spec);
  StructureConstants sc = StructureConstants::compute(rs);
  ReductiveAlgebra alg(rs, sc);
  Stem stem = compute_stem(alg.rs());
  StemFrame frame;
  try {
    frame = stem_frame(alg, stem, loaded.rho);
  } catch (const std::exception& e) {
    std::cerr << "invalid rho: " << e.what() << "\n";
    return kExitUsage;
  }

  Report report;
  HyperStructure hs;
  hs.I = loaded.I;
  hs.J = loaded.J;
  hs.K = loaded.K;
  hs.rho = loaded.rho;
  hs.b = loaded.b;
  report.merge(verify_hypercomplex(alg, stem, frame, hs));

  // Reconstruct the Cartan-side data of I from scratch and re-run the
  // matched-block analysis.
  try {
    ComplexStructureI I;
    I.op = loaded.I;
    const int d = stem.size();
    const int rank = alg.rank();
    const int p = (rank - 2 * d) / 2;
    I.p = p;
    for (int k = 0; k < d; ++k) I.Z.push_back(I.op.apply(alg, frame.W[k]));
    auto adm = check_admissible(alg, stem, frame, I);
    report.add("admissibility", adm.ok, adm.reason);

    // j+ = { H in h+ : gamma(H) = 0 } via a stacked kernel computation.
    const int dim = alg.dim();
    KMatrix stacked = I.op.mat;
    for (int i = 0; i < dim; ++i) stacked[i][i] -= KScalar::i();
    for (int r = 0; r < alg.n_roots(); ++r) {
      std::vector<KScalar> row(dim);
      row[r] = KScalar::one();
      stacked.push_back(std::move(row));
    }
    for (int k = 0; k < d; ++k) {
      std::vector<KScalar> row(dim);
      for (int i = 0; i < rs.rank(); ++i)
        row[alg.h_index(i)] = KScalar(sc.cartan_on_simple(stem.gammas[k], i));
      stacked.push_back(std::move(row));
    }
    auto jplus = k_kernel_basis(stacked);
    if (static_cast<int>(jplus.size()) != p)
      throw std::domain_error("reconstructed j+ has wrong dimension");
    for (int k = 0; k < d; ++k)
      I.hplus_basis.push_back(frame.W[k] - I.Z[k].scaled(KScalar::i()));
    for (auto& v : jplus) {
      Element s = Element::from_dense(v);
      I.S_basis.push_back(s);
      I.hplus_basis.push_back(s);
    }
    auto [blocks, block_report] = extract_matching_blocks(alg, stem, frame, I, loaded.J);
    report.merge(block_report);
  } catch (const std::exception& e) {
    report.add("matching_blocks", false, e.what());
  }

  Json cert;
  cert["version"] = kToolVersion;
  cert["spec"] = loaded.spec.to_string();
  cert["report"] = report_to_json(report);
  cert["status"] = report.all_pass() ? 0 : kExitVerifyFail;
  out.emit(cert, report_text(report));
  return report.all_pass() ? kExitOk : kExitVerifyFail;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact stems, Chevalley constants and hypercomplex structures on compact Lie algebras"};
  app.require_subcommand(1);

  Output out;
  app.add_option("--format", out.format, "output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--out", out.path, "write output to file");

  std::string spec_text, verify_path, b_source = "default";
  std::vector<std::string> rho_flags;

  auto* roots = app.add_subcommand("roots", "generate a root system");
  roots->add_option("spec", spec_text)->required();
  auto* stem = app.add_subcommand("stem", "compute the stem of the positive system");
  stem->add_option("spec", spec_text)->required();
  auto* constants = app.add_subcommand("constants", "compute Chevalley structure constants");
  constants->add_option("spec", spec_text)->required();
  auto* classify = app.add_subcommand("classify", "decide existence of hypercomplex structures");
  classify->add_option("spec", spec_text)->required();
  auto* build = app.add_subcommand("build", "construct and verify the canonical structure");
  build->add_option("spec", spec_text)->required();
  build->add_option("--rho", rho_flags, "torus parameter overrides, e.g. g1=i");
  build->add_option("--b", b_source, "b-matrix source: 'default' or a JSON file path");
  auto* verify = app.add_subcommand("verify", "re-verify a structure file from scratch");
  verify->add_option("file", verify_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (roots->parsed()) return cmd_roots(spec_text, out);
    if (stem->parsed()) return cmd_stem(spec_text, out);
    if (constants->parsed()) return cmd_constants(spec_text, out);
    if (classify->parsed()) return cmd_classify(spec_text, out);
    if (build->parsed()) return cmd_build(spec_text, rho_flags, b_source, out);
    if (verify->parsed()) return cmd_verify(verify_path, out);
  } catch (const std::domain_error& e) {
    std::cerr << "obstruction: " << e.what() << "\n";
    return kExitObstruction;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
