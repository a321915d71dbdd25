#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "mocklie/document.hpp"

using namespace mocklie;

namespace {

using Json = nlohmann::ordered_json;

// Exit codes: 0 all requested checks pass, 1 a check failed, 2 input
// error. Documents go to stdout, reports and summaries follow --format.
struct Global {
  std::string format = "human";
  long long seed = 1;
  int samples = 8;

  bool structured() const { return format == "structured"; }
};

[[noreturn]] void input_error(const std::string& msg) { throw DocumentError(msg); }

void emit_report(const Global& g, const CheckReport& rep) {
  if (g.structured())
    std::cerr << render_report_json(rep);
  else
    std::cerr << render_report(rep);
}

int report_exit(const Global& g, const CheckReport& rep) {
  emit_report(g, rep);
  return rep.all_pass() ? 0 : 1;
}

void emit_document(const AlgebraDocument& doc, const std::string& out_path) {
  std::string text = render_document(doc);
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) input_error("cannot write \"" + out_path + "\"");
  out << text;
}

PseudoEuclidean require_pe(const AlgebraDocument& doc, const std::string& file) {
  if (!doc.form) input_error(file + ": document has no form");
  return {doc.algebra, *doc.form};
}

const GradedLinearMap& require_map(const AlgebraDocument& doc, const std::string& name,
                                   const std::string& file) {
  auto it = doc.maps.find(name);
  if (it == doc.maps.end()) input_error(file + ": no map named \"" + name + "\"");
  return it->second;
}

const Representation& require_rep(const AlgebraDocument& doc, const std::string& name,
                                  const std::string& file) {
  auto it = doc.representations.find(name);
  if (it == doc.representations.end())
    input_error(file + ": no representation named \"" + name + "\"");
  return it->second;
}

const Cocycle& require_cocycle(const AlgebraDocument& doc, const std::string& name,
                               const std::string& file) {
  auto it = doc.cocycles.find(name);
  if (it == doc.cocycles.end()) input_error(file + ": no cocycle named \"" + name + "\"");
  return it->second;
}

Rational parse_rational_flag(const std::string& text, const std::string& flag) {
  auto r = Rational::parse(text);
  if (!r) input_error(flag + ": malformed rational \"" + text + "\"");
  return *r;
}

Vec parse_vec_flag(const std::string& text, int n, const std::string& flag) {
  if (text.empty()) return zero_vec(n);
  std::vector<std::string> parts;
  std::string part;
  std::istringstream in(text);
  while (std::getline(in, part, ',')) parts.push_back(part);
  if ((int)parts.size() != n)
    input_error(flag + ": expected " + std::to_string(n) + " comma-separated entries");
  Vec v;
  for (const auto& p : parts) v.push_back(parse_rational_flag(p, flag));
  return v;
}

Axiom parse_axiom_flag(const std::string& name) {
  for (Axiom ax : {Axiom::evenness, Axiom::supercommutativity, Axiom::super_jacobi,
                   Axiom::jordan_super, Axiom::associativity})
    if (axiom_name(ax) == name) return ax;
  input_error("unknown axiom \"" + name + "\"");
}

std::string dims_str(const GradedDimension& d) {
  return "(" + std::to_string(d.even) + "|" + std::to_string(d.odd) + ")";
}

Json dims_json(const GradedDimension& d) {
  Json j;
  j["even"] = d.even;
  j["odd"] = d.odd;
  return j;
}

Json entries_json(const Matrix& m) {
  Json entries = Json::array();
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) {
      if (m.at(i, j).is_zero()) continue;
      Json e;
      e["i"] = i;
      e["j"] = j;
      e["c"] = m.at(i, j).str();
      entries.push_back(std::move(e));
    }
  return entries;
}

std::string matrix_entries_str(const Matrix& m) {
  std::string out;
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) {
      if (m.at(i, j).is_zero()) continue;
      if (!out.empty()) out += " ";
      out += "(" + std::to_string(i) + "," + std::to_string(j) + ")=" + m.at(i, j).str();
    }
  return out.empty() ? "zero" : out;
}

Json subspace_json(const Subspace& s) {
  Json j;
  j["dim"] = s.dim();
  Json basis = Json::array();
  for (const Vec& v : s.basis) {
    Json bv = Json::array();
    for (const Rational& c : v) bv.push_back(c.str());
    basis.push_back(std::move(bv));
  }
  j["basis"] = std::move(basis);
  return j;
}

// ------------------------------------------------------------------ check

int run_check(const Global& g, const std::string& file, bool mock_lie,
              const std::string& axioms_csv, bool form_flag) {
  AlgebraDocument doc = load_document(file);
  if (form_flag && !doc.form) input_error(file + ": document has no form");

  CheckReport rep;
  if (!axioms_csv.empty()) {
    std::vector<Axiom> axioms;
    std::string part;
    std::istringstream in(axioms_csv);
    while (std::getline(in, part, ',')) axioms.push_back(parse_axiom_flag(part));
    rep.merge(check_axioms(doc.algebra, axioms));
  } else if (mock_lie) {
    rep.merge(check_mock_lie(doc.algebra));
  } else {
    rep.merge(check_axioms(doc.algebra, {Axiom::evenness, Axiom::supercommutativity,
                                         Axiom::super_jacobi, Axiom::jordan_super}));
    rep.add(check_cube_zero(doc.algebra, g.samples, (uint64_t)g.seed));
    rep.merge(check_squared_identity(doc.algebra, g.samples, (uint64_t)g.seed));
  }

  bool default_suite = axioms_csv.empty() && !mock_lie;
  if (doc.form && (form_flag || default_suite))
    rep.merge(check_form(doc.algebra, *doc.form,
                         {FormProperty::even, FormProperty::supersymmetric,
                          FormProperty::invariant, FormProperty::nondegenerate}));

  if (!g.structured())
    std::cerr << doc.algebra.name << " " << dims_str(doc.algebra.dims) << "\n";
  return report_exit(g, rep);
}

// ------------------------------------------------------------------ props

int run_props(const Global& g, const std::string& file) {
  AlgebraDocument doc = load_document(file);
  const SuperAlgebra& a = doc.algebra;
  Subspace ann = annihilator(a);
  Subspace sq = square_ideal(a);
  Subspace f = compute_F(a);
  int der_even = (int)derivation_space(a, DerivationKind::derivation, Parity::even).size();
  int der_odd = (int)derivation_space(a, DerivationKind::derivation, Parity::odd).size();
  int ader_even = (int)derivation_space(a, DerivationKind::anti_derivation, Parity::even).size();
  int ader_odd = (int)derivation_space(a, DerivationKind::anti_derivation, Parity::odd).size();
  int fader_even = -1, fader_odd = -1;
  if (doc.form) {
    PseudoEuclidean p{a, *doc.form};
    fader_even = (int)ander_s(p, Parity::even).size();
    fader_odd = (int)ander_s(p, Parity::odd).size();
  }

  if (g.structured()) {
    Json j;
    j["name"] = a.name;
    j["dims"] = dims_json(a.dims);
    j["annihilator"] = subspace_json(ann);
    j["square_ideal"] = subspace_json(sq);
    j["F"] = subspace_json(f);
    j["derivations"] = Json{{"even", der_even}, {"odd", der_odd}};
    j["anti_derivations"] = Json{{"even", ader_even}, {"odd", ader_odd}};
    if (doc.form)
      j["form_anti_derivations"] = Json{{"even", fader_even}, {"odd", fader_odd}};
    std::cout << j.dump(2) << "\n";
    return 0;
  }

  std::cout << a.name << " " << dims_str(a.dims) << "\n";
  auto show = [](const char* label, const Subspace& s) {
    std::cout << label << ": dim " << s.dim() << "\n";
    for (const Vec& v : s.basis) std::cout << "  " << vec_str(v) << "\n";
  };
  show("annihilator", ann);
  show("square ideal", sq);
  show("F", f);
  std::cout << "derivations: even " << der_even << ", odd " << der_odd << "\n";
  std::cout << "anti-derivations: even " << ader_even << ", odd " << ader_odd << "\n";
  if (doc.form)
    std::cout << "form anti-derivations: even " << fader_even << ", odd " << fader_odd << "\n";
  return 0;
}

// -------------------------------------------------------------- construct

int emit_algebra(const SuperAlgebra& a, const std::string& out_path) {
  AlgebraDocument doc;
  doc.algebra = a;
  emit_document(doc, out_path);
  return 0;
}

int emit_pe(const PseudoEuclidean& p, const std::string& out_path) {
  AlgebraDocument doc;
  doc.algebra = p.algebra;
  doc.form = p.form;
  emit_document(doc, out_path);
  return 0;
}

// ------------------------------------------------------------- decompose

int run_decompose(const Global& g, const std::string& file) {
  AlgebraDocument doc = load_document(file);
  PseudoEuclidean p = require_pe(doc, file);
  DecompositionTower tower = iterate_decompose(p);

  CheckReport merged;
  for (size_t k = 0; k < tower.steps.size(); ++k)
    merged.merge(tower.steps[k].report, "step" + std::to_string(k + 1) + "_");

  if (g.structured()) {
    Json j;
    Json steps = Json::array();
    for (const auto& step : tower.steps) {
      Json s;
      s["base"] = dims_json(step.data.base.algebra.dims);
      s["lambda"] = step.data.lambda.str();
      Json x0 = Json::array();
      for (const Rational& c : step.data.x0) x0.push_back(c.str());
      s["x0"] = std::move(x0);
      s["d"] = entries_json(step.data.d.mat);
      s["all_pass"] = step.report.all_pass();
      steps.push_back(std::move(s));
    }
    j["steps"] = std::move(steps);
    j["residual"] = dims_json(tower.residual.algebra.dims);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << p.algebra.name << " " << dims_str(p.algebra.dims) << "\n";
    for (size_t k = 0; k < tower.steps.size(); ++k) {
      const auto& step = tower.steps[k];
      std::cout << "step " << (k + 1) << ": base " << dims_str(step.data.base.algebra.dims)
                << ", lambda " << step.data.lambda.str() << ", x0 " << vec_str(step.data.x0)
                << ", d " << matrix_entries_str(step.data.d.mat)
                << (step.report.all_pass() ? "" : " [checks FAILED]") << "\n";
    }
    std::cout << "residual " << dims_str(tower.residual.algebra.dims) << "\n";
  }
  return report_exit(g, merged);
}

// -------------------------------------------------------------- isometry

int run_isometry_map(const Global& g, const std::string& file1, const std::string& file2,
                     const std::string& map_name) {
  AlgebraDocument doc1 = load_document(file1);
  AlgebraDocument doc2 = load_document(file2);
  PseudoEuclidean p1 = require_pe(doc1, file1);
  PseudoEuclidean p2 = require_pe(doc2, file2);
  const GradedLinearMap& psi = require_map(doc1, map_name, file1);
  return report_exit(g, verify_isometry(psi, p1, p2));
}

int run_isometry_witness(const Global& g, const std::string& file, const std::string& d1_name,
                         const std::string& d2_name, const std::string& s_name,
                         const std::string& x01_csv, const std::string& x02_csv,
                         const std::string& z0_csv, const std::string& lambda1_text,
                         const std::string& lambda2_text, const std::string& alpha_text) {
  AlgebraDocument doc = load_document(file);
  PseudoEuclidean base = require_pe(doc, file);
  int n = base.algebra.total();

  GdextData g1{base, require_map(doc, d1_name, file), parse_vec_flag(x01_csv, n, "--x01"),
               parse_rational_flag(lambda1_text, "--lambda1")};
  GdextData g2{base, require_map(doc, d2_name, file), parse_vec_flag(x02_csv, n, "--x02"),
               parse_rational_flag(lambda2_text, "--lambda2")};
  IsometryWitness w{require_map(doc, s_name, file), parse_vec_flag(z0_csv, n, "--z0"),
                    parse_rational_flag(alpha_text, "--alpha")};

  CheckReport rep = check_isometry_conditions(w, g1, g2);
  if (rep.all_pass()) {
    GdextResult r1 = gdext(g1);
    GdextResult r2 = gdext(g2);
    rep.merge(r1.report, "ext1_");
    rep.merge(r2.report, "ext2_");
    GradedLinearMap psi = build_isometry(w, g1, g2);
    rep.merge(verify_isometry(psi, r1.extension, r2.extension), "isometry_");
  }
  return report_exit(g, rep);
}

// ----------------------------------------------------------- intertwiner

int run_intertwiner(const Global& g, const std::string& file) {
  AlgebraDocument doc = load_document(file);
  Representation r1 = adjoint(doc.algebra);
  Representation r2 = coadjoint(doc.algebra);
  IntertwinerSpace space = intertwiner_space(r1, r2);

  bool have_flat = false, flat_in_space = false, flat_invertible = false;
  if (doc.form) {
    PseudoEuclidean p{doc.algebra, *doc.form};
    if (check_pseudo_euclidean(p).all_pass()) {
      GradedLinearMap flat = flat_intertwiner(p);
      have_flat = true;
      std::vector<Vec> flattened;
      for (const auto& b : space.basis) flattened.push_back(b.mat.entries);
      flat_in_space = in_span(flattened, flat.mat.entries);
      flat_invertible = rank(flat.mat) == flat.mat.rows;
    }
  }

  if (g.structured()) {
    Json j;
    j["dim"] = (int)space.basis.size();
    j["invertible_witness"] = space.witness.has_value();
    if (have_flat) {
      j["flat_in_space"] = flat_in_space;
      j["flat_invertible"] = flat_invertible;
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "adjoint vs coadjoint intertwiners: dim " << space.basis.size() << "\n";
    std::cout << "invertible witness: " << (space.witness ? "found" : "not found") << "\n";
    if (have_flat) {
      std::cout << "flat map in space: " << (flat_in_space ? "yes" : "no") << "\n";
      std::cout << "flat map invertible: " << (flat_invertible ? "yes" : "no") << "\n";
    }
  }
  return space.witness ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact structure-constant kernel for mock-Lie superalgebras"};
  app.require_subcommand(1);

  Global g;
  app.add_option("--format", g.format, "output format")
      ->check(CLI::IsMember({"human", "structured"}))
      ->envname("MOCKLIE_FORMAT");
  app.add_option("--seed", g.seed, "seed for sampled checks")->envname("MOCKLIE_SEED");
  app.add_option("--samples", g.samples, "sample count for sampled checks")
      ->envname("MOCKLIE_SAMPLES");

  // check
  auto* check_cmd = app.add_subcommand("check", "verify axioms and form properties");
  check_cmd->fallthrough();
  std::string check_file, check_axioms_csv;
  bool check_mock_lie_flag = false, check_form_flag = false;
  check_cmd->add_option("file", check_file, "algebra document")->required();
  auto* opt_mock = check_cmd->add_flag("--mock-lie", check_mock_lie_flag,
                                       "evenness, supercommutativity, super_jacobi only");
  check_cmd->add_option("--axioms", check_axioms_csv, "comma-separated axiom names")
      ->excludes(opt_mock);
  check_cmd->add_flag("--form", check_form_flag, "include the form property suite");

  // props
  auto* props_cmd = app.add_subcommand("props", "annihilator, square ideal, derivation spaces");
  props_cmd->fallthrough();
  std::string props_file;
  props_cmd->add_option("file", props_file, "algebra document")->required();

  // construct
  auto* construct = app.add_subcommand("construct", "build a derived algebra document");
  construct->fallthrough();
  construct->require_subcommand(1);
  std::string out_path;
  construct->add_option("-o,--output", out_path, "write the document here instead of stdout");

  auto* c_dsum = construct->add_subcommand("direct-sum", "direct sum of two algebras");
  c_dsum->fallthrough();
  std::string dsum_a, dsum_b;
  c_dsum->add_option("first", dsum_a)->required();
  c_dsum->add_option("second", dsum_b)->required();

  auto* c_tensor = construct->add_subcommand(
      "tensor", "tensor with a supercommutative associative algebra");
  c_tensor->fallthrough();
  std::string tensor_j, tensor_a, koszul = "on";
  c_tensor->add_option("algebra", tensor_j)->required();
  c_tensor->add_option("factor", tensor_a)->required();
  c_tensor->add_option("--koszul", koszul, "sign rule for the tensor product")
      ->check(CLI::IsMember({"on", "off", "literal"}))
      ->envname("MOCKLIE_KOSZUL");

  auto* c_semi = construct->add_subcommand("semidirect", "split zero extension by a module");
  c_semi->fallthrough();
  std::string semi_file, semi_rep;
  c_semi->add_option("file", semi_file)->required();
  c_semi->add_option("--rep", semi_rep, "representation name in the document")->required();

  auto* c_cent = construct->add_subcommand("central-ext",
                                           "central extension twisted by a cocycle");
  c_cent->fallthrough();
  std::string cent_file, cent_rep, cent_cocycle;
  c_cent->add_option("file", cent_file)->required();
  c_cent->add_option("--rep", cent_rep, "representation name in the document")->required();
  c_cent->add_option("--cocycle", cent_cocycle, "cocycle name in the document")->required();

  auto* c_tstar = construct->add_subcommand("tstar", "extension by the coadjoint module");
  c_tstar->fallthrough();
  std::string tstar_file, tstar_cocycle;
  c_tstar->add_option("file", tstar_file)->required();
  c_tstar->add_option("--cocycle", tstar_cocycle, "cocycle name, defaults to zero");

  auto* c_dext = construct->add_subcommand("double-ext",
                                           "double extension of a pseudo-euclidean algebra");
  c_dext->fallthrough();
  std::string dext_j1, dext_j2, dext_phi;
  c_dext->add_option("base", dext_j1, "pseudo-euclidean document")->required();
  c_dext->add_option("acting", dext_j2, "acting algebra document")->required();
  c_dext->add_option("--phi", dext_phi, "representation name in the acting document")
      ->required();

  auto* c_gdext = construct->add_subcommand(
      "gdext", "generalized double extension by one odd hyperbolic pair");
  c_gdext->fallthrough();
  std::string gdext_file, gdext_map, gdext_x0, gdext_lambda = "0";
  c_gdext->add_option("file", gdext_file, "pseudo-euclidean document")->required();
  c_gdext->add_option("--map", gdext_map, "odd map name, defaults to zero");
  c_gdext->add_option("--x0", gdext_x0, "comma-separated even annihilator element");
  c_gdext->add_option("--lambda", gdext_lambda, "coefficient of u* in u*u");

  // decompose
  auto* dec_cmd = app.add_subcommand("decompose", "peel off odd hyperbolic pairs");
  dec_cmd->fallthrough();
  std::string dec_file;
  dec_cmd->add_option("file", dec_file, "pseudo-euclidean document")->required();

  // isometry
  auto* iso_cmd = app.add_subcommand("isometry", "verify an isometry map or witness");
  iso_cmd->fallthrough();
  std::vector<std::string> iso_files;
  std::string iso_map, iso_d1, iso_d2, iso_s, iso_x01, iso_x02, iso_z0;
  std::string iso_lambda1 = "0", iso_lambda2 = "0", iso_alpha = "1";
  iso_cmd->add_option("files", iso_files, "one base document, or two documents with --map")
      ->expected(1, 2);
  iso_cmd->add_option("--map", iso_map, "map name in the first document");
  iso_cmd->add_option("--d1", iso_d1, "first odd map name");
  iso_cmd->add_option("--d2", iso_d2, "second odd map name");
  iso_cmd->add_option("--s", iso_s, "base isometry map name");
  iso_cmd->add_option("--x01", iso_x01, "first even annihilator element");
  iso_cmd->add_option("--x02", iso_x02, "second even annihilator element");
  iso_cmd->add_option("--z0", iso_z0, "even annihilator shift");
  iso_cmd->add_option("--lambda1", iso_lambda1);
  iso_cmd->add_option("--lambda2", iso_lambda2);
  iso_cmd->add_option("--alpha", iso_alpha, "nonzero scale");

  // intertwiner
  auto* int_cmd = app.add_subcommand("intertwiner", "adjoint vs coadjoint intertwiners");
  int_cmd->fallthrough();
  std::string int_file;
  int_cmd->add_option("file", int_file, "algebra document")->required();

  try {
    app.parse(argc, argv);

    if (*check_cmd)
      return run_check(g, check_file, check_mock_lie_flag, check_axioms_csv, check_form_flag);
    if (*props_cmd) return run_props(g, props_file);

    if (*c_dsum)
      return emit_algebra(
          direct_sum(load_document(dsum_a).algebra, load_document(dsum_b).algebra), out_path);
    if (*c_tensor)
      return emit_algebra(
          tensor_assoc(load_document(tensor_j).algebra, load_document(tensor_a).algebra,
                       koszul == "on" ? KoszulMode::on : KoszulMode::off),
          out_path);
    if (*c_semi) {
      AlgebraDocument doc = load_document(semi_file);
      return emit_algebra(
          semidirect_product(doc.algebra, require_rep(doc, semi_rep, semi_file)), out_path);
    }
    if (*c_cent) {
      AlgebraDocument doc = load_document(cent_file);
      return emit_algebra(central_extension(doc.algebra, require_rep(doc, cent_rep, cent_file),
                                            require_cocycle(doc, cent_cocycle, cent_file)),
                          out_path);
    }
    if (*c_tstar) {
      AlgebraDocument doc = load_document(tstar_file);
      Cocycle w;
      if (tstar_cocycle.empty()) {
        w.algebra_dims = doc.algebra.dims;
        w.module = doc.algebra.dims;
      } else {
        w = require_cocycle(doc, tstar_cocycle, tstar_file);
      }
      TstarExtension ext = tstar_extension(doc.algebra, w);
      int rc = report_exit(g, ext.report);
      emit_pe({ext.algebra, ext.form}, out_path);
      return rc;
    }
    if (*c_dext) {
      AlgebraDocument doc1 = load_document(dext_j1);
      AlgebraDocument doc2 = load_document(dext_j2);
      DoubleExtensionInput in;
      in.j1 = require_pe(doc1, dext_j1);
      in.j2 = doc2.algebra;
      in.phi = require_rep(doc2, dext_phi, dext_j2).action;
      if (doc2.form) {
        in.sigma = *doc2.form;
      } else {
        in.sigma.dims = in.j2.dims;
        in.sigma.gram = Matrix(in.j2.total(), in.j2.total());
      }
      return emit_pe(double_extension(in), out_path);
    }
    if (*c_gdext) {
      AlgebraDocument doc = load_document(gdext_file);
      GdextData data;
      data.base = require_pe(doc, gdext_file);
      data.d = gdext_map.empty()
                   ? zero_map(data.base.algebra.dims, data.base.algebra.dims, Parity::odd)
                   : require_map(doc, gdext_map, gdext_file);
      data.x0 = parse_vec_flag(gdext_x0, data.base.algebra.total(), "--x0");
      data.lambda = parse_rational_flag(gdext_lambda, "--lambda");
      GdextResult r = gdext(data);
      int rc = report_exit(g, r.report);
      emit_pe(r.extension, out_path);
      return rc;
    }

    if (*dec_cmd) return run_decompose(g, dec_file);

    if (*iso_cmd) {
      if (iso_files.size() == 2) {
        if (iso_map.empty()) input_error("two documents require --map");
        return run_isometry_map(g, iso_files[0], iso_files[1], iso_map);
      }
      if (iso_files.size() != 1) input_error("isometry needs one or two documents");
      if (iso_d1.empty() || iso_d2.empty() || iso_s.empty())
        input_error("witness mode requires --d1, --d2 and --s");
      return run_isometry_witness(g, iso_files[0], iso_d1, iso_d2, iso_s, iso_x01, iso_x02,
                                  iso_z0, iso_lambda1, iso_lambda2, iso_alpha);
    }

    if (*int_cmd) return run_intertwiner(g, int_file);

    return 2;
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
