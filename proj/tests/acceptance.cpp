// Acceptance runner: one verdict line per criterion on stdout, exit 0
// only when every criterion holds. Each criterion rebuilds its own
// inputs from fixed seeds so the run is self-contained and repeatable.
#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <exception>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "generators.hpp"
#include "mocklie/catalog.hpp"
#include "mocklie/document.hpp"
#include "oracle.hpp"

using namespace mocklie;

namespace {

struct Verdict {
  bool pass = false;
  std::string detail;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string fixture(const std::string& name) {
  return std::string(MOCKLIE_SOURCE_DIR) + "/fixtures/" + name;
}

std::string golden(const std::string& name) {
  return read_file(std::string(MOCKLIE_SOURCE_DIR) + "/tests/golden/" + name);
}

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

RunResult run_cli(const std::string& args) {
  static int counter = 0;
  std::string tag = "/tmp/mocklie_accept_" + std::to_string(getpid()) + "_" +
                    std::to_string(counter++);
  std::string cmd = std::string(MOCKLIE_BIN) + " " + args + " > " + tag + ".out 2> " +
                    tag + ".err";
  int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = read_file(tag + ".out");
  r.err = read_file(tag + ".err");
  std::remove((tag + ".out").c_str());
  std::remove((tag + ".err").c_str());
  return r;
}

// Extension data families over small bases. family_split: D swaps one
// hyperbolic even leg with one symplectic odd leg; it kills e1, so x0
// may sit on e1. family_rotate: D(e1) = c e3, D(e2) = -c e0; kills e0.
// family_square: base without odd part, so D = 0 and x0 sits on the
// annihilator vector e1.
GradedLinearMap split_d(const Rational& c) {
  GradedLinearMap d(GradedDimension{2, 2}, GradedDimension{2, 2}, Parity::odd);
  d.mat.at(2, 0) = c;
  d.mat.at(1, 3) = c;
  return d;
}

GdextData family_split(const Rational& c, const Rational& x0_coeff, const Rational& lambda) {
  GdextData g;
  g.base = make_abelian_pe(1, 1);
  g.d = split_d(c);
  g.x0 = x0_coeff * basis_vec(4, 1);
  g.lambda = lambda;
  return g;
}

GdextData family_rotate(const Rational& c, const Rational& x0_coeff, const Rational& lambda) {
  GdextData g;
  g.base = make_abelian_pe(1, 1);
  g.d = GradedLinearMap(GradedDimension{2, 2}, GradedDimension{2, 2}, Parity::odd);
  g.d.mat.at(3, 1) = c;
  g.d.mat.at(0, 2) = -c;
  g.x0 = x0_coeff * basis_vec(4, 0);
  g.lambda = lambda;
  return g;
}

GdextData family_square(const Rational& x0_coeff, const Rational& lambda) {
  GdextData g;
  g.base = make_e2_hyperbolic();
  g.d = zero_map(GradedDimension{2, 0}, GradedDimension{2, 0}, Parity::odd);
  g.x0 = x0_coeff * basis_vec(2, 1);
  g.lambda = lambda;
  return g;
}

std::vector<GradedLinearMap> square_zero_members(const PseudoEuclidean& p, Parity degree) {
  std::vector<GradedLinearMap> out;
  int n = p.algebra.total();
  for (const GradedLinearMap& m : ander_s(p, degree))
    if (mat_mul(m.mat, m.mat) == Matrix(n, n)) out.push_back(m);
  return out;
}

// Criterion 1: on random structure-constant tables, the axiom checks
// agree with a brute-force evaluator that expands every identity on all
// basis tuples and shares no code with the library.
Verdict criterion1() {
  Lcg rng(101);
  const std::vector<Axiom> axioms = {Axiom::evenness, Axiom::supercommutativity,
                                     Axiom::super_jacobi, Axiom::jordan_super};
  int tables = 0, disagreements = 0;
  while (tables < 60) {
    GradedDimension dims{(int)(rng.next_u64() % 4), (int)(rng.next_u64() % 4)};
    if (dims.total() == 0) continue;
    SuperAlgebra a = gen::random_table(rng, dims, 120 + (int)(rng.next_u64() % 280));
    ++tables;
    CheckReport rep = check_axioms(a, axioms);
    if (rep.passed("evenness") != oracle::evenness(a)) ++disagreements;
    if (rep.passed("supercommutativity") != oracle::supercommutativity(a)) ++disagreements;
    if (rep.passed("super_jacobi") != oracle::super_jacobi(a)) ++disagreements;
    if (rep.passed("jordan_super") != oracle::jordan_super(a)) ++disagreements;
  }
  std::ostringstream d;
  d << tables << " random tables at dims <= (3|3), 4 axioms each against the literal "
    << "expansion, " << disagreements << " disagreements";
  return {disagreements == 0, d.str()};
}

// Criterion 2: everything that passes supercommutativity and the super
// Jacobi identity also satisfies the derived identities (the four
// variable identity, vanishing cubes, the squared-element identity).
Verdict criterion2() {
  std::vector<SuperAlgebra> sources = {
      make_e2(),      make_h3(),          make_abelian({1, 2}),
      make_g2(1),     make_g2(0),         make_grassmann1(),
      make_s2().algebra, make_e2_hyperbolic().algebra, make_d4().algebra};
  for (int i = 0; i < 8; ++i) sources.push_back(gen::valid_algebra(i));
  Lcg rng(202);
  int random_count = 0;
  while (random_count < 60) {
    GradedDimension dims{(int)(rng.next_u64() % 4), (int)(rng.next_u64() % 4)};
    if (dims.total() == 0) continue;
    sources.push_back(gen::random_table(rng, dims, 120));
    ++random_count;
  }
  int qualified = 0, violations = 0;
  for (const SuperAlgebra& a : sources) {
    if (!check_axiom(a, Axiom::supercommutativity).pass) continue;
    if (!check_axiom(a, Axiom::super_jacobi).pass) continue;
    ++qualified;
    bool ok = check_axiom(a, Axiom::jordan_super).pass && check_cube_zero(a, 8, 11).pass &&
              check_squared_identity(a, 8, 11).all_pass();
    if (!ok) ++violations;
  }
  std::ostringstream d;
  d << sources.size() << " algebras scanned, " << qualified
    << " pass supercommutativity and the super Jacobi identity, " << violations
    << " of those violate a derived identity";
  return {qualified >= 10 && violations == 0, d.str()};
}

// Criterion 3: the semidirect product is a valid algebra exactly when
// the action is a valid representation, over valid and tampered actions.
Verdict criterion3() {
  int pairs = 0, agreements = 0, valid_pairs = 0, broken_pairs = 0;
  auto consider = [&](const SuperAlgebra& a, const Representation& r) {
    bool rep_ok = check_representation(r).all_pass();
    bool ext_ok = check_mock_lie(semidirect_product(a, r)).all_pass();
    ++pairs;
    if (rep_ok == ext_ok) ++agreements;
    if (rep_ok)
      ++valid_pairs;
    else
      ++broken_pairs;
  };
  for (int i = 0; i < 8; ++i) {
    SuperAlgebra a = gen::valid_algebra(i);
    consider(a, adjoint(a));
  }
  for (int i = 0; i < 4; ++i) {
    SuperAlgebra a = gen::valid_algebra(i);
    consider(a, coadjoint(a));
  }
  Lcg rng(303);
  for (int i = 0; i < 8; ++i) {
    SuperAlgebra a = gen::valid_algebra(i);
    Representation r = adjoint(a);
    int op = (int)(rng.next_u64() % r.action.size());
    int slot = (int)(rng.next_u64() % a.total());
    r.action[op].at(slot, slot) += Rational(1 + (int)(rng.next_u64() % 3));
    consider(a, r);
  }
  for (int i : {1, 2, 5, 7}) {
    SuperAlgebra a = gen::valid_algebra(i);
    Representation r = adjoint(a);
    r.action[0].at(a.dims.even, 0) += 1;
    consider(a, r);
  }
  std::ostringstream d;
  d << pairs << " algebra/action pairs (" << valid_pairs << " valid, " << broken_pairs
    << " broken), product validity agreed with the representation check on " << agreements;
  return {pairs >= 20 && agreements == pairs && valid_pairs > 0 && broken_pairs > 0, d.str()};
}

// Criterion 4: central extensions are valid exactly when the cocycle
// conditions hold, and on dual extensions invariance of the hyperbolic
// form is equivalent to the cyclic evaluation condition.
Verdict criterion4() {
  Lcg rng(404);
  int ce_count = 0, ce_agree = 0, ce_valid = 0, ce_broken = 0;
  for (int i : {0, 1, 2, 3}) {
    SuperAlgebra a = gen::valid_algebra(i);
    Representation r = adjoint(a);
    for (int k = 0; k < 6; ++k) {
      Cocycle w = k < 3 ? gen::sample_valid_cocycle(rng, a, r)
                        : gen::random_even_cocycle(rng, a.dims, r.module);
      bool cocycle_ok = check_cocycle(a, r, w).all_pass();
      bool ext_ok = check_mock_lie(central_extension(a, r, w)).all_pass();
      ++ce_count;
      if (cocycle_ok == ext_ok) ++ce_agree;
      if (cocycle_ok)
        ++ce_valid;
      else
        ++ce_broken;
    }
  }

  int ts_count = 0, ts_agree = 0, ts_entry = 0, ts_invariant = 0, ts_not = 0;
  auto consider = [&](const SuperAlgebra& a, const Cocycle& w) {
    TstarExtension t = tstar_extension(a, w);
    bool invariant = t.report.passed("form_invariant");
    bool supercyclic = t.report.passed("supercyclic_values");
    ++ts_count;
    if (invariant == supercyclic) ++ts_agree;
    if (t.report.passed("invariance_iff_supercyclic")) ++ts_entry;
    if (invariant)
      ++ts_invariant;
    else
      ++ts_not;
  };
  for (int i : {0, 1, 2}) {
    SuperAlgebra a = gen::valid_algebra(i);
    Representation co = coadjoint(a);
    consider(a, Cocycle{a.dims, a.dims, {}});
    for (int k = 0; k < 2; ++k) consider(a, gen::sample_valid_cocycle(rng, a, co));
    for (int k = 0; k < 4; ++k) consider(a, gen::random_even_cocycle(rng, a.dims, a.dims));
  }
  // Closed but not supercyclic, so invariance has to drop out with it.
  Cocycle skew{GradedDimension{2, 0}, GradedDimension{2, 0}, {}};
  skew.values[{0, 0}] = Vec{Rational(0), Rational(1)};
  skew.values[{0, 1}] = Vec{Rational(-1), Rational(0)};
  skew.values[{1, 0}] = Vec{Rational(-1), Rational(0)};
  consider(make_e2(), skew);

  bool pass = ce_count >= 20 && ce_agree == ce_count && ce_valid > 0 && ce_broken > 0 &&
              ts_count >= 20 && ts_agree == ts_count && ts_entry == ts_count &&
              ts_invariant > 0 && ts_not > 0;
  std::ostringstream d;
  d << "central extensions: " << ce_agree << "/" << ce_count << " agreements (" << ce_valid
    << " valid, " << ce_broken << " broken cocycles); dual extensions: " << ts_agree << "/"
    << ts_count << " invariance/supercyclic agreements (" << ts_invariant << " invariant, "
    << ts_not << " not)";
  return {pass, d.str()};
}

// Criterion 5: structure of valid pseudo-euclidean algebras: Ann is the
// complement of the square ideal, complements of ideals are ideals that
// multiply to zero against them, the odd part has even dimension and
// meets the annihilator when nonzero, and the flat map of the form is
// an invertible member of the adjoint/coadjoint intertwiner space.
Verdict criterion5() {
  std::vector<PseudoEuclidean> fixtures = {make_e2_hyperbolic(), make_s2(), make_d4(),
                                           make_abelian_pe(1, 1), make_abelian_pe(0, 2)};
  fixtures.push_back(gdext(family_split(1, 0, 0)).extension);
  int checked = 0, failures = 0;
  std::ostringstream notes;
  for (const PseudoEuclidean& p : fixtures) {
    if (!check_pseudo_euclidean(p).all_pass()) {
      ++failures;
      notes << " [" << p.algebra.name << ": not pseudo-euclidean]";
      continue;
    }
    ++checked;
    bool ok = check_ann_equals_square_perp(p).all_pass();
    Subspace whole{p.algebra.dims, {}};
    for (int i = 0; i < p.algebra.total(); ++i)
      whole.basis.push_back(basis_vec(p.algebra.total(), i));
    for (const Subspace& ideal : {square_ideal(p.algebra), annihilator(p.algebra), whole}) {
      ok = ok && is_ideal(p.algebra, ideal);
      ok = ok && check_perp_ideal_properties(p, ideal).all_pass();
    }
    ok = ok && p.algebra.dims.odd % 2 == 0;
    ok = ok && check_odd_annihilator(p).all_pass();
    GradedLinearMap flat = flat_intertwiner(p);
    IntertwinerSpace space = intertwiner_space(adjoint(p.algebra), coadjoint(p.algebra));
    std::vector<Vec> flattened;
    for (const GradedLinearMap& b : space.basis) flattened.push_back(b.mat.entries);
    ok = ok && in_span(flattened, flat.mat.entries) && rank(flat.mat) == p.algebra.total();
    if (!ok) {
      ++failures;
      notes << " [" << p.algebra.name << ": structure check failed]";
    }
  }
  std::ostringstream d;
  d << checked << " pseudo-euclidean algebras, 3 ideals each, every orthogonality and "
    << "intertwiner property holds" << notes.str();
  return {failures == 0 && checked == (int)fixtures.size(), d.str()};
}

// Criterion 6: the two-sided double extension produces a valid
// pseudo-euclidean algebra on the bundled fixture and on randomized
// inputs assembled from square-zero form-compatible anti-derivations.
Verdict criterion6() {
  int built = 0, failures = 0;
  if (!check_pseudo_euclidean(make_d4()).all_pass()) ++failures;

  Lcg rng(606);
  auto nonzero = [&rng]() {
    Rational c(rng.next_int());
    return c.is_zero() ? Rational(1) : c;
  };
  struct Combo {
    PseudoEuclidean j1;
    GradedDimension j2_dims;
    Parity degree;
  };
  const Combo combos[] = {
      {make_abelian_pe(1, 1), {1, 0}, Parity::even},
      {make_abelian_pe(1, 1), {2, 0}, Parity::even},
      {make_abelian_pe(1, 1), {0, 1}, Parity::odd},
      {make_e2_hyperbolic(), {1, 0}, Parity::even},
      {make_abelian_pe(2, 0), {1, 0}, Parity::even},
      {make_abelian_pe(2, 0), {2, 0}, Parity::even},
  };
  for (int t = 0; t < 12; ++t) {
    const Combo& combo = combos[t % 6];
    std::vector<GradedLinearMap> pool = square_zero_members(combo.j1, combo.degree);
    GradedLinearMap seed =
        pool.empty() ? (combo.degree == Parity::odd
                            ? split_d(1)
                            : zero_map(combo.j1.algebra.dims, combo.j1.algebra.dims,
                                       Parity::even))
                     : pool[(size_t)(rng.next_u64() % pool.size())];
    DoubleExtensionInput x;
    x.j1 = combo.j1;
    x.j2 = make_abelian(combo.j2_dims, "g");
    for (int a = 0; a < combo.j2_dims.total(); ++a)
      x.phi.push_back(mat_scale(nonzero(), seed.mat));
    x.sigma.dims = combo.j2_dims;
    x.sigma.gram = Matrix(combo.j2_dims.total(), combo.j2_dims.total());
    for (int a = 0; a < combo.j2_dims.even; ++a)
      for (int b = a; b < combo.j2_dims.even; ++b) {
        Rational v = rng.next_rational();
        x.sigma.gram.at(a, b) = v;
        x.sigma.gram.at(b, a) = v;
      }
    if (!check_double_extension_input(x).all_pass()) {
      ++failures;
      continue;
    }
    PseudoEuclidean res = double_extension(x);
    ++built;
    if (!check_pseudo_euclidean(res).all_pass()) ++failures;
  }
  std::ostringstream d;
  d << "fixture plus " << built
    << " randomized inputs all produce algebras passing the full axiom and form suite, "
    << failures << " failures";
  return {built >= 10 && failures == 0, d.str()};
}

// Criterion 7: the one-dimensional odd double extension, clause by
// clause over valid data with and without the obstructed scalars.
Verdict criterion7() {
  std::vector<GdextData> draws = {
      family_split(1, 0, 0),    family_split(2, 0, 0),  family_rotate(1, 0, 0),
      family_square(0, 0),      family_split(1, 1, 0),  family_split(-2, 3, 0),
      family_rotate(2, 1, 0),   family_square(1, 0),    family_split(1, 0, 1),
      family_rotate(1, 0, -2),  family_square(0, 5),    family_split(3, 2, 1),
      family_rotate(-1, -1, 4), family_square(2, -3),
  };
  int invalid = 0, jacobi_failures = 0, gram_failures = 0;
  int invariance_failures = 0, invariance_zero_failures = 0;
  int iff_failures = 0, witness_failures = 0, nonzero_draws = 0;
  for (const GdextData& g : draws) {
    if (!check_gdext_data(g).all_pass()) {
      ++invalid;
      continue;
    }
    bool zero_data = is_zero(g.x0) && g.lambda.is_zero();
    GdextResult res = gdext(g);
    const CheckReport& rep = res.report;
    if (!rep.passed("super_jacobi")) ++jacobi_failures;
    if (!(rep.passed("form_even") && rep.passed("form_supersymmetric") &&
          rep.passed("form_nondegenerate")))
      ++gram_failures;
    if (!rep.passed("form_invariant")) {
      if (zero_data)
        ++invariance_zero_failures;
      else
        ++invariance_failures;
    }
    if (rep.passed("supercommutativity") != zero_data) ++iff_failures;
    if (!zero_data) {
      ++nonzero_draws;
      BlockLayout lay = gdext_layout(g.base.algebra.dims);
      int u = lay.global_index(0, 0);
      int ustar = lay.global_index(2, 0);
      Vec expected = Rational(2) * lay.embed(1, g.x0) +
                     (Rational(2) * g.lambda) *
                         basis_vec(g.base.algebra.total() + 2, ustar);
      const CheckEntry* sc = rep.find("supercommutativity");
      bool witnessed = sc && !sc->pass && sc->witness == std::vector<int>{u, u} &&
                       sc->defect == expected;
      if (!witnessed) ++witness_failures;
    }
  }
  int n = (int)draws.size() - invalid;
  bool clause_invariance = invariance_failures == 0 && invariance_zero_failures == 0;
  bool pass = n >= 10 && invalid == 0 && jacobi_failures == 0 && gram_failures == 0 &&
              clause_invariance && iff_failures == 0 && witness_failures == 0 &&
              nonzero_draws > 0;
  std::ostringstream d;
  d << n << " valid data sets (" << nonzero_draws << " with nonzero (x0, lambda)): "
    << "super_jacobi " << n - jacobi_failures << "/" << n
    << ", even+supersymmetric+nondegenerate " << n - gram_failures << "/" << n
    << ", invariant " << n - invariance_failures - invariance_zero_failures << "/" << n
    << ", supercommutativity iff (x0, lambda) = (0, 0) " << n - iff_failures << "/" << n
    << ", (u,u) witness with defect 2(x0 + lambda u*) "
    << nonzero_draws - witness_failures << "/" << nonzero_draws;
  if (!clause_invariance && invariance_failures == nonzero_draws &&
      invariance_zero_failures == 0)
    d << "; invariance fails on exactly the nonzero draws: the extension's gram is "
      << "supersymmetric, so B(u.u, u) = -B(u, u.u) while both carry the lambda term, "
      << "and B(u.u, y) = B(x0, y) while B(u, u.y) = -B(x0, y), forcing "
      << "(x0, lambda) = (0, 0); no sign convention for the u-row products avoids both "
      << "obstructions at once";
  if (invalid) d << "; " << invalid << " draws rejected by the data validation";
  return {pass, d.str()};
}

// Criterion 8: decomposing strips a hyperbolic odd pair whose extracted
// data rebuilds the original products and gram exactly, and iterating
// exhausts the odd part.
Verdict criterion8() {
  std::vector<PseudoEuclidean> inputs = {make_s2(), make_abelian_pe(0, 2),
                                         gdext(family_split(1, 0, 0)).extension,
                                         gdext(family_rotate(1, 0, 0)).extension,
                                         gdext(family_square(0, 0)).extension};
  int round_trips = 0, failures = 0;
  for (const PseudoEuclidean& p : inputs) {
    DecompositionStep step = decompose(p);
    bool ok = step.report.all_pass() && check_gdext_data(step.data).all_pass() &&
              is_zero(step.data.x0) && step.data.lambda.is_zero();
    PseudoEuclidean rebuilt = gdext(step.data).extension;
    int n = p.algebra.total();
    Matrix cols = Matrix::from_cols(step.new_basis, n);
    for (int i = 0; ok && i < n; ++i)
      for (int j = 0; ok && j < n; ++j) {
        Vec product = p.algebra.multiply(step.new_basis[i], step.new_basis[j]);
        ok = solve(cols, product) == rebuilt.algebra.basis_product(i, j) &&
             p.form.eval(step.new_basis[i], step.new_basis[j]) == rebuilt.form.gram.at(i, j);
      }
    DecompositionTower tower = iterate_decompose(p);
    ok = ok && tower.residual.algebra.dims.odd == 0;
    if (ok)
      ++round_trips;
    else
      ++failures;
  }
  std::ostringstream d;
  d << round_trips << "/" << inputs.size()
    << " decompositions rebuild the original products and gram exactly in the "
    << "constructed basis, and every tower ends with no odd part";
  return {failures == 0, d.str()};
}

// Criterion 9: witnesses that satisfy the isometry conditions build
// maps that verify as isometries; perturbing one datum at a time fails
// exactly the matching condition and the built map.
Verdict criterion9() {
  auto scaling_s = [](const Rational& t, const Rational& w) {
    GradedLinearMap s(GradedDimension{2, 2}, GradedDimension{2, 2}, Parity::even);
    s.mat.at(0, 0) = t;
    s.mat.at(1, 1) = Rational(1) / t;
    s.mat.at(2, 2) = w;
    s.mat.at(3, 3) = Rational(1) / w;
    return s;
  };
  auto invert = [](const GradedLinearMap& m) {
    GradedLinearMap r = m;
    r.mat = inverse(m.mat);
    return r;
  };
  struct Params {
    Rational c, t, w, alpha;
    bool rotate;
  };
  const Params runs[] = {
      {Rational(1), Rational(1), Rational(1), Rational(2), false},
      {Rational(2), Rational(2), Rational(3), Rational(1), true},
      {Rational(-1), Rational(1), Rational(2), Rational(3), false},
      {Rational(3), Rational(1, 2), Rational(1), Rational(1, 2), true},
      {Rational(1, 2), Rational(3), Rational(1), Rational(-1), false},
      {Rational(-2), Rational(1), Rational(-2), Rational(-2), true},
      {Rational(5), Rational(2), Rational(2), Rational(3, 2), false},
      {Rational(3, 2), Rational(1), Rational(3), Rational(-1, 2), true},
      {Rational(-3), Rational(5), Rational(1), Rational(5), false},
      {Rational(4), Rational(2), Rational(1, 3), Rational(2, 3), true},
  };
  int triples = 0, matched = 0;
  for (const Params& q : runs) {
    GdextData g1 = q.rotate ? family_rotate(q.c, 0, 0) : family_split(q.c, 0, 0);
    IsometryWitness wit{scaling_s(q.t, q.w), zero_vec(4), q.alpha};
    GdextData g2 = g1;
    g2.d = map_scale(q.alpha, compose(wit.s, compose(g1.d, invert(wit.s))));
    ++triples;
    GdextResult r1 = gdext(g1), r2 = gdext(g2);
    bool premise = check_isometry_conditions(wit, g1, g2).all_pass() &&
                   r1.report.all_pass() && r2.report.all_pass();
    bool verified =
        verify_isometry(build_isometry(wit, g1, g2), r1.extension, r2.extension).all_pass();
    if (premise && verified) ++matched;
  }

  GdextData g1 = family_split(1, 0, 0);
  IsometryWitness wit{scaling_s(1, 1), zero_vec(4), Rational(2)};
  GdextData g2 = g1;
  g2.d = map_scale(wit.alpha, g1.d);
  int surgical = 0;
  {
    GdextData shifted = g2;
    shifted.lambda = 1;
    CheckReport cond = check_isometry_conditions(wit, g1, shifted);
    bool verified = verify_isometry(build_isometry(wit, g1, shifted), gdext(g1).extension,
                                    gdext(shifted).extension)
                        .all_pass();
    if (!cond.passed("lambda_condition") && !verified) ++surgical;
  }
  {
    GdextData scaled = g2;
    scaled.d = map_scale(2, g2.d);
    CheckReport cond = check_isometry_conditions(wit, g1, scaled);
    bool verified = verify_isometry(build_isometry(wit, g1, scaled), gdext(g1).extension,
                                    gdext(scaled).extension)
                        .all_pass();
    if (!cond.passed("d_condition") && !verified) ++surgical;
  }
  {
    IsometryWitness bad = wit;
    bad.s = map_scale(2, identity_map(GradedDimension{2, 2}));
    CheckReport cond = check_isometry_conditions(bad, g1, g2);
    bool verified = verify_isometry(build_isometry(bad, g1, g2), gdext(g1).extension,
                                    gdext(g2).extension)
                        .all_pass();
    if (!cond.passed("s_form_preserved") && !verified) ++surgical;
  }
  std::ostringstream d;
  d << matched << "/" << triples
    << " matched triples pass the conditions, both full suites, and map verification; "
    << surgical << "/3 single perturbations fail their own condition and the built map";
  return {matched == triples && triples >= 10 && surgical == 3, d.str()};
}

// Criterion 10: every recorded command is byte-stable across runs and
// matches its golden transcript; every fixture document survives a
// parse/render round trip byte for byte.
Verdict criterion10() {
  // Golden output assumes the default environment.
  for (const char* var : {"MOCKLIE_FORMAT", "MOCKLIE_KOSZUL", "MOCKLIE_SEED",
                          "MOCKLIE_SAMPLES"})
    unsetenv(var);
  struct Case {
    const char* name;
    std::string args;
    int exit_code;
  };
  const Case cases[] = {
      {"check_e2", "check " + fixture("e2.alg"), 0},
      {"check_g2_mock_lie", "check --mock-lie " + fixture("g2lambda1.alg"), 1},
      {"check_g2_structured",
       "check --mock-lie --format structured " + fixture("g2lambda1.alg"), 1},
      {"check_d4", "check " + fixture("d4.alg"), 0},
      {"check_h3_structured", "check --format structured " + fixture("h3.alg"), 0},
      {"props_e2h", "props " + fixture("e2h.alg"), 0},
      {"props_h3_structured", "props --format structured " + fixture("h3.alg"), 0},
      {"direct_sum", "construct direct-sum " + fixture("e2.alg") + " " + fixture("s2.alg"),
       0},
      {"tensor_on",
       "construct tensor " + fixture("h3.alg") + " " + fixture("grassmann1.alg") +
           " --koszul on",
       0},
      {"tensor_off",
       "construct tensor " + fixture("h3.alg") + " " + fixture("grassmann1.alg") +
           " --koszul off",
       0},
      {"semidirect", "construct semidirect " + fixture("e2.alg") + " --rep ad", 0},
      {"central_ext", "construct central-ext " + fixture("e2.alg") + " --rep ad --cocycle w",
       0},
      {"tstar_e2", "construct tstar " + fixture("e2.alg"), 0},
      {"double_ext",
       "construct double-ext " + fixture("e2h.alg") + " " + fixture("k1.alg") + " --phi act",
       0},
      {"gdext_a22", "construct gdext " + fixture("a22.alg") + " --map d1", 0},
      {"decompose_s2", "decompose " + fixture("s2.alg"), 0},
      {"decompose_s2_structured", "decompose --format structured " + fixture("s2.alg"), 0},
      {"decompose_a22", "decompose " + fixture("a22.alg"), 0},
      {"isometry_pass", "isometry " + fixture("a22.alg") + " --d1 d1 --d2 d2 --s s --alpha 2",
       0},
      {"isometry_fail", "isometry " + fixture("a22.alg") + " --d1 d1 --d2 d2 --s s --alpha 1",
       1},
      {"intertwiner_e2h", "intertwiner " + fixture("e2h.alg"), 0},
  };
  int commands = 0, mismatches = 0;
  for (const Case& c : cases) {
    RunResult first = run_cli(c.args);
    RunResult second = run_cli(c.args);
    ++commands;
    bool ok = first.exit_code == c.exit_code && second.exit_code == c.exit_code &&
              first.out == second.out && first.err == second.err &&
              first.out == golden(std::string(c.name) + ".out") &&
              first.err == golden(std::string(c.name) + ".err");
    if (!ok) ++mismatches;
  }
  const char* names[] = {"a22.alg", "d4.alg",         "e2.alg", "e2h.alg", "g2lambda1.alg",
                         "grassmann1.alg", "h3.alg", "k1.alg",  "s2.alg"};
  int documents = 0, round_trip_failures = 0;
  for (const char* name : names) {
    std::string text = read_file(fixture(name));
    AlgebraDocument doc = parse_document(text);
    ++documents;
    if (render_document(doc) != text || parse_document(render_document(doc)) != doc)
      ++round_trip_failures;
  }
  std::ostringstream d;
  d << commands << " commands run twice, " << mismatches
    << " transcript mismatches; " << documents << " fixture documents, "
    << round_trip_failures << " parse/render round-trip failures";
  return {mismatches == 0 && round_trip_failures == 0, d.str()};
}

struct Criterion {
  int number;
  const char* title;
  Verdict (*run)();
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {1, "axiom checks agree with the literal-expansion oracle", criterion1},
      {2, "supercommutative super-Jacobi tables satisfy the derived identities", criterion2},
      {3, "semidirect products are valid exactly for valid actions", criterion3},
      {4, "central and dual extensions track their cocycle conditions", criterion4},
      {5, "pseudo-euclidean orthogonality structure", criterion5},
      {6, "double extensions are valid pseudo-euclidean algebras", criterion6},
      {7, "one-dimensional odd double extension, clause by clause", criterion7},
      {8, "decomposition round trip", criterion8},
      {9, "isometry witnesses build verified isometries", criterion9},
      {10, "deterministic command line output and document round trips", criterion10},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v = {false, std::string("unexpected exception: ") + e.what()};
    }
    std::cout << "criterion " << c.number << " (" << c.title << "): "
              << (v.pass ? "pass" : "FAIL") << " - " << v.detail << "\n";
    if (!v.pass) ++failed;
  }
  if (failed == 0)
    std::cout << "acceptance: all 10 criteria pass\n";
  else
    std::cout << "acceptance: " << failed << " of 10 criteria failed\n";
  return failed == 0 ? 0 : 1;
}
