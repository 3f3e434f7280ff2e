#include "aleib/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <iostream>
#include <optional>

#include "aleib/affine.hpp"
#include "aleib/catalog.hpp"
#include "aleib/io.hpp"
#include "aleib/random.hpp"
#include "aleib/rotabaxter.hpp"
#include "aleib/search.hpp"
#include "aleib/tensorconstruct.hpp"
#include "aleib/yangbaxter.hpp"

namespace aleib {

namespace {

struct Options {
  std::string field, lambda = "1", output;
  int window = 3;
  std::uint64_t seed = 1, count = 200;
  std::uint64_t budget = 0;
  std::size_t dim = 2;
  bool machine = false, orbits = false;
  std::vector<std::string> inputs;
  std::string name;
};

// What a command produced: the verdict clauses, structured data for machine
// mode, and documents or lines for text mode.
struct Outcome {
  Report report;
  Json data = Json::object();
  std::vector<std::string> documents;
};

std::optional<Field> field_override(const Options& o) {
  if (o.field.empty()) return std::nullopt;
  return Field::parse(o.field);
}

Field field_or_q(const Options& o) { return field_override(o).value_or(Field::Q()); }

std::uint64_t budget_of(const Options& o) { return o.budget ? o.budget : default_budget(); }

Document input(const Options& o, std::size_t i = 0) {
  if (o.inputs.size() <= i) throw BadParameter("missing input file");
  return load_document(o.inputs[i], field_override(o));
}

Scalar lambda_of(const Options& o, Field f) {
  Scalar s = Scalar::parse(o.lambda, f);
  if (s.is_zero()) throw ZeroWeight("lambda must be nonzero");
  return s;
}

std::string document_text(const Json& j) { return canonical_text(j); }

Json algebra_doc(const Algebra& a) {
  Json j = header_json(a.field(), a.dim());
  write_algebra(j, a);
  return j;
}

Json bialgebra_doc(const Bialgebra& b) {
  Json j = algebra_doc(b.alg);
  write_coalgebra(j, b.coa);
  return j;
}

void emit(Outcome& out, const Json& doc, const char* key) {
  out.data[key] = doc;
  out.documents.push_back(document_text(doc));
}

Clause& fact(Report& rep, const std::string& name, const std::string& anchor, bool holds) { return rep.add(name, anchor, holds); }

void finite_field_note(Outcome& out, Field f) {
  if (f.rational()) return;
  Clause& c = out.report.add("finite-field run", "identities are characteristic-free; classification statements assume characteristic zero");
  c.advisory = true;
  c.detail = f.name() + " result is an extrapolation outside characteristic zero";
}

// check -------------------------------------------------------------------

Outcome check_cmd(const std::string& what, const Options& o) {
  Outcome out;
  if (what == "equivalence") {
    Rng rng(o.seed);
    const Field f = field_or_q(o);
    std::uint64_t agree = 0, positive = 0;
    for (std::uint64_t t = 0; t < o.count; ++t) {
      std::size_t n = 2 + rng.below(2);
      Algebra a = random_anti_leibniz(rng, n, f);
      Coalgebra c = random_coalgebra(rng, n, f);
      EquivalenceTriple e = bialgebra_equivalence_crosscheck(a, c);
      agree += e.agree();
      positive += e.bialgebra;
    }
    Clause& c = fact(out.report, "bialgebra, matched pair and Manin triple agree",
                     "bialgebra <=> coregular matched pair <=> standard Manin triple", agree == o.count);
    c.detail = std::to_string(agree) + "/" + std::to_string(o.count) + " agree, " + std::to_string(positive) + " bialgebras";
    out.data["seed"] = o.seed;
    out.data["count"] = o.count;
    out.data["agree"] = agree;
    out.data["bialgebras"] = positive;
    return out;
  }
  Document d = input(o);
  if (what == "algebra") {
    out.report = check_anti_leibniz(read_algebra(d));
  } else if (what == "coalgebra") {
    out.report = check_coalgebra(read_coalgebra(d));
  } else if (what == "bialgebra") {
    Bialgebra b = read_bialgebra(d);
    out.report = check_anti_leibniz(b.alg);
    out.report.merge(check_coalgebra(b.coa));
    out.report.merge(bialgebra_identities(b.alg, b.coa));
  } else if (what == "pair") {
    MatchedPairData p = read_matched_pair(d);
    out.report = check_anti_leibniz(p.A);
    out.report.merge(check_anti_leibniz(p.B));
    out.report.merge(check_matched_pair(p));
  } else if (what == "leibniz") {
    out.report = check_leibniz(read_algebra(d));
  } else if (what == "leibniz-bialgebra") {
    Algebra l = read_algebra(d);
    Coalgebra c = read_coalgebra(d);
    out.report = check_leibniz(l);
    out.report.merge(check_leibniz_coalgebra(c));
    out.report.merge(leibniz_bialgebra_identities(l, c));
  } else if (what == "quadratic") {
    out.report = check_quadratic_aa({read_algebra(d), read_matrix(d, "gram")});
  } else {
    throw BadParameter("unknown check target \"" + what + "\"");
  }
  finite_field_note(out, d.field);
  return out;
}

// build -------------------------------------------------------------------

Outcome build_cmd(const std::string& what, const Options& o) {
  Outcome out;
  Document d = input(o);
  if (what == "double") {
    DoubleResult r = double_bialgebra(read_bialgebra(d));
    out.report = r.report;
    Json doc = bialgebra_doc(r.dbl);
    write_r(doc, r.rtilde);
    emit(out, doc, "double");
  } else if (what == "dual") {
    const bool p = has_section(d, "products"), c = has_section(d, "coproducts");
    if (p && c) {
      Bialgebra b = dual_bialgebra(read_bialgebra(d));
      out.report = check_anti_leibniz(b.alg);
      out.report.merge(check_coalgebra(b.coa));
      out.report.merge(bialgebra_identities(b.alg, b.coa));
      emit(out, bialgebra_doc(b), "dual");
    } else if (c) {
      Algebra a = dual_algebra(read_coalgebra(d));
      out.report = check_anti_leibniz(a);
      emit(out, algebra_doc(a), "dual");
    } else {
      Coalgebra cd = dual_coalgebra(read_algebra(d));
      out.report = check_coalgebra(cd);
      Json doc = header_json(cd.field(), cd.dim());
      write_coalgebra(doc, cd);
      emit(out, doc, "dual");
    }
  } else if (what == "crossed") {
    MatchedPairData p = read_matched_pair(d);
    out.report = check_matched_pair(p);
    Algebra a = crossed_product(p);
    out.report.merge(check_anti_leibniz(a));
    emit(out, algebra_doc(a), "crossed");
  } else if (what == "manin") {
    Bialgebra b = read_bialgebra(d);
    ManinTriple m = standard_manin_triple(b.alg, b.coa);
    out.report = m.report;
    Json doc = algebra_doc(m.total);
    doc["gram"] = matrix_json(m.bd.gram);
    emit(out, doc, "manin");
  } else {
    throw BadParameter("unknown build target \"" + what + "\"");
  }
  return out;
}

// ybe ---------------------------------------------------------------------

Json classification_json(const RClassification& c) {
  return {{"solution", c.is_solution},         {"symmetric", c.is_symmetric},   {"skew_part_invariant", c.skew_part_invariant},
          {"quasi_triangular", c.quasi_triangular}, {"triangular", c.triangular}, {"factorizable", c.factorizable},
          {"coboundary_bialgebra", c.coboundary_bialgebra}};
}

Outcome ybe_cmd(const std::string& what, const Options& o) {
  Outcome out;
  if (what == "suite") {
    Rng rng(o.seed);
    const Field f = field_or_q(o);
    std::uint64_t twist = 0, agree = 0, closed = 0;
    for (std::uint64_t t = 0; t < o.count; ++t) {
      std::size_t n = 2 + rng.below(2);
      Algebra a = random_anti_leibniz(rng, n, f);
      Matrix r = random_sparse_matrix(rng, n, n, f);
      if (t % 3 == 0) r = r + tau(r);
      twist += tau13(ybe_bracket(a, tau(r))) == -ybe_bracket(a, r);
      RClassification c = classify_r(a, r), ct = classify_r(a, tau(r));
      closed += (!c.quasi_triangular || ct.quasi_triangular) && (!c.triangular || ct.triangular);
      CoboundaryResiduals res = coboundary_residuals(a, r);
      Coalgebra d = delta_r(a, r);
      Report bi = bialgebra_identities(a, d);
      agree += res.coalg_zero() == check_coalgebra(d).holds() && res.product_zero() == bi.find("compatibility I")->holds &&
               res.twist_zero() == bi.find("compatibility II")->holds;
    }
    auto ratio = [&](std::uint64_t k) { return std::to_string(k) + "/" + std::to_string(o.count); };
    fact(out.report, "bracket of the flip", "t13 [[t(r),t(r)]] = -[[r,r]]", twist == o.count).detail = ratio(twist);
    fact(out.report, "quasi-triangular and triangular closed under the flip", "r solution => t(r) solution", closed == o.count).detail =
        ratio(closed);
    fact(out.report, "coboundary residuals agree with the direct checks", "residuals vanish <=> Delta_r identities hold",
         agree == o.count)
        .detail = ratio(agree);
    out.data["seed"] = o.seed;
    out.data["count"] = o.count;
    return out;
  }
  Document d = input(o);
  Algebra a = read_algebra(d);
  Matrix r = read_r(d);
  if (what == "check") {
    Tensor3 br = ybe_bracket(a, r);
    Clause& c = fact(out.report, "Yang-Baxter bracket vanishes", "[[r,r]] = r12r13 + r13r23 + r23r12 terms = 0", br.is_zero());
    std::size_t i, j, k;
    if (br.first_nonzero(i, j, k)) {
      c.witness = {i + 1, j + 1, k + 1};
      c.detail = "coefficient " + br(i, j, k).str();
    }
    out.data["classification"] = classification_json(classify_r(a, r));
  } else if (what == "delta") {
    RClassification c = classify_r(a, r);
    Coalgebra cd = delta_r(a, r);
    out.report = check_coalgebra(cd);
    out.report.merge(bialgebra_identities(a, cd));
    out.data["classification"] = classification_json(c);
    Json doc = algebra_doc(a);
    write_coalgebra(doc, cd);
    emit(out, doc, "coboundary");
  } else if (what == "residuals") {
    CoboundaryResiduals res = coboundary_residuals(a, r);
    fact(out.report, "coboundary coalgebra residual", "(Delta_r (x) id)Delta_r terms reduced to r", res.coalg_zero());
    fact(out.report, "coboundary product residual", "product compatibility for Delta_r", res.product_zero());
    fact(out.report, "coboundary twist residual", "twist compatibility for Delta_r", res.twist_zero());
  } else {
    throw BadParameter("unknown ybe target \"" + what + "\"");
  }
  finite_field_note(out, d.field);
  return out;
}

// rb ----------------------------------------------------------------------

Outcome rb_cmd(const std::string& what, const Options& o) {
  Outcome out;
  Document d = input(o);
  Algebra a = read_algebra(d);
  auto lambda = [&]() { return has_section(d, "lambda") && o.lambda == "1" ? read_scalar(d, "lambda") : lambda_of(o, d.field); };
  if (what == "check") {
    out.report = check_rb_weight({a, read_matrix(d, "R"), lambda()});
  } else if (what == "descend") {
    WeightedRB x{a, read_matrix(d, "R"), lambda()};
    out.report = check_rb_weight(x);
    Algebra desc = descendent_product(x);
    out.report.merge(check_anti_leibniz(desc));
    emit(out, algebra_doc(desc), "descendent");
  } else if (what == "from-factorizable") {
    Scalar l = lambda();
    SkewQuadraticRB x = factorizable_to_rb(a, read_r(d), l);
    out.report = check_skew_quadratic(x);
    out.report.merge(check_rb_weight({x.alg, x.R, x.lambda}));
    Json doc = algebra_doc(a);
    doc["gram"] = matrix_json(x.form);
    doc["R"] = matrix_json(x.R);
    doc["lambda"] = scalar_json(l);
    emit(out, doc, "rota_baxter");
  } else if (what == "to-factorizable") {
    SkewQuadraticRB x{a, read_matrix(d, "R"), lambda(), read_matrix(d, "gram")};
    out.report = check_skew_quadratic(x);
    out.report.merge(check_rb_weight({x.alg, x.R, x.lambda}));
    Matrix r = rb_to_factorizable(x);
    RClassification c = classify_r(a, r);
    fact(out.report, "recovered r is factorizable", "I = r# - t(r)# invertible, r - t(r) invariant, [[r,r]] = 0", c.factorizable);
    Json doc = algebra_doc(a);
    write_r(doc, r);
    emit(out, doc, "factorizable");
  } else {
    throw BadParameter("unknown rb target \"" + what + "\"");
  }
  return out;
}

// tensor ------------------------------------------------------------------

Outcome tensor_cmd(const std::string& what, const Options& o) {
  Outcome out;
  if (what == "quadratic") {
    Document b = input(o);
    QuadraticAA q{read_algebra(b), read_matrix(b, "gram")};
    out.report = check_quadratic_aa(q);
    Coalgebra c = quadratic_dual_coalgebra(q);
    out.report.merge(check_anticocomm_anticoassoc(c));
    Json doc = algebra_doc(q.alg);
    write_coalgebra(doc, c);
    doc["gram"] = matrix_json(q.form);
    emit(out, doc, "quadratic");
    return out;
  }
  Document l = input(o, 0), b = input(o, 1);
  if (what == "product") {
    Algebra la = read_algebra(l), ba = read_algebra(b);
    out.report = check_leibniz(la);
    out.report.merge(check_anticomm_antiassoc(ba));
    Algebra t = tensor_product_algebra(la, ba);
    out.report.merge(check_anti_leibniz(t));
    emit(out, algebra_doc(t), "tensor");
  } else if (what == "induced") {
    LeibnizBialgebra lb{read_algebra(l), read_coalgebra(l)};
    QuadraticAA q{read_algebra(b), read_matrix(b, "gram")};
    out.report = check_leibniz(lb.alg);
    out.report.merge(check_leibniz_coalgebra(lb.coa));
    out.report.merge(leibniz_bialgebra_identities(lb.alg, lb.coa));
    out.report.merge(check_quadratic_aa(q));
    Bialgebra t = induced_bialgebra_raw(lb, q);
    out.report.merge(check_anti_leibniz(t.alg));
    out.report.merge(check_coalgebra(t.coa));
    out.report.merge(bialgebra_identities(t.alg, t.coa));
    emit(out, bialgebra_doc(t), "induced");
  } else {
    throw BadParameter("unknown tensor target \"" + what + "\"");
  }
  return out;
}

// affine ------------------------------------------------------------------

Outcome affine_cmd(const std::string& what, const Options& o) {
  if (what != "check") throw BadParameter("unknown affine target \"" + what + "\"");
  Outcome out;
  Document d = input(o);
  WindowReport w = check_completed_bialgebra_window({read_bialgebra(d), o.window});
  out.report = w.report;
  out.data["window"] = o.window;
  out.data["coalgebra_probes"] = w.coalgebra_probes;
  out.data["compatibility_probes"] = w.compatibility_probes;
  out.data["product_probes"] = w.product_probes;
  auto line = [](const char* what, const std::vector<std::vector<int>>& ps) {
    std::string s = std::string(what) + " probes (" + std::to_string(ps.size()) + "):";
    for (const auto& p : ps) {
      s += " (";
      for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
      s += ")";
    }
    return s + "\n";
  };
  out.documents.push_back(line("coalgebra (k,p,q,r)", w.coalgebra_probes) + line("compatibility (i,j,p,q)", w.compatibility_probes) +
                          line("product (i,j,k)", w.product_probes));
  finite_field_note(out, d.field);
  return out;
}

// search ------------------------------------------------------------------

Outcome search_cmd(const std::string& what, const Options& o) {
  Outcome out;
  const Field f = o.field.empty() ? Field::GF(2) : Field::parse(o.field);
  if (f.rational()) throw BadParameter("search needs --field gf2, gf3 or gf5");
  if (what == "structures") {
    SearchSpec s{f, o.dim, {}, budget_of(o)};
    std::vector<Residues> found = enumerate_structures(s);
    std::size_t second = 0;
    Json list = Json::array();
    for (const Residues& c : found) {
      second += second_pass_anti_leibniz(c, o.dim, f);
      Json doc = algebra_doc(to_algebra(c, o.dim, f));
      list.push_back(doc);
      out.documents.push_back(doc.dump() + "\n");
    }
    fact(out.report, "second-pass verifier agrees", "every survivor passes the independent anti-Leibniz checker", second == found.size())
        .detail = std::to_string(second) + "/" + std::to_string(found.size());
    out.data["candidates"] = candidate_count(s);
    out.data["count"] = found.size();
    out.data["structures"] = list;
    std::string summary = "count: " + std::to_string(found.size()) + " of " + std::to_string(candidate_count(s)) + " candidates";
    if (o.orbits) {
      std::vector<Orbit> orbits = orbit_classify(found, o.dim, f, budget_of(o));
      out.report.merge(commutativity_report(orbits, o.dim, f));
      Json reps = Json::array();
      for (const Orbit& orb : orbits)
        reps.push_back({{"representative", algebra_doc(to_algebra(orb.representative, o.dim, f))},
                        {"size", orb.size},
                        {"commutative", orb.commutative}});
      out.data["orbits"] = reps;
      summary += ", orbits: " + std::to_string(orbits.size());
    }
    out.documents.push_back(summary + "\n");
  } else if (what == "ybe") {
    Options in = o;
    in.field = f.name();
    Document d = input(in);
    Algebra a = read_algebra(d);
    std::vector<SymmetricSolution> sols = find_symmetric_solutions(a, budget_of(o));
    std::size_t certified = 0;
    Json list = Json::array();
    for (const SymmetricSolution& s : sols) {
      certified += s.certificate.holds();
      Json doc = header_json(f, a.dim());
      write_r(doc, s.r);
      list.push_back(doc);
      out.documents.push_back(doc.dump() + "\n");
    }
    fact(out.report, "every solution gives a triangular bialgebra", "[[r,r]] = 0, r symmetric => (A, Delta_r) bialgebra",
         certified == sols.size())
        .detail = std::to_string(certified) + "/" + std::to_string(sols.size());
    out.data["count"] = sols.size();
    out.data["solutions"] = list;
    out.documents.push_back("count: " + std::to_string(sols.size()) + "\n");
  } else {
    throw BadParameter("unknown search target \"" + what + "\"");
  }
  finite_field_note(out, f);
  return out;
}

// catalog -----------------------------------------------------------------

Outcome catalog_cmd(const std::string& what, const Options& o) {
  Outcome out;
  if (what == "list") {
    Json names = Json::array();
    std::string text;
    for (const std::string& n : catalog_names()) {
      Fixture fx = catalog(n, {1, 1, 1, 1, field_or_q(o)});
      names.push_back({{"name", n}, {"kind", fx.kind}, {"summary", fx.summary}});
      text += n + "  " + fx.kind + "  " + fx.summary + "\n";
    }
    out.data["fixtures"] = names;
    out.documents.push_back(text);
    return out;
  }
  if (what != "show") throw BadParameter("unknown catalog target \"" + what + "\"");
  if (o.name.empty()) throw BadParameter("catalog show needs a fixture name");
  Fixture fx = catalog(o.name, {1, 1, 1, 1, field_or_q(o)});
  out.report = fx.certificate;
  Json doc = algebra_doc(fx.alg);
  if (fx.coa) write_coalgebra(doc, *fx.coa);
  if (fx.r) write_r(doc, *fx.r);
  if (fx.form) doc["gram"] = matrix_json(*fx.form);
  emit(out, doc, "fixture");
  return out;
}

// rendering ---------------------------------------------------------------

Json clause_json(const Clause& c) {
  return {{"name", c.name}, {"anchor", c.anchor}, {"holds", c.holds}, {"advisory", c.advisory}, {"witness", c.witness}, {"detail", c.detail}};
}

void render_text(const Outcome& out, double ms, std::ostream& os) {
  for (const std::string& doc : out.documents) os << doc;
  for (const Clause& c : out.report.clauses) {
    os << (c.advisory ? "[note] " : c.holds ? "[pass] " : "[FAIL] ") << c.name << "  {" << c.anchor << "}";
    if (!c.witness.empty()) {
      os << "  witness (";
      for (std::size_t i = 0; i < c.witness.size(); ++i) os << (i ? "," : "") << c.witness[i];
      os << ")";
    }
    if (!c.detail.empty()) os << "  " << c.detail;
    os << "\n";
  }
  os << "verdict: " << (out.report.holds() ? "pass" : "fail") << "  (" << static_cast<long long>(ms) << " ms)\n";
}

void render_machine(const Outcome& out, const std::string& verb, const std::string& sub, std::ostream& os) {
  Json clauses = Json::array();
  for (const Clause& c : out.report.clauses) clauses.push_back(clause_json(c));
  Json doc{{"verb", verb}, {"subverb", sub}, {"verdict", out.report.holds() ? "pass" : "fail"}, {"clauses", clauses}, {"data", out.data}};
  os << doc.dump(2) << "\n";
}

void render_error(bool machine, const std::string& verb, const std::string& sub, const std::string& msg, std::ostream& out,
                  std::ostream& err) {
  err << "aleib: " << msg << "\n";
  if (machine) out << Json{{"verb", verb}, {"subverb", sub}, {"verdict", "error"}, {"error", msg}}.dump(2) << "\n";
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact checks and constructions for anti-Leibniz algebras, coalgebras and bialgebras", "aleib"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--field", o.field, "Q, GF(p) or gfp; reinterprets input scalars");
  app.add_option("--lambda", o.lambda, "Rota-Baxter weight");
  app.add_option("--window", o.window, "degree window N for affine checks")->check(CLI::PositiveNumber);
  app.add_option("--seed", o.seed, "seed for randomized suites");
  app.add_option("--count", o.count, "instances in randomized suites");
  app.add_option("--budget", o.budget, "search candidate budget (default ALEIB_BUDGET or 10^7)");
  app.add_option("-o,--output", o.output, "write the produced document to a file");
  app.add_flag("--machine", o.machine, "emit one JSON report");

  std::string sub;
  struct Verb {
    const char* name;
    const char* help;
    std::vector<std::string> subs;
    Outcome (*fn)(const std::string&, const Options&);
  };
  const std::vector<Verb> verbs{
      {"check", "verify a structure file", {"algebra", "coalgebra", "bialgebra", "pair", "leibniz", "leibniz-bialgebra", "quadratic", "equivalence"}, check_cmd},
      {"build", "derive a new structure", {"double", "dual", "crossed", "manin"}, build_cmd},
      {"ybe", "Yang-Baxter equation tools", {"check", "delta", "residuals", "suite"}, ybe_cmd},
      {"rb", "Rota-Baxter operators", {"check", "descend", "from-factorizable", "to-factorizable"}, rb_cmd},
      {"tensor", "Leibniz tensor constructions", {"product", "induced", "quadratic"}, tensor_cmd},
      {"affine", "completed affine bialgebra window", {"check"}, affine_cmd},
      {"search", "finite-field enumeration", {"structures", "ybe"}, search_cmd},
      {"catalog", "built-in fixtures", {"list", "show"}, catalog_cmd},
  };
  std::vector<CLI::App*> cmds;
  for (const Verb& v : verbs) {
    CLI::App* c = app.add_subcommand(v.name, v.help);
    c->fallthrough();
    c->add_option("target", sub, "what to run")->required()->check(CLI::IsMember(v.subs));
    if (std::string(v.name) == "catalog")
      c->add_option("name", o.name, "fixture name");
    else
      c->add_option("inputs", o.inputs, "input files");
    if (std::string(v.name) == "search") {
      c->add_option("--dim", o.dim, "dimension (1..3)");
      c->add_option("--input", o.inputs, "algebra file for ybe search");
      c->add_flag("--orbits", o.orbits, "classify survivors up to basis change");
    }
    cmds.push_back(c);
  }

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "aleib: " << e.what() << "\n" << "run with --help for usage\n";
    return 2;
  }

  std::string verb;
  const Verb* chosen = nullptr;
  for (std::size_t i = 0; i < verbs.size(); ++i)
    if (cmds[i]->parsed()) {
      chosen = &verbs[i];
      verb = verbs[i].name;
    }
  try {
    auto t0 = std::chrono::steady_clock::now();
    Outcome res = chosen->fn(sub, o);
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    if (!o.output.empty()) {
      if (res.data.is_object() && !res.documents.empty())
        save_text(o.output, res.documents.front());
      else
        throw BadParameter("this command produces no document to write");
    }
    if (o.machine)
      render_machine(res, verb, sub, out);
    else
      render_text(res, ms, out);
    return res.report.holds() ? 0 : 1;
  } catch (const Error& e) {
    render_error(o.machine, verb, sub, e.what(), out, err);
    return 2;
  }
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

} // namespace aleib
