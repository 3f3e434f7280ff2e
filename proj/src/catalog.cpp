#include "aleib/catalog.hpp"

#include <functional>
#include <map>

#include "aleib/build.hpp"

namespace aleib {

namespace {

using Builder = std::function<Fixture(const CatalogParams&)>;

Fixture algebra_fixture(std::string name, std::string summary, Algebra a) {
  Fixture f{std::move(name), std::move(summary), "anti-Leibniz algebra", std::move(a), {}, {}, {}, {}, false, {}, {}, {}};
  f.certificate = check_anti_leibniz(f.alg);
  if (!f.certificate.holds()) throw PreconditionViolated("catalog: " + f.name + " failed its certificate");
  f.alg.certify("anti-Leibniz");
  return f;
}

Fixture bialgebra_fixture(std::string name, std::string summary, Algebra a, Coalgebra c) {
  Fixture f = algebra_fixture(std::move(name), std::move(summary), std::move(a));
  f.kind = "anti-Leibniz bialgebra";
  f.coa = std::move(c);
  f.certificate.merge(check_coalgebra(*f.coa));
  f.certificate.merge(bialgebra_identities(f.alg, *f.coa));
  if (!f.certificate.holds()) throw PreconditionViolated("catalog: " + f.name + " failed its certificate");
  return f;
}

Fixture leibniz_fixture(std::string name, std::string summary, Algebra a, bool expect_leibniz) {
  Fixture f{std::move(name), std::move(summary), "Leibniz algebra", std::move(a), {}, {}, {}, {}, false, {}, {}, {}};
  f.certificate = check_leibniz(f.alg);
  f.leibniz_input_certified = f.certificate.holds();
  // Inputs quoted in right-Leibniz form are kept, and their certificate records the failure.
  if (!expect_leibniz) f.certificate.clauses.back().advisory = true;
  else if (!f.leibniz_input_certified) throw PreconditionViolated("catalog: " + f.name + " is not Leibniz");
  return f;
}

Algebra lambda21(Field fd) { return make_algebra(2, {{1, 1, {0, 1}}}, fd); }

Algebra lambda22(const mpq_class& a, const mpq_class& b, Field fd) {
  if (a == 0 || b == 0) throw BadParameter("Lambda2_2 needs a != 0 and b != 0");
  return make_algebra(2, {{1, 1, {-a, -a * a / b}}, {1, 2, {b, a}}, {2, 1, {b, a}}, {2, 2, {-b * b / a, -b}}}, fd);
}

Algebra aa2(Field fd) { return make_algebra(2, {{1, 1, {0, 1}}}, fd); }
Matrix aa2_form(Field fd) { return make_matrix({{0, 1}, {1, 0}}, fd); }

Algebra double4(Field fd) {
  return make_algebra(4, {{1, 1, {0, 1, 0, 0}}, {4, 4, {0, 0, 1, 0}}, {1, 4, {0, 0, 1, 0}}, {4, 1, {0, 1, 0, 0}}}, fd);
}

// Builds an induced bialgebra fixture from the Leibniz data and the table printed alongside it.
Fixture tensor_fixture(std::string name, std::string summary, Algebra l, Coalgebra d, Algebra pa, Coalgebra pc) {
  const Field fd = l.field();
  QuadraticAA q{aa2(fd), aa2_form(fd)};
  LeibnizBialgebra lb{std::move(l), std::move(d)};
  Bialgebra b = induced_bialgebra_raw(lb, q);
  Fixture f = bialgebra_fixture(std::move(name), std::move(summary), b.alg, b.coa);
  Report lr = check_leibniz(lb.alg);
  lr.merge(check_leibniz_coalgebra(lb.coa));
  lr.merge(leibniz_bialgebra_identities(lb.alg, lb.coa));
  f.leibniz_input_certified = lr.holds();
  for (auto c : lr.clauses) {
    c.name = "input: " + c.name;
    c.advisory = true;
    f.certificate.clauses.push_back(std::move(c));
  }
  f.leibniz = std::move(lb);
  f.printed = Bialgebra{std::move(pa), std::move(pc)};
  f.permutation = match_permutation(b, *f.printed);
  return f;
}

const std::map<std::string, Builder>& builders() {
  static const std::map<std::string, Builder> m = {
      {"Lambda2_1", [](const CatalogParams& p) { return algebra_fixture("Lambda2_1", "e1e1 = e2", lambda21(p.field)); }},
      {"Lambda2_2",
       [](const CatalogParams& p) {
         return algebra_fixture("Lambda2_2", "two-parameter commutative family in dimension 2", lambda22(p.a, p.b, p.field));
       }},
      {"Noncomm3",
       [](const CatalogParams& p) {
         return algebra_fixture("Noncomm3", "e1e2 = e3 = e2e2",
                                make_algebra(3, {{1, 2, {0, 0, 1}}, {2, 2, {0, 0, 1}}}, p.field));
       }},
      {"Lambda2_1_bialgebra",
       [](const CatalogParams& p) {
         return bialgebra_fixture("Lambda2_1_bialgebra", "e1e1 = e2, Delta(e1) = e2 (x) e2", lambda21(p.field),
                                  make_coalgebra(2, {{1, {{2, 2, 1}}}}, p.field));
       }},
      {"Lambda2_1_symmetric_r",
       [](const CatalogParams& p) {
         Fixture f = algebra_fixture("Lambda2_1_symmetric_r", "e1e1 = e2 with r = e1 (x) e2 + e2 (x) e1", lambda21(p.field));
         f.r = make_tensor2(2, {{1, 2, 1}, {2, 1, 1}}, p.field);
         f.coa = delta_r(f.alg, *f.r);
         f.kind = "anti-Leibniz bialgebra";
         return f;
       }},
      {"Double4",
       [](const CatalogParams& p) {
         Fixture f = bialgebra_fixture("Double4", "double of Lambda2_1_bialgebra: basis e1, e2, f1, f2", double4(p.field),
                                       make_coalgebra(4, {{1, {{2, 2, 1}}}, {4, {{3, 3, 1}}}}, p.field));
         f.r = make_tensor2(4, {{1, 3, 1}, {2, 4, 1}}, p.field);
         return f;
       }},
      {"Split3_bialgebra",
       [](const CatalogParams& p) {
         return bialgebra_fixture("Split3_bialgebra", "e2e2 = e1 = e3e3, Delta(e2) = e1 (x) e1",
                                  make_algebra(3, {{2, 2, {1, 0, 0}}, {3, 3, {1, 0, 0}}}, p.field),
                                  make_coalgebra(3, {{2, {{1, 1, 1}}}}, p.field));
       }},
      {"AA2",
       [](const CatalogParams& p) {
         Fixture f{"AA2", "e1e1 = e2 with w(e1,e2) = w(e2,e1) = 1", "quadratic AA algebra", aa2(p.field),
                   {}, {}, aa2_form(p.field), {}, false, {}, {}, {}};
         f.certificate = check_quadratic_aa({f.alg, *f.form});
         f.coa = quadratic_dual_coalgebra({f.alg, *f.form});
         return f;
       }},
      {"L1", [](const CatalogParams& p) { return leibniz_fixture("L1", "[x1,x1] = x2", make_algebra(2, {{1, 1, {0, 1}}}, p.field), true); }},
      {"L2",
       [](const CatalogParams& p) {
         return leibniz_fixture("L2", "[x1,x2] = -[x2,x1] = x2", make_algebra(2, {{1, 2, {0, 1}}, {2, 1, {0, -1}}}, p.field), true);
       }},
      {"L3",
       [](const CatalogParams& p) {
         return leibniz_fixture("L3", "[x1,x2] = x1 = [x2,x2] (right Leibniz)",
                                make_algebra(2, {{1, 2, {1, 0}}, {2, 2, {1, 0}}}, p.field), false);
       }},
      {"L3_opposite",
       [](const CatalogParams& p) {
         return leibniz_fixture("L3_opposite", "[x2,x1] = x1 = [x2,x2]",
                                make_algebra(2, {{2, 1, {1, 0}}, {2, 2, {1, 0}}}, p.field), true);
       }},
      {"L3_printed",
       [](const CatalogParams& p) {
         return leibniz_fixture("L3_printed", "[x1,x2] = x1 = [x2,x1]",
                                make_algebra(2, {{1, 2, {1, 0}}, {2, 1, {1, 0}}}, p.field), false);
       }},
      {"Tensor_L1",
       [](const CatalogParams& p) {
         const Field fd = p.field;
         return tensor_fixture("Tensor_L1", "L1 with d(x1) = k x2 (x) x2", make_algebra(2, {{1, 1, {0, 1}}}, fd),
                               make_coalgebra(2, {{1, {{2, 2, p.k}}}}, fd), make_algebra(4, {{1, 1, {0, 1, 0, 0}}}, fd),
                               make_coalgebra(4, {{1, {{2, 2, p.k}}}}, fd));
       }},
      {"Tensor_L3",
       [](const CatalogParams& p) {
         const Field fd = p.field;
         std::vector<TensorEntry> d{{1, 2, p.k}, {2, 1, -p.k}};
         std::vector<TensorEntry> pd{{2, 4, p.k}, {4, 2, -p.k}};
         return tensor_fixture("Tensor_L3", "L3 with d(x1) = d(x2) = k(x1 (x) x2 - x2 (x) x1)",
                               make_algebra(2, {{1, 2, {1, 0}}, {2, 2, {1, 0}}}, fd), make_coalgebra(2, {{1, d}, {2, d}}, fd),
                               make_algebra(4, {{1, 2, {0, 0, 1, 0}}, {2, 2, {0, 0, 1, 0}}}, fd),
                               make_coalgebra(4, {{1, pd}, {2, pd}}, fd));
       }},
      {"Tensor_L3_printed",
       [](const CatalogParams& p) {
         const Field fd = p.field;
         std::vector<TensorEntry> d{{1, 2, p.k}, {2, 1, -p.k}};
         std::vector<TensorEntry> pd{{2, 4, p.k}, {4, 2, -p.k}};
         return tensor_fixture("Tensor_L3_printed", "[x1,x2] = x1 = [x2,x1] with d(x1) = d(x2) = k(x1 (x) x2 - x2 (x) x1)",
                               make_algebra(2, {{1, 2, {1, 0}}, {2, 1, {1, 0}}}, fd), make_coalgebra(2, {{1, d}, {2, d}}, fd),
                               make_algebra(4, {{1, 2, {0, 0, 1, 0}}, {2, 2, {0, 0, 1, 0}}}, fd),
                               make_coalgebra(4, {{1, pd}, {2, pd}}, fd));
       }},
      {"Tensor_L4",
       [](const CatalogParams& p) {
         const Field fd = p.field;
         return tensor_fixture(
             "Tensor_L4", "[x1,x3] = x1 + x2, [x3,x3] = x1, d(x3) = k(x1x1 + x2x1) + l(x1x2 + x2x2)",
             make_algebra(3, {{1, 3, {1, 1, 0}}, {3, 3, {1, 0, 0}}}, fd),
             make_coalgebra(3, {{3, {{1, 1, p.k}, {2, 1, p.k}, {1, 2, p.l}, {2, 2, p.l}}}}, fd),
             make_algebra(6, {{1, 5, {0, 1, 0, 1, 0, 0}}, {5, 5, {0, 1, 0, 0, 0, 0}}}, fd),
             make_coalgebra(6, {{5, {{2, 2, p.k}, {4, 2, p.k}, {1, 4, p.l}, {4, 4, p.l}}}}, fd));
       }},
      {"Tensor_L5",
       [](const CatalogParams& p) {
         const Field fd = p.field;
         return tensor_fixture(
             "Tensor_L5", "[x2,x3] = x2 = -[x3,x2], [x3,x3] = x1, d(x2) = k x1x2, d(x3) = k x1x1 - l x1x2",
             make_algebra(3, {{2, 3, {0, 1, 0}}, {3, 2, {0, -1, 0}}, {3, 3, {1, 0, 0}}}, fd),
             make_coalgebra(3, {{2, {{1, 2, p.k}}}, {3, {{1, 1, p.k}, {1, 2, -p.l}}}}, fd),
             make_algebra(6, {{3, 5, {0, 0, 0, 1, 0, 0}}, {5, 3, {0, 0, 0, -1, 0, 0}}, {5, 5, {0, 0, 1, 0, 0, 0}}}, fd),
             make_coalgebra(6, {{3, {{2, 4, p.k}}}, {5, {{2, 2, p.k}, {2, 4, -p.l}}}}, fd));
       }},
      {"Tensor_L6",
       [](const CatalogParams& p) {
         const Field fd = p.field;
         return tensor_fixture("Tensor_L6", "[x2,x2] = x1 = [x3,x3], d(x2) = k x1x1",
                               make_algebra(3, {{2, 2, {1, 0, 0}}, {3, 3, {1, 0, 0}}}, fd),
                               make_coalgebra(3, {{2, {{1, 1, p.k}}}}, fd),
                               make_algebra(6, {{3, 3, {0, 1, 0, 0, 0, 0}}, {5, 5, {0, 1, 0, 0, 0, 0}}}, fd),
                               make_coalgebra(6, {{3, {{2, 2, p.k}}}}, fd));
       }},
  };
  return m;
}

} // namespace

std::vector<std::string> catalog_names() {
  std::vector<std::string> out;
  for (const auto& [k, v] : builders()) out.push_back(k);
  return out;
}

Fixture catalog(const std::string& name, const CatalogParams& p) {
  auto it = builders().find(name);
  if (it == builders().end()) throw UnknownFixture("unknown fixture: " + name);
  return it->second(p);
}

} // namespace aleib
