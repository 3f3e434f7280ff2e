#include <filesystem>
#include <fstream>
#include <sstream>

#include "aleib/catalog.hpp"
#include "aleib/cli.hpp"
#include "aleib/io.hpp"
#include "doctest.h"

using namespace aleib;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& text) {
  fs::path dir = fs::temp_directory_path() / "aleib_cli_tests";
  fs::create_directories(dir);
  fs::path p = dir / name;
  std::ofstream(p) << text;
  return p.string();
}

const char* lambda21_text = R"j({"field": "Q", "dim": 2, "products": [{"i": 1, "j": 1, "out": ["0", "1"]}]})j";
const char* bialgebra_text =
    R"j({"field": "Q", "dim": 2, "products": [{"i": 1, "j": 1, "out": ["0", "1"]}],
        "coproducts": [{"k": 1, "out": [{"i": 2, "j": 2, "c": "1"}]}]})j";

} // namespace

TEST_CASE("check verbs and exit codes") {
  Run ok = cli({"check", "algebra", temp_file("l21.json", lambda21_text)});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("[pass] anti-Leibniz") != std::string::npos);

  Run bad = cli({"--machine", "check", "algebra", temp_file("idem.json", R"j({"dim": 1, "products": [{"i": 1, "j": 1, "out": ["1"]}]})j")});
  CHECK(bad.code == 1);
  Json rep = Json::parse(bad.out);
  CHECK(rep["verdict"] == "fail");
  CHECK(rep["clauses"][0]["witness"] == Json::array({1, 1, 1}));

  CHECK(cli({"check", "algebra", "/nonexistent/file.json"}).code == 2);
  CHECK(cli({"frobnicate"}).code == 2);
  CHECK(cli({"check", "nothing", "x.json"}).code == 2);
  CHECK(cli({"check", "algebra", temp_file("l21b.json", lambda21_text), "--field", "GF(4)"}).code == 2);
  CHECK(cli({"check", "bialgebra", temp_file("bi.json", bialgebra_text)}).code == 0);
}

TEST_CASE("build double reproduces the catalog double") {
  std::string out = (fs::temp_directory_path() / "aleib_cli_tests" / "double.json").string();
  Run r = cli({"build", "double", temp_file("bi2.json", bialgebra_text), "-o", out});
  CHECK(r.code == 0);
  Document d = load_document(out);
  Fixture fx = catalog("Double4");
  CHECK(d.dim == 4);
  CHECK(read_algebra(d) == fx.alg);
  CHECK(read_coalgebra(d) == *fx.coa);
  CHECK(read_r(d) == *fx.r);
}

TEST_CASE("canonical round trip") {
  Json j = header_json(Field::Q(), 2);
  write_algebra(j, catalog("Lambda2_1").alg);
  const std::string canon = canonical_text(j);
  CHECK(canonicalize(canon) == canon);
  CHECK(canonicalize(lambda21_text) == canon);
  std::string halves = canonicalize(R"j({"dim": 1, "products": [{"i": 1, "j": 1, "out": ["2/4"]}]})j");
  CHECK(halves.find("\"1/2\"") != std::string::npos);
  CHECK(halves.find("2/4") == std::string::npos);
}

TEST_CASE("schema and parse errors") {
  Document mixed = parse_document(R"j({"field": "GF(2)", "dim": 1, "products": [{"i": 1, "j": 1, "out": ["1/3"]}]})j");
  CHECK_THROWS_AS(read_algebra(mixed), SchemaError);
  try {
    parse_document("{\n  \"dim\": 2,\n  \"products\": [,]\n}");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  try {
    read_algebra(parse_document(R"j({"dim": 2, "products": [{"i": 3, "j": 1, "out": ["0", "1"]}]})j"));
    FAIL("expected a schema error");
  } catch (const SchemaError& e) {
    CHECK(std::string(e.what()).find("\"i\"") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_document(R"j({"products": []})j"), SchemaError);
  Run r = cli({"check", "algebra", temp_file("mixed.json", R"j({"field": "GF(2)", "dim": 1, "products": [{"i": 1, "j": 1, "out": ["1/3"]}]})j")});
  CHECK(r.code == 2);
  CHECK(r.err.find("rational scalar") != std::string::npos);
}

TEST_CASE("machine reports are deterministic") {
  std::vector<std::string> args{"--machine", "ybe", "suite", "--seed", "5", "--count", "40"};
  Run a = cli(args), b = cli(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  Run s1 = cli({"--machine", "check", "equivalence", "--seed", "9", "--count", "30"});
  Run s2 = cli({"--machine", "check", "equivalence", "--seed", "9", "--count", "30"});
  CHECK(s1.out == s2.out);
  CHECK(Json::parse(s1.out)["verdict"] == "pass");
}

TEST_CASE("search, affine, rb and catalog verbs") {
  Run s = cli({"--machine", "search", "structures", "--field", "gf2", "--dim", "2", "--orbits"});
  CHECK(s.code == 0);
  Json rep = Json::parse(s.out);
  CHECK(rep["data"]["count"] == 13);
  CHECK(rep["data"]["orbits"].size() == 4);
  CHECK(cli({"search", "structures", "--field", "gf2", "--dim", "3"}).code == 2);
  CHECK(cli({"search", "structures", "--field", "gf2", "--dim", "2", "--budget", "10"}).code == 2);

  Run y = cli({"--machine", "search", "ybe", "--input", temp_file("l21c.json", lambda21_text), "--field", "gf2"});
  CHECK(y.code == 0);
  CHECK(Json::parse(y.out)["data"]["count"] == 4);

  Run w = cli({"affine", "check", temp_file("bi3.json", bialgebra_text), "--window", "3"});
  CHECK(w.code == 0);
  CHECK(w.out.find("coalgebra (k,p,q,r) probes") != std::string::npos);
  const char* broken = R"j({"dim": 2, "products": [{"i": 1, "j": 1, "out": ["0", "1"]}],
                           "coproducts": [{"k": 2, "out": [{"i": 1, "j": 1, "c": "1"}]}]})j";
  CHECK(cli({"affine", "check", temp_file("broken.json", broken), "--window", "2"}).code == 1);

  Fixture fx = catalog("Double4");
  Json doc = header_json(Field::Q(), 4);
  write_algebra(doc, fx.alg);
  write_r(doc, *fx.r);
  std::string rbfile = (fs::temp_directory_path() / "aleib_cli_tests" / "rb.json").string();
  CHECK(cli({"rb", "from-factorizable", temp_file("dbl.json", canonical_text(doc)), "--lambda", "2", "-o", rbfile}).code == 0);
  std::string back = (fs::temp_directory_path() / "aleib_cli_tests" / "back.json").string();
  CHECK(cli({"rb", "to-factorizable", rbfile, "-o", back}).code == 0);
  CHECK(read_r(load_document(back)) == *fx.r);

  Run c = cli({"catalog", "show", "Lambda2_1_bialgebra"});
  CHECK(c.code == 0);
  CHECK(cli({"catalog", "show", "NoSuchThing"}).code == 2);
  CHECK(cli({"catalog", "list"}).out.find("Tensor_L1") != std::string::npos);
}
