#include <catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "cli.hpp"
#include "corpus.hpp"
#include "hocolim/dsl.hpp"

using test_support::data_path;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = hocolim::cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

const std::string corpus = data_path("corpus.sset");

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("hocolim_cli_" + name);
}

}  // namespace

TEST_CASE("mobius of the span") {
  const Result r = run({"mobius", data_path("span.sset"), "--sset", "Nspan"});
  CHECK(r.code == 0);
  CHECK(r.out == "a: -1\nb: 1\nc: 1\ntotal: 1\n");
  CHECK(r.err.empty());
}

TEST_CASE("peeling output equals the default output") {
  for (const char* name : {"Nspan", "circle1", "circle2", "circle3", "bd3", "pinch", "S0"}) {
    INFO(name);
    const Result plain = run({"mobius", corpus, "--sset", name});
    const Result peeled = run({"mobius", corpus, "--sset", name, "--peeling"});
    CHECK(plain.code == 0);
    CHECK(plain.out == peeled.out);
    CHECK(run({"mobius", corpus, "--sset", name, "--format", "json"}).out ==
          run({"mobius", corpus, "--sset", name, "--format", "json"}).out);
  }
}

TEST_CASE("euler of the 2-sphere") {
  const Result r = run({"euler", data_path("bd3.sset"), "--sset", "K"});
  CHECK(r.code == 0);
  CHECK(r.out == "counts: 4 6 4\nchi (count): 2\nchi (homology): 2\nbetti: 1 0 1\n");
}

TEST_CASE("json output") {
  const Result r = run({"--format", "json", "euler", data_path("bd3.sset"), "--sset", "K"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["command"] == "euler");
  CHECK(j["inputs"]["sset"] == "K");
  CHECK(j["result"]["euler_count"] == "2");
  CHECK(j["result"]["betti"] == nlohmann::json::array({"1", "0", "1"}));

  const Result chi = run({"hocolim-chi", corpus, "--sset", "Nspan", "--weights", "wspan", "--format", "json"});
  REQUIRE(chi.code == 0);
  CHECK(nlohmann::json::parse(chi.out)["result"]["chi"] == nlohmann::json::array({"4", "4"}));
}

TEST_CASE("hocolim-chi") {
  CHECK(run({"hocolim-chi", corpus, "--sset", "Nspan", "--weights", "wspan"}).out == "chi: 4 4\n");
  CHECK(run({"hocolim-chi", corpus, "--sset", "circle1", "--weights", "wspan"}).code == 3);
}

TEST_CASE("class values") {
  const Result components = run({"mobius", corpus, "--sset", "circle2", "--classes", "components"});
  CHECK(components.code == 0);
  CHECK(components.out == "{v0 v1}: 0\ntotal: 0\n");

  const auto path = temp_file("partition.txt");
  {
    std::ofstream f(path);
    f << "# one class per line\nx0 x1\nx2\n\nx3\n";
  }
  const Result partition = run({"mobius", corpus, "--sset", "bd3", "--partition", path.string()});
  CHECK(partition.code == 0);
  CHECK(partition.out == "{x0 x1}: 1\n{x2}: 0\n{x3}: 1\ntotal: 2\n");
  {
    std::ofstream f(path);
    f << "x0 x1\n";
  }
  CHECK(run({"mobius", corpus, "--sset", "bd3", "--partition", path.string()}).code == 3);
  CHECK(run({"mobius", corpus, "--sset", "bd3", "--partition", path.string(), "--classes", "components"}).code == 5);
  std::filesystem::remove(path);
}

TEST_CASE("constructions write documents") {
  const Result nerve = run({"nerve", corpus, "--category", "I"});
  REQUIRE(nerve.code == 0);
  const auto doc = hocolim::dsl::parse(nerve.out);
  CHECK(hocolim::counts_by_dimension(*doc.sset("NI")) == std::vector<std::size_t>{4, 5, 2});

  const Result groth = run({"grothendieck", corpus, "--diagram", "collapse", "--name", "T"});
  REQUIRE(groth.code == 0);
  CHECK(hocolim::dsl::parse(groth.out).category("T")->object_count() == 3);

  const Result torus = run({"product", corpus, "--sset", "circle1", "--sset-b", "circle1"});
  REQUIRE(torus.code == 0);
  CHECK(hocolim::counts_by_dimension(*hocolim::dsl::parse(torus.out).sset("circle1xcircle1")) ==
        std::vector<std::size_t>{1, 3, 2});

  const Result cyl = run({"cylinder", corpus, "--sset", "circle2"});
  CHECK(cyl.code == 0);

  const auto path = temp_file("pushout.sset");
  const Result pushout = run({"pushout", corpus, "--map", "f0", "--map-g", "g0", "-o", path.string()});
  REQUIRE(pushout.code == 0);
  const auto written = hocolim::dsl::parse(test_support::read_file(path.string()));
  CHECK(hocolim::euler_char_combinatorial(*written.sset("Pf0_g0")) == 0);
  std::filesystem::remove(path);

  CHECK(run({"pushout", corpus, "--map", "f0", "--map-g", "f0"}).code == 0);
}

TEST_CASE("oracle batches") {
  CHECK(run({"oracle", corpus, "--kind", "grothendieck", "--seed", "1", "--count", "200"}).code == 0);
  CHECK(run({"oracle", corpus, "--kind", "pushout", "--seed", "1", "--count", "20"}).code == 0);
  const Result bundle = run({"oracle", corpus, "--kind", "bundle"});
  CHECK(bundle.code == 0);
  CHECK(bundle.out.find("circle1,circle1: formula 0, construction 0") != std::string::npos);
}

TEST_CASE("disagreement exits with 4 and prints the instance") {
  hocolim::OracleReport good;
  good.formula_value = good.construction_value = good.homology_value = 1;
  good.agree = true;
  hocolim::OracleReport bad = good;
  bad.construction_value = 2;
  bad.agree = false;
  bad.witness = "seed 9";
  bad.instance = "sset K {\n  v:0\n}\n";
  std::ostringstream err;
  CHECK(hocolim::cli::oracle_status(std::vector{good}, err) == 0);
  CHECK(err.str().empty());
  CHECK(hocolim::cli::oracle_status(std::vector{good, bad}, err) == 4);
  CHECK(err.str().find("seed 9") != std::string::npos);
  CHECK(err.str().find("sset K {") != std::string::npos);
}

TEST_CASE("gen") {
  for (const char* kind : {"poset", "sset", "diagram"}) {
    INFO(kind);
    const Result a = run({"gen", "--kind", kind, "--seed", "7"});
    CHECK(a.code == 0);
    CHECK(a.out == run({"gen", "--kind", kind, "--seed", "7"}).out);
    CHECK_NOTHROW(hocolim::dsl::parse(a.out));
  }
}

TEST_CASE("stdin input") {
  const Result r = run({"euler", "-", "--sset", "S1"}, "sset S1 { v:0 e:1 faces = v, v }");
  CHECK(r.code == 0);
  CHECK(r.out.find("betti: 1 1") != std::string::npos);
}

TEST_CASE("exit codes") {
  // parse error
  const Result parse = run({"validate", "-"}, "sset K {\n  v 0\n}");
  CHECK(parse.code == 2);
  CHECK(parse.out.empty());
  CHECK(parse.err.find("-:2:5:") != std::string::npos);
  // semantic error
  const Result semantic = run({"validate", "-"}, "sset K { v:0 e:1 }");
  CHECK(semantic.code == 3);
  CHECK(semantic.err.find("missing faces for 'e'") != std::string::npos);
  // validation error
  const std::string swapped =
      "sset T { a:0 b:0 c:0 ab:1 faces = b, a  ac:1 faces = c, a  bc:1 faces = c, b\n"
      "  abc:2 faces = ac, bc, ab }";
  const Result invalid = run({"validate", "-"}, swapped);
  CHECK(invalid.code == 3);
  CHECK(invalid.out.find("sset T: invalid") != std::string::npos);
  CHECK(run({"euler", "-", "--sset", "T"}, swapped).code == 3);
  const Result map = run({"validate", "-"}, "sset A { p:0 q:0 e:1 faces = q, p } sset B { x:0 y:0 }\n"
                                            "map f : A -> B { p |-> x q |-> y e |-> s0 x }");
  CHECK(map.code == 3);
  CHECK(run({"nerve", "-", "--category", "C"},
            "category C { objects x; mor e : x -> x; comp e * e = e; }").code == 3);
  // usage errors
  CHECK(run({}).code == 5);
  CHECK(run({"frobnicate"}).code == 5);
  CHECK(run({"euler", corpus}).code == 5);
  CHECK(run({"euler", corpus, "--sset", "nope"}).code == 5);
  CHECK(run({"euler", "/nonexistent/file.sset", "--sset", "K"}).code == 5);
  CHECK(run({"product", corpus, "--sset", "circle1"}).code == 5);
  CHECK(run({"oracle", corpus, "--kind", "sideways"}).code == 5);
  CHECK(run({"gen", "--kind", "sset"}).code == 5);
  CHECK(run({"euler", corpus, "--sset", "bd3", "--format", "yaml"}).code == 5);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("identical invocations give identical bytes") {
  const std::vector<std::vector<std::string>> invocations = {
      {"validate", corpus},
      {"euler", corpus, "--sset", "bd3", "--format", "json"},
      {"mobius", corpus, "--sset", "pinch"},
      {"nerve", corpus, "--category", "I", "--format", "json"},
      {"grothendieck", corpus, "--diagram", "Ipoints"},
      {"product", corpus, "--sset", "circle2", "--sset-b", "bd3"},
      {"oracle", corpus, "--kind", "pushout", "--seed", "3", "--count", "5", "--format", "json"},
      {"gen", "--kind", "diagram", "--seed", "11"},
  };
  for (const auto& args : invocations) {
    INFO(args.front());
    const Result a = run(args);
    const Result b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.err == b.err);
  }
}
