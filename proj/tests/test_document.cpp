#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "hemi/constructions.hpp"
#include "hemi/document.hpp"
#include "hemi/finord.hpp"
#include "hemi/kalman.hpp"

using namespace hemi;

namespace {

std::string fixture_path(const std::string& name) { return std::string(HEMI_FIXTURES) + "/" + name; }

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("fixtures round trip byte for byte") {
  for (const char* name : {"three_chain_hemi.json", "two_chain_semi_heyting.json", "boolean4_hilbert.json",
                           "boolean4.json", "kleene_chain3.json", "boolean4_heyting.json", "pentagon.json",
                           "kleene7_no_ck.json", "k_two_chain_semi_heyting.json"}) {
    INFO(name);
    const auto text = slurp(fixture_path(name));
    const auto a = parse_algebra(text);
    CHECK(serialize_algebra(a) == text);
    CHECK(parse_algebra(serialize_algebra(a)) == a);
  }
}

TEST_CASE("constructed algebras survive a round trip") {
  for (const auto& a : {chain(5), boolean_lattice(3), kalman_of_heyting(with_heyting_arrow(chain(3))).algebra,
                        kalman_of_hbdl(three_chain_hemi()).algebra}) {
    const auto back = parse_algebra(serialize_algebra(a));
    CHECK(serialize_algebra(back) == serialize_algebra(a));
    CHECK(back.leq == a.leq);
    CHECK(back.arrow == a.arrow);
    CHECK(back.involution == a.involution);
  }
}

TEST_CASE("minimal document") {
  const auto a = load_algebra_file(fixture_path("minimal.json"));
  CHECK(a.size() == 1);
  CHECK_FALSE(a.meet.has_value());
  CHECK_FALSE(a.bottom.has_value());
  CHECK(a.name(0) == "0");
  CHECK(serialize_algebra(a).find("\"names\": [\"0\"]") != std::string::npos);
}

TEST_CASE("inconsistent meet names the cell") {
  try {
    load_algebra_file(fixture_path("bad_meet.json"));
    FAIL("expected a consistency error");
  } catch (const ConsistencyError& e) {
    CHECK(std::string(e.what()).find("meet[1][2]") != std::string::npos);
  }
  CHECK_NOTHROW(load_algebra_file(fixture_path("bad_meet.json"), false));
}

TEST_CASE("non-poset order is a consistency error") {
  CHECK_THROWS_AS(load_algebra_file(fixture_path("not_poset.json")), ConsistencyError);
  const auto raw = load_algebra_file(fixture_path("not_poset.json"), false);
  CHECK_FALSE(validate_poset(raw.leq).ok());
}

TEST_CASE("syntax errors carry a position") {
  try {
    load_algebra_file(fixture_path("syntax_error.json"));
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);  // the closing brace where ] was expected
    CHECK(e.column() >= 1);
  }
}

TEST_CASE("schema problems are parse errors") {
  CHECK_THROWS_AS(parse_algebra(R"({"size": 1, "leq": [[1]], "colour": 3})"), ParseError);
  CHECK_THROWS_AS(parse_algebra(R"({"size": 2, "leq": [[1]]})"), ParseError);
  CHECK_THROWS_AS(parse_algebra(R"({"size": 1, "leq": [[2]]})"), ParseError);
  CHECK_THROWS_AS(parse_algebra(R"({"leq": [[1]]})"), ParseError);
  CHECK_THROWS_AS(parse_algebra(R"({"size": 1, "leq": [[1]], "ops": {"neg": [3]}})"), ParseError);
  CHECK_THROWS_AS(parse_algebra(R"({"size": 1, "leq": [[1]], "ops": {"plus": [[0]]}})"), ParseError);
  CHECK_THROWS_AS(parse_algebra(R"({"size": 1, "leq": [[1]], "names": ["a", "b"]})"), ParseError);
  CHECK_THROWS_AS(load_algebra_file("/nonexistent/file.json"), InputError);
}

TEST_CASE("K of the four-element Boolean algebra serializes with pair names") {
  const auto k = kalman_of_bdl(boolean_lattice(2));
  const auto text = serialize_algebra(k.algebra);
  const auto back = parse_algebra(text);
  CHECK(back.size() == 9);
  CHECK(text.find("\"(a,b)\"") != std::string::npos);
  CHECK(back.center == k.algebra.center);
  CHECK(back.involution == k.algebra.involution);
}

TEST_CASE("files written to disk read back") {
  const auto dir = std::filesystem::temp_directory_path() / "hemi_doc_test";
  std::filesystem::create_directories(dir);
  const auto path = (dir / "k.json").string();
  const auto a = kalman_of_his(boolean4_hilbert()).algebra;
  {
    std::ofstream out(path);
    out << serialize_algebra(a);
  }
  CHECK(load_algebra_file(path) == a);
  std::filesystem::remove_all(dir);
}
