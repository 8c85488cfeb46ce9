#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "reesblow/session.hpp"
#include "support/testing.hpp"

using namespace testing;
using json = nlohmann::ordered_json;

namespace {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<OutputRecord> run(const std::string& script, SessionOptions options = {}) {
  Session s(std::move(options));
  return s.run(script);
}

const std::string kOrigin = "ring A QQ [x:0,y:0]; ideal I in A = [x,y]; rees R = A I";
const std::string kDual = "ring D QQ [e:0] mod [e^2]; ideal I in D = [e]; rees R = D I";

// Generators printed in the structured form parse back in a ring built
// from the structured weights and appear verbatim in the text form.
void check_round_trip(const OutputRecord& record) {
  const json& r = record.result;
  if (!r.contains("generators") || !r.contains("weights")) return;
  std::vector<Variable> vars;
  for (auto it = r["weights"].begin(); it != r["weights"].end(); ++it) vars.push_back(Variable{it.key(), it.value()});
  Field field = r.contains("field") ? Field::parse(r["field"].get<std::string>()) : Field::rationals();
  RingPtr ring = RingContext::make(field, vars);
  for (const auto& g : r["generators"]) {
    std::string text = g.get<std::string>();
    CHECK(parse_polynomial(text, ring).to_string() == text);
    CHECK(record.text.find(text) != std::string::npos);
  }
}

}  // namespace

TEST_CASE("script splitting") {
  auto cmds = split_script("ring A QQ [x:0]; nf A x # trailing\n\n  # only a comment\nmember A [x]");
  REQUIRE(cmds.size() == 3);
  CHECK(cmds[0].line == 1);
  CHECK(cmds[1].text == "nf A x");
  CHECK(cmds[2].line == 4);
  CHECK(split_script("ideal I in A = [x; y]").size() == 1);
}

TEST_CASE("origin script prints t-regular") {
  auto records = run(kOrigin + "; treg R");
  CHECK(records.back().text.find("t-regular: true") != std::string::npos);
}

TEST_CASE("dual numbers regularization prints v*e and v^2") {
  auto records = run(kDual + "; regularize R");
  const auto& rec = records.back();
  auto ring = RingContext::make(Field::rationals(), {{"e", 0}, {"v", 1}, {"u", -1}});
  auto kernel = rec.result["reports"]["kernel"];
  std::vector<Polynomial> gens;
  for (const auto& g : kernel) gens.push_back(parse_polynomial(g.get<std::string>(), ring));
  Ideal k(ring, gens);
  CHECK(k.contains(P(ring, "v*e")));
  CHECK(k.contains(P(ring, "v^2")));
  CHECK(rec.text.find("kernel: (" + P(ring, "v*e").to_string() + ", " + P(ring, "v^2").to_string() + ")") !=
        std::string::npos);
}

TEST_CASE("unknown command reports its line") {
  Session s;
  try {
    s.run("ring A QQ [x:0]\n\nfrobnicate A\n");
    FAIL("expected a script error");
  } catch (const ScriptError& e) {
    CHECK(e.line() == 3);
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  CHECK(s.records().size() == 1);
}

TEST_CASE("script errors") {
  CHECK_THROWS_AS(run("ring A QQ [x:0]; ring A QQ [y:0]"), ScriptError);
  CHECK_THROWS_AS(run("nf B x"), ScriptError);
  CHECK_THROWS_AS(run("ring A QQ [x:0]; nf A z"), ScriptError);
  CHECK_THROWS_AS(run("ring A QQ [x:0]; nf A x +"), ScriptError);
  CHECK_THROWS_AS(run("ring A QQ [x:0, v:1]; graded G = A; piece G"), ScriptError);
  CHECK_THROWS_AS(run("ring A QQ [x:0, v:1] mod [x + v]"), ScriptError);
  CHECK_THROWS_AS(run("ring A QQ [x:0, v:1, u:-1]; piece A 1"), ScriptError);
  CHECK_THROWS_AS(run("ring A QQ [x:0]; ideal I in A = [x"), ScriptError);
}

TEST_CASE("empty atlas structured form") {
  auto records = run("ring A QQ [x:0]; blowup A []");
  CHECK(records.back().result.dump() == R"({"kind":"atlas","charts":[],"empty":true})");
  CHECK(format_output(records.back(), OutputMode::Json) ==
        R"({"line":1,"command":"blowup A []","status":"ok","result":{"kind":"atlas","charts":[],"empty":true}})");
}

TEST_CASE("chart record of the origin blow-up") {
  auto records = run(kOrigin + "; B = blowup R");
  const json& chart = records.back().result["charts"][0];
  CHECK(chart["substitution"] == json::parse(R"({"v1":"1","v2":"w"})"));
  auto ring = RingContext::make(Field::rationals(), {{"x", 0}, {"y", 0}, {"w", 0}});
  std::vector<Polynomial> gens;
  for (const auto& g : chart["generators"]) gens.push_back(parse_polynomial(g.get<std::string>(), ring));
  CHECK(Ideal(ring, gens) == Ideal(ring, {P(ring, "y - x*w")}));
  CHECK(chart["generators"].size() == 1);
}

TEST_CASE("ideal generators in fixed order") {
  auto records = run("ring A QQ [x:0,y:0]; ideal I in A = [y^2, x*y, x^2]; gb I");
  CHECK(records[1].result["generators"] == json::parse(R"(["y^2","x*y","x^2"])"));
  CHECK(records[2].result["generators"] == json::parse(R"(["x^2","x*y","y^2"])"));
}

TEST_CASE("options") {
  SessionOptions fp;
  fp.field = Field::prime(5);
  auto records = run("ring A [x:0]; nf A 7*x", fp);
  CHECK(records.back().text == "nf = 2*x");

  SessionOptions lex;
  lex.order = MonomialOrder::lex();
  auto ordered = run("ring A [x:0, y:0]; ideal I in A = [x^2 - 1, x*y - 1]; gb I", lex);
  CHECK(ordered.back().result["generators"] == json::parse(R"(["x - y","y^2 - 1"])"));

  SessionOptions bounded;
  bounded.bound = 3;
  auto gen = run("ring B QQ [s:1, t:1]; gendeg1 B", bounded);
  CHECK(gen.back().result["reports"]["bound"] == 3);
}

TEST_CASE("replay reproduces records") {
  Session s;
  s.run(kOrigin + "; treg R; B = blowup R; twist B 1; E = exceptional R; F = deform R 2");
  auto replayed = Session::replay(s.log(), s.options());
  REQUIRE(replayed.size() == s.records().size());
  for (std::size_t i = 0; i < replayed.size(); ++i) {
    CHECK(replayed[i].line == s.records()[i].line);
    CHECK(replayed[i].command == s.records()[i].command);
    CHECK(replayed[i].text == s.records()[i].text);
    CHECK(replayed[i].result == s.records()[i].result);
    CHECK(format_output(replayed[i], OutputMode::Json) == format_output(s.records()[i], OutputMode::Json));
  }
}

TEST_CASE("golden scripts: text and structured payloads agree") {
  std::filesystem::path dir = REESBLOW_GOLDEN_DIR;
  int scripts = 0;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.path().extension() != ".rbs") continue;
    std::string body = read_file(entry.path());
    Session s;
    try {
      s.run(body);
    } catch (const ScriptError&) {
    }
    ++scripts;
    for (const auto& record : s.records()) {
      INFO(entry.path().filename().string() << ": " << record.command);
      check_round_trip(record);
    }
    auto again = Session::replay(s.log(), s.options());
    CHECK(format_document(again, OutputMode::Json) == format_document(s.records(), OutputMode::Json));
    CHECK(format_document(again, OutputMode::Text) == format_document(s.records(), OutputMode::Text));
  }
  CHECK(scripts >= 5);
}
