#include "doctest.h"

#include "valext/errors.hpp"
#include "valext/report.hpp"

using namespace valext;

namespace {

ProblemSpec make(const std::string& cmd, const std::string& val, std::vector<std::string> polys, std::size_t w = 0) {
  ProblemSpec s;
  s.command = cmd;
  s.valuation = val;
  s.polys = std::move(polys);
  s.w = w;
  return s;
}

}  // namespace

TEST_CASE("extend report of the cubic") {
  auto r = run_problem(make("extend", "Q@2", {"x^3-2*x^2+x+2"}));
  const auto& ext = r["extend"]["extensions"];
  REQUIRE(ext.size() == 2);
  CHECK(ext[0]["e"] == 1);
  CHECK(ext[0]["f"] == 1);
  CHECK(ext[0]["d"] == 1);
  CHECK(ext[1]["e"] == 2);
  CHECK(ext[1]["f"] == 1);
  CHECK(ext[1]["d"] == 1);
  CHECK(failed_checks(r) == 0);
  const auto text = render_text(r);
  CHECK(text.find("Σn = 3 ✓") != std::string::npos);
}

TEST_CASE("galois and classify reports") {
  auto g = run_problem(make("galois", "Q@2", {"x^3-2*x^2+x+2"}));
  CHECK(render_text(g).find("|G|=6, g=3, |D|=|I|=|V|=2, chain (3,1,1,2)") != std::string::npos);
  CHECK(failed_checks(g) == 0);
  auto i3 = run_problem(make("galois", "Q@3", {"x^2+1"}));
  CHECK(render_text(i3).find("|G|=2, g=1, |D|=2, |I|=|V|=1") != std::string::npos);
  auto t = run_problem(make("galois", "Q@5", {"x-1"}));
  CHECK(t["galois"]["order"] == 1);

  auto qi = run_problem(make("classify", "Q@2", {"x^2+1"}));
  const auto& f = qi["classify"]["flags"];
  CHECK(f["local"] == true);
  CHECK(f["totally_ramified"] == true);
  CHECK(f["totally_wild"] == true);
  CHECK(f["tame"] == false);
  CHECK(f["totally_split"] == false);
  auto cq = run_problem(make("classify", "Q@2", {"x^3-2*x^2+x+2"}, 1));
  CHECK(cq["classify"]["lattice"]["line"] == "L1=L2=L3=Q; L4=L5=L6=L");
  CHECK(render_text(cq).find("L1=L2=L3=Q; L4=L5=L6=L") != std::string::npos);
  CHECK_THROWS_AS(run_problem(make("classify", "Q@2", {"x^2+1"}, 5)), DomainError);
}

TEST_CASE("text rendering carries the checks of the JSON report") {
  auto r = run_problem(make("galois", "Q@2", {"x^2-7", "x^2+1"}));
  const auto text = render_text(r);
  for (const auto& c : r["checks"]) CHECK(text.find(c["name"].get<std::string>()) != std::string::npos);
  CHECK(text.find(std::to_string(r["checks"].size()) + " checks, 0 failed") != std::string::npos);
}

TEST_CASE("JSON round trip is byte identical") {
  for (const auto& s : {make("extend", "Q@2", {"x^2+7"}), make("galois", "Q@3", {"x^2+1"}),
                        make("classify", "Q@2", {"x^3-2*x^2+x+2"}, 1), make("extend", "Fp(3,t)@inf", {"x^2-t"})}) {
    const std::string a = run_problem(s).dump(2);
    CHECK(Json::parse(a).dump(2) == a);
    CHECK(run_problem(s).dump(2) == a);
  }
  auto s = make("classify", "Q@2", {"x^2+1"}, 0);
  s.seed = 7;
  s.name = "n";
  CHECK(spec_to_json(spec_from_json(spec_to_json(s))) == spec_to_json(s));
  CHECK(rational_json(6, -4) == Json{{"num", "-3"}, {"den", "2"}});
}

TEST_CASE("input errors") {
  CHECK_THROWS_AS(run_problem(make("extend", "Q@2", {"x^2+"})), ParseError);
  CHECK_THROWS_AS(run_problem(make("extend", "Q@4", {"x^2+1"})), ParseError);
  CHECK_THROWS_AS(run_problem(make("extend", "Q@2", {"x^2-1"})), DomainError);
  auto big = make("galois", "Q@2", {"x^3-2"});
  big.max_closure = 4;
  CHECK_THROWS_AS(run_problem(big), ResourceError);
}

TEST_CASE("corpus verification") {
  auto empty = verify_corpus(Json::parse(R"({"entries": []})"));
  CHECK(empty.exit_code == 0);
  CHECK(render_verify_text(empty).find("0 checks") != std::string::npos);

  auto bad = verify_corpus(Json::parse(R"({"entries": [
    {"name": "bad", "spec": {"command": "extend", "valuation": "Q@2", "polys": ["x^2+1"]},
     "expect": {"extend": {"g": 2}}}]})"));
  CHECK(bad.exit_code == 1);
  REQUIRE(bad.failures.size() == 1);
  CHECK(bad.failures[0].find("bad: expect extend.g") == 0);

  auto perr = verify_corpus(Json::parse(R"([{"spec": {"valuation": "Q@2", "polys": ["x^^2"]}}])"));
  CHECK(perr.exit_code == 2);

  // a small corpus gives the same report serially and in parallel
  Json c = Json::parse(R"({"entries": [
    {"name": "a", "spec": {"command": "extend", "valuation": "Q@5", "polys": ["x^2+1"]}},
    {"name": "b", "spec": {"command": "galois", "valuation": "Q@2", "polys": ["x^2+1"]}},
    {"name": "c", "spec": {"command": "classify", "valuation": "Q@3", "polys": ["x-1"]}}]})");
  auto s = verify_corpus(c, false), p = verify_corpus(c, true);
  CHECK(s.report == p.report);
  CHECK(s.exit_code == 0);
}
