#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "valext/extension.hpp"
#include "valext/finite_factor.hpp"
#include "valext/galois.hpp"
#include "valext/kummer.hpp"
#include "valext/parse.hpp"
#include "valext/report.hpp"
#include "valext/tower.hpp"

using namespace valext;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

QPoly qp(const std::string& s) { return to_rational_poly(parse_polynomial(s)); }

int failures = 0;

void report(int n, const std::string& what, bool ok, const std::string& detail) {
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << n << ": " << what;
  if (!detail.empty()) std::cout << " (" << detail << ")";
  std::cout << "\n";
  if (!ok) ++failures;
}

// run a criterion, turning exceptions into a FAIL line
void criterion(int n, const std::string& what, const std::function<bool(std::string&)>& body) {
  std::string detail;
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail += std::string(detail.empty() ? "" : "; ") + "exception: " + e.what();
  }
  report(n, what, ok, detail);
}

ProblemSpec spec(const std::string& cmd, const std::string& val, std::vector<std::string> polys, std::size_t w = 0) {
  ProblemSpec s;
  s.command = cmd;
  s.valuation = val;
  s.polys = std::move(polys);
  s.w = w;
  return s;
}

bool check_passes(const Json& r, const std::string& name) {
  for (const auto& c : r["checks"])
    if (c["name"] == name) return c["pass"].get<bool>();
  return false;
}

// passes of every check whose name starts with prefix; returns how many there were
long prefixed_checks(const Json& r, const std::string& prefix, bool& all_pass) {
  long n = 0;
  for (const auto& c : r["checks"])
    if (c["name"].get<std::string>().rfind(prefix, 0) == 0) {
      ++n;
      all_pass = all_pass && c["pass"].get<bool>();
    }
  return n;
}

std::vector<int> mod_p_degrees(const DiscreteValuation<Rational>& v, const QPoly& f) {
  std::vector<GF> c;
  for (const auto& a : f.coeffs()) c.push_back(v.residue(a));
  GFPoly fb(GF(v.residue_field()), std::move(c));
  std::vector<int> out;
  for (const auto& [prod, d] : distinct_degree(fb))
    for (int k = 0; k < prod.degree() / d; ++k) out.push_back(d);
  std::ranges::sort(out);
  return out;
}

const std::vector<std::uint64_t> kPrimes = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41,
                                            43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};

QPoly random_monic(std::mt19937_64& rng, int deg, int bound) {
  std::vector<Rational> c;
  for (int i = 0; i < deg; ++i) c.push_back(Rational(static_cast<long>(rng() % (2 * bound + 1)) - bound));
  c.push_back(Rational(1));
  return QPoly(Rational(0), c);
}

template <class F>
bool axiom_suite(const DiscreteValuation<F>& v, std::mt19937_64& rng, long& samples) {
  const auto base = base_of(v.proto());
  ValuationRelation<F> rel{v};
  bool ok = true;
  while (samples < 1000) {
    F x = base.random(rng, 6), y = base.random(rng, 6), z = base.random(rng, 6);
    if (is_zero(x) || is_zero(y) || is_zero(z)) continue;
    ++samples;
    const long vx = v.order(x), vy = v.order(y);
    // relation and ring agree with the order
    ok = ok && rel.leq(x, y) == (vx <= vy);
    ok = ok && (rel.leq(x, y) || rel.leq(y, x));
    if (rel.leq(x, y) && rel.leq(y, z)) ok = ok && rel.leq(x, z);
    if (rel.leq(x, y)) ok = ok && rel.leq(x * z, y * z);
    if (rel.leq(x, y) && rel.leq(x, z) && !is_zero(y + z)) ok = ok && rel.leq(x, y + z);
    ok = ok && v.order(x * y) == vx + vy;
    if (!is_zero(x + y)) {
      const long vs = v.order(x + y);
      ok = ok && vs >= std::min(vx, vy);
      if (vx != vy) ok = ok && vs == std::min(vx, vy);
    }
  }
  const F one = one_like(v.proto());
  ok = ok && !rel.leq(one, v.uniformizer() / (v.uniformizer() * v.uniformizer()));
  ok = ok && rel.leq(one, v.uniformizer());
  return ok;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main() {
  criterion(1, "cubic x^3-2x^2+x+2 at 2 has (e,f,d) = (1,1,1), (2,1,1)", [](std::string& d) {
    const auto t0 = Clock::now();
    ValuedExtension<Rational> ext(DiscreteValuation<Rational>(2), qp("x^3-2*x^2+x+2"));
    const double s = seconds_since(t0);
    const auto& sd = ext.splitting();
    std::multiset<std::tuple<long, long, long>> got, want{{1, 1, 1}, {2, 1, 1}};
    for (std::size_t i = 0; i < sd.g(); ++i) {
      const auto b = ext.invariants(i);
      got.insert({b.e, b.f, b.d});
    }
    d = "g=" + std::to_string(sd.g()) + ", Σn=" + std::to_string(sd.sum_n()) + ", " + std::to_string(s) + " s";
    return got == want && sd.g() == 2 && sd.sum_n() == 3 && s < 1.0;
  });

  criterion(2, "Galois closure of the cubic at 2", [](std::string& d) {
    const auto t0 = Clock::now();
    const Json r = run_problem(spec("galois", "Q@2", {"x^3-2*x^2+x+2"}));
    const double s = seconds_since(t0);
    const auto& g = r["galois"];
    bool ok = g["order"] == 6 && g["g"] == 3 && g["chain"] == Json({3, 1, 1, 2});
    for (const auto& w : g["closure"]["extensions"]) ok = ok && w["e"] == 2 && w["f"] == 1;
    // x over the restriction to the conjugate of L where it is unramified
    const auto& emb = g["inputs"][0]["embeddings"];
    bool wild = false;
    for (const auto& e : emb)
      if (r["galois"]["inputs"][0]["extension"]["extensions"][e["w"].get<int>()]["e"] == 1)
        wild = e["closure_flags"]["totally_wild"].get<bool>();
    d = "|G|=" + g["order"].dump() + ", g=" + g["g"].dump() + ", chain " + g["chain"].dump() + ", " +
        std::to_string(s) + " s";
    return ok && wild && failed_checks(r) == 0 && s < 10.0;
  });

  criterion(3, "quadratic trio at 2 and the biquadratic closure", [](std::string& d) {
    const Json r = run_problem(spec("galois", "Q@2", {"x^2-7", "x^2+1", "x^2+7"}));
    const auto& in = r["galois"]["inputs"];
    const auto flag = [&](int j, const char* f) {
      bool all = true;
      for (const auto& e : in[j]["embeddings"]) all = all && e["flags"][f].get<bool>();
      return all;
    };
    bool not_local = false, corollary = false;
    for (const auto& c : r["galois"]["composita"]) {
      if (c["field"] == 0 && c["over"] == 1) not_local = !c["flags"]["local"].get<bool>();
      // Q(sqrt-7)/Q is unramified at 2, so is its compositum with Q(i) over Q(i)
      if (c["field"] == 2 && c["over"] == 1)
        corollary = c["flags"]["unramified"].get<bool>() && c["flags"]["immediate"].get<bool>() &&
                    c["flags"]["totally_split"].get<bool>();
    }
    const bool suite = check_passes(r, "compositum corollary");
    d = "wild " + std::to_string(flag(0, "totally_wild")) + std::to_string(flag(1, "totally_wild")) + ", split " +
        std::to_string(flag(2, "totally_split")) + ", not local " + std::to_string(not_local);
    return flag(0, "totally_wild") && flag(1, "totally_wild") && flag(2, "totally_split") && not_local && corollary &&
           suite && failed_checks(r) == 0;
  });

  criterion(4, "subextension lattice of the cubic at q", [](std::string& d) {
    const Json r = run_problem(spec("classify", "Q@2", {"x^3-2*x^2+x+2"}, 1));
    const std::string line = r["classify"]["lattice"]["line"];
    d = line;
    return line == "L1=L2=L3=Q; L4=L5=L6=L" && failed_checks(r) == 0;
  });

  criterion(5, "fundamental equality on 500 random instances", [](std::string& d) {
    std::mt19937_64 rng(20240501);
    const auto t0 = Clock::now();
    int done = 0, oracle = 0;
    bool ok = true;
    while (done < 500) {
      const std::uint64_t p = kPrimes[rng() % kPrimes.size()];
      const int deg = 1 + static_cast<int>(rng() % 5);
      const QPoly f = random_monic(rng, deg, 12);
      if (!is_separable(f) || !is_irreducible_rational(f)) continue;
      DiscreteValuation<Rational> v(p);
      ValuedExtension<Rational> ext(v, f);
      long sum = 0;
      for (std::size_t i = 0; i < ext.splitting().g(); ++i) {
        const auto b = ext.invariants(i);
        sum += b.e * b.f * b.d;
        ok = ok && b.d == 1;
      }
      ok = ok && sum == deg;
      if (v.order(discriminant(f)) == 0) {
        ++oracle;
        std::vector<int> fs;
        for (const auto& w : ext.splitting().extensions) {
          fs.push_back(w.f);
          ok = ok && w.e == 1;
        }
        std::ranges::sort(fs);
        ok = ok && fs == mod_p_degrees(v, f);
      }
      ++done;
    }
    const double s = seconds_since(t0);
    d = std::to_string(done) + " instances, " + std::to_string(oracle) + " against the mod-p oracle, " +
        std::to_string(s) + " s";
    return ok && s < 60.0;
  });

  criterion(6, "multiplicativity on 200 random towers", [](std::string& d) {
    std::mt19937_64 rng(77);
    int done = 0, attempts = 0;
    bool ok = true;
    const std::uint64_t ps[] = {2, 3, 5, 7};
    while (done < 200 && attempts < 5000) {
      ++attempts;
      const std::uint64_t p = ps[rng() % 4];
      const int d1 = 2 + static_cast<int>(rng() % 2);
      const QPoly f1 = random_monic(rng, d1, 6);
      if (!is_separable(f1) || !is_irreducible_rational(f1)) continue;
      FieldTower<Rational> tw{Rational(0)};
      tw.add_step(f1);
      const auto a = tw.generator(0);
      NfElem<Rational> c0 = one_like(a).scaled(Rational(static_cast<long>(rng() % 13) - 6)) +
                            a.scaled(Rational(static_cast<long>(rng() % 7) - 3));
      NfElem<Rational> c1 = one_like(a).scaled(Rational(static_cast<long>(rng() % 7) - 3));
      Poly<NfElem<Rational>> step(a, {c0, c1, one_like(a)});
      try {
        tw.add_step(step);
      } catch (const DomainError&) {
        continue;
      }
      DiscreteValuation<Rational> v(p);
      ValuedExtension<Rational> lower(v, tw.level(1));
      ValuedExtension<Rational> upper(v, tw.level(2));
      const auto embed = [&](const NfElem<Rational>& x) { return tw.embed(1, x, 2); };
      std::vector<long> sum_over(lower.splitting().g(), -1);
      for (std::size_t j = 0; j < upper.splitting().g(); ++j) {
        const auto tc = tower_compose(lower, upper, j, embed);
        const auto prod = tc.lower.times(tc.upper);
        ok = ok && tc.composite.same_nine(prod);
        sum_over[tc.w1] = tc.sum_upper_n;
      }
      // fundamental equality for the upper step over every w1
      for (long s : sum_over) ok = ok && s == 2;
      ++done;
    }
    d = std::to_string(done) + " towers";
    return ok && done == 200;
  });

  // Galois corpus instances
  const Json corpus = Json::parse(builtin_corpus_text());
  std::vector<Json> galois_reports, all_reports;
  std::string corpus_error;
  try {
    for (const auto& e : corpus["entries"]) {
      const Json r = run_problem(spec_from_json(e["spec"]), true);
      all_reports.push_back(r);
      if (r.contains("galois")) galois_reports.push_back(r);
    }
  } catch (const std::exception& e) {
    corpus_error = e.what();
  }

  criterion(7, "orbit formulas on every Galois corpus instance", [&](std::string& d) {
    if (!corpus_error.empty()) throw std::runtime_error(corpus_error);
    bool ok = !galois_reports.empty();
    long n = 0;
    for (const auto& r : galois_reports) {
      long irreducible = 0;
      for (const auto& in : r["galois"]["inputs"]) irreducible += in["irreducible"].get<bool>() ? 1 : 0;
      const long a = prefixed_checks(r, "orbit formulas", ok);
      const long b = prefixed_checks(r, "orbit bijection", ok);
      const long c = prefixed_checks(r, "valuations with f_s = 1", ok);
      ok = ok && a == irreducible && b == irreducible && c == irreducible;
      n += a + b + c;
    }
    d = std::to_string(galois_reports.size()) + " instances, " + std::to_string(n) + " checks";
    return ok;
  });

  criterion(8, "group structure on every Galois corpus instance", [&](std::string& d) {
    if (!corpus_error.empty()) throw std::runtime_error(corpus_error);
    bool ok = !galois_reports.empty();
    const char* names[] = {"transitivity", "conjugation covariance", "D/I cyclic of order f_s",
                           "|I/V| = e_t",  "V is a p-group",         "roots of unity"};
    for (const auto& r : galois_reports)
      for (const char* n : names) ok = ok && check_passes(r, n);
    d = std::to_string(galois_reports.size()) + " instances";
    return ok;
  });

  criterion(9, "Kummer lemma", [](std::string& d) {
    bool ok = kummer_abelian_test(Rational(-4), 4) && !kummer_abelian_test(Rational(2), 4) &&
              kummer_abelian_test(Rational(9), 2);
    ok = ok && splitting_field_is_abelian(Rational(-4), 4) == std::optional<bool>(true) &&
         splitting_field_is_abelian(Rational(2), 4) == std::optional<bool>(false) &&
         splitting_field_is_abelian(Rational(9), 2) == std::optional<bool>(true);
    std::mt19937_64 rng(99);
    int checked = 0;
    for (int trial = 0; trial < 1000 && checked < 50; ++trial) {
      const unsigned long n = 1 + rng() % 6;
      long num = static_cast<long>(rng() % 65) - 32;
      if (num == 0) continue;
      if (rng() % 3 == 0) {
        const long r = 1 + static_cast<long>(rng() % 3);
        long pw = 1;
        for (unsigned long k = 0; k < n; ++k) pw *= r;
        num = (rng() % 2 ? -1 : 1) * pw;
      }
      const Rational a = make_rational(num, 1 + static_cast<long>(rng() % 2));
      const auto brute = splitting_field_is_abelian(a, n);
      if (!brute) continue;
      ok = ok && *brute == kummer_abelian_test(a, n);
      ++checked;
    }
    d = "3 tabled cases, " + std::to_string(checked) + " random cases";
    return ok && checked == 50;
  });

  criterion(10, "valuation axioms and Hensel certification", [&](std::string& d) {
    if (!corpus_error.empty()) throw std::runtime_error(corpus_error);
    std::mt19937_64 rng(1234);
    long s2 = 0, s3 = 0, s97 = 0, st = 0, sq = 0, si = 0;
    bool ok = axiom_suite(DiscreteValuation<Rational>(2), rng, s2) && axiom_suite(DiscreteValuation<Rational>(3), rng, s3) &&
              axiom_suite(DiscreteValuation<Rational>(97), rng, s97) &&
              axiom_suite(DiscreteValuation<RatFunc>(3, FpPoly(3, {0, 1})), rng, st) &&
              axiom_suite(DiscreteValuation<RatFunc>(2, FpPoly(2, {1, 1, 1})), rng, sq) &&
              axiom_suite(DiscreteValuation<RatFunc>::at_infinity(5), rng, si);
    const long smallest = std::min({s2, s3, s97, st, sq, si});
    ok = ok && smallest >= 1000;
    long hensel = 0;
    for (const auto& r : all_reports) hensel += prefixed_checks(r, "hensel certification", ok);
    long total = 0;
    for (long s : {s2, s3, s97, st, sq, si}) total += s;
    d = std::to_string(total) + " axiom samples over 6 valuations (min " + std::to_string(smallest) + "), " +
        std::to_string(hensel) + " certified factorizations";
    return ok && hensel >= static_cast<long>(all_reports.size());
  });

  criterion(11, "negative control: corrupted corpus", [](std::string& d) {
    const auto out = verify_corpus(Json::parse(read_file(VALEXT_SOURCE_DIR "/corpus/corrupted.json")));
    bool named = false;
    for (const auto& f : out.failures) named = named || f.find("corrupted cubic at 2: expect extend.g") == 0;
    d = "exit " + std::to_string(out.exit_code) + ", " + std::to_string(out.failures.size()) + " failed";
    return out.exit_code == 1 && named && out.failures.size() == 1;
  });

  return failures == 0 ? 0 : 1;
}
