#include "valext/report.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "valext/extension.hpp"
#include "valext/finite_factor.hpp"
#include "valext/galois.hpp"
#include "valext/parse.hpp"

namespace valext {

namespace {

Json rat(const Rational& r) {
  return Json{{"num", r.get_num().get_str()}, {"den", r.get_den().get_str()}};
}

struct Checks {
  Json list = Json::array();
  void add(const std::string& name, bool ok, const std::string& detail = "") {
    Json c{{"name", name}, {"pass", ok}};
    if (!detail.empty()) c["detail"] = detail;
    list.push_back(std::move(c));
  }
};

std::string join(const std::vector<long>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

template <class F>
struct Kit;

template <>
struct Kit<Rational> {
  static DiscreteValuation<Rational> valuation(const ValuationDescriptor& d) { return DiscreteValuation<Rational>(d.p); }
  static Poly<Rational> poly(const IntPoly2& p, const ValuationDescriptor&) { return to_rational_poly(p); }
  static std::string base_name(const ValuationDescriptor&) { return "Q"; }
};

template <>
struct Kit<RatFunc> {
  static DiscreteValuation<RatFunc> valuation(const ValuationDescriptor& d) {
    return d.infinite ? DiscreteValuation<RatFunc>::at_infinity(d.p) : DiscreteValuation<RatFunc>(d.p, d.place);
  }
  static Poly<RatFunc> poly(const IntPoly2& p, const ValuationDescriptor& d) { return to_function_poly(p, d.p); }
  static std::string base_name(const ValuationDescriptor& d) { return "F" + std::to_string(d.p) + "(t)"; }
};

Json flags_json(const ClassificationFlags& f) {
  return Json{{"immediate", f.immediate},
              {"unramified", f.unramified},
              {"tame", f.tame},
              {"local", f.local},
              {"totally_ramified", f.totally_ramified},
              {"totally_wild", f.totally_wild},
              {"totally_split", f.totally_split}};
}

std::vector<std::pair<std::string, bool ClassificationFlags::*>> flag_members() {
  return {{"immediate", &ClassificationFlags::immediate},
          {"unramified", &ClassificationFlags::unramified},
          {"tame", &ClassificationFlags::tame},
          {"local", &ClassificationFlags::local},
          {"totally_ramified", &ClassificationFlags::totally_ramified},
          {"totally_wild", &ClassificationFlags::totally_wild},
          {"totally_split", &ClassificationFlags::totally_split}};
}

// flags of w/v read off the invariants of w and the degree of L
ClassificationFlags flags_from_invariants(const InvariantBundle& b, long degree) {
  ClassificationFlags f;
  f.immediate = b.n == 1;
  f.unramified = b.e_t * b.d_w == 1;
  f.tame = b.d_w == 1;
  f.local = b.g == 1;
  f.totally_ramified = b.g == 1 && b.f_s == 1;
  f.totally_wild = b.g == 1 && b.f_s == 1 && b.e_t == 1;
  f.totally_split = b.g == degree;
  return f;
}

bool is_p_power(long a, std::uint64_t p) {
  if (p == 0) return a == 1;
  while (a % static_cast<long>(p) == 0) a /= static_cast<long>(p);
  return a == 1;
}

template <class F>
Json extension_rows(const ValuedExtension<F>& ext) {
  Json rows = Json::array();
  const auto& sd = ext.splitting();
  for (std::size_t i = 0; i < sd.g(); ++i) {
    const auto b = ext.invariants(i);
    const auto& w = sd.extensions[i];
    rows.push_back(Json{{"w", i},
                        {"e", b.e},
                        {"e_t", b.e_t},
                        {"e_w", b.e_w},
                        {"f", b.f},
                        {"f_s", b.f_s},
                        {"f_i", b.f_i},
                        {"n", b.n},
                        {"d", b.d},
                        {"d_w", b.d_w},
                        {"slope", rat(w.slope)},
                        {"residue_factor", w.residue_factor.to_string("x")}});
  }
  return rows;
}

template <class F>
Json extension_summary(const ValuedExtension<F>& ext) {
  const auto& sd = ext.splitting();
  return Json{{"polynomial", ext.field()->modulus.to_string("x")},
              {"degree", ext.degree()},
              {"g", sd.g()},
              {"sum_n", sd.sum_n()},
              {"extensions", extension_rows(ext)}};
}

template <class F>
std::vector<LocalFactor<F>> certified_factors(const DiscreteValuation<F>& v, const Poly<F>& f) {
  long prec = 0;
  for (;;) {
    try {
      return hensel_factor(v, f, prec);
    } catch (const PrecisionError& e) {
      prec = e.suggested();
    }
  }
}

template <class F>
void extension_checks(const ValuedExtension<F>& ext, std::uint64_t seed, const std::string& tag, Checks& ck) {
  const auto& v = ext.valuation();
  const auto& sd = ext.splitting();
  const auto& ls = ext.local();
  const std::uint64_t p = ext.residue_char();
  const long deg = ext.degree();
  const std::string sfx = tag.empty() ? "" : " [" + tag + "]";

  long sum = 0;
  bool no_defect = true;
  for (std::size_t i = 0; i < sd.g(); ++i) {
    const auto b = ext.invariants(i);
    sum += b.e * b.f * b.d;
    no_defect = no_defect && b.d == 1;
  }
  ck.add("fundamental equality" + sfx, sum == deg, "Σn = " + std::to_string(sum));
  ck.add("no defect" + sfx, no_defect);

  bool laws = true;
  for (std::size_t i = 0; i < sd.g(); ++i) {
    const auto b = ext.invariants(i);
    laws = laws && b.e == b.e_t * b.e_w && b.f == b.f_s * b.f_i && b.n == b.e * b.f * b.d &&
           b.d_w == b.d * b.e_w * b.f_i && is_p_power(b.e_w, p) && is_p_power(b.f_i, p) &&
           b.e_t % static_cast<long>(p) != 0 && b.n == sd.extensions[i].n;
  }
  ck.add("invariant bundle laws" + sfx, laws);

  std::vector<int> fs, ns;
  bool all_e1 = true;
  for (const auto& w : sd.extensions) {
    fs.push_back(w.f);
    ns.push_back(w.n);
    all_e1 = all_e1 && w.e == 1;
  }
  std::ranges::sort(fs);
  std::ranges::sort(ns);

  const Poly<F>& f = ext.field()->modulus;
  const auto fast = explicit_extensions_fast_path(v, f);
  if (fast.applicable) ck.add("explicit extensions" + sfx, all_e1 && fast.residue_degrees == fs);

  // mod-p oracle by distinct-degree factorization
  const auto vf = v.finite();
  std::vector<F> tc;
  bool integral = true;
  for (const auto& a : f.coeffs()) {
    tc.push_back(v.transport(a));
    if (!is_zero(tc.back()) && vf.order(tc.back()) < 0) integral = false;
  }
  const Poly<F> g(f.proto(), tc);
  if (integral && deg >= 1 && vf.order(discriminant(g)) == 0) {
    std::vector<GF> c;
    for (const auto& a : g.coeffs()) c.push_back(vf.residue(a));
    GFPoly fb(GF(vf.residue_field()), std::move(c));
    std::vector<int> oracle;
    for (const auto& [prod, d] : distinct_degree(fb))
      for (int k = 0; k < prod.degree() / d; ++k) oracle.push_back(d);
    std::ranges::sort(oracle);
    ck.add("unramified mod-p oracle" + sfx, all_e1 && oracle == fs);
  }

  // Hensel factorization of the integral generator's polynomial
  {
    const Poly<F>& h = ls.integral_polynomial();
    const auto lfs = certified_factors(vf, h);
    const auto& adic = vf.adic();
    const auto mod = adic.pi_pow(lfs.empty() ? 1 : lfs[0].precision);
    RPoly<typename DiscreteValuation<F>::Adic::R> prod{adic.one()};
    std::vector<int> degs;
    for (const auto& lf : lfs) {
      prod = rpoly_mul(prod, lf.coeffs, adic.zero());
      degs.push_back(lf.degree());
    }
    bool ok = static_cast<int>(prod.size()) == h.degree() + 1;
    for (int k = 0; ok && k <= h.degree(); ++k)
      ok = adic.reduce(prod[k] - adic.from_field(h.coeff(k), mod), mod) == adic.zero();
    std::ranges::sort(degs);
    ck.add("hensel certification" + sfx, ok && degs == ns,
           "precision " + std::to_string(lfs.empty() ? 0 : lfs[0].precision));
  }

  // Newton polygon of the integral polynomial against the local factor slopes
  {
    int zero_roots = 0;
    const auto segs = newton_polygon(ls.integral_polynomial(), vf, &zero_roots);
    if (zero_roots == 0) {
      std::map<Rational, int> want, got;
      for (std::size_t i = 0; i < ls.num_primes(); ++i) want[-ls.prime(i).generator_value] += ls.prime(i).n;
      for (const auto& s : segs) got[s.slope] += s.length;
      ck.add("newton polygon" + sfx, want == got);
    }
  }

  bool unif = true;
  for (std::size_t i = 0; i < ls.num_primes(); ++i)
    for (std::size_t j = 0; j < ls.num_primes(); ++j) {
      const auto val = ls.value(j, ls.prime(i).uniformizer);
      const Rational want = i == j ? make_rational(1, ls.prime(i).e) : Rational(0);
      unif = unif && !val.is_infinite() && val.value() == want;
    }
  ck.add("uniformizer values" + sfx, unif);

  std::mt19937_64 rng(seed);
  const auto base = base_of(f.proto());
  bool restr = true, ultra = true, normf = true;
  using E = NfElem<F>;
  for (int s = 0; s < 20; ++s) {
    F a = base.random(rng, 4);
    if (is_zero(a)) continue;
    for (std::size_t i = 0; i < sd.g(); ++i) restr = restr && ext.value(i, E(ext.field(), a)) == v.value(a);
    std::vector<F> c1, c2;
    for (int k = 0; k < deg; ++k) {
      c1.push_back(base.random(rng, 3));
      c2.push_back(base.random(rng, 3));
    }
    const E x = E::from_coords(ext.field(), c1), y = E::from_coords(ext.field(), c2);
    for (std::size_t i = 0; i < sd.g(); ++i) {
      const auto vx = ext.value(i, x), vy = ext.value(i, y), vs = ext.value(i, x + y);
      const auto m = vx < vy ? vx : vy;
      ultra = ultra && m <= vs && (vx == vy || vs == m);
    }
    if (sd.g() == 1 && !x.is_zero()) {
      const auto vn = v.value(norm(x));
      normf = normf && ext.value(0, x) == ValueGroupElement(Rational(vn.value() / Rational(deg)));
    }
  }
  ck.add("restriction of values" + sfx, restr);
  ck.add("ultrametric inequality" + sfx, ultra);
  if (sd.g() == 1) ck.add("norm formula" + sfx, normf);
}

template <class F>
std::optional<ValuedExtension<F>> try_extension(const DiscreteValuation<F>& v, const Poly<F>& f) {
  try {
    return ValuedExtension<F>(v, f);
  } catch (const DomainError&) {
    return std::nullopt;
  }
}

// checks comparing the classification of w/v with the invariants of w
template <class F>
bool classify_matches(const GaloisContext<F>& c, const Subfield<F>& l, const ValuedExtension<F>& ext_l, Json& rows) {
  bool ok = true;
  rows = Json::array();
  for (std::size_t w = 0; w < ext_l.splitting().g(); ++w) {
    const auto s = c.embedding_for(l, ext_l, w);
    const auto fl = c.classify(s.group);
    const auto want = flags_from_invariants(ext_l.invariants(w), ext_l.degree());
    ok = ok && fl == want;
    rows.push_back(Json{{"w", w},
                        {"flags", flags_json(fl)},
                        {"closure_flags", flags_json(c.classify(c.group().trivial(), s.group))}});
  }
  return ok;
}

template <class F>
Json galois_section(const GaloisContext<F>& c, const std::vector<Poly<F>>& polys, std::uint64_t seed, Checks& ck) {
  const auto& G = c.group();
  const auto& ext = c.extension();
  const auto b = ext.invariants(0);
  const std::uint64_t p = c.residue_char();
  Json out;
  out["order"] = G.order();
  out["g"] = c.num_valuations();
  out["D"] = c.D().size();
  out["I"] = c.I().size();
  out["V"] = c.V().size();
  const auto chain = c.chain_degrees();
  out["chain"] = Json(std::vector<int>(chain.begin(), chain.end()));
  out["closure"] = extension_summary(ext);
  extension_checks(ext, seed, "closure", ck);

  ck.add("|G| = [M:K]", G.order() == c.degree(), std::to_string(G.order()));
  {
    std::set<int> orbit;
    for (int g = 0; g < G.order(); ++g) orbit.insert(c.prime_image(g, 0));
    ck.add("transitivity", orbit.size() == c.num_valuations() &&
                               c.num_valuations() * c.D().size() == static_cast<std::size_t>(G.order()));
  }
  {
    bool cov = true;
    for (int g = 0; g < G.order(); ++g) cov = cov && c.decomposition_group(c.prime_image(g, 0)) == G.conjugate(g, c.D());
    ck.add("conjugation covariance", cov);
  }
  ck.add("I and V normal in D", G.is_normal(c.I(), c.D()) && G.is_normal(c.V(), c.D()));
  int frob_order = 1;
  for (int x = c.frobenius(); !PermGroup::contains(c.I(), x); x = G.mul(c.frobenius(), x)) ++frob_order;
  out["frobenius_order"] = frob_order;
  ck.add("D/I cyclic of order f_s", G.quotient_is_cyclic(c.D(), c.I()) &&
                                        static_cast<long>(c.D().size() / c.I().size()) == b.f_s && frob_order == b.f_s);
  ck.add("|D| = n", static_cast<long>(c.D().size()) == b.n);
  ck.add("|I/V| = e_t", static_cast<long>(c.I().size() / c.V().size()) == b.e_t);
  ck.add("|V| = d_w", static_cast<long>(c.V().size()) == b.d_w);
  {
    bool pg = true;
    for (int v : c.V()) pg = pg && is_p_power(G.element_order(v), p);
    ck.add("V is a p-group", pg);
  }
  ck.add("roots of unity", roots_of_unity_check(c));
  ck.add("chain degrees", chain[0] == static_cast<int>(c.num_valuations()) && chain[1] == b.f_s &&
                              chain[2] == b.e_t && chain[3] == b.d_w);
  ck.add("local factor decomposition group", c.decomposition_by_local_factor() == c.D());
  bool exact_ok = true;
  for (int j = 0; j < static_cast<int>(c.num_valuations()); ++j)
    exact_ok = exact_ok && c.decomposition_group(j).size() == c.D().size();
  ck.add("decomposition groups of all primes", exact_ok);

  Json sections;
  try {
    sections["D/V -> D/I"] = find_section(G, c.D(), c.I(), c.V()).has_value();
    sections["D -> D/V"] = find_section(G, c.D(), c.V(), G.trivial()).has_value();
  } catch (const ResourceError&) {
    sections = nullptr;
  }
  out["sections"] = sections;

  // per input
  Json inputs = Json::array();
  std::vector<Subgroup> input_groups;
  for (std::size_t j = 0; j < polys.size(); ++j) {
    Json in;
    in["polynomial"] = polys[j].to_string("x");
    const std::string t = "input " + std::to_string(j);
    auto ext_l = try_extension(c.valuation(), polys[j]);
    const auto l = c.root_field(static_cast<int>(j));
    input_groups.push_back(l.group);
    if (!ext_l) {
      in["irreducible"] = false;
      inputs.push_back(std::move(in));
      continue;
    }
    in["irreducible"] = true;
    in["extension"] = extension_summary(*ext_l);
    extension_checks(*ext_l, seed, t, ck);
    Json emb;
    ck.add("classification vs invariants [" + t + "]", classify_matches(c, l, *ext_l, emb));
    in["embeddings"] = emb;

    const auto orb = c.orbit_stats(l, *ext_l);
    Json orows = Json::array();
    bool formulas = true;
    std::set<std::size_t> seen;
    for (const auto& o : orb) {
      const auto bw = ext_l->invariants(o.valuation);
      formulas = formulas && o.size == bw.n && o.n_from_groups == bw.n && o.i_orbits == bw.f_s &&
                 o.v_orbits == bw.e_t * bw.f_s;
      for (auto len : o.i_lengths) formulas = formulas && len == bw.d_w * bw.e_t;
      for (auto len : o.v_lengths) formulas = formulas && len == bw.d_w;
      seen.insert(o.valuation);
      orows.push_back(Json{{"valuation", o.valuation},
                           {"size", o.size},
                           {"i_orbits", o.i_orbits},
                           {"i_lengths", o.i_lengths},
                           {"v_orbits", o.v_orbits},
                           {"v_lengths", o.v_lengths},
                           {"n_from_groups", o.n_from_groups}});
    }
    in["orbits"] = orows;
    ck.add("orbit formulas [" + t + "]", formulas);
    ck.add("orbit bijection [" + t + "]", seen.size() == orb.size() && seen.size() == ext_l->splitting().g());
    long fs1 = 0;
    for (std::size_t w = 0; w < ext_l->splitting().g(); ++w) fs1 += ext_l->invariants(w).f_s == 1 ? 1 : 0;
    const long cnt = c.count_fs_one(l);
    in["count_fs_one"] = cnt;
    ck.add("valuations with f_s = 1 [" + t + "]", cnt == fs1, std::to_string(cnt));

    // D over L is D cap H; its order is the local degree of M over L at x
    const auto wx = c.restriction_of_x(l, *ext_l, G.identity());
    const auto dl = PermGroup::meet(c.D(), l.group);
    ck.add("functoriality of D [" + t + "]",
           static_cast<long>(dl.size()) * ext_l->invariants(wx).n == static_cast<long>(c.D().size()));
    inputs.push_back(std::move(in));
  }
  out["inputs"] = inputs;

  // relative classification of the compositum of two inputs over one of them
  Json rel = Json::array();
  for (std::size_t a = 0; a < input_groups.size(); ++a)
    for (std::size_t bi = 0; bi < input_groups.size(); ++bi) {
      if (a == bi) continue;
      const auto comp = c.compositum(input_groups[a], input_groups[bi]);
      rel.push_back(Json{{"field", a}, {"over", bi}, {"flags", flags_json(c.classify(comp, input_groups[bi]))}});
    }
  out["composita"] = rel;

  // group-level corollaries over the subgroup lattice
  const auto subs = c.all_subgroups();
  const auto members = flag_members();
  bool impl = true;
  for (const auto& h : subs) {
    const auto f = c.classify(h);
    impl = impl && (!f.immediate || f.unramified) && (!f.unramified || f.tame) && (!f.totally_wild || f.totally_ramified) &&
           (!f.totally_ramified || f.local) && (!f.totally_split || f.immediate) &&
           (!(f.immediate && f.local) || h == G.whole());
  }
  ck.add("flag implications", impl);

  bool tower = true;
  int towers = 0;
  std::set<std::string> broken;
  for (const auto& h1 : subs)
    for (const auto& h2 : subs) {
      if (towers >= 200) break;
      if (!PermGroup::subset(h2, h1)) continue;
      for (const auto& h3 : subs) {
        if (towers >= 200) break;
        if (!PermGroup::subset(h3, h2)) continue;
        ++towers;
        const auto all = c.classify(h3, h1), lo = c.classify(h2, h1), up = c.classify(h3, h2);
        for (const auto& [name, m] : members)
          if (name != "totally_split" && all.*m != (lo.*m && up.*m)) {
            tower = false;
            broken.insert(name);
          }
      }
    }
  std::string tdetail = std::to_string(towers) + " towers";
  for (const auto& b : broken) tdetail += ", fails for " + b;
  ck.add("tower corollary", tower, tdetail);

  bool compos = true;
  int pairs = 0;
  for (const auto& hl : subs)
    for (const auto& hp : subs) {
      if (pairs >= 200) break;
      ++pairs;
      const auto f = c.classify(hl);
      const auto r = c.classify(PermGroup::meet(hl, hp), hp);
      compos = compos && (!f.immediate || r.immediate) && (!f.unramified || r.unramified) && (!f.tame || r.tame) &&
               (!f.totally_split || r.totally_split);
    }
  ck.add("compositum corollary", compos, std::to_string(pairs) + " pairs");
  return out;
}

template <class F>
std::string field_label(const GaloisContext<F>& c, const Subfield<F>& s, const Subgroup& l, const std::string& base) {
  if (s.group == c.group().whole()) return base;
  if (s.group == l) return "L";
  if (s.group == c.group().trivial()) return "M";
  return base + "[x]/(" + s.minpoly.to_string("x") + ")";
}

std::string lattice_line(const std::vector<std::string>& labels) {
  auto half = [&](int from) {
    std::vector<std::string> parts;
    std::vector<bool> used(3, false);
    for (int i = 0; i < 3; ++i) {
      if (used[i]) continue;
      std::string part;
      for (int k = i; k < 3; ++k)
        if (!used[k] && labels[from + k] == labels[from + i]) {
          used[k] = true;
          part += "L" + std::to_string(from + k + 1) + "=";
        }
      parts.push_back(part + labels[from + i]);
    }
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? ", " : "") + parts[i];
    return s;
  };
  return half(0) + "; " + half(3);
}

template <class F>
Json classify_section(const GaloisContext<F>& c, const ValuedExtension<F>& ext_l, std::size_t w, const std::string& base,
                      Checks& ck) {
  const auto& G = c.group();
  if (w >= ext_l.splitting().g()) throw DomainError("extension index out of range");
  const auto l = c.embedding_for(c.root_field(0), ext_l, w);
  const auto fl = c.classify(l.group);
  Json out;
  out["w"] = w;
  out["flags"] = flags_json(fl);
  ck.add("flags vs invariants", fl == flags_from_invariants(ext_l.invariants(w), ext_l.degree()));

  const auto lat = c.lattice(l);
  std::vector<std::string> labels;
  Json lj;
  for (int k = 0; k < 6; ++k) {
    labels.push_back(field_label(c, lat.fields[k], l.group, base));
    lj["L" + std::to_string(k + 1)] = Json{{"label", labels.back()}, {"degree", lat.fields[k].degree()}};
  }
  lj["line"] = lattice_line(labels);
  out["lattice"] = lj;

  const auto H = [&](int k) { return lat.fields[k - 1].group; };
  // field inclusion A in B is H_B in H_A
  const auto in = [](const Subgroup& a, const Subgroup& b) { return PermGroup::subset(b, a); };
  ck.add("lattice inclusions", in(H(1), H(2)) && in(H(2), H(3)) && in(H(1), H(4)) && in(H(2), H(5)) && in(H(4), H(5)) &&
                                   in(H(5), H(6)) && in(H(3), H(6)) && in(H(6), l.group));
  ck.add("L1 immediate", c.classify(H(1)).immediate);
  ck.add("L2 unramified", c.classify(H(2)).unramified);
  ck.add("L3 tame", c.classify(H(3)).tame);
  ck.add("L over L4 local", c.classify(l.group, H(4)).local);
  ck.add("L over L5 totally ramified", c.classify(l.group, H(5)).totally_ramified);
  ck.add("L over L6 totally wild", c.classify(l.group, H(6)).totally_wild);
  bool maxi = true, mini = true;
  for (const auto& h : c.all_subgroups()) {
    if (!PermGroup::subset(l.group, h)) continue;
    const auto below = c.classify(h), above = c.classify(l.group, h);
    maxi = maxi && (!below.immediate || in(h, H(1))) && (!below.unramified || in(h, H(2))) && (!below.tame || in(h, H(3)));
    mini = mini && (!above.local || in(H(4), h)) && (!above.totally_ramified || in(H(5), h)) &&
           (!above.totally_wild || in(H(6), h));
  }
  ck.add("L1 L2 L3 maximal", maxi);
  ck.add("L4 L5 L6 minimal", mini);
  const auto gmw = l.group.size() / PermGroup::meet(c.D(), l.group).size();
  out["g_M_w"] = gmw;
  if (gmw == 1) ck.add("L1=L4, L2=L5, L3=L6", H(1) == H(4) && H(2) == H(5) && H(3) == H(6));
  (void)G;
  return out;
}

template <class F>
Json run_typed(const ProblemSpec& spec, const ValuationDescriptor& d, bool parallel) {
  const auto v = Kit<F>::valuation(d);
  std::vector<Poly<F>> polys;
  for (const auto& s : spec.polys) {
    Poly<F> f = Kit<F>::poly(parse_polynomial(s), d);
    if (f.degree() < 1) throw DomainError("polynomial must have degree >= 1: " + s);
    polys.push_back(f.monic());
  }
  if (polys.empty()) throw DomainError("no polynomial given");
  Checks ck;
  Json r;
  r["command"] = spec.command;
  r["input"] = spec_to_json(spec);
  r["valuation"] = v.descriptor();
  const std::string base = Kit<F>::base_name(d);
  if (spec.command == "extend") {
    if (polys.size() != 1) throw DomainError("extend takes one polynomial");
    ValuedExtension<F> ext(v, polys[0], spec.precision);
    r["extend"] = extension_summary(ext);
    extension_checks(ext, spec.seed, "", ck);
  } else if (spec.command == "galois" || spec.command == "classify") {
    GaloisOptions opt;
    opt.cap = spec.max_closure;
    opt.parallel = parallel;
    opt.seed = spec.seed;
    GaloisContext<F> c(v, polys, opt);
    if (spec.command == "galois") {
      r["galois"] = galois_section(c, polys, spec.seed, ck);
    } else {
      ValuedExtension<F> ext_l(v, polys[0], spec.precision);
      r["extend"] = extension_summary(ext_l);
      extension_checks(ext_l, spec.seed, "", ck);
      r["classify"] = classify_section(c, ext_l, spec.w, base, ck);
    }
  } else {
    throw DomainError("unknown command: " + spec.command);
  }
  std::size_t failed = 0;
  for (const auto& c : ck.list) failed += c["pass"].get<bool>() ? 0 : 1;
  r["checks"] = ck.list;
  r["summary"] = Json{{"checks", ck.list.size()}, {"failed", failed}};
  return r;
}

const char* tick(bool b) { return b ? "✓" : "✗"; }

std::string rat_text(const Json& j) {
  const std::string n = j["num"], d = j["den"];
  return d == "1" ? n : n + "/" + d;
}

std::string flags_text(const Json& f) {
  std::string s;
  for (const auto& [name, m] : flag_members())
    if (f[name].get<bool>()) s += (s.empty() ? "" : ", ") + name;
  return "{" + s + "}";
}

void table_text(std::ostringstream& o, const Json& ext, const std::string& indent) {
  o << indent << "L = K[x]/(" << ext["polynomial"].get<std::string>() << "), degree " << ext["degree"]
    << ", g = " << ext["g"] << ", Σn = " << ext["sum_n"] << "\n";
  o << indent << "  w   e  f  n  d | e_t e_w f_s f_i d_w | slope  residue factor\n";
  for (const auto& w : ext["extensions"]) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "  %-3d %2d %2d %2d %2d | %3d %3d %3d %3d %3d | ", w["w"].get<int>(), w["e"].get<int>(),
                  w["f"].get<int>(), w["n"].get<int>(), w["d"].get<int>(), w["e_t"].get<int>(), w["e_w"].get<int>(),
                  w["f_s"].get<int>(), w["f_i"].get<int>(), w["d_w"].get<int>());
    o << indent << buf << rat_text(w["slope"]) << "  " << w["residue_factor"].get<std::string>() << "\n";
  }
}

std::string group_line(const Json& g) {
  std::ostringstream o;
  o << "|G|=" << g["order"] << ", g=" << g["g"] << ", ";
  const long d = g["D"], i = g["I"], v = g["V"];
  if (d == i && i == v)
    o << "|D|=|I|=|V|=" << d;
  else if (d == i)
    o << "|D|=|I|=" << d << ", |V|=" << v;
  else if (i == v)
    o << "|D|=" << d << ", |I|=|V|=" << i;
  else
    o << "|D|=" << d << ", |I|=" << i << ", |V|=" << v;
  const auto& ch = g["chain"];
  o << ", chain (" << ch[0] << "," << ch[1] << "," << ch[2] << "," << ch[3] << ")";
  return o.str();
}

}  // namespace

Json rational_json(long num, long den) { return rat(make_rational(num, den)); }

Json spec_to_json(const ProblemSpec& s) {
  Json j{{"command", s.command},     {"valuation", s.valuation}, {"polys", s.polys}, {"precision", s.precision},
         {"seed", s.seed},           {"max_closure", s.max_closure}, {"w", s.w}};
  if (!s.name.empty()) j["name"] = s.name;
  return j;
}

ProblemSpec spec_from_json(const Json& j) {
  ProblemSpec s;
  s.command = j.value("command", s.command);
  s.valuation = j.at("valuation").get<std::string>();
  if (j.at("polys").is_string())
    s.polys = {j.at("polys").get<std::string>()};
  else
    s.polys = j.at("polys").get<std::vector<std::string>>();
  s.precision = j.value("precision", s.precision);
  s.seed = j.value("seed", s.seed);
  s.max_closure = j.value("max_closure", s.max_closure);
  s.w = j.value("w", s.w);
  s.name = j.value("name", s.name);
  return s;
}

Json run_problem(const ProblemSpec& spec, bool parallel) {
  const auto d = parse_valuation(spec.valuation);
  if (d.base == ValuationDescriptor::Base::Rationals) return run_typed<Rational>(spec, d, parallel);
  return run_typed<RatFunc>(spec, d, parallel);
}

std::size_t failed_checks(const Json& report) { return report.at("summary").at("failed").get<std::size_t>(); }

std::string render_text(const Json& r) {
  std::ostringstream o;
  const auto& in = r["input"];
  o << r["command"].get<std::string>() << " over " << r["valuation"].get<std::string>() << "\n";
  o << "polynomials:";
  for (const auto& p : in["polys"]) o << " " << p.get<std::string>();
  o << "\noptions: precision " << in["precision"] << ", seed " << in["seed"] << ", max closure " << in["max_closure"]
    << "\n";
  if (r.contains("extend")) {
    o << "\nextensions of v\n";
    table_text(o, r["extend"], "");
  }
  if (r.contains("galois")) {
    const auto& g = r["galois"];
    o << "\nGalois closure M\n" << group_line(g) << ", Frobenius order " << g["frobenius_order"] << "\n";
    table_text(o, g["closure"], "");
    if (g["sections"].is_null()) {
      o << "sections: search skipped\n";
    } else {
      for (const auto& [k, val] : g["sections"].items()) o << "section " << k << ": " << (val.get<bool>() ? "found" : "none found") << "\n";
    }
    for (std::size_t j = 0; j < g["inputs"].size(); ++j) {
      const auto& x = g["inputs"][j];
      o << "\ninput " << j << ": " << x["polynomial"].get<std::string>();
      if (!x["irreducible"].get<bool>()) {
        o << " (reducible)\n";
        continue;
      }
      o << "\n";
      table_text(o, x["extension"], "  ");
      for (const auto& e : x["embeddings"])
        o << "  w" << e["w"] << "/v " << flags_text(e["flags"]) << "; x over w" << e["w"] << " "
          << flags_text(e["closure_flags"]) << "\n";
      for (const auto& ob : x["orbits"]) {
        std::vector<long> il = ob["i_lengths"], vl = ob["v_lengths"];
        o << "  D-orbit of size " << ob["size"] << " -> w" << ob["valuation"] << ": I-orbits " << ob["i_orbits"] << " ("
          << join(il) << "), V-orbits " << ob["v_orbits"] << " (" << join(vl) << "), n from groups "
          << ob["n_from_groups"] << "\n";
      }
      o << "  valuations with f_s = 1: " << x["count_fs_one"] << "\n";
    }
    for (const auto& c : g["composita"])
      o << "compositum of inputs " << c["field"] << "," << c["over"] << " over input " << c["over"] << ": "
        << flags_text(c["flags"]) << "\n";
  }
  if (r.contains("classify")) {
    const auto& c = r["classify"];
    const auto& lat = c["lattice"];
    o << "\nclassification of w" << c["w"] << "/v: " << flags_text(c["flags"]) << "\n";
    o << "\nsubextension lattice\n";
    o << "            L\n"
         "           /\n"
         "         L6\n"
         "        /  \\\n"
         "      L5    L3\n"
         "     /  \\  /\n"
         "   L4    L2\n"
         "     \\  /\n"
         "      L1\n"
         "     /\n"
         "    K\n";
    for (int k = 1; k <= 6; ++k) {
      const auto& x = lat["L" + std::to_string(k)];
      o << "L" << k << " = " << x["label"].get<std::string>() << " (degree " << x["degree"] << ")\n";
    }
    o << lat["line"].get<std::string>() << "\n";
  }
  o << "\nchecks\n";
  for (const auto& c : r["checks"]) {
    o << "  " << c["name"].get<std::string>();
    if (c.contains("detail")) o << ": " << c["detail"].get<std::string>();
    o << " " << tick(c["pass"].get<bool>()) << "\n";
  }
  o << r["summary"]["checks"] << " checks, " << r["summary"]["failed"] << " failed\n";
  return o.str();
}

}  // namespace valext
