#include "doctest.h"

#include <set>

#include "valext/galois.hpp"
#include "valext/parse.hpp"

using namespace valext;

namespace {

QPoly qp(const std::string& s) { return to_rational_poly(parse_polynomial(s)); }

GaloisContext<Rational> ctx(std::uint64_t p, std::vector<std::string> polys) {
  std::vector<QPoly> f;
  for (const auto& s : polys) f.push_back(qp(s));
  return GaloisContext<Rational>(DiscreteValuation<Rational>(p), f);
}

}  // namespace

TEST_CASE("permutation groups") {
  std::vector<Perm> s3{{0, 1, 2}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}, {1, 2, 0}, {2, 0, 1}};
  PermGroup g(s3);
  CHECK(g.order() == 6);
  CHECK(g.identity() == 0);
  CHECK_FALSE(g.is_abelian(g.whole()));
  auto a3 = g.generate({4});
  CHECK(a3.size() == 3);
  CHECK(g.is_normal(a3, g.whole()));
  CHECK(g.quotient_is_cyclic(g.whole(), a3));
  CHECK_FALSE(g.is_normal(g.generate({1}), g.whole()));
  CHECK(g.core(g.generate({1})) == g.trivial());
  CHECK(g.left_cosets(g.generate({1}), g.whole()).size() == 3);
  CHECK_THROWS_AS(PermGroup({{0, 1, 2}, {1, 0, 2}, {0, 2, 1}}), DomainError);
}

TEST_CASE("closures and groups") {
  auto c = ctx(2, {"x^3-2*x^2+x+2"});
  CHECK(c.group().order() == 6);
  CHECK_FALSE(c.group().is_abelian(c.group().whole()));
  auto bq = ctx(2, {"x^2-7", "x^2+1"});
  CHECK(bq.group().order() == 4);
  CHECK(bq.group().is_abelian(bq.group().whole()));
  auto t = ctx(3, {"x-1"});
  CHECK(t.group().order() == 1);
  CHECK(ctx(5, {"x^4-2"}).group().order() == 8);
}

TEST_CASE("serial and parallel automorphism screening agree") {
  for (auto polys : std::vector<std::vector<std::string>>{{"x^3-2*x^2+x+2"}, {"x^4-2"}, {"x^2-7", "x^2+1"}, {"x^3-7"}}) {
    std::vector<QPoly> f;
    for (const auto& s : polys) f.push_back(qp(s));
    auto cl = build_splitting_closure(f);
    CHECK(enumerate_automorphisms_serial(cl) == enumerate_automorphisms_parallel(cl));
  }
}

TEST_CASE("decomposition, inertia and ramification groups") {
  auto c = ctx(2, {"x^3-2*x^2+x+2"});
  CHECK(c.num_valuations() == 3);
  for (std::size_t j = 0; j < 3; ++j) {
    CHECK(c.extension().splitting().extensions[j].e == 2);
    CHECK(c.extension().splitting().extensions[j].f == 1);
  }
  CHECK(c.D().size() == 2);
  CHECK(c.I().size() == 2);
  CHECK(c.V().size() == 2);
  CHECK(c.chain_degrees() == std::array<int, 4>{3, 1, 1, 2});
  CHECK(c.decomposition_by_local_factor() == c.D());

  auto s7 = ctx(2, {"x^2+7"});
  CHECK(s7.D() == s7.group().trivial());
  auto s5 = ctx(5, {"x^2+1"});
  CHECK(s5.D().size() == 1);
  CHECK(s5.num_valuations() == 2);
  auto i3 = ctx(3, {"x^2+1"});
  CHECK(i3.D().size() == 2);
  CHECK(i3.I().size() == 1);
  CHECK(i3.frobenius() != i3.group().identity());
  auto e5 = ctx(5, {"x^2-5"});
  CHECK(e5.I().size() == 2);
  CHECK(e5.V().size() == 1);
  CHECK(roots_of_unity_check(e5));
  auto t = ctx(7, {"x-1"});
  CHECK(t.I().size() == 1);
  CHECK(t.V().size() == 1);
  CHECK(t.chain_degrees() == std::array<int, 4>{1, 1, 1, 1});
  auto bq = ctx(2, {"x^2-7", "x^2+1"});
  CHECK(bq.chain_degrees() == std::array<int, 4>{2, 1, 1, 2});
  auto k7 = ctx(7, {"x^3-7"});
  CHECK(k7.I().size() / k7.V().size() == 3);
  CHECK(roots_of_unity_check(k7));
  CHECK(k7.decomposition_by_local_factor() == k7.D());
}

TEST_CASE("group structure properties") {
  for (auto c : {ctx(2, {"x^3-2*x^2+x+2"}), ctx(2, {"x^2-7", "x^2+1"}), ctx(3, {"x^2+1"}), ctx(7, {"x^3-7"}),
                 ctx(3, {"x^3-3"}), ctx(5, {"x^4-2"}), ctx(2, {"x^4-2"})}) {
    const auto& G = c.group();
    // transitivity and |G| = sum over the orbit of |D|
    std::set<int> orbit;
    for (int g = 0; g < G.order(); ++g) orbit.insert(c.prime_image(g, 0));
    CHECK(orbit.size() == c.num_valuations());
    CHECK(c.num_valuations() * c.D().size() == static_cast<std::size_t>(G.order()));
    // conjugation covariance
    for (int g = 0; g < G.order(); ++g) CHECK(c.decomposition_group(c.prime_image(g, 0)) == G.conjugate(g, c.D()));
    CHECK(G.is_normal(c.I(), c.D()));
    CHECK(G.is_normal(c.V(), c.D()));
    CHECK(G.quotient_is_cyclic(c.D(), c.I()));
    auto b = c.extension().invariants(0);
    CHECK(static_cast<long>(c.D().size() / c.I().size()) == b.f_s);
    CHECK(static_cast<long>(c.I().size() / c.V().size()) == b.e_t);
    CHECK(static_cast<long>(c.V().size()) == b.d_w);
    CHECK(static_cast<long>(c.D().size()) == b.n);
    // Frobenius generates D / I
    int k = 1;
    for (int x = c.frobenius(); !PermGroup::contains(c.I(), x); x = G.mul(c.frobenius(), x)) ++k;
    CHECK(k == b.f_s);
    for (int v : c.V()) {
      int o = G.element_order(v);
      while (o % static_cast<int>(c.residue_char()) == 0) o /= static_cast<int>(c.residue_char());
      CHECK(o == 1);
    }
    CHECK(roots_of_unity_check(c));
  }
}

TEST_CASE("fixed fields") {
  auto c = ctx(2, {"x^3-2*x^2+x+2"});
  CHECK(c.fixed_field(c.D()).degree() == 3);
  CHECK(c.fixed_field(c.group().whole()).degree() == 1);
  CHECK(c.fixed_field(c.group().trivial()).degree() == 6);
  auto l = c.root_field(0);
  CHECK(l.minpoly == qp("x^3-2*x^2+x+2"));
  CHECK(l.group.size() == 2);
}

TEST_CASE("classification") {
  auto bq = ctx(2, {"x^2-7", "x^2+1", "x^2+7"});
  auto s7 = bq.root_field(0), i = bq.root_field(1), m7 = bq.root_field(2);
  auto f7 = bq.classify(s7.group), fi = bq.classify(i.group), fm = bq.classify(m7.group);
  CHECK(f7.totally_wild);
  CHECK(f7.local);
  CHECK(f7.totally_ramified);
  CHECK(fi.totally_wild);
  CHECK(fm.totally_split);
  CHECK_FALSE(fm.local);
  // Q(sqrt7, i) over Q(i) is not local
  auto top = bq.compositum(s7.group, i.group);
  CHECK_FALSE(bq.classify(top, i.group).local);
  // compositum corollary on all ordered pairs
  for (const auto& a : {s7, i, m7})
    for (const auto& b : {s7, i, m7}) {
      if (a.group == b.group) continue;
      auto wa = bq.classify(a.group);
      auto xb = bq.classify(bq.compositum(a.group, b.group), b.group);
      if (wa.immediate) CHECK(xb.immediate);
      if (wa.unramified) CHECK(xb.unramified);
      if (wa.tame) CHECK(xb.tame);
      if (wa.totally_split) CHECK(xb.totally_split);
    }
  auto t = ctx(5, {"x-1"});
  auto ft = t.classify(t.group().whole());
  CHECK(ft == ClassificationFlags{true, true, true, true, true, true, true});
}

TEST_CASE("cubic: the prime above p' is totally wild, L is not even local") {
  auto c = ctx(2, {"x^3-2*x^2+x+2"});
  ValuedExtension<Rational> el(DiscreteValuation<Rational>(2), qp("x^3-2*x^2+x+2"));
  auto l = c.root_field(0);
  // L' with x|_{L'} = p', the unramified prime (index 0)
  auto lp = c.embedding_for(l, el, 0);
  CHECK(c.classify(c.group().trivial(), lp.group).totally_wild);
  // another conjugate L with x|_L = q
  auto lq = c.embedding_for(l, el, 1);
  CHECK(lq.group != lp.group);
  auto fq = c.classify(lq.group);
  CHECK_FALSE(fq.local);
  CHECK_FALSE(fq.tame);
}

TEST_CASE("lattice of the cubic") {
  auto c = ctx(2, {"x^3-2*x^2+x+2"});
  ValuedExtension<Rational> el(DiscreteValuation<Rational>(2), qp("x^3-2*x^2+x+2"));
  auto lq = c.embedding_for(c.root_field(0), el, 1);
  auto lat = c.lattice(lq);
  for (int k = 0; k < 3; ++k) CHECK(lat.fields[k].group == c.group().whole());
  for (int k = 3; k < 6; ++k) CHECK(lat.fields[k].group == lq.group);
}

TEST_CASE("orbits") {
  auto c = ctx(2, {"x^3-2*x^2+x+2"});
  ValuedExtension<Rational> el(DiscreteValuation<Rational>(2), qp("x^3-2*x^2+x+2"));
  auto l = c.root_field(0);
  auto orb = c.orbit_stats(l, el);
  REQUIRE(orb.size() == 2);
  std::multiset<long> sizes;
  for (const auto& o : orb) {
    sizes.insert(o.size);
    auto b = el.invariants(o.valuation);
    CHECK(o.size == b.n);
    CHECK(o.n_from_groups == b.n);
    CHECK(o.i_orbits == b.f_s);
    CHECK(o.v_orbits == b.e_t * b.f_s);
    for (auto len : o.i_lengths) CHECK(len == b.d_w * b.e_t);
    for (auto len : o.v_lengths) CHECK(len == b.d_w);
  }
  CHECK(sizes == std::multiset<long>{1, 2});
  CHECK(c.count_fs_one(l) == 2);
  auto i3 = ctx(3, {"x^2+1"});
  CHECK(i3.count_fs_one(i3.root_field(0)) == 0);
  auto t = ctx(3, {"x-1"});
  CHECK(t.count_fs_one(t.root_field(0)) == 1);
  auto s5 = ctx(5, {"x^2+1"});
  ValuedExtension<Rational> e5(DiscreteValuation<Rational>(5), qp("x^2+1"));
  auto o5 = s5.orbit_stats(s5.root_field(0), e5);
  REQUIRE(o5.size() == 2);
  CHECK(o5[0].size == 1);
  CHECK(o5[0].valuation != o5[1].valuation);
}

TEST_CASE("field of definition") {
  auto bq = ctx(2, {"x^2-7", "x^2+1"});
  auto a = bq.root_field(0), b = bq.root_field(1);
  CHECK(bq.field_of_definition(a, b).degree() == 1);
  CHECK(bq.field_of_definition(a, a).group == a.group);
  auto c = ctx(2, {"x^4-2"});
  auto l = c.root_field(0);
  auto sub = c.subfield_of(l.generator * l.generator);
  CHECK(sub.degree() == 2);
  auto fod = c.field_of_definition(l, sub);
  CHECK(fod.group == sub.group);
}

TEST_CASE("sections") {
  auto i3 = ctx(3, {"x^2+1"});
  const auto& G = i3.group();
  CHECK(find_section(G, i3.D(), i3.I(), i3.V()).has_value());
  auto c = ctx(2, {"x^3-2*x^2+x+2"});
  auto s = find_section(c.group(), c.D(), c.I(), c.V());
  REQUIRE(s.has_value());
  CHECK(s->size() == 1);
  CHECK(find_section(c.group(), c.D(), c.V(), c.group().trivial()).has_value());
  // Z/4 -> Z/2 has no section
  PermGroup z4({{0, 1, 2, 3}, {1, 2, 3, 0}, {2, 3, 0, 1}, {3, 0, 1, 2}});
  CHECK_FALSE(find_section(z4, z4.whole(), z4.generate({2}), z4.trivial()).has_value());
}

TEST_CASE("restriction of primes at the place 1/t") {
  auto fx = [](const std::string& s, std::uint64_t p) { return to_function_poly(parse_polynomial(s), p); };
  auto inf = DiscreteValuation<RatFunc>::at_infinity(5);
  GaloisContext<RatFunc> c(inf, {fx("x^2-t^2-1", 5)});
  ValuedExtension<RatFunc> el(inf, fx("x^2-t^2-1", 5));
  auto l = c.root_field(0);
  REQUIRE(el.splitting().g() == 2);
  std::set<std::size_t> seen;
  for (int g = 0; g < c.group().order(); ++g) seen.insert(c.restriction_of_x(l, el, g));
  CHECK(seen.size() == 2);
  auto a2 = DiscreteValuation<RatFunc>::at_infinity(2);
  GaloisContext<RatFunc> as(a2, {fx("x^2+x+t", 2)});
  CHECK(as.V().size() == 2);
}
