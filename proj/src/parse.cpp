#include "valext/parse.hpp"

#include <cctype>

#include "valext/errors.hpp"

namespace valext {

namespace {

IntPoly2 add(IntPoly2 a, const IntPoly2& b, int sign) {
  for (const auto& [k, c] : b) {
    a[k] += sign * c;
    if (a[k] == 0) a.erase(k);
  }
  return a;
}

IntPoly2 mul(const IntPoly2& a, const IntPoly2& b) {
  IntPoly2 r;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) {
      auto k = std::make_pair(ka.first + kb.first, ka.second + kb.second);
      r[k] += ca * cb;
      if (r[k] == 0) r.erase(k);
    }
  return r;
}

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  IntPoly2 run() {
    skip();
    if (pos_ >= s_.size()) fail("empty polynomial", "");
    IntPoly2 r = expr();
    skip();
    if (pos_ < s_.size()) fail("unexpected token", std::string(1, s_[pos_]));
    return r;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& msg, const std::string& tok) const {
    throw ParseError(msg, tok, pos_);
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  IntPoly2 expr() {
    IntPoly2 r = term();
    for (;;) {
      if (eat('+'))
        r = add(r, term(), 1);
      else if (eat('-'))
        r = add(r, term(), -1);
      else
        return r;
    }
  }
  IntPoly2 term() {
    IntPoly2 r = unary();
    for (;;) {
      if (eat('*')) {
        r = mul(r, unary());
        continue;
      }
      // juxtaposition such as 2x or 3(t+1)
      skip();
      if (pos_ < s_.size() && (s_[pos_] == 'x' || s_[pos_] == 't' || s_[pos_] == '(')) {
        r = mul(r, power());
        continue;
      }
      return r;
    }
  }
  IntPoly2 unary() {
    if (eat('-')) return add({}, unary(), -1);
    if (eat('+')) return unary();
    return power();
  }
  IntPoly2 power() {
    IntPoly2 b = atom();
    if (!eat('^')) return b;
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("exponent must be a non-negative integer", pos_ < s_.size() ? std::string(1, s_[pos_]) : "");
    if (pos_ - start > 4) {
      pos_ = start;
      fail("exponent too large", s_.substr(start, 5));
    }
    int e = std::stoi(s_.substr(start, pos_ - start));
    IntPoly2 r{{{0, 0}, 1}};
    for (int i = 0; i < e; ++i) r = mul(r, b);
    return r;
  }
  IntPoly2 atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input", "");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      IntPoly2 r = expr();
      if (!eat(')')) fail("expected ')'", pos_ < s_.size() ? std::string(1, s_[pos_]) : "");
      return r;
    }
    if (c == 'x' || c == 't') {
      ++pos_;
      return c == 'x' ? IntPoly2{{{1, 0}, 1}} : IntPoly2{{{0, 1}, 1}};
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      Integer v(s_.substr(start, pos_ - start));
      if (v == 0) return {};
      return {{{0, 0}, v}};
    }
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    std::string tok = pos_ > start ? s_.substr(start, pos_ - start) : std::string(1, c);
    pos_ = start;
    fail("unexpected token", tok);
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

int degree_x(const IntPoly2& p) {
  int d = -1;
  for (const auto& [k, c] : p) d = std::max(d, k.first);
  return d;
}

}  // namespace

IntPoly2 parse_polynomial(const std::string& text) { return Parser(text).run(); }

QPoly to_rational_poly(const IntPoly2& p) {
  std::vector<Rational> c(degree_x(p) + 1, Rational(0));
  for (const auto& [k, v] : p) {
    if (k.second != 0) throw ParseError("variable t is not allowed over Q", "t", 0);
    c[k.first] = v;
  }
  return QPoly(Rational(0), std::move(c));
}

FPoly to_function_poly(const IntPoly2& p, std::uint64_t prime) {
  std::vector<FpPoly> c(degree_x(p) + 1, FpPoly(prime));
  for (const auto& [k, v] : p) {
    std::uint64_t r = mod_pos(v, Integer(static_cast<unsigned long>(prime))).get_ui();
    c[k.first] += FpPoly::monomial(prime, r, k.second);
  }
  std::vector<RatFunc> out;
  for (auto& a : c) out.emplace_back(a);
  return FPoly(RatFunc(prime), std::move(out));
}

FpPoly to_fp_poly(const IntPoly2& p, std::uint64_t prime) {
  FpPoly r(prime);
  for (const auto& [k, v] : p) {
    if (k.first != 0) throw ParseError("variable x is not allowed in a place polynomial", "x", 0);
    r += FpPoly::monomial(prime, mod_pos(v, Integer(static_cast<unsigned long>(prime))).get_ui(), k.second);
  }
  return r;
}

ValuationDescriptor parse_valuation(const std::string& text) {
  ValuationDescriptor d;
  d.text = text;
  auto at = text.find('@');
  if (at == std::string::npos) throw ParseError("valuation descriptor needs '@'", text, 0);
  std::string base = text.substr(0, at), place = text.substr(at + 1);
  auto trim = [](std::string s) {
    std::string r;
    for (char c : s)
      if (!std::isspace(static_cast<unsigned char>(c))) r += c;
    return r;
  };
  base = trim(base);
  place = trim(place);
  auto prime_of = [&](const std::string& s, std::size_t pos) {
    if (s.empty() || s.size() > 9 || s.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError("expected a prime number", s, pos);
    Integer p(s);
    if (p < 2 || !is_probable_prime(p)) throw ParseError("not a prime", s, pos);
    return static_cast<std::uint64_t>(p.get_ui());
  };
  if (base == "Q") {
    d.base = ValuationDescriptor::Base::Rationals;
    d.p = prime_of(place, at + 1);
    return d;
  }
  if (base.rfind("Fp(", 0) == 0 && base.size() > 5 && base.substr(base.size() - 3) == ",t)") {
    d.base = ValuationDescriptor::Base::FunctionField;
    d.p = prime_of(base.substr(3, base.size() - 6), 3);
    if (place == "inf") {
      d.infinite = true;
      d.place = FpPoly(d.p);
      return d;
    }
    FpPoly pi(d.p);
    try {
      pi = to_fp_poly(parse_polynomial(place), d.p);
    } catch (const ParseError& e) {
      throw ParseError("bad place polynomial: " + e.message(), e.token(), at + 1 + e.position());
    }
    if (pi.degree() < 1) throw ParseError("place polynomial must have degree >= 1", place, at + 1);
    pi = pi.monic();
    if (!is_irreducible(pi)) throw ParseError("place polynomial is not irreducible", place, at + 1);
    d.place = pi;
    return d;
  }
  throw ParseError("unknown base field", base, 0);
}

}  // namespace valext
