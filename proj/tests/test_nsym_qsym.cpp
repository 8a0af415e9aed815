#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rhc/nsym_qsym.hpp"

using namespace rhc;

namespace {
Composition c(const char* s) { return parse_composition(s); }
NSymElem R(const char* s) { return nsym_r(c(s)); }
QSymElem L(const char* s) { return qsym_l(c(s)); }
}  // namespace

TEST_CASE("H to R expansion") {
  NSymElem x = h_to_r(nsym_h(c("(1,1)")));
  CHECK(x.coeff(c("(1,1)")) == Rational(1));
  CHECK(x.coeff(c("(2)")) == Rational(1));
  CHECK(x.coeffs.size() == 2);
  CHECK(h_to_r(nsym_h(c("(5)"))) == R("(5)"));
}

TEST_CASE("conversion round trips") {
  for (int n = 0; n <= 6; ++n) {
    for (const auto& alpha : compositions_of(n)) {
      CHECK(r_to_h(h_to_r(nsym_h(alpha))) == nsym_h(alpha));
      CHECK(h_to_r(r_to_h(nsym_r(alpha))) == nsym_r(alpha));
      CHECK(l_to_m(m_to_l(qsym_m(alpha))) == qsym_m(alpha));
      CHECK(m_to_l(l_to_m(qsym_l(alpha))) == qsym_l(alpha));
    }
  }
}

TEST_CASE("ribbon products") {
  NSymElem p = r_product(R("(1)"), R("(2)"));
  CHECK(p.coeff(c("(1,2)")) == Rational(1));
  CHECK(p.coeff(c("(3)")) == Rational(1));
  CHECK(p.coeffs.size() == 2);

  CHECK(r_product(nsym_r(Composition()), R("(2,1)")) == R("(2,1)"));

  NSymElem q = r_product(R("(3,2)"), R("(3,1,1)"));
  CHECK(q.coeff(c("(3,2,3,1,1)")) == Rational(1));
  CHECK(q.coeff(c("(3,5,1,1)")) == Rational(1));
  CHECK(q.coeffs.size() == 2);
}

TEST_CASE("fundamental products via shuffles") {
  QSymElem p = l_product(L("(2)"), L("(1,1)"));
  QSymElem expected{QBasis::L, {}};
  for (const char* s : {"(3,1)", "(2,2)", "(2,1,1)", "(1,3)", "(1,2,1)", "(1,1,2)"})
    expected.add_term(c(s), Rational(1));
  CHECK(p == expected);

  CHECK(l_product(qsym_l(Composition()), L("(2,1)")) == L("(2,1)"));

  // coefficient sum is the shuffle count
  Rational total(0);
  for (const auto& [a, v] : l_product(L("(2,1)"), L("(2)")).coeffs) total += v;
  CHECK(total == Rational(10));  // C(5,3)

  // independence of representative words, small sweep
  for (int n = 2; n <= 5; ++n) {
    for (int k = 1; k <= n - 1; ++k) {
      for (const auto& a : compositions_of(k)) {
        for (const auto& b : compositions_of(n - k)) {
          CHECK(l_product(qsym_l(a), qsym_l(b), false) == l_product(qsym_l(a), qsym_l(b), true));
        }
      }
    }
  }
}

TEST_CASE("fundamental coproduct") {
  auto terms = l_coproduct(c("(2)"));
  CHECK(terms.size() == 3);
  CHECK(terms.at({c("()"), c("(2)")}) == Rational(1));
  CHECK(terms.at({c("(1)"), c("(1)")}) == Rational(1));
  CHECK(terms.at({c("(2)"), c("()")}) == Rational(1));

  auto unit = l_coproduct(c("()"));
  CHECK(unit.size() == 1);
  CHECK(unit.at({c("()"), c("()")}) == Rational(1));

  for (int n = 1; n <= 7; ++n)
    for (const auto& alpha : compositions_of(n)) {
      auto cp = l_coproduct(alpha);
      long count = 0;
      for (const auto& [k, v] : cp) count += v.to_long();
      CHECK(count == n + 1);
      // every term splits alpha by concatenation or near-concatenation
      for (const auto& [k, v] : cp) {
        const auto& [b, g] = k;
        bool matches = concat(b, g) == alpha ||
                       (!b.empty() && !g.empty() && near_concat(b, g) == alpha);
        CHECK(matches);
      }
    }
}

TEST_CASE("monomial fundamental conversion") {
  QSymElem x = l_to_m(L("(2)"));
  CHECK(x.coeff(c("(2)")) == Rational(1));
  CHECK(x.coeff(c("(1,1)")) == Rational(1));
  CHECK(l_to_m(L("(1,1,1)")).coeffs.size() == 1);
}

TEST_CASE("pairing") {
  CHECK(pairing(R("(2,1)"), L("(2,1)")) == Rational(1));
  CHECK(pairing(R("(2,1)"), L("(1,2)")) == Rational(0));
  for (int n = 1; n <= 5; ++n) {
    for (const auto& a : compositions_of(n)) {
      for (const auto& b : compositions_of(n)) {
        Rational want = a == b ? Rational(1) : Rational(0);
        CHECK(pairing(nsym_h(a), qsym_m(b)) == want);
        CHECK(pairing(nsym_r(a), qsym_l(b)) == want);
      }
    }
  }
}

TEST_CASE("duality of product and coproduct") {
  for (int n = 2; n <= 6; ++n) {
    for (const auto& gamma : compositions_of(n)) {
      auto cp = l_coproduct(gamma);
      for (int k = 1; k <= n - 1; ++k) {
        for (const auto& a : compositions_of(k)) {
          for (const auto& b : compositions_of(n - k)) {
            Rational lhs = pairing(r_product(nsym_r(a), nsym_r(b)), qsym_l(gamma));
            Rational rhs(0);
            for (const auto& [key, v] : cp) {
              const auto& [g1, g2] = key;
              if (g1 == a && g2 == b) rhs += v;
            }
            CHECK(lhs == rhs);
          }
        }
      }
    }
  }
}

TEST_CASE("perp operators") {
  NSymElem x = perp(L("(1)"), R("(2,2,1)"));
  NSymElem expected = nsym_add(nsym_add(R("(1,2,1)"), R("(2,1,1)")),
                               nsym_add(R("(3,1)"), R("(2,2)")));
  CHECK(x == expected);

  CHECK(perp(qsym_l(Composition()), R("(2,2,1)")) == R("(2,2,1)"));

  NSymElem y = perp(L("(3)"), R("(1,3,2)"));
  NSymElem want{NBasis::R, {}};
  want.add_term(c("(1,2)"), Rational(2));
  want.add_term(c("(1,1,1)"), Rational(1));
  want.add_term(c("(3)"), Rational(2));
  want.add_term(c("(2,1)"), Rational(1));
  CHECK(y == want);
}

TEST_CASE("perp adjointness") {
  for (int n = 2; n <= 5; ++n) {
    for (const auto& delta : compositions_of(n)) {
      for (int k = 1; k <= n - 1; ++k) {
        for (const auto& beta : compositions_of(k)) {
          NSymElem lhs = perp(qsym_l(beta), nsym_r(delta));
          for (const auto& gamma : compositions_of(n - k)) {
            CHECK(pairing(nsym_r(delta), l_product(qsym_l(beta), qsym_l(gamma))) ==
                  pairing(lhs, qsym_l(gamma)));
          }
        }
      }
    }
  }
}

TEST_CASE("one box perp identity") {
  for (int n = 2; n <= 6; ++n) {
    for (const auto& alpha : compositions_of(n)) {
      NSymElem want{NBasis::R, {}};
      for (int i = 0; i < alpha.length(); ++i) {
        if (alpha.part(i) > 1) {
          auto parts = alpha.parts();
          parts[i] -= 1;
          want.add_term(Composition(parts), Rational(1));
        }
      }
      Composition at = transpose(alpha);
      for (int j = 0; j < at.length(); ++j) {
        if (at.part(j) > 1) {
          auto parts = at.parts();
          parts[j] -= 1;
          want.add_term(transpose(Composition(parts)), Rational(1));
        }
      }
      CHECK(perp(L("(1)"), nsym_r(alpha)) == want);
    }
  }
}
