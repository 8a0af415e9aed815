#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rhc/skew.hpp"
#include "rhc/words.hpp"

using namespace rhc;

namespace {
Composition c(const char* s) { return parse_composition(s); }
}  // namespace

TEST_CASE("the worked skews of (1,3,2)") {
  SkewProjective s = build_skew(c("(1,3,2)"), c("(3)"));
  MultiplicityVector want{{c("(1,2)"), 2}, {c("(1,1,1)"), 1}, {c("(3)"), 2}, {c("(2,1)"), 1}};
  CHECK(s.decomposition == want);
  CHECK_NOTHROW(skew_character(s));

  SkewProjective s2 = build_skew(c("(1,3,2)"), c("(1,1)"));
  MultiplicityVector want2{{c("(2,2)"), 1}, {c("(1,2,1)"), 1}, {c("(1,3)"), 1},
                           {c("(3,1)"), 1}, {c("(4)"), 1}};
  CHECK(s2.decomposition == want2);
}

TEST_CASE("degenerate skews") {
  SkewProjective whole = build_skew(c("(2,1)"), c("()"));
  CHECK(whole.module.dim == dim_projective(c("(2,1)")));
  CHECK(whole.decomposition == MultiplicityVector{{c("(2,1)"), 1}});

  SkewProjective self = build_skew(c("(2,1)"), c("(2,1)"));
  CHECK(self.module.dim == 1);
  CHECK(self.decomposition == MultiplicityVector{{c("()"), 1}});

  // mismatched descents at full size leave nothing
  SkewProjective zero = build_skew(c("(2,1)"), c("(1,2)"));
  CHECK(zero.module.dim == 0);
  CHECK(zero.decomposition.empty());

  CHECK_THROWS_AS(build_skew(c("(2)"), c("(2,1)")), std::invalid_argument);
}

TEST_CASE("character law on a sweep") {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& alpha : compositions_of(n)) {
      for (int k = 0; k <= n; ++k) {
        for (const auto& beta : compositions_of(k)) {
          CHECK_NOTHROW(skew_character(build_skew(alpha, beta)));
        }
      }
    }
  }
}

TEST_CASE("row and column stages") {
  GeneralizedMultiplicityVector row = skew_by_row(c("(1,3,2)"), 3);
  GeneralizedMultiplicityVector want_row{
      {{c("(1)"), c("(2)")}, 1},
      {{c("(1)"), c("(1)"), c("(1)")}, 1},
  };
  CHECK(row == want_row);

  GeneralizedMultiplicityVector col = skew_by_column(c("(1,3,2)"), 2);
  GeneralizedMultiplicityVector want_col{
      {{c("(2,2)")}, 1},
      {{c("(1)"), c("(2)"), c("(1)")}, 1},
  };
  CHECK(col == want_col);

  CHECK_THROWS_AS(skew_by_row(c("(2,1)"), 3), std::invalid_argument);
  CHECK_THROWS_AS(skew_by_row(c("(2,1)"), 0), std::invalid_argument);
}

TEST_CASE("expanding generalized summands") {
  GeneralizedMultiplicityVector v{
      {{c("(1)"), c("(2)")}, 1},
      {{c("(1)"), c("(1)"), c("(1)")}, 1},
  };
  MultiplicityVector want{{c("(1,2)"), 2}, {c("(1,1,1)"), 1}, {c("(3)"), 2}, {c("(2,1)"), 1}};
  CHECK(expand_generalized(v) == want);

  GeneralizedMultiplicityVector single{{{c("(2,1)")}, 3}};
  CHECK(expand_generalized(single) == MultiplicityVector{{c("(2,1)"), 3}});

  GeneralizedMultiplicityVector three{{{c("(1)"), c("(2)"), c("(1)")}, 1}};
  MultiplicityVector want3{{c("(1,2,1)"), 1}, {c("(1,3)"), 1}, {c("(3,1)"), 1}, {c("(4)"), 1}};
  CHECK(expand_generalized(three) == want3);
}

TEST_CASE("row and column rules match the quotient construction") {
  for (int n = 2; n <= 5; ++n) {
    for (const auto& alpha : compositions_of(n)) {
      for (int k = 1; k <= n - 1; ++k) {
        CHECK(expand_generalized(skew_by_row(alpha, k)) ==
              build_skew(alpha, Composition(std::vector<int>{k})).decomposition);
        CHECK(expand_generalized(skew_by_column(alpha, k)) ==
              build_skew(alpha, Composition(std::vector<int>(k, 1))).decomposition);
      }
    }
  }
}

TEST_CASE("skew multiplicities count shuffles") {
  // multiplicity of gamma in P_{alpha/beta} = number of shuffles of a
  // beta-word with a shifted gamma-word whose descent composition is alpha
  for (int n = 2; n <= 6; ++n) {
    for (const auto& alpha : compositions_of(n)) {
      for (int k = 1; k <= n; ++k) {
        for (const auto& beta : compositions_of(k)) {
          MultiplicityVector got = build_skew(alpha, beta).decomposition;
          for (const auto& gamma : compositions_of(n - k)) {
            Word u = tau1(beta).word;
            Word v = gamma.empty() ? Word{} : shifted(tau1(gamma).word, k);
            long count = 0;
            for (const Word& w : shuffles(u, v)) {
              if (composition_of_descents(DescentSet(n, word_descents(w))) == alpha) ++count;
            }
            long mult = got.count(gamma) ? got.at(gamma) : 0;
            CHECK(mult == count);
          }
        }
      }
    }
  }
}

TEST_CASE("branching for (2,2,1) matches the worked example") {
  BranchingSES b = branching_ses(c("(2,2,1)"));
  CHECK(b.kernel_index == std::vector<Composition>{c("(1,2,1)"), c("(2,1,1)")});
  CHECK(b.cokernel_index == std::vector<Composition>{c("(3,1)"), c("(2,2)")});
  CHECK(b.restricted.dim == 16);
  CHECK(b.kernel.dim == 8);
  CHECK(b.cokernel.dim == 8);
  CHECK(verify_branching(b).ok);
}

TEST_CASE("branching for a single row") {
  BranchingSES b = branching_ses(c("(4)"));
  CHECK(b.kernel_index == std::vector<Composition>{c("(3)")});
  CHECK(b.cokernel_index.empty());
  CHECK(verify_branching(b).ok);
}

TEST_CASE("branching sweep") {
  for (int n = 2; n <= 5; ++n) {
    for (const auto& alpha : compositions_of(n)) {
      BranchingSES b = branching_ses(alpha);
      BranchReport r = verify_branching(b);
      CHECK(r.ok);
      if (!r.ok)
        for (const auto& f : r.failures) MESSAGE(alpha.str(), ": ", f);
    }
  }
  CHECK_THROWS_AS(branching_ses(c("(1)")), std::invalid_argument);
}
