#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rhc/complexes.hpp"
#include "rhc/verify.hpp"

using namespace rhc;

namespace {
Composition c(const char* s) { return parse_composition(s); }
}  // namespace

TEST_CASE("partial map structure") {
  ModuleMap f = partial_map(c("(2,2)"), c("(1,2,1)"));
  // exactly one 1 per column
  for (int col = 0; col < f.source.dim; ++col) {
    int count = 0;
    for (int r = 0; r < f.target.dim; ++r)
      if (!(f.matrix.get(r, col) == Rational(0))) {
        CHECK(f.matrix.get(r, col) == Rational(1));
        ++count;
      }
    CHECK(count == 1);
  }
  CHECK(f.matrix.rank() == f.source.dim);
  CHECK(is_equivariant(f));
  CHECK_THROWS_AS(partial_map(c("()"), c("(1)")), std::invalid_argument);

  // the worked image: 68 | 25 | 3 | 17 | 4 keeps its reading word
  Word u{6, 8, 2, 5, 3, 1, 7, 4};
  int src = f.source.word_index(u);
  int dst = f.target.word_index(u);
  REQUIRE(src >= 0);
  REQUIRE(dst >= 0);
  CHECK(f.matrix.get(dst, src) == Rational(1));
}

TEST_CASE("mu map on the worked pair") {
  ModuleMap mu = mu_map(c("(2,2)"), c("(1,2,1)"));
  CHECK(is_equivariant(mu));
  CHECK(mu.matrix.rank() == mu.target.dim);

  // 68 | 25 | 3 | 17 | 4 (glue junction 5 > 3) dies
  int killed = mu.source.word_index({6, 8, 2, 5, 3, 1, 7, 4});
  REQUIRE(killed >= 0);
  for (int r = 0; r < mu.target.dim; ++r) CHECK(mu.matrix.get(r, killed) == Rational(0));

  // 68 | 23 | 5 | 17 | 4 (junction 3 < 5) survives with the same word
  Word w{6, 8, 2, 3, 5, 1, 7, 4};
  int alive = mu.source.word_index(w);
  int image = mu.target.word_index(w);
  REQUIRE(alive >= 0);
  REQUIRE(image >= 0);
  CHECK(mu.matrix.get(image, alive) == Rational(1));

  // every target basis vector has exactly one basis preimage
  for (int r = 0; r < mu.target.dim; ++r) {
    int count = 0;
    for (int col = 0; col < mu.source.dim; ++col)
      if (!(mu.matrix.get(r, col) == Rational(0))) ++count;
    CHECK(count == 1);
  }
}

TEST_CASE("small short exact sequences") {
  SES s = build_ses(c("(1)"), c("(1)"));
  CHECK(s.left.dim == 1);
  CHECK(s.middle.dim == 2);
  CHECK(s.right.dim == 1);
  CHECK(verify_ses(s).ok);

  SES big = build_ses(c("(3,2)"), c("(3,1,1)"));
  CHECK(big.middle.dim == big.left.dim + big.right.dim);
  CHECK(verify_ses(big).ok);
}

TEST_CASE("signs") {
  CHECK(sign(1, {}) == 1);
  CHECK(sign(3, {1}) == -1);
  CHECK(sign(2, {1, 3}) == -1);
  CHECK(sign(4, {1, 3}) == 1);
  CHECK_THROWS_AS(sign(1, {1}), std::invalid_argument);
}

TEST_CASE("colex subsets") {
  auto subsets = colex_subsets(3, 2);
  REQUIRE(subsets.size() == 3);
  CHECK(subsets[0] == std::vector<int>{1, 2});
  CHECK(subsets[1] == std::vector<int>{1, 3});
  CHECK(subsets[2] == std::vector<int>{2, 3});
  CHECK(colex_subsets(3, 0) == std::vector<std::vector<int>>{{}});
}

TEST_CASE("length one and length two complexes") {
  CochainComplex one = build_ribbon_complex({c("(2,1)")});
  CHECK(one.terms.size() == 1);
  CHECK(one.diffs.empty());
  CHECK(h0_multiplicities(one) == MultiplicityVector{{c("(2,1)"), 1}});

  CochainComplex two = build_ribbon_complex({c("(2)"), c("(1,1)")});
  REQUIRE(two.terms.size() == 2);
  CHECK(two.terms[0].dim == 6);
  CHECK(two.terms[1].dim == dim_projective(c("(3,1)")));
  // the lone differential is the near-concatenation gluing
  ModuleMap mu = mu_map(c("(2)"), c("(1,1)"));
  CHECK(two.diffs[0] == mu.matrix);
  std::vector<int> h = cohomology_dims(two);
  CHECK(h[0] == dim_projective(c("(2,1,1)")));
  CHECK(h[1] == 0);
}

TEST_CASE("the length four worked example") {
  std::vector<Composition> seq{c("(2)"), c("(1,2)"), c("(2,1)"), c("(1)")};
  CochainComplex cx = build_ribbon_complex(seq);
  REQUIRE(cx.terms.size() == 4);

  // degree 1 summands in colex order: glue comma 1, comma 2, comma 3
  CHECK(cx.terms[1].summands[0].shape ==
        std::vector<Composition>{c("(3,2)"), c("(2,1)"), c("(1)")});
  CHECK(cx.terms[1].summands[1].shape ==
        std::vector<Composition>{c("(2)"), c("(1,4,1)"), c("(1)")});
  CHECK(cx.terms[1].summands[2].shape ==
        std::vector<Composition>{c("(2)"), c("(1,2)"), c("(2,2)")});

  // the displayed tableau: 12 | 5 | 34 | 79 | 8 | 6 bottom to top
  Word w{1, 2, 5, 3, 4, 7, 9, 8, 6};
  int t = cx.terms[0].summands[0].word_index(w);
  REQUIRE(t >= 0);

  // d_0(e_w): +e_w in the first two blocks, nothing in the third
  std::vector<Rational> e(cx.terms[0].dim, Rational(0));
  e[t] = Rational(1);
  std::vector<Rational> image = cx.diffs[0].apply(e);
  int nonzero = 0;
  for (const Rational& v : image)
    if (!v.is_zero()) ++nonzero;
  CHECK(nonzero == 2);
  int img1 = cx.terms[1].offsets[0] + cx.terms[1].summands[0].word_index(w);
  int img2 = cx.terms[1].offsets[1] + cx.terms[1].summands[1].word_index(w);
  CHECK(image[img1] == Rational(1));
  CHECK(image[img2] == Rational(1));

  // d_1 d_0 = 0 on this vector (and globally)
  std::vector<Rational> dd = cx.diffs[1].apply(image);
  for (const Rational& v : dd) CHECK(v.is_zero());
  verify_d_squared(cx);

  std::vector<int> h = cohomology_dims(cx);
  CHECK(h[0] == dim_projective(c("(2,1,2,2,1,1)")));
  CHECK(h[1] == 0);
  CHECK(h[2] == 0);
  CHECK(h[3] == 0);
  CHECK(h0_multiplicities(cx) == MultiplicityVector{{c("(2,1,2,2,1,1)"), 1}});
}

TEST_CASE("euler characters") {
  NSymElem ones = euler_character_nsym({c("(1)"), c("(1)"), c("(1)")});
  CHECK(ones == nsym_r(c("(1,1,1)")));
  CHECK(euler_character_nsym({c("(2,1)")}) == nsym_r(c("(2,1)")));
}

TEST_CASE("gluing maps commute") {
  // adjacent commas
  for (int total = 3; total <= 5; ++total) {
    for (const auto& seq : composition_sequences(total, 3)) {
      if (seq.size() != 3) continue;
      HeckeModule base = build_projective(seq);
      HeckeModule g1 = build_projective(apply_glue_indices(seq, {1}));
      HeckeModule g2 = build_projective(apply_glue_indices(seq, {2}));
      HeckeModule g12 = build_projective(apply_glue_indices(seq, {1, 2}));
      SparseMatrix via1 = phi_matrix(g1, g12) * phi_matrix(base, g1);
      SparseMatrix via2 = phi_matrix(g2, g12) * phi_matrix(base, g2);
      CHECK(via1 == via2);
    }
  }
  // non-adjacent commas
  for (int total = 4; total <= 5; ++total) {
    for (const auto& seq : composition_sequences(total, 4)) {
      if (seq.size() != 4) continue;
      HeckeModule base = build_projective(seq);
      HeckeModule g1 = build_projective(apply_glue_indices(seq, {1}));
      HeckeModule g3 = build_projective(apply_glue_indices(seq, {3}));
      HeckeModule g13 = build_projective(apply_glue_indices(seq, {1, 3}));
      SparseMatrix via1 = phi_matrix(g1, g13) * phi_matrix(base, g1);
      SparseMatrix via3 = phi_matrix(g3, g13) * phi_matrix(base, g3);
      CHECK(via1 == via3);
    }
  }
}

TEST_CASE("d squared vanishes through size seven") {
  for (int total = 1; total <= 7; ++total) {
    for (const auto& seq : composition_sequences(total, 4)) {
      CHECK_NOTHROW(verify_d_squared(build_ribbon_complex(seq)));
    }
  }
}

TEST_CASE("differentials are module maps") {
  for (int total = 2; total <= 5; ++total) {
    for (const auto& seq : composition_sequences(total, 4)) {
      CochainComplex cx = build_ribbon_complex(seq);
      std::vector<HeckeModule> terms;
      for (const auto& term : cx.terms) terms.push_back(direct_sum(cx.n, term.summands));
      for (size_t i = 0; i < cx.diffs.size(); ++i) {
        ModuleMap d{terms[i], terms[i + 1], cx.diffs[i]};
        std::string why;
        CHECK(is_equivariant(d, &why));
      }
    }
  }
}
