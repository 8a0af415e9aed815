#pragma once

#include <map>
#include <string>
#include <vector>

#include "rhc/complexes.hpp"
#include "rhc/hecke.hpp"

namespace rhc {

// Multiplicities of generalized-ribbon projectives, keyed by component list.
using GeneralizedMultiplicityVector = std::map<std::vector<Composition>, long>;

std::string generalized_multiplicity_str(const GeneralizedMultiplicityVector& mv);

// P_{alpha/beta}: the quotient of P_alpha by the span of
// { pi_bar_i m - lambda_i^beta m : 1 <= i <= k-1 }, carrying the descended
// action of generators k+1..n-1 reindexed, where lambda_i^beta is -1 on
// descents of beta and 0 otherwise.
struct SkewProjective {
  Composition alpha, beta;
  HeckeModule module;  // over the 0-Hecke algebra on n-k letters
  MultiplicityVector decomposition;
};

SkewProjective build_skew(const Composition& alpha, const Composition& beta);

// ch of the quotient module, checked against perp(L_beta, R_alpha); a
// mismatch throws std::logic_error carrying both expansions.
NSymElem skew_character(const SkewProjective& s);

// Row rule: sum of rowDelete(alpha, b) over weak compositions b of k with
// b_i <= alpha_i and (alpha - b)_i > 0 for i < len(alpha).
GeneralizedMultiplicityVector skew_by_row(const Composition& alpha, int k);
// Column rule: the row rule applied to the transpose, transposed back.
GeneralizedMultiplicityVector skew_by_column(const Composition& alpha, int k);

// Expands every multi-component summand into indecomposable projectives via
// the built module's decomposition, cross-checked against the iterated
// ribbon product; a disagreement throws std::logic_error.
MultiplicityVector expand_generalized(const GeneralizedMultiplicityVector& v);

// The branching short exact sequence of H_{n-1}(0)-modules (generators
// 1..n-2 of H_n(0), generator n-1 dropped):
//
//   0 -> (+)_{alpha_i > 1} P_{alpha - e_i} -> P_alpha| -> (+)_{cols} P_... -> 0
//
// Basis tableaux of P_alpha are grouped by the cell holding the largest
// entry n (the rightmost cell of an admissible row); the maps insert/strip
// that entry and glue the two flanking subribbons.
struct BranchingSES {
  Composition alpha;
  HeckeModule restricted;                  // P_alpha with generators 1..n-2
  std::vector<Composition> kernel_index;   // alpha - e_i, increasing i
  std::vector<Composition> cokernel_index; // glued shapes, increasing group
  HeckeModule kernel, cokernel;            // direct sums in index order
  SparseMatrix inject, project;
};

BranchingSES branching_ses(const Composition& alpha);

struct BranchReport {
  bool ok = true;
  std::vector<std::string> failures;
};
// Exactness by ranks, equivariance for the surviving generators, and the
// symbolic cross-check of the cokernel index against the transpose rule.
BranchReport verify_branching(const BranchingSES& b);

}  // namespace rhc
