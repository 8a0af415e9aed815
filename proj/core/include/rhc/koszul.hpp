#pragma once

#include <string>
#include <vector>

#include "rhc/complexes.hpp"
#include "rhc/hecke.hpp"

namespace rhc {

// Strands of the internally graded algebra built on the tower of projective
// 0-Hecke modules: internal degree = number of columns of the ribbon,
// external degree = number of cells. Only finite strands are materialized.

// All compositions of N whose diagram has exactly d columns.
std::vector<Composition> graded_piece(int d, int N);

// One choice of factors for a tensor strand: gamma_j has internal degree
// (column count) alpha_j; the sizes sum to N.
using FactorChoice = std::vector<Composition>;
std::vector<FactorChoice> factor_choices(const Composition& alpha_internal, int N);

// The external-degree-N strand of the ribbon Schur module for the internal
// multidegree alpha: for each factor choice the kernel of the simultaneous
// adjacent-gluing map out of P_{(gamma_1,...,gamma_r)}.
struct RibbonSchurStrand {
  Composition alpha_internal;
  int external_degree = 0;
  std::vector<FactorChoice> choices;
  std::vector<HeckeModule> kernels;        // one per choice
  MultiplicityVector decomposition;        // aggregate over all choices
};

// Throws std::logic_error if any kernel fails to decompose as the single
// projective on the concatenated factors.
RibbonSchurStrand ribbon_schur_module(const Composition& alpha_internal, int N);

struct StrandReport {
  bool ok = true;
  std::vector<std::string> failures;
};

// Exactness of 0 -> S^{a.b} -> S^a (x) S^b -> S^{a(.)b} -> 0 in external
// degree N: the middle decomposes into two-component projectives indexed by
// pairs of factor choices, the maps are the summandwise concatenation and
// near-concatenation maps, and the left/right index sets must match up.
StrandReport verify_koszul_strand(const Composition& a, const Composition& b, int N);

// For every gamma of size at most n_max: the one-column factors read off the
// transpose glue back to gamma, and the composed gluing map from the
// column-factor projective is surjective onto P_gamma.
StrandReport verify_degree_one_generation(int n_max);

}  // namespace rhc
