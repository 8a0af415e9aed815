#pragma once

#include <string>
#include <vector>

#include "rhc/hecke.hpp"
#include "rhc/nsym_qsym.hpp"

namespace rhc {

// The concatenation map P_{a.b} -> P_{(a,b)}: translate the upper subribbon
// one unit right, entries unchanged. On reading words it is the identity,
// so the matrix has exactly one 1 per column.
ModuleMap partial_map(const Composition& a, const Composition& b);

// The near-concatenation map P_{(a,b)} -> P_{a(.)b}: translate the second
// component one unit down, keep the result when it is standard, send the
// tableau to zero otherwise.
ModuleMap mu_map(const Composition& a, const Composition& b);

// The explicit linear section of mu (translate the second part up); satisfies
// mu * s = identity as matrices. Not equivariant in general.
SparseMatrix mu_section(const ModuleMap& mu);

struct SES {
  Composition alpha, beta;
  HeckeModule left, middle, right;
  ModuleMap inject;   // partial_map
  ModuleMap project;  // mu_map
};

SES build_ses(const Composition& a, const Composition& b);

struct SESReport {
  bool ok = true;
  std::vector<std::string> failures;
};
// Injectivity, surjectivity, im = ker by exact rank, equivariance of both
// maps, dimension additivity, and mu * section = id.
SESReport verify_ses(const SES& s);

// (-1)^{#{elements of I below j}}; j must not lie in I.
int sign(int j, const std::vector<int>& index_set);

// Gluing at the original comma j applied to the sequence seq(I): the matrix
// of phi_j from P_{seq(I)} to P_{seq(I + {j})} in the canonical bases.
// `source`/`target` must be the projective modules on those shapes.
SparseMatrix phi_matrix(const HeckeModule& source, const HeckeModule& target);

struct ComplexTerm {
  std::vector<std::vector<int>> index_sets;  // colex order, one per summand
  std::vector<HeckeModule> summands;
  std::vector<int> offsets;  // basis offset of each summand
  int dim = 0;
};

struct CochainComplex {
  std::vector<Composition> seq;
  int n = 0;
  std::vector<ComplexTerm> terms;       // degrees 0 .. l-1
  std::vector<SparseMatrix> diffs;      // diffs[i] : term i -> term i+1
};

CochainComplex build_ribbon_complex(const std::vector<Composition>& seq);

// Checks d^2 = 0; throws std::logic_error naming the offending degrees
// otherwise (the complex would not be a complex).
void verify_d_squared(const CochainComplex& c);

// dim H^i for every degree; requires d^2 = 0.
std::vector<int> cohomology_dims(const CochainComplex& c);

// H^0 as a module: the kernel of d_0 with its restricted action, decomposed
// into projective multiplicities.
MultiplicityVector h0_multiplicities(const CochainComplex& c);

// sum over I of (-1)^{|I|} prod_j R_{component j of seq(I)}, computed in the
// R basis purely symbolically.
NSymElem euler_character_nsym(const std::vector<Composition>& seq);

// All subsets of {1..l-1} of the given size, in colexicographic order.
std::vector<std::vector<int>> colex_subsets(int l_minus_1, int size);

}  // namespace rhc
