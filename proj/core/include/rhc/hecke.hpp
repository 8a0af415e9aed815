#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rhc/diagram.hpp"
#include "rhc/nsym_qsym.hpp"
#include "rhc/sparse_matrix.hpp"
#include "rhc/tableau.hpp"

namespace rhc {

// Multiplicities of indecomposable projectives (or simples), keyed by the
// indexing composition. The concrete stand-in for Grothendieck-group classes.
using MultiplicityVector = std::map<Composition, long>;

std::string multiplicity_str(const MultiplicityVector& mv);

// A finite-dimensional module over the 0-Hecke algebra on n letters: an
// ordered basis together with one sparse matrix per generator pi_bar_i,
// i = 1..n-1. Modules built from tableaux carry their shape and reading-word
// basis; quotient and kernel modules are abstract (matrices only).
struct HeckeModule {
  int n = 0;
  int dim = 0;
  std::vector<Composition> shape;   // empty for abstract modules
  GeneralizedRibbon diagram;        // meaningful iff shape is nonempty
  std::vector<Word> basis;          // sorted reading words; empty if abstract
  std::vector<SparseMatrix> gens;   // gens[i-1] is the matrix of pi_bar_i

  const SparseMatrix& gen(int i) const { return gens.at(i - 1); }
  bool has_tableau_basis() const { return !basis.empty() || dim == 0; }
  // Index of a reading word in the canonical basis order, or -1.
  int word_index(const Word& w) const;
};

// Action of pi_bar_i on one standard tableau: -T when i sits in a higher row
// than i+1, 0 when they share a row, and the swap s_i(T) otherwise.
struct PiBarResult {
  int scalar;                 // -1, 0, or +1 (swap case)
  std::optional<Word> image;  // set iff scalar == +1
};
PiBarResult pi_bar(const GeneralizedRibbon& shape, const Word& w, int i);

// Projective module on the standard tableaux of the given component list:
// P_alpha for one component, the induced module for several.
HeckeModule build_projective(const std::vector<Composition>& components);

// One-dimensional module where pi_bar_i acts by -1 on descents of alpha and
// by 0 otherwise; realized by the row-reading filling tau1(alpha).
HeckeModule simple_module(const Composition& alpha);

long dim_projective(const Composition& alpha);
long dim_projective(const std::vector<Composition>& components);

struct RelationReport {
  bool ok = true;
  std::vector<std::string> violations;
};
// Checks pi^2 = -pi, the braid relation, and distant commutation on the
// generator matrices.
RelationReport verify_relations(const HeckeModule& m);

// The two factors of the parabolic restriction: generators 1..k-1 acting as
// an H_k(0)-module, and generators k+1..n-1 reindexed to 1..n-k-1 acting as
// an H_{n-k}(0)-module, both on the same underlying space. Generator k is
// dropped.
struct ParabolicRestriction {
  HeckeModule left;   // H_k(0) factor
  HeckeModule right;  // H_{n-k}(0) factor
};
ParabolicRestriction restrict_module(const HeckeModule& m, int k);

// An equivariant linear map between modules over the same algebra.
struct ModuleMap {
  HeckeModule source;
  HeckeModule target;
  SparseMatrix matrix;  // target.dim x source.dim
};
bool is_equivariant(const ModuleMap& f, std::string* why = nullptr);

// dim Hom(M, C_gamma): the solution space of functionals phi with
// phi(pi_bar_i m) = lambda_i phi(m), lambda_i = -1 on descents of gamma,
// 0 otherwise. For projective M this is the multiplicity of P_gamma as a
// direct summand.
int hom_dim_to_simple(const HeckeModule& m, const Composition& gamma);

// dim of the space of equivariant maps A -> B (full linear system).
int hom_dim(const HeckeModule& a, const HeckeModule& b);

// gamma -> hom_dim_to_simple(m, gamma) over all gamma of size n, with exact
// dimension accounting (sum of mult * dim P_gamma must equal dim m; a
// failure throws std::logic_error since it indicates a non-projective input).
MultiplicityVector decompose_projective(const HeckeModule& m);

NSymElem ch_nsym(const HeckeModule& m);  // requires projective input
QSymElem ch_qsym(const HeckeModule& m);  // composition factors, any module

// Direct sum over the same algebra, basis blocks in the given order;
// offsets (when requested) receive each part's starting index.
HeckeModule direct_sum(int n, const std::vector<HeckeModule>& parts,
                       std::vector<int>* offsets = nullptr);

// Submodule spanned by the rows of `span` (must be action-stable): returns
// the abstract module the action induces on that subspace.
HeckeModule submodule_from_basis(const HeckeModule& m, const SparseMatrix& span);

// Quotient of m by the span of the given relation rows (must be
// action-stable for the listed generators). Returns the abstract quotient
// module over the generators in `keep` (1-based indices of m's generators,
// renumbered consecutively), as a module over the 0-Hecke algebra on
// `new_n` letters (new_n must be at least |keep| + 1 unless new_n is 0).
HeckeModule quotient_module(const HeckeModule& m, const SparseMatrix& relations,
                            const std::vector<int>& keep, int new_n);

}  // namespace rhc
