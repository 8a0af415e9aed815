#include "rhc/skew.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace rhc {

std::string generalized_multiplicity_str(const GeneralizedMultiplicityVector& mv) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [comps, m] : mv) {
    if (!first) os << ", ";
    first = false;
    os << '[' << sequence_str(comps) << "]:" << m;
  }
  os << '}';
  return os.str();
}

SkewProjective build_skew(const Composition& alpha, const Composition& beta) {
  int n = alpha.size(), k = beta.size();
  if (k > n) throw std::invalid_argument("build_skew: |beta| exceeds |alpha|");
  HeckeModule p = build_projective({alpha});

  DescentSet des = descent_set(beta);
  SparseMatrix relations(0, p.dim);
  for (int i = 1; i <= k - 1; ++i) {
    SparseMatrix block = p.gen(i);
    if (des.contains(i)) block = block + SparseMatrix::identity(p.dim);  // pi_i - (-1)
    // relation vectors are the columns; store them as rows
    relations = SparseMatrix::vstack(relations, block.transpose());
  }

  std::vector<int> keep;
  for (int i = k + 1; i <= n - 1; ++i) keep.push_back(i);

  SkewProjective out;
  out.alpha = alpha;
  out.beta = beta;
  out.module = quotient_module(p, relations, keep, n - k);
  out.decomposition = decompose_projective(out.module);
  return out;
}

NSymElem skew_character(const SkewProjective& s) {
  NSymElem ch{NBasis::R, {}};
  for (const auto& [gamma, mult] : s.decomposition) ch.add_term(gamma, Rational(mult));
  NSymElem expected = perp(qsym_l(s.beta), nsym_r(s.alpha));
  if (!(ch == expected))
    throw std::logic_error("skew_character: module character " + nsym_str(ch) +
                           " differs from perp expansion " + nsym_str(expected));
  return ch;
}

GeneralizedMultiplicityVector skew_by_row(const Composition& alpha, int k) {
  int n = alpha.size();
  if (k <= 0 || k >= n) throw std::invalid_argument("skew_by_row: k out of range");
  int l = alpha.length();
  GeneralizedMultiplicityVector out;
  std::vector<int> b(l, 0);
  auto rec = [&](auto&& self, int i, int remaining) -> void {
    if (i == l) {
      if (remaining != 0) return;
      out[components(row_delete(alpha, WeakComposition(b)))] += 1;
      return;
    }
    int cap = alpha.part(i);
    if (i < l - 1) cap -= 1;  // only the top row may be deleted entirely
    for (int take = 0; take <= std::min(cap, remaining); ++take) {
      b[i] = take;
      self(self, i + 1, remaining - take);
    }
    b[i] = 0;
  };
  rec(rec, 0, k);
  return out;
}

GeneralizedMultiplicityVector skew_by_column(const Composition& alpha, int k) {
  GeneralizedMultiplicityVector transposed = skew_by_row(transpose(alpha), k);
  GeneralizedMultiplicityVector out;
  for (const auto& [comps, mult] : transposed) out[transpose_components(comps)] += mult;
  return out;
}

MultiplicityVector expand_generalized(const GeneralizedMultiplicityVector& v) {
  MultiplicityVector out;
  for (const auto& [comps, mult] : v) {
    MultiplicityVector module_route = decompose_projective(build_projective(comps));
    NSymElem symbolic = nsym_r(Composition());
    for (const auto& c : comps) symbolic = r_product(symbolic, nsym_r(c));
    MultiplicityVector symbolic_route;
    for (const auto& [gamma, coeff] : symbolic.coeffs)
      symbolic_route[gamma] = coeff.to_long();
    if (module_route != symbolic_route)
      throw std::logic_error("expand_generalized: module decomposition " +
                             multiplicity_str(module_route) +
                             " disagrees with the ribbon product " +
                             multiplicity_str(symbolic_route) + " for [" +
                             sequence_str(comps) + "]");
    for (const auto& [gamma, m] : module_route) out[gamma] += mult * m;
  }
  return out;
}

namespace {

// Tableaux of P_alpha grouped by the cell holding entry n: the last cell of
// row i, admissible when alpha_i > 1 or i = 1. Group i splits Diag(alpha)
// into the subribbon below/left of that cell and the one above/right of it.
struct BranchGroup {
  int i = 0;                // 1-based row index
  int slot = 0;             // traversal index of the removed cell
  Composition lower, upper; // either may be empty
};

std::vector<BranchGroup> branch_groups(const Composition& alpha) {
  std::vector<BranchGroup> out;
  int l = alpha.length();
  int acc = 0;
  for (int i = 1; i <= l; ++i) {
    acc += alpha.part(i - 1);
    if (!(alpha.part(i - 1) > 1 || i == 1)) continue;
    BranchGroup g;
    g.i = i;
    g.slot = acc - 1;
    std::vector<int> lower(alpha.parts().begin(), alpha.parts().begin() + i);
    lower[i - 1] -= 1;
    if (lower[i - 1] == 0) lower.pop_back();  // only possible when i == 1
    std::vector<int> upper(alpha.parts().begin() + i, alpha.parts().end());
    g.lower = Composition(lower);
    g.upper = Composition(upper);
    out.push_back(std::move(g));
  }
  return out;
}

Word insert_value(const Word& u, int slot, int value) {
  Word w = u;
  w.insert(w.begin() + slot, value);
  return w;
}

Word strip_slot(const Word& w, int slot) {
  Word u = w;
  u.erase(u.begin() + slot);
  return u;
}

}  // namespace

BranchingSES branching_ses(const Composition& alpha) {
  int n = alpha.size();
  if (n <= 1) throw std::invalid_argument("branching_ses: need n > 1");
  BranchingSES b;
  b.alpha = alpha;

  HeckeModule p = build_projective({alpha});
  b.restricted = restrict_module(p, n - 1).left;  // generators 1..n-2

  std::vector<BranchGroup> groups = branch_groups(alpha);
  std::vector<HeckeModule> kernel_parts, cokernel_parts;
  std::vector<int> cokernel_group;  // group index of each cokernel summand
  std::vector<int> kernel_group;
  for (size_t gi = 0; gi < groups.size(); ++gi) {
    const BranchGroup& g = groups[gi];
    if (!g.lower.empty()) {
      b.kernel_index.push_back(concat(g.lower, g.upper));  // = alpha - e_i
      kernel_parts.push_back(build_projective({b.kernel_index.back()}));
      kernel_group.push_back(static_cast<int>(gi));
    }
    if (!g.upper.empty()) {
      Composition target = g.lower.empty() ? g.upper : near_concat(g.lower, g.upper);
      b.cokernel_index.push_back(target);
      cokernel_parts.push_back(build_projective({target}));
      cokernel_group.push_back(static_cast<int>(gi));
    }
  }

  std::vector<int> kernel_offsets, cokernel_offsets;
  b.kernel = direct_sum(n - 1, kernel_parts, &kernel_offsets);
  b.cokernel = direct_sum(n - 1, cokernel_parts, &cokernel_offsets);

  b.inject = SparseMatrix(p.dim, b.kernel.dim);
  for (size_t s = 0; s < kernel_parts.size(); ++s) {
    const BranchGroup& g = groups[kernel_group[s]];
    const HeckeModule& part = kernel_parts[s];
    for (int t = 0; t < part.dim; ++t) {
      Word w = insert_value(part.basis[t], g.slot, n);
      int idx = p.word_index(w);
      if (idx < 0) throw std::logic_error("branching_ses: inserted word left the basis");
      b.inject.set(idx, kernel_offsets[s] + t, Rational(1));
    }
  }

  b.project = SparseMatrix(b.cokernel.dim, p.dim);
  std::vector<int> group_of_slot(n, -1);
  std::vector<int> summand_of_group(groups.size(), -1);
  for (size_t s = 0; s < cokernel_parts.size(); ++s) summand_of_group[cokernel_group[s]] = static_cast<int>(s);
  for (size_t gi = 0; gi < groups.size(); ++gi) group_of_slot[groups[gi].slot] = static_cast<int>(gi);
  for (int t = 0; t < p.dim; ++t) {
    const Word& w = p.basis[t];
    int slot = -1;
    for (int x = 0; x < n; ++x)
      if (w[x] == n) { slot = x; break; }
    int gi = group_of_slot[slot];
    if (gi < 0) throw std::logic_error("branching_ses: entry n in an inadmissible cell");
    const BranchGroup& g = groups[gi];
    if (g.upper.empty()) continue;  // kernel-only group, mu = 0
    if (!g.lower.empty() && !(w[g.slot - 1] < w[g.slot + 1])) continue;  // glue not standard
    int s = summand_of_group[gi];
    Word u = strip_slot(w, slot);
    int idx = cokernel_parts[s].word_index(u);
    if (idx < 0) throw std::logic_error("branching_ses: glued word left the basis");
    b.project.set(cokernel_offsets[s] + idx, t, Rational(1));
  }
  return b;
}

BranchReport verify_branching(const BranchingSES& b) {
  BranchReport report;
  auto fail = [&](const std::string& what) {
    report.ok = false;
    report.failures.push_back(what);
  };
  int mid = b.restricted.dim;
  if (b.kernel.dim + b.cokernel.dim != mid) fail("dimension mismatch");
  if (b.inject.rank() != b.kernel.dim) fail("inject not injective");
  if (b.project.rank() != b.cokernel.dim) fail("project not surjective");
  if (!(b.project * b.inject).is_zero()) fail("project o inject != 0");
  for (int i = 1; i <= b.alpha.size() - 2; ++i) {
    if (!(b.inject * b.kernel.gen(i) == b.restricted.gen(i) * b.inject))
      fail("inject not equivariant at pi_" + std::to_string(i));
    if (!(b.project * b.restricted.gen(i) == b.cokernel.gen(i) * b.project))
      fail("project not equivariant at pi_" + std::to_string(i));
  }
  // kernel index must be {alpha - e_i : alpha_i > 1}, cokernel index must be
  // {(alpha^T - e_j)^T : (alpha^T)_j > 1} as multisets
  std::vector<Composition> expect_kernel;
  for (int i = 0; i < b.alpha.length(); ++i) {
    if (b.alpha.part(i) > 1) {
      std::vector<int> parts = b.alpha.parts();
      parts[i] -= 1;
      expect_kernel.push_back(Composition(parts));
    }
  }
  std::vector<Composition> got_kernel = b.kernel_index;
  std::sort(expect_kernel.begin(), expect_kernel.end());
  std::sort(got_kernel.begin(), got_kernel.end());
  if (expect_kernel != got_kernel) fail("kernel index set mismatch");

  Composition at = transpose(b.alpha);
  std::vector<Composition> expect_cokernel;
  for (int j = 0; j < at.length(); ++j) {
    if (at.part(j) > 1) {
      std::vector<int> parts = at.parts();
      parts[j] -= 1;
      expect_cokernel.push_back(transpose(Composition(parts)));
    }
  }
  std::vector<Composition> got_cokernel = b.cokernel_index;
  std::sort(expect_cokernel.begin(), expect_cokernel.end());
  std::sort(got_cokernel.begin(), got_cokernel.end());
  if (expect_cokernel != got_cokernel) fail("cokernel index set mismatch");
  return report;
}

}  // namespace rhc
