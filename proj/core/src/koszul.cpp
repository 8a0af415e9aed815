#include "rhc/koszul.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace rhc {

std::vector<Composition> graded_piece(int d, int N) {
  // a ribbon with m rows and N cells has N - m + 1 columns
  if (d == 0) return N == 0 ? std::vector<Composition>{Composition()} : std::vector<Composition>{};
  return compositions_of_length(N, N - d + 1);
}

std::vector<FactorChoice> factor_choices(const Composition& alpha_internal, int N) {
  std::vector<FactorChoice> out;
  int r = alpha_internal.length();
  FactorChoice cur;
  auto rec = [&](auto&& self, int j, int remaining) -> void {
    if (j == r) {
      if (remaining == 0) out.push_back(cur);
      return;
    }
    for (int size = alpha_internal.part(j); size <= remaining; ++size) {
      for (const auto& gamma : graded_piece(alpha_internal.part(j), size)) {
        cur.push_back(gamma);
        self(self, j + 1, remaining - size);
        cur.pop_back();
      }
    }
  };
  rec(rec, 0, N);
  return out;
}

RibbonSchurStrand ribbon_schur_module(const Composition& alpha_internal, int N) {
  RibbonSchurStrand strand;
  strand.alpha_internal = alpha_internal;
  strand.external_degree = N;
  strand.choices = factor_choices(alpha_internal, N);
  int r = alpha_internal.length();
  for (const auto& choice : strand.choices) {
    HeckeModule domain = build_projective(choice);
    HeckeModule kernel_module;
    if (r <= 1) {
      kernel_module = domain;  // nothing to glue: the strand itself
    } else {
      // stack the r-1 adjacent gluing maps and take the joint kernel
      SparseMatrix stacked(0, domain.dim);
      for (int j = 1; j <= r - 1; ++j) {
        HeckeModule target = build_projective(apply_glue_indices(choice, {j}));
        stacked = SparseMatrix::vstack(stacked, phi_matrix(domain, target));
      }
      kernel_module = submodule_from_basis(domain, stacked.kernel_basis());
    }
    MultiplicityVector dec = decompose_projective(kernel_module);
    Composition expected;
    for (const auto& g : choice) expected = concat(expected, g);
    MultiplicityVector want;
    want[expected] = 1;
    if (dec != want)
      throw std::logic_error("ribbon_schur_module: kernel of [" + sequence_str(choice) +
                             "] decomposes as " + multiplicity_str(dec) + ", expected {" +
                             expected.str() + ":1}");
    for (const auto& [gamma, m] : dec) strand.decomposition[gamma] += m;
    strand.kernels.push_back(std::move(kernel_module));
  }
  return strand;
}

StrandReport verify_koszul_strand(const Composition& a, const Composition& b, int N) {
  StrandReport report;
  auto fail = [&](const std::string& what) {
    report.ok = false;
    report.failures.push_back(what);
  };
  if (a.empty() || b.empty()) return report;  // degenerate identity sequence

  // middle index: pairs (choice for a, choice for b) over all size splits
  struct MiddleIndex {
    FactorChoice left_choice, right_choice;
    Composition eta, theta;
  };
  std::vector<MiddleIndex> middle;
  for (int n1 = 0; n1 <= N; ++n1) {
    for (const auto& ca : factor_choices(a, n1)) {
      for (const auto& cb : factor_choices(b, N - n1)) {
        MiddleIndex mi;
        mi.left_choice = ca;
        mi.right_choice = cb;
        for (const auto& g : ca) mi.eta = concat(mi.eta, g);
        for (const auto& g : cb) mi.theta = concat(mi.theta, g);
        middle.push_back(std::move(mi));
      }
    }
  }

  // left term: choices for a.b must biject with the middle index set via
  // (choice for a, choice for b) -> their concatenation as tuples
  {
    std::map<FactorChoice, long> left_count, paired_count;
    for (const auto& c : factor_choices(concat(a, b), N)) left_count[c] += 1;
    for (const auto& mi : middle) {
      FactorChoice joined = mi.left_choice;
      joined.insert(joined.end(), mi.right_choice.begin(), mi.right_choice.end());
      paired_count[joined] += 1;
    }
    if (left_count != paired_count) fail("left index set does not match the middle index set");
  }

  // right term: the merge (.., gamma_r (.) delta_1, ..) must biject with the
  // choices for a (.) b
  {
    std::map<FactorChoice, long> right_count, merged_count;
    for (const auto& c : factor_choices(near_concat(a, b), N)) right_count[c] += 1;
    for (const auto& mi : middle) {
      if (mi.eta.empty() || mi.theta.empty()) continue;  // no merged summand
      FactorChoice merged(mi.left_choice.begin(), mi.left_choice.end() - 1);
      merged.push_back(near_concat(mi.left_choice.back(), mi.right_choice.front()));
      merged.insert(merged.end(), mi.right_choice.begin() + 1, mi.right_choice.end());
      merged_count[merged] += 1;
    }
    if (right_count != merged_count) fail("right index set does not match the merged middle");
  }

  // summandwise short exact sequences
  for (size_t s = 0; s < middle.size(); ++s) {
    const auto& mi = middle[s];
    if (mi.eta.empty() || mi.theta.empty()) continue;  // one side empty: identity summand
    SESReport r = verify_ses(build_ses(mi.eta, mi.theta));
    if (!r.ok) {
      for (const auto& f : r.failures)
        fail("summand " + std::to_string(s) + " (" + mi.eta.str() + "," + mi.theta.str() +
             "): " + f);
    }
  }
  return report;
}

StrandReport verify_degree_one_generation(int n_max) {
  StrandReport report;
  auto fail = [&](const std::string& what) {
    report.ok = false;
    report.failures.push_back(what);
  };
  for (int n = 1; n <= n_max; ++n) {
    for (const auto& gamma : compositions_of(n)) {
      // column heights left to right; each column is a one-column ribbon
      Composition heights = reverse(transpose(gamma));
      std::vector<Composition> columns;
      for (int j = 0; j < heights.length(); ++j)
        columns.push_back(Composition(std::vector<int>(heights.part(j), 1)));

      Composition glued = columns[0];
      for (size_t j = 1; j < columns.size(); ++j) glued = near_concat(glued, columns[j]);
      if (!(glued == gamma)) {
        fail("columns of " + gamma.str() + " glue to " + glued.str());
        continue;
      }

      // composed gluing map from the column-factor projective onto P_gamma
      std::vector<Composition> stage = columns;
      HeckeModule cur = build_projective(stage);
      SparseMatrix composed = SparseMatrix::identity(cur.dim);
      while (stage.size() > 1) {
        std::vector<Composition> next = apply_glue_indices(stage, {1});
        HeckeModule next_mod = build_projective(next);
        composed = phi_matrix(cur, next_mod) * composed;
        stage = std::move(next);
        cur = std::move(next_mod);
      }
      if (composed.rank() != static_cast<int>(dim_projective(gamma)))
        fail("composed gluing map is not surjective onto P_" + gamma.str());
    }
  }
  return report;
}

}  // namespace rhc
