#include "rhc/verify.hpp"

#include <algorithm>
#include <numeric>

#include "rhc/version.hpp"

namespace rhc {

json VerifyBounds::to_json() const {
  return json{{"relations_max_n", relations_max_n},
              {"ses_max_total", ses_max_total},
              {"complex_max_total", complex_max_total},
              {"complex_max_length", complex_max_length},
              {"nsym_roundtrip_max", nsym_roundtrip_max},
              {"nsym_transport_max", nsym_transport_max},
              {"lprod_indep_max", lprod_indep_max},
              {"perp_adjoint_max", perp_adjoint_max},
              {"skew_max_n", skew_max_n},
              {"branch_max_n", branch_max_n},
              {"koszul_additivity_max", koszul_additivity_max},
              {"koszul_assoc_max", koszul_assoc_max},
              {"koszul_internal_max", koszul_internal_max},
              {"koszul_external_max", koszul_external_max},
              {"generation_max_n", generation_max_n}};
}

std::vector<long> descent_class_counts_brute_force(int n) {
  std::vector<long> counts(size_t{1} << std::max(0, n - 1), 0);
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  do {
    int mask = 0;
    for (int i = 0; i + 1 < n; ++i)
      if (w[i] > w[i + 1]) mask |= 1 << i;
    counts[mask] += 1;
  } while (std::next_permutation(w.begin(), w.end()));
  return counts;
}

int descent_mask(const Composition& a) {
  int mask = 0;
  for (int d : descent_set(a).elements) mask |= 1 << (d - 1);
  return mask;
}

std::vector<std::vector<Composition>> composition_sequences(int total, int max_len) {
  std::vector<std::vector<Composition>> out;
  std::vector<Composition> cur;
  auto rec = [&](auto&& self, int remaining) -> void {
    if (remaining == 0) {
      if (!cur.empty()) out.push_back(cur);
      return;
    }
    if (static_cast<int>(cur.size()) == max_len) return;
    for (int piece = 1; piece <= remaining; ++piece) {
      for (const auto& alpha : compositions_of(piece)) {
        cur.push_back(alpha);
        self(self, remaining - piece);
        cur.pop_back();
      }
    }
  };
  rec(rec, total);
  return out;
}

namespace {

json failure_entry(const std::string& where, const std::string& what) {
  return json{{"case", where}, {"error", what}};
}

}  // namespace

CriterionResult verify_relations_and_dimensions(const VerifyBounds& b) {
  CriterionResult res{"relations and dimensions", true, {}};
  json failures = json::array();
  long checked = 0;
  for (int n = 1; n <= b.relations_max_n; ++n) {
    std::vector<long> oracle = descent_class_counts_brute_force(n);
    long total_dim = 0;
    long factorial = 1;
    for (int i = 2; i <= n; ++i) factorial *= i;
    for (const auto& alpha : compositions_of(n)) {
      HeckeModule p = build_projective({alpha});
      ++checked;
      RelationReport rel = verify_relations(p);
      if (!rel.ok)
        for (const auto& v : rel.violations) failures.push_back(failure_entry(alpha.str(), v));
      long expected = oracle[descent_mask(alpha)];
      if (p.dim != expected)
        failures.push_back(failure_entry(
            alpha.str(), "dim " + std::to_string(p.dim) + " != descent class size " +
                             std::to_string(expected)));
      total_dim += p.dim;
    }
    if (total_dim != factorial)
      failures.push_back(failure_entry("n=" + std::to_string(n),
                                       "sum of dims " + std::to_string(total_dim) + " != n!"));
  }
  res.pass = failures.empty();
  res.details = json{{"modules_checked", checked}, {"failures", failures}};
  return res;
}

CriterionResult verify_ses_suite(const VerifyBounds& b) {
  CriterionResult res{"concatenation short exact sequences", true, {}};
  json failures = json::array();
  long checked = 0;
  for (int total = 2; total <= b.ses_max_total; ++total) {
    for (int na = 1; na <= total - 1; ++na) {
      for (const auto& alpha : compositions_of(na)) {
        for (const auto& beta : compositions_of(total - na)) {
          SES s = build_ses(alpha, beta);
          SESReport r = verify_ses(s);
          ++checked;
          if (!r.ok)
            for (const auto& f : r.failures)
              failures.push_back(failure_entry(alpha.str() + "," + beta.str(), f));
          RelationReport rel = verify_relations(s.middle);
          if (!rel.ok)
            for (const auto& v : rel.violations)
              failures.push_back(
                  failure_entry("P(" + alpha.str() + "," + beta.str() + ")", v));
        }
      }
    }
  }
  res.pass = failures.empty();
  res.details = json{{"pairs_checked", checked}, {"failures", failures}};
  return res;
}

CriterionResult verify_complex_suite(const VerifyBounds& b) {
  CriterionResult res{"ribbon cochain complexes", true, {}};
  json failures = json::array();
  long checked = 0;
  for (int total = 1; total <= b.complex_max_total; ++total) {
    for (const auto& seq : composition_sequences(total, b.complex_max_length)) {
      ++checked;
      std::string name = sequence_str(seq);
      Composition full;
      for (const auto& c : seq) full = concat(full, c);
      try {
        CochainComplex cx = build_ribbon_complex(seq);
        std::vector<int> h = cohomology_dims(cx);  // checks d^2 = 0 first
        for (size_t i = 1; i < h.size(); ++i)
          if (h[i] != 0)
            failures.push_back(failure_entry(
                name, "H^" + std::to_string(i) + " has dimension " + std::to_string(h[i])));
        MultiplicityVector h0 = h0_multiplicities(cx);
        MultiplicityVector want;
        want[full] = 1;
        if (h0 != want)
          failures.push_back(failure_entry(name, "H^0 decomposes as " + multiplicity_str(h0)));
        // Euler characteristic, in two ways: alternating tableau counts and
        // the symbolic ribbon expansion
        long euler = 0;
        for (size_t i = 0; i < cx.terms.size(); ++i)
          euler += (i % 2 == 0 ? 1 : -1) * cx.terms[i].dim;
        if (euler != dim_projective(full))
          failures.push_back(failure_entry(name, "Euler characteristic mismatch"));
        NSymElem sym = euler_character_nsym(seq);
        if (!(sym == nsym_r(full)))
          failures.push_back(
              failure_entry(name, "symbolic Euler characteristic " + nsym_str(sym)));
      } catch (const std::exception& e) {
        failures.push_back(failure_entry(name, e.what()));
      }
    }
  }
  res.pass = failures.empty();
  res.details = json{{"sequences_checked", checked}, {"failures", failures}};
  return res;
}

CriterionResult verify_nsym_qsym_suite(const VerifyBounds& b) {
  CriterionResult res{"NSym/QSym symbolic layer", true, {}};
  json failures = json::array();

  for (int n = 0; n <= b.nsym_roundtrip_max; ++n) {
    for (const auto& alpha : compositions_of(n)) {
      if (!(r_to_h(h_to_r(nsym_h(alpha))) == nsym_h(alpha)))
        failures.push_back(failure_entry(alpha.str(), "H -> R -> H round trip"));
      if (!(h_to_r(r_to_h(nsym_r(alpha))) == nsym_r(alpha)))
        failures.push_back(failure_entry(alpha.str(), "R -> H -> R round trip"));
      if (!(l_to_m(m_to_l(qsym_m(alpha))) == qsym_m(alpha)))
        failures.push_back(failure_entry(alpha.str(), "M -> L -> M round trip"));
      if (!(m_to_l(l_to_m(qsym_l(alpha))) == qsym_l(alpha)))
        failures.push_back(failure_entry(alpha.str(), "L -> M -> L round trip"));
    }
  }

  for (int total = 2; total <= b.nsym_transport_max; ++total) {
    for (int na = 1; na <= total - 1; ++na) {
      for (const auto& alpha : compositions_of(na)) {
        for (const auto& beta : compositions_of(total - na)) {
          NSymElem via_r = r_to_h(r_product(nsym_r(alpha), nsym_r(beta)));
          NSymElem via_h = h_product(r_to_h(nsym_r(alpha)), r_to_h(nsym_r(beta)));
          if (!(via_r == via_h))
            failures.push_back(
                failure_entry(alpha.str() + "*" + beta.str(), "R/H product transport"));
        }
      }
    }
  }

  for (int total = 2; total <= b.lprod_indep_max; ++total) {
    for (int na = 1; na <= total - 1; ++na) {
      for (const auto& alpha : compositions_of(na)) {
        for (const auto& beta : compositions_of(total - na)) {
          if (!(l_product(qsym_l(alpha), qsym_l(beta), false) ==
                l_product(qsym_l(alpha), qsym_l(beta), true)))
            failures.push_back(failure_entry(alpha.str() + "*" + beta.str(),
                                             "L product depends on representative words"));
        }
      }
    }
  }

  {
    QSymElem prod = l_product(qsym_l(parse_composition("(2)")), qsym_l(parse_composition("(1,1)")));
    QSymElem expected{QBasis::L, {}};
    for (const char* s : {"(3,1)", "(2,2)", "(2,1,1)", "(1,3)", "(1,2,1)", "(1,1,2)"})
      expected.add_term(parse_composition(s), Rational(1));
    if (!(prod == expected))
      failures.push_back(failure_entry("L(2)*L(1,1)", "six-term expansion: " + qsym_str(prod)));
  }

  for (int n = 2; n <= b.perp_adjoint_max; ++n) {
    for (const auto& delta : compositions_of(n)) {
      for (int k = 1; k <= n - 1; ++k) {
        for (const auto& beta : compositions_of(k)) {
          NSymElem lhs = perp(qsym_l(beta), nsym_r(delta));
          for (const auto& gamma : compositions_of(n - k)) {
            Rational direct = pairing(nsym_r(delta), l_product(qsym_l(beta), qsym_l(gamma)));
            Rational adjoint = pairing(lhs, qsym_l(gamma));
            if (!(direct == adjoint)) {
              failures.push_back(failure_entry(
                  "<R" + delta.str() + ", L" + beta.str() + " L" + gamma.str() + ">",
                  "perp adjointness"));
            }
          }
        }
      }
    }
  }

  res.pass = failures.empty();
  res.details = json{{"failures", failures}};
  return res;
}

CriterionResult verify_skew_suite(const VerifyBounds& b) {
  CriterionResult res{"skew projective modules", true, {}};
  json failures = json::array();
  long checked = 0;

  for (int n = 1; n <= b.skew_max_n; ++n) {
    for (const auto& alpha : compositions_of(n)) {
      for (int k = 0; k <= n; ++k) {
        for (const auto& beta : compositions_of(k)) {
          ++checked;
          try {
            SkewProjective s = build_skew(alpha, beta);
            skew_character(s);  // throws on character-law mismatch
          } catch (const std::exception& e) {
            failures.push_back(failure_entry(alpha.str() + "/" + beta.str(), e.what()));
          }
        }
      }
      for (int k = 1; k <= n - 1; ++k) {
        try {
          MultiplicityVector via_row = expand_generalized(skew_by_row(alpha, k));
          MultiplicityVector via_quotient =
              build_skew(alpha, Composition(std::vector<int>{k})).decomposition;
          if (via_row != via_quotient)
            failures.push_back(failure_entry(
                alpha.str() + "/(" + std::to_string(k) + ")",
                "row rule " + multiplicity_str(via_row) + " != quotient " +
                    multiplicity_str(via_quotient)));
          MultiplicityVector via_col = expand_generalized(skew_by_column(alpha, k));
          MultiplicityVector via_quotient_col =
              build_skew(alpha, Composition(std::vector<int>(k, 1))).decomposition;
          if (via_col != via_quotient_col)
            failures.push_back(failure_entry(
                alpha.str() + "/(1^" + std::to_string(k) + ")",
                "column rule " + multiplicity_str(via_col) + " != quotient " +
                    multiplicity_str(via_quotient_col)));
        } catch (const std::exception& e) {
          failures.push_back(
              failure_entry(alpha.str() + ", k=" + std::to_string(k), e.what()));
        }
      }
    }
  }

  // the two worked decompositions
  {
    MultiplicityVector got = build_skew(parse_composition("(1,3,2)"),
                                        parse_composition("(3)")).decomposition;
    MultiplicityVector want{{parse_composition("(1,2)"), 2},
                            {parse_composition("(1,1,1)"), 1},
                            {parse_composition("(3)"), 2},
                            {parse_composition("(2,1)"), 1}};
    if (got != want)
      failures.push_back(failure_entry("(1,3,2)/(3)", multiplicity_str(got)));
  }
  {
    MultiplicityVector got = build_skew(parse_composition("(1,3,2)"),
                                        parse_composition("(1,1)")).decomposition;
    MultiplicityVector want{{parse_composition("(2,2)"), 1},
                            {parse_composition("(1,2,1)"), 1},
                            {parse_composition("(1,3)"), 1},
                            {parse_composition("(3,1)"), 1},
                            {parse_composition("(4)"), 1}};
    if (got != want)
      failures.push_back(failure_entry("(1,3,2)/(1,1)", multiplicity_str(got)));
  }

  res.pass = failures.empty();
  res.details = json{{"cases_checked", checked}, {"failures", failures}};
  return res;
}

namespace {

// The worked branching maps for alpha = (2,2,1): reading-word pairs
// (preimage in the named kernel summand, image in P_{(2,2,1)}) under the
// inclusion, and (element of P_{(2,2,1)}, image in the named cokernel
// summand) for the nonzero part of the projection.
struct BranchGolden {
  Composition summand;
  Word from, to;
};

std::vector<BranchGolden> golden_inject_221() {
  auto c = [](const char* s) { return parse_composition(s); };
  return {
      {c("(1,2,1)"), {4, 2, 3, 1}, {4, 5, 2, 3, 1}},
      {c("(1,2,1)"), {3, 2, 4, 1}, {3, 5, 2, 4, 1}},
      {c("(1,2,1)"), {4, 1, 3, 2}, {4, 5, 1, 3, 2}},
      {c("(1,2,1)"), {3, 1, 4, 2}, {3, 5, 1, 4, 2}},
      {c("(1,2,1)"), {2, 1, 4, 3}, {2, 5, 1, 4, 3}},
      {c("(2,1,1)"), {1, 4, 3, 2}, {1, 4, 3, 5, 2}},
      {c("(2,1,1)"), {2, 4, 3, 1}, {2, 4, 3, 5, 1}},
      {c("(2,1,1)"), {3, 4, 2, 1}, {3, 4, 2, 5, 1}},
  };
}

std::vector<BranchGolden> golden_project_221() {
  auto c = [](const char* s) { return parse_composition(s); };
  return {
      {c("(3,1)"), {2, 5, 3, 4, 1}, {2, 3, 4, 1}},
      {c("(3,1)"), {1, 5, 3, 4, 2}, {1, 3, 4, 2}},
      {c("(3,1)"), {1, 5, 2, 4, 3}, {1, 2, 4, 3}},
      {c("(2,2)"), {3, 4, 1, 5, 2}, {3, 4, 1, 2}},
      {c("(2,2)"), {2, 4, 1, 5, 3}, {2, 4, 1, 3}},
      {c("(2,2)"), {2, 3, 1, 5, 4}, {2, 3, 1, 4}},
      {c("(2,2)"), {1, 4, 2, 5, 3}, {1, 4, 2, 3}},
      {c("(2,2)"), {1, 3, 2, 5, 4}, {1, 3, 2, 4}},
  };
}

}  // namespace

CriterionResult verify_branching_suite(const VerifyBounds& b) {
  CriterionResult res{"branching sequences and one-box skew", true, {}};
  json failures = json::array();
  long checked = 0;

  for (int n = 2; n <= b.branch_max_n; ++n) {
    for (const auto& alpha : compositions_of(n)) {
      ++checked;
      try {
        BranchingSES bs = branching_ses(alpha);
        BranchReport r = verify_branching(bs);
        if (!r.ok)
          for (const auto& f : r.failures) failures.push_back(failure_entry(alpha.str(), f));

        // the one-box identity, symbolically and through the modules
        NSymElem symbolic = perp(qsym_l(parse_composition("(1)")), nsym_r(alpha));
        NSymElem from_ses{NBasis::R, {}};
        for (const auto& g : bs.kernel_index) from_ses.add_term(g, Rational(1));
        for (const auto& g : bs.cokernel_index) from_ses.add_term(g, Rational(1));
        if (!(symbolic == from_ses))
          failures.push_back(failure_entry(
              alpha.str(), "one-box identity: SES gives " + nsym_str(from_ses) +
                               ", perp gives " + nsym_str(symbolic)));
        MultiplicityVector quotient =
            build_skew(alpha, parse_composition("(1)")).decomposition;
        MultiplicityVector from_ses_mv;
        for (const auto& g : bs.kernel_index) from_ses_mv[g] += 1;
        for (const auto& g : bs.cokernel_index) from_ses_mv[g] += 1;
        if (quotient != from_ses_mv)
          failures.push_back(failure_entry(
              alpha.str(), "one-box quotient decomposes as " + multiplicity_str(quotient)));
      } catch (const std::exception& e) {
        failures.push_back(failure_entry(alpha.str(), e.what()));
      }
    }
  }

  // worked example (2,2,1): summands and the tableau-level assignments
  {
    Composition alpha = parse_composition("(2,2,1)");
    BranchingSES bs = branching_ses(alpha);
    std::vector<Composition> want_kernel{parse_composition("(1,2,1)"),
                                         parse_composition("(2,1,1)")};
    std::vector<Composition> want_cokernel{parse_composition("(3,1)"),
                                           parse_composition("(2,2)")};
    if (bs.kernel_index != want_kernel)
      failures.push_back(failure_entry("(2,2,1)", "kernel summands"));
    if (bs.cokernel_index != want_cokernel)
      failures.push_back(failure_entry("(2,2,1)", "cokernel summands"));

    HeckeModule p = build_projective({alpha});
    std::vector<int> kernel_offsets;
    int off = 0;
    for (const auto& g : bs.kernel_index) {
      kernel_offsets.push_back(off);
      off += static_cast<int>(dim_projective(g));
    }
    for (const auto& assign : golden_inject_221()) {
      int s = assign.summand == bs.kernel_index[0] ? 0 : 1;
      HeckeModule part = build_projective({bs.kernel_index[s]});
      int col = kernel_offsets[s] + part.word_index(assign.from);
      int row = p.word_index(assign.to);
      bool good = row >= 0 && col >= 0;
      if (good) {
        // the column must be exactly e_row
        good = bs.inject.get(row, col) == Rational(1);
        for (int r = 0; r < p.dim && good; ++r)
          if (r != row && !(bs.inject.get(r, col) == Rational(0))) good = false;
      }
      if (!good)
        failures.push_back(failure_entry("(2,2,1) inject", "tableau assignment mismatch"));
    }
    std::vector<int> cokernel_offsets;
    off = 0;
    for (const auto& g : bs.cokernel_index) {
      cokernel_offsets.push_back(off);
      off += static_cast<int>(dim_projective(g));
    }
    long nonzero_cols = 0;
    for (int t = 0; t < p.dim; ++t) {
      bool any = false;
      for (int r = 0; r < bs.cokernel.dim; ++r)
        if (!(bs.project.get(r, t) == Rational(0))) any = true;
      if (any) ++nonzero_cols;
    }
    if (nonzero_cols != static_cast<long>(golden_project_221().size()))
      failures.push_back(failure_entry("(2,2,1) project", "unexpected number of nonzero images"));
    for (const auto& assign : golden_project_221()) {
      int s = assign.summand == bs.cokernel_index[0] ? 0 : 1;
      HeckeModule part = build_projective({bs.cokernel_index[s]});
      int col = p.word_index(assign.from);
      int row = cokernel_offsets[s] + part.word_index(assign.to);
      bool good = row >= 0 && col >= 0 && bs.project.get(row, col) == Rational(1);
      for (int r = 0; r < bs.cokernel.dim && good; ++r)
        if (r != row && !(bs.project.get(r, col) == Rational(0))) good = false;
      if (!good)
        failures.push_back(failure_entry("(2,2,1) project", "tableau assignment mismatch"));
    }
  }

  res.pass = failures.empty();
  res.details = json{{"cases_checked", checked}, {"failures", failures}};
  return res;
}

CriterionResult verify_koszul_suite(const VerifyBounds& b) {
  CriterionResult res{"Koszul strands", true, {}};
  json failures = json::array();

  for (int total = 2; total <= b.koszul_additivity_max; ++total) {
    for (int na = 1; na <= total - 1; ++na) {
      for (const auto& alpha : compositions_of(na)) {
        for (const auto& beta : compositions_of(total - na)) {
          int lhs = transpose(near_concat(alpha, beta)).length();
          int rhs = transpose(alpha).length() + transpose(beta).length();
          if (lhs != rhs)
            failures.push_back(
                failure_entry(alpha.str() + "(.)" + beta.str(), "column count not additive"));
        }
      }
    }
  }

  for (int total = 3; total <= b.koszul_assoc_max; ++total) {
    for (int na = 1; na <= total - 2; ++na) {
      for (int nb = 1; nb <= total - na - 1; ++nb) {
        for (const auto& alpha : compositions_of(na)) {
          for (const auto& beta : compositions_of(nb)) {
            for (const auto& gamma : compositions_of(total - na - nb)) {
              HeckeModule m3 = build_projective({alpha, beta, gamma});
              HeckeModule left = build_projective({near_concat(alpha, beta), gamma});
              HeckeModule right = build_projective({alpha, near_concat(beta, gamma)});
              HeckeModule glued = build_projective({near_concat(near_concat(alpha, beta), gamma)});
              SparseMatrix route_a = phi_matrix(left, glued) * phi_matrix(m3, left);
              SparseMatrix route_b = phi_matrix(right, glued) * phi_matrix(m3, right);
              if (!(route_a == route_b))
                failures.push_back(failure_entry(
                    alpha.str() + "," + beta.str() + "," + gamma.str(),
                    "gluing is not associative as matrices"));
            }
          }
        }
      }
    }
  }

  for (int size = 1; size <= b.koszul_internal_max; ++size) {
    for (const auto& alpha : compositions_of(size)) {
      for (int big_n = 0; big_n <= b.koszul_external_max; ++big_n) {
        try {
          ribbon_schur_module(alpha, big_n);  // throws on decomposition mismatch
        } catch (const std::exception& e) {
          failures.push_back(failure_entry(
              "S^" + alpha.str() + " at N=" + std::to_string(big_n), e.what()));
        }
      }
    }
  }

  for (int na = 1; na <= b.koszul_internal_max; ++na) {
    for (int nb = 1; nb <= b.koszul_internal_max; ++nb) {
      for (const auto& alpha : compositions_of(na)) {
        for (const auto& beta : compositions_of(nb)) {
          for (int big_n = 0; big_n <= b.koszul_external_max; ++big_n) {
            StrandReport r = verify_koszul_strand(alpha, beta, big_n);
            if (!r.ok)
              for (const auto& f : r.failures)
                failures.push_back(failure_entry("strand " + alpha.str() + "|" + beta.str() +
                                                     " N=" + std::to_string(big_n),
                                                 f));
          }
        }
      }
    }
  }

  {
    StrandReport r = verify_degree_one_generation(b.generation_max_n);
    if (!r.ok)
      for (const auto& f : r.failures) failures.push_back(failure_entry("generation", f));
  }

  res.pass = failures.empty();
  res.details = json{{"failures", failures}};
  return res;
}

std::vector<CriterionResult> run_criteria(const VerifyBounds& b) {
  std::vector<CriterionResult> out;
  out.push_back(verify_relations_and_dimensions(b));
  out.push_back(verify_ses_suite(b));
  out.push_back(verify_complex_suite(b));
  out.push_back(verify_nsym_qsym_suite(b));
  out.push_back(verify_skew_suite(b));
  out.push_back(verify_branching_suite(b));
  out.push_back(verify_koszul_suite(b));
  return out;
}

json run_verify_all(const VerifyBounds& b) {
  auto build_report = [&]() {
    json criteria = json::array();
    bool all = true;
    for (const auto& r : run_criteria(b)) {
      criteria.push_back(json{{"name", r.name}, {"pass", r.pass}, {"details", r.details}});
      all = all && r.pass;
    }
    return json{{"tool", "rhc"},
                {"version", kVersion},
                {"bounds", b.to_json()},
                {"criteria", criteria},
                {"all_pass", all}};
  };
  json first = build_report();
  json second = build_report();
  bool deterministic = first.dump() == second.dump();
  first["determinism"] = json{{"pass", deterministic}};
  first["all_pass"] = first["all_pass"].get<bool>() && deterministic;
  return first;
}

}  // namespace rhc
