#pragma once

#include <string>
#include <vector>

#include "rhc/json_io.hpp"

namespace rhc {

// Sweep bounds for the verification suites. The defaults are the acceptance
// values; every report embeds the bounds it ran with.
struct VerifyBounds {
  int relations_max_n = 7;
  int ses_max_total = 7;
  int complex_max_total = 6;
  int complex_max_length = 4;
  int nsym_roundtrip_max = 8;
  int nsym_transport_max = 7;
  int lprod_indep_max = 6;
  int perp_adjoint_max = 6;
  int skew_max_n = 6;
  int branch_max_n = 7;
  int koszul_additivity_max = 8;
  int koszul_assoc_max = 6;
  int koszul_internal_max = 3;
  int koszul_external_max = 6;
  int generation_max_n = 8;

  json to_json() const;
};

struct CriterionResult {
  std::string name;
  bool pass = false;
  json details;
};

// The seven computational criteria, in order.
CriterionResult verify_relations_and_dimensions(const VerifyBounds& b);
CriterionResult verify_ses_suite(const VerifyBounds& b);
CriterionResult verify_complex_suite(const VerifyBounds& b);
CriterionResult verify_nsym_qsym_suite(const VerifyBounds& b);
CriterionResult verify_skew_suite(const VerifyBounds& b);
CriterionResult verify_branching_suite(const VerifyBounds& b);
CriterionResult verify_koszul_suite(const VerifyBounds& b);

std::vector<CriterionResult> run_criteria(const VerifyBounds& b);

// Full report: the seven criteria plus a determinism check that rebuilds the
// report and compares serializations byte for byte.
json run_verify_all(const VerifyBounds& b);

// Helpers shared with tests.

// descent-set bitmask -> number of permutations of S_n with that descent set
std::vector<long> descent_class_counts_brute_force(int n);
int descent_mask(const Composition& a);

// All sequences of nonempty compositions with the given total size and
// length in [1, max_len].
std::vector<std::vector<Composition>> composition_sequences(int total, int max_len);

}  // namespace rhc
