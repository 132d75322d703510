#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rat.hpp"

namespace tric {

// Outcome of one machine-checked lemma: every displayed equality certified
// by exact expansion (or Hessian reduction for the quadratic-form identity),
// every displayed nonnegativity claim certified structurally and scanned on
// a rational grid.
struct IdentityCase {
  std::string lemma_id;
  std::string method;  // expand | hessian_reduce_expand | exact_random_points
  std::string status;  // passed | failed | skipped
  std::string detail;
  double seconds = 0;
};

// Supported ids: "14.1" .. "14.11", "5.1", "5.2", "3.2", "3.3".
const std::vector<std::string>& supported_lemmas();

IdentityCase check_lemma(const std::string& lemma_id, uint64_t seed = 20240911);

std::vector<IdentityCase> check_all_lemmas(uint64_t seed = 20240911);

// Sufficient positive-semidefiniteness test for the symmetric 3x3 form
// A1 v1^2 + A2 v2^2 + A3 v3^2 + 2 B1 v2 v3 + 2 B2 v3 v1 + 2 B3 v1 v2:
// true iff the four hypotheses hold exactly (B1 B2 B3 >= 0, A3 > 0,
// A1 B1^2 + A2 B2^2 - 2 B1 B2 B3 > 0, and the determinant condition > 0).
bool psd3_criterion(const Rat& A1, const Rat& A2, const Rat& A3, const Rat& B1,
                    const Rat& B2, const Rat& B3);

// Pinned FNV-1a checksum of the embedded big-coefficient manifest; load
// fails loudly on any transcription drift.
uint64_t quartic_manifest_checksum();

}  // namespace tric
