#pragma once

#include <optional>
#include <string>
#include <vector>

#include "geometry.hpp"
#include "identities.hpp"

namespace tric {

enum class SweepMode { thm61, thm62 };
enum class Verdict { verified, not_certified };

// Shape grid of the verified sweep: y_1 = 1000, y_{k+1} = floor(51 y_k / 50),
// x_k = ceil(y_k / 40), b_k = 1000 / y_k, a_{kl} = l / (2 x_k), k = 1..119,
// l = 0..x_k.
struct SweepLevel {
  int k = 0;
  long y = 0;
  long x = 0;
  Rat b;
};

struct SweepGrid {
  std::vector<SweepLevel> levels;
  long total_points() const;
  Rat a_of(int k, int l) const;  // a_{kl}
};

SweepGrid thm61_grid();

// Exact spacing invariants of the grid used by the continuation argument:
// (b_k - b_{k+1}) / b_{k+1} <= 1/50 and (a_{k,l+1} - a_{k,l}) / b_k <= 1/50.
bool grid_spacing_ok(const SweepGrid& grid);

// The exact rational lambda such that certifying lambda B - A positive
// definite proves the sweep inequality at this grid point.
Rat lambda_threshold(int j, const TriangleShape& shape, SweepMode mode, int n);

Verdict verify_point(int j, int n, const TriangleShape& shape, SweepMode mode);

struct SweepConfig {
  SweepMode mode = SweepMode::thm61;
  std::vector<int> js = {1, 2, 3, 4};  // thm62 admits only 1..3
  int n = 20;
  // slices; empty means "all" (use with care: the full sweep is long-running)
  std::vector<int> ks;
  std::vector<int> ls;
  int parallelism = 1;
  double point_timeout_seconds = 0;  // 0 = none
  std::string checkpoint_path;       // resume by grid key when set
};

struct PointResult {
  int k = 0, l = 0, j = 0, n = 0;
  Rat a, b, lambda;
  Verdict verdict = Verdict::not_certified;
  double seconds = 0;
  std::string implication;
};

struct VerificationReport {
  int schema_version = 1;
  SweepConfig config;
  std::vector<PointResult> points;
  long verified_count = 0;
  long not_certified_count = 0;
  double total_seconds = 0;
  bool all_verified() const { return not_certified_count == 0; }
};

VerificationReport run_sweep(const SweepConfig& config);

// Bookkeeping over completed slices: which ingredients of the full proof
// chain have been re-verified locally and which are inherited.
struct ProofChainStatus {
  bool grid_invariants_ok = false;
  long thm61_points_done = 0;
  long thm61_points_total = 0;
  long thm62_points_done = 0;
  long thm62_points_total = 0;
  bool identity_suite_passed = false;
  std::string summary;
};

ProofChainStatus proof_chain_status(const std::vector<VerificationReport>& reports,
                                    const std::vector<IdentityCase>& identity_results);

}  // namespace tric
