#pragma once

// The end-to-end verification suite: one function per acceptance criterion.
// Shared by the acceptance test binary and `uqkit verify-suite`.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "uqkit/quiverrep.hpp"
#include "uqkit/sweep.hpp"

namespace uqkit {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::vector<std::string> details;
  double seconds = 0;
};

struct SuiteOptions {
  Exec exec = Exec::Parallel;
  /// Shell command running the CLI contract script; empty means not run.
  std::string cli_contract_command;
};

constexpr int kCriterionCount = 11;

CriterionResult run_criterion(int id, const SuiteOptions& opts);
std::vector<CriterionResult> run_suite(const SuiteOptions& opts);

/// One-line summary, e.g. `[PASS] 3 Hopf axioms ...`, optionally with timing.
std::string summary_line(const CriterionResult& r, bool with_time = false);

// Fixtures shared with the unit tests.

/// Random element of Q(q): small Laurent numerator over a small polynomial
/// denominator, rational coefficients.
QScalar random_qscalar(std::mt19937_64& rng, bool allow_zero = true);

/// The lambda values the classification is exercised on: 0, 1, q, q^3, inf.
std::vector<Lambda> sample_lambdas();

/// A two-dimensional quantum-plane module: X = [[0,1],[0,0]], Y = diag(1, q^2).
QuantumPlaneModule sample_quantum_plane();

/// Three one-dimensional vertices with every arrow the identity; fails
/// condition (i) at the top vertex.
QuiverRep condition_i_violator(int l = 0);

/// Every constructed representation with support length <= max_n: Schurian
/// ones for |l| <= max_l and the sample lambdas, and quantum-plane ones.
std::vector<QuiverRep> constructed_reps(int max_l, int max_n);

}  // namespace uqkit
