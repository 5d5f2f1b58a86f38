#pragma once

#include "mikado/biclosed.hpp"
#include "mikado/braid.hpp"
#include "mikado/coxeter.hpp"
#include "mikado/hecke.hpp"

#include <map>
#include <string>
#include <vector>

namespace mikado {

// Outcome of one positivity check. `theorem` separates statements whose
// failure is a defect (nonzero exit) from conjectural evidence, which is
// only ever reported. The coefficient table is already sorted for output.
struct Report {
  std::string statement;
  bool theorem = true;
  std::string system;
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<std::pair<Element, Laurent>> table;
  std::vector<std::string> violations;
  bool holds = true;
  std::string certificate;

  void violation(std::string msg) {
    violations.push_back(std::move(msg));
    holds = false;
  }
};

// Statement ids accepted by check_statement and the sweep configs.
// "threeparam": C'_w on the A-twisted basis has nonnegative coefficients,
//   diagonal v^(ell_A(w)), support below w, and v=1 values independent of A.
// "inverse": T_x^-1 T_y (left) / T_x T_y^-1 (right) on the C basis has
//   nonnegative coefficients of pure parity ell(z) mod 2.
// "doubletwist": coefficients of C'_w T_{y,A} on the A-twisted basis match
//   the expansion of C'_w on the (N(y) Δ yAy^-1)-twisted basis at x y^-1,
//   and are nonnegative.
// "evidence": T_{x,A} on the C basis has nonnegative coefficients
//   (conjectural; never fails a run).
// "costandard": C'_w on the all-reflections twisted basis has diagonal
//   v^(-ell(w)) and nonnegative off-diagonal coefficients with all
//   exponents <= -ell(x) - 1.
const std::vector<std::string>& statement_ids();
bool is_theorem_statement(const std::string& id);

Report check_threeparam(const HeckeAlgebra& alg, const Element& w,
                        const BiclosedSet& A,
                        std::map<Element, HeckeElt>* twisted_cache = nullptr);
Report check_inverse(const HeckeAlgebra& alg, const Element& x,
                     const Element& y, Side side);
Report check_doubletwist(const HeckeAlgebra& alg, const Element& w,
                         const Element& y, const BiclosedSet& A);
Report check_evidence(const HeckeAlgebra& alg, const Element& x,
                      const BiclosedSet& A,
                      std::map<Element, HeckeElt>* twisted_cache = nullptr);
Report check_costandard(const HeckeAlgebra& alg, const Element& w,
                        std::map<Element, HeckeElt>* twisted_cache = nullptr);

// For half-space and explicit sets, runs the ball checker to the given
// radius and throws ConfigError when closure fails; a-priori-biclosed sets
// pass through. Returns the certificate line for reports.
std::string certify_biclosed(const CoxeterSystem& sys, const BiclosedSet& A,
                             int radius);

struct SweepSpec {
  int radius = 2;
  bool family_inversions = true;   // every N(y), y in the ball
  bool family_complements = false; // and their complements
  std::vector<BiclosedSet> extra_sets;
  std::vector<std::string> statements;
  std::map<std::string, int> limits;  // per-statement case cap, even stride
  int jobs = 1;
};

struct SweepCounts {
  int cases = 0;
  int violated = 0;
};

struct SweepResult {
  std::vector<Report> reports;
  std::vector<std::pair<std::string, SweepCounts>> summary;  // statement order
  bool theorem_violation = false;
};

// Enumerates cases in a fixed order (statements as listed; sets: inversion
// family in ball order, complements, extras; elements in ball order) and
// runs them, optionally on several threads. Violations never abort the
// sweep; they are collected in the reports.
SweepResult run_sweep(const HeckeAlgebra& alg, const SweepSpec& spec);

}  // namespace mikado
