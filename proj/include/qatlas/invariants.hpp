#ifndef QATLAS_INVARIANTS_HPP
#define QATLAS_INVARIANTS_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qatlas/hilbert.hpp"
#include "qatlas/ideal.hpp"
#include "qatlas/ideal_ops.hpp"

namespace qatlas {

struct InvariantOptions {
  std::uint64_t seed = 1;
  int budget = kDefaultDegreeBudget;
  int slice_retries = kDefaultSliceRetries;
};

/// Numerical invariants of the projective scheme of a saturated ideal. Values
/// h^0(O_X(m)) are read as HF(S/I, m).
struct VarietyInvariants {
  int n = 0;  // dimension
  int N = 0;  // ambient projective dimension
  long long d = 0;
  long long delta = 0;  // n + d - HF(1)
  long long g = 0;      // 1 - HP(0) of a curve section
  int codim = 0;
  bool nondegenerate = false;  // no linear forms in I
  std::map<int, long long> h0_I;  // dim I_m for m = 1, 2, 3
  std::vector<long long> hf;      // HF(S/I, 0..3)
  std::string hilbert_polynomial;
  /// section_hf[k-1] = HF(0..3) of X_k, the k-dimensional linear section (X_n = X).
  std::vector<std::vector<long long>> section_hf;
  std::vector<int> slice_attempts;  // one entry per slice, X_{n-1} first
  std::uint64_t seed = 0;
  bool input_saturated = true;
  std::vector<std::string> warnings;

  /// "n=6 N=9 d=5 delta=1 g=1"
  std::string summary() const;
  bool operator==(const VarietyInvariants&) const = default;
};

/// Saturates when needed (recording a warning) and returns the ideal used.
template <class F>
Ideal<F> ensure_saturated(const Ideal<F>& ideal, std::vector<std::string>& warnings);

template <class F>
VarietyInvariants compute_invariants(const Ideal<F>& ideal, const InvariantOptions& options = {});

struct BoundRow {
  std::string name;  // "alpha", "beta", "diamond", "diamond'"
  int k = 0;         // section dimension, or 0 for the ideal-level rows
  long long lhs = 0;
  long long rhs = 0;
  bool holds = false;  // lhs <= rhs for alpha/beta, lhs >= rhs for the diamond rows
};

struct CohomologyReport {
  bool applicable = false;
  std::string reason;  // set when not applicable
  std::vector<BoundRow> rows;
  bool passed() const;
  std::string to_string() const;
};

/// Upper bounds on HF(X_k, 2), HF(X_k, 3) in terms of the curve section, and
/// the lower bounds dim I_2 >= 1, dim I_3 >= n + 5. Only for d = 5, Δ = 2, g = 2.
CohomologyReport check_cohomology_bounds(const VarietyInvariants& inv);

template <class F>
CohomologyReport check_cohomology_bounds(const Ideal<F>& ideal, const InvariantOptions& options = {}) {
  return check_cohomology_bounds(compute_invariants(ideal, options));
}

}  // namespace qatlas

#endif
