#ifndef QATLAS_GROEBNER_HPP
#define QATLAS_GROEBNER_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qatlas/polynomial.hpp"

namespace qatlas {

/// Counters for the benchmark harness.
struct GroebnerStats {
  std::size_t pairs_generated = 0;
  std::size_t pairs_pruned = 0;  // product + chain criteria
  std::size_t reductions = 0;    // S-polynomials and inputs reduced
  std::size_t zero_reductions = 0;
  std::size_t reduction_steps = 0;

  std::string to_string() const;
};

struct BuchbergerOptions {
  /// Stop after all pairs of sugar degree <= max_degree are processed. Only
  /// meaningful for homogeneous input, where the result is then a truncated
  /// basis that is exact up to that degree. Off by default.
  std::optional<int> max_degree;
  /// Called when every pair up to `degree` has been processed, with the
  /// current leading monomials. Returning false stops the computation early.
  std::function<bool(int degree, std::span<const Monomial> leading)> after_degree;
};

template <class F>
class GroebnerBasis {
 public:
  GroebnerBasis(RingPtr<F> ring, std::vector<Polynomial<F>> generators, bool reduced, GroebnerStats stats = {},
                std::optional<int> truncated_at = std::nullopt)
      : ring_(std::move(ring)),
        generators_(std::move(generators)),
        reduced_(reduced),
        stats_(stats),
        truncated_at_(truncated_at) {}

  const RingPtr<F>& ring_ptr() const { return ring_; }
  const Ring<F>& ring() const { return *ring_; }
  const MonomialOrder& order() const { return ring_->order(); }
  std::span<const Polynomial<F>> generators() const { return generators_; }
  std::size_t size() const { return generators_.size(); }
  bool is_reduced() const { return reduced_; }
  /// Set when the run stopped before completion; the basis is then exact only in degrees <= the value.
  std::optional<int> truncated_at() const { return truncated_at_; }
  bool is_complete() const { return !truncated_at_.has_value(); }
  const GroebnerStats& stats() const { return stats_; }

  std::vector<Monomial> leading_monomials() const;
  bool is_unit() const { return generators_.size() == 1 && generators_[0].is_constant(); }

  /// Remainder of multivariate division; zero iff p lies in the ideal (complete bases).
  Polynomial<F> normal_form(const Polynomial<F>& p) const;
  bool contains(const Polynomial<F>& p) const { return normal_form(p).is_zero(); }

 private:
  RingPtr<F> ring_;
  std::vector<Polynomial<F>> generators_;
  bool reduced_;
  GroebnerStats stats_;
  std::optional<int> truncated_at_;
};

/// Reduced Groebner basis of the ideal generated by gens, with respect to
/// `order` (the generators are moved into ring->with_order(order)). Pairs are
/// processed by smallest sugar degree, then smallest lcm; Buchberger's
/// product and chain criteria (Gebauer-Moeller form) prune pairs.
template <class F>
GroebnerBasis<F> buchberger(const RingPtr<F>& ring, std::span<const Polynomial<F>> gens, const MonomialOrder& order,
                            const BuchbergerOptions& options = {});

template <class F>
GroebnerBasis<F> buchberger(const RingPtr<F>& ring, std::span<const Polynomial<F>> gens) {
  return buchberger(ring, gens, ring->order());
}

/// Throws RingMismatch unless p lives in gb's ring with gb's order.
template <class F>
Polynomial<F> normal_form(const Polynomial<F>& p, const GroebnerBasis<F>& gb) {
  return gb.normal_form(p);
}

template <class F>
Polynomial<F> s_polynomial(const Polynomial<F>& a, const Polynomial<F>& b);

/// Exhaustive Buchberger criterion: every S-polynomial reduces to zero.
template <class F>
bool satisfies_buchberger_criterion(const GroebnerBasis<F>& gb);

/// The reduced-basis conditions: monic, and no term of any generator divisible
/// by another generator's leading monomial.
template <class F>
bool is_reduced_basis(const GroebnerBasis<F>& gb);

}  // namespace qatlas

#endif
