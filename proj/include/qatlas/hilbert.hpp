#ifndef QATLAS_HILBERT_HPP
#define QATLAS_HILBERT_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "qatlas/ideal.hpp"

namespace qatlas {

inline constexpr int kDefaultDegreeBudget = 12;

/// Hilbert function and polynomial of S/I.
struct HilbertData {
  std::size_t nvars = 0;
  std::vector<long long> hf_values;  // HF(0), HF(1), ...
  /// HP(t) = sum_k hp_coeffs[k] t^k; empty when only the function was requested.
  std::vector<mpq_class> hp_coeffs;
  /// Smallest t0 with HF(t) = HP(t) for all t >= t0 (-1 when not computed).
  int stabilization_degree = -1;
  /// Projective dimension; -1 for the empty scheme.
  int dimension = -1;
  long long degree = 0;
  /// K-polynomial N(z) with sum HF(t) z^t = N(z) / (1-z)^nvars.
  std::vector<long long> numerator;

  long long hf(int t) const;  // from the numerator, any t >= 0
  mpq_class hp(long long t) const;
  std::string hp_to_string() const;
};

/// K-polynomial of S/M for the monomial ideal M generated by gens (pivot recursion).
std::vector<long long> hilbert_numerator(std::vector<Monomial> gens);

/// Number of degree-t monomials of nvars variables outside the monomial ideal with K-polynomial `numerator`.
long long hf_from_numerator(std::span<const long long> numerator, std::size_t nvars, int t);

long long binomial(long long n, long long k);

/// HF(0..max_degree) of S/I by counting standard monomials of a complete basis.
template <class F>
HilbertData hilbert_function(const Ideal<F>& ideal, int max_degree);

/// Hilbert polynomial by Lagrange interpolation on dim+1 values past the
/// stabilization degree, checked on two further degrees. Throws
/// BudgetExceeded when stabilization + 2 exceeds the budget.
template <class F>
HilbertData hilbert_polynomial(const Ideal<F>& ideal, int budget = kDefaultDegreeBudget);

/// Same, from leading monomials of a complete basis.
HilbertData hilbert_from_leading(std::span<const Monomial> leading, std::size_t nvars, int max_degree, bool with_polynomial,
                                 int budget = kDefaultDegreeBudget);

}  // namespace qatlas

#endif
