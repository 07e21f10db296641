#ifndef QATLAS_IDEAL_OPS_HPP
#define QATLAS_IDEAL_OPS_HPP

#include <cstdint>
#include <vector>

#include "qatlas/hilbert.hpp"
#include "qatlas/ideal.hpp"
#include "qatlas/linalg.hpp"

namespace qatlas {

inline constexpr int kDefaultSliceRetries = 8;

template <class F>
Ideal<F> ideal_sum(const Ideal<F>& a, const Ideal<F>& b);

template <class F>
Ideal<F> ideal_product(const Ideal<F>& a, const Ideal<F>& b);

/// a ∩ b by eliminating t from t·a + (1 − t)·b.
template <class F>
Ideal<F> ideal_intersect(const Ideal<F>& a, const Ideal<F>& b);

/// (a : f) = (a ∩ (f)) / f.
template <class F>
Ideal<F> ideal_quotient(const Ideal<F>& a, const Polynomial<F>& f);

/// (a : b) as the intersection of the colons by the generators of b.
template <class F>
Ideal<F> ideal_colon(const Ideal<F>& a, const Ideal<F>& b);

template <class F>
struct SaturationResult {
  Ideal<F> ideal;
  int iterations = 0;  // colon calls, including the confirming one
};

/// Iterates I ← (I : b) until stable.
template <class F>
SaturationResult<F> saturate(const Ideal<F>& a, const Ideal<F>& b);

/// (a : ℓ^∞) for a homogeneous ideal and a nonzero linear form ℓ: after a
/// coordinate change making ℓ the last variable, a grevlex basis divided by
/// the largest power of that variable.
template <class F>
Ideal<F> saturate_by_linear_form(const Ideal<F>& a, const Polynomial<F>& ell);

/// (a : m^∞) for the irrelevant ideal m, as (a : ℓ^∞) for a pseudo-random
/// linear form ℓ drawn from `seed`.
template <class F>
Ideal<F> saturate_irrelevant(const Ideal<F>& a, std::uint64_t seed = 0x5eed);

template <class F>
bool is_saturated(const Ideal<F>& a, std::uint64_t seed = 0x5eed);

/// a ∩ k[x_s, ..., x_N], as an ideal of the ring of the remaining variables.
template <class F>
Ideal<F> eliminate(const Ideal<F>& a, std::size_t s);

/// Substitutes x_i ↦ Σ_j m(i, j) x_j. Throws PreconditionError for a singular matrix.
template <class F>
Ideal<F> linear_change(const Ideal<F>& a, const Matrix<F>& m);

/// Substitutes the last variable by Σ_{j<N} coeffs[j] x_j; the result lives in
/// the ring without the last variable.
template <class F>
Ideal<F> slice_by_form(const Ideal<F>& a, const std::vector<typename F::Element>& coeffs);

template <class F>
struct SliceResult {
  Ideal<F> ideal;
  int attempts = 0;
  std::vector<typename F::Element> coeffs;
};

/// Generic hyperplane section: retries with fresh randomness until the
/// dimension drops by one and the degree is preserved. Throws
/// GenericityFailure after `retries` attempts.
template <class F>
SliceResult<F> hyperplane_slice(const Ideal<F>& a, std::uint64_t seed, int retries = kDefaultSliceRetries,
                                int budget = kDefaultDegreeBudget);

/// Basis of the degree-d piece of a homogeneous ideal, one element per
/// leading monomial of degree d.
template <class F>
std::vector<Polynomial<F>> graded_piece(const Ideal<F>& a, int d);

template <class F>
long long graded_piece_dimension(const Ideal<F>& a, int d);

/// Ring with one extra variable in front (fresh name), with the given order.
template <class F>
RingPtr<F> ring_with_front_variable(const Ring<F>& r, const MonomialOrder& order);

/// Linear form Σ coeffs[i] x_i.
template <class F>
Polynomial<F> linear_form(const RingPtr<F>& ring, const std::vector<typename F::Element>& coeffs);

/// Seed stream used for every derived random choice.
Rng make_rng(std::uint64_t seed, std::uint64_t stream = 0);

}  // namespace qatlas

#endif
