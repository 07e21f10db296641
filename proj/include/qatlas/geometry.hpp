#ifndef QATLAS_GEOMETRY_HPP
#define QATLAS_GEOMETRY_HPP

#include <optional>
#include <string>
#include <vector>

#include "qatlas/ideal.hpp"
#include "qatlas/ideal_ops.hpp"
#include "qatlas/linalg.hpp"

namespace qatlas {

/// I + (c×c minors of the Jacobian of I's reduced basis), not saturated.
template <class F>
Ideal<F> jacobian_ideal(const Ideal<F>& ideal, int codim);

/// The Jacobian ideal, saturated with respect to the irrelevant ideal.
template <class F>
Ideal<F> singular_locus(const Ideal<F>& ideal, int codim);

/// True iff the projective scheme of the ideal is empty (HF eventually 0).
template <class F>
bool is_projectively_empty(const Ideal<F>& ideal);

/// Emptiness of the singular locus. The basis computation stops as soon as
/// every variable has a pure power among the leading monomials.
template <class F>
bool is_smooth(const Ideal<F>& ideal, int codim);

/// Uses the codimension from the Hilbert polynomial.
template <class F>
bool is_smooth(const Ideal<F>& ideal);

template <class F>
struct QuadricInfo {
  Polynomial<F> form;
  Matrix<F> sym_matrix;
  int rank = 0;
};

/// Symmetric matrix of a quadratic form (char != 2).
template <class F>
Matrix<F> quadric_matrix(const Polynomial<F>& q);

template <class F>
QuadricInfo<F> quadric_info(const Polynomial<F>& q);

/// The spanning element of I_2; throws PreconditionError unless dim I_2 = 1
/// or the characteristic is 2.
template <class F>
QuadricInfo<F> unique_quadric(const Ideal<F>& ideal);

struct LinearSpaceInfo {
  bool linear = false;
  int codim = 0;
};

/// Whether the saturation is generated by linear forms, and how many.
template <class F>
LinearSpaceInfo is_linear_space(const Ideal<F>& ideal);

struct LinkageReport {
  bool intersection_ok = false;  // I_X ∩ I_P = (q, v3)
  long long degree_x = 0;
  long long degree_p = 0;
  bool degree_ok = false;  // deg X + deg P = 6
  bool p_linear = false;   // P a linear space of codim 2
  int p_codim = 0;
  bool passed() const { return intersection_ok && degree_ok && p_linear; }
  std::string to_string() const;
};

template <class F>
LinkageReport verify_linkage(const Ideal<F>& x, const Ideal<F>& p, const Polynomial<F>& q, const Polynomial<F>& v3);

/// The same generators in a ring with s new variables appended.
template <class F>
Ideal<F> cone_over(const Ideal<F>& ideal, int s);

/// Variables occurring in no generator (vertex directions visible from the generators).
template <class F>
std::vector<std::size_t> unused_variables(const Ideal<F>& ideal);

/// The ideal restricted to the variables that occur in its generators.
template <class F>
Ideal<F> drop_unused_variables(const Ideal<F>& ideal);

}  // namespace qatlas

#endif
