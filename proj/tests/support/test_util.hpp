#ifndef QATLAS_TESTS_TEST_UTIL_HPP
#define QATLAS_TESTS_TEST_UTIL_HPP

#include <string>
#include <vector>

#include "qatlas/constructors.hpp"
#include "qatlas/ideal.hpp"
#include "qatlas/poly_io.hpp"

namespace testutil {

using qatlas::Ideal;
using qatlas::Polynomial;
using qatlas::PrimeField;
using qatlas::RationalField;
using qatlas::RingPtr;

inline PrimeField gf() { return PrimeField(qatlas::kDefaultPrime); }

template <class F = PrimeField>
RingPtr<F> ring(std::size_t nvars, const F& field = F(qatlas::kDefaultPrime)) {
  return qatlas::Ring<F>::standard(nvars, field);
}

inline RingPtr<RationalField> qring(std::size_t nvars) { return qatlas::Ring<RationalField>::standard(nvars, RationalField()); }

template <class F>
Polynomial<F> P(const RingPtr<F>& r, const std::string& text) {
  return qatlas::parse_polynomial(text, r);
}

template <class F>
Ideal<F> I(const RingPtr<F>& r, std::initializer_list<const char*> gens) {
  std::vector<Polynomial<F>> ps;
  for (const char* g : gens) ps.push_back(P(r, g));
  return Ideal<F>(r, std::move(ps));
}

inline Ideal<PrimeField> build_gf(const qatlas::ConstructionRecipe& r) {
  return qatlas::build_in(r, PrimeField(r.field.modulus));
}

}  // namespace testutil

#endif
