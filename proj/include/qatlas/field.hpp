#ifndef QATLAS_FIELD_HPP
#define QATLAS_FIELD_HPP

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

#include "qatlas/errors.hpp"

namespace qatlas {

using Rng = std::mt19937_64;

bool is_prime(std::uint64_t n);

/// Z/pZ for a prime p < 2^31. Elements are kept reduced in [0, p).
class PrimeField {
 public:
  using Element = std::uint32_t;
  static constexpr bool kIsRational = false;

  explicit PrimeField(std::uint32_t p);

  std::uint32_t modulus() const { return p_; }
  std::uint32_t characteristic() const { return p_; }

  Element zero() const { return 0; }
  Element one() const { return 1; }
  bool is_zero(Element a) const { return a == 0; }
  bool is_one(Element a) const { return a == 1; }

  Element add(Element a, Element b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Element sub(Element a, Element b) const { return a >= b ? a - b : a + p_ - b; }
  Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
  Element mul(Element a, Element b) const {
    return static_cast<Element>((static_cast<std::uint64_t>(a) * b) % p_);
  }
  Element inv(Element a) const;
  Element div(Element a, Element b) const { return mul(a, inv(b)); }
  /// a - b*c, the inner step of every reduction.
  Element sub_mul(Element a, Element b, Element c) const { return sub(a, mul(b, c)); }

  Element from_int(long long v) const;
  Element from_integer(const mpz_class& v) const;
  /// Throws DivisionByZero when the denominator vanishes mod p.
  Element from_fraction(const mpz_class& num, const mpz_class& den) const;

  /// Symmetric representative in (-p/2, p/2].
  long long to_signed(Element a) const {
    return a > p_ / 2 ? static_cast<long long>(a) - p_ : static_cast<long long>(a);
  }
  std::string to_string(Element a) const { return std::to_string(to_signed(a)); }
  bool is_negative(Element a) const { return a > p_ / 2; }

  Element random(Rng& rng) const { return static_cast<Element>(rng() % p_); }

  std::string spec_string() const { return "GF(" + std::to_string(p_) + ")"; }
  bool operator==(const PrimeField& o) const { return p_ == o.p_; }

 private:
  std::uint32_t p_;
};

/// The rationals with GMP numerators and denominators (always canonical).
class RationalField {
 public:
  using Element = mpq_class;
  static constexpr bool kIsRational = true;

  std::uint32_t characteristic() const { return 0; }

  Element zero() const { return Element(0); }
  Element one() const { return Element(1); }
  bool is_zero(const Element& a) const { return sgn(a) == 0; }
  bool is_one(const Element& a) const { return a == 1; }

  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element neg(const Element& a) const { return -a; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element inv(const Element& a) const {
    if (sgn(a) == 0) throw DivisionByZero("inverse of zero");
    return 1 / a;
  }
  Element div(const Element& a, const Element& b) const { return a * inv(b); }
  Element sub_mul(const Element& a, const Element& b, const Element& c) const { return a - b * c; }

  Element from_int(long long v) const { return Element(static_cast<long>(v)); }
  Element from_integer(const mpz_class& v) const { return Element(v); }
  Element from_fraction(const mpz_class& num, const mpz_class& den) const {
    if (den == 0) throw DivisionByZero("zero denominator in literal");
    Element q(num, den);
    q.canonicalize();
    return q;
  }

  std::string to_string(const Element& a) const { return a.get_str(); }
  bool is_negative(const Element& a) const { return sgn(a) < 0; }

  /// Small-height integers in [-9, 9]; large enough for genericity at desk scale.
  Element random(Rng& rng) const { return Element(static_cast<long>(rng() % 19) - 9); }

  std::string spec_string() const { return "Q"; }
  bool operator==(const RationalField&) const { return true; }
};

/// Runtime description of a coefficient field, as it appears in files and flags.
struct FieldSpec {
  enum class Kind { kRationals, kPrimeField };
  Kind kind = Kind::kPrimeField;
  std::uint32_t modulus = 32003;

  static FieldSpec rationals() { return {Kind::kRationals, 0}; }
  static FieldSpec prime(std::uint32_t p);
  /// Accepts "Q", "QQ", "q", "GF(p)", "gf<p>", "gfp".
  static FieldSpec parse(const std::string& text);

  bool is_rational() const { return kind == Kind::kRationals; }
  std::string to_string() const;
  bool operator==(const FieldSpec&) const = default;
};

inline constexpr std::uint32_t kDefaultPrime = 32003;

}  // namespace qatlas

#endif
