#include "qatlas/field.hpp"

#include <cctype>

namespace qatlas {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1u << 31)) throw InputError("prime modulus must be below 2^31");
  if (!is_prime(p)) throw InputError("modulus " + std::to_string(p) + " is not prime");
}

PrimeField::Element PrimeField::inv(Element a) const {
  if (a == 0) throw DivisionByZero("inverse of zero in " + spec_string());
  // extended Euclid on (a, p)
  long long t = 0, new_t = 1;
  long long r = p_, new_r = a;
  while (new_r != 0) {
    long long q = r / new_r;
    long long tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p_;
  return static_cast<Element>(t);
}

PrimeField::Element PrimeField::from_int(long long v) const {
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return static_cast<Element>(r);
}

PrimeField::Element PrimeField::from_integer(const mpz_class& v) const {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p_);
  return static_cast<Element>(r.get_ui());
}

PrimeField::Element PrimeField::from_fraction(const mpz_class& num, const mpz_class& den) const {
  Element d = from_integer(den);
  if (d == 0) throw DivisionByZero("denominator vanishes in " + spec_string());
  return div(from_integer(num), d);
}

FieldSpec FieldSpec::prime(std::uint32_t p) {
  if (!is_prime(p) || p >= (1u << 31)) throw InputError("invalid prime modulus " + std::to_string(p));
  return {Kind::kPrimeField, p};
}

FieldSpec FieldSpec::parse(const std::string& raw) {
  std::string text;
  for (char c : raw) {
    if (!std::isspace(static_cast<unsigned char>(c))) text += static_cast<char>(std::tolower(c));
  }
  if (text == "q" || text == "qq") return rationals();
  std::string digits;
  if (text.rfind("gf(", 0) == 0 && text.size() > 4 && text.back() == ')') {
    digits = text.substr(3, text.size() - 4);
  } else if (text.rfind("gf", 0) == 0) {
    digits = text.substr(2);
  } else {
    throw InputError("unknown field '" + raw + "' (expected Q or GF(p))");
  }
  if (digits.empty() || digits.size() > 10) throw InputError("bad modulus in field '" + raw + "'");
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) throw InputError("bad modulus in field '" + raw + "'");
  }
  unsigned long long p = std::stoull(digits);
  if (p >= (1ull << 31)) throw InputError("modulus too large in field '" + raw + "'");
  return prime(static_cast<std::uint32_t>(p));
}

std::string FieldSpec::to_string() const {
  return is_rational() ? "Q" : "GF(" + std::to_string(modulus) + ")";
}

}  // namespace qatlas
