#include "qatlas/monomial.hpp"

#include "qatlas/errors.hpp"

namespace qatlas {

Monomial::Monomial(std::span<const int> exponents) {
  if (exponents.size() > kMaxVariables) throw PreconditionError("too many variables");
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] < 0 || exponents[i] > kMaxExponent) throw std::overflow_error("exponent out of range");
    exp_[i] = static_cast<std::uint8_t>(exponents[i]);
  }
  refresh();
}

Monomial Monomial::variable(std::size_t i, int power) {
  Monomial m;
  m.set(i, power);
  return m;
}

void Monomial::set(std::size_t i, int e) {
  if (i >= kMaxVariables) throw PreconditionError("variable index out of range");
  if (e < 0 || e > kMaxExponent) throw std::overflow_error("exponent out of range");
  exp_[i] = static_cast<std::uint8_t>(e);
  refresh();
}

void Monomial::refresh() {
  int d = 0;
  std::uint32_t s = 0;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    d += exp_[i];
    if (exp_[i]) s |= (1u << i);
  }
  degree_ = static_cast<std::uint16_t>(d);
  support_ = s;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r;
  bool overflow = false;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    int s = exp_[i] + other.exp_[i];
    overflow |= s > kMaxExponent;
    r.exp_[i] = static_cast<std::uint8_t>(s);
  }
  if (overflow) throw std::overflow_error("monomial exponent overflow");
  r.degree_ = static_cast<std::uint16_t>(degree_ + other.degree_);
  r.support_ = support_ | other.support_;
  return r;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVariables; ++i) r.exp_[i] = static_cast<std::uint8_t>(exp_[i] - other.exp_[i]);
  r.refresh();
  return r;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVariables; ++i) r.exp_[i] = exp_[i] > other.exp_[i] ? exp_[i] : other.exp_[i];
  r.refresh();
  return r;
}

Monomial Monomial::gcd(const Monomial& other) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVariables; ++i) r.exp_[i] = exp_[i] < other.exp_[i] ? exp_[i] : other.exp_[i];
  r.refresh();
  return r;
}

std::size_t Monomial::hash() const {
  // FNV-1a over the exponent bytes
  std::size_t h = 1469598103934665603ull;
  for (auto b : exp_) {
    h ^= b;
    h *= 1099511628211ull;
  }
  return h;
}

std::vector<int> Monomial::exponents(std::size_t nvars) const {
  std::vector<int> out(nvars);
  for (std::size_t i = 0; i < nvars; ++i) out[i] = exp_[i];
  return out;
}

std::string MonomialOrder::to_string() const {
  switch (kind_) {
    case Kind::kGrevLex:
      return "grevlex";
    case Kind::kLex:
      return "lex";
    case Kind::kBlock:
      return "block(" + std::to_string(split_) + ")";
  }
  return "?";
}

namespace {
void enumerate(std::size_t nvars, std::size_t var, int remaining, std::vector<int>& exps,
               std::vector<Monomial>& out) {
  if (var + 1 == nvars) {
    exps[var] = remaining;
    out.emplace_back(exps);
    exps[var] = 0;
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    exps[var] = e;
    enumerate(nvars, var + 1, remaining - e, exps, out);
  }
  exps[var] = 0;
}
}  // namespace

std::vector<Monomial> monomials_of_degree(std::size_t nvars, int degree) {
  std::vector<Monomial> out;
  if (nvars == 0 || degree < 0) {
    if (nvars == 0 && degree == 0) out.emplace_back();
    return out;
  }
  std::vector<int> exps(nvars, 0);
  enumerate(nvars, 0, degree, exps, out);
  return out;
}

}  // namespace qatlas
