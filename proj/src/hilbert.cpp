#include "qatlas/hilbert.hpp"

#include <algorithm>
#include <sstream>

namespace qatlas {

namespace {

using ZPoly = std::vector<long long>;

mpq_class q_of(long long v) { return mpq_class(static_cast<long>(v)); }

void add_into(ZPoly& acc, const ZPoly& p, int shift, long long sign = 1) {
  if (acc.size() < p.size() + shift) acc.resize(p.size() + shift, 0);
  for (std::size_t i = 0; i < p.size(); ++i) acc[i + shift] += sign * p[i];
}

void trim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
  std::vector<Monomial> out;
  for (const auto& g : gens) {
    bool redundant = false;
    for (const auto& h : out) {
      if (h.divides(g)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) out.push_back(g);
  }
  return out;
}

ZPoly numerator_rec(std::vector<Monomial> gens) {
  if (gens.empty()) return {1};
  // pairwise coprime generators: product of (1 - z^deg)
  std::uint32_t seen = 0;
  bool coprime = true;
  for (const auto& g : gens) {
    if (seen & g.support()) {
      coprime = false;
      break;
    }
    seen |= g.support();
  }
  if (coprime) {
    ZPoly acc{1};
    for (const auto& g : gens) {
      ZPoly next(acc.size() + g.degree(), 0);
      for (std::size_t i = 0; i < acc.size(); ++i) {
        next[i] += acc[i];
        next[i + g.degree()] -= acc[i];
      }
      acc = std::move(next);
    }
    trim(acc);
    return acc;
  }
  std::array<int, kMaxVariables> count{};
  for (const auto& g : gens) {
    for (std::size_t v = 0; v < kMaxVariables; ++v) count[v] += g[v] > 0;
  }
  std::size_t var = 0;
  for (std::size_t v = 1; v < kMaxVariables; ++v) {
    if (count[v] > count[var]) var = v;
  }
  std::vector<int> exps;
  for (const auto& g : gens) {
    if (g[var] > 0) exps.push_back(g[var]);
  }
  std::sort(exps.begin(), exps.end());
  int e = exps[exps.size() / 2];
  if (e == exps.back() && exps.front() < e) e = exps.front();
  Monomial pivot = Monomial::variable(var, e);

  std::vector<Monomial> with_pivot = gens;
  with_pivot.push_back(pivot);
  std::vector<Monomial> quotient;
  quotient.reserve(gens.size());
  for (const auto& g : gens) quotient.push_back(g / g.gcd(pivot));

  ZPoly out = numerator_rec(minimalize(std::move(with_pivot)));
  add_into(out, numerator_rec(minimalize(std::move(quotient))), e);
  trim(out);
  return out;
}

}  // namespace

long long binomial(long long n, long long k) {
  if (k < 0 || n < k) return 0;
  if (k > n - k) k = n - k;
  __int128 r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return static_cast<long long>(r);
}

std::vector<long long> hilbert_numerator(std::vector<Monomial> gens) {
  for (const auto& g : gens) {
    if (g.is_one()) return {};  // unit ideal: S/M = 0
  }
  return numerator_rec(minimalize(std::move(gens)));
}

long long hf_from_numerator(std::span<const long long> numerator, std::size_t nvars, int t) {
  long long s = 0;
  for (std::size_t i = 0; i < numerator.size() && static_cast<int>(i) <= t; ++i) {
    s += numerator[i] * binomial(t - static_cast<long long>(i) + static_cast<long long>(nvars) - 1,
                                 static_cast<long long>(nvars) - 1);
  }
  return s;
}

long long HilbertData::hf(int t) const { return hf_from_numerator(numerator, nvars, t); }

mpq_class HilbertData::hp(long long t) const {
  mpq_class acc = 0;
  mpq_class power = 1;
  for (const auto& c : hp_coeffs) {
    acc += c * power;
    power *= q_of(t);
  }
  return acc;
}

std::string HilbertData::hp_to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = hp_coeffs.size(); k-- > 0;) {
    const mpq_class& c = hp_coeffs[k];
    if (sgn(c) == 0) continue;
    if (!first) os << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) os << "-";
    mpq_class mag = abs(c);
    bool unit = mag == 1;
    if (k == 0 || !unit) os << mag.get_str();
    if (k > 0) os << (unit ? "" : "*") << "t" << (k > 1 ? "^" + std::to_string(k) : "");
    first = false;
  }
  return first ? "0" : os.str();
}

HilbertData hilbert_from_leading(std::span<const Monomial> leading, std::size_t nvars, int max_degree,
                                 bool with_polynomial, int budget) {
  HilbertData h;
  h.nvars = nvars;
  h.numerator = hilbert_numerator(std::vector<Monomial>(leading.begin(), leading.end()));
  if (!with_polynomial) {
    for (int t = 0; t <= max_degree; ++t) h.hf_values.push_back(h.hf(t));
    return h;
  }
  if (h.numerator.empty()) throw PreconditionError("the unit ideal has no Hilbert polynomial");

  // Strip factors (1 - z) to read off dimension and the h-vector.
  ZPoly q = h.numerator;
  int k = 0;
  for (;;) {
    long long at_one = 0;
    for (auto c : q) at_one += c;
    if (at_one != 0 || k == static_cast<int>(nvars)) break;
    // synthetic division by (1 - z): q = (1 - z) r  =>  r_i = q_0 + ... + q_i
    ZPoly r(q.size() - 1);
    long long run = 0;
    for (std::size_t i = 0; i + 1 < q.size(); ++i) {
      run += q[i];
      r[i] = run;
    }
    q = std::move(r);
    trim(q);
    ++k;
  }
  int krull = static_cast<int>(nvars) - k;
  h.dimension = krull - 1;
  long long qdeg = static_cast<long long>(q.size()) - 1;
  if (h.dimension < 0) {
    h.stabilization_degree = static_cast<int>(qdeg + 1);
    h.degree = 0;
  } else {
    h.stabilization_degree = static_cast<int>(std::max<long long>(0, qdeg - h.dimension));
    for (auto c : q) h.degree += c;
  }
  int s = h.stabilization_degree;
  if (s + 2 > budget) {
    throw BudgetExceeded("confirming stabilization at degree " + std::to_string(s) + " needs degree " +
                         std::to_string(s + 2) + ", beyond budget " + std::to_string(budget));
  }
  int top = std::max(max_degree, s + std::max(h.dimension, 0) + 2);
  for (int t = 0; t <= top; ++t) h.hf_values.push_back(h.hf(t));

  // Lagrange interpolation on t = s .. s + dim.
  int npts = h.dimension + 1;
  h.hp_coeffs.assign(std::max(npts, 1), mpq_class(0));
  for (int a = 0; a < npts; ++a) {
    long long xa = s + a;
    // basis polynomial prod_{b != a} (t - xb) / (xa - xb)
    std::vector<mpq_class> basis{mpq_class(1)};
    mpq_class denom = 1;
    for (int b = 0; b < npts; ++b) {
      if (b == a) continue;
      long long xb = s + b;
      std::vector<mpq_class> next(basis.size() + 1, mpq_class(0));
      for (std::size_t i = 0; i < basis.size(); ++i) {
        next[i + 1] += basis[i];
        next[i] -= basis[i] * q_of(xb);
      }
      basis = std::move(next);
      denom *= q_of(xa - xb);
    }
    mpq_class scale = q_of(h.hf_values[xa]) / denom;
    for (std::size_t i = 0; i < basis.size(); ++i) h.hp_coeffs[i] += basis[i] * scale;
  }
  while (h.hp_coeffs.size() > 1 && sgn(h.hp_coeffs.back()) == 0) h.hp_coeffs.pop_back();
  for (int t = s + npts; t <= s + npts + 1; ++t) {
    if (h.hp(t) != q_of(h.hf_values[t])) throw PreconditionError("Hilbert polynomial check failed past stabilization");
  }
  if (h.dimension >= 0) {
    // leading coefficient * dim! must reproduce the degree
    mpq_class lead = h.hp_coeffs.back();
    for (int i = 2; i <= h.dimension; ++i) lead *= i;
    if (lead != q_of(h.degree)) throw PreconditionError("degree mismatch between h-vector and Hilbert polynomial");
  }
  return h;
}

template <class F>
HilbertData hilbert_function(const Ideal<F>& ideal, int max_degree) {
  const auto& gb = ideal.groebner();
  auto lms = gb.leading_monomials();
  return hilbert_from_leading(lms, ideal.ring().nvars(), max_degree, false);
}

template <class F>
HilbertData hilbert_polynomial(const Ideal<F>& ideal, int budget) {
  if (!ideal.is_homogeneous()) throw PreconditionError("Hilbert polynomial requires a homogeneous ideal");
  const auto& gb = ideal.groebner();
  auto lms = gb.leading_monomials();
  return hilbert_from_leading(lms, ideal.ring().nvars(), 0, true, budget);
}

template HilbertData hilbert_function(const Ideal<PrimeField>&, int);
template HilbertData hilbert_function(const Ideal<RationalField>&, int);
template HilbertData hilbert_polynomial(const Ideal<PrimeField>&, int);
template HilbertData hilbert_polynomial(const Ideal<RationalField>&, int);

}  // namespace qatlas
