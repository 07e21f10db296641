#include "qatlas/ideal_ops.hpp"

#include <algorithm>
#include <limits>

namespace qatlas {

Rng make_rng(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  return Rng(seq);
}

namespace {

template <class F>
void require_same_space(const Ideal<F>& a, const Ideal<F>& b) {
  if (!a.ring().same_space(b.ring())) throw RingMismatch("ideals live in different rings");
}

template <class F>
std::vector<Polynomial<F>> moved(const Ideal<F>& a, const RingPtr<F>& target) {
  std::vector<Polynomial<F>> out;
  for (const auto& g : a.generators()) out.push_back(g.in_ring(target));
  return out;
}

/// Generators of a reduced basis restricted to a subring, as an ideal of
/// `target`; the basis is kept when target's order is what the basis induces.
template <class F>
Ideal<F> restrict_basis(std::vector<Polynomial<F>> gens, const RingPtr<F>& target, bool basis_valid) {
  if (!basis_valid) return Ideal<F>(target, std::move(gens));
  std::sort(gens.begin(), gens.end(), [&](const Polynomial<F>& x, const Polynomial<F>& y) {
    return target->order().compare(x.leading_monomial(), y.leading_monomial()) < 0;
  });
  return Ideal<F>::from_groebner(GroebnerBasis<F>(target, std::move(gens), true));
}

std::string fresh_name(const std::vector<std::string>& names, const std::string& base) {
  std::string name = base;
  while (std::find(names.begin(), names.end(), name) != names.end()) name += "_";
  return name;
}

}  // namespace

template <class F>
RingPtr<F> ring_with_front_variable(const Ring<F>& r, const MonomialOrder& order) {
  std::vector<std::string> names{fresh_name(r.names(), "t")};
  names.insert(names.end(), r.names().begin(), r.names().end());
  return Ring<F>::make(std::move(names), r.field(), order);
}

template <class F>
Polynomial<F> linear_form(const RingPtr<F>& ring, const std::vector<typename F::Element>& coeffs) {
  std::vector<Term<F>> terms;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (!ring->field().is_zero(coeffs[i])) terms.push_back({Monomial::variable(i), coeffs[i]});
  }
  return Polynomial<F>(ring, std::move(terms));
}

template <class F>
Ideal<F> ideal_sum(const Ideal<F>& a, const Ideal<F>& b) {
  require_same_space(a, b);
  std::vector<Polynomial<F>> gens(a.generators().begin(), a.generators().end());
  for (const auto& g : b.generators()) gens.push_back(g.in_ring(a.ring_ptr()));
  return Ideal<F>(a.ring_ptr(), std::move(gens));
}

template <class F>
Ideal<F> ideal_product(const Ideal<F>& a, const Ideal<F>& b) {
  require_same_space(a, b);
  std::vector<Polynomial<F>> gens;
  for (const auto& f : a.generators()) {
    for (const auto& g : b.generators()) gens.push_back(f * g.in_ring(a.ring_ptr()));
  }
  return Ideal<F>(a.ring_ptr(), std::move(gens));
}

template <class F>
Ideal<F> ideal_intersect(const Ideal<F>& a, const Ideal<F>& b) {
  require_same_space(a, b);
  const Ring<F>& r = a.ring();
  if (a.is_zero() || b.is_zero()) return Ideal<F>(a.ring_ptr());
  RingPtr<F> big = ring_with_front_variable(r, MonomialOrder::block(1));
  std::vector<std::size_t> up(r.nvars());
  for (std::size_t i = 0; i < r.nvars(); ++i) up[i] = i + 1;
  auto t = Polynomial<F>::variable(big, 0);
  auto one_minus_t = Polynomial<F>::constant(big, r.field().one()) - t;
  std::vector<Polynomial<F>> gens;
  for (const auto& g : a.generators()) gens.push_back(t * g.remap(big, up));
  for (const auto& g : b.generators()) gens.push_back(one_minus_t * g.remap(big, up));
  auto gb = buchberger(big, std::span<const Polynomial<F>>(gens));

  std::vector<std::size_t> down(big->nvars());
  down[0] = std::numeric_limits<std::size_t>::max();
  for (std::size_t i = 1; i < big->nvars(); ++i) down[i] = i - 1;
  std::vector<Polynomial<F>> kept;
  for (const auto& g : gb.generators()) {
    if (!g.involves(0)) kept.push_back(g.remap(a.ring_ptr(), down));
  }
  return restrict_basis(std::move(kept), a.ring_ptr(), r.order() == MonomialOrder::grevlex());
}

template <class F>
Ideal<F> ideal_quotient(const Ideal<F>& a, const Polynomial<F>& f) {
  if (!f.ring().same_space(a.ring())) throw RingMismatch("quotient by a polynomial of another ring");
  if (f.is_zero()) return Ideal<F>::unit(a.ring_ptr());
  Polynomial<F> h = f.in_ring(a.ring_ptr());
  if (h.is_constant()) return a;
  Ideal<F> inter = ideal_intersect(a, Ideal<F>(a.ring_ptr(), {h}));
  std::vector<Polynomial<F>> gens;
  for (const auto& g : inter.generators()) gens.push_back(exact_divide(g, h).monic());
  return Ideal<F>(a.ring_ptr(), std::move(gens));
}

template <class F>
Ideal<F> ideal_colon(const Ideal<F>& a, const Ideal<F>& b) {
  require_same_space(a, b);
  if (b.is_zero()) return Ideal<F>::unit(a.ring_ptr());
  std::optional<Ideal<F>> acc;
  for (const auto& g : b.generators()) {
    Ideal<F> q = ideal_quotient(a, g);
    if (q.is_unit()) continue;
    acc = acc ? ideal_intersect(*acc, q) : q;
  }
  return acc ? *acc : Ideal<F>::unit(a.ring_ptr());
}

template <class F>
SaturationResult<F> saturate(const Ideal<F>& a, const Ideal<F>& b) {
  SaturationResult<F> out{a, 0};
  for (;;) {
    Ideal<F> next = ideal_colon(out.ideal, b);
    ++out.iterations;
    if (out.ideal.contains(next)) return out;
    out.ideal = std::move(next);
  }
}

template <class F>
Ideal<F> saturate_by_linear_form(const Ideal<F>& a, const Polynomial<F>& ell) {
  if (!a.is_homogeneous()) throw PreconditionError("saturation by a linear form needs a homogeneous ideal");
  const Ring<F>& r = a.ring();
  const F& field = r.field();
  const std::size_t n = r.nvars();
  if (ell.is_zero() || ell.total_degree() != 1 || !ell.is_homogeneous()) {
    throw PreconditionError("saturate_by_linear_form: not a nonzero linear form");
  }
  std::vector<typename F::Element> c(n, field.zero());
  for (const auto& t : ell.terms()) {
    for (std::size_t i = 0; i < n; ++i) {
      if (t.monomial[i]) c[i] = t.coeff;
    }
  }
  std::size_t k = n;
  while (k-- > 0 && field.is_zero(c[k])) {
  }
  // New coordinates: y_last = ℓ, the remaining x_j keep their relative order.
  std::vector<std::size_t> pos(n);
  for (std::size_t j = 0, next = 0; j < n; ++j) pos[j] = j == k ? n - 1 : next++;
  RingPtr<F> ry = r.with_order(MonomialOrder::grevlex());
  std::vector<Polynomial<F>> to_y(n, Polynomial<F>(ry));
  auto inv_ck = field.inv(c[k]);
  Polynomial<F> xk = Polynomial<F>::variable(ry, n - 1).scaled(inv_ck);
  for (std::size_t j = 0; j < n; ++j) {
    if (j == k) continue;
    to_y[j] = Polynomial<F>::variable(ry, pos[j]);
    xk -= to_y[j].scaled(field.mul(c[j], inv_ck));
  }
  to_y[k] = xk;
  std::vector<Polynomial<F>> gens;
  for (const auto& g : a.generators()) gens.push_back(g.substitute(to_y, ry));
  auto gb = buchberger(ry, std::span<const Polynomial<F>>(gens));

  std::vector<Polynomial<F>> back_images(n, Polynomial<F>(a.ring_ptr()));
  for (std::size_t j = 0; j < n; ++j) {
    if (j != k) back_images[pos[j]] = Polynomial<F>::variable(a.ring_ptr(), j);
  }
  back_images[n - 1] = ell.in_ring(a.ring_ptr());
  std::vector<Polynomial<F>> out;
  for (const auto& g : gb.generators()) {
    int e = std::numeric_limits<int>::max();
    for (const auto& t : g.terms()) e = std::min(e, t.monomial[n - 1]);
    Polynomial<F> h = g;
    if (e > 0) {
      std::vector<Term<F>> terms(g.terms().begin(), g.terms().end());
      for (auto& t : terms) t.monomial = t.monomial / Monomial::variable(n - 1, e);
      h = Polynomial<F>::from_sorted(ry, std::move(terms));
    }
    out.push_back(h.substitute(back_images, a.ring_ptr()).monic());
  }
  return Ideal<F>(a.ring_ptr(), std::move(out));
}

namespace {

template <class F>
typename F::Element wide_random(const F& field, Rng& rng) {
  if constexpr (F::kIsRational) {
    return field.from_int(static_cast<long long>(rng() % 2001) - 1000);
  } else {
    return field.random(rng);
  }
}

template <class F>
Polynomial<F> random_linear_form(const Ideal<F>& a, std::uint64_t seed) {
  Rng rng = make_rng(seed, 0x11);
  std::vector<typename F::Element> c;
  for (std::size_t i = 0; i < a.ring().nvars(); ++i) c.push_back(wide_random(a.ring().field(), rng));
  c.back() = a.ring().field().one();
  return linear_form(a.ring_ptr(), c);
}

}  // namespace

template <class F>
Ideal<F> saturate_irrelevant(const Ideal<F>& a, std::uint64_t seed) {
  if (a.is_zero()) return a;
  return saturate_by_linear_form(a, random_linear_form(a, seed));
}

template <class F>
bool is_saturated(const Ideal<F>& a, std::uint64_t seed) {
  return a.contains(saturate_irrelevant(a, seed));
}

template <class F>
Ideal<F> eliminate(const Ideal<F>& a, std::size_t s) {
  const Ring<F>& r = a.ring();
  if (s > r.nvars() || s == r.nvars()) throw PreconditionError("eliminate: variable count out of range");
  auto gb = buchberger(a.ring_ptr(), a.generators(), MonomialOrder::block(s));
  std::vector<std::string> names(r.names().begin() + static_cast<std::ptrdiff_t>(s), r.names().end());
  RingPtr<F> sub = Ring<F>::make(std::move(names), r.field(), MonomialOrder::grevlex());
  std::vector<std::size_t> down(r.nvars());
  for (std::size_t i = 0; i < r.nvars(); ++i) down[i] = i < s ? std::numeric_limits<std::size_t>::max() : i - s;
  std::vector<Polynomial<F>> kept;
  for (const auto& g : gb.generators()) {
    bool free = true;
    for (std::size_t i = 0; i < s; ++i) free = free && !g.involves(i);
    if (free) kept.push_back(g.remap(sub, down));
  }
  return restrict_basis(std::move(kept), sub, true);
}

template <class F>
Ideal<F> linear_change(const Ideal<F>& a, const Matrix<F>& m) {
  const std::size_t n = a.ring().nvars();
  if (m.rows() != n || m.cols() != n) throw PreconditionError("linear_change: matrix size does not match the ring");
  if (m.rank() != n) throw PreconditionError("linear_change: singular matrix");
  std::vector<Polynomial<F>> images;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<typename F::Element> row;
    for (std::size_t j = 0; j < n; ++j) row.push_back(m(i, j));
    images.push_back(linear_form(a.ring_ptr(), row));
  }
  std::vector<Polynomial<F>> gens;
  for (const auto& g : a.generators()) gens.push_back(g.substitute(images, a.ring_ptr()));
  return Ideal<F>(a.ring_ptr(), std::move(gens));
}

template <class F>
Ideal<F> slice_by_form(const Ideal<F>& a, const std::vector<typename F::Element>& coeffs) {
  const Ring<F>& r = a.ring();
  const std::size_t n = r.nvars();
  if (n < 2) throw PreconditionError("hyperplane slice needs at least two variables");
  if (coeffs.size() != n - 1) throw PreconditionError("slice_by_form: need one coefficient per remaining variable");
  std::vector<std::string> names(r.names().begin(), r.names().end() - 1);
  RingPtr<F> sub = Ring<F>::make(std::move(names), r.field(), r.order());
  std::vector<Polynomial<F>> images;
  for (std::size_t j = 0; j + 1 < n; ++j) images.push_back(Polynomial<F>::variable(sub, j));
  images.push_back(linear_form(sub, coeffs));
  std::vector<Polynomial<F>> gens;
  for (const auto& g : a.generators()) gens.push_back(g.substitute(images, sub));
  for (auto& g : gens) {
    if (!g.is_zero()) g = g.monic();
  }
  return Ideal<F>(sub, std::move(gens));
}

template <class F>
SliceResult<F> hyperplane_slice(const Ideal<F>& a, std::uint64_t seed, int retries, int budget) {
  if (!a.is_homogeneous()) throw PreconditionError("hyperplane slice needs a homogeneous ideal");
  if (a.ring().nvars() < 2) throw PreconditionError("hyperplane slice needs at least two variables");
  HilbertData before = hilbert_polynomial(a, budget);
  if (before.dimension < 1) throw PreconditionError("hyperplane slice of a scheme of dimension < 1");
  for (int attempt = 1; attempt <= retries; ++attempt) {
    Rng rng = make_rng(seed, static_cast<std::uint64_t>(attempt));
    std::vector<typename F::Element> coeffs;
    for (std::size_t j = 0; j + 1 < a.ring().nvars(); ++j) coeffs.push_back(a.ring().field().random(rng));
    Ideal<F> cut = slice_by_form(a, coeffs);
    if (cut.is_unit()) continue;
    HilbertData after = hilbert_polynomial(cut, budget);
    if (after.dimension == before.dimension - 1 && after.degree == before.degree) {
      return {std::move(cut), attempt, std::move(coeffs)};
    }
  }
  throw GenericityFailure("no generic hyperplane found in " + std::to_string(retries) +
                          " attempts; rerun over a larger field");
}

template <class F>
std::vector<Polynomial<F>> graded_piece(const Ideal<F>& a, int d) {
  if (!a.is_homogeneous()) throw PreconditionError("graded piece of an inhomogeneous ideal");
  const auto& gb = a.groebner();
  auto lms = gb.leading_monomials();
  std::vector<Polynomial<F>> out;
  for (const auto& u : monomials_of_degree(a.ring().nvars(), d)) {
    bool in_lt = std::any_of(lms.begin(), lms.end(), [&](const Monomial& m) { return m.divides(u); });
    if (!in_lt) continue;
    auto p = Polynomial<F>::monomial(a.ring_ptr(), u, a.ring().field().one());
    out.push_back(p - gb.normal_form(p));
  }
  return out;
}

template <class F>
long long graded_piece_dimension(const Ideal<F>& a, int d) {
  auto hf = hilbert_function(a, d);
  long long n = static_cast<long long>(a.ring().nvars());
  return binomial(d + n - 1, n - 1) - hf.hf_values[d];
}

#define QATLAS_INSTANTIATE(F)                                                                         \
  template RingPtr<F> ring_with_front_variable(const Ring<F>&, const MonomialOrder&);                 \
  template Polynomial<F> linear_form(const RingPtr<F>&, const std::vector<F::Element>&);              \
  template Ideal<F> ideal_sum(const Ideal<F>&, const Ideal<F>&);                                      \
  template Ideal<F> ideal_product(const Ideal<F>&, const Ideal<F>&);                                  \
  template Ideal<F> ideal_intersect(const Ideal<F>&, const Ideal<F>&);                                \
  template Ideal<F> ideal_quotient(const Ideal<F>&, const Polynomial<F>&);                            \
  template Ideal<F> ideal_colon(const Ideal<F>&, const Ideal<F>&);                                    \
  template SaturationResult<F> saturate(const Ideal<F>&, const Ideal<F>&);                            \
  template Ideal<F> saturate_by_linear_form(const Ideal<F>&, const Polynomial<F>&);                   \
  template Ideal<F> saturate_irrelevant(const Ideal<F>&, std::uint64_t);                              \
  template bool is_saturated(const Ideal<F>&, std::uint64_t);                                         \
  template Ideal<F> eliminate(const Ideal<F>&, std::size_t);                                          \
  template Ideal<F> linear_change(const Ideal<F>&, const Matrix<F>&);                                 \
  template Ideal<F> slice_by_form(const Ideal<F>&, const std::vector<F::Element>&);                   \
  template SliceResult<F> hyperplane_slice(const Ideal<F>&, std::uint64_t, int, int);                 \
  template std::vector<Polynomial<F>> graded_piece(const Ideal<F>&, int);                             \
  template long long graded_piece_dimension(const Ideal<F>&, int);

QATLAS_INSTANTIATE(PrimeField)
QATLAS_INSTANTIATE(RationalField)

}  // namespace qatlas
