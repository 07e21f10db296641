#ifndef QATLAS_POLYNOMIAL_HPP
#define QATLAS_POLYNOMIAL_HPP

#include <algorithm>
#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qatlas/errors.hpp"
#include "qatlas/field.hpp"
#include "qatlas/monomial.hpp"

namespace qatlas {

bool is_valid_variable_name(const std::string& name);

/// Coefficient field, ordered variable names and a monomial order.
template <class F>
class Ring {
 public:
  Ring(std::vector<std::string> names, F field, MonomialOrder order = MonomialOrder::grevlex())
      : names_(std::move(names)), field_(std::move(field)), order_(order) {
    if (names_.empty()) throw InputError("a ring needs at least one variable");
    if (names_.size() > kMaxVariables) {
      throw InputError("at most " + std::to_string(kMaxVariables) + " variables are supported");
    }
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (!is_valid_variable_name(names_[i])) throw InputError("invalid variable name '" + names_[i] + "'");
      for (std::size_t j = 0; j < i; ++j) {
        if (names_[i] == names_[j]) throw InputError("duplicate variable name '" + names_[i] + "'");
      }
    }
    if (order_.kind() == MonomialOrder::Kind::kBlock && order_.split() > names_.size()) {
      throw InputError("block split exceeds variable count");
    }
  }

  static std::shared_ptr<const Ring> make(std::vector<std::string> names, F field,
                                          MonomialOrder order = MonomialOrder::grevlex()) {
    return std::make_shared<const Ring>(std::move(names), std::move(field), order);
  }

  /// x0, x1, ..., x{count-1}
  static std::shared_ptr<const Ring> standard(std::size_t count, F field,
                                              MonomialOrder order = MonomialOrder::grevlex()) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < count; ++i) names.push_back("x" + std::to_string(i));
    return make(std::move(names), std::move(field), order);
  }

  std::size_t nvars() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_[i]; }
  std::optional<std::size_t> index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (names_[i] == name) return i;
    }
    return std::nullopt;
  }
  const F& field() const { return field_; }
  const MonomialOrder& order() const { return order_; }

  std::shared_ptr<const Ring> with_order(MonomialOrder order) const {
    return make(names_, field_, order);
  }

  /// Same variables and field; the order may differ.
  bool same_space(const Ring& o) const { return names_ == o.names_ && field_ == o.field_; }
  bool operator==(const Ring& o) const { return same_space(o) && order_ == o.order_; }

 private:
  std::vector<std::string> names_;
  F field_;
  MonomialOrder order_;
};

template <class F>
using RingPtr = std::shared_ptr<const Ring<F>>;

template <class F>
struct Term {
  Monomial monomial;
  typename F::Element coeff;
};

template <class F>
bool same_ring(const RingPtr<F>& a, const RingPtr<F>& b) {
  return a == b || *a == *b;
}

/// Sparse distributed polynomial: terms strictly descending in the ring's
/// order, no zero coefficients.
template <class F>
class Polynomial {
 public:
  using Element = typename F::Element;
  using TermT = Term<F>;

  explicit Polynomial(RingPtr<F> ring) : ring_(std::move(ring)) {}

  /// Arbitrary terms: sorted, combined, zeros dropped.
  Polynomial(RingPtr<F> ring, std::vector<TermT> terms) : ring_(std::move(ring)), terms_(std::move(terms)) {
    canonicalize();
  }

  static Polynomial from_sorted(RingPtr<F> ring, std::vector<TermT> terms) {
    Polynomial p(std::move(ring));
    p.terms_ = std::move(terms);
    return p;
  }
  static Polynomial constant(RingPtr<F> ring, Element c) {
    std::vector<TermT> t;
    if (!ring->field().is_zero(c)) t.push_back({Monomial(), std::move(c)});
    return from_sorted(std::move(ring), std::move(t));
  }
  static Polynomial variable(RingPtr<F> ring, std::size_t i) {
    if (i >= ring->nvars()) throw PreconditionError("variable index out of range");
    Element one = ring->field().one();
    return from_sorted(ring, {TermT{Monomial::variable(i), one}});
  }
  static Polynomial monomial(RingPtr<F> ring, const Monomial& m, Element c) {
    std::vector<TermT> t;
    if (!ring->field().is_zero(c)) t.push_back({m, std::move(c)});
    return from_sorted(std::move(ring), std::move(t));
  }

  const Ring<F>& ring() const { return *ring_; }
  const RingPtr<F>& ring_ptr() const { return ring_; }
  const F& field() const { return ring_->field(); }

  std::span<const TermT> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one()); }
  const TermT& leading_term() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().monomial; }
  const Element& leading_coefficient() const { return terms_.front().coeff; }

  Element coefficient(const Monomial& m) const {
    for (const auto& t : terms_) {
      if (t.monomial == m) return t.coeff;
    }
    return field().zero();
  }

  std::optional<int> total_degree() const {
    if (terms_.empty()) return std::nullopt;
    int d = 0;
    for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
    return d;
  }
  bool is_homogeneous() const {
    for (const auto& t : terms_) {
      if (t.monomial.degree() != terms_.front().monomial.degree()) return false;
    }
    return true;
  }
  bool involves(std::size_t var) const {
    for (const auto& t : terms_) {
      if (t.monomial[var] != 0) return true;
    }
    return false;
  }
  /// Union of the supports of all terms.
  std::uint32_t support() const {
    std::uint32_t s = 0;
    for (const auto& t : terms_) s |= t.monomial.support();
    return s;
  }

  Polynomial operator+(const Polynomial& o) const { return combine(o, false); }
  Polynomial operator-(const Polynomial& o) const { return combine(o, true); }
  Polynomial operator-() const {
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.monomial, field().neg(t.coeff)});
    return r;
  }
  Polynomial operator*(const Polynomial& o) const {
    check_ring(o);
    if (is_zero() || o.is_zero()) return Polynomial(ring_);
    const F& f = field();
    std::unordered_map<Monomial, Element, MonomialHash> acc;
    acc.reserve(terms_.size() * o.terms_.size());
    for (const auto& a : terms_) {
      for (const auto& b : o.terms_) {
        auto [it, fresh] = acc.try_emplace(a.monomial * b.monomial, f.zero());
        it->second = f.add(it->second, f.mul(a.coeff, b.coeff));
      }
    }
    std::vector<TermT> out;
    out.reserve(acc.size());
    for (auto& [m, c] : acc) {
      if (!f.is_zero(c)) out.push_back({m, std::move(c)});
    }
    return sorted(ring_, std::move(out));
  }
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial scaled(const Element& c) const {
    if (field().is_zero(c)) return Polynomial(ring_);
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.monomial, field().mul(t.coeff, c)});
    return r;
  }
  /// c * m * this; order is multiplicative so no resort.
  Polynomial times_term(const Monomial& m, const Element& c) const {
    if (field().is_zero(c)) return Polynomial(ring_);
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.monomial * m, field().mul(t.coeff, c)});
    return r;
  }
  Polynomial pow(int e) const {
    Polynomial r = constant(ring_, field().one());
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
  }
  Polynomial monic() const {
    if (is_zero() || field().is_one(leading_coefficient())) return *this;
    return scaled(field().inv(leading_coefficient()));
  }

  Polynomial derivative(std::size_t var) const {
    std::vector<TermT> out;
    for (const auto& t : terms_) {
      int e = t.monomial[var];
      if (e == 0) continue;
      Monomial m = t.monomial;
      m.set(var, e - 1);
      Element c = field().mul(t.coeff, field().from_int(e));
      if (!field().is_zero(c)) out.push_back({m, std::move(c)});
    }
    return sorted(ring_, std::move(out));
  }

  /// Same polynomial in a ring with the same variables and field but another order.
  Polynomial in_ring(const RingPtr<F>& target) const {
    if (!ring_->same_space(*target)) throw RingMismatch("in_ring: variables or field differ");
    if (ring_->order() == target->order()) return from_sorted(target, terms_);
    return sorted(target, terms_);
  }

  /// Renames variable i to target variable index_map[i]; the field must match.
  Polynomial remap(const RingPtr<F>& target, std::span<const std::size_t> index_map) const {
    if (!(ring_->field() == target->field())) throw RingMismatch("remap: fields differ");
    std::vector<TermT> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
      Monomial m;
      for (std::size_t i = 0; i < ring_->nvars(); ++i) {
        if (t.monomial[i] != 0) {
          if (index_map[i] >= target->nvars()) throw PreconditionError("remap drops an occurring variable");
          m.set(index_map[i], t.monomial[i]);
        }
      }
      out.push_back({m, t.coeff});
    }
    return Polynomial(target, std::move(out));
  }

  /// Substitutes images[i] (polynomials in the target ring) for variable i.
  Polynomial substitute(std::span<const Polynomial> images, const RingPtr<F>& target) const {
    if (images.size() != ring_->nvars()) throw PreconditionError("substitute: wrong number of images");
    std::vector<std::vector<Polynomial>> powers(images.size());
    auto power = [&](std::size_t var, int e) -> const Polynomial& {
      auto& cache = powers[var];
      if (cache.empty()) cache.push_back(constant(target, target->field().one()));
      while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * images[var]);
      return cache[e];
    };
    for (const auto& img : images) {
      if (!same_ring(img.ring_ptr(), target)) throw RingMismatch("substitute: image in wrong ring");
    }
    const F& f = target->field();
    std::unordered_map<Monomial, Element, MonomialHash> acc;
    for (const auto& t : terms_) {
      Polynomial prod = constant(target, t.coeff);
      for (std::size_t i = 0; i < ring_->nvars(); ++i) {
        if (t.monomial[i]) prod = prod * power(i, t.monomial[i]);
      }
      for (const auto& pt : prod.terms_) {
        auto [it, fresh] = acc.try_emplace(pt.monomial, f.zero());
        it->second = f.add(it->second, pt.coeff);
      }
    }
    std::vector<TermT> out;
    for (auto& [m, c] : acc) {
      if (!f.is_zero(c)) out.push_back({m, std::move(c)});
    }
    return sorted(target, std::move(out));
  }

  /// Homogeneous component of the given degree.
  Polynomial component(int degree) const {
    std::vector<TermT> out;
    for (const auto& t : terms_) {
      if (t.monomial.degree() == degree) out.push_back(t);
    }
    return from_sorted(ring_, std::move(out));
  }

  bool operator==(const Polynomial& o) const {
    if (!same_ring(ring_, o.ring_)) return false;
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      if (terms_[i].monomial != o.terms_[i].monomial || !(terms_[i].coeff == o.terms_[i].coeff)) return false;
    }
    return true;
  }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  void check_ring(const Polynomial& o) const {
    if (!same_ring(ring_, o.ring_)) throw RingMismatch();
  }

 private:
  static Polynomial sorted(RingPtr<F> ring, std::vector<TermT> terms) {
    const MonomialOrder& ord = ring->order();
    std::sort(terms.begin(), terms.end(),
              [&](const TermT& a, const TermT& b) { return ord.compare(a.monomial, b.monomial) > 0; });
    return from_sorted(std::move(ring), std::move(terms));
  }

  void canonicalize() {
    const MonomialOrder& ord = ring_->order();
    const F& f = field();
    std::sort(terms_.begin(), terms_.end(),
              [&](const TermT& a, const TermT& b) { return ord.compare(a.monomial, b.monomial) > 0; });
    std::vector<TermT> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!out.empty() && out.back().monomial == t.monomial) {
        out.back().coeff = f.add(out.back().coeff, t.coeff);
      } else {
        if (!out.empty() && f.is_zero(out.back().coeff)) out.pop_back();
        out.push_back(std::move(t));
      }
    }
    if (!out.empty() && f.is_zero(out.back().coeff)) out.pop_back();
    terms_ = std::move(out);
  }

  Polynomial combine(const Polynomial& o, bool subtract) const {
    check_ring(o);
    const MonomialOrder& ord = ring_->order();
    const F& f = field();
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
      int c;
      if (i == terms_.size()) {
        c = -1;
      } else if (j == o.terms_.size()) {
        c = 1;
      } else {
        c = ord.compare(terms_[i].monomial, o.terms_[j].monomial);
      }
      if (c > 0) {
        r.terms_.push_back(terms_[i++]);
      } else if (c < 0) {
        const auto& t = o.terms_[j++];
        r.terms_.push_back({t.monomial, subtract ? f.neg(t.coeff) : t.coeff});
      } else {
        Element s = subtract ? f.sub(terms_[i].coeff, o.terms_[j].coeff) : f.add(terms_[i].coeff, o.terms_[j].coeff);
        if (!f.is_zero(s)) r.terms_.push_back({terms_[i].monomial, std::move(s)});
        ++i;
        ++j;
      }
    }
    return r;
  }

  RingPtr<F> ring_;
  std::vector<TermT> terms_;
};

/// Exact quotient a / b; throws PreconditionError when b does not divide a.
template <class F>
Polynomial<F> exact_divide(const Polynomial<F>& a, const Polynomial<F>& b) {
  a.check_ring(b);
  if (b.is_zero()) throw DivisionByZero("exact_divide by zero polynomial");
  const F& f = a.field();
  Polynomial<F> rest = a;
  std::vector<Term<F>> quotient;
  const auto& lb = b.leading_term();
  typename F::Element inv_lc = f.inv(lb.coeff);
  while (!rest.is_zero()) {
    const auto& lt = rest.leading_term();
    if (!lb.monomial.divides(lt.monomial)) throw PreconditionError("exact_divide: divisor does not divide");
    Monomial q = lt.monomial / lb.monomial;
    typename F::Element c = f.mul(lt.coeff, inv_lc);
    quotient.push_back({q, c});
    rest = rest - b.times_term(q, c);
  }
  return Polynomial<F>::from_sorted(a.ring_ptr(), std::move(quotient));
}

}  // namespace qatlas

#endif
