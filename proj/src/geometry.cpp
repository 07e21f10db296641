#include "qatlas/geometry.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <sstream>
#include <unordered_map>

#include "qatlas/hilbert.hpp"

namespace qatlas {

namespace {

template <class F>
std::size_t poly_hash(const Polynomial<F>& p) {
  std::size_t h = p.size();
  for (const auto& t : p.terms()) {
    h = h * 1000003u ^ t.monomial.hash();
    if constexpr (F::kIsRational) {
      h = h * 31u ^ std::hash<std::string>{}(t.coeff.get_str());
    } else {
      h = h * 31u ^ t.coeff;
    }
  }
  return h;
}

/// Keeps the first copy of each monic polynomial.
template <class F>
class PolySet {
 public:
  bool insert(const Polynomial<F>& p) {
    auto& bucket = index_[poly_hash(p)];
    for (std::size_t i : bucket) {
      if (items_[i] == p) return false;
    }
    bucket.push_back(items_.size());
    items_.push_back(p);
    return true;
  }
  std::vector<Polynomial<F>> take() { return std::move(items_); }

 private:
  std::unordered_map<std::size_t, std::vector<std::size_t>> index_;
  std::vector<Polynomial<F>> items_;
};

/// All c-element subsets of {0..n-1} as bitmasks, in lexicographic order.
std::vector<std::uint32_t> subsets(std::size_t n, int c) {
  std::vector<std::uint32_t> out;
  std::vector<std::size_t> idx(c);
  for (int i = 0; i < c; ++i) idx[i] = i;
  if (c == 0 || static_cast<std::size_t>(c) > n) return out;
  for (;;) {
    std::uint32_t m = 0;
    for (auto i : idx) m |= 1u << i;
    out.push_back(m);
    int k = c - 1;
    while (k >= 0 && idx[k] == n - c + k) --k;
    if (k < 0) break;
    ++idx[k];
    for (int j = k + 1; j < c; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

bool pure_powers_cover(std::span<const Monomial> leading, std::size_t nvars) {
  std::uint32_t seen = 0;
  for (const auto& m : leading) {
    if (std::popcount(m.support()) == 1) seen |= m.support();
    if (m.is_one()) return true;
  }
  std::uint32_t all = nvars >= 32 ? ~0u : ((1u << nvars) - 1);
  return (seen & all) == all;
}

}  // namespace

template <class F>
Ideal<F> jacobian_ideal(const Ideal<F>& ideal, int codim) {
  if (codim < 1) throw PreconditionError("singular locus needs a positive codimension");
  const auto& gb = ideal.groebner();
  const auto& ring = ideal.ring_ptr();
  const std::size_t nv = ring->nvars();
  std::vector<Polynomial<F>> gens(gb.generators().begin(), gb.generators().end());
  std::vector<std::size_t> cols;
  for (std::size_t j = 0; j < nv; ++j) {
    for (const auto& g : gens) {
      if (g.involves(j)) {
        cols.push_back(j);
        break;
      }
    }
  }
  const std::size_t m = gens.size(), nc = cols.size();
  std::vector<std::vector<Polynomial<F>>> jac(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (auto j : cols) jac[i].push_back(gens[i].derivative(j));
  }

  PolySet<F> minors;
  for (const auto& g : gens) minors.insert(g.monic());
  if (static_cast<std::size_t>(codim) <= std::min(m, nc)) {
    for (std::uint32_t rmask : subsets(m, codim)) {
      std::vector<std::size_t> rows;
      for (std::size_t i = 0; i < m; ++i) {
        if (rmask >> i & 1u) rows.push_back(i);
      }
      // Laplace along the k-th chosen row: det(rows[0..k], C) from the
      // minors of size k on rows[0..k-1].
      std::unordered_map<std::uint32_t, Polynomial<F>> prev;
      prev.emplace(0u, Polynomial<F>::constant(ring, ring->field().one()));
      for (int k = 0; k < codim; ++k) {
        std::unordered_map<std::uint32_t, Polynomial<F>> next;
        for (std::uint32_t cmask : subsets(nc, k + 1)) {
          Polynomial<F> det(ring);
          int sign_pos = 0;
          for (std::size_t j = 0; j < nc; ++j) {
            if (!(cmask >> j & 1u)) continue;
            const auto& entry = jac[rows[k]][j];
            auto it = prev.find(cmask & ~(1u << j));
            // sign from the column's position among the chosen ones, row k last
            bool negative = ((k - sign_pos) & 1) != 0;
            ++sign_pos;
            if (entry.is_zero() || it == prev.end() || it->second.is_zero()) continue;
            Polynomial<F> term = entry * it->second;
            det = negative ? det - term : det + term;
          }
          if (!det.is_zero()) next.emplace(cmask, std::move(det));
        }
        prev = std::move(next);
      }
      for (auto& [mask, det] : prev) minors.insert(det.monic());
    }
  }
  auto all = minors.take();
  return Ideal<F>(ring, std::move(all));
}

template <class F>
Ideal<F> singular_locus(const Ideal<F>& ideal, int codim) {
  return saturate_irrelevant(jacobian_ideal(ideal, codim));
}

template <class F>
bool is_projectively_empty(const Ideal<F>& ideal) {
  const auto& gb = ideal.groebner();
  auto lms = gb.leading_monomials();
  return pure_powers_cover(lms, ideal.ring().nvars());
}

template <class F>
bool is_smooth(const Ideal<F>& ideal, int codim) {
  Ideal<F> jac = jacobian_ideal(ideal, codim);
  const std::size_t nv = ideal.ring().nvars();
  bool covered = false;
  BuchbergerOptions opts;
  opts.after_degree = [&](int, std::span<const Monomial> lms) {
    covered = pure_powers_cover(lms, nv);
    return !covered;
  };
  auto gb = buchberger(jac.ring_ptr(), jac.generators(), jac.ring().order(), opts);
  if (covered) return true;
  return pure_powers_cover(gb.leading_monomials(), nv);
}

template <class F>
bool is_smooth(const Ideal<F>& ideal) {
  HilbertData h = hilbert_polynomial(ideal);
  int codim = static_cast<int>(ideal.ring().nvars()) - 1 - h.dimension;
  return is_smooth(ideal, codim);
}

template <class F>
Matrix<F> quadric_matrix(const Polynomial<F>& q) {
  const F& field = q.field();
  if (field.characteristic() == 2) throw PreconditionError("quadric rank is undefined in characteristic 2");
  if (q.total_degree() != 2 || !q.is_homogeneous()) throw PreconditionError("not a quadratic form");
  const std::size_t n = q.ring().nvars();
  Matrix<F> m(field, n, n);
  auto half = field.inv(field.from_int(2));
  for (const auto& t : q.terms()) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i) {
      for (int e = 0; e < t.monomial[i]; ++e) idx.push_back(i);
    }
    if (idx[0] == idx[1]) {
      m(idx[0], idx[0]) = t.coeff;
    } else {
      m(idx[0], idx[1]) = field.mul(t.coeff, half);
      m(idx[1], idx[0]) = m(idx[0], idx[1]);
    }
  }
  return m;
}

template <class F>
QuadricInfo<F> quadric_info(const Polynomial<F>& q) {
  Matrix<F> m = quadric_matrix(q);
  int rank = static_cast<int>(m.rank());
  return {q, std::move(m), rank};
}

template <class F>
QuadricInfo<F> unique_quadric(const Ideal<F>& ideal) {
  auto piece = graded_piece(ideal, 2);
  if (piece.size() != 1) {
    throw PreconditionError("expected exactly one quadric, found dim I_2 = " + std::to_string(piece.size()));
  }
  return quadric_info(piece[0].monic());
}

template <class F>
LinearSpaceInfo is_linear_space(const Ideal<F>& ideal) {
  Ideal<F> sat = saturate_irrelevant(ideal);
  if (sat.is_zero()) return {true, 0};
  const auto& gb = sat.groebner();
  if (gb.is_unit()) return {false, 0};
  for (const auto& g : gb.generators()) {
    if (g.total_degree() != 1) return {false, 0};
  }
  return {true, static_cast<int>(gb.size())};
}

std::string LinkageReport::to_string() const {
  std::ostringstream os;
  os << "intersection=" << (intersection_ok ? "pass" : "fail") << " deg_x=" << degree_x << " deg_p=" << degree_p
     << " degree_sum=" << (degree_ok ? "pass" : "fail") << " p_linear=" << (p_linear ? "pass" : "fail")
     << " p_codim=" << p_codim;
  return os.str();
}

template <class F>
LinkageReport verify_linkage(const Ideal<F>& x, const Ideal<F>& p, const Polynomial<F>& q, const Polynomial<F>& v3) {
  LinkageReport rep;
  Ideal<F> ci(x.ring_ptr(), {q, v3});
  Ideal<F> inter = ideal_intersect(x, p);
  rep.intersection_ok = inter.equals(ci);
  rep.degree_x = hilbert_polynomial(x).degree;
  rep.degree_p = hilbert_polynomial(p).degree;
  rep.degree_ok = rep.degree_x + rep.degree_p == 6;
  LinearSpaceInfo lin = is_linear_space(p);
  rep.p_codim = lin.codim;
  rep.p_linear = lin.linear && lin.codim == 2;
  return rep;
}

template <class F>
Ideal<F> cone_over(const Ideal<F>& ideal, int s) {
  if (s < 1) throw PreconditionError("cone_over needs s >= 1");
  const Ring<F>& r = ideal.ring();
  std::vector<std::string> names = r.names();
  std::size_t next = r.nvars();
  for (int i = 0; i < s; ++i) {
    std::string name;
    do {
      name = "x" + std::to_string(next++);
    } while (std::find(names.begin(), names.end(), name) != names.end());
    names.push_back(name);
  }
  RingPtr<F> big = Ring<F>::make(std::move(names), r.field(), r.order());
  std::vector<std::size_t> same(r.nvars());
  for (std::size_t i = 0; i < r.nvars(); ++i) same[i] = i;
  std::vector<Polynomial<F>> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.remap(big, same));
  return Ideal<F>(big, std::move(gens));
}

template <class F>
std::vector<std::size_t> unused_variables(const Ideal<F>& ideal) {
  std::uint32_t used = 0;
  for (const auto& g : ideal.generators()) used |= g.support();
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < ideal.ring().nvars(); ++i) {
    if (!(used >> i & 1u)) out.push_back(i);
  }
  return out;
}

template <class F>
Ideal<F> drop_unused_variables(const Ideal<F>& ideal) {
  const Ring<F>& r = ideal.ring();
  auto unused = unused_variables(ideal);
  if (unused.empty()) return ideal;
  std::vector<std::string> names;
  std::vector<std::size_t> map(r.nvars(), std::numeric_limits<std::size_t>::max());
  for (std::size_t i = 0; i < r.nvars(); ++i) {
    if (std::find(unused.begin(), unused.end(), i) != unused.end()) continue;
    map[i] = names.size();
    names.push_back(r.name(i));
  }
  if (names.empty()) throw PreconditionError("ideal without variables");
  RingPtr<F> small = Ring<F>::make(std::move(names), r.field(), r.order());
  std::vector<Polynomial<F>> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.remap(small, map));
  return Ideal<F>(small, std::move(gens));
}

#define QATLAS_INSTANTIATE(F)                                                                             \
  template Ideal<F> jacobian_ideal(const Ideal<F>&, int);                                                 \
  template Ideal<F> singular_locus(const Ideal<F>&, int);                                                 \
  template bool is_projectively_empty(const Ideal<F>&);                                                   \
  template bool is_smooth(const Ideal<F>&, int);                                                          \
  template bool is_smooth(const Ideal<F>&);                                                               \
  template Matrix<F> quadric_matrix(const Polynomial<F>&);                                                \
  template QuadricInfo<F> quadric_info(const Polynomial<F>&);                                             \
  template QuadricInfo<F> unique_quadric(const Ideal<F>&);                                                \
  template LinearSpaceInfo is_linear_space(const Ideal<F>&);                                              \
  template LinkageReport verify_linkage(const Ideal<F>&, const Ideal<F>&, const Polynomial<F>&,           \
                                        const Polynomial<F>&);                                            \
  template Ideal<F> cone_over(const Ideal<F>&, int);                                                      \
  template std::vector<std::size_t> unused_variables(const Ideal<F>&);                                    \
  template Ideal<F> drop_unused_variables(const Ideal<F>&);

QATLAS_INSTANTIATE(PrimeField)
QATLAS_INSTANTIATE(RationalField)

}  // namespace qatlas
