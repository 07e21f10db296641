#include "qatlas/groebner.hpp"

#include <algorithm>
#include <sstream>

namespace qatlas {

std::string GroebnerStats::to_string() const {
  std::ostringstream os;
  os << "pairs_generated=" << pairs_generated << " pairs_pruned=" << pairs_pruned << " reductions=" << reductions
     << " zero_reductions=" << zero_reductions << " reduction_steps=" << reduction_steps;
  return os.str();
}

namespace {

template <class F>
using Terms = std::vector<Term<F>>;

struct Reducer {
  Monomial lm;
  std::size_t index;
};

/// out = p[start+1..] - c*m*g[1..]. The leading terms cancel by construction (g monic).
template <class F>
void merge_sub(Terms<F>& out, Terms<F>& p, std::size_t start, const typename F::Element& c, const Monomial& m,
               std::span<const Term<F>> g, const MonomialOrder& ord, const F& f) {
  out.clear();
  out.reserve(p.size() - start + g.size());
  std::size_t i = start + 1, j = 1;
  while (i < p.size() && j < g.size()) {
    Monomial gm = g[j].monomial * m;
    int cmp = ord.compare(p[i].monomial, gm);
    if (cmp > 0) {
      out.push_back(std::move(p[i++]));
    } else if (cmp < 0) {
      out.push_back({gm, f.neg(f.mul(c, g[j].coeff))});
      ++j;
    } else {
      auto v = f.sub_mul(p[i].coeff, c, g[j].coeff);
      if (!f.is_zero(v)) out.push_back({gm, std::move(v)});
      ++i;
      ++j;
    }
  }
  for (; i < p.size(); ++i) out.push_back(std::move(p[i]));
  for (; j < g.size(); ++j) out.push_back({g[j].monomial * m, f.neg(f.mul(c, g[j].coeff))});
}

/// Full reduction of p modulo the monic polynomials basis(r.index) for r in reducers.
template <class F, class Basis>
Terms<F> reduce_full(Terms<F> p, const std::vector<Reducer>& reducers, const Basis& basis, const MonomialOrder& ord,
                     const F& f, std::size_t* steps) {
  Terms<F> rem;
  Terms<F> buf;
  std::size_t head = 0;
  while (head < p.size()) {
    const Monomial& lt = p[head].monomial;
    const Reducer* hit = nullptr;
    for (const auto& r : reducers) {
      if (r.lm.divides(lt)) {
        hit = &r;
        break;
      }
    }
    if (!hit) {
      rem.push_back(std::move(p[head]));
      ++head;
      continue;
    }
    std::span<const Term<F>> g = basis(hit->index);
    Monomial q = lt / hit->lm;
    typename F::Element c = p[head].coeff;
    merge_sub<F>(buf, p, head, c, q, g, ord, f);
    std::swap(p, buf);
    head = 0;
    if (steps) ++*steps;
  }
  return rem;
}

template <class F>
void make_monic(Terms<F>& p, const F& f) {
  if (p.empty() || f.is_one(p[0].coeff)) return;
  auto inv = f.inv(p[0].coeff);
  for (auto& t : p) t.coeff = f.mul(t.coeff, inv);
}

struct Pair {
  int sugar;
  Monomial lcm;
  std::size_t i;  // basis index, or input index when j == kInput
  std::size_t j;
  static constexpr std::size_t kInput = static_cast<std::size_t>(-1);
};

template <class F>
class Engine {
 public:
  Engine(const RingPtr<F>& ring, const BuchbergerOptions& opts) : ring_(ring), ord_(ring->order()), f_(ring->field()), opts_(opts) {}

  GroebnerBasis<F> run(std::vector<Terms<F>> inputs) {
    // Heap ordered so the smallest (sugar, lcm) pair is on top.
    for (std::size_t k = 0; k < inputs.size(); ++k) {
      if (inputs[k].empty()) continue;
      int deg = 0;
      for (const auto& t : inputs[k]) deg = std::max(deg, t.monomial.degree());
      input_sugar_.push_back(deg);
      pairs_.push_back({deg, inputs[k][0].monomial, input_sugar_.size() - 1, Pair::kInput});
      inputs_.push_back(std::move(inputs[k]));
    }
    std::make_heap(pairs_.begin(), pairs_.end(), heap_cmp());

    std::optional<int> truncated;
    int current_level = -1;
    while (!pairs_.empty()) {
      int next = pairs_.front().sugar;
      if (next > current_level) {
        if (current_level >= 0 && !level_done(current_level)) {
          truncated = current_level;
          break;
        }
        if (opts_.max_degree && next > *opts_.max_degree) {
          truncated = *opts_.max_degree;
          break;
        }
        current_level = next;
      }
      std::pop_heap(pairs_.begin(), pairs_.end(), heap_cmp());
      Pair pr = pairs_.back();
      pairs_.pop_back();
      process(pr);
      if (unit_) break;
    }
    if (!truncated && !unit_ && current_level >= 0) {
      // final level hook is informational only
      if (opts_.after_degree) opts_.after_degree(current_level, active_lms());
    }
    return finish(truncated);
  }

 private:
  struct HeapCmp {
    const MonomialOrder* ord;
    bool operator()(const Pair& a, const Pair& b) const {
      // returns true if a has lower priority than b
      if (a.sugar != b.sugar) return a.sugar > b.sugar;
      int c = ord->compare(a.lcm, b.lcm);
      if (c != 0) return c > 0;
      if (a.j != b.j) return a.j > b.j;
      return a.i > b.i;
    }
  };
  HeapCmp heap_cmp() const { return HeapCmp{&ord_}; }

  bool level_done(int level) {
    if (!opts_.after_degree) return true;
    return opts_.after_degree(level, active_lms());
  }

  std::vector<Monomial> active_lms() const {
    std::vector<Monomial> out;
    for (const auto& r : reducers_) out.push_back(r.lm);
    return out;
  }

  void process(const Pair& pr) {
    Terms<F> s;
    int sugar = pr.sugar;
    if (pr.j == Pair::kInput) {
      s = inputs_[pr.i];
    } else {
      s = spoly(pr.i, pr.j);
    }
    ++stats_.reductions;
    auto get = [this](std::size_t k) { return std::span<const Term<F>>(basis_[k]); };
    Terms<F> r = reduce_full<F>(std::move(s), reducers_, get, ord_, f_, &stats_.reduction_steps);
    if (r.empty()) {
      ++stats_.zero_reductions;
      return;
    }
    make_monic<F>(r, f_);
    add(std::move(r), sugar);
  }

  Terms<F> spoly(std::size_t a, std::size_t b) {
    const Terms<F>& ga = basis_[a];
    const Terms<F>& gb = basis_[b];
    Monomial l = ga[0].monomial.lcm(gb[0].monomial);
    Monomial ma = l / ga[0].monomial;
    Monomial mb = l / gb[0].monomial;
    // ma*ga - mb*gb, both monic; leading terms cancel
    Terms<F> shifted;
    shifted.reserve(ga.size());
    for (const auto& t : ga) shifted.push_back({t.monomial * ma, t.coeff});
    Terms<F> out;
    merge_sub<F>(out, shifted, 0, f_.one(), mb, gb, ord_, f_);
    return out;
  }

  void add(Terms<F> h, int sugar) {
    if (h[0].monomial.is_one()) unit_ = true;
    std::size_t hn = basis_.size();
    Monomial lh = h[0].monomial;
    basis_.push_back(std::move(h));
    sugar_.push_back(sugar);
    active_.push_back(true);

    // Gebauer-Moeller update.
    std::vector<Pair> fresh;
    for (std::size_t g = 0; g < hn; ++g) {
      if (!active_[g]) continue;
      Monomial l = basis_[g][0].monomial.lcm(lh);
      int sg = std::max(sugar_[g] + l.degree() - basis_[g][0].monomial.degree(), sugar + l.degree() - lh.degree());
      fresh.push_back({sg, l, g, hn});
      ++stats_.pairs_generated;
    }
    std::vector<Pair> kept;
    std::vector<bool> drop(fresh.size(), false);
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      const Pair& p = fresh[a];
      bool coprime = basis_[p.i][0].monomial.coprime(lh);
      if (!coprime) {
        bool dominated = false;
        // pairs still in C (after a) or already kept in D
        for (std::size_t b = a + 1; b < fresh.size() && !dominated; ++b) {
          if (!drop[b] && fresh[b].lcm.divides(p.lcm)) dominated = true;
        }
        for (const auto& d : kept) {
          if (dominated) break;
          if (d.lcm.divides(p.lcm)) dominated = true;
        }
        if (dominated) {
          drop[a] = true;
          ++stats_.pairs_pruned;
          continue;
        }
      }
      kept.push_back(p);
    }
    // Old pairs made redundant by h.
    std::size_t before = pairs_.size();
    pairs_.erase(std::remove_if(pairs_.begin(), pairs_.end(),
                                [&](const Pair& p) {
                                  if (p.j == Pair::kInput) return false;
                                  if (!lh.divides(p.lcm)) return false;
                                  Monomial li = basis_[p.i][0].monomial.lcm(lh);
                                  Monomial lj = basis_[p.j][0].monomial.lcm(lh);
                                  return li != p.lcm && lj != p.lcm;
                                }),
                 pairs_.end());
    stats_.pairs_pruned += before - pairs_.size();
    for (const auto& p : kept) {
      if (basis_[p.i][0].monomial.coprime(lh)) {
        ++stats_.pairs_pruned;
        continue;
      }
      pairs_.push_back(p);
    }
    std::make_heap(pairs_.begin(), pairs_.end(), heap_cmp());

    // Retire elements whose leading monomial is now redundant.
    for (std::size_t g = 0; g < hn; ++g) {
      if (active_[g] && lh.divides(basis_[g][0].monomial)) active_[g] = false;
    }
    reducers_.clear();
    for (std::size_t g = 0; g <= hn; ++g) {
      if (active_[g]) reducers_.push_back({basis_[g][0].monomial, g});
    }
  }

  GroebnerBasis<F> finish(std::optional<int> truncated) {
    std::vector<Terms<F>> minimal;
    if (unit_) {
      minimal.push_back({Term<F>{Monomial(), f_.one()}});
    } else {
      for (std::size_t g = 0; g < basis_.size(); ++g) {
        if (active_[g]) minimal.push_back(basis_[g]);
      }
    }
    std::sort(minimal.begin(), minimal.end(),
              [&](const Terms<F>& a, const Terms<F>& b) { return ord_.compare(a[0].monomial, b[0].monomial) < 0; });
    // Interreduce tails against smaller leading monomials only.
    std::vector<Reducer> red;
    std::vector<Terms<F>> done;
    for (auto& g : minimal) {
      Terms<F> tail(std::make_move_iterator(g.begin() + 1), std::make_move_iterator(g.end()));
      auto get = [&done](std::size_t k) { return std::span<const Term<F>>(done[k]); };
      Terms<F> rt = reduce_full<F>(std::move(tail), red, get, ord_, f_, nullptr);
      Terms<F> full;
      full.reserve(rt.size() + 1);
      full.push_back(std::move(g[0]));
      for (auto& t : rt) full.push_back(std::move(t));
      red.push_back({full[0].monomial, done.size()});
      done.push_back(std::move(full));
    }
    std::vector<Polynomial<F>> gens;
    gens.reserve(done.size());
    for (auto& t : done) gens.push_back(Polynomial<F>::from_sorted(ring_, std::move(t)));
    return GroebnerBasis<F>(ring_, std::move(gens), true, stats_, truncated);
  }

  RingPtr<F> ring_;
  const MonomialOrder& ord_;
  const F& f_;
  const BuchbergerOptions& opts_;
  std::vector<Terms<F>> inputs_;
  std::vector<int> input_sugar_;
  std::vector<Terms<F>> basis_;
  std::vector<int> sugar_;
  std::vector<bool> active_;
  std::vector<Reducer> reducers_;
  std::vector<Pair> pairs_;
  GroebnerStats stats_;
  bool unit_ = false;
};

}  // namespace

template <class F>
std::vector<Monomial> GroebnerBasis<F>::leading_monomials() const {
  std::vector<Monomial> out;
  out.reserve(generators_.size());
  for (const auto& g : generators_) out.push_back(g.leading_monomial());
  return out;
}

template <class F>
Polynomial<F> GroebnerBasis<F>::normal_form(const Polynomial<F>& p) const {
  if (!(p.ring() == *ring_)) throw RingMismatch("normal_form: polynomial ring or order differs from the basis");
  std::vector<Reducer> red;
  red.reserve(generators_.size());
  for (std::size_t k = 0; k < generators_.size(); ++k) red.push_back({generators_[k].leading_monomial(), k});
  auto get = [this](std::size_t k) { return generators_[k].terms(); };
  Terms<F> terms(p.terms().begin(), p.terms().end());
  Terms<F> r = reduce_full<F>(std::move(terms), red, get, ring_->order(), ring_->field(), nullptr);
  return Polynomial<F>::from_sorted(ring_, std::move(r));
}

template <class F>
GroebnerBasis<F> buchberger(const RingPtr<F>& ring, std::span<const Polynomial<F>> gens, const MonomialOrder& order,
                            const BuchbergerOptions& options) {
  RingPtr<F> target = ring->order() == order ? ring : ring->with_order(order);
  std::vector<Terms<F>> inputs;
  inputs.reserve(gens.size());
  for (const auto& g : gens) {
    if (!g.ring().same_space(*ring)) throw RingMismatch("buchberger: generator from a different ring");
    if (g.is_zero()) continue;
    Polynomial<F> h = g.in_ring(target);
    inputs.emplace_back(h.terms().begin(), h.terms().end());
  }
  Engine<F> engine(target, options);
  return engine.run(std::move(inputs));
}

template <class F>
Polynomial<F> s_polynomial(const Polynomial<F>& a, const Polynomial<F>& b) {
  a.check_ring(b);
  const F& f = a.field();
  Monomial l = a.leading_monomial().lcm(b.leading_monomial());
  Polynomial<F> left = a.times_term(l / a.leading_monomial(), f.inv(a.leading_coefficient()));
  Polynomial<F> right = b.times_term(l / b.leading_monomial(), f.inv(b.leading_coefficient()));
  return left - right;
}

template <class F>
bool satisfies_buchberger_criterion(const GroebnerBasis<F>& gb) {
  auto gens = gb.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (!gb.normal_form(s_polynomial(gens[i], gens[j])).is_zero()) return false;
    }
  }
  return true;
}

template <class F>
bool is_reduced_basis(const GroebnerBasis<F>& gb) {
  auto gens = gb.generators();
  const F& f = gb.ring().field();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].is_zero() || !f.is_one(gens[i].leading_coefficient())) return false;
    for (std::size_t j = 0; j < gens.size(); ++j) {
      if (i == j) continue;
      for (const auto& t : gens[i].terms()) {
        if (gens[j].leading_monomial().divides(t.monomial)) return false;
      }
    }
  }
  return true;
}

#define QATLAS_INSTANTIATE(F)                                                                                   \
  template class GroebnerBasis<F>;                                                                              \
  template GroebnerBasis<F> buchberger(const RingPtr<F>&, std::span<const Polynomial<F>>, const MonomialOrder&, \
                                       const BuchbergerOptions&);                                               \
  template Polynomial<F> s_polynomial(const Polynomial<F>&, const Polynomial<F>&);                             \
  template bool satisfies_buchberger_criterion(const GroebnerBasis<F>&);                                       \
  template bool is_reduced_basis(const GroebnerBasis<F>&);

QATLAS_INSTANTIATE(PrimeField)
QATLAS_INSTANTIATE(RationalField)

}  // namespace qatlas
