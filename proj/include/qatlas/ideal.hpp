#ifndef QATLAS_IDEAL_HPP
#define QATLAS_IDEAL_HPP

#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <vector>

#include "qatlas/groebner.hpp"

namespace qatlas {

/// Finitely generated ideal with a lazily computed Groebner basis in the
/// ring's order. Copies share the cache.
template <class F>
class Ideal {
 public:
  explicit Ideal(RingPtr<F> ring) : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {}

  Ideal(RingPtr<F> ring, std::vector<Polynomial<F>> generators)
      : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
    for (auto& g : generators) {
      if (!same_ring(g.ring_ptr(), ring_)) {
        if (!g.ring().same_space(*ring_)) throw RingMismatch("ideal generator from a different ring");
        g = g.in_ring(ring_);
      }
      if (!g.is_zero()) generators_.push_back(std::move(g));
    }
  }

  /// The ideal generated by a basis computed in the ring's own order.
  static Ideal from_groebner(GroebnerBasis<F> gb) {
    std::vector<Polynomial<F>> gens(gb.generators().begin(), gb.generators().end());
    Ideal out(gb.ring_ptr(), std::move(gens));
    if (gb.is_complete()) {
      std::call_once(out.cache_->once, [&] { out.cache_->gb.emplace(std::move(gb)); });
    }
    return out;
  }

  static Ideal unit(RingPtr<F> ring) {
    auto one = Polynomial<F>::constant(ring, ring->field().one());
    return Ideal(ring, {one});
  }

  /// (x0, ..., xN): the irrelevant ideal.
  static Ideal irrelevant(RingPtr<F> ring) {
    std::vector<Polynomial<F>> gens;
    for (std::size_t i = 0; i < ring->nvars(); ++i) gens.push_back(Polynomial<F>::variable(ring, i));
    return Ideal(ring, std::move(gens));
  }

  const RingPtr<F>& ring_ptr() const { return ring_; }
  const Ring<F>& ring() const { return *ring_; }
  std::span<const Polynomial<F>> generators() const { return generators_; }
  std::size_t size() const { return generators_.size(); }

  bool is_homogeneous() const {
    for (const auto& g : generators_) {
      if (!g.is_homogeneous()) return false;
    }
    return true;
  }

  const GroebnerBasis<F>& groebner() const {
    std::call_once(cache_->once, [this] { cache_->gb.emplace(buchberger(ring_, std::span(generators_))); });
    return *cache_->gb;
  }
  bool has_cached_groebner() const { return cache_->gb.has_value(); }

  bool is_zero() const { return generators_.empty(); }
  bool is_unit() const { return groebner().is_unit(); }

  bool contains(const Polynomial<F>& p) const {
    if (!p.ring().same_space(*ring_)) throw RingMismatch("membership test across rings");
    return groebner().contains(p.in_ring(ring_));
  }
  /// other ⊆ this
  bool contains(const Ideal& other) const {
    for (const auto& g : other.generators()) {
      if (!contains(g)) return false;
    }
    return true;
  }
  bool equals(const Ideal& other) const { return contains(other) && other.contains(*this); }

 private:
  struct Cache {
    std::once_flag once;
    std::optional<GroebnerBasis<F>> gb;
  };

  RingPtr<F> ring_;
  std::vector<Polynomial<F>> generators_;
  std::shared_ptr<Cache> cache_;
};

}  // namespace qatlas

#endif
