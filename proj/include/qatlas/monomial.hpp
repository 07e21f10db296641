#ifndef QATLAS_MONOMIAL_HPP
#define QATLAS_MONOMIAL_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace qatlas {

inline constexpr std::size_t kMaxVariables = 32;
inline constexpr int kMaxExponent = 255;

/// Exponent vector with fixed capacity. Unused slots stay zero, so every
/// loop below runs over the full array and vectorizes.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::span<const int> exponents);

  static Monomial variable(std::size_t i, int power = 1);

  int operator[](std::size_t i) const { return exp_[i]; }
  int degree() const { return degree_; }
  /// Bit i set iff variable i occurs.
  std::uint32_t support() const { return support_; }
  bool is_one() const { return degree_ == 0; }

  void set(std::size_t i, int e);

  /// True iff this divides other.
  bool divides(const Monomial& other) const {
    if (support_ & ~other.support_) return false;
    if (degree_ > other.degree_) return false;
    bool ok = true;
    for (std::size_t i = 0; i < kMaxVariables; ++i) ok &= exp_[i] <= other.exp_[i];
    return ok;
  }
  bool coprime(const Monomial& other) const { return (support_ & other.support_) == 0; }

  Monomial operator*(const Monomial& other) const;
  /// Exact quotient; caller guarantees other | *this.
  Monomial operator/(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  Monomial gcd(const Monomial& other) const;

  bool operator==(const Monomial& o) const { return exp_ == o.exp_; }
  bool operator!=(const Monomial& o) const { return !(*this == o); }

  std::size_t hash() const;
  std::vector<int> exponents(std::size_t nvars) const;

  // Raw block degree of variables [lo, hi).
  int block_degree(std::size_t lo, std::size_t hi) const {
    int s = 0;
    for (std::size_t i = lo; i < hi; ++i) s += exp_[i];
    return s;
  }

 private:
  void refresh();

  std::array<std::uint8_t, kMaxVariables> exp_{};
  std::uint16_t degree_ = 0;
  std::uint32_t support_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// Graded reverse lexicographic, lexicographic, or a two-block elimination
/// order (grevlex on the first `split` variables, ties broken by grevlex on
/// the rest). Variables are ordered x0 > x1 > ... in every kind.
class MonomialOrder {
 public:
  enum class Kind { kGrevLex, kLex, kBlock };

  static MonomialOrder grevlex() { return MonomialOrder(Kind::kGrevLex, 0); }
  static MonomialOrder lex() { return MonomialOrder(Kind::kLex, 0); }
  static MonomialOrder block(std::size_t split) { return MonomialOrder(Kind::kBlock, split); }

  Kind kind() const { return kind_; }
  std::size_t split() const { return split_; }

  /// Negative if a < b, zero if equal, positive if a > b.
  int compare(const Monomial& a, const Monomial& b) const {
    switch (kind_) {
      case Kind::kGrevLex:
        return grevlex_compare(a, b, 0, kMaxVariables);
      case Kind::kLex:
        for (std::size_t i = 0; i < kMaxVariables; ++i) {
          if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
        }
        return 0;
      case Kind::kBlock: {
        int c = grevlex_compare(a, b, 0, split_);
        return c != 0 ? c : grevlex_compare(a, b, split_, kMaxVariables);
      }
    }
    return 0;
  }
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  std::string to_string() const;
  bool operator==(const MonomialOrder&) const = default;

 private:
  MonomialOrder(Kind k, std::size_t s) : kind_(k), split_(s) {}

  static int grevlex_compare(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
    int da = (lo == 0 && hi == kMaxVariables) ? a.degree() : a.block_degree(lo, hi);
    int db = (lo == 0 && hi == kMaxVariables) ? b.degree() : b.block_degree(lo, hi);
    if (da != db) return da > db ? 1 : -1;
    for (std::size_t i = hi; i-- > lo;) {
      if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    }
    return 0;
  }

  Kind kind_;
  std::size_t split_;
};

/// All monomials of the given total degree in nvars variables, in lex-descending order.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, int degree);

}  // namespace qatlas

#endif
