#include "qatlas/poly_io.hpp"

#include <cctype>

namespace qatlas {

bool is_valid_variable_name(const std::string& name) {
  std::size_t i = 0;
  if (name.empty() || !(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_')) return false;
  while (i < name.size() && (std::isalnum(static_cast<unsigned char>(name[i])) || name[i] == '_')) ++i;
  if (i == name.size()) return true;
  // optional [digits] suffix
  if (name[i] != '[' || name.back() != ']' || i + 2 >= name.size()) return false;
  for (std::size_t k = i + 1; k + 1 < name.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(name[k]))) return false;
  }
  return true;
}

namespace {

template <class F>
class Parser {
 public:
  Parser(std::string_view src, const RingPtr<F>& ring) : src_(src), ring_(ring) {}

  Polynomial<F> run() {
    skip_ws();
    if (at_end()) throw ParseError("empty polynomial", pos_);
    Polynomial<F> p = expr();
    skip_ws();
    if (!at_end()) throw ParseError(std::string("unexpected '") + src_[pos_] + "'", pos_);
    return p;
  }

 private:
  bool at_end() const { return pos_ >= src_.size(); }
  char peek() {
    skip_ws();
    return at_end() ? '\0' : src_[pos_];
  }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  Polynomial<F> expr() {
    Polynomial<F> acc(ring_);
    bool negate = false;
    char c = peek();
    if (c == '+' || c == '-') {
      negate = c == '-';
      ++pos_;
    }
    Polynomial<F> t = term();
    acc = negate ? -t : t;
    for (;;) {
      c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      Polynomial<F> next = term();
      acc = c == '+' ? acc + next : acc - next;
    }
    return acc;
  }

  Polynomial<F> term() {
    Polynomial<F> acc = factor();
    while (peek() == '*') {
      ++pos_;
      acc = acc * factor();
    }
    return acc;
  }

  Polynomial<F> factor() {
    Polynomial<F> base = primary();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      std::size_t start = pos_;
      mpz_class e = integer();
      if (e > kMaxExponent) throw ParseError("exponent too large", start);
      base = base.pow(static_cast<int>(e.get_ui()));
    }
    return base;
  }

  Polynomial<F> primary() {
    char c = peek();
    if (c == '\0') throw ParseError("unexpected end of input", pos_);
    if (c == '(') {
      ++pos_;
      Polynomial<F> inner = expr();
      if (peek() != ')') throw ParseError("expected ')'", pos_);
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpz_class num = integer();
      mpz_class den = 1;
      if (peek() == '/') {
        ++pos_;
        skip_ws();
        std::size_t at = pos_;
        if (at_end() || !std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
          throw ParseError("expected integer denominator", at);
        }
        den = integer();
        if (den == 0) throw ParseError("division by zero literal", at);
      }
      const F& f = ring_->field();
      typename F::Element value;
      try {
        value = f.from_fraction(num, den);
      } catch (const DivisionByZero&) {
        throw ParseError("denominator vanishes in " + f.spec_string(), pos_);
      }
      return Polynomial<F>::constant(ring_, value);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      std::string name;
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
        name += src_[pos_++];
      }
      if (!at_end() && src_[pos_] == '[') {
        std::size_t save = pos_;
        std::string suffix = "[";
        ++pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) suffix += src_[pos_++];
        if (!at_end() && src_[pos_] == ']' && suffix.size() > 1) {
          name += suffix + "]";
          ++pos_;
        } else {
          pos_ = save;
          throw ParseError("malformed variable subscript", save);
        }
      }
      auto idx = ring_->index_of(name);
      if (!idx) throw ParseError("unknown variable '" + name + "'", start);
      return Polynomial<F>::variable(ring_, *idx);
    }
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  mpz_class integer() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected integer", start);
    return mpz_class(std::string(src_.substr(start, pos_ - start)));
  }

  std::string_view src_;
  const RingPtr<F>& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

template <class F>
Polynomial<F> parse_polynomial(std::string_view src, const RingPtr<F>& ring) {
  return Parser<F>(src, ring).run();
}

std::string monomial_to_string(const Monomial& m, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i) {
    int e = m[i];
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += names[i];
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

template <class F>
std::string to_string(const Polynomial<F>& p) {
  if (p.is_zero()) return "0";
  const F& f = p.field();
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    bool negative = f.is_negative(t.coeff);
    typename F::Element mag = negative ? f.neg(t.coeff) : t.coeff;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (t.monomial.is_one()) {
      out += f.to_string(mag);
    } else {
      if (!f.is_one(mag)) out += f.to_string(mag) + "*";
      out += monomial_to_string(t.monomial, p.ring().names());
    }
  }
  return out;
}

template Polynomial<PrimeField> parse_polynomial(std::string_view, const RingPtr<PrimeField>&);
template Polynomial<RationalField> parse_polynomial(std::string_view, const RingPtr<RationalField>&);
template std::string to_string(const Polynomial<PrimeField>&);
template std::string to_string(const Polynomial<RationalField>&);

}  // namespace qatlas
