#include "qatlas/constructors.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

#include "qatlas/geometry.hpp"

namespace qatlas {

std::string to_string(CaseKind kind) {
  switch (kind) {
    case CaseKind::kHypersurface:
      return "Hypersurface";
    case CaseKind::kDeltaLE1Scroll:
      return "DeltaLE1_Scroll";
    case CaseKind::kDeltaLE1GrassmannSection:
      return "DeltaLE1_GrassmannSection";
    case CaseKind::kDeltaLE1DelPezzo:
      return "DeltaLE1_DelPezzo";
    case CaseKind::kEllipticScrollSignature:
      return "EllipticScrollSignature";
    case CaseKind::kLinkedQuintic:
      return "LinkedQuintic";
    case CaseKind::kConeSignature:
      return "ConeSignature";
    case CaseKind::kUnclassified:
      return "Unclassified";
  }
  return "?";
}

std::string CaseTag::to_string() const {
  std::string s = qatlas::to_string(kind);
  if (rank) s += "(rank=" + std::to_string(*rank) + ")";
  if (base) s += "(" + qatlas::to_string(*base) + ")";
  return s;
}

std::string ExpectedInvariants::to_string() const {
  std::ostringstream os;
  os << "(n,N,d,delta,g) = (" << n << "," << N << "," << d << "," << delta << "," << g << ")";
  return os.str();
}

// ---------------------------------------------------------------- recipes

ConstructionRecipe ConstructionRecipe::hypersurface(int n, bool fermat) {
  ConstructionRecipe r;
  r.kind = RecipeKind::kQuinticHypersurface;
  r.n = n;
  r.fermat = fermat;
  return r;
}

ConstructionRecipe ConstructionRecipe::rational_normal_curve() {
  ConstructionRecipe r;
  r.kind = RecipeKind::kRationalNormalCurve;
  return r;
}

ConstructionRecipe ConstructionRecipe::scroll(std::vector<int> partition) {
  ConstructionRecipe r;
  r.kind = RecipeKind::kScroll;
  r.partition = std::move(partition);
  return r;
}

ConstructionRecipe ConstructionRecipe::grassmannian14() {
  ConstructionRecipe r;
  r.kind = RecipeKind::kGrassmannian14;
  return r;
}

ConstructionRecipe ConstructionRecipe::section(ConstructionRecipe base, int cuts) {
  ConstructionRecipe r;
  r.kind = RecipeKind::kLinearSection;
  r.field = base.field;
  r.seed = base.seed;
  r.base = std::make_shared<const ConstructionRecipe>(std::move(base));
  r.cuts = cuts;
  return r;
}

ConstructionRecipe ConstructionRecipe::linked(int rank, int n, Spelling spelling) {
  ConstructionRecipe r;
  r.kind = RecipeKind::kLinkedQuintic;
  r.rank = rank;
  r.n = n;
  r.spelling = spelling;
  return r;
}

ConstructionRecipe ConstructionRecipe::cone(ConstructionRecipe base, int s) {
  ConstructionRecipe r;
  r.kind = RecipeKind::kCone;
  r.field = base.field;
  r.seed = base.seed;
  r.base = std::make_shared<const ConstructionRecipe>(std::move(base));
  r.s = s;
  return r;
}

ConstructionRecipe ConstructionRecipe::with(FieldSpec f, std::uint64_t sd) const {
  ConstructionRecipe r = *this;
  r.field = f;
  r.seed = sd;
  if (base) r.base = std::make_shared<const ConstructionRecipe>(base->with(f, sd));
  return r;
}

void ConstructionRecipe::validate() const {
  switch (kind) {
    case RecipeKind::kQuinticHypersurface:
      if (n < 1 || n + 2 > static_cast<int>(kMaxVariables)) throw InputError("hypersurface: n out of range");
      break;
    case RecipeKind::kRationalNormalCurve:
    case RecipeKind::kGrassmannian14:
      break;
    case RecipeKind::kScroll: {
      if (partition.empty() || partition.size() > 5) throw InputError("scroll: need 1 to 5 parts");
      for (int a : partition) {
        if (a < 1) throw InputError("scroll: parts must be positive");
      }
      if (std::accumulate(partition.begin(), partition.end(), 0) != 5) throw InputError("scroll: parts must sum to 5");
      break;
    }
    case RecipeKind::kLinearSection:
      if (!base) throw InputError("section: missing base");
      base->validate();
      if (cuts < 1) throw InputError("section: cuts must be positive");
      break;
    case RecipeKind::kLinkedQuintic:
      if (rank != 3 && rank != 4) throw InputError("linked: rank must be 3 or 4");
      if (n < 1 || n + 3 > static_cast<int>(kMaxVariables)) throw InputError("linked: n out of range");
      if (rank == 4 && n < 1) throw InputError("linked: rank 4 needs n >= 1");
      break;
    case RecipeKind::kCone:
      if (!base) throw InputError("cone: missing base");
      base->validate();
      if (s < 1) throw InputError("cone: s must be at least 1");
      break;
  }
  if (field.kind == FieldSpec::Kind::kPrimeField && !is_prime(field.modulus)) throw InputError("field modulus not prime");
}

bool ConstructionRecipe::operator==(const ConstructionRecipe& o) const {
  if (kind != o.kind || n != o.n || rank != o.rank || partition != o.partition || fermat != o.fermat ||
      spelling != o.spelling || cuts != o.cuts || s != o.s || !(field == o.field) || seed != o.seed) {
    return false;
  }
  if (!base || !o.base) return !base && !o.base;
  return *base == *o.base;
}

namespace {

std::string field_token(const FieldSpec& f) {
  return f.is_rational() ? "q" : "gf" + std::to_string(f.modulus);
}

std::string body(const ConstructionRecipe& r) {
  std::ostringstream os;
  switch (r.kind) {
    case RecipeKind::kQuinticHypersurface:
      os << "hypersurface(n=" << r.n << (r.fermat ? ", form=fermat" : "");
      break;
    case RecipeKind::kRationalNormalCurve:
      os << "rnc(";
      break;
    case RecipeKind::kScroll: {
      os << "scroll(partition=[";
      for (std::size_t i = 0; i < r.partition.size(); ++i) os << (i ? "," : "") << r.partition[i];
      os << "]";
      break;
    }
    case RecipeKind::kGrassmannian14:
      os << "grassmannian14(";
      break;
    case RecipeKind::kLinearSection:
      os << "section(base=" << body(*r.base) << "), cuts=" << r.cuts;
      break;
    case RecipeKind::kLinkedQuintic:
      os << "linked(rank=" << r.rank << ", n=" << r.n << (r.spelling == Spelling::kExample ? ", spelling=example" : "");
      break;
    case RecipeKind::kCone:
      os << "cone(base=" << body(*r.base) << "), s=" << r.s;
      break;
  }
  return os.str();
}

class RecipeParser {
 public:
  explicit RecipeParser(const std::string& text) : text_(text) {}

  ConstructionRecipe parse_top() {
    ConstructionRecipe r = recipe(true);
    skip();
    if (pos_ != text_.size()) fail("trailing input");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) {
    throw InputError("recipe: " + what + " at position " + std::to_string(pos_));
  }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  std::string word() {
    skip();
    std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
    if (start == pos_) fail("expected a name");
    return text_.substr(start, pos_ - start);
  }
  long long integer() {
    std::string w = word();
    try {
      std::size_t used = 0;
      long long v = std::stoll(w, &used);
      if (used != w.size()) fail("expected an integer");
      return v;
    } catch (const std::logic_error&) {
      fail("expected an integer");
    }
  }

  ConstructionRecipe recipe(bool top) {
    std::string name = word();
    ConstructionRecipe r;
    if (name == "hypersurface") r.kind = RecipeKind::kQuinticHypersurface;
    else if (name == "rnc") r.kind = RecipeKind::kRationalNormalCurve;
    else if (name == "scroll") r.kind = RecipeKind::kScroll;
    else if (name == "grassmannian14") r.kind = RecipeKind::kGrassmannian14;
    else if (name == "section") r.kind = RecipeKind::kLinearSection;
    else if (name == "linked") r.kind = RecipeKind::kLinkedQuintic;
    else if (name == "cone") r.kind = RecipeKind::kCone;
    else fail("unknown recipe kind '" + name + "'");
    expect('(');
    if (!accept(')')) {
      do {
        std::string key = word();
        expect('=');
        if (key == "n") r.n = static_cast<int>(integer());
        else if (key == "rank") r.rank = static_cast<int>(integer());
        else if (key == "cuts") r.cuts = static_cast<int>(integer());
        else if (key == "s") r.s = static_cast<int>(integer());
        else if (key == "form") {
          std::string v = word();
          if (v != "fermat" && v != "random") fail("form must be fermat or random");
          r.fermat = v == "fermat";
        } else if (key == "spelling") {
          std::string v = word();
          if (v != "example" && v != "normal") fail("spelling must be normal or example");
          r.spelling = v == "example" ? Spelling::kExample : Spelling::kNormalForm;
        } else if (key == "partition") {
          expect('[');
          do {
            r.partition.push_back(static_cast<int>(integer()));
          } while (accept(','));
          expect(']');
        } else if (key == "base") {
          r.base = std::make_shared<const ConstructionRecipe>(recipe(false));
        } else if (key == "field" && top) {
          r.field = FieldSpec::parse(word());
        } else if (key == "seed" && top) {
          long long v = integer();
          if (v < 0) fail("seed must be non-negative");
          r.seed = static_cast<std::uint64_t>(v);
        } else {
          fail("unknown key '" + key + "'");
        }
      } while (accept(','));
      expect(')');
    }
    return top ? r.with(r.field, r.seed) : r;
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string ConstructionRecipe::to_string() const {
  std::string b = body(*this);
  bool empty_args = b.back() == '(';
  return b + (empty_args ? "" : ", ") + "field=" + field_token(field) + ", seed=" + std::to_string(seed) + ")";
}

ConstructionRecipe ConstructionRecipe::parse(const std::string& text) {
  try {
    ConstructionRecipe r = RecipeParser(text).parse_top();
    r.validate();
    return r;
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("recipe: ") + e.what());
  }
}

// ---------------------------------------------------------------- building

template <class F>
Polynomial<F> random_form(const RingPtr<F>& ring, int degree, Rng& rng) {
  for (;;) {
    std::vector<Term<F>> terms;
    for (const auto& m : monomials_of_degree(ring->nvars(), degree)) {
      auto c = ring->field().random(rng);
      if (!ring->field().is_zero(c)) terms.push_back({m, c});
    }
    Polynomial<F> p(ring, std::move(terms));
    if (!p.is_zero()) return p;
  }
}

namespace {

template <class F>
RingPtr<F> standard_ring(std::size_t count, const F& field) {
  return Ring<F>::standard(count, field, MonomialOrder::grevlex());
}

/// 2x2 minors of a 2-row matrix of variables given by index.
template <class F>
std::vector<Polynomial<F>> two_by_two_minors(const RingPtr<F>& ring, const std::vector<std::size_t>& top,
                                             const std::vector<std::size_t>& bottom) {
  std::vector<Polynomial<F>> out;
  auto x = [&](std::size_t i) { return Polynomial<F>::variable(ring, i); };
  for (std::size_t i = 0; i < top.size(); ++i) {
    for (std::size_t j = i + 1; j < top.size(); ++j) {
      out.push_back((x(top[i]) * x(bottom[j]) - x(top[j]) * x(bottom[i])).monic());
    }
  }
  return out;
}

template <class F>
Ideal<F> build_hypersurface(const ConstructionRecipe& r, const F& field) {
  auto ring = standard_ring(r.n + 2, field);
  if (r.fermat) {
    Polynomial<F> f(ring);
    for (std::size_t i = 0; i < ring->nvars(); ++i) f += Polynomial<F>::variable(ring, i).pow(5);
    return Ideal<F>(ring, {f});
  }
  Rng rng = make_rng(r.seed, 1);
  return Ideal<F>(ring, {random_form(ring, 5, rng).monic()});
}

template <class F>
Ideal<F> build_scroll(const std::vector<int>& partition, const F& field) {
  std::size_t nv = 0;
  for (int a : partition) nv += a + 1;
  auto ring = standard_ring(nv, field);
  std::vector<std::size_t> top, bottom;
  std::size_t offset = 0;
  for (int a : partition) {
    for (int j = 0; j < a; ++j) {
      top.push_back(offset + j);
      bottom.push_back(offset + j + 1);
    }
    offset += a + 1;
  }
  return Ideal<F>(ring, two_by_two_minors(ring, top, bottom));
}

template <class F>
Ideal<F> build_grassmannian(const F& field) {
  std::vector<std::string> names;
  int index[5][5] = {};
  for (int i = 0; i < 5; ++i) {
    for (int j = i + 1; j < 5; ++j) {
      index[i][j] = static_cast<int>(names.size());
      names.push_back("p" + std::to_string(i) + std::to_string(j));
    }
  }
  auto ring = Ring<F>::make(names, field, MonomialOrder::grevlex());
  auto p = [&](int i, int j) { return Polynomial<F>::variable(ring, index[i][j]); };
  std::vector<Polynomial<F>> gens;
  for (int i = 0; i < 5; ++i) {
    for (int j = i + 1; j < 5; ++j) {
      for (int k = j + 1; k < 5; ++k) {
        for (int l = k + 1; l < 5; ++l) {
          gens.push_back(p(i, j) * p(k, l) - p(i, k) * p(j, l) + p(i, l) * p(j, k));
        }
      }
    }
  }
  return Ideal<F>(ring, std::move(gens));
}

}  // namespace

template <class F>
LinkedConstruction<F> build_linked(const ConstructionRecipe& r, const F& field) {
  if (r.kind != RecipeKind::kLinkedQuintic) throw InputError("build_linked: not a linked recipe");
  r.validate();
  auto ring = standard_ring(r.n + 3, field);
  auto x = [&](std::size_t i) { return Polynomial<F>::variable(ring, i); };
  Rng rng = make_rng(r.seed, 2);
  Polynomial<F> f = random_form(ring, 2, rng);
  Polynomial<F> g = random_form(ring, 2, rng);
  Polynomial<F> q(ring), v3(ring);
  std::vector<Polynomial<F>> p_gens;
  if (r.spelling == Spelling::kNormalForm) {
    q = r.rank == 4 ? x(0) * x(2) + x(1) * x(3) : x(0) * x(0) + x(1) * x(2);
    p_gens = {x(0), x(1)};
  } else if (r.rank == 3) {
    q = x(0) * x(0) - x(1) * x(1) + x(2) * x(2);
    p_gens = {x(0) - x(1), x(2)};
  } else {
    q = x(0) * x(0) - x(1) * x(1) + x(2) * x(2) - x(3) * x(3);
    p_gens = {x(0) - x(1), x(2) - x(3)};
  }
  v3 = p_gens[0] * f + p_gens[1] * g;
  Ideal<F> p(ring, p_gens);
  auto sat = saturate(Ideal<F>(ring, {q, v3}), p);
  return {std::move(sat.ideal), q, v3, p, sat.iterations};
}

template <class F>
Ideal<F> build_in(const ConstructionRecipe& r, const F& field) {
  r.validate();
  switch (r.kind) {
    case RecipeKind::kQuinticHypersurface:
      return build_hypersurface(r, field);
    case RecipeKind::kRationalNormalCurve: {
      auto ring = standard_ring(6, field);
      return Ideal<F>(ring, two_by_two_minors(ring, {0, 1, 2, 3, 4}, {1, 2, 3, 4, 5}));
    }
    case RecipeKind::kScroll:
      return build_scroll(r.partition, field);
    case RecipeKind::kGrassmannian14:
      return build_grassmannian(field);
    case RecipeKind::kLinearSection: {
      Ideal<F> cur = build_in(*r.base, field);
      for (int k = 1; k <= r.cuts; ++k) {
        cur = hyperplane_slice(cur, r.seed * 7919 + static_cast<std::uint64_t>(k)).ideal;
      }
      return cur;
    }
    case RecipeKind::kLinkedQuintic:
      return build_linked(r, field).x;
    case RecipeKind::kCone:
      return cone_over(build_in(*r.base, field), r.s);
  }
  throw InputError("unknown recipe kind");
}

AnyIdeal build(const ConstructionRecipe& recipe) {
  if (recipe.field.is_rational()) return build_in(recipe, RationalField());
  return build_in(recipe, PrimeField(recipe.field.modulus));
}

// ---------------------------------------------------------------- corpus

std::vector<CorpusEntry> corpus() {
  using R = ConstructionRecipe;
  const FieldSpec gf = FieldSpec::prime(kDefaultPrime);
  const FieldSpec q = FieldSpec::rationals();
  auto entry = [&](std::string name, R recipe, ExpectedInvariants e, CaseTag tag, FieldSpec f, std::uint64_t seed = 1) {
    return CorpusEntry{std::move(name), recipe.with(f, seed), e, tag};
  };
  const auto hyp = CaseTag::of(CaseKind::kHypersurface);
  const auto scroll = CaseTag::of(CaseKind::kDeltaLE1Scroll);
  const auto gsec = CaseTag::of(CaseKind::kDeltaLE1GrassmannSection);
  const auto dp = CaseTag::of(CaseKind::kDeltaLE1DelPezzo);
  std::vector<CorpusEntry> c;
  c.push_back(entry("plane quintic", R::hypersurface(1), {1, 2, 5, 3, 6}, hyp, gf));
  c.push_back(entry("quintic surface", R::hypersurface(2), {2, 3, 5, 3, 6}, hyp, gf));
  c.push_back(entry("Fermat quintic threefold", R::hypersurface(3, true), {3, 4, 5, 3, 6}, hyp, gf));
  c.push_back(entry("rational normal quintic", R::rational_normal_curve(), {1, 5, 5, 0, 0}, scroll, gf));
  c.push_back(entry("scroll S(2,3)", R::scroll({2, 3}), {2, 6, 5, 0, 0}, scroll, gf));
  c.push_back(entry("scroll S(1,4)", R::scroll({1, 4}), {2, 6, 5, 0, 0}, scroll, gf));
  c.push_back(entry("scroll S(1,1,3)", R::scroll({1, 1, 3}), {3, 7, 5, 0, 0}, scroll, gf));
  c.push_back(entry("scroll S(1,2,2)", R::scroll({1, 2, 2}), {3, 7, 5, 0, 0}, scroll, gf));
  c.push_back(entry("scroll S(1,1,1,2)", R::scroll({1, 1, 1, 2}), {4, 8, 5, 0, 0}, scroll, gf));
  c.push_back(entry("scroll S(1,1,1,1,1)", R::scroll({1, 1, 1, 1, 1}), {5, 9, 5, 0, 0}, scroll, gf));
  c.push_back(entry("Grassmannian G(1,4)", R::grassmannian14(), {6, 9, 5, 1, 1}, gsec, gf));
  c.push_back(entry("G(1,4) hyperplane section", R::section(R::grassmannian14(), 1), {5, 8, 5, 1, 1}, dp, gf));
  c.push_back(entry("Del Pezzo fourfold", R::section(R::grassmannian14(), 2), {4, 7, 5, 1, 1}, dp, gf));
  c.push_back(entry("Del Pezzo threefold", R::section(R::grassmannian14(), 3), {3, 6, 5, 1, 1}, dp, gf));
  c.push_back(entry("Del Pezzo quintic surface", R::section(R::grassmannian14(), 4), {2, 5, 5, 1, 1}, dp, gf));
  c.push_back(entry("curve section of G(1,4)", R::section(R::grassmannian14(), 5), {1, 4, 5, 1, 1}, gsec, gf));
  c.push_back(entry("genus 2 quintic curve", R::linked(4, 1), {1, 3, 5, 2, 2}, CaseTag::linked(4), gf));
  c.push_back(entry("linked surface rank 4", R::linked(4, 2), {2, 4, 5, 2, 2}, CaseTag::linked(4), gf));
  c.push_back(entry("linked surface rank 3", R::linked(3, 2), {2, 4, 5, 2, 2}, CaseTag::linked(3), gf));
  c.push_back(entry("linked surface rank 3, example spelling over Q", R::linked(3, 2, Spelling::kExample),
                    {2, 4, 5, 2, 2}, CaseTag::linked(3), q, 7));
  c.push_back(entry("linked threefold rank 4", R::linked(4, 3), {3, 5, 5, 2, 2}, CaseTag::linked(4), gf));
  c.push_back(entry("linked threefold rank 3", R::linked(3, 3), {3, 5, 5, 2, 2}, CaseTag::linked(3), gf));
  c.push_back(entry("linked fourfold rank 4", R::linked(4, 4), {4, 6, 5, 2, 2}, CaseTag::linked(4), gf));
  c.push_back(entry("linked fourfold rank 3, example spelling", R::linked(3, 4, Spelling::kExample),
                    {4, 6, 5, 2, 2}, CaseTag::linked(3), gf));
  c.push_back(entry("cone over rational normal quintic", R::cone(R::rational_normal_curve(), 1), {2, 6, 5, 0, 0},
                    CaseTag::cone(CaseKind::kDeltaLE1Scroll), gf));
  c.push_back(entry("cone over scroll S(2,3)", R::cone(R::scroll({2, 3}), 2), {4, 8, 5, 0, 0},
                    CaseTag::cone(CaseKind::kDeltaLE1Scroll), gf));
  c.push_back(entry("cone over Del Pezzo surface", R::cone(R::section(R::grassmannian14(), 4), 1), {3, 6, 5, 1, 1},
                    CaseTag::cone(CaseKind::kDeltaLE1DelPezzo), gf));
  c.push_back(entry("cone over plane quintic", R::cone(R::hypersurface(1), 1), {2, 3, 5, 3, 6}, hyp, gf));
  return c;
}

#define QATLAS_INSTANTIATE(F)                                                             \
  template Polynomial<F> random_form(const RingPtr<F>&, int, Rng&);                       \
  template LinkedConstruction<F> build_linked(const ConstructionRecipe&, const F&);       \
  template Ideal<F> build_in(const ConstructionRecipe&, const F&);

QATLAS_INSTANTIATE(PrimeField)
QATLAS_INSTANTIATE(RationalField)

}  // namespace qatlas
