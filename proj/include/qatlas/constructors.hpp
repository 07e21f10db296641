#ifndef QATLAS_CONSTRUCTORS_HPP
#define QATLAS_CONSTRUCTORS_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "qatlas/cases.hpp"
#include "qatlas/ideal.hpp"
#include "qatlas/ideal_ops.hpp"

namespace qatlas {

enum class RecipeKind {
  kQuinticHypersurface,
  kRationalNormalCurve,
  kScroll,
  kGrassmannian14,
  kLinearSection,
  kLinkedQuintic,
  kCone,
};

/// How the quadric and cubic of a linked quintic are written.
enum class Spelling {
  kNormalForm,  // Q = x0x2 + x1x3 or x0^2 + x1x2, V3 = x0 F + x1 G, P = (x0, x1)
  kExample,     // sums of signed squares, P = (x0 - x1, x2) or (x0 - x1, x2 - x3)
};

struct ConstructionRecipe {
  RecipeKind kind = RecipeKind::kGrassmannian14;
  int n = 0;     // hypersurface and linked: dimension of the variety
  int rank = 4;  // linked
  std::vector<int> partition;  // scroll
  bool fermat = false;         // hypersurface: x0^5 + ... instead of a random form
  Spelling spelling = Spelling::kNormalForm;
  std::shared_ptr<const ConstructionRecipe> base;  // section, cone
  int cuts = 0;  // section
  int s = 0;     // cone
  FieldSpec field;
  std::uint64_t seed = 1;

  static ConstructionRecipe hypersurface(int n, bool fermat = false);
  static ConstructionRecipe rational_normal_curve();
  static ConstructionRecipe scroll(std::vector<int> partition);
  static ConstructionRecipe grassmannian14();
  static ConstructionRecipe section(ConstructionRecipe base, int cuts);
  static ConstructionRecipe linked(int rank, int n, Spelling spelling = Spelling::kNormalForm);
  static ConstructionRecipe cone(ConstructionRecipe base, int s);

  /// Returns a copy with field and seed set here and in every nested base.
  ConstructionRecipe with(FieldSpec f, std::uint64_t seed) const;

  /// Throws InputError on a violated recipe invariant.
  void validate() const;

  /// "linked(rank=4, n=3, field=gf32003, seed=1)"; nested bases omit field and seed.
  std::string to_string() const;
  /// Inverse of to_string. Throws InputError.
  static ConstructionRecipe parse(const std::string& text);

  bool operator==(const ConstructionRecipe& o) const;
};

using AnyIdeal = std::variant<Ideal<PrimeField>, Ideal<RationalField>>;

/// The ideal of a recipe over the given field.
template <class F>
Ideal<F> build_in(const ConstructionRecipe& recipe, const F& field);

/// Dispatches on recipe.field.
AnyIdeal build(const ConstructionRecipe& recipe);

/// A linked quintic together with the complete intersection and the residual.
template <class F>
struct LinkedConstruction {
  Ideal<F> x;
  Polynomial<F> q;
  Polynomial<F> v3;
  Ideal<F> p;
  int saturation_iterations = 0;
};

template <class F>
LinkedConstruction<F> build_linked(const ConstructionRecipe& recipe, const F& field);

/// Dense random form of the given degree.
template <class F>
Polynomial<F> random_form(const RingPtr<F>& ring, int degree, Rng& rng);

struct ExpectedInvariants {
  int n = 0;
  int N = 0;
  long long d = 5;
  long long delta = 0;
  long long g = 0;
  bool operator==(const ExpectedInvariants&) const = default;
  std::string to_string() const;  // "(n,N,d,delta,g) = (1,2,5,3,6)"
};

struct CorpusEntry {
  std::string name;
  ConstructionRecipe recipe;
  ExpectedInvariants expected;
  CaseTag tag;
};

/// The regression corpus: every constructible case with its expected invariants.
std::vector<CorpusEntry> corpus();

}  // namespace qatlas

#endif
