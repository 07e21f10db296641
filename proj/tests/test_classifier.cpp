#include <doctest.h>

#include "qatlas/classifier.hpp"
#include "qatlas/ideal_ops.hpp"
#include "support/test_util.hpp"

using namespace qatlas;
using testutil::I;

namespace {

ClassificationReport classify_recipe(const ConstructionRecipe& r) { return classify(build(r)); }

bool has_claim(const ClassificationReport& rep, const std::string& claim, const std::string& verdict) {
  for (const auto& e : rep.evidence) {
    if (e.claim == claim && e.verdict == verdict) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("Fermat quintic threefold is a hypersurface") {
  auto rep = classify_recipe(ConstructionRecipe::hypersurface(3, true));
  CHECK(rep.tag == CaseTag::of(CaseKind::kHypersurface));
  CHECK(rep.headline() == "case=Hypersurface delta=3");
  CHECK(has_claim(rep, "codim_1", "pass"));
}

TEST_CASE("G(1,4) is a Grassmann section with n = 6") {
  auto rep = classify_recipe(ConstructionRecipe::grassmannian14());
  CHECK(rep.tag == CaseTag::of(CaseKind::kDeltaLE1GrassmannSection));
  CHECK(rep.invariants.n == 6);
  CHECK(rep.headline() == "case=DeltaLE1_GrassmannSection n=6");
  CHECK(has_claim(rep, "five_quadrics", "pass"));
  REQUIRE(rep.smooth.has_value());
  CHECK(*rep.smooth);
}

TEST_CASE("rank-4 linked threefold") {
  auto rep = classify_recipe(ConstructionRecipe::linked(4, 3));
  CHECK(rep.tag == CaseTag::linked(4));
  CHECK(rep.headline() == "case=LinkedQuintic rank=4 smooth=true");
  CHECK(rep.invariants.n == 3);
  for (const char* claim : {"unique_quadric", "cubics_beyond_quadric", "linkage_intersection", "linkage_degree_sum",
                            "residual_linear_codim2", "bound_diamond", "bound_diamond'", "smooth_frontier"}) {
    CAPTURE(claim);
    CHECK(has_claim(rep, claim, "pass"));
  }
  for (const auto& e : rep.evidence) CHECK(e.verdict != "fail");
}

TEST_CASE("rank-3 linked threefold is singular") {
  auto rep = classify_recipe(ConstructionRecipe::linked(3, 3));
  CHECK(rep.tag == CaseTag::linked(3));
  CHECK(rep.headline() == "case=LinkedQuintic rank=3 smooth=false");
}

TEST_CASE("scroll S(2,3)") {
  auto rep = classify_recipe(ConstructionRecipe::scroll({2, 3}));
  CHECK(rep.tag == CaseTag::of(CaseKind::kDeltaLE1Scroll));
  CHECK(rep.headline() == "case=DeltaLE1_Scroll n=2");
}

TEST_CASE("Del Pezzo sections") {
  auto g = ConstructionRecipe::grassmannian14();
  for (int cuts = 1; cuts <= 4; ++cuts) {
    auto rep = classify_recipe(ConstructionRecipe::section(g, cuts));
    CHECK(rep.tag == CaseTag::of(CaseKind::kDeltaLE1DelPezzo));
    CHECK(rep.invariants.n == 6 - cuts);
  }
  CHECK(classify_recipe(ConstructionRecipe::section(g, 5)).tag == CaseTag::of(CaseKind::kDeltaLE1GrassmannSection));
}

TEST_CASE("cones wrap the base case") {
  auto rep = classify_recipe(ConstructionRecipe::cone(ConstructionRecipe::rational_normal_curve(), 1));
  CHECK(rep.tag == CaseTag::cone(CaseKind::kDeltaLE1Scroll));
  CHECK(rep.headline() == "case=ConeSignature base=DeltaLE1_Scroll");
  CHECK(has_claim(rep, "visible_vertex", "info"));
  // a cone over a plane quintic is still a quintic hypersurface
  auto hyp = classify_recipe(ConstructionRecipe::cone(ConstructionRecipe::hypersurface(1), 1));
  CHECK(hyp.tag == CaseTag::of(CaseKind::kHypersurface));
}

TEST_CASE("elliptic scroll signature from a reducible surface") {
  // cubic scroll S(1,2) glued to a quadric surface along a conic: (n, delta, g) = (2, 2, 1)
  auto r = testutil::ring(5);
  auto s = I(r, {"x0*x3 - x1*x2", "x0*x4 - x1*x3", "x2*x4 - x3^2"});
  auto q = I(r, {"x0", "x2*x4 - x3^2 + x1*(3*x1 + 5*x2 - 7*x3 + 11*x4)"});
  auto rep = classify(ideal_intersect(s, q));
  CHECK(rep.tag == CaseTag::of(CaseKind::kEllipticScrollSignature));
  CHECK(rep.invariants.g == 1);
  CHECK(rep.invariants.delta == 2);
  CHECK_FALSE(rep.char_caveats.empty());
}

TEST_CASE("degenerate input is unclassified") {
  // a plane quintic placed inside a hyperplane of P^3
  auto r = testutil::ring(4);
  auto rep = classify(I(r, {"x3", "x0^5 + x1^5 + x2^5"}));
  CHECK(rep.tag.kind == CaseKind::kUnclassified);
  CHECK_FALSE(rep.reason.empty());
  CHECK(rep.headline().rfind("case=Unclassified reason=\"", 0) == 0);
  CHECK(has_claim(rep, "delta_genus_identity", "fail"));
}

TEST_CASE("classifier preconditions") {
  auto r = testutil::ring(4);
  CHECK_THROWS_AS(classify(I(r, {"x0*x2 - x1^2", "x0*x3 - x1*x2", "x1*x3 - x2^2"})), PreconditionError);
  CHECK_THROWS_AS(classify(I(r, {"x0^5 + x1"})), PreconditionError);
  CHECK_THROWS_AS(classify(Ideal<PrimeField>::unit(r)), PreconditionError);
}

TEST_CASE("characteristic 2 reports the case without a rank") {
  auto recipe = ConstructionRecipe::linked(4, 2).with(FieldSpec::prime(2), 1);
  auto rep = classify(build(recipe));
  if (rep.tag.kind == CaseKind::kLinkedQuintic) {
    CHECK_FALSE(rep.tag.rank.has_value());
    CHECK_FALSE(rep.char_caveats.empty());
  }
}

TEST_CASE("reports are deterministic") {
  auto x = build(ConstructionRecipe::linked(3, 2));
  ClassifyOptions opts;
  opts.seed = 9;
  auto a = classify(x, opts).to_machine();
  auto b = classify(x, opts).to_machine();
  CHECK(a == b);
  CHECK(a.find("seed=9\n") != std::string::npos);
}

TEST_CASE("machine report lists every evidence row") {
  auto rep = classify_recipe(ConstructionRecipe::linked(4, 2));
  auto text = rep.to_machine();
  std::size_t rows = 0;
  for (std::size_t pos = text.find("evidence claim="); pos != std::string::npos;
       pos = text.find("evidence claim=", pos + 1)) {
    ++rows;
  }
  CHECK(rows == rep.evidence.size());
  CHECK(rep.to_text().rfind(rep.headline() + "\n", 0) == 0);
}

TEST_CASE("cross check over the corpus") {
  auto summary = cross_check_theorem(corpus());
  CHECK(summary.all_agree());
  CHECK(summary.mismatches().empty());
  CHECK(summary.table().find("agreement: " + std::to_string(summary.rows.size())) != std::string::npos);
  for (const auto& row : summary.rows) CHECK(row.got.kind != CaseKind::kUnclassified);
}

TEST_CASE("cross check names a mislabeled entry") {
  auto entries = corpus();
  entries.resize(3);
  entries[1].tag = CaseTag::of(CaseKind::kDeltaLE1DelPezzo);
  auto summary = cross_check_theorem(entries);
  CHECK_FALSE(summary.all_agree());
  CHECK(summary.agreements() == 2);
  REQUIRE(summary.mismatches().size() == 1);
  CHECK(summary.mismatches()[0].find(entries[1].name) != std::string::npos);
}

TEST_CASE("cross check of an empty corpus") {
  auto summary = cross_check_theorem({});
  CHECK(summary.rows.empty());
  CHECK(summary.all_agree());
}

TEST_CASE("property: smooth linked quintics have n <= 3, and rank 4 at n = 3") {
  for (const auto& e : corpus()) {
    if (e.tag.kind != CaseKind::kLinkedQuintic) continue;
    auto rep = classify(build(e.recipe));
    CAPTURE(e.name);
    REQUIRE(rep.smooth.has_value());
    if (*rep.smooth) {
      CHECK(rep.invariants.n <= 3);
      if (rep.invariants.n == 3) CHECK(rep.tag.rank == 4);
    }
    CHECK(has_claim(rep, "linkage_degree_sum", "pass"));
    CHECK(has_claim(rep, "residual_linear_codim2", "pass"));
  }
}
