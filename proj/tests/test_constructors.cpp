#include <doctest.h>

#include <set>

#include "qatlas/geometry.hpp"
#include "qatlas/invariants.hpp"
#include "support/test_util.hpp"

using namespace qatlas;
using testutil::P;

namespace {

template <class F>
typename F::Element evaluate(const Polynomial<F>& p, const std::vector<typename F::Element>& point) {
  const F& f = p.field();
  auto acc = f.zero();
  for (const auto& t : p.terms()) {
    auto v = t.coeff;
    for (std::size_t i = 0; i < point.size(); ++i) {
      for (int e = 0; e < t.monomial[i]; ++e) v = f.mul(v, point[i]);
    }
    acc = f.add(acc, v);
  }
  return acc;
}

/// Point of the scroll S(a_1, ..., a_n): block i is u_i * (s^a, s^(a-1) t, ..., t^a).
std::vector<PrimeField::Element> scroll_point(const PrimeField& f, const std::vector<int>& partition, Rng& rng) {
  auto s = f.random(rng), t = f.random(rng);
  std::vector<PrimeField::Element> pt;
  for (int a : partition) {
    auto u = f.random(rng);
    for (int j = 0; j <= a; ++j) {
      auto v = u;
      for (int k = 0; k < a - j; ++k) v = f.mul(v, s);
      for (int k = 0; k < j; ++k) v = f.mul(v, t);
      pt.push_back(v);
    }
  }
  return pt;
}

}  // namespace

TEST_CASE("recipe text round trip") {
  std::vector<ConstructionRecipe> recipes = {
      ConstructionRecipe::linked(4, 3).with(FieldSpec::prime(32003), 1),
      ConstructionRecipe::linked(3, 2, Spelling::kExample).with(FieldSpec::rationals(), 7),
      ConstructionRecipe::section(ConstructionRecipe::grassmannian14(), 4),
      ConstructionRecipe::scroll({1, 1, 3}),
      ConstructionRecipe::hypersurface(3, true).with(FieldSpec::prime(101), 5),
      ConstructionRecipe::cone(ConstructionRecipe::rational_normal_curve(), 1),
      ConstructionRecipe::cone(ConstructionRecipe::section(ConstructionRecipe::grassmannian14(), 4), 2),
  };
  for (const auto& e : corpus()) recipes.push_back(e.recipe);
  for (const auto& r : recipes) {
    const std::string text = r.to_string();
    CAPTURE(text);
    CHECK(ConstructionRecipe::parse(text) == r);
    CHECK(ConstructionRecipe::parse(text).to_string() == text);
  }
  CHECK(ConstructionRecipe::linked(4, 3).with(FieldSpec::prime(32003), 1).to_string() ==
        "linked(rank=4, n=3, field=gf32003, seed=1)");
}

TEST_CASE("recipe validation") {
  CHECK_THROWS_AS(ConstructionRecipe::scroll({1, 1, 2}).validate(), InputError);
  CHECK_THROWS_AS(ConstructionRecipe::scroll({0, 5}).validate(), InputError);
  CHECK_THROWS_AS(ConstructionRecipe::linked(5, 2).validate(), InputError);
  CHECK_THROWS_AS(ConstructionRecipe::linked(4, 0).validate(), InputError);
  CHECK_THROWS_AS(ConstructionRecipe::cone(ConstructionRecipe::rational_normal_curve(), 0).validate(), InputError);
  CHECK_THROWS_AS(ConstructionRecipe::parse("scroll(partition=[2,2])"), InputError);
  CHECK_THROWS_AS(ConstructionRecipe::parse("linked(rank=4, n=3"), InputError);
  CHECK_THROWS_AS(ConstructionRecipe::parse("torus()"), InputError);
  CHECK_THROWS_AS(ConstructionRecipe::parse("rnc(seed=-1)"), InputError);
}

TEST_CASE("scroll S(1,1,3)") {
  auto x = testutil::build_gf(ConstructionRecipe::scroll({1, 1, 3}));
  auto v = compute_invariants(x);
  CHECK(v.N == 7);
  CHECK(v.n == 3);
  CHECK(v.d == 5);
  CHECK(v.delta == 0);
}

TEST_CASE("Grassmannian G(1,4)") {
  auto x = testutil::build_gf(ConstructionRecipe::grassmannian14());
  CHECK(x.size() == 5);
  CHECK(x.ring().names().front() == "p01");
  auto v = compute_invariants(x);
  CHECK(v.n == 6);
  CHECK(v.d == 5);
  CHECK(v.N == 9);
  CHECK(v.delta == 1);
}

TEST_CASE("linked threefold of rank 4") {
  auto x = testutil::build_gf(ConstructionRecipe::linked(4, 3));
  auto v = compute_invariants(x);
  CHECK(ExpectedInvariants{v.n, v.N, v.d, v.delta, v.g} == ExpectedInvariants{3, 5, 5, 2, 2});
  CHECK(is_smooth(x));
}

TEST_CASE("linked surface of rank 3 over Q in both spellings") {
  auto example = ConstructionRecipe::linked(3, 2, Spelling::kExample).with(FieldSpec::rationals(), 7);
  auto normal = ConstructionRecipe::linked(3, 2).with(FieldSpec::rationals(), 1);
  auto le = build_linked(example, RationalField());
  auto ln = build_linked(normal, RationalField());
  auto r = le.x.ring_ptr();
  CHECK(le.q == P(r, "x0^2 - x1^2 + x2^2"));
  CHECK(le.p.equals(Ideal<RationalField>(r, {P(r, "x0 - x1"), P(r, "x2")})));
  for (const auto* l : {&le, &ln}) {
    auto v = compute_invariants(l->x);
    CHECK(ExpectedInvariants{v.n, v.N, v.d, v.delta, v.g} == ExpectedInvariants{2, 4, 5, 2, 2});
    CHECK(unique_quadric(l->x).rank == 3);
    CHECK(is_smooth(l->x));
  }
}

TEST_CASE("build dispatches on the field") {
  auto q = build(ConstructionRecipe::rational_normal_curve().with(FieldSpec::rationals(), 1));
  CHECK(std::holds_alternative<Ideal<RationalField>>(q));
  auto p = build(ConstructionRecipe::rational_normal_curve().with(FieldSpec::prime(101), 1));
  REQUIRE(std::holds_alternative<Ideal<PrimeField>>(p));
  CHECK(std::get<Ideal<PrimeField>>(p).ring().field().modulus() == 101);
}

TEST_CASE("construction is reproducible and depends on the seed") {
  auto a = testutil::build_gf(ConstructionRecipe::linked(4, 2).with(FieldSpec::prime(32003), 3));
  auto b = testutil::build_gf(ConstructionRecipe::linked(4, 2).with(FieldSpec::prime(32003), 3));
  auto c = testutil::build_gf(ConstructionRecipe::linked(4, 2).with(FieldSpec::prime(32003), 4));
  CHECK(std::equal(a.generators().begin(), a.generators().end(), b.generators().begin(), b.generators().end()));
  CHECK_FALSE(a.equals(c));
}

TEST_CASE("corpus shape") {
  auto entries = corpus();
  CHECK(entries.size() >= 15);
  std::set<std::string> names;
  for (const auto& e : entries) {
    CHECK(names.insert(e.name).second);
    CHECK_NOTHROW(e.recipe.validate());
    CHECK(e.expected.d == 5);
  }
  auto find = [&](const std::string& name) {
    for (const auto& e : entries) {
      if (e.name == name) return e.expected;
    }
    FAIL("missing corpus entry " << name);
    return ExpectedInvariants{};
  };
  CHECK(find("plane quintic") == ExpectedInvariants{1, 2, 5, 3, 6});
  CHECK(find("curve section of G(1,4)") == ExpectedInvariants{1, 4, 5, 1, 1});
  CHECK(find("cone over rational normal quintic") == ExpectedInvariants{2, 6, 5, 0, 0});
}

TEST_CASE("property: every corpus entry has its expected invariants") {
  for (const auto& e : corpus()) {
    CAPTURE(e.name);
    auto v = std::visit([](const auto& i) { return compute_invariants(i); }, build(e.recipe));
    CHECK(ExpectedInvariants{v.n, v.N, v.d, v.delta, v.g} == e.expected);
  }
}

TEST_CASE("property: scrolls are nondegenerate with HF(1) = n + 5") {
  for (auto part : std::vector<std::vector<int>>{{5}, {2, 3}, {1, 4}, {1, 1, 3}, {1, 2, 2}, {1, 1, 1, 2}, {1, 1, 1, 1, 1}}) {
    auto v = compute_invariants(testutil::build_gf(ConstructionRecipe::scroll(part)));
    const int n = static_cast<int>(part.size());
    CHECK(v.nondegenerate);
    CHECK(v.hf.at(1) == n + 5);
    CHECK(v.N == n + 4);
    CHECK(v.delta == 0);
  }
}

TEST_CASE("property: minors vanish on parametrized scroll points") {
  PrimeField f = testutil::gf();
  Rng rng = make_rng(2024);
  for (auto part : std::vector<std::vector<int>>{{5}, {2, 3}, {1, 1, 3}, {1, 1, 1, 1, 1}}) {
    auto x = testutil::build_gf(ConstructionRecipe::scroll(part));
    for (int trial = 0; trial < 20; ++trial) {
      auto pt = scroll_point(f, part, rng);
      for (const auto& g : x.generators()) CHECK(evaluate(g, pt) == 0);
    }
  }
  auto rnc = testutil::build_gf(ConstructionRecipe::rational_normal_curve());
  for (int trial = 0; trial < 20; ++trial) {
    auto pt = scroll_point(f, {5}, rng);
    for (const auto& g : rnc.generators()) CHECK(evaluate(g, pt) == 0);
  }
}

TEST_CASE("property: Pluecker quadrics vanish on wedge coordinates") {
  PrimeField f = testutil::gf();
  Rng rng = make_rng(77);
  auto g = testutil::build_gf(ConstructionRecipe::grassmannian14());
  const auto& names = g.ring().names();
  int checked = 0;
  while (checked < 20) {
    auto m = Matrix<PrimeField>::random(f, 2, 5, rng);
    if (m.rank() != 2) continue;
    std::vector<PrimeField::Element> pt;
    for (const auto& name : names) {
      std::size_t i = name[1] - '0', j = name[2] - '0';
      pt.push_back(f.sub(f.mul(m(0, i), m(1, j)), f.mul(m(0, j), m(1, i))));
    }
    for (const auto& q : g.generators()) CHECK(evaluate(q, pt) == 0);
    ++checked;
  }
}
