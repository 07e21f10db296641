#include <doctest.h>

#include "qatlas/hilbert.hpp"
#include "qatlas/ideal_ops.hpp"
#include "support/macaulay_oracle.hpp"
#include "support/test_util.hpp"

using namespace qatlas;
using testutil::I;
using testutil::P;

namespace {

template <class F>
GroebnerBasis<F> gb_of(const RingPtr<F>& r, std::initializer_list<const char*> gens) {
  return I(r, gens).groebner();
}

}  // namespace

TEST_CASE("normal form") {
  auto r = testutil::ring(4);
  auto gb = gb_of(r, {"x0", "x1"});
  CHECK(normal_form(P(r, "x0*x2 + x1*x3"), gb).is_zero());
  CHECK(normal_form(P(r, "x2^2"), gb) == P(r, "x2^2"));
  CHECK(normal_form(P(r, "x0*x2 + x2^2 + 3*x1"), gb) == P(r, "x2^2"));
}

TEST_CASE("normal form rejects a ring with another order") {
  auto r = testutil::ring(3);
  auto gb = gb_of(r, {"x0 + x1"});
  auto lex = r->with_order(MonomialOrder::lex());
  CHECK_THROWS_AS(normal_form(P(lex, "x0"), gb), RingMismatch);
}

TEST_CASE("unique quadric of the linked quintic reduces to zero") {
  auto recipe = ConstructionRecipe::linked(4, 3);
  auto link = build_linked(recipe, testutil::gf());
  const auto& x = link.x;
  const long long nmon = binomial(static_cast<long long>(x.ring().nvars()) + 1, 2);
  CHECK(nmon - oracle::macaulay_hf(x, 2) == 1);  // dim I_2 by the Macaulay matrix
  CHECK(normal_form(link.q, x.groebner()).is_zero());
}

TEST_CASE("principal ideal is its own basis") {
  auto r = testutil::ring(4);
  auto gb = gb_of(r, {"x0*x2 + x1*x3"});
  REQUIRE(gb.size() == 1);
  CHECK(gb.generators()[0] == P(r, "x0*x2 + x1*x3"));
  CHECK(gb.is_reduced());
}

TEST_CASE("twisted cubic") {
  auto r = testutil::ring(4);
  auto tc = I(r, {"x0*x2 - x1^2", "x0*x3 - x1*x2", "x1*x3 - x2^2"});
  const auto& gb = tc.groebner();
  CHECK(gb.size() == 3);
  CHECK(satisfies_buchberger_criterion(gb));
  CHECK(is_reduced_basis(gb));
  CHECK(hilbert_function(tc, 2).hf_values[2] == 7);
  CHECK(oracle::macaulay_hf(tc, 2) == 7);
}

TEST_CASE("Pluecker quadrics form a 5-element reduced basis") {
  auto g = testutil::build_gf(ConstructionRecipe::grassmannian14());
  const auto& gb = g.groebner();
  CHECK(gb.size() == 5);
  CHECK(satisfies_buchberger_criterion(gb));
  CHECK(is_reduced_basis(gb));
}

TEST_CASE("empty input gives the zero ideal") {
  auto r = testutil::ring(2);
  std::vector<Polynomial<PrimeField>> none;
  auto gb = buchberger(r, std::span<const Polynomial<PrimeField>>(none));
  CHECK(gb.size() == 0);
  CHECK_FALSE(gb.contains(P(r, "x0")));
}

TEST_CASE("unit ideal") {
  auto r = testutil::ring(2);
  CHECK(I(r, {"x0", "x0 + 1"}).is_unit());
  CHECK_FALSE(I(r, {"x0", "x1"}).is_unit());
}

TEST_CASE("over the rationals") {
  auto r = testutil::qring(3);
  auto gb = gb_of(r, {"2*x0^2 - x1*x2", "1/3*x0*x1 + x2^2"});
  CHECK(satisfies_buchberger_criterion(gb));
  CHECK(is_reduced_basis(gb));
  CHECK(gb.contains(P(r, "x0^2 - 1/2*x1*x2")));
}

TEST_CASE("eliminate") {
  auto r = testutil::ring(3);
  CHECK(eliminate(I(r, {"x0 - x1"}), 1).is_zero());

  auto e = eliminate(I(r, {"x0", "x1*x2"}), 1);
  CHECK(e.ring().nvars() == 2);
  REQUIRE(e.size() == 1);
  CHECK(e.generators()[0] == P(e.ring_ptr(), "x1*x2"));

  CHECK_THROWS_AS(eliminate(I(r, {"x0"}), 4), PreconditionError);
}

TEST_CASE("eliminate: projecting the twisted cubic from a point on it gives a conic") {
  // x3 moved to the front so it is the eliminated variable
  auto r = Ring<PrimeField>::make({"x3", "x0", "x1", "x2"}, testutil::gf());
  auto tc = I(r, {"x0*x2 - x1^2", "x0*x3 - x1*x2", "x1*x3 - x2^2"});
  auto conic = eliminate(tc, 1);
  auto hp = hilbert_polynomial(conic);
  CHECK(hp.dimension == 1);
  CHECK(hp.degree == 2);
  CHECK(conic.contains(P(conic.ring_ptr(), "x0*x2 - x1^2")));
}

TEST_CASE("property: idempotence on reduced bases") {
  for (auto recipe : {ConstructionRecipe::grassmannian14(), ConstructionRecipe::scroll({1, 1, 3}),
                      ConstructionRecipe::linked(3, 3)}) {
    auto x = testutil::build_gf(recipe);
    const auto& gb = x.groebner();
    auto again = buchberger(x.ring_ptr(), gb.generators());
    CHECK(std::equal(gb.generators().begin(), gb.generators().end(), again.generators().begin(),
                     again.generators().end()));
  }
}

TEST_CASE("property: membership does not depend on the order") {
  auto x = testutil::build_gf(ConstructionRecipe::linked(4, 2));
  auto lex_ring = x.ring().with_order(MonomialOrder::lex());
  std::vector<Polynomial<PrimeField>> moved;
  for (const auto& g : x.generators()) moved.push_back(g.in_ring(lex_ring));
  Ideal<PrimeField> xl(lex_ring, moved);
  Rng rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    Polynomial<PrimeField> p(x.ring_ptr());
    for (const auto& g : x.generators()) p += g * random_form(x.ring_ptr(), 1, rng);
    if (trial % 2) p += random_form(x.ring_ptr(), 3, rng);
    bool in_grevlex = x.contains(p);
    CHECK(in_grevlex == xl.contains(p.in_ring(lex_ring)));
    if (trial % 2 == 0) CHECK(in_grevlex);
  }
}

TEST_CASE("truncated basis is exact below the cut") {
  auto g = testutil::build_gf(ConstructionRecipe::scroll({2, 3}));
  auto full = g.groebner();
  BuchbergerOptions opts;
  opts.max_degree = 2;
  auto trunc = buchberger(g.ring_ptr(), g.generators(), g.ring().order(), opts);
  CHECK(trunc.truncated_at() == 2);
  for (const auto& m : full.leading_monomials()) {
    if (m.degree() <= 2) {
      auto lm = trunc.leading_monomials();
      CHECK(std::find(lm.begin(), lm.end(), m) != lm.end());
    }
  }
}

TEST_CASE("statistics are populated") {
  auto g = testutil::build_gf(ConstructionRecipe::grassmannian14());
  auto gb = buchberger(g.ring_ptr(), g.generators());
  CHECK(gb.stats().pairs_generated > 0);
  CHECK(gb.stats().reductions > 0);
  CHECK_FALSE(gb.stats().to_string().empty());
}
