#include <doctest.h>

#include "qatlas/geometry.hpp"
#include "qatlas/groebner.hpp"
#include "qatlas/invariants.hpp"
#include "support/macaulay_oracle.hpp"
#include "support/test_util.hpp"

// Corpus-wide properties. Each test visits every entry, so the field type is
// left generic.

using namespace qatlas;

namespace {

template <class Fn>
void for_each_corpus_ideal(Fn fn) {
  for (const auto& e : corpus()) {
    CAPTURE(e.name);
    std::visit([&](const auto& ideal) { fn(e, ideal); }, build(e.recipe));
  }
}

ExpectedInvariants tuple_of(const VarietyInvariants& v) { return {v.n, v.N, v.d, v.delta, v.g}; }

}  // namespace

TEST_CASE("property: every basis passes the Buchberger criterion") {
  for_each_corpus_ideal([](const CorpusEntry&, const auto& ideal) {
    const auto& gb = ideal.groebner();
    CHECK(satisfies_buchberger_criterion(gb));
    CHECK(is_reduced_basis(gb));
    // recheck the S-pairs directly instead of trusting the criterion helper
    const auto& g = gb.generators();
    for (std::size_t i = 0; i < g.size(); ++i) {
      for (std::size_t j = i + 1; j < g.size(); ++j) CHECK(gb.normal_form(s_polynomial(g[i], g[j])).is_zero());
    }
    for (const auto& f : ideal.generators()) CHECK(gb.contains(f));
  });
}

TEST_CASE("property: the delta identity holds for nondegenerate quintics") {
  for_each_corpus_ideal([](const CorpusEntry&, const auto& ideal) {
    auto v = compute_invariants(ideal);
    REQUIRE(v.nondegenerate);
    CHECK(v.d == 5);
    CHECK(v.hf.at(1) == v.N + 1);
    CHECK(v.delta + v.N - v.n == v.d - 1);
  });
}

TEST_CASE("property: a random linear change keeps the Hilbert function") {
  Rng rng = make_rng(31);
  for_each_corpus_ideal([&](const CorpusEntry&, const auto& ideal) {
    const auto& f = ideal.ring().field();
    using F = std::decay_t<decltype(f)>;
    auto m = Matrix<F>::random_invertible(f, ideal.ring().nvars(), rng);
    auto h = linear_change(ideal, m);
    auto a = hilbert_function(ideal, 5).hf_values;
    auto b = hilbert_function(h, 5).hf_values;
    CHECK(a == b);
  });
}

TEST_CASE("property: saturation by iterated colons agrees with the linear form route") {
  for_each_corpus_ideal([](const CorpusEntry&, const auto& ideal) {
    using I = std::decay_t<decltype(ideal)>;
    auto m = I::irrelevant(ideal.ring_ptr());
    auto padded = ideal_product(ideal, m);
    auto slow = saturate(padded, m);
    auto fast = saturate_irrelevant(padded);
    CHECK(slow.ideal.equals(fast));
    CHECK(fast.equals(ideal));
    CHECK(slow.iterations >= 2);
  });
}

TEST_CASE("property: a slice drops the dimension and keeps the degree") {
  for_each_corpus_ideal([](const CorpusEntry& e, const auto& ideal) {
    if (e.expected.n < 2) return;
    auto v = compute_invariants(ideal);
    auto s = hyperplane_slice(ideal, 3);
    auto w = compute_invariants(s.ideal);
    CHECK(w.n == v.n - 1);
    CHECK(w.N == v.N - 1);
    CHECK(w.d == v.d);
    CHECK(w.delta <= v.delta);
    CHECK(w.g == v.g);
  });
}

TEST_CASE("property: cones shift n and N and keep d and delta") {
  for_each_corpus_ideal([](const CorpusEntry& e, const auto& ideal) {
    if (e.expected.N > 6) return;  // keeps the cone rings small
    auto v = compute_invariants(ideal);
    for (int s : {1, 2}) {
      if (e.expected.N + s > 7) continue;
      auto c = compute_invariants(cone_over(ideal, s));
      CHECK(tuple_of(c) == ExpectedInvariants{v.n + s, v.N + s, v.d, v.delta, v.g});
      CHECK(drop_unused_variables(cone_over(ideal, s)).equals(drop_unused_variables(ideal)));
    }
  });
}

TEST_CASE("property: the quadric rank survives coordinate changes") {
  Rng rng = make_rng(71);
  for (const auto& e : corpus()) {
    if (e.tag.kind != CaseKind::kLinkedQuintic || !e.tag.rank) continue;
    CAPTURE(e.name);
    std::visit(
        [&](const auto& ideal) {
          const auto& f = ideal.ring().field();
          using F = std::decay_t<decltype(f)>;
          for (int trial = 0; trial < 10; ++trial) {
            auto m = Matrix<F>::random_invertible(f, ideal.ring().nvars(), rng);
            CHECK(unique_quadric(linear_change(ideal, m)).rank == *e.tag.rank);
          }
        },
        build(e.recipe));
  }
}

TEST_CASE("property: Gröbner Hilbert function matches the Macaulay oracle") {
  for_each_corpus_ideal([](const CorpusEntry&, const auto& ideal) {
    auto hd = hilbert_function(ideal, 4);
    for (int t = 0; t <= 4; ++t) CHECK(hd.hf_values[t] == oracle::macaulay_hf(ideal, t));
  });
}
