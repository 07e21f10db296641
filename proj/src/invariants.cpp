#include "qatlas/invariants.hpp"

#include <sstream>

namespace qatlas {

std::string VarietyInvariants::summary() const {
  std::ostringstream os;
  os << "n=" << n << " N=" << N << " d=" << d << " delta=" << delta << " g=" << g;
  return os.str();
}

template <class F>
Ideal<F> ensure_saturated(const Ideal<F>& ideal, std::vector<std::string>& warnings) {
  if (is_saturated(ideal)) return ideal;
  warnings.push_back("input ideal is not saturated; replaced by its saturation");
  return saturate_irrelevant(ideal);
}

template <class F>
VarietyInvariants compute_invariants(const Ideal<F>& ideal, const InvariantOptions& options) {
  if (!ideal.is_homogeneous()) throw PreconditionError("invariants need a homogeneous ideal");
  if (ideal.is_unit()) throw PreconditionError("invariants of the unit ideal are undefined");
  VarietyInvariants inv;
  inv.seed = options.seed;
  Ideal<F> sat = ensure_saturated(ideal, inv.warnings);
  inv.input_saturated = inv.warnings.empty();

  HilbertData h = hilbert_polynomial(sat, options.budget);
  if (h.dimension < 1) throw PreconditionError("invariants need a scheme of dimension >= 1");
  inv.n = h.dimension;
  inv.N = static_cast<int>(sat.ring().nvars()) - 1;
  inv.d = h.degree;
  inv.codim = inv.N - inv.n;
  inv.hilbert_polynomial = h.hp_to_string();
  for (int t = 0; t <= 3; ++t) inv.hf.push_back(h.hf(t));
  for (int m = 1; m <= 3; ++m) inv.h0_I[m] = binomial(m + inv.N, inv.N) - inv.hf[m];
  inv.nondegenerate = inv.h0_I[1] == 0;
  inv.delta = inv.n + inv.d - inv.hf[1];

  inv.section_hf.assign(inv.n, {});
  inv.section_hf[inv.n - 1] = inv.hf;
  Ideal<F> cur = sat;
  for (int k = inv.n - 1; k >= 1; --k) {
    auto cut = hyperplane_slice(cur, options.seed + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(k),
                                options.slice_retries, options.budget);
    inv.slice_attempts.push_back(cut.attempts);
    cur = std::move(cut.ideal);
    auto hf = hilbert_function(cur, 3);
    inv.section_hf[k - 1] = hf.hf_values;
  }
  HilbertData curve = hilbert_polynomial(cur, options.budget);
  mpq_class genus = 1 - curve.hp(0);
  if (genus.get_den() != 1) throw PreconditionError("curve section has a non-integral genus");
  inv.g = genus.get_num().get_si();
  return inv;
}

bool CohomologyReport::passed() const {
  if (!applicable) return false;
  for (const auto& r : rows) {
    if (!r.holds) return false;
  }
  return true;
}

std::string CohomologyReport::to_string() const {
  if (!applicable) return "n/a (" + reason + ")";
  std::ostringstream os;
  for (const auto& r : rows) {
    os << r.name;
    if (r.k) os << "[k=" << r.k << "]";
    bool upper = r.name == "alpha" || r.name == "beta";
    os << ": " << r.lhs << (upper ? " <= " : " >= ") << r.rhs << (r.holds ? " pass" : " FAIL") << "\n";
  }
  return os.str();
}

CohomologyReport check_cohomology_bounds(const VarietyInvariants& inv) {
  CohomologyReport rep;
  if (inv.d != 5 || inv.delta != 2 || inv.g != 2) {
    rep.reason = "needs d=5 delta=2 g=2, have " + inv.summary();
    return rep;
  }
  rep.applicable = true;
  const auto& curve = inv.section_hf[0];
  long long h1 = curve[1], h2 = curve[2], h3 = curve[3];
  auto alpha = [&](long long k) { return k * (k - 1) / 2 + (k - 1) * h1 + h2; };
  auto beta = [&](long long k) { return k * (k * k - 1) / 6 + k * (k - 1) / 2 * h1 + (k - 1) * h2 + h3; };
  for (int k = 1; k <= inv.n; ++k) {
    const auto& hf = inv.section_hf[k - 1];
    rep.rows.push_back({"alpha", k, hf[2], alpha(k), hf[2] <= alpha(k)});
    rep.rows.push_back({"beta", k, hf[3], beta(k), hf[3] <= beta(k)});
  }
  long long n = inv.n;
  long long quad_bound = binomial(n + 4, 2) - alpha(n);
  long long cubic_bound = binomial(n + 5, 3) - beta(n);
  rep.rows.push_back({"diamond_bound", 0, quad_bound, 1, quad_bound >= 1});
  rep.rows.push_back({"diamond'_bound", 0, cubic_bound, n + 5, cubic_bound >= n + 5});
  long long i2 = inv.h0_I.at(2), i3 = inv.h0_I.at(3);
  rep.rows.push_back({"diamond", 0, i2, 1, i2 >= 1});
  rep.rows.push_back({"diamond'", 0, i3, n + 5, i3 >= n + 5});
  return rep;
}

template Ideal<PrimeField> ensure_saturated(const Ideal<PrimeField>&, std::vector<std::string>&);
template Ideal<RationalField> ensure_saturated(const Ideal<RationalField>&, std::vector<std::string>&);
template VarietyInvariants compute_invariants(const Ideal<PrimeField>&, const InvariantOptions&);
template VarietyInvariants compute_invariants(const Ideal<RationalField>&, const InvariantOptions&);

}  // namespace qatlas
