#include "qatlas/classifier.hpp"

#include <iomanip>
#include <sstream>

#include "qatlas/geometry.hpp"

namespace qatlas {

namespace {

std::string boolstr(bool b) { return b ? "true" : "false"; }

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string value_text(const std::string& v) {
  bool plain = !v.empty() && v.find_first_of(" \t\"=") == std::string::npos;
  return plain ? v : quoted(v);
}

using Numbers = std::vector<std::pair<std::string, std::string>>;

class Builder {
 public:
  explicit Builder(ClassificationReport& rep) : rep_(rep) {}

  bool check(const std::string& claim, bool ok, Numbers numbers) {
    rep_.evidence.push_back({claim, ok ? "pass" : "fail", std::move(numbers)});
    return ok;
  }
  void info(const std::string& claim, Numbers numbers) { rep_.evidence.push_back({claim, "info", std::move(numbers)}); }
  void unclassified(const std::string& reason) {
    rep_.tag = CaseTag::of(CaseKind::kUnclassified);
    rep_.reason = reason;
  }

 private:
  ClassificationReport& rep_;
};

std::string num(long long v) { return std::to_string(v); }

template <class F>
void classify_linked(const Ideal<F>& ideal, const ClassifyOptions& options, ClassificationReport& rep, Builder& b) {
  const auto& inv = rep.invariants;
  if (!b.check("unique_quadric", inv.h0_I.at(2) == 1, {{"dim_I2", num(inv.h0_I.at(2))}})) {
    b.unclassified("dim I_2 = " + num(inv.h0_I.at(2)) + ", expected exactly one quadric");
    return;
  }
  const F& field = ideal.ring().field();
  Polynomial<F> q = graded_piece(ideal, 2).front().monic();
  std::optional<int> rank;
  if (field.characteristic() == 2) {
    rep.char_caveats.push_back("quadric rank undefined in characteristic 2; case reported without rank");
  } else {
    rank = quadric_info(q).rank;
    b.info("quadric_rank", {{"rank", num(*rank)}});
  }

  // A cubic of I outside (Q).
  auto cubics = graded_piece(ideal, 3);
  long long q_multiples = inv.N + 1;
  b.check("cubics_beyond_quadric", static_cast<long long>(cubics.size()) > q_multiples,
          {{"dim_I3", num(static_cast<long long>(cubics.size()))}, {"dim_Q_times_linear", num(q_multiples)}});
  Ideal<F> qideal(ideal.ring_ptr(), {q});
  Rng rng = make_rng(options.seed, 3);
  std::optional<Polynomial<F>> cubic;
  for (int attempt = 0; attempt < 8 && !cubic; ++attempt) {
    Polynomial<F> c(ideal.ring_ptr());
    for (const auto& e : cubics) c += e.scaled(field.random(rng));
    if (!c.is_zero() && !qideal.contains(c)) cubic = c.monic();
  }
  if (!cubic) {
    b.unclassified("no cubic of I_3 outside (Q) found");
    return;
  }

  Ideal<F> ci(ideal.ring_ptr(), {q, *cubic});
  Ideal<F> residual = saturate_irrelevant(ideal_colon(ci, ideal));
  LinkageReport link = verify_linkage(ideal, residual, q, *cubic);
  b.check("linkage_intersection", link.intersection_ok, {});
  b.check("linkage_degree_sum", link.degree_ok, {{"deg_x", num(link.degree_x)}, {"deg_residual", num(link.degree_p)}});
  bool linear = b.check("residual_linear_codim2", link.p_linear, {{"codim", num(link.p_codim)}});

  CohomologyReport bounds = check_cohomology_bounds(inv);
  for (const auto& row : bounds.rows) {
    Numbers nums;
    if (row.k) nums.push_back({"k", num(row.k)});
    nums.push_back({"lhs", num(row.lhs)});
    nums.push_back({"rhs", num(row.rhs)});
    b.check("bound_" + row.name, row.holds, nums);
  }

  bool smooth = is_smooth(ideal, inv.codim);
  rep.smooth = smooth;
  b.info("smooth", {{"smooth", boolstr(smooth)}});
  if (!linear || !link.passed()) {
    b.unclassified("liaison with a codimension-2 linear space failed");
    return;
  }
  if (rank && *rank != 3 && *rank != 4) {
    b.unclassified("quadric rank " + num(*rank) + " outside {3, 4}");
    return;
  }
  if (smooth) {
    bool ok = inv.n <= 3 && (inv.n != 3 || !rank || *rank == 4);
    if (!b.check("smooth_frontier", ok, {{"n", num(inv.n)}, {"rank", rank ? num(*rank) : "undefined"}})) {
      b.unclassified("smooth linked quintic beyond the smoothness frontier");
      return;
    }
  }
  rep.tag = rank ? CaseTag::linked(*rank) : CaseTag::of(CaseKind::kLinkedQuintic);
}

}  // namespace

std::string ClassificationReport::headline() const {
  std::ostringstream os;
  os << "case=" << to_string(tag.kind);
  switch (tag.kind) {
    case CaseKind::kHypersurface:
      os << " delta=" << invariants.delta;
      break;
    case CaseKind::kLinkedQuintic:
      if (tag.rank) os << " rank=" << *tag.rank;
      if (smooth) os << " smooth=" << boolstr(*smooth);
      break;
    case CaseKind::kConeSignature:
      if (tag.base) os << " base=" << to_string(*tag.base);
      break;
    case CaseKind::kUnclassified:
      os << " reason=" << quoted(reason);
      break;
    default:
      os << " n=" << invariants.n;
      break;
  }
  return os.str();
}

std::string ClassificationReport::to_machine() const {
  std::ostringstream os;
  const auto& inv = invariants;
  os << headline() << "\n";
  os << "seed=" << seed << "\n";
  os << "invariants " << inv.summary() << " codim=" << inv.codim << " nondegenerate=" << boolstr(inv.nondegenerate)
     << "\n";
  os << "h0_I";
  for (const auto& [m, v] : inv.h0_I) os << " m" << m << "=" << v;
  os << "\n";
  os << "hilbert_polynomial=" << quoted(inv.hilbert_polynomial) << "\n";
  for (std::size_t k = 0; k < inv.section_hf.size(); ++k) {
    os << "section k=" << k + 1 << " hf=";
    for (std::size_t t = 0; t < inv.section_hf[k].size(); ++t) os << (t ? "," : "") << inv.section_hf[k][t];
    os << "\n";
  }
  if (smooth) os << "smooth=" << boolstr(*smooth) << "\n";
  for (const auto& e : evidence) {
    os << "evidence claim=" << e.claim << " verdict=" << e.verdict;
    for (const auto& [k, v] : e.numbers) os << " " << k << "=" << value_text(v);
    os << "\n";
  }
  for (const auto& c : char_caveats) os << "caveat text=" << quoted(c) << "\n";
  for (const auto& w : warnings) os << "warning text=" << quoted(w) << "\n";
  return os.str();
}

std::string ClassificationReport::to_text() const {
  std::ostringstream os;
  const auto& inv = invariants;
  os << headline() << "\n";
  os << "case:       " << tag.to_string() << (reason.empty() ? "" : " -- " + reason) << "\n";
  os << "invariants: " << inv.summary() << " (codim " << inv.codim << ", "
     << (inv.nondegenerate ? "nondegenerate" : "degenerate") << ")\n";
  os << "HP(t):      " << inv.hilbert_polynomial << "\n";
  os << "dim I_m:    ";
  for (const auto& [m, v] : inv.h0_I) os << "m=" << m << ": " << v << "  ";
  os << "\n";
  if (smooth) os << "smooth:     " << (*smooth ? "yes" : "no") << "\n";
  os << "seed:       " << seed << "\n";
  os << "evidence:\n";
  for (const auto& e : evidence) {
    os << "  [" << e.verdict << "] " << e.claim;
    const char* sep = ": ";
    for (const auto& [k, v] : e.numbers) {
      os << sep << k << "=" << v;
      sep = ", ";
    }
    os << "\n";
  }
  for (const auto& c : char_caveats) os << "caveat: " << c << "\n";
  for (const auto& w : warnings) os << "warning: " << w << "\n";
  os << "note: h0(O_X(m)) is read as HF(S/I, m)\n";
  return os.str();
}

template <class F>
ClassificationReport classify(const Ideal<F>& input, const ClassifyOptions& options) {
  if (!input.is_homogeneous()) throw PreconditionError("classify needs a homogeneous ideal");
  if (input.is_unit()) throw PreconditionError("classify needs a proper ideal");
  ClassificationReport rep;
  rep.seed = options.seed;
  Builder b(rep);
  Ideal<F> ideal = ensure_saturated(input, rep.warnings);
  rep.invariants = compute_invariants(ideal, options.invariant_options());
  const auto& inv = rep.invariants;
  for (const auto& w : inv.warnings) rep.warnings.push_back(w);
  if (inv.d != 5) throw PreconditionError("classify needs a degree-5 scheme, got degree " + num(inv.d));
  b.check("degree_is_5", true, {{"d", num(inv.d)}});

  long long star = inv.delta + inv.N - inv.n;
  if (!b.check("delta_genus_identity", star == 4,
               {{"delta", num(inv.delta)}, {"N", num(inv.N)}, {"n", num(inv.n)}, {"sum", num(star)}})) {
    b.unclassified("outside the linearly normal very-ample setting: delta + N - n = " + num(star));
    return rep;
  }

  if (inv.delta == 3) {
    if (b.check("codim_1", inv.codim == 1, {{"codim", num(inv.codim)}})) rep.tag = CaseTag::of(CaseKind::kHypersurface);
    else b.unclassified("delta = 3 but codim " + num(inv.codim));
    return rep;
  }

  auto vertex = unused_variables(ideal);
  if (!vertex.empty()) {
    std::string names;
    for (auto v : vertex) names += (names.empty() ? "" : ",") + ideal.ring().name(v);
    b.info("visible_vertex", {{"variables", names}, {"s", num(static_cast<long long>(vertex.size()))}});
    Ideal<F> base = drop_unused_variables(ideal);
    if (hilbert_polynomial(base, options.budget).dimension < 1) {
      b.unclassified("cone over a zero-dimensional base");
      return rep;
    }
    ClassificationReport inner = classify(base, options);
    b.info("cone_base", {{"case", inner.tag.to_string()}, {"invariants", inner.invariants.summary()}});
    if (inner.tag.kind == CaseKind::kUnclassified) {
      b.unclassified("cone over an unclassified base: " + inner.reason);
    } else {
      CaseKind base_kind = inner.tag.kind == CaseKind::kConeSignature ? *inner.tag.base : inner.tag.kind;
      rep.tag = CaseTag::cone(base_kind);
    }
    return rep;
  }

  if (inv.delta <= 1) {
    bool smooth = is_smooth(ideal, inv.codim);
    rep.smooth = smooth;
    b.info("smooth", {{"smooth", boolstr(smooth)}});
    if (inv.delta == 0) {
      if (!b.check("genus_matches_delta", inv.g == 0, {{"g", num(inv.g)}})) {
        b.unclassified("delta = 0 with g = " + num(inv.g));
      } else if (smooth) {
        rep.tag = CaseTag::of(CaseKind::kDeltaLE1Scroll);
      } else {
        rep.tag = CaseTag::cone(CaseKind::kDeltaLE1Scroll);
      }
      return rep;
    }
    if (!b.check("genus_matches_delta", inv.g == 1, {{"g", num(inv.g)}})) {
      b.unclassified("delta = 1 with g = " + num(inv.g));
      return rep;
    }
    if (inv.codim == 3) {
      if (!b.check("five_quadrics", inv.h0_I.at(2) == 5, {{"dim_I2", num(inv.h0_I.at(2))}})) {
        b.unclassified("codim 3, delta 1 but dim I_2 = " + num(inv.h0_I.at(2)));
        return rep;
      }
    }
    bool grassmann = inv.n == 1 || inv.n == 6;
    rep.tag = CaseTag::of(grassmann ? CaseKind::kDeltaLE1GrassmannSection : CaseKind::kDeltaLE1DelPezzo);
    return rep;
  }

  // delta == 2
  if (inv.g == 1 && inv.n == 2) {
    rep.tag = CaseTag::of(CaseKind::kEllipticScrollSignature);
    b.info("elliptic_scroll_signature", {{"n", num(inv.n)}, {"delta", num(inv.delta)}, {"g", num(inv.g)}});
    rep.char_caveats.push_back("signature only: the P1-bundle structure over an elliptic curve is not verified");
    return rep;
  }
  if (inv.g == 2 && inv.N == inv.n + 2) {
    classify_linked(ideal, options, rep, b);
    return rep;
  }
  b.unclassified("delta = 2 with (n, N, g) = (" + num(inv.n) + ", " + num(inv.N) + ", " + num(inv.g) + ")");
  return rep;
}

ClassificationReport classify(const AnyIdeal& ideal, const ClassifyOptions& options) {
  return std::visit([&](const auto& i) { return classify(i, options); }, ideal);
}

std::size_t CrossCheckSummary::agreements() const {
  std::size_t n = 0;
  for (const auto& r : rows) n += r.ok();
  return n;
}

std::vector<std::string> CrossCheckSummary::mismatches() const {
  std::vector<std::string> out;
  for (const auto& r : rows) {
    if (!r.ok()) out.push_back(r.name);
  }
  return out;
}

std::string CrossCheckSummary::table() const {
  std::ostringstream os;
  for (const auto& r : rows) {
    os << std::left << std::setw(48) << r.name << " " << std::setw(34) << r.got.to_string() << " "
       << r.got_invariants.to_string() << " " << (r.ok() ? "ok" : "MISMATCH (expected " + r.expected.to_string() + " " +
                                                                       r.expected_invariants.to_string() + ")")
       << "\n";
  }
  os << "agreement: " << agreements() << "/" << rows.size() << "\n";
  return os.str();
}

CrossCheckSummary cross_check_theorem(const std::vector<CorpusEntry>& entries, const ClassifyOptions& options) {
  CrossCheckSummary summary;
  for (const auto& e : entries) {
    ClassifyOptions opts = options;
    opts.seed = e.recipe.seed;
    ClassificationReport rep = classify(build(e.recipe), opts);
    const auto& inv = rep.invariants;
    CrossCheckRow row;
    row.name = e.name;
    row.expected = e.tag;
    row.got = rep.tag;
    row.expected_invariants = e.expected;
    row.got_invariants = {inv.n, inv.N, inv.d, inv.delta, inv.g};
    row.case_match = row.expected == row.got;
    row.invariants_match = row.expected_invariants == row.got_invariants;
    summary.rows.push_back(std::move(row));
  }
  return summary;
}

template ClassificationReport classify(const Ideal<PrimeField>&, const ClassifyOptions&);
template ClassificationReport classify(const Ideal<RationalField>&, const ClassifyOptions&);

}  // namespace qatlas
