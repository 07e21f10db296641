#ifndef QATLAS_CLASSIFIER_HPP
#define QATLAS_CLASSIFIER_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qatlas/cases.hpp"
#include "qatlas/constructors.hpp"
#include "qatlas/invariants.hpp"

namespace qatlas {

struct EvidenceRow {
  std::string claim;    // identifier, e.g. "delta_genus_identity"
  std::string verdict;  // "pass", "fail" or "info"
  std::vector<std::pair<std::string, std::string>> numbers;
};

struct ClassificationReport {
  VarietyInvariants invariants;
  CaseTag tag;
  std::string reason;  // for Unclassified
  std::optional<bool> smooth;
  std::vector<EvidenceRow> evidence;
  std::vector<std::string> char_caveats;
  std::vector<std::string> warnings;
  std::uint64_t seed = 0;

  /// "case=LinkedQuintic rank=4 smooth=true", "case=Hypersurface delta=3", ...
  std::string headline() const;
  std::string to_text() const;
  /// One key=value line per fact and per evidence row.
  std::string to_machine() const;
};

struct ClassifyOptions {
  std::uint64_t seed = 1;
  int budget = kDefaultDegreeBudget;
  int slice_retries = kDefaultSliceRetries;
  InvariantOptions invariant_options() const { return {seed, budget, slice_retries}; }
};

/// Decision tree over the invariants. Throws PreconditionError for
/// inhomogeneous or unit input and for degree != 5.
template <class F>
ClassificationReport classify(const Ideal<F>& ideal, const ClassifyOptions& options = {});

ClassificationReport classify(const AnyIdeal& ideal, const ClassifyOptions& options = {});

struct CrossCheckRow {
  std::string name;
  CaseTag expected;
  CaseTag got;
  ExpectedInvariants expected_invariants;
  ExpectedInvariants got_invariants;
  bool case_match = false;
  bool invariants_match = false;
  bool ok() const { return case_match && invariants_match; }
};

struct CrossCheckSummary {
  std::vector<CrossCheckRow> rows;
  std::size_t agreements() const;
  bool all_agree() const { return agreements() == rows.size(); }
  std::vector<std::string> mismatches() const;
  std::string table() const;
};

/// Builds and classifies every entry; the seed of each entry's recipe drives its run.
CrossCheckSummary cross_check_theorem(const std::vector<CorpusEntry>& entries, const ClassifyOptions& options = {});

}  // namespace qatlas

#endif
