#ifndef QATLAS_CASES_HPP
#define QATLAS_CASES_HPP

#include <optional>
#include <string>

namespace qatlas {

enum class CaseKind {
  kHypersurface,
  kDeltaLE1Scroll,
  kDeltaLE1GrassmannSection,
  kDeltaLE1DelPezzo,
  kEllipticScrollSignature,
  kLinkedQuintic,
  kConeSignature,
  kUnclassified,
};

std::string to_string(CaseKind kind);

/// A case label with its qualifier: the quadric rank for linked quintics,
/// the base case for cones.
struct CaseTag {
  CaseKind kind = CaseKind::kUnclassified;
  std::optional<int> rank;
  std::optional<CaseKind> base;

  static CaseTag of(CaseKind k) { return {k, std::nullopt, std::nullopt}; }
  static CaseTag linked(int r) { return {CaseKind::kLinkedQuintic, r, std::nullopt}; }
  static CaseTag cone(CaseKind b) { return {CaseKind::kConeSignature, std::nullopt, b}; }

  /// "LinkedQuintic(rank=4)", "ConeSignature(DeltaLE1_Scroll)", "Hypersurface"
  std::string to_string() const;
  bool operator==(const CaseTag&) const = default;
};

}  // namespace qatlas

#endif
