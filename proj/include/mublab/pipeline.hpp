#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "mublab/grouplab.hpp"
#include "mublab/mub.hpp"

namespace mublab {

/// Group-theoretic profile of one MCC: closure invariants of A(U) plus the
/// scaling-invariant fingerprint.
struct AnalysisReport {
  int dimension = 0;
  int num_classes = 0;
  bool closure_cap_exceeded = false;
  std::uint64_t order = 0;  // valid when !closure_cap_exceeded
  std::optional<std::uint64_t> exponent;
  std::optional<std::uint64_t> center_order;
  std::optional<int> nilpotence_class;  // -1 encodes not-nilpotent at depth
  HeightResult height;
  MccFingerprint fingerprint;

  bool cap_exceeded_anywhere() const;
};

// Symbolic inputs run the exact closure for the group fields; numeric inputs
// run the hashed closure. The fingerprint always uses projective mode.
AnalysisReport analyze_mcc(const SymbolicMcc& u, std::size_t cap,
                           const ToleranceConfig& cfg = {});
AnalysisReport analyze_mcc(const NumericMcc& u, std::size_t cap,
                           const ToleranceConfig& cfg = {});

/// Pipeline evidence that beta is not injective: the Pauli-derived MCC of the
/// Desarguesian spread and the alpha image of its MUB set map to the same
/// maximal MUB yet carry different scaling-invariant fingerprints.
struct BetaNonInjectivityReport {
  int d = 0;
  int N = 0;
  int dimension = 0;
  bool mub_images_equal = false;
  NonIsomorphismCertificate certificate;

  bool ok() const { return mub_images_equal && certificate.conclusive; }
};

// Requires an odd prime d, N >= 2, d^N <= 9 (the order-multiset gap needs odd
// characteristic and N > 1). Throws std::invalid_argument otherwise.
BetaNonInjectivityReport demo_beta_noninjective(int d, int N, std::size_t cap,
                                                const ToleranceConfig& cfg = {});

}  // namespace mublab
