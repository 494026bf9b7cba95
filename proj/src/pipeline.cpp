#include "mublab/pipeline.hpp"

#include <numeric>
#include <stdexcept>

namespace mublab {

bool AnalysisReport::cap_exceeded_anywhere() const {
  bool multiset_capped = false;
  for (std::int64_t o : fingerprint.projective_orders) multiset_capped |= o < 0;
  return closure_cap_exceeded || height.unbounded_at_cap || fingerprint.closure_cap_exceeded ||
         multiset_capped;
}

namespace {

AnalysisReport analyze_from_closure(const GroupClosure& g, const NumericMcc& numeric,
                                    int num_classes, std::size_t cap,
                                    const ToleranceConfig& cfg) {
  AnalysisReport report;
  report.dimension = numeric.dimension;
  report.num_classes = num_classes;
  report.closure_cap_exceeded = g.cap_exceeded();
  if (!g.cap_exceeded()) {
    GroupInvariants inv = group_invariants(g);
    report.order = inv.order;
    report.exponent = inv.exponent;
    report.center_order = inv.center_order;
    SeriesReport series = lower_central_series(g);
    report.nilpotence_class =
        series.kind == SeriesReport::Kind::Nilpotent ? series.nilpotence_class : -1;
  }
  HeightResult h;
  h.elements_found = g.size();
  h.unbounded_at_cap = g.cap_exceeded();
  if (!g.cap_exceeded()) {
    std::uint64_t den = static_cast<std::uint64_t>(numeric.dimension) * numeric.dimension;
    std::uint64_t common = std::gcd(static_cast<std::uint64_t>(g.size()), den);
    h.num = g.size() / common;
    h.den = den / common;
    h.integral = h.den == 1;
  }
  report.height = h;
  report.fingerprint = fingerprint(numeric, cap, cfg);
  return report;
}

}  // namespace

AnalysisReport analyze_mcc(const SymbolicMcc& u, std::size_t cap, const ToleranceConfig& cfg) {
  MccValidation check = validate_mcc(u);
  if (!check.ok()) throw std::invalid_argument("analyze requires a valid MCC: " + check.first_failure);
  std::vector<PauliElement> gens;
  for (const auto& cls : u.classes) gens.insert(gens.end(), cls.begin(), cls.end());
  GroupClosure g = closure(gens, cap);
  return analyze_from_closure(g, to_numeric(u), static_cast<int>(u.classes.size()), cap, cfg);
}

AnalysisReport analyze_mcc(const NumericMcc& u, std::size_t cap, const ToleranceConfig& cfg) {
  MccValidation check = validate_mcc(u, cfg);
  if (!check.ok()) throw std::invalid_argument("analyze requires a valid MCC: " + check.first_failure);
  std::vector<ComplexMatrix> gens;
  for (const auto& cls : u.classes) gens.insert(gens.end(), cls.begin(), cls.end());
  GroupClosure g = closure(gens, ClosureMode::NumericHashed, cap, cfg);
  return analyze_from_closure(g, u, static_cast<int>(u.classes.size()), cap, cfg);
}

BetaNonInjectivityReport demo_beta_noninjective(int d, int N, std::size_t cap,
                                                const ToleranceConfig& cfg) {
  if (!is_prime(d) || d == 2) {
    throw std::invalid_argument("the order-multiset argument needs an odd prime d");
  }
  if (N < 2) throw std::invalid_argument("N must be >= 2 (single-qudit orders do not separate)");
  std::int64_t dim = 1;
  for (int i = 0; i < N; ++i) dim *= d;
  if (dim > 9) throw std::invalid_argument("demo is limited to d^N <= 9");

  BetaNonInjectivityReport report;
  report.d = d;
  report.N = N;
  report.dimension = static_cast<int>(dim);

  Spread spread = desarguesian_spread(d, N);
  NumericMcc pauli_mcc = to_numeric(gamma_inverse(spread));
  MubSet mub = beta(pauli_mcc, cfg);
  NumericMcc alpha_mcc = alpha(mub, cfg);
  report.mub_images_equal = mub_equal(beta(alpha_mcc, cfg), mub, cfg);
  report.certificate = certify_nonisomorphic(pauli_mcc, alpha_mcc, cap, cfg);
  return report;
}

}  // namespace mublab
