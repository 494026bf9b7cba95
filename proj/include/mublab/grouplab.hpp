#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mublab/matcore.hpp"
#include "mublab/mcc.hpp"
#include "mublab/pauli.hpp"

namespace mublab {

enum class ClosureMode { ExactSymbolic, NumericHashed, NumericProjective };

inline constexpr std::size_t kDefaultClosureCap = 1'000'000;

// Matrix-equality tolerance used by the closure machinery (distinct elements
// of every group in scope are separated by >= 0.1 per entry).
inline constexpr double kClosureEqTol = 1e-8;

namespace detail {

/// Deduplicating store of dense complex matrices, bucketed by entries rounded
/// to a fixed grid; equality is confirmed at max-entry distance < eq_tol, and
/// lookups probe neighbor buckets for entries near a rounding boundary.
class MatrixStore {
 public:
  MatrixStore(int dim, double grid, double eq_tol);

  std::size_t size() const { return count_; }
  int dim() const { return dim_; }
  std::optional<std::uint32_t> find(const ComplexMatrix& m) const;
  std::uint32_t insert(const ComplexMatrix& m);  // caller guarantees absence
  ComplexMatrix get(std::uint32_t idx) const;

 private:
  static constexpr std::size_t kChunk = 2048;

  const Complex* data(std::uint32_t idx) const;
  Complex* data(std::uint32_t idx);
  std::vector<std::int64_t> quantize(const ComplexMatrix& m) const;

  int dim_;
  double grid_;
  double eq_tol_;
  std::size_t per_;
  std::size_t count_ = 0;
  std::vector<std::unique_ptr<Complex[]>> chunks_;
  std::multimap<std::uint64_t, std::uint32_t> index_;
};

}  // namespace detail

/// BFS closure of a generating set under multiplication, in one of three
/// element models: exact symbolic Pauli tuples, hashed numeric matrices, or
/// numeric matrices modulo scalars (phase-canonicalized representatives).
class GroupClosure {
 public:
  ClosureMode mode() const { return mode_; }
  std::size_t cap() const { return cap_; }
  bool cap_exceeded() const { return cap_exceeded_; }
  int dimension() const { return dim_; }

  // Number of distinct elements stored (a lower bound on the group order when
  // the cap was exceeded).
  std::size_t size() const;
  std::optional<std::size_t> order() const;

  const std::vector<std::size_t>& generator_indices() const { return generator_indices_; }
  std::size_t generator_count() const;

  const PauliElement& symbolic_element(std::size_t i) const { return sym_elements_[i]; }
  const std::vector<PauliElement>& symbolic_elements() const { return sym_elements_; }
  ComplexMatrix numeric_element(std::size_t i) const;

  bool contains(const PauliElement& p) const;
  bool contains(const ComplexMatrix& m) const;

  friend GroupClosure closure(std::span<const PauliElement> generators, std::size_t cap);
  friend GroupClosure closure(std::span<const ComplexMatrix> generators, ClosureMode mode,
                              std::size_t cap, const ToleranceConfig& cfg);

  // The deduplicated, deterministically sorted generating elements.
  const std::vector<PauliElement>& symbolic_generators() const { return sym_generators_; }
  const std::vector<ComplexMatrix>& numeric_generators() const { return num_generators_; }

 private:
  ClosureMode mode_ = ClosureMode::ExactSymbolic;
  std::size_t cap_ = kDefaultClosureCap;
  bool cap_exceeded_ = false;
  int dim_ = 0;
  std::vector<std::size_t> generator_indices_;
  std::vector<PauliElement> sym_elements_;
  std::vector<PauliElement> sym_generators_;
  std::shared_ptr<detail::MatrixStore> store_;
  std::vector<ComplexMatrix> num_generators_;
};

GroupClosure closure(std::span<const PauliElement> generators, std::size_t cap);
GroupClosure closure(std::span<const ComplexMatrix> generators, ClosureMode mode,
                     std::size_t cap, const ToleranceConfig& cfg = {});

struct GroupInvariants {
  std::size_t order = 0;
  std::uint64_t exponent = 0;
  std::map<std::uint64_t, std::size_t> element_order_counts;
  std::size_t center_order = 0;
};

// Throws std::invalid_argument when the closure hit its cap.
GroupInvariants group_invariants(const GroupClosure& g);

// Subgroup generated by all commutators [g, h] over element pairs of g.
GroupClosure derived_subgroup(const GroupClosure& g);

// Elements commuting with every generator (commutator scalar in projective
// mode), returned as a closure in the same mode.
GroupClosure center_subgroup(const GroupClosure& g);

bool same_element_set(const GroupClosure& a, const GroupClosure& b);

struct SeriesReport {
  enum class Kind { Nilpotent, NotNilpotentAtDepth, UnknownAtCap };

  Kind kind = Kind::UnknownAtCap;
  int nilpotence_class = 0;  // valid when kind == Nilpotent
  int depth = 0;
  std::vector<std::size_t> term_orders;  // |G_1|, |G_2|, ...
};

// Lower central series G_1 = G, G_{k+1} = <[g, x] : g in gens(G_k), x in
// gens(G)>; class = least c with G_{c+1} trivial.
SeriesReport lower_central_series(const GroupClosure& g, int max_depth = 16);

struct HeightResult {
  bool unbounded_at_cap = false;
  std::size_t elements_found = 0;  // lower bound on |A(U)| when unbounded
  std::uint64_t num = 0;           // reduced |A(U)| / D^2 otherwise
  std::uint64_t den = 1;
  bool integral = false;
};

HeightResult height(const NumericMcc& u, ClosureMode mode, std::size_t cap,
                    const ToleranceConfig& cfg = {});
HeightResult height(const SymbolicMcc& u, std::size_t cap);

// Least k >= 1 with a^k a scalar multiple of the identity; nullopt if k would
// exceed cap.
std::optional<int> projective_order(const ComplexMatrix& a, int cap);

/// Scaling- and conjugation-invariant profile of an MCC: everything is
/// computed on phase-canonicalized representatives, so operator-wise unit
/// rescaling cannot change any field.
struct MccFingerprint {
  int dimension = 0;
  int num_classes = 0;
  // Sorted; -1 encodes an order that exceeds the cap.
  std::vector<std::int64_t> projective_orders;
  bool closure_cap_exceeded = false;
  std::uint64_t projective_closure_order = 0;  // valid when !closure_cap_exceeded
  std::optional<std::uint64_t> projective_exponent;
  std::optional<int> projective_nilpotence_class;

  bool operator==(const MccFingerprint&) const = default;
};

MccFingerprint fingerprint(const NumericMcc& u, std::size_t cap,
                           const ToleranceConfig& cfg = {});

struct NonIsomorphismCertificate {
  bool conclusive = false;
  std::string invariant;  // distinguishing fingerprint field
  std::string left_value;
  std::string right_value;
  MccFingerprint left;
  MccFingerprint right;
};

// Compares fingerprint fields that are known on both sides; a difference is a
// proof of non-isomorphism modulo scaling. Never claims isomorphism.
NonIsomorphismCertificate certify_nonisomorphic(const NumericMcc& u1, const NumericMcc& u2,
                                                std::size_t cap,
                                                const ToleranceConfig& cfg = {});

}  // namespace mublab
