#include "mublab/grouplab.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>

namespace mublab {

namespace detail {

std::vector<std::int64_t> quantize_matrix(const ComplexMatrix& m, double grid) {
  std::vector<std::int64_t> key;
  key.reserve(2 * static_cast<std::size_t>(m.size()));
  const Complex* p = m.data();
  for (Eigen::Index i = 0; i < m.size(); ++i) {
    key.push_back(std::llround(p[i].real() / grid));
    key.push_back(std::llround(p[i].imag() / grid));
  }
  return key;
}

namespace {

std::uint64_t fnv1a(const std::vector<std::int64_t>& key) {
  std::uint64_t h = 1469598103934665603ull;
  for (std::int64_t v : key) {
    for (int byte = 0; byte < 8; ++byte) {
      h ^= static_cast<std::uint64_t>(v >> (8 * byte) & 0xff);
      h *= 1099511628211ull;
    }
  }
  return h;
}

}  // namespace

MatrixStore::MatrixStore(int dim, double grid, double eq_tol)
    : dim_(dim), grid_(grid), eq_tol_(eq_tol), per_(static_cast<std::size_t>(dim) * dim) {}

const Complex* MatrixStore::data(std::uint32_t idx) const {
  return chunks_[idx / kChunk].get() + (idx % kChunk) * per_;
}

Complex* MatrixStore::data(std::uint32_t idx) {
  return chunks_[idx / kChunk].get() + (idx % kChunk) * per_;
}

std::vector<std::int64_t> MatrixStore::quantize(const ComplexMatrix& m) const {
  return detail::quantize_matrix(m, grid_);
}

std::optional<std::uint32_t> MatrixStore::find(const ComplexMatrix& m) const {
  std::vector<std::int64_t> key = quantize(m);

  // Coordinates whose fractional part sits within 2 eq_tol of a rounding
  // boundary may round differently in an equal matrix; enumerate the
  // alternative buckets (in practice there are none: group entries sit far
  // from half-grid points).
  std::vector<std::pair<std::size_t, std::int64_t>> alternatives;
  const double margin = 0.5 - 2.0 * eq_tol_ / grid_;
  const Complex* p = m.data();
  for (Eigen::Index i = 0; i < m.size(); ++i) {
    double fr = p[i].real() / grid_ - static_cast<double>(key[2 * i]);
    double fi = p[i].imag() / grid_ - static_cast<double>(key[2 * i + 1]);
    if (fr > margin) alternatives.emplace_back(2 * i, key[2 * i] + 1);
    else if (fr < -margin) alternatives.emplace_back(2 * i, key[2 * i] - 1);
    if (fi > margin) alternatives.emplace_back(2 * i + 1, key[2 * i + 1] + 1);
    else if (fi < -margin) alternatives.emplace_back(2 * i + 1, key[2 * i + 1] - 1);
  }
  if (alternatives.size() > 12) alternatives.resize(12);

  auto probe = [&](const std::vector<std::int64_t>& k) -> std::optional<std::uint32_t> {
    auto [lo, hi] = index_.equal_range(fnv1a(k));
    for (auto it = lo; it != hi; ++it) {
      const Complex* stored = data(it->second);
      bool equal = true;
      for (std::size_t i = 0; i < per_ && equal; ++i) {
        equal = std::abs(stored[i] - p[i]) < eq_tol_;
      }
      if (equal) return it->second;
    }
    return std::nullopt;
  };

  for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << alternatives.size()); ++subset) {
    std::vector<std::int64_t> variant = key;
    for (std::size_t a = 0; a < alternatives.size(); ++a) {
      if (subset >> a & 1) variant[alternatives[a].first] = alternatives[a].second;
    }
    if (auto hit = probe(variant)) return hit;
  }
  return std::nullopt;
}

std::uint32_t MatrixStore::insert(const ComplexMatrix& m) {
  if (count_ % kChunk == 0) {
    chunks_.push_back(std::make_unique<Complex[]>(kChunk * per_));
  }
  auto idx = static_cast<std::uint32_t>(count_++);
  std::copy(m.data(), m.data() + per_, data(idx));
  index_.emplace(fnv1a(quantize(m)), idx);
  return idx;
}

ComplexMatrix MatrixStore::get(std::uint32_t idx) const {
  ComplexMatrix out(dim_, dim_);
  std::copy(data(idx), data(idx) + per_, out.data());
  return out;
}

}  // namespace detail

std::size_t GroupClosure::size() const {
  return mode_ == ClosureMode::ExactSymbolic ? sym_elements_.size()
                                             : (store_ ? store_->size() : 0);
}

std::optional<std::size_t> GroupClosure::order() const {
  if (cap_exceeded_) return std::nullopt;
  return size();
}

std::size_t GroupClosure::generator_count() const {
  return mode_ == ClosureMode::ExactSymbolic ? sym_generators_.size() : num_generators_.size();
}

ComplexMatrix GroupClosure::numeric_element(std::size_t i) const {
  return store_->get(static_cast<std::uint32_t>(i));
}

bool GroupClosure::contains(const PauliElement& p) const {
  return std::find(sym_elements_.begin(), sym_elements_.end(), p) != sym_elements_.end();
}

bool GroupClosure::contains(const ComplexMatrix& m) const {
  return store_ && store_->find(m).has_value();
}

GroupClosure closure(std::span<const PauliElement> generators, std::size_t cap) {
  if (generators.empty()) throw std::invalid_argument("empty generating set");
  GroupClosure g;
  g.mode_ = ClosureMode::ExactSymbolic;
  g.cap_ = cap;
  const int d = generators[0].d;
  const int n = generators[0].qudits();
  g.dim_ = 1;
  for (int i = 0; i < n; ++i) g.dim_ *= d;
  for (const PauliElement& p : generators) {
    if (p.d != d || p.qudits() != n) {
      throw std::invalid_argument("generators from different Pauli groups");
    }
  }
  std::vector<PauliElement> gens(generators.begin(), generators.end());
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  if (cap < gens.size()) throw std::invalid_argument("cap smaller than generating set");
  g.sym_generators_ = gens;

  std::map<std::vector<int>, std::uint32_t> index;
  auto key_of = [](const PauliElement& p) {
    std::vector<int> key = p.a;
    key.insert(key.end(), p.b.begin(), p.b.end());
    key.push_back(p.phase);
    return key;
  };
  std::deque<std::uint32_t> queue;
  g.sym_elements_.push_back(pauli_identity(d, n));
  index.emplace(key_of(g.sym_elements_[0]), 0);
  queue.push_back(0);
  while (!queue.empty() && !g.cap_exceeded_) {
    std::uint32_t at = queue.front();
    queue.pop_front();
    for (const PauliElement& gen : gens) {
      PauliElement prod = pauli_mul(g.sym_elements_[at], gen);
      auto [it, inserted] = index.try_emplace(key_of(prod), 0);
      if (!inserted) continue;
      if (g.sym_elements_.size() + 1 > cap) {
        g.cap_exceeded_ = true;
        index.erase(it);
        break;
      }
      it->second = static_cast<std::uint32_t>(g.sym_elements_.size());
      queue.push_back(it->second);
      g.sym_elements_.push_back(std::move(prod));
    }
  }
  for (const PauliElement& gen : gens) {
    auto it = index.find(key_of(gen));
    if (it != index.end()) g.generator_indices_.push_back(it->second);
  }
  return g;
}

GroupClosure closure(std::span<const ComplexMatrix> generators, ClosureMode mode,
                     std::size_t cap, const ToleranceConfig& cfg) {
  if (mode == ClosureMode::ExactSymbolic) {
    throw std::invalid_argument("exact-symbolic closure takes Pauli generators");
  }
  if (generators.empty()) throw std::invalid_argument("empty generating set");
  cfg.validate();
  GroupClosure g;
  g.mode_ = mode;
  g.cap_ = cap;
  const Eigen::Index dim = generators[0].rows();
  g.dim_ = static_cast<int>(dim);
  for (const ComplexMatrix& m : generators) {
    if (m.rows() != dim || m.cols() != dim) {
      throw std::invalid_argument("generator dimensions disagree");
    }
    if (!is_unitary(m, kClosureEqTol)) throw std::invalid_argument("generator is not unitary");
  }

  const bool projective = mode == ClosureMode::NumericProjective;
  std::vector<ComplexMatrix> gens;
  gens.reserve(generators.size());
  for (const ComplexMatrix& m : generators) {
    gens.push_back(projective ? phase_normalized(m, cfg.hash_grid) : m);
  }
  std::vector<std::size_t> perm(gens.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<std::int64_t>> keys(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    keys[i] = detail::quantize_matrix(gens[i], cfg.hash_grid);
  }
  std::sort(perm.begin(), perm.end(),
            [&](std::size_t x, std::size_t y) { return keys[x] < keys[y]; });
  {
    detail::MatrixStore dedup(g.dim_, cfg.hash_grid, kClosureEqTol);
    std::vector<ComplexMatrix> unique_gens;
    for (std::size_t i : perm) {
      if (!dedup.find(gens[i])) {
        dedup.insert(gens[i]);
        unique_gens.push_back(gens[i]);
      }
    }
    gens = std::move(unique_gens);
  }
  if (cap < gens.size()) throw std::invalid_argument("cap smaller than generating set");
  g.num_generators_ = gens;

  g.store_ = std::make_shared<detail::MatrixStore>(g.dim_, cfg.hash_grid, kClosureEqTol);
  std::deque<std::uint32_t> queue;
  ComplexMatrix id = ComplexMatrix::Identity(dim, dim);
  g.store_->insert(id);
  queue.push_back(0);
  while (!queue.empty() && !g.cap_exceeded_) {
    std::uint32_t at = queue.front();
    queue.pop_front();
    ComplexMatrix lhs = g.store_->get(at);
    for (const ComplexMatrix& gen : gens) {
      ComplexMatrix prod = lhs * gen;
      if (projective) prod = phase_normalized(prod, cfg.hash_grid);
      if (g.store_->find(prod)) continue;
      if (g.store_->size() + 1 > cap) {
        g.cap_exceeded_ = true;
        break;
      }
      queue.push_back(g.store_->insert(prod));
    }
  }
  for (const ComplexMatrix& gen : gens) {
    if (auto idx = g.store_->find(gen)) g.generator_indices_.push_back(*idx);
  }
  return g;
}

namespace {

bool is_scalar_matrix(const ComplexMatrix& m, double tol) {
  Complex s = m.trace() / static_cast<double>(m.rows());
  ComplexMatrix diff = m - s * ComplexMatrix::Identity(m.rows(), m.cols());
  return max_abs(diff) < tol;
}

void require_complete(const GroupClosure& g, const char* what) {
  if (g.cap_exceeded()) {
    throw std::invalid_argument(std::string(what) + " requires a complete closure (CAP_EXCEEDED)");
  }
}

// Least k with m^k == id (hashed) or m^k scalar (projective).
std::uint64_t numeric_element_order(const ComplexMatrix& m, bool projective, std::size_t bound) {
  const Eigen::Index dim = m.rows();
  ComplexMatrix acc = m;
  for (std::size_t k = 1; k <= bound + 1; ++k) {
    if (projective ? is_scalar_matrix(acc, kScalarDetectionTol)
                   : max_abs(acc - ComplexMatrix::Identity(dim, dim)) < kClosureEqTol) {
      return k;
    }
    acc = acc * m;
  }
  throw std::logic_error("element order exceeded group order bound");
}

bool elements_commute(const GroupClosure& g, const ComplexMatrix& x, const ComplexMatrix& y) {
  if (g.mode() == ClosureMode::NumericProjective) {
    return is_scalar_matrix(x.adjoint() * y.adjoint() * x * y, kScalarDetectionTol);
  }
  return commute(x, y, kClosureEqTol);
}

}  // namespace

GroupInvariants group_invariants(const GroupClosure& g) {
  require_complete(g, "group_invariants");
  GroupInvariants inv;
  inv.order = g.size();
  const bool projective = g.mode() == ClosureMode::NumericProjective;

  if (g.mode() == ClosureMode::ExactSymbolic) {
    for (const PauliElement& p : g.symbolic_elements()) {
      auto ord = static_cast<std::uint64_t>(pauli_order(p));
      ++inv.element_order_counts[ord];
      inv.exponent = std::lcm(inv.exponent == 0 ? 1 : inv.exponent, ord);
      bool central = true;
      for (const PauliElement& gen : g.symbolic_generators()) {
        if (pauli_commutator_exponent(p, gen) != 0) {
          central = false;
          break;
        }
      }
      if (central) ++inv.center_order;
    }
    return inv;
  }

  for (std::size_t i = 0; i < g.size(); ++i) {
    ComplexMatrix e = g.numeric_element(i);
    std::uint64_t ord = numeric_element_order(e, projective, inv.order);
    ++inv.element_order_counts[ord];
    inv.exponent = std::lcm(inv.exponent == 0 ? 1 : inv.exponent, ord);
    bool central = true;
    for (const ComplexMatrix& gen : g.numeric_generators()) {
      if (!elements_commute(g, e, gen)) {
        central = false;
        break;
      }
    }
    if (central) ++inv.center_order;
  }
  return inv;
}

namespace {

GroupClosure closure_same_mode(const GroupClosure& like, std::vector<PauliElement> sym_gens,
                               std::vector<ComplexMatrix> num_gens) {
  if (like.mode() == ClosureMode::ExactSymbolic) {
    return closure(std::span<const PauliElement>(sym_gens), like.cap());
  }
  return closure(std::span<const ComplexMatrix>(num_gens), like.mode(), like.cap());
}

}  // namespace

GroupClosure derived_subgroup(const GroupClosure& g) {
  require_complete(g, "derived_subgroup");
  if (g.mode() == ClosureMode::ExactSymbolic) {
    std::set<PauliElement> comms;
    const auto& elems = g.symbolic_elements();
    for (const PauliElement& x : elems) {
      for (const PauliElement& y : elems) {
        comms.insert(pauli_mul(pauli_mul(pauli_inverse(x), pauli_inverse(y)),
                               pauli_mul(x, y)));
      }
    }
    return closure_same_mode(g, {comms.begin(), comms.end()}, {});
  }
  detail::MatrixStore dedup(g.dimension(), ToleranceConfig{}.hash_grid, kClosureEqTol);
  std::vector<ComplexMatrix> comms;
  const bool projective = g.mode() == ClosureMode::NumericProjective;
  for (std::size_t i = 0; i < g.size(); ++i) {
    ComplexMatrix x = g.numeric_element(i);
    for (std::size_t j = 0; j < g.size(); ++j) {
      ComplexMatrix y = g.numeric_element(j);
      ComplexMatrix c = x.adjoint() * y.adjoint() * x * y;
      if (projective) c = phase_normalized(c, ToleranceConfig{}.hash_grid);
      if (!dedup.find(c)) {
        dedup.insert(c);
        comms.push_back(std::move(c));
      }
    }
  }
  return closure_same_mode(g, {}, std::move(comms));
}

GroupClosure center_subgroup(const GroupClosure& g) {
  require_complete(g, "center_subgroup");
  if (g.mode() == ClosureMode::ExactSymbolic) {
    std::vector<PauliElement> central;
    for (const PauliElement& p : g.symbolic_elements()) {
      bool ok = true;
      for (const PauliElement& gen : g.symbolic_generators()) {
        if (pauli_commutator_exponent(p, gen) != 0) {
          ok = false;
          break;
        }
      }
      if (ok) central.push_back(p);
    }
    return closure_same_mode(g, std::move(central), {});
  }
  std::vector<ComplexMatrix> central;
  for (std::size_t i = 0; i < g.size(); ++i) {
    ComplexMatrix e = g.numeric_element(i);
    bool ok = true;
    for (const ComplexMatrix& gen : g.numeric_generators()) {
      if (!elements_commute(g, e, gen)) {
        ok = false;
        break;
      }
    }
    if (ok) central.push_back(std::move(e));
  }
  return closure_same_mode(g, {}, std::move(central));
}

bool same_element_set(const GroupClosure& a, const GroupClosure& b) {
  if (a.mode() != b.mode() || a.size() != b.size()) return false;
  if (a.mode() == ClosureMode::ExactSymbolic) {
    std::set<PauliElement> lhs(a.symbolic_elements().begin(), a.symbolic_elements().end());
    for (const PauliElement& p : b.symbolic_elements()) {
      if (!lhs.count(p)) return false;
    }
    return true;
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!b.contains(a.numeric_element(i))) return false;
  }
  return true;
}

SeriesReport lower_central_series(const GroupClosure& g, int max_depth) {
  require_complete(g, "lower_central_series");
  SeriesReport report;
  report.term_orders.push_back(g.size());
  if (max_depth < 1) throw std::invalid_argument("max_depth must be >= 1");

  const GroupClosure* base = &g;
  GroupClosure current;  // term G_k for k >= 2
  const GroupClosure* term = &g;
  for (int depth = 1; depth <= max_depth; ++depth) {
    GroupClosure next = [&]() {
      if (g.mode() == ClosureMode::ExactSymbolic) {
        std::set<PauliElement> comms;
        for (const PauliElement& x : term->symbolic_generators()) {
          for (const PauliElement& y : base->symbolic_generators()) {
            comms.insert(pauli_mul(pauli_mul(pauli_inverse(x), pauli_inverse(y)),
                                   pauli_mul(x, y)));
          }
        }
        return closure_same_mode(g, {comms.begin(), comms.end()}, {});
      }
      detail::MatrixStore dedup(g.dimension(), ToleranceConfig{}.hash_grid, kClosureEqTol);
      std::vector<ComplexMatrix> comms;
      const bool projective = g.mode() == ClosureMode::NumericProjective;
      for (const ComplexMatrix& x : term->numeric_generators()) {
        for (const ComplexMatrix& y : base->numeric_generators()) {
          ComplexMatrix c = x.adjoint() * y.adjoint() * x * y;
          if (projective) c = phase_normalized(c, ToleranceConfig{}.hash_grid);
          if (!dedup.find(c)) {
            dedup.insert(c);
            comms.push_back(std::move(c));
          }
        }
      }
      return closure_same_mode(g, {}, std::move(comms));
    }();
    report.term_orders.push_back(next.size());
    report.depth = depth;
    if (next.size() == 1) {
      report.kind = SeriesReport::Kind::Nilpotent;
      report.nilpotence_class = depth;
      return report;
    }
    if (next.size() == term->size() && same_element_set(next, *term)) {
      report.kind = SeriesReport::Kind::NotNilpotentAtDepth;
      return report;
    }
    current = std::move(next);
    term = &current;
  }
  report.kind = SeriesReport::Kind::NotNilpotentAtDepth;
  return report;
}

namespace {

HeightResult height_from_closure(const GroupClosure& g, int dimension) {
  HeightResult h;
  h.elements_found = g.size();
  if (g.cap_exceeded()) {
    h.unbounded_at_cap = true;
    return h;
  }
  std::uint64_t num = g.size();
  std::uint64_t den = static_cast<std::uint64_t>(dimension) * dimension;
  std::uint64_t common = std::gcd(num, den);
  h.num = num / common;
  h.den = den / common;
  h.integral = h.den == 1;
  return h;
}

}  // namespace

HeightResult height(const NumericMcc& u, ClosureMode mode, std::size_t cap,
                    const ToleranceConfig& cfg) {
  MccValidation check = validate_mcc(u, cfg);
  if (!check.ok()) throw std::invalid_argument("height requires a valid MCC: " + check.first_failure);
  std::vector<ComplexMatrix> gens;
  for (const auto& cls : u.classes) gens.insert(gens.end(), cls.begin(), cls.end());
  return height_from_closure(closure(gens, mode, cap, cfg), u.dimension);
}

HeightResult height(const SymbolicMcc& u, std::size_t cap) {
  MccValidation check = validate_mcc(u);
  if (!check.ok()) throw std::invalid_argument("height requires a valid MCC: " + check.first_failure);
  std::vector<PauliElement> gens;
  for (const auto& cls : u.classes) gens.insert(gens.end(), cls.begin(), cls.end());
  return height_from_closure(closure(gens, cap), u.dimension());
}

std::optional<int> projective_order(const ComplexMatrix& a, int cap) {
  if (!is_unitary(a, kClosureEqTol)) {
    throw std::invalid_argument("projective order requires a unitary matrix");
  }
  ComplexMatrix acc = a;
  for (int k = 1; k <= cap; ++k) {
    if (is_scalar_matrix(acc, kScalarDetectionTol)) return k;
    acc = acc * a;
  }
  return std::nullopt;
}

MccFingerprint fingerprint(const NumericMcc& u, std::size_t cap, const ToleranceConfig& cfg) {
  MccValidation check = validate_mcc(u, cfg);
  if (!check.ok()) {
    throw std::invalid_argument("fingerprint requires a valid MCC: " + check.first_failure);
  }
  MccFingerprint fp;
  fp.dimension = u.dimension;
  fp.num_classes = static_cast<int>(u.classes.size());

  std::vector<ComplexMatrix> ops;
  for (const auto& cls : u.classes) ops.insert(ops.end(), cls.begin(), cls.end());
  const int order_cap = static_cast<int>(std::min<std::size_t>(cap, 1 << 20));
  for (const ComplexMatrix& op : ops) {
    std::optional<int> ord = projective_order(op, order_cap);
    fp.projective_orders.push_back(ord ? *ord : -1);
  }
  std::sort(fp.projective_orders.begin(), fp.projective_orders.end());

  GroupClosure g = closure(ops, ClosureMode::NumericProjective, cap, cfg);
  fp.closure_cap_exceeded = g.cap_exceeded();
  if (!fp.closure_cap_exceeded) {
    fp.projective_closure_order = g.size();
    std::uint64_t exponent = 1;
    for (std::size_t i = 0; i < g.size(); ++i) {
      std::uint64_t ord =
          numeric_element_order(g.numeric_element(i), /*projective=*/true, g.size());
      exponent = std::lcm(exponent, ord);
    }
    fp.projective_exponent = exponent;
    SeriesReport series = lower_central_series(g);
    fp.projective_nilpotence_class =
        series.kind == SeriesReport::Kind::Nilpotent ? series.nilpotence_class : -1;
  }
  return fp;
}

namespace {

std::string format_multiset(const std::vector<std::int64_t>& orders) {
  std::map<std::int64_t, int> counts;
  for (std::int64_t o : orders) ++counts[o];
  std::string out = "{";
  for (auto it = counts.begin(); it != counts.end(); ++it) {
    if (it != counts.begin()) out += ", ";
    out += (it->first < 0 ? std::string(">cap") : std::to_string(it->first)) + " x " +
           std::to_string(it->second);
  }
  return out + "}";
}

}  // namespace

NonIsomorphismCertificate certify_nonisomorphic(const NumericMcc& u1, const NumericMcc& u2,
                                                std::size_t cap, const ToleranceConfig& cfg) {
  if (u1.dimension != u2.dimension) {
    throw std::invalid_argument("certify_nonisomorphic requires equal dimensions");
  }
  NonIsomorphismCertificate cert;
  cert.left = fingerprint(u1, cap, cfg);
  cert.right = fingerprint(u2, cap, cfg);
  const MccFingerprint& l = cert.left;
  const MccFingerprint& r = cert.right;

  auto conclude = [&](const std::string& name, std::string lv, std::string rv) {
    cert.conclusive = true;
    cert.invariant = name;
    cert.left_value = std::move(lv);
    cert.right_value = std::move(rv);
  };
  if (l.num_classes != r.num_classes) {
    conclude("class count", std::to_string(l.num_classes), std::to_string(r.num_classes));
  } else if (l.projective_orders != r.projective_orders) {
    conclude("projective operator order multiset", format_multiset(l.projective_orders),
             format_multiset(r.projective_orders));
  } else if (!l.closure_cap_exceeded && !r.closure_cap_exceeded &&
             l.projective_closure_order != r.projective_closure_order) {
    conclude("projective closure order", std::to_string(l.projective_closure_order),
             std::to_string(r.projective_closure_order));
  } else if (l.projective_exponent && r.projective_exponent &&
             *l.projective_exponent != *r.projective_exponent) {
    conclude("projective exponent", std::to_string(*l.projective_exponent),
             std::to_string(*r.projective_exponent));
  } else if (l.projective_nilpotence_class && r.projective_nilpotence_class &&
             *l.projective_nilpotence_class != *r.projective_nilpotence_class) {
    conclude("projective nilpotence class", std::to_string(*l.projective_nilpotence_class),
             std::to_string(*r.projective_nilpotence_class));
  }
  return cert;
}

}  // namespace mublab
