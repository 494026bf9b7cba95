#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <nlohmann/json.hpp>

#include "mublab/json_io.hpp"
#include "mublab/mub.hpp"
#include "mublab/pipeline.hpp"

namespace py = pybind11;
using namespace mublab;
using nlohmann::json;

namespace {

py::object json_to_py(const json& j) {
  switch (j.type()) {
    case json::value_t::null:
      return py::none();
    case json::value_t::boolean:
      return py::bool_(j.get<bool>());
    case json::value_t::number_integer:
      return py::int_(j.get<std::int64_t>());
    case json::value_t::number_unsigned:
      return py::int_(j.get<std::uint64_t>());
    case json::value_t::number_float:
      return py::float_(j.get<double>());
    case json::value_t::string:
      return py::str(j.get<std::string>());
    case json::value_t::array: {
      py::list out;
      for (const json& item : j) out.append(json_to_py(item));
      return out;
    }
    case json::value_t::object: {
      py::dict out;
      for (auto it = j.begin(); it != j.end(); ++it) {
        out[py::str(it.key())] = json_to_py(it.value());
      }
      return out;
    }
    default:
      return py::none();
  }
}

using SpreadRows = std::vector<std::vector<std::vector<int>>>;

SpreadRows spread_rows(const Spread& s) {
  SpreadRows out;
  for (const Subspace& m : s.members) {
    std::vector<std::vector<int>> rows;
    for (int r = 0; r < m.basis.rows; ++r) {
      std::vector<int> row(m.basis.cols);
      for (int c = 0; c < m.basis.cols; ++c) row[c] = m.basis.at(r, c);
      rows.push_back(std::move(row));
    }
    out.push_back(std::move(rows));
  }
  return out;
}

Spread spread_from_rows(int d, int N, const SpreadRows& members) {
  Spread s;
  s.d = d;
  s.N = N;
  for (const auto& rows : members) {
    FpMatrix m(d, static_cast<int>(rows.size()), 2 * N);
    for (int r = 0; r < m.rows; ++r) {
      if (static_cast<int>(rows[r].size()) != 2 * N) {
        throw std::invalid_argument("member rows must have length 2N");
      }
      for (int c = 0; c < m.cols; ++c) m.at(r, c) = fp_reduce(rows[r][c], d);
    }
    s.members.push_back(make_subspace(m));
  }
  return s;
}

using MccMatrices = std::vector<std::vector<ComplexMatrix>>;

NumericMcc mcc_from_classes(const MccMatrices& classes) {
  if (classes.empty() || classes[0].empty()) {
    throw std::invalid_argument("classes must be non-empty");
  }
  NumericMcc mcc;
  mcc.dimension = static_cast<int>(classes[0][0].rows());
  mcc.classes = classes;
  return mcc;
}

MubSet mub_from_bases(const std::vector<ComplexMatrix>& bases) {
  if (bases.empty()) throw std::invalid_argument("bases must be non-empty");
  MubSet b;
  b.dimension = static_cast<int>(bases[0].rows());
  b.bases = bases;
  return b;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Maximal MUB sets and maximal commuting operator classes";

  m.def("desarguesian_spread",
        [](int d, int N) { return spread_rows(desarguesian_spread(d, N)); },
        py::arg("d"), py::arg("N"),
        "Deterministic spread of W_{2N-1}(d); members as echelon basis rows.");

  m.def("validate_spread",
        [](int d, int N, const SpreadRows& members) {
          Spread s = spread_from_rows(d, N, members);
          return json_to_py(validation_to_json(validate_spread(canonical_form(d, N), s)));
        },
        py::arg("d"), py::arg("N"), py::arg("members"));

  m.def("enumerate_spreads",
        [](int d, int N, std::size_t limit) {
          std::vector<SpreadRows> out;
          for (const Spread& s : enumerate_spreads(canonical_form(d, N), limit)) {
            out.push_back(spread_rows(s));
          }
          return out;
        },
        py::arg("d"), py::arg("N"), py::arg("limit"),
        "Exhaustive spread enumeration (d^N <= 9), lexicographic order.");

  m.def("pauli_mcc",
        [](int d, int N) {
          SymbolicMcc mcc = gamma_inverse(desarguesian_spread(d, N));
          py::list classes;
          for (const auto& cls : mcc.classes) {
            py::list ops;
            for (const PauliElement& p : cls) {
              py::dict op;
              op["phase"] = p.phase;
              op["a"] = p.a;
              op["b"] = p.b;
              ops.append(op);
            }
            classes.append(ops);
          }
          return classes;
        },
        py::arg("d"), py::arg("N"),
        "Symbolic gamma^{-1}(Desarguesian spread): phase-zero Pauli classes.");

  m.def("pauli_mcc_matrices",
        [](int d, int N) {
          return to_numeric(gamma_inverse(desarguesian_spread(d, N))).classes;
        },
        py::arg("d"), py::arg("N"), "Materialized gamma^{-1} classes as unitary matrices.");

  m.def("materialize",
        [](int d, int phase, const std::vector<int>& a, const std::vector<int>& b) {
          return materialize(make_pauli(d, phase, a, b));
        },
        py::arg("d"), py::arg("phase"), py::arg("a"), py::arg("b"));

  m.def("beta",
        [](const MccMatrices& classes) { return beta(mcc_from_classes(classes)).bases; },
        py::arg("classes"), "Common-eigenbasis map; one canonical basis per class.");

  m.def("alpha",
        [](const std::vector<ComplexMatrix>& bases) {
          return alpha(mub_from_bases(bases)).classes;
        },
        py::arg("bases"), "Spectral map from a maximal MUB set to an MCC.");

  m.def("validate_mcc",
        [](const MccMatrices& classes) {
          return json_to_py(validation_to_json(validate_mcc(mcc_from_classes(classes))));
        },
        py::arg("classes"));

  m.def("validate_mub",
        [](const std::vector<ComplexMatrix>& bases) {
          return json_to_py(validation_to_json(validate_mub(mub_from_bases(bases))));
        },
        py::arg("bases"));

  m.def("mub_equal",
        [](const std::vector<ComplexMatrix>& b1, const std::vector<ComplexMatrix>& b2,
           double eq_tol) {
          ToleranceConfig cfg;
          if (eq_tol > 0.0) cfg.eq_tol = eq_tol;
          return mub_equal(mub_from_bases(b1), mub_from_bases(b2), cfg);
        },
        py::arg("bases1"), py::arg("bases2"), py::arg("eq_tol") = 0.0,
        "Ray-wise, order-insensitive equality of MUB sets.");

  m.def("analyze_mcc",
        [](const MccMatrices& classes, std::size_t cap) {
          return json_to_py(analysis_to_json(analyze_mcc(mcc_from_classes(classes), cap)));
        },
        py::arg("classes"), py::arg("cap") = kDefaultClosureCap,
        "Closure order/exponent/center, nilpotence class, height, fingerprint.");

  m.def("fingerprint",
        [](const MccMatrices& classes, std::size_t cap) {
          return json_to_py(fingerprint_to_json(fingerprint(mcc_from_classes(classes), cap)));
        },
        py::arg("classes"), py::arg("cap") = kDefaultClosureCap,
        "Scaling-invariant MCC profile.");

  m.def("demo_beta_noninjective",
        [](int d, int N, std::size_t cap) {
          return json_to_py(demo_to_json(demo_beta_noninjective(d, N, cap)));
        },
        py::arg("d"), py::arg("N"), py::arg("cap") = kDefaultClosureCap,
        "Two non-isomorphic MCCs with the same beta image (d odd prime, N >= 2).");
}
