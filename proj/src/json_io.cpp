#include "mublab/json_io.hpp"

#include <fstream>
#include <nlohmann/json.hpp>
#include <stdexcept>

namespace mublab {

using nlohmann::json;

namespace {

json matrix_to_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      row.push_back(json::array({m(r, c).real(), m(r, c).imag()}));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

ComplexMatrix matrix_from_json(const json& j) {
  const auto rows = static_cast<Eigen::Index>(j.size());
  if (rows == 0) throw std::invalid_argument("empty matrix");
  const auto cols = static_cast<Eigen::Index>(j.at(0).size());
  ComplexMatrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const json& row = j.at(static_cast<std::size_t>(r));
    if (static_cast<Eigen::Index>(row.size()) != cols) {
      throw std::invalid_argument("ragged matrix rows");
    }
    for (Eigen::Index c = 0; c < cols; ++c) {
      const json& entry = row.at(static_cast<std::size_t>(c));
      m(r, c) = Complex(entry.at(0).get<double>(), entry.at(1).get<double>());
    }
  }
  return m;
}

}  // namespace

json spread_to_json(const Spread& s) {
  json members = json::array();
  for (const Subspace& m : s.members) {
    json rows = json::array();
    for (int r = 0; r < m.basis.rows; ++r) {
      json row = json::array();
      for (int c = 0; c < m.basis.cols; ++c) row.push_back(m.basis.at(r, c));
      rows.push_back(std::move(row));
    }
    members.push_back(std::move(rows));
  }
  return json{{"N", s.N}, {"d", s.d}, {"members", std::move(members)}};
}

Spread spread_from_json(const json& j) {
  Spread s;
  s.d = j.at("d").get<int>();
  s.N = j.at("N").get<int>();
  for (const json& member : j.at("members")) {
    FpMatrix rows(s.d, static_cast<int>(member.size()), 2 * s.N);
    for (int r = 0; r < rows.rows; ++r) {
      const json& row = member.at(static_cast<std::size_t>(r));
      if (static_cast<int>(row.size()) != 2 * s.N) {
        throw std::invalid_argument("spread member row has wrong length");
      }
      for (int c = 0; c < rows.cols; ++c) {
        rows.at(r, c) = fp_reduce(row.at(static_cast<std::size_t>(c)).get<int>(), s.d);
      }
    }
    s.members.push_back(make_subspace(rows));
  }
  return s;
}

json symbolic_mcc_to_json(const SymbolicMcc& u) {
  json classes = json::array();
  for (const auto& cls : u.classes) {
    json ops = json::array();
    for (const PauliElement& p : cls) {
      ops.push_back(json{{"a", p.a}, {"b", p.b}, {"phase", p.phase}});
    }
    classes.push_back(std::move(ops));
  }
  return json{{"N", u.N}, {"classes", std::move(classes)}, {"d", u.d}, {"phase_order", u.d}};
}

SymbolicMcc symbolic_mcc_from_json(const json& j) {
  SymbolicMcc u;
  u.d = j.at("d").get<int>();
  u.N = j.at("N").get<int>();
  if (j.contains("phase_order") && j.at("phase_order").get<int>() != u.d) {
    throw std::invalid_argument("phase_order must equal d");
  }
  for (const json& cls : j.at("classes")) {
    std::vector<PauliElement> ops;
    for (const json& op : cls) {
      ops.push_back(make_pauli(u.d, op.at("phase").get<int>(),
                               op.at("a").get<std::vector<int>>(),
                               op.at("b").get<std::vector<int>>()));
    }
    u.classes.push_back(std::move(ops));
  }
  return u;
}

json numeric_mcc_to_json(const NumericMcc& u) {
  json classes = json::array();
  for (const auto& cls : u.classes) {
    json ops = json::array();
    for (const ComplexMatrix& m : cls) ops.push_back(matrix_to_json(m));
    classes.push_back(std::move(ops));
  }
  return json{{"classes", std::move(classes)}, {"dimension", u.dimension}};
}

NumericMcc numeric_mcc_from_json(const json& j) {
  NumericMcc u;
  u.dimension = j.at("dimension").get<int>();
  for (const json& cls : j.at("classes")) {
    std::vector<ComplexMatrix> ops;
    for (const json& m : cls) ops.push_back(matrix_from_json(m));
    u.classes.push_back(std::move(ops));
  }
  return u;
}

bool is_symbolic_mcc_json(const json& j) { return j.contains("phase_order"); }

json mub_to_json(const MubSet& b) {
  json bases = json::array();
  for (const Basis& basis : b.bases) {
    json vectors = json::array();
    for (Eigen::Index c = 0; c < basis.cols(); ++c) {
      json vec = json::array();
      for (Eigen::Index r = 0; r < basis.rows(); ++r) {
        vec.push_back(json::array({basis(r, c).real(), basis(r, c).imag()}));
      }
      vectors.push_back(std::move(vec));
    }
    bases.push_back(std::move(vectors));
  }
  return json{{"bases", std::move(bases)}, {"dimension", b.dimension}};
}

MubSet mub_from_json(const json& j) {
  MubSet b;
  b.dimension = j.at("dimension").get<int>();
  for (const json& basis_json : j.at("bases")) {
    Basis basis(b.dimension, static_cast<Eigen::Index>(basis_json.size()));
    for (Eigen::Index c = 0; c < basis.cols(); ++c) {
      const json& vec = basis_json.at(static_cast<std::size_t>(c));
      if (static_cast<int>(vec.size()) != b.dimension) {
        throw std::invalid_argument("basis vector has wrong length");
      }
      for (Eigen::Index r = 0; r < basis.rows(); ++r) {
        const json& entry = vec.at(static_cast<std::size_t>(r));
        basis(r, c) = Complex(entry.at(0).get<double>(), entry.at(1).get<double>());
      }
    }
    b.bases.push_back(std::move(basis));
  }
  return b;
}

json validation_to_json(const SpreadValidation& v) {
  return json{{"exact_partition", v.exact_partition},
              {"first_failure", v.first_failure},
              {"member_dimensions_ok", v.member_dimensions_ok},
              {"members_isotropic", v.members_isotropic},
              {"ok", v.ok()}};
}

json validation_to_json(const MccValidation& v) {
  return json{{"class_count_ok", v.class_count_ok},
              {"class_sizes_ok", v.class_sizes_ok},
              {"commuting_ok", v.commuting_ok},
              {"distinct_ok", v.distinct_ok},
              {"first_failure", v.first_failure},
              {"hs_orthogonal_ok", v.hs_orthogonal_ok},
              {"max_commutation_residual", v.max_commutation_residual},
              {"max_hs_residual", v.max_hs_residual},
              {"max_unitarity_residual", v.max_unitarity_residual},
              {"maximal", v.maximal},
              {"ok", v.ok()},
              {"unitary_ok", v.unitary_ok}};
}

json validation_to_json(const MubValidation& v) {
  return json{{"first_failure", v.first_failure},
              {"max_orthonormality_residual", v.max_orthonormality_residual},
              {"max_unbiasedness_residual", v.max_unbiasedness_residual},
              {"maximal", v.maximal},
              {"ok", v.ok()},
              {"orthonormal_ok", v.orthonormal_ok},
              {"unbiased_ok", v.unbiased_ok}};
}

json fingerprint_to_json(const MccFingerprint& fp) {
  json orders = json::array();
  for (std::int64_t o : fp.projective_orders) {
    if (o < 0) {
      orders.push_back("CAP_EXCEEDED");
    } else {
      orders.push_back(o);
    }
  }
  json out{{"dimension", fp.dimension},
           {"num_classes", fp.num_classes},
           {"projective_orders", std::move(orders)}};
  out["projective_closure_order"] =
      fp.closure_cap_exceeded ? json("CAP_EXCEEDED") : json(fp.projective_closure_order);
  out["projective_exponent"] =
      fp.projective_exponent ? json(*fp.projective_exponent) : json("UNKNOWN");
  if (!fp.projective_nilpotence_class) {
    out["projective_nilpotence_class"] = "UNKNOWN";
  } else if (*fp.projective_nilpotence_class < 0) {
    out["projective_nilpotence_class"] = "NOT_NILPOTENT";
  } else {
    out["projective_nilpotence_class"] = *fp.projective_nilpotence_class;
  }
  return out;
}

json analysis_to_json(const AnalysisReport& r) {
  json out{{"dimension", r.dimension}, {"num_classes", r.num_classes}};
  out["order"] = r.closure_cap_exceeded ? json("CAP_EXCEEDED") : json(r.order);
  out["exponent"] = r.exponent ? json(*r.exponent) : json("UNKNOWN");
  out["center_order"] = r.center_order ? json(*r.center_order) : json("UNKNOWN");
  if (!r.nilpotence_class) {
    out["nilpotence_class"] = "UNKNOWN";
  } else if (*r.nilpotence_class < 0) {
    out["nilpotence_class"] = "NOT_NILPOTENT";
  } else {
    out["nilpotence_class"] = *r.nilpotence_class;
  }
  if (r.height.unbounded_at_cap) {
    out["height"] = "UNBOUNDED_AT_CAP";
    out["height_elements_found"] = r.height.elements_found;
  } else {
    out["height"] = json{{"den", r.height.den}, {"integral", r.height.integral},
                         {"num", r.height.num}};
  }
  out["fingerprint"] = fingerprint_to_json(r.fingerprint);
  out["cap_exceeded_anywhere"] = r.cap_exceeded_anywhere();
  return out;
}

json demo_to_json(const BetaNonInjectivityReport& r) {
  json cert{{"conclusive", r.certificate.conclusive},
            {"invariant", r.certificate.invariant},
            {"left_value", r.certificate.left_value},
            {"right_value", r.certificate.right_value}};
  return json{{"N", r.N},
              {"certificate", std::move(cert)},
              {"d", r.d},
              {"dimension", r.dimension},
              {"fingerprint_alpha_mcc", fingerprint_to_json(r.certificate.right)},
              {"fingerprint_pauli_mcc", fingerprint_to_json(r.certificate.left)},
              {"mub_images_equal", r.mub_images_equal},
              {"ok", r.ok()}};
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  json j;
  in >> j;
  return j;
}

void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot open " + path + " for writing");
  out << j.dump(2) << "\n";
}

}  // namespace mublab
