#include "ein/json_io.hpp"

#include <sstream>

namespace ein {

json rat_to_json(const Rat& r) { return rat_str(r); }

Rat rat_from_json(const json& j) {
  if (j.is_string()) return rat_parse(j.get<std::string>());
  if (j.is_number_integer()) return rat_of(j.get<long>());
  throw input_error("expected a rational as \"num/den\" string or integer, got " + j.dump());
}

json vec_to_json(const Vec& v) {
  json out = json::array();
  for (const auto& c : v) out.push_back(rat_to_json(c));
  return out;
}

Vec vec_from_json(const json& j) {
  if (!j.is_array()) throw input_error("expected an array for a vector");
  Vec v;
  for (const auto& c : j) v.push_back(rat_from_json(c));
  return v;
}

json mat_to_json(const Mat& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j2 = 0; j2 < m.cols(); ++j2) row.push_back(rat_to_json(m(i, j2)));
    rows.push_back(row);
  }
  return rows;
}

Mat mat_from_json(const json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_array())
    throw input_error("expected row-major nested arrays for a matrix");
  const int rows = int(j.size());
  const int cols = int(j[0].size());
  Mat m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    if (int(j[i].size()) != cols) throw input_error("ragged matrix rows");
    for (int k = 0; k < cols; ++k) m(i, k) = rat_from_json(j[i][k]);
  }
  return m;
}

json signature_to_json(const Signature& sig) { return json{{"p", sig.p}, {"q", sig.q}}; }

Signature signature_from_json(const json& j) {
  if (!j.contains("p") || !j.contains("q")) throw input_error("signature needs p and q");
  try {
    return Signature(j["p"].get<int>(), j["q"].get<int>());
  } catch (const domain_error& e) {
    throw input_error(std::string("bad signature: ") + e.what());
  }
}

json alg_to_json(const AlgElement& x) {
  return json{{"signature", signature_to_json(x.sig)}, {"matrix", mat_to_json(x.mat)}};
}

AlgElement alg_from_json(const json& j) {
  if (!j.contains("signature") || !j.contains("matrix"))
    throw input_error("algebra element needs signature and matrix");
  Signature sig = signature_from_json(j["signature"]);
  try {
    return AlgElement(sig, mat_from_json(j["matrix"]));
  } catch (const domain_error& e) {
    throw input_error(std::string("bad algebra element: ") + e.what());
  }
}

json group_to_json(const GroupElement& g) {
  return json{{"signature", signature_to_json(g.sig)}, {"matrix", mat_to_json(g.mat)}};
}

GroupElement group_from_json(const json& j) {
  if (!j.contains("signature") || !j.contains("matrix"))
    throw input_error("group element needs signature and matrix");
  Signature sig = signature_from_json(j["signature"]);
  try {
    return GroupElement(sig, mat_from_json(j["matrix"]));
  } catch (const domain_error& e) {
    throw input_error(std::string("bad group element: ") + e.what());
  }
}

json subalgebra_to_json(const Subalgebra& s) {
  json basis = json::array();
  for (const auto& b : s.basis) basis.push_back(mat_to_json(b.mat));
  return json{{"signature", signature_to_json(s.sig)}, {"basis", basis}};
}

Subalgebra subalgebra_from_json(const json& j) {
  if (!j.contains("signature") || !j.contains("basis"))
    throw input_error("subalgebra needs signature and basis");
  Signature sig = signature_from_json(j["signature"]);
  std::vector<AlgElement> basis;
  for (const auto& m : j["basis"]) {
    try {
      basis.emplace_back(sig, mat_from_json(m));
    } catch (const domain_error& e) {
      throw input_error(std::string("bad basis element: ") + e.what());
    }
  }
  return Subalgebra{sig, std::move(basis)};
}

json point_to_json(const ProjectivePoint& p) { return vec_to_json(p.rep); }

ProjectivePoint point_from_json(const json& j, Cover cover) {
  Vec v = vec_from_json(j);
  try {
    return projectivize(v, cover);
  } catch (const domain_error& e) {
    throw input_error(std::string("bad point: ") + e.what());
  }
}

PiecewiseCurve curve_from_json(const Signature& sig, const json& j) {
  if (!j.is_array()) throw input_error("curve must be an array of segments");
  PiecewiseCurve curve{sig, {}};
  for (const auto& seg : j) {
    if (!seg.contains("direction") || !seg.contains("from") || !seg.contains("to"))
      throw input_error("curve segment needs direction, from, to");
    try {
      curve.segments.push_back(CurveSegment{AlgElement(sig, mat_from_json(seg["direction"])),
                                            rat_from_json(seg["from"]),
                                            rat_from_json(seg["to"])});
    } catch (const domain_error& e) {
      throw input_error(std::string("bad curve segment: ") + e.what());
    }
  }
  return curve;
}

std::string pretty_matrix(const Mat& m) {
  std::vector<std::vector<std::string>> cells(m.rows(), std::vector<std::string>(m.cols()));
  std::vector<size_t> width(m.cols(), 0);
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      cells[i][j] = m(i, j).get_str();
      width[j] = std::max(width[j], cells[i][j].size());
    }
  std::ostringstream out;
  for (int i = 0; i < m.rows(); ++i) {
    out << "[ ";
    for (int j = 0; j < m.cols(); ++j) {
      out << std::string(width[j] - cells[i][j].size(), ' ') << cells[i][j];
      out << (j + 1 < m.cols() ? "  " : " ");
    }
    out << "]\n";
  }
  return out.str();
}

}  // namespace ein
