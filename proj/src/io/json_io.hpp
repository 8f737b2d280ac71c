#pragma once

#include <string>

#include <json.hpp>

#include "cg/cg.hpp"
#include "elasticity/elasticity.hpp"
#include "invariants/invariants.hpp"
#include "io/latex.hpp"
#include "oracle/oracle.hpp"

namespace cgr {

using Json = nlohmann::ordered_json;

// Exact scalars serialize as {"terms": [{"num","den","rad"}...], "approx": f}
// with terms sorted by radicand; float-backend scalars are plain numbers.
Json scalar_json(const Radical& x);
Json scalar_json(const Approx& x);
Json scalar_json(const Cx<Radical>& x);
Json scalar_json(const Cx<Approx>& x);

Radical radical_from_json(const Json& j);
Approx approx_from_json(const Json& j);

std::string scalar_text(const Radical& x);
std::string scalar_text(const Approx& x);
std::string scalar_text(const Cx<Radical>& x);
std::string scalar_text(const Cx<Approx>& x);

std::string scalar_latex_any(const Radical& x);
std::string scalar_latex_any(const Approx& x);
std::string scalar_latex_any(const Cx<Radical>& x);
std::string scalar_latex_any(const Cx<Approx>& x);

template <class T>
Json matrix_json(const Matrix<T>& m) {
  Json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(scalar_json(m.at(i, c)));
    rows.push_back(std::move(row));
  }
  j["entries"] = std::move(rows);
  return j;
}

template <class T>
std::string matrix_text(const Matrix<T>& m) {
  std::vector<std::vector<std::string>> cells(m.rows());
  size_t width = 0;
  for (int i = 0; i < m.rows(); ++i)
    for (int c = 0; c < m.cols(); ++c) {
      cells[i].push_back(scalar_text(m.at(i, c)));
      width = std::max(width, cells[i].back().size());
    }
  std::string out;
  for (int i = 0; i < m.rows(); ++i) {
    for (int c = 0; c < m.cols(); ++c) {
      const std::string& s = cells[i][c];
      out += std::string(width - s.size() + (c ? 2 : 0), ' ') + s;
    }
    out += "\n";
  }
  return out;
}

template <class T>
std::string matrix_latex(const Matrix<T>& m) {
  std::string out = "\\begin{pmatrix}\n";
  for (int i = 0; i < m.rows(); ++i) {
    for (int c = 0; c < m.cols(); ++c) {
      out += scalar_latex_any(m.at(i, c));
      if (c + 1 < m.cols()) out += " & ";
    }
    out += (i + 1 < m.rows()) ? " \\\\\n" : "\n";
  }
  out += "\\end{pmatrix}\n";
  return out;
}

inline std::string signed_key(int n) {
  return n > 0 ? "+" + std::to_string(n) : std::to_string(n);
}

template <class S>
Json family_json(const CgFamilyH<S>& fam) {
  Json j;
  j["family"] = Json{{"N1", fam.N1}, {"N2", fam.N2}, {"N", fam.N}, {"basis", "h"}};
  Json mats;
  for (int n = -fam.N; n <= fam.N; ++n) mats[signed_key(n)] = matrix_json(fam.at(n));
  j["matrices"] = std::move(mats);
  return j;
}

template <class S>
Json family_json(const CgFamilyE<S>& fam) {
  Json j;
  j["family"] = Json{{"N1", fam.N1}, {"N2", fam.N2}, {"N", fam.N}, {"basis", "e"}};
  Json mats;
  for (int n = -fam.N; n <= fam.N; ++n) mats[signed_key(n)] = matrix_json(fam.at(n));
  j["matrices"] = std::move(mats);
  return j;
}

Json oracle_report_json(const OracleReport& rep);

template <class S>
Json crystal_json(const CrystalReduction<S>& red) {
  Json j;
  j["system"] = red.system;
  j["count"] = red.count;
  auto block = [](const CrystalBlock<S>& b) {
    Json bj;
    bj["dim"] = b.dim();
    if (b.axis_aligned) {
      bj["indices"] = b.indices;
    } else {
      Json basis = Json::array();
      for (const Vec<S>& v : b.basis) {
        Json vec = Json::array();
        for (int i = 0; i < v.dim(); ++i) vec.push_back(scalar_json(v.at(i)));
        basis.push_back(std::move(vec));
      }
      bj["basis"] = std::move(basis);
    }
    return bj;
  };
  j["blocks"] = Json{{"a", block(red.a)}, {"b", block(red.b)}, {"d", block(red.d)}};
  return j;
}

template <class S>
Json model_json(const HyperbolicModel<S>& model) {
  Json j;
  j["state"] = Json::array({"v_-1", "v_0", "v_+1", "p", "s_-2", "s_-1", "s_0", "s_+1", "s_+2"});
  j["density"] = scalar_json(model.density);
  j["A1"] = matrix_json([&] {
    Matrix<S> a1(3, 3);
    for (int i = 0; i < 3; ++i) a1.at(i, i) = model.density;
    return a1;
  }());
  j["A_hat"] = matrix_json(model.a_hat());
  j["delta_constants"] = Json{{"c_minus_1", scalar_json(model.deltas.c_minus_1)},
                              {"c_plus_0", scalar_json(model.deltas.c_plus_0)},
                              {"c_minus_2", scalar_json(model.deltas.c_minus_2)},
                              {"c_plus_1", scalar_json(model.deltas.c_plus_1)}};
  j["hyperbolic"] = hyperbolicity_check(model).ok();
  return j;
}

std::string dump_json(const Json& j);

}  // namespace cgr
