// Copyright 2026 The splitcert Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "splitcert/problem_io.hpp"

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <utility>

#include <json.hpp>

namespace splitcert {

namespace {

using json = nlohmann::ordered_json;

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

json vector_to_json(const Vector& v) {
  json arr = json::array();
  for (Index i = 0; i < v.size(); ++i) arr.push_back(v(i));
  return arr;
}

Matrix matrix_from_json(const json& j, const std::string& name) {
  if (!j.is_array()) throw ParseError(name + ": expected array of rows");
  const Index rows = static_cast<Index>(j.size());
  Index cols = -1;
  for (const auto& row : j) {
    if (!row.is_array()) throw ParseError(name + ": row is not an array");
    if (cols < 0) {
      cols = static_cast<Index>(row.size());
    } else if (cols != static_cast<Index>(row.size())) {
      throw ParseError(name + ": ragged rows");
    }
  }
  if (rows == 0) return Matrix(0, 0);
  Matrix m(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    for (Index jj = 0; jj < cols; ++jj) {
      const auto& cell = j[static_cast<std::size_t>(i)][static_cast<std::size_t>(jj)];
      if (!cell.is_number()) throw ParseError(name + ": non-numeric entry");
      m(i, jj) = cell.get<double>();
    }
  }
  if (!all_finite(m)) throw ParseError(name + ": non-finite entry");
  return m;
}

Vector vector_from_json(const json& j, const std::string& name) {
  if (!j.is_array()) throw ParseError(name + ": expected array");
  Vector v(static_cast<Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number()) throw ParseError(name + ": non-numeric entry");
    v(static_cast<Index>(i)) = j[i].get<double>();
  }
  if (!all_finite(v)) throw ParseError(name + ": non-finite entry");
  return v;
}

QuadraticFunction quadratic_from_json(const json& j, const std::string& name) {
  if (!j.is_object()) throw ParseError(name + ": expected object {P,q,r0}");
  if (!j.contains("P") || !j.contains("q")) {
    throw ParseError(name + ": missing P or q");
  }
  Matrix P = matrix_from_json(j["P"], name + ".P");
  Vector q = vector_from_json(j["q"], name + ".q");
  if (P.rows() == 0) P = Matrix::Zero(q.size(), q.size());
  double r0 = 0.0;
  if (j.contains("r0")) {
    if (!j["r0"].is_number()) throw ParseError(name + ".r0: not a number");
    r0 = j["r0"].get<double>();
  }
  try {
    return QuadraticFunction(std::move(P), std::move(q), r0);
  } catch (const Error& e) {
    throw ParseError(name + ": " + e.what());
  }
}

PolyhedralSet set_from_json(const json& j, Index dim, const std::string& name) {
  Matrix G(0, dim);
  Vector h(0);
  Matrix E(0, dim);
  Vector d(0);
  if (!j.is_null()) {
    if (!j.is_object()) throw ParseError(name + ": expected object {G,h,E,d}");
    if (j.contains("G")) {
      G = matrix_from_json(j["G"], name + ".G");
      if (!j.contains("h")) throw ParseError(name + ": G without h");
      h = vector_from_json(j["h"], name + ".h");
      if (G.rows() == 0) G.resize(0, dim);
    }
    if (j.contains("E")) {
      E = matrix_from_json(j["E"], name + ".E");
      if (!j.contains("d")) throw ParseError(name + ": E without d");
      d = vector_from_json(j["d"], name + ".d");
      if (E.rows() == 0) E.resize(0, dim);
    }
  }
  try {
    return PolyhedralSet(std::move(G), std::move(h), std::move(E),
                         std::move(d), dim);
  } catch (const Error& e) {
    throw ParseError(name + ": " + e.what());
  }
}

}  // namespace

SplitProblem parse_problem_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("problem JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("problem JSON: expected object");
  for (const char* key : {"f", "g", "A", "B", "c"}) {
    if (!j.contains(key)) {
      throw ParseError(std::string("problem JSON: missing key ") + key);
    }
  }
  QuadraticFunction f = quadratic_from_json(j["f"], "f");
  QuadraticFunction g = quadratic_from_json(j["g"], "g");
  Matrix A = matrix_from_json(j["A"], "A");
  Matrix B = matrix_from_json(j["B"], "B");
  Vector c = vector_from_json(j["c"], "c");
  if (A.rows() == 0) A.resize(0, f.dim());
  if (B.rows() == 0) B.resize(0, g.dim());
  PolyhedralSet X = set_from_json(j.contains("X") ? j["X"] : json(), f.dim(), "X");
  PolyhedralSet Y = set_from_json(j.contains("Y") ? j["Y"] : json(), g.dim(), "Y");
  return SplitProblem(std::move(f), std::move(g), std::move(A), std::move(B),
                      std::move(c), std::move(X), std::move(Y));
}

std::string serialize_problem_json(const SplitProblem& prob) {
  json j;
  j["f"] = {{"P", matrix_to_json(prob.f.P)},
            {"q", vector_to_json(prob.f.q)},
            {"r0", prob.f.r0}};
  j["g"] = {{"P", matrix_to_json(prob.g.P)},
            {"q", vector_to_json(prob.g.q)},
            {"r0", prob.g.r0}};
  j["A"] = matrix_to_json(prob.A);
  j["B"] = matrix_to_json(prob.B);
  j["c"] = vector_to_json(prob.c);
  json X = json::object();
  if (prob.X.num_inequalities() > 0) {
    X["G"] = matrix_to_json(prob.X.G);
    X["h"] = vector_to_json(prob.X.h);
  }
  if (prob.X.num_equalities() > 0) {
    X["E"] = matrix_to_json(prob.X.E);
    X["d"] = vector_to_json(prob.X.d);
  }
  json Y = json::object();
  if (prob.Y.num_inequalities() > 0) {
    Y["G"] = matrix_to_json(prob.Y.G);
    Y["h"] = vector_to_json(prob.Y.h);
  }
  if (prob.Y.num_equalities() > 0) {
    Y["E"] = matrix_to_json(prob.Y.E);
    Y["d"] = vector_to_json(prob.Y.d);
  }
  j["X"] = std::move(X);
  j["Y"] = std::move(Y);
  return j.dump(2) + "\n";
}

SplitProblem load_problem(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open problem file: " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_problem_json(buf.str());
}

void save_problem(const SplitProblem& prob, const std::filesystem::path& path) {
  write_text_atomic(serialize_problem_json(prob), path);
}

std::string trace_to_csv(const std::vector<CertificateRecord>& trace) {
  std::string out =
      "k,r_norm,p_k,dual_residual,V_k,ineq1_slack,ineq2_slack,lyap_slack,"
      "inner_product,dual_gap\n";
  const auto opt = [](const std::optional<double>& v) {
    return v.has_value() ? fmt17(*v) : std::string();
  };
  for (const auto& rec : trace) {
    out += std::to_string(rec.k);
    out += ',' + fmt17(rec.r_norm);
    out += ',' + fmt17(rec.p_k);
    out += ',' + fmt17(rec.dual_residual);
    out += ',' + opt(rec.V_k);
    out += ',' + opt(rec.ineq1_slack);
    out += ',' + opt(rec.ineq2_slack);
    out += ',' + opt(rec.lyapunov_descent_slack);
    out += ',' + fmt17(rec.inner_product);
    out += ',' + opt(rec.dual_gap);
    out += '\n';
  }
  return out;
}

std::string serialize_reference_json(const ReferenceSolution& ref) {
  json j;
  j["x_star"] = vector_to_json(ref.x_star);
  j["y_star"] = vector_to_json(ref.y_star);
  j["lambda_star"] = vector_to_json(ref.lambda_star);
  j["p_star"] = ref.p_star;
  j["x_inequality_multipliers"] = vector_to_json(ref.x_ineq_multipliers);
  j["y_inequality_multipliers"] = vector_to_json(ref.y_ineq_multipliers);
  j["unique_primal"] = ref.unique_primal;
  return j.dump(2) + "\n";
}

std::string serialize_solve_report_json(const SolveReport& report,
                                        const SolverConfig& cfg,
                                        const ReferenceSolution* ref) {
  json j;
  j["status"] = to_string(report.status);
  j["iterations"] = report.iterations;
  j["config"] = {{"rho", cfg.rho},
                 {"max_iters", cfg.max_iters},
                 {"eps_primal", cfg.eps_primal},
                 {"eps_dual", cfg.eps_dual},
                 {"certificates", to_string(cfg.certificate_mode)}};
  if (report.status == SolveStatus::kSubproblemError) {
    j["failed_iteration"] = report.failed_iteration;
    j["error"] = report.error_message;
  }
  const auto& fin = report.final;
  j["final"] = {{"k", fin.k},
                {"x", vector_to_json(fin.x)},
                {"y", vector_to_json(fin.y)},
                {"lambda", vector_to_json(fin.lambda)},
                {"r_norm", fin.r.norm()},
                {"p", fin.p}};
  if (!report.trace.empty()) {
    const auto& last = report.trace.back();
    json cert = {{"inner_product", last.inner_product},
                 {"dual_residual", last.dual_residual},
                 {"hat_lambda", vector_to_json(last.hat_lambda)}};
    if (last.V_k) cert["V_k"] = *last.V_k;
    if (last.dual_gap) cert["dual_gap"] = *last.dual_gap;
    j["final_certificates"] = std::move(cert);
  }
  if (ref != nullptr) {
    j["reference"] = {
        {"p_star", ref->p_star},
        {"x_star", vector_to_json(ref->x_star)},
        {"y_star", vector_to_json(ref->y_star)},
        {"lambda_star", vector_to_json(ref->lambda_star)},
        {"unique_primal", ref->unique_primal},
        {"objective_gap", std::abs(fin.p - ref->p_star)},
        {"x_error", (fin.x - ref->x_star).cwiseAbs().maxCoeff()},
        {"y_error", (fin.y - ref->y_star).cwiseAbs().maxCoeff()}};
  }
  return j.dump(2) + "\n";
}

void write_text_atomic(const std::string& text,
                       const std::filesystem::path& path) {
  namespace fs = std::filesystem;
  const fs::path dir = path.has_parent_path() ? path.parent_path() : ".";
  const fs::path tmp = dir / (path.filename().string() + ".tmp");
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write file: " + tmp.string());
    out << text;
    out.flush();
    if (!out) throw Error("short write: " + tmp.string());
  }
  fs::rename(tmp, path);
}

}  // namespace splitcert
