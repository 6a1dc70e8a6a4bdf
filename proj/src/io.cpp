#include "lsvar/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace lsvar {

namespace {

using nlohmann::json;

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

json matrix_to_json(const Matrix& M) {
  json rows = json::array();
  for (Index i = 0; i < M.rows(); ++i) {
    json row = json::array();
    for (Index j = 0; j < M.cols(); ++j) row.push_back(M(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const json& rows, const std::string& field) {
  if (!rows.is_array()) throw ParseError("expected an array for field " + field);
  const Index nr = static_cast<Index>(rows.size());
  if (nr == 0) return Matrix(0, 0);
  const Index nc = static_cast<Index>(rows[0].size());
  Matrix M(nr, nc);
  for (Index i = 0; i < nr; ++i) {
    if (static_cast<Index>(rows[i].size()) != nc)
      throw ParseError("ragged rows in field " + field);
    for (Index j = 0; j < nc; ++j) M(i, j) = rows[i][j].get<double>();
  }
  return M;
}

}  // namespace

Matrix read_csv_matrix(std::istream& in, const std::string& name) {
  std::vector<std::vector<double>> rows;
  std::string line;
  int line_no = 0;
  bool maybe_header = true;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::vector<double> row;
    std::stringstream ss(line);
    std::string cell;
    int col = 0;
    bool numeric = true;
    while (std::getline(ss, cell, ',')) {
      ++col;
      try {
        size_t used = 0;
        const double v = std::stod(cell, &used);
        while (used < cell.size() && std::isspace(static_cast<unsigned char>(cell[used]))) ++used;
        if (used != cell.size()) throw std::invalid_argument("trailing characters");
        row.push_back(v);
      } catch (const std::exception&) {
        numeric = false;
        if (maybe_header) break;
        throw ParseError(name + ": cannot parse '" + cell + "' at row " +
                         std::to_string(line_no) + ", column " + std::to_string(col));
      }
    }
    maybe_header = false;
    if (!numeric) continue;  // header line skipped
    if (!rows.empty() && row.size() != rows.front().size())
      throw ParseError(name + ": row " + std::to_string(line_no) + " has " +
                       std::to_string(row.size()) + " columns, expected " +
                       std::to_string(rows.front().size()));
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError(name + ": no numeric rows");
  Matrix M(static_cast<Index>(rows.size()), static_cast<Index>(rows.front().size()));
  for (Index i = 0; i < M.rows(); ++i)
    for (Index j = 0; j < M.cols(); ++j) M(i, j) = rows[i][j];
  return M;
}

Matrix read_csv_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return read_csv_matrix(in, path);
}

void write_csv_matrix(std::ostream& out, const Matrix& M) {
  for (Index i = 0; i < M.rows(); ++i) {
    for (Index j = 0; j < M.cols(); ++j) {
      if (j) out << ',';
      out << format_double(M(i, j));
    }
    out << '\n';
  }
}

void write_csv_matrix_file(const std::string& path, const Matrix& M) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open " + path + " for writing");
  write_csv_matrix(out, M);
}

std::string to_json(const StructuredTransition& T) {
  json doc;
  doc["p"] = T.p;
  doc["L"] = matrix_to_json(T.L);
  doc["S"] = matrix_to_json(T.S);
  doc["G"] = matrix_to_json(T.G);
  json part;
  part["K"] = T.partition.K();
  json groups = json::array();
  for (const auto& g : T.partition.groups) groups.push_back(g);
  part["groups"] = std::move(groups);
  doc["partition"] = std::move(part);
  return doc.dump(1);
}

StructuredTransition structured_transition_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid transition JSON: ") + e.what());
  }
  StructuredTransition T;
  T.p = doc.at("p").get<int>();
  T.L = matrix_from_json(doc.at("L"), "L");
  T.S = matrix_from_json(doc.at("S"), "S");
  T.G = matrix_from_json(doc.at("G"), "G");
  T.partition.p = T.p;
  for (const auto& g : doc.at("partition").at("groups")) {
    std::vector<Index> grp;
    for (const auto& idx : g) grp.push_back(idx.get<Index>());
    T.partition.groups.push_back(std::move(grp));
  }
  T.validate();
  return T;
}

std::string to_json(const StabilityReport& r) {
  json doc;
  doc["rho"] = r.rho;
  doc["stable"] = r.stable;
  doc["mu_max"] = r.mu_max;
  doc["mu_min"] = r.mu_min;
  doc["M_fx"] = r.M_fx;
  doc["m_fx"] = r.m_fx;
  doc["lemma1_bound"] = r.lemma1_bound;
  doc["zeta_lower"] = r.zeta_lower;
  doc["theta_grid_size"] = r.theta_grid_size;
  return doc.dump(1);
}

std::string to_json(const EvalReport& r) {
  json doc;
  auto agg = [](const Aggregate& a) {
    return json{{"mean", a.mean}, {"sd", a.sd}, {"median", a.median}};
  };
  doc["tpr"] = agg(r.tpr);
  doc["far"] = agg(r.far);
  doc["ee"] = agg(r.ee);
  doc["pe"] = agg(r.pe);
  doc["r_hat"] = agg(r.r_hat);
  doc["replications"] = r.replications;
  return doc.dump(1);
}

void write_trace_csv(std::ostream& out, const SolveTrace& trace) {
  out << "iteration,objective,eta,alpha,Q,line_searches,ax_count,objective_ag\n";
  for (const auto& it : trace.iterations) {
    out << it.iter << ',' << format_double(it.objective) << ',' << format_double(it.eta) << ','
        << format_double(it.alpha) << ',' << format_double(it.Q) << ',' << it.line_searches
        << ',' << it.ax_count << ',' << format_double(it.objective_ag) << '\n';
  }
}

void write_trace_csv_file(const std::string& path, const SolveTrace& trace) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open " + path + " for writing");
  write_trace_csv(out, trace);
}

void write_edge_list_csv(std::ostream& out, const Matrix& M, double threshold) {
  out << "source,target,weight\n";
  for (Index i = 0; i < M.rows(); ++i)
    for (Index j = 0; j < M.cols(); ++j)
      if (std::abs(M(i, j)) > threshold)
        out << i << ',' << j << ',' << format_double(M(i, j)) << '\n';
}

void write_edge_list_csv_file(const std::string& path, const Matrix& M, double threshold) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open " + path + " for writing");
  write_edge_list_csv(out, M, threshold);
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open " + path + " for writing");
  out << text;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace lsvar
