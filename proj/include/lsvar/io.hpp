#pragma once

#include <iosfwd>
#include <string>

#include "lsvar/eval.hpp"
#include "lsvar/solver.hpp"
#include "lsvar/stability.hpp"
#include "lsvar/types.hpp"

namespace lsvar {

/// Reads a rectangular numeric CSV; a non-numeric first line is treated as a
/// header and skipped. Parse failures name the 1-based row and column.
Matrix read_csv_matrix(std::istream& in, const std::string& name = "<stream>");
Matrix read_csv_matrix_file(const std::string& path);

/// Writes with 17 significant digits so values round-trip bit-exactly.
void write_csv_matrix(std::ostream& out, const Matrix& M);
void write_csv_matrix_file(const std::string& path, const Matrix& M);

std::string to_json(const StructuredTransition& T);
StructuredTransition structured_transition_from_json(const std::string& text);

std::string to_json(const StabilityReport& report);
std::string to_json(const EvalReport& report);

/// iteration, objective, eta, alpha, Q, line_searches, ax_count.
void write_trace_csv(std::ostream& out, const SolveTrace& trace);
void write_trace_csv_file(const std::string& path, const SolveTrace& trace);

/// Granger edges (source, target, weight): one row per entry of M with
/// |M(source, target)| above the threshold.
void write_edge_list_csv(std::ostream& out, const Matrix& M, double threshold = 0.0);
void write_edge_list_csv_file(const std::string& path, const Matrix& M, double threshold = 0.0);

void write_text_file(const std::string& path, const std::string& text);
std::string read_text_file(const std::string& path);

}  // namespace lsvar
