#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>
#include <vector>

namespace lsvar {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

// Error taxonomy. The CLI maps ParameterError/ParseError to exit code 2 and
// everything else to exit code 3.
class ParameterError : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

class StabilityError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

class NumericError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

class SingularityError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Partition of the p*p matrix positions {0, ..., p^2-1} (column-major flat
/// indices) into K disjoint nonempty groups.
struct GroupPartition {
  int p = 0;
  std::vector<std::vector<Index>> groups;

  int K() const { return static_cast<int>(groups.size()); }
  Index max_group_size() const;  // m
  double mean_group_size() const;

  /// One group per matrix column (K = p). The default scheme.
  static GroupPartition columns(int p);
  /// One group per entry (K = p^2); group norms degenerate to |entry|.
  static GroupPartition singletons(int p);

  /// Throws ParameterError unless groups are disjoint, nonempty, and cover
  /// {0..p^2-1} exactly.
  void validate() const;
};

/// Number of singular values above rel_tol * (largest singular value).
int numeric_rank(const Matrix& M, double rel_tol = 1e-10);

/// A transition matrix B = L + S + G with its components kept separate.
/// Absent components are zero matrices of the right shape.
struct StructuredTransition {
  int p = 0;
  Matrix L, S, G;
  GroupPartition partition;

  static StructuredTransition zero(int p);

  Matrix total() const { return L + S + G; }
  int rank(double rel_tol = 1e-10) const { return numeric_rank(L, rel_tol); }
  int sparse_count(double zero_tol = 0.0) const;        // s = ||S||_0
  int group_count(double zero_tol = 0.0) const;         // g = ||G||_{2,0}

  void validate() const;
};

/// Autoregressive design built from T+1 consecutive observations: row i of X
/// is the observation at time T-1-i, row i of Y the one at time T-i (newest
/// first). E holds the innovations in the same order and is empty for
/// ingested data.
struct VarSample {
  Matrix Y, X, E;
  double sigma_eps = std::numeric_limits<double>::quiet_NaN();

  int N() const { return static_cast<int>(Y.rows()); }
  int p() const { return static_cast<int>(Y.cols()); }

  /// Stack a time-ascending (T+1) x p series into the regression design.
  static VarSample from_series(const Matrix& series);
  /// Recover the time-ascending series (inverse of from_series).
  Matrix to_series() const;
  /// Sample restricted to the rows [first, first+count) of Y/X/E.
  VarSample rows(int first, int count) const;
};

struct Aggregate {
  double mean = 0, sd = 0, median = 0;
};

Aggregate aggregate(std::vector<double> values);

}  // namespace lsvar
