#include "lsvar/types.hpp"

#include <algorithm>
#include <cmath>

namespace lsvar {

Index GroupPartition::max_group_size() const {
  Index m = 0;
  for (const auto& g : groups) m = std::max(m, static_cast<Index>(g.size()));
  return m;
}

double GroupPartition::mean_group_size() const {
  if (groups.empty()) return 0.0;
  return static_cast<double>(p) * p / static_cast<double>(groups.size());
}

GroupPartition GroupPartition::columns(int p) {
  GroupPartition part;
  part.p = p;
  part.groups.resize(p);
  for (int c = 0; c < p; ++c) {
    part.groups[c].resize(p);
    for (int r = 0; r < p; ++r) part.groups[c][r] = static_cast<Index>(c) * p + r;
  }
  return part;
}

GroupPartition GroupPartition::singletons(int p) {
  GroupPartition part;
  part.p = p;
  part.groups.resize(static_cast<size_t>(p) * p);
  for (Index i = 0; i < static_cast<Index>(p) * p; ++i) part.groups[i] = {i};
  return part;
}

void GroupPartition::validate() const {
  if (p <= 0) throw ParameterError("GroupPartition: dimension must be positive");
  if (groups.empty()) throw ParameterError("GroupPartition: needs at least one group");
  const Index total = static_cast<Index>(p) * p;
  std::vector<char> seen(total, 0);
  Index covered = 0;
  for (const auto& g : groups) {
    if (g.empty()) throw ParameterError("GroupPartition: empty group");
    for (Index idx : g) {
      if (idx < 0 || idx >= total)
        throw ParameterError("GroupPartition: index " + std::to_string(idx) + " out of range");
      if (seen[idx])
        throw ParameterError("GroupPartition: index " + std::to_string(idx) + " appears twice");
      seen[idx] = 1;
      ++covered;
    }
  }
  if (covered != total)
    throw ParameterError("GroupPartition: groups cover " + std::to_string(covered) + " of " +
                         std::to_string(total) + " positions");
}

int numeric_rank(const Matrix& M, double rel_tol) {
  if (M.size() == 0) return 0;
  Eigen::BDCSVD<Matrix> svd(M);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s(0) <= 0) return 0;
  const double cut = rel_tol * s(0);
  int r = 0;
  for (Index i = 0; i < s.size(); ++i)
    if (s(i) > cut) ++r;
  return r;
}

StructuredTransition StructuredTransition::zero(int p) {
  StructuredTransition t;
  t.p = p;
  t.L = Matrix::Zero(p, p);
  t.S = Matrix::Zero(p, p);
  t.G = Matrix::Zero(p, p);
  t.partition = GroupPartition::columns(p);
  return t;
}

int StructuredTransition::sparse_count(double zero_tol) const {
  int s = 0;
  for (Index j = 0; j < S.cols(); ++j)
    for (Index i = 0; i < S.rows(); ++i)
      if (std::abs(S(i, j)) > zero_tol) ++s;
  return s;
}

int StructuredTransition::group_count(double zero_tol) const {
  int g = 0;
  const Eigen::Map<const Vector> flat(G.data(), G.size());
  for (const auto& grp : partition.groups) {
    double sq = 0;
    for (Index idx : grp) sq += flat(idx) * flat(idx);
    if (std::sqrt(sq) > zero_tol) ++g;
  }
  return g;
}

void StructuredTransition::validate() const {
  if (p <= 0) throw ParameterError("StructuredTransition: dimension must be positive");
  auto check = [&](const Matrix& M, const char* name) {
    if (M.rows() != p || M.cols() != p)
      throw ParameterError(std::string("StructuredTransition: component ") + name +
                           " has wrong shape");
  };
  check(L, "L");
  check(S, "S");
  check(G, "G");
  if (partition.p != p)
    throw ParameterError("StructuredTransition: partition dimension mismatch");
  partition.validate();
}

VarSample VarSample::from_series(const Matrix& series) {
  const Index T = series.rows() - 1;
  if (T < 1) throw ParameterError("VarSample: need at least two observations");
  VarSample s;
  s.Y.resize(T, series.cols());
  s.X.resize(T, series.cols());
  // Newest observation first: Y row i is time T-i, X row i is time T-1-i.
  for (Index i = 0; i < T; ++i) {
    s.Y.row(i) = series.row(T - i);
    s.X.row(i) = series.row(T - 1 - i);
  }
  s.E.resize(0, series.cols());
  return s;
}

Matrix VarSample::to_series() const {
  const Index T = Y.rows();
  Matrix series(T + 1, Y.cols());
  for (Index i = 0; i < T; ++i) series.row(T - 1 - i) = X.row(i);
  series.row(T) = Y.row(0);
  return series;
}

VarSample VarSample::rows(int first, int count) const {
  if (first < 0 || count < 0 || first + count > N())
    throw ParameterError("VarSample::rows: range out of bounds");
  VarSample s;
  s.Y = Y.middleRows(first, count);
  s.X = X.middleRows(first, count);
  s.E = E.rows() == Y.rows() ? Matrix(E.middleRows(first, count)) : Matrix(0, Y.cols());
  s.sigma_eps = sigma_eps;
  return s;
}

Aggregate aggregate(std::vector<double> values) {
  Aggregate a;
  if (values.empty()) return a;
  const double n = static_cast<double>(values.size());
  double sum = 0;
  for (double v : values) sum += v;
  a.mean = sum / n;
  double ss = 0;
  for (double v : values) ss += (v - a.mean) * (v - a.mean);
  a.sd = values.size() > 1 ? std::sqrt(ss / (n - 1)) : 0.0;
  std::sort(values.begin(), values.end());
  const size_t mid = values.size() / 2;
  a.median = values.size() % 2 ? values[mid] : 0.5 * (values[mid - 1] + values[mid]);
  return a;
}

}  // namespace lsvar
