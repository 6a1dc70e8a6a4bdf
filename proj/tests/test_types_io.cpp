#include <doctest.h>

#include <sstream>

#include "lsvar/io.hpp"
#include "lsvar/types.hpp"
#include "test_support.hpp"

using namespace lsvar;
using namespace lsvar::testing;

TEST_SUITE_BEGIN("types_io");

TEST_CASE("partition schemes validate") {
  GroupPartition cols = GroupPartition::columns(3);
  CHECK(cols.K() == 3);
  CHECK(cols.max_group_size() == 3);
  CHECK_NOTHROW(cols.validate());

  GroupPartition singles = GroupPartition::singletons(3);
  CHECK(singles.K() == 9);
  CHECK(singles.max_group_size() == 1);
  CHECK_NOTHROW(singles.validate());
}

TEST_CASE("partition validation rejects overlap and gaps") {
  GroupPartition bad;
  bad.p = 2;
  bad.groups = {{0, 1}, {1, 2, 3}};  // overlap at 1
  CHECK_THROWS_AS(bad.validate(), ParameterError);

  bad.groups = {{0, 1}, {3}};  // index 2 missing
  CHECK_THROWS_AS(bad.validate(), ParameterError);

  bad.groups = {{0, 1, 2, 3}, {}};  // empty group
  CHECK_THROWS_AS(bad.validate(), ParameterError);

  bad.groups = {{0, 1, 2, 4}};  // out of range
  CHECK_THROWS_AS(bad.validate(), ParameterError);
}

TEST_CASE("structured transition counts components") {
  StructuredTransition T = StructuredTransition::zero(3);
  T.S(0, 1) = 0.5;
  T.S(2, 2) = -0.1;
  T.G.col(1) = Vector::Ones(3);
  CHECK(T.sparse_count() == 2);
  CHECK(T.group_count() == 1);
  CHECK(T.rank() == 0);
  CHECK((T.total() - (T.L + T.S + T.G)).norm() == 0.0);
}

TEST_CASE("design stacking is newest-first and round-trips") {
  Matrix series(4, 2);  // observations at times 0..3
  series << 0, 1, 2, 3, 4, 5, 6, 7;
  const VarSample s = VarSample::from_series(series);
  CHECK(s.N() == 3);
  // Y row 0 is the newest observation, X row 0 the one before it.
  CHECK(s.Y(0, 0) == 6);
  CHECK(s.X(0, 0) == 4);
  CHECK(s.Y(2, 0) == 2);
  CHECK(s.X(2, 0) == 0);
  CHECK((s.to_series() - series).norm() == 0.0);
}

TEST_CASE("csv matrices round-trip at full precision") {
  const Matrix M = random_matrix(5, 3, 11);
  std::stringstream ss;
  write_csv_matrix(ss, M);
  const Matrix back = read_csv_matrix(ss);
  CHECK((back - M).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("csv reader reports row and column of a parse failure") {
  std::stringstream ss("1.0,2.0\n3.0,oops\n");
  try {
    read_csv_matrix(ss, "test.csv");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("row 2") != std::string::npos);
    CHECK(msg.find("column 2") != std::string::npos);
  }
}

TEST_CASE("csv reader skips a header line and rejects ragged rows") {
  std::stringstream with_header("a,b\n1,2\n3,4\n");
  const Matrix M = read_csv_matrix(with_header);
  CHECK(M.rows() == 2);
  CHECK(M(1, 1) == 4);

  std::stringstream ragged("1,2\n3\n");
  CHECK_THROWS_AS(read_csv_matrix(ragged), ParseError);
}

TEST_CASE("transition JSON reloads to bit-equal matrices") {
  StructuredTransition T = StructuredTransition::zero(3);
  T.L = random_matrix(3, 3, 21);
  T.S = random_matrix(3, 3, 22);
  T.G = random_matrix(3, 3, 23);
  const StructuredTransition back = structured_transition_from_json(to_json(T));
  CHECK((back.L - T.L).cwiseAbs().maxCoeff() == 0.0);
  CHECK((back.S - T.S).cwiseAbs().maxCoeff() == 0.0);
  CHECK((back.G - T.G).cwiseAbs().maxCoeff() == 0.0);
  CHECK(back.partition.K() == T.partition.K());
}

TEST_CASE("edge list carries row-to-column links above the threshold") {
  Matrix M = Matrix::Zero(3, 3);
  M(1, 2) = 0.5;   // series 1 -> series 2
  M(0, 0) = 1e-12;
  std::stringstream ss;
  write_edge_list_csv(ss, M, 1e-10);
  CHECK(ss.str() == "source,target,weight\n1,2,0.5\n");
}

TEST_CASE("aggregate computes mean, sd, median") {
  const Aggregate a = aggregate({1.0, 2.0, 3.0, 4.0});
  CHECK(a.mean == doctest::Approx(2.5));
  CHECK(a.median == doctest::Approx(2.5));
  CHECK(a.sd == doctest::Approx(std::sqrt(5.0 / 3.0)));
}

TEST_SUITE_END();
