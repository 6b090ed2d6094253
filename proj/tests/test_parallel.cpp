// The parallel kernels against their serial reference implementations.
// Every comparison demands bit-identical results, not just agreement up to
// reordering: the kernels are written so the output layout is fixed.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <vector>

#include "liebra/catalog.hpp"
#include "liebra/dercalc.hpp"
#include "liebra/exec.hpp"
#include "liebra/freenilp.hpp"
#include "liebra/liealg.hpp"
#include "liebra/matrix.hpp"

using namespace liebra;

namespace {

Rational q(long n, long d = 1) { return Rational(n, d); }

// A deterministic rational matrix with mixed signs and denominators.
Matrix mixed_matrix(std::size_t rows, std::size_t cols) {
  Matrix m(rows, cols);
  long k = 1;
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j, ++k)
      m.at(i, j) = q(((k * 7) % 11) - 5, (k % 4) + 1);
  return m;
}

} // namespace

TEST_CASE("the execution policy resolves sensibly") {
  CHECK(exec_thread_count() >= 1);
  CHECK(!exec_use_parallel(Exec::serial, 1'000'000'000));
  // automatic never picks the parallel path for tiny work
  CHECK(!exec_use_parallel(Exec::automatic, 1));
}

TEST_CASE("row reduction is policy-independent, bit for bit") {
  const std::vector<Matrix> cases = {
      mixed_matrix(6, 9),
      mixed_matrix(12, 7),
      mixed_matrix(20, 20),
      Matrix(5, 5),           // all zero
      Matrix::identity(8),
  };
  for (const auto& m : cases) {
    const RrefResult serial = rref_serial(m);
    const RrefResult par = rref(m, Exec::parallel);
    CHECK(serial.mat == par.mat);
    CHECK(serial.pivots == par.pivots);
    CHECK(rref(m, Exec::automatic).mat == serial.mat);
  }
}

TEST_CASE("jacobi scanning is policy-independent") {
  const FreeNilpotent g5 = build_free_nilpotent(5);
  CHECK(jacobi_defect(g5.alg(), Exec::serial).empty());
  CHECK(jacobi_defect(g5.alg(), Exec::parallel).empty());
  // a broken table produces the same defect list in the same order
  std::vector<LieAlgebra::BracketEntry> rows;
  for (const auto& e : g5.alg().nonzero_brackets()) rows.push_back(e);
  // corrupt one structure constant: [v0,v1] = w0 becomes w0 + z0
  for (auto& e : rows)
    if (e.i == 0 && e.j == 1) e.value[3] += q(1);
  const LieAlgebra bad(g5.alg().labels(), rows);
  const auto ds = jacobi_defect(bad, Exec::serial);
  const auto dp = jacobi_defect(bad, Exec::parallel);
  REQUIRE(!ds.empty());
  REQUIRE(ds.size() == dp.size());
  for (std::size_t k = 0; k < ds.size(); ++k) {
    CHECK(ds[k].i == dp[k].i);
    CHECK(ds[k].j == dp[k].j);
    CHECK(ds[k].k == dp[k].k);
    CHECK(ds[k].residual == dp[k].residual);
  }
  // defects come out in lexicographic triple order under both policies
  for (std::size_t k = 1; k < ds.size(); ++k) {
    const auto a = std::array<std::size_t, 3>{ds[k - 1].i, ds[k - 1].j, ds[k - 1].k};
    const auto b = std::array<std::size_t, 3>{ds[k].i, ds[k].j, ds[k].k};
    CHECK(a < b);
  }
}

TEST_CASE("derivation spaces agree across policies") {
  const FreeNilpotent g4 = build_free_nilpotent(4);
  const DerivationSpace serial = derivation_space(g4.alg(), Exec::serial);
  const DerivationSpace par = derivation_space(g4.alg(), Exec::parallel);
  CHECK(serial.dim() == par.dim());
  CHECK(serial.space() == par.space());
  const DerivationSpace gs = graded_components(g4, Exec::serial);
  const DerivationSpace gp = graded_components(g4, Exec::parallel);
  for (std::size_t j = 1; j <= 4; ++j) CHECK(gs.graded(j) == gp.graded(j));
}

TEST_CASE("kernels agree across policies") {
  const Matrix m = mixed_matrix(15, 24);
  CHECK(kernel(m, Exec::serial) == kernel(m, Exec::parallel));
}

TEST_CASE("the audit report is identical under both policies") {
  const Catalog c = Catalog::load();
  const AuditReport serial = audit_all(c, Exec::serial);
  const AuditReport par = audit_all(c, Exec::parallel);
  REQUIRE(serial.checks.size() == par.checks.size());
  for (std::size_t i = 0; i < serial.checks.size(); ++i) {
    CHECK(serial.checks[i].entry == par.checks[i].entry);
    CHECK(serial.checks[i].check == par.checks[i].check);
    CHECK(serial.checks[i].pass == par.checks[i].pass);
    CHECK(serial.checks[i].detail == par.checks[i].detail);
  }
  CHECK(serial.text() == par.text());
  CHECK(serial.all_ok());
}
