#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "oracles.hpp"
#include "riemann/branches.hpp"
#include "riemann/errors.hpp"

using namespace riemann;

namespace {

const double kSqrt3 = std::sqrt(3.0);

bool close(Complex a, Complex b, double tol) { return std::abs(a - b) <= tol; }

}  // namespace

TEST_CASE("IndexedFunction admissible sets") {
  CHECK_THROWS_AS(IndexedFunction::root(1), std::invalid_argument);
  CHECK_THROWS_AS(IndexedFunction::root(0), std::invalid_argument);

  const auto cbrt = IndexedFunction::root(3);
  CHECK(cbrt.index_bounds() == std::pair{-1, 1});
  CHECK(IndexedFunction::root(2).index_bounds() == std::pair{0, 1});
  CHECK(IndexedFunction::root(4).index_bounds() == std::pair{-1, 2});
  CHECK(IndexedFunction::root(5).index_bounds() == std::pair{-2, 2});
  CHECK_FALSE(IndexedFunction::log().index_bounds().has_value());
  CHECK(IndexedFunction::log().admits(-1000));
  CHECK_FALSE(cbrt.admits(2));

  CHECK(cbrt.successor(-1) == 0);
  CHECK(cbrt.successor(1) == -1);
  CHECK(IndexedFunction::log().successor(4) == 5);
  CHECK(cbrt.name() == "root:3");
  CHECK(IndexedFunction::log().name() == "log");
}

TEST_CASE("principal_phase") {
  CHECK(principal_phase(1.0) == 0.0);
  CHECK(principal_phase(-1.0) == kPi);
  CHECK(principal_phase(Complex(0.0, -1.0)) == -kPi / 2);
  // Negative zero is treated as +0: the negative real axis stays on the upper lip.
  CHECK(principal_phase(Complex(-3.0, -0.0)) == kPi);
  CHECK(principal_turns(Complex(-3.0, 0.0)) == 1.0);
  CHECK(principal_turns(Complex(0.0, 2.0)) == 0.5);

  CHECK_THROWS_AS(principal_phase(0.0), DomainError);
  CHECK_THROWS_AS(principal_phase(Complex(-0.0, 0.0)), DomainError);
  CHECK_THROWS_AS(principal_phase(Complex(std::nan(""), 1.0)), DomainError);
  CHECK_THROWS_AS(principal_phase(Complex(INFINITY, 1.0)), DomainError);
}

TEST_CASE("log_branch examples") {
  CHECK(close(log_branch(std::exp(2.0), 0), 2.0, 1e-15));
  CHECK(close(log_branch(1.0, 1), Complex(0.0, 2 * kPi), 0.0));
  CHECK(close(log_branch(-1.0, -1), Complex(0.0, -kPi), 0.0));
  CHECK_THROWS_AS(log_branch(0.0, 0), DomainError);
}

TEST_CASE("root_branch examples") {
  const auto cbrt = IndexedFunction::root(3);
  CHECK(close(root_branch(-8.0, cbrt, 0), Complex(1.0, kSqrt3), 1e-12));
  CHECK(close(root_branch(-8.0, cbrt, 1), -2.0, 1e-12));
  CHECK(close(root_branch(-8.0, cbrt, -1), Complex(1.0, -kSqrt3), 1e-12));
  CHECK(close(root_branch(16.0, IndexedFunction::root(2), 1), -4.0, 1e-12));

  CHECK_THROWS_AS(root_branch(0.0, cbrt, 0), DomainError);
  CHECK_THROWS_AS(root_branch(1.0, cbrt, 2), BranchIndexError);
  CHECK_THROWS_AS(root_branch(1.0, IndexedFunction::root(2), -1), BranchIndexError);
}

TEST_CASE("root_branch of -8 matches the brute-force root set") {
  const auto roots = oracle::all_roots(-8.0, 3);
  for (int k : {-1, 0, 1}) {
    const Complex w = root_branch(-8.0, IndexedFunction::root(3), k);
    int hits = 0;
    for (const auto& r : roots) hits += close(w, r, 1e-12);
    CHECK(hits == 1);
  }
}

TEST_CASE("polar lower lip evaluates the limit from below the cut") {
  const auto cbrt = IndexedFunction::root(3);
  const PolarPoint below{8.0, -1.0};
  // Just below the cut, the principal root approaches 2 e^{-i pi/3}.
  CHECK(close(root_branch(below, cbrt, 0), Complex(1.0, -kSqrt3), 1e-12));
  CHECK(close(root_branch(below, cbrt, 1), Complex(1.0, kSqrt3), 1e-12));
  CHECK(root_phase_turns(below, cbrt, -1) == -1.0);
  CHECK(log_branch_imag(PolarPoint{1.0, -1.0}, 1) == log_branch_imag(PolarPoint{1.0, 1.0}, 0));
  CHECK_THROWS_AS(root_branch(PolarPoint{1.0, 1.5}, cbrt, 0), DomainError);
  CHECK_THROWS_AS(root_branch(PolarPoint{0.0, 0.0}, cbrt, 0), DomainError);
}

TEST_CASE("branch_of examples and boundaries") {
  const auto cbrt = IndexedFunction::root(3);
  const auto log = IndexedFunction::log();
  CHECK(branch_of(Complex(1.0, kSqrt3), cbrt) == 0);
  CHECK(branch_of(Complex(0.5, 2 * kPi), log) == 1);
  CHECK(branch_of(-2.0, cbrt) == 1);
  CHECK_THROWS_AS(branch_of(0.0, cbrt), DomainError);

  // Upper strip boundaries belong to the lower branch.
  CHECK(branch_of(Complex(0.0, kPi), log) == 0);
  CHECK(branch_of(Complex(0.0, 3 * kPi), log) == 1);
  CHECK(branch_of(Complex(0.0, -kPi), log) == -1);
  CHECK(branch_of(Complex(0.0, std::nextafter(kPi, 4.0)), log) == 1);

  // Even roots: the top branch owns the negative real axis.
  const auto sq = IndexedFunction::root(2);
  CHECK(branch_of(Complex(0.0, 1.0), sq) == 0);
  CHECK(branch_of(Complex(0.0, -1.0), sq) == 1);
  CHECK(branch_of(-1.0, sq) == 1);
  const auto r4 = IndexedFunction::root(4);
  CHECK(branch_of(Complex(-1.0, -0.1), r4) == 2);
  CHECK(branch_of(Complex(-0.1, -1.0), r4) == -1);
}

TEST_CASE("in_branch_range") {
  const auto log = IndexedFunction::log();
  CHECK(in_branch_range(2.0, log, 0));
  CHECK_FALSE(in_branch_range(2.0, log, 1));
  CHECK(in_branch_range(Complex(2.0, 2 * kPi), log, 1));
  CHECK(in_branch_range(Complex(0.0, kPi), log, 0));
  CHECK_FALSE(in_branch_range(Complex(0.0, kPi), log, 1));
  CHECK_FALSE(in_branch_range(Complex(NAN, 0.0), log, 0));

  const auto cbrt = IndexedFunction::root(3);
  CHECK(in_branch_range(-2.0, cbrt, 1));
  CHECK_FALSE(in_branch_range(-2.0, cbrt, 0));
  CHECK_FALSE(in_branch_range(0.0, cbrt, 0));
}

TEST_CASE("agrees with the std::complex oracle") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 5000; ++i) {
    const Complex z = oracle::random_z(rng);
    for (int k = -3; k <= 3; ++k) {
      const Complex a = log_branch(z, k);
      CHECK(std::abs(a - oracle::log_k(z, k)) <= 1e-12 * std::abs(a));
    }
    for (int n : {2, 3, 4, 5, 7}) {
      const auto [lo, hi] = *IndexedFunction::root(n).index_bounds();
      for (int k = lo; k <= hi; ++k) {
        const Complex w = root_branch(z, IndexedFunction::root(n), k);
        CHECK(std::abs(w - oracle::root_k(z, n, k)) <= 1e-12 * std::abs(w));
      }
    }
  }
}

TEST_CASE("property: inversion and branch identification round-trip") {
  std::mt19937_64 rng(12);
  int checked = 0;
  for (int i = 0; i < 5000; ++i) {
    const Complex z = oracle::random_z(rng);
    for (int k = -5; k <= 5; ++k) {
      const Complex w = log_branch(z, k);
      CHECK(std::abs(std::exp(w) - z) <= 1e-12 * std::abs(z));
      CHECK(w.imag() > log_strip_upper(k - 1));
      CHECK(w.imag() <= log_strip_upper(k));
      CHECK(branch_of(w, IndexedFunction::log()) == k);
    }
    for (int n : {2, 3, 4, 5, 6}) {
      const auto f = IndexedFunction::root(n);
      const auto [lo, hi] = *f.index_bounds();
      for (int k = lo; k <= hi; ++k) {
        const Complex w = root_branch(z, f, k);
        CHECK(std::abs(std::pow(w, n) - z) <= 1e-12 * std::abs(z));
        const double ph = std::arg(w);
        double dist = std::numeric_limits<double>::infinity();
        for (int b = -n; b <= n; ++b) dist = std::min(dist, std::fabs(ph - (2 * b + 1) * kPi / n));
        if (dist > 1e-9) {
          CHECK(branch_of(w, f) == k);
          ++checked;
        }
      }
    }
  }
  CHECK(checked > 50000);
}

TEST_CASE("property: root sectors partition (-pi, pi] exactly once") {
  for (int n : {2, 3, 4, 5, 8}) {
    const auto f = IndexedFunction::root(n);
    const auto [lo, hi] = *f.index_bounds();
    std::vector<int> count(hi - lo + 1, 0);
    const int samples = 20000;
    for (int s = 1; s <= samples; ++s) {
      const double ph = -kPi + 2 * kPi * s / samples;  // (-pi, pi]
      const BranchIndex k = branch_of(std::polar(1.0, ph), f);
      REQUIRE(f.admits(k));
      ++count[k - lo];
      // Oracle: the sector test written out with the ceiling-free condition.
      bool inside = false;
      for (int shift : {-2, 0, 2}) {
        const double p = ph + shift * kPi;
        inside |= p > (2 * k - 1) * kPi / n - 1e-12 && p <= (2 * k + 1) * kPi / n + 1e-12;
      }
      CHECK(inside);
    }
    for (int c : count) CHECK(c == doctest::Approx(samples / n).epsilon(0.01));
  }
}

TEST_CASE("property: principal sector confinement") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 10000; ++i) {
    const Complex z = oracle::random_z(rng);
    for (int n : {2, 3, 4, 5}) {
      const double ph = std::arg(root_branch(z, IndexedFunction::root(n), 0));
      CHECK(ph > -kPi / n);
      CHECK(ph <= kPi / n);
    }
  }
}

TEST_CASE("periodicity across the cut for cube roots") {
  // At offset eps the two sides differ by about (2 eps / 3|x|) |x|^(1/3),
  // so |x| must stay above ~7e-3 for the 1e-6 relative bound.
  std::mt19937_64 rng(14);
  std::uniform_real_distribution<double> lx(std::log(1e-2), std::log(1e3));
  const auto cbrt = IndexedFunction::root(3);
  for (int i = 0; i < 1000; ++i) {
    const double x = -std::exp(lx(rng));
    const double eps = 1e-8;
    const Complex above = root_branch(Complex(x, eps), cbrt, 1);
    const Complex below = root_branch(Complex(x, -eps), cbrt, -1);
    CHECK(std::abs(above - below) < 1e-6 * std::cbrt(std::fabs(x)));
  }
}
