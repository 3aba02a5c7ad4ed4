#include <doctest.h>

#include <cmath>
#include <complex>
#include <limits>

#include "specat/matcat.hpp"

using namespace specat;

using RM = ScalarMatrix<RealDomain>;
using CM = ScalarMatrix<ComplexDomain>;
using NM = ScalarMatrix<NonNegativeRealDomain>;

TEST_SUITE("matcat") {
  TEST_CASE("an arrow m -> n is an n x m matrix") {
    const MatR mat;
    const auto f = RM::from_rows({{1, 2, 3}, {4, 5, 6}});
    CHECK(mat.source(f) == 3);
    CHECK(mat.target(f) == 2);
    const auto g = RM::from_rows({{1, 1}});
    const auto gf = mat.compose(g, f);
    CHECK(gf == RM::from_rows({{5, 7, 9}}));
    CHECK_THROWS_AS(mat.compose(f, g), TypeMismatch);
    CHECK_THROWS_AS(mat.add(f, g), TypeMismatch);
  }

  TEST_CASE("identities and zeros") {
    const MatR mat;
    const auto f = RM::from_rows({{1, 2}, {3, 4}, {5, 6}});
    CHECK(mat.compose(mat.identity(3), f) == f);
    CHECK(mat.compose(f, mat.identity(2)) == f);
    CHECK(mat.add(f, mat.zero(2, 3)) == f);
    CHECK(mat.zero(2, 3).rows() == 3);
    CHECK(mat.identity(0).entries().empty());
  }

  TEST_CASE("scalar domains reject inadmissible entries") {
    CHECK_THROWS_AS(NM::from_rows({{1, -0.5}}), DomainError);
    CHECK_THROWS_AS(RM::from_rows({{std::numeric_limits<double>::quiet_NaN()}}), DomainError);
    CHECK_THROWS_AS(RM::from_rows({{std::numeric_limits<double>::infinity()}}), DomainError);
    CHECK_THROWS_AS(CM::from_rows({{{0.0, std::numeric_limits<double>::infinity()}}}), DomainError);
    CHECK_THROWS_AS(RM::from_rows({{1, 2}, {3}}), DomainError);
    NM m(1, 1);
    CHECK_THROWS_AS(m.set(0, 0, -1.0), DomainError);
  }

  TEST_CASE("non-negative reals have no subtraction") {
    const auto a = NM::from_rows({{1}});
    CHECK_THROWS_AS(subtract(a, a), DomainError);
    CHECK(subtract(RM::from_rows({{3}}), RM::from_rows({{1}})) == RM::from_rows({{2}}));
  }

  TEST_CASE("complex arithmetic") {
    const MatC mat;
    const std::complex<double> i(0, 1);
    const auto f = CM::from_rows({{i, 1.0}});
    const auto g = CM::from_rows({{i}, {2.0}});
    CHECK(mat.compose(f, g) == CM::from_rows({{1.0}}));
    CHECK(mat.equal(mat.compose(g, f), CM::from_rows({{-1.0, i}, {2.0 * i, 2.0}}), Tolerance::exact()));
  }

  TEST_CASE("tolerance is two-sided absolute plus relative") {
    const Tolerance tol{1e-9, 1e-9};
    CHECK(tol.close(1.0, 1.0 + 1e-10));
    CHECK(tol.close(1e6, 1e6 + 1e-4));
    CHECK_FALSE(tol.close(1e6, 1e6 + 1e-2));
    CHECK_FALSE(tol.close(0.0, 1e-8));
    CHECK(Tolerance::exact().close(0.25, 0.25));
    CHECK_FALSE(Tolerance::exact().close(0.25, std::nextafter(0.25, 1.0)));
    const MatR mat;
    CHECK(mat.equal(RM::from_rows({{1}}), RM::from_rows({{1 + 1e-12}}), tol));
    CHECK_FALSE(mat.equal(RM::from_rows({{1}}), RM::identity(2), tol));
    CHECK(std::isinf(mat.residual(RM::identity(1), RM::identity(2))));
    CHECK(mat.residual(RM::from_rows({{1, 2}}), RM::from_rows({{1, 2.5}})) == doctest::Approx(0.5));
  }

  TEST_CASE("monomial inverses") {
    const auto m = RM::from_rows({{0, 2, 0}, {0, 0, -4}, {0.5, 0, 0}});
    CHECK(multiply(m, monomial_inverse(m)) == RM::identity(3));
    CHECK(multiply(monomial_inverse(m), m) == RM::identity(3));
    CHECK_THROWS_AS(monomial_inverse(RM::from_rows({{1, 1}, {0, 1}})), PreconditionError);
    CHECK_THROWS_AS(monomial_inverse(RM::from_rows({{1, 0}, {0, 0}})), PreconditionError);
    CHECK_THROWS_AS(monomial_inverse(RM::from_rows({{1, 0}})), PreconditionError);
  }

  TEST_CASE("transpose and embed") {
    const auto m = RM::from_rows({{1, 2, 3}});
    CHECK(transpose(m) == RM::from_rows({{1}, {2}, {3}}));
    CHECK(embed(RM::identity(1), 2, 3, 1, 2) == RM::from_rows({{0, 0, 0}, {0, 0, 1}}));
  }

  TEST_CASE("descriptions") {
    CHECK(describe_matrix(RM::from_rows({{1, -0.5}, {0, 2}})) == "[[1,-0.5],[0,2]]");
    CHECK(describe_matrix(RM(0, 2)) == "[] (0x2)");
    CHECK(format_scalar(std::complex<double>(1, -2)) == "[1,-2]");
  }

  TEST_CASE("samplers respect their bounds and domains") {
    Rng rng(5);
    MatSampler<NonNegativeRealDomain> s{3};
    for (int t = 0; t < 50; ++t) {
      const auto x = s.object(rng);
      CHECK(x <= 3);
      const auto f = s.arrow(rng, x, 2);
      CHECK(f.rows() == 2);
      CHECK(f.cols() == x);
      for (double v : f.entries()) CHECK(v >= 0.0);
    }
  }
}
