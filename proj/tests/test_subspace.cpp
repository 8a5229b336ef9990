#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <cstdio>
#include <fstream>
#include <initializer_list>
#include <numbers>

#include "doctest.h"
#include "ritz/matrix_io.hpp"
#include "ritz/subspace.hpp"

using namespace ritz;

namespace {

constexpr double kPi = std::numbers::pi;

// span of the single unit vector (cos phi, sin phi) in R^2
Subspace dir2(double phi) {
  Matrix b(2, 1);
  b << std::cos(phi), std::sin(phi);
  return Subspace::from_orthonormal(b);
}

Subspace axis(Index n, Index i) {
  return Subspace::from_orthonormal(Matrix::Identity(n, n).col(i));
}

RealVector rv(std::initializer_list<double> xs) {
  RealVector v(static_cast<Index>(xs.size()));
  Index i = 0;
  for (double x : xs) v(i++) = x;
  return v;
}

}  // namespace

TEST_CASE("orthonormalized drops dependent directions") {
  Matrix rank1(2, 2);
  rank1 << 1.0, 1.0, 1.0, 1.0;
  const Subspace s = Subspace::orthonormalized(rank1);
  CHECK(s.ambient() == 2);
  CHECK(s.dim() == 1);
  CHECK((s.basis().adjoint() * s.basis() - Matrix::Identity(1, 1)).norm() <= 1e-12);
  CHECK(orthonormalize(rank1).dim() == 1);
}

TEST_CASE("from_orthonormal validates its basis") {
  CHECK(Subspace::from_orthonormal(Matrix::Identity(3, 2)).dim() == 2);
  Matrix skew(2, 2);
  skew << 1.0, 0.0, 1.0, 1.0;
  CHECK_THROWS_WITH_AS(Subspace::from_orthonormal(skew), "Subspace: basis not orthonormal", Error);
  CHECK_THROWS_AS(Subspace::from_orthonormal(Matrix::Identity(2, 3)), Error);
  CHECK_THROWS_AS(Subspace::from_orthonormal(Matrix(2, 0)), Error);
}

TEST_CASE("projector of a coordinate axis") {
  const Matrix p = axis(3, 0).projector();
  Matrix expect = Matrix::Zero(3, 3);
  expect(0, 0) = 1.0;
  CHECK((p - expect).norm() <= 1e-14);
}

TEST_CASE("AngleVector sorts decreasing and validates the range") {
  const AngleVector a(rv({0.2, 1.0, 0.5}));
  CHECK(a.radians()(0) == 1.0);
  CHECK(a.radians()(2) == 0.2);
  CHECK(a.max() == 1.0);
  CHECK(a.min() == 0.2);
  // cosines follow the decreasing angles, so they come out nondecreasing
  CHECK(a.cosines()(0) == doctest::Approx(std::cos(1.0)).epsilon(1e-15));
  CHECK(a.cosines()(2) == doctest::Approx(std::cos(0.2)).epsilon(1e-15));
  CHECK(a.sines()(0) == doctest::Approx(std::sin(1.0)).epsilon(1e-15));
  CHECK(a.tangents()(1) == doctest::Approx(std::tan(0.5)).epsilon(1e-15));

  CHECK_THROWS_AS(AngleVector(rv({-0.1})), Error);
  CHECK_THROWS_AS(AngleVector(rv({1.6})), Error);
  CHECK_THROWS_AS(AngleVector{RealVector()}, Error);
  CHECK_THROWS_WITH_AS(AngleVector(rv({kPi / 2.0})).tangents(), "tangent infinite", Error);
}

TEST_CASE("principal angle between e1 and a rotated line") {
  const AngleVector a = principal_angles(axis(2, 0), dir2(0.3));
  REQUIRE(a.size() == 1);
  CHECK(a.max() == doctest::Approx(0.3).epsilon(1e-13));
}

TEST_CASE("small angles keep relative accuracy through the sine-based branch") {
  const double phi = 1e-7;
  const AngleVector a = principal_angles(axis(2, 0), dir2(phi));
  CHECK(std::abs(a.max() - phi) <= 1e-13 * phi + 1e-18);
}

TEST_CASE("orthogonal spans meet at pi/2") {
  const AngleVector a = principal_angles(axis(2, 0), axis(2, 1));
  CHECK(a.max() == doctest::Approx(kPi / 2.0).epsilon(1e-13));
}

TEST_CASE("identical spans under a basis rotation have zero angles") {
  Matrix rot(2, 2);
  rot << std::cos(0.7), -std::sin(0.7), std::sin(0.7), std::cos(0.7);
  const Subspace x = Subspace::from_orthonormal(Matrix::Identity(4, 2));
  Matrix b = Matrix::Zero(4, 2);
  b.topRows(2) = rot;
  const Subspace y = Subspace::from_orthonormal(b);
  const AngleVector a = principal_angles(x, y);
  REQUIRE(a.size() == 2);
  CHECK(a.max() <= 1e-8);
}

TEST_CASE("two independent rotation planes give two angles") {
  // span(e1, e2) vs span(cos a e1 + sin a e3, cos b e2 + sin b e4)
  const double ang1 = 0.3;
  const double ang2 = 1.2;
  Matrix b = Matrix::Zero(4, 2);
  b(0, 0) = std::cos(ang1);
  b(2, 0) = std::sin(ang1);
  b(1, 1) = std::cos(ang2);
  b(3, 1) = std::sin(ang2);
  const Subspace x = Subspace::from_orthonormal(Matrix::Identity(4, 2));
  const Subspace y = Subspace::from_orthonormal(b);
  const AngleVector a = principal_angles(x, y);
  REQUIRE(a.size() == 2);
  CHECK(a.radians()(0) == doctest::Approx(ang2).epsilon(1e-13));
  CHECK(a.radians()(1) == doctest::Approx(ang1).epsilon(1e-13));

  // S((I-P_x) P_y P_x) carries sin(theta) cos(theta), zero padded
  const DecreasingVector pp = projector_product_singvals(x, y);
  REQUIRE(pp.size() == 4);
  CHECK(pp[0] == doctest::Approx(std::sin(ang2) * std::cos(ang2)).epsilon(1e-12));
  CHECK(pp[1] == doctest::Approx(std::sin(ang1) * std::cos(ang1)).epsilon(1e-12));
  CHECK(pp[2] <= 1e-12);
}

TEST_CASE("projector_product_singvals on a line pair") {
  const double phi = 0.7;
  const DecreasingVector pp = projector_product_singvals(axis(2, 0), dir2(phi));
  REQUIRE(pp.size() == 2);
  CHECK(pp[0] == doctest::Approx(std::sin(phi) * std::cos(phi)).epsilon(1e-13));
  CHECK(pp[1] <= 1e-13);
}

TEST_CASE("join spans the union") {
  const Subspace x = axis(3, 0);
  Matrix yb(3, 1);
  yb << std::numbers::sqrt2 / 2.0, std::numbers::sqrt2 / 2.0, 0.0;
  const Subspace y = Subspace::from_orthonormal(yb);
  CHECK(join(x, y).dim() == 2);
  CHECK(join(x, x).dim() == 1);
  CHECK(join(axis(3, 0), axis(3, 2)).dim() == 2);
  // the join contains both inputs
  const Subspace j = join(x, y);
  CHECK((j.projector() * yb - yb).norm() <= 1e-12);
}

TEST_CASE("project_onto maps into the span") {
  const Subspace s = Subspace::from_orthonormal(Matrix::Identity(3, 2));
  Matrix m(3, 1);
  m << 1.0, 2.0, 3.0;
  const Matrix pm = project_onto(s, m);
  CHECK(pm(0, 0) == Complex(1.0, 0.0));
  CHECK(pm(1, 0) == Complex(2.0, 0.0));
  CHECK(std::abs(pm(2, 0)) <= 1e-15);
  CHECK_THROWS_AS(project_onto(s, Matrix::Identity(2, 2)), Error);
}

TEST_CASE("mismatched ambient dimensions are rejected") {
  CHECK_THROWS_AS(principal_angles(axis(2, 0), axis(3, 0)), Error);
  CHECK_THROWS_AS(join(axis(2, 0), axis(3, 0)), Error);
}

TEST_CASE("read_subspace loads and orthonormalizes a basis file") {
  const std::string path = "subspace_tmp.mat";
  Matrix b(3, 2);
  b << 1.0, 1.0, 1.0, -1.0, 0.0, 0.0;
  write_matrix(path, b, MatrixKind::real);
  const Subspace s = read_subspace(path);
  CHECK(s.ambient() == 3);
  CHECK(s.dim() == 2);
  CHECK((s.basis().adjoint() * s.basis() - Matrix::Identity(2, 2)).norm() <= 1e-12);
  std::remove(path.c_str());
}
