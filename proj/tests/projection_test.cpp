#include <doctest.h>

#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "dhce/error.hpp"
#include "dhce/projection.hpp"
#include "dhce/random.hpp"

using namespace dhce;

namespace {

EmbeddingMatrix points(const std::vector<std::vector<double>>& rows) {
  EmbeddingMatrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return m;
}

double dist(const std::array<double, 2>& a, const std::array<double, 2>& b) {
  return std::hypot(a[0] - b[0], a[1] - b[1]);
}

// Eigenvalues of the sample covariance, descending.
Eigen::VectorXd covariance_spectrum(const EmbeddingMatrix& m) {
  Eigen::MatrixXd x(m.rows(), m.width());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.width(); ++j) x(i, j) = m(i, j);
  x.rowwise() -= x.colwise().mean();
  const Eigen::MatrixXd cov = x.transpose() * x / static_cast<double>(m.rows() - 1);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(cov);
  return eig.eigenvalues().reverse();
}

EmbeddingMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t width) {
  EmbeddingMatrix m(rows, width);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < width; ++j) m(i, j) = rng.uniform() * static_cast<double>(j + 1);
  return m;
}

}  // namespace

TEST_CASE("square of four points keeps all variance") {
  const auto m = points({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  const auto p = pca_2d(m);
  CHECK(p.explained_variance_ratio[0] + p.explained_variance_ratio[1] == doctest::Approx(1.0));
  // Pairwise distances survive a rotation/reflection.
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      const double original = std::hypot(m(i, 0) - m(j, 0), m(i, 1) - m(j, 1));
      CHECK(dist(p.coords[i], p.coords[j]) == doctest::Approx(original));
    }
  }
}

TEST_CASE("identical rows project to the origin") {
  const auto p = pca_2d(points({{0.1, 0.3, 0.7}, {0.1, 0.3, 0.7}, {0.1, 0.3, 0.7}}));
  for (const auto& c : p.coords) {
    CHECK(c[0] == 0.0);
    CHECK(c[1] == 0.0);
  }
  CHECK(p.explained_variance_ratio == std::array<double, 2>{0.0, 0.0});
}

TEST_CASE("rank-1 data puts all variance on the first axis") {
  const std::vector<double> direction{0.3, -1.2, 0.5, 2.0};
  std::vector<std::vector<double>> rows;
  for (double t : {-2.0, -0.5, 0.0, 1.0, 3.5}) {
    std::vector<double> r;
    for (double d : direction) r.push_back(1.0 + t * d);
    rows.push_back(r);
  }
  const auto m = points(rows);
  const auto spectrum = covariance_spectrum(m);
  const double oracle_first = spectrum(0) / spectrum.sum();
  CHECK(oracle_first == doctest::Approx(1.0).epsilon(1e-12));

  const auto p = pca_2d(m);
  CHECK(p.explained_variance_ratio[0] == doctest::Approx(oracle_first).epsilon(1e-9));
  CHECK(p.explained_variance_ratio[1] == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("explained variance matches the covariance eigenvalues") {
  Rng rng(40);
  for (int trial = 0; trial < 50; ++trial) {
    const auto m = random_matrix(rng, 3 + rng.below(20), 1 + rng.below(6));
    const auto spectrum = covariance_spectrum(m);
    const auto p = pca_2d(m);
    const double total = spectrum.sum();
    REQUIRE(p.explained_variance_ratio[0] == doctest::Approx(spectrum(0) / total).epsilon(1e-9));
    const double second = spectrum.size() > 1 ? spectrum(1) / total : 0.0;
    REQUIRE(p.explained_variance_ratio[1] == doctest::Approx(second).epsilon(1e-9));
    REQUIRE(p.explained_variance_ratio[0] >= 0.0);
    REQUIRE(p.explained_variance_ratio[1] >= 0.0);
    REQUIRE(p.explained_variance_ratio[0] + p.explained_variance_ratio[1] <= 1.0 + 1e-9);
    REQUIRE(p.coords.size() == m.rows());
  }
}

TEST_CASE("a single column gives a zero second component") {
  const auto p = pca_2d(points({{1.0}, {2.0}, {4.0}}));
  CHECK(p.explained_variance_ratio[0] == doctest::Approx(1.0));
  CHECK(p.explained_variance_ratio[1] == 0.0);
  for (const auto& c : p.coords) CHECK(c[1] == 0.0);
  // Single loading is +1, so scores are the centered values.
  CHECK(p.coords[0][0] == doctest::Approx(-4.0 / 3.0));
  CHECK(p.coords[2][0] == doctest::Approx(5.0 / 3.0));
}

TEST_CASE("translation, sign convention and re-projection") {
  Rng rng(41);
  for (int trial = 0; trial < 50; ++trial) {
    auto m = random_matrix(rng, 4 + rng.below(20), 2 + rng.below(5));
    auto shifted = m;
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.width(); ++j) shifted(i, j) += 3.25 * static_cast<double>(j) - 1.0;
    const auto a = pca_2d(m);
    const auto b = pca_2d(shifted);
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.rows(); ++j)
        REQUIRE(dist(a.coords[i], a.coords[j]) == doctest::Approx(dist(b.coords[i], b.coords[j])).epsilon(1e-9));

    EmbeddingMatrix flat(m.rows(), 2);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      flat(i, 0) = a.coords[i][0];
      flat(i, 1) = a.coords[i][1];
    }
    const auto again = pca_2d(flat);
    for (int c = 0; c < 2; ++c) {
      double same = 0.0, flipped = 0.0;
      for (std::size_t i = 0; i < m.rows(); ++i) {
        same = std::max(same, std::abs(again.coords[i][c] - a.coords[i][c]));
        flipped = std::max(flipped, std::abs(again.coords[i][c] + a.coords[i][c]));
      }
      REQUIRE(std::min(same, flipped) <= 1e-9);
    }
  }
}

TEST_CASE("contract and output formats") {
  CHECK_THROWS_AS(pca_2d(points({{1.0, 2.0}})), ContractViolation);

  auto m = points({{0.0, 0.0}, {2.0, 0.0}});
  m.row_labels = {"g0", "g1"};
  m.class_labels = {"A", "B"};
  const auto p = pca_2d(m);
  std::ostringstream csv;
  write_projection_csv(csv, p);
  CHECK(csv.str() == "graph_id,label,pc1,pc2\ng0,A,-1.000000,0.000000\ng1,B,1.000000,0.000000\n");
  CHECK(projection_sidecar_json(p) == "{\"explained_variance_ratio\":[1.0,0.0]}\n");
}
