#include "dhce/projection.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <json.hpp>

#include "dhce/error.hpp"

namespace dhce {

Projection2D pca_2d(const EmbeddingMatrix& m) {
  require(m.rows() >= 2, "pca_2d: need at least 2 rows");
  require(m.width() >= 1, "pca_2d: need at least 1 column");
  const auto rows = static_cast<Eigen::Index>(m.rows());
  const auto cols = static_cast<Eigen::Index>(m.width());

  Eigen::MatrixXd x(rows, cols);
  double scale = 0.0;
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) {
      x(i, j) = m(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
      scale = std::max(scale, std::abs(x(i, j)));
    }
  }
  x.rowwise() -= x.colwise().mean();
  // Centering identical rows leaves rounding residue; treat it as zero.
  const double tiny = 1e-12 * std::max(1.0, scale);
  x = x.unaryExpr([tiny](double v) { return std::abs(v) <= tiny ? 0.0 : v; });

  Projection2D out;
  out.row_labels = m.row_labels;
  out.class_labels = m.class_labels;
  out.coords.assign(m.rows(), {0.0, 0.0});

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(x, Eigen::ComputeThinV);
  const Eigen::VectorXd& sigma = svd.singularValues();
  const double total = sigma.squaredNorm();
  if (total == 0.0) return out;

  const Eigen::Index components = std::min<Eigen::Index>(2, sigma.size());
  for (Eigen::Index c = 0; c < components; ++c) {
    if (sigma(c) == 0.0) continue;
    Eigen::VectorXd axis = svd.matrixV().col(c);
    Eigen::Index lead = 0;
    for (Eigen::Index j = 1; j < axis.size(); ++j) {
      if (std::abs(axis(j)) > std::abs(axis(lead))) lead = j;
    }
    if (axis(lead) < 0.0) axis = -axis;
    const Eigen::VectorXd scores = x * axis;
    for (Eigen::Index i = 0; i < rows; ++i) out.coords[static_cast<std::size_t>(i)][c] = scores(i);
    out.explained_variance_ratio[static_cast<std::size_t>(c)] = sigma(c) * sigma(c) / total;
  }
  return out;
}

void write_projection_csv(std::ostream& out, const Projection2D& p) {
  out << "graph_id,label,pc1,pc2\n";
  char buf[96];
  for (std::size_t i = 0; i < p.coords.size(); ++i) {
    out << (i < p.row_labels.size() ? p.row_labels[i] : std::to_string(i)) << ','
        << (p.class_labels.empty() ? std::string() : p.class_labels[i]);
    // +0.0 folds negative zero so reruns print identically.
    std::snprintf(buf, sizeof buf, ",%.6f,%.6f\n", p.coords[i][0] + 0.0, p.coords[i][1] + 0.0);
    out << buf;
  }
}

std::string projection_sidecar_json(const Projection2D& p) {
  nlohmann::ordered_json j;
  j["explained_variance_ratio"] = {std::round(p.explained_variance_ratio[0] * 1e6) / 1e6,
                                   std::round(p.explained_variance_ratio[1] * 1e6) / 1e6};
  return j.dump() + "\n";
}

}  // namespace dhce
