#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "dhce/embedding.hpp"

namespace dhce {

struct Projection2D {
  std::vector<std::array<double, 2>> coords;
  std::array<double, 2> explained_variance_ratio{0.0, 0.0};
  std::vector<std::string> row_labels;
  std::vector<std::string> class_labels;
};

/// Projects the rows onto the top two principal axes.
///
/// Columns are centered but not scaled; the axes come from the SVD of the
/// centered matrix. Each axis is oriented so that its largest-magnitude
/// loading is positive. With a single column the second coordinate is 0.
Projection2D pca_2d(const EmbeddingMatrix& m);

/// `graph_id,label,pc1,pc2`.
void write_projection_csv(std::ostream& out, const Projection2D& p);
/// `{"explained_variance_ratio":[r1,r2]}` on one line.
std::string projection_sidecar_json(const Projection2D& p);

}  // namespace dhce
