#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "dhce/embedding.hpp"
#include "dhce/random.hpp"

namespace dhce {

/// Index into LabeledDataset::class_names. Class order is the sorted order
/// of the label strings, which is the order used to break ties.
using ClassId = std::uint32_t;

struct LabeledDataset {
  EmbeddingMatrix matrix;
  std::vector<std::string> class_names;  // sorted, unique
  std::vector<ClassId> labels;           // one per matrix row

  /// Uses matrix.class_labels. Throws DataError if the matrix is unlabeled.
  static LabeledDataset from_matrix(EmbeddingMatrix matrix);

  std::size_t size() const noexcept { return labels.size(); }
  std::size_t class_count() const noexcept { return class_names.size(); }
};

/// Majority vote over the k training rows nearest to query (Euclidean).
///
/// Rows tied on distance at the k-th position are taken in class order, so
/// the result does not depend on training-row order. Vote ties go to the
/// class with the smaller mean distance, then to the smaller class id.
ClassId knn_predict(const EmbeddingMatrix& matrix, std::span<const ClassId> labels,
                    std::span<const std::size_t> train_rows, std::span<const double> query,
                    std::size_t k);

/// Same, with every row of the matrix as training data.
ClassId knn_predict(const EmbeddingMatrix& matrix, std::span<const ClassId> labels,
                    std::span<const double> query, std::size_t k);

double accuracy(std::span<const ClassId> predicted, std::span<const ClassId> truth);

/// Unweighted mean of per-class F1 over every class that occurs in either
/// sequence. A class with zero precision and recall scores 0.
double macro_f1(std::span<const ClassId> predicted, std::span<const ClassId> truth);

struct CvOptions {
  std::size_t k_neighbors = 5;
  std::size_t folds = 10;
  std::size_t runs = 500;
  std::uint64_t seed = 0;
};

struct RunScore {
  double acc = 0.0;
  double f1 = 0.0;

  friend bool operator==(const RunScore&, const RunScore&) = default;
};

struct EvalReport {
  double acc_mean = 0.0;
  double acc_std = 0.0;
  double f1_mean = 0.0;
  double f1_std = 0.0;
  std::size_t runs = 0;
  std::size_t folds = 0;
  std::size_t k = 0;
  std::vector<RunScore> per_run_scores;

  friend bool operator==(const EvalReport&, const EvalReport&) = default;
};

/// Assigns each row to one of `folds` folds, preserving class proportions.
/// Throws DataError if some class has fewer members than folds.
std::vector<std::size_t> stratified_folds(std::span<const ClassId> labels, std::size_t class_count,
                                          std::size_t folds, Rng& rng);

/// Repeated stratified k-fold cross-validation of the KNN classifier.
///
/// Each run draws its fold assignment from a stream derived from
/// (seed, run index) and scores the pooled out-of-fold predictions. Means
/// and population standard deviations are taken over runs.
EvalReport cross_validate(const LabeledDataset& ds, const CvOptions& options);

/// `{acc_mean, acc_std, f1_mean, f1_std, runs, folds, k}` rounded to 6 decimals.
std::string report_json(const EvalReport& report);
void write_per_run_csv(std::ostream& out, const EvalReport& report);

}  // namespace dhce
