#include "dhce/eval.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <ostream>
#include <set>

#include <json.hpp>

#include "dhce/error.hpp"

namespace dhce {

LabeledDataset LabeledDataset::from_matrix(EmbeddingMatrix matrix) {
  if (!matrix.has_class_labels()) throw DataError("embedding matrix has no class labels");
  require(matrix.class_labels.size() == matrix.rows(), "one class label per row");
  LabeledDataset ds;
  std::set<std::string> names(matrix.class_labels.begin(), matrix.class_labels.end());
  ds.class_names.assign(names.begin(), names.end());
  ds.labels.reserve(matrix.rows());
  for (const auto& label : matrix.class_labels) {
    const auto it = std::lower_bound(ds.class_names.begin(), ds.class_names.end(), label);
    ds.labels.push_back(static_cast<ClassId>(it - ds.class_names.begin()));
  }
  ds.matrix = std::move(matrix);
  return ds;
}

ClassId knn_predict(const EmbeddingMatrix& matrix, std::span<const ClassId> labels,
                    std::span<const std::size_t> train_rows, std::span<const double> query,
                    std::size_t k) {
  require(!train_rows.empty(), "knn_predict: empty training set");
  require(k >= 1 && k <= train_rows.size(), "knn_predict: k must lie in [1, training size]");
  require(query.size() == matrix.width(), "knn_predict: query width != matrix width");
  require(labels.size() == matrix.rows(), "knn_predict: one label per matrix row");

  struct Neighbor {
    double squared;
    ClassId label;
  };
  std::vector<Neighbor> candidates;
  candidates.reserve(train_rows.size());
  for (std::size_t r : train_rows) {
    const auto row = matrix.row(r);
    double sq = 0.0;
    for (std::size_t j = 0; j < row.size(); ++j) {
      const double d = row[j] - query[j];
      sq += d * d;
    }
    candidates.push_back({sq, labels[r]});
  }
  const auto closer = [](const Neighbor& a, const Neighbor& b) {
    return a.squared != b.squared ? a.squared < b.squared : a.label < b.label;
  };
  std::partial_sort(candidates.begin(), candidates.begin() + static_cast<std::ptrdiff_t>(k),
                    candidates.end(), closer);

  ClassId top = 0;
  for (std::size_t i = 0; i < k; ++i) top = std::max(top, candidates[i].label);
  std::vector<std::size_t> votes(top + 1, 0);
  std::vector<double> distance_sum(top + 1, 0.0);
  for (std::size_t i = 0; i < k; ++i) {
    ++votes[candidates[i].label];
    distance_sum[candidates[i].label] += std::sqrt(candidates[i].squared);
  }
  ClassId best = 0;
  bool have_best = false;
  for (ClassId c = 0; c <= top; ++c) {
    if (votes[c] == 0) continue;
    if (!have_best || votes[c] > votes[best]) {
      best = c;
      have_best = true;
      continue;
    }
    if (votes[c] == votes[best]) {
      const double mean_c = distance_sum[c] / static_cast<double>(votes[c]);
      const double mean_best = distance_sum[best] / static_cast<double>(votes[best]);
      if (mean_c < mean_best) best = c;
    }
  }
  return best;
}

ClassId knn_predict(const EmbeddingMatrix& matrix, std::span<const ClassId> labels,
                    std::span<const double> query, std::size_t k) {
  std::vector<std::size_t> all(matrix.rows());
  std::iota(all.begin(), all.end(), std::size_t{0});
  return knn_predict(matrix, labels, all, query, k);
}

double accuracy(std::span<const ClassId> predicted, std::span<const ClassId> truth) {
  require(predicted.size() == truth.size(), "accuracy: length mismatch");
  require(!truth.empty(), "accuracy: empty input");
  std::size_t hits = 0;
  for (std::size_t i = 0; i < truth.size(); ++i) hits += predicted[i] == truth[i];
  return static_cast<double>(hits) / static_cast<double>(truth.size());
}

double macro_f1(std::span<const ClassId> predicted, std::span<const ClassId> truth) {
  require(predicted.size() == truth.size(), "macro_f1: length mismatch");
  require(!truth.empty(), "macro_f1: empty input");
  ClassId top = 0;
  for (std::size_t i = 0; i < truth.size(); ++i) top = std::max({top, truth[i], predicted[i]});
  std::vector<std::size_t> tp(top + 1, 0), fp(top + 1, 0), fn(top + 1, 0);
  std::vector<bool> present(top + 1, false);
  for (std::size_t i = 0; i < truth.size(); ++i) {
    present[truth[i]] = present[predicted[i]] = true;
    if (predicted[i] == truth[i]) {
      ++tp[truth[i]];
    } else {
      ++fp[predicted[i]];
      ++fn[truth[i]];
    }
  }
  double sum = 0.0;
  std::size_t classes = 0;
  for (ClassId c = 0; c <= top; ++c) {
    if (!present[c]) continue;
    ++classes;
    // 2PR/(P+R) == 2tp / (2tp + fp + fn), and 0 when tp == 0.
    const std::size_t denom = 2 * tp[c] + fp[c] + fn[c];
    if (tp[c] > 0) sum += 2.0 * static_cast<double>(tp[c]) / static_cast<double>(denom);
  }
  return sum / static_cast<double>(classes);
}

std::vector<std::size_t> stratified_folds(std::span<const ClassId> labels, std::size_t class_count,
                                          std::size_t folds, Rng& rng) {
  require(folds >= 2, "stratified_folds: need at least 2 folds");
  std::vector<std::vector<std::size_t>> members(class_count);
  for (std::size_t i = 0; i < labels.size(); ++i) {
    require(labels[i] < class_count, "stratified_folds: label out of range");
    members[labels[i]].push_back(i);
  }
  std::vector<std::size_t> fold_of(labels.size(), 0);
  std::size_t dealt = 0;
  for (ClassId c = 0; c < class_count; ++c) {
    auto& rows = members[c];
    if (rows.empty()) continue;
    if (rows.size() < folds) {
      throw DataError("class " + std::to_string(c) + " has " + std::to_string(rows.size()) +
                      " members, fewer than " + std::to_string(folds) + " folds");
    }
    rng.shuffle(rows.begin(), rows.end());
    // Dealing continues across classes so fold sizes differ by at most one.
    for (std::size_t r : rows) fold_of[r] = dealt++ % folds;
  }
  return fold_of;
}

namespace {

void mean_and_std(const std::vector<RunScore>& scores, double RunScore::*field, double& mean,
                  double& stddev) {
  double sum = 0.0;
  for (const auto& s : scores) sum += s.*field;
  mean = sum / static_cast<double>(scores.size());
  double sq = 0.0;
  for (const auto& s : scores) sq += (s.*field - mean) * (s.*field - mean);
  stddev = std::sqrt(sq / static_cast<double>(scores.size()));
}

}  // namespace

EvalReport cross_validate(const LabeledDataset& ds, const CvOptions& options) {
  if (options.folds < 2) throw ParameterError("folds must be at least 2");
  if (options.runs < 1) throw ParameterError("runs must be at least 1");
  if (options.k_neighbors < 1) throw ParameterError("k must be at least 1");
  require(ds.labels.size() == ds.matrix.rows(), "one label per row");

  std::vector<std::size_t> class_size(ds.class_count(), 0);
  for (ClassId c : ds.labels) ++class_size[c];
  std::size_t distinct = 0;
  for (ClassId c = 0; c < ds.class_count(); ++c) {
    if (class_size[c] == 0) continue;
    ++distinct;
    if (class_size[c] < options.folds) {
      throw DataError("class '" + ds.class_names[c] + "' has " + std::to_string(class_size[c]) +
                      " graphs, fewer than the " + std::to_string(options.folds) +
                      " folds needed for stratification");
    }
  }
  if (distinct < 2) throw DataError("classification needs at least 2 distinct classes");
  // Largest fold holds ceil(n / folds) rows.
  const std::size_t smallest_train = ds.size() - (ds.size() + options.folds - 1) / options.folds;
  if (options.k_neighbors > smallest_train) {
    throw ParameterError("k = " + std::to_string(options.k_neighbors) +
                         " exceeds the training fold size " + std::to_string(smallest_train));
  }

  EvalReport report;
  report.runs = options.runs;
  report.folds = options.folds;
  report.k = options.k_neighbors;
  report.per_run_scores.reserve(options.runs);

  std::vector<ClassId> predicted(ds.size());
  std::vector<std::size_t> train;
  for (std::size_t run = 0; run < options.runs; ++run) {
    Rng rng(derive_seed(options.seed, run));
    const auto fold_of = stratified_folds(ds.labels, ds.class_count(), options.folds, rng);
    for (std::size_t f = 0; f < options.folds; ++f) {
      train.clear();
      for (std::size_t i = 0; i < ds.size(); ++i) {
        if (fold_of[i] != f) train.push_back(i);
      }
      for (std::size_t i = 0; i < ds.size(); ++i) {
        if (fold_of[i] != f) continue;
        predicted[i] = knn_predict(ds.matrix, ds.labels, train, ds.matrix.row(i), options.k_neighbors);
      }
    }
    report.per_run_scores.push_back({accuracy(predicted, ds.labels), macro_f1(predicted, ds.labels)});
  }
  mean_and_std(report.per_run_scores, &RunScore::acc, report.acc_mean, report.acc_std);
  mean_and_std(report.per_run_scores, &RunScore::f1, report.f1_mean, report.f1_std);
  return report;
}

namespace {

double round6(double x) { return std::round(x * 1e6) / 1e6; }

}  // namespace

std::string report_json(const EvalReport& report) {
  nlohmann::ordered_json j;
  j["acc_mean"] = round6(report.acc_mean);
  j["acc_std"] = round6(report.acc_std);
  j["f1_mean"] = round6(report.f1_mean);
  j["f1_std"] = round6(report.f1_std);
  j["runs"] = report.runs;
  j["folds"] = report.folds;
  j["k"] = report.k;
  return j.dump() + "\n";
}

void write_per_run_csv(std::ostream& out, const EvalReport& report) {
  out << "run,acc,f1\n";
  char buf[96];
  for (std::size_t i = 0; i < report.per_run_scores.size(); ++i) {
    const auto& s = report.per_run_scores[i];
    std::snprintf(buf, sizeof buf, "%zu,%.6f,%.6f\n", i, s.acc, s.f1);
    out << buf;
  }
}

}  // namespace dhce
