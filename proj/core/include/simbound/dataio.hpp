// Copyright (c) the simbound authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef SIMBOUND_DATAIO_HPP
#define SIMBOUND_DATAIO_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace simbound {

// Binary mistake matrix: rows are test examples, columns are models, and a
// 1 means the model erred on the example (q_f(z) = 1). Note this is the
// opposite of "1 = correct" used by some public prediction dumps.
// Columns are stored as packed bitsets so similarity counts stay exact.
class PredictionMatrix {
 public:
  PredictionMatrix(std::vector<std::string> model_ids, std::size_t n_examples);

  std::size_t n_examples() const { return n_examples_; }
  std::size_t n_models() const { return model_ids_.size(); }
  const std::vector<std::string>& model_ids() const { return model_ids_; }

  bool mistake(std::size_t example, std::size_t model) const;
  void set_mistake(std::size_t example, std::size_t model, bool value);

  // Number of examples the model got wrong.
  std::int64_t mistake_count(std::size_t model) const;
  // Number of examples where the two models' 0/1 losses agree.
  std::int64_t agree_count(std::size_t a, std::size_t b) const;
  // Number of examples both models got wrong.
  std::int64_t co_error_count(std::size_t a, std::size_t b) const;
  // Number of models that erred on the example.
  std::int64_t models_in_error(std::size_t example) const;

 private:
  std::size_t n_examples_;
  std::size_t words_per_model_;
  std::vector<std::string> model_ids_;
  std::vector<std::uint64_t> bits_;  // column-major, padded per model
};

struct LoadOptions {
  // Treat the first CSV column as an opaque example id.
  bool example_id_col = false;
};

// Parses the CSV format: header of comma-separated model ids, then one line
// of 0/1 cells per test example. LF and CRLF both accepted. Throws
// parse_error naming the offending 1-based line.
PredictionMatrix load_matrix(std::istream& in, const LoadOptions& opts = {});
PredictionMatrix load_matrix_file(const std::string& path, const LoadOptions& opts = {});

struct SimilaritySummary {
  std::size_t n_models = 0;
  std::size_t n_examples = 0;
  std::vector<double> error_rates;          // per model
  std::vector<double> similarity;           // n_models x n_models, row-major
  std::vector<double> baseline;             // independence-hypothesis similarity
  std::vector<std::int64_t> agree_counts;   // exact integer agreement counts
  double mean_similarity = 0.0;             // mean over off-diagonal pairs
  double mean_baseline = 0.0;

  double sim(std::size_t i, std::size_t j) const { return similarity[i * n_models + j]; }
  double base(std::size_t i, std::size_t j) const { return baseline[i * n_models + j]; }
  std::int64_t agree(std::size_t i, std::size_t j) const { return agree_counts[i * n_models + j]; }
};

SimilaritySummary summarize(const PredictionMatrix& matrix);

struct DifficultyHistogram {
  // counts[d] = number of examples misclassified by exactly d models.
  std::vector<std::int64_t> counts;
  // cumulative[d] = number misclassified by at most d models.
  std::vector<std::int64_t> cumulative;
};

DifficultyHistogram difficulty_histogram(const PredictionMatrix& matrix);

}  // namespace simbound

#endif
