// Copyright (c) the simbound authors.
// SPDX-License-Identifier: Apache-2.0

#include "simbound/dataio.hpp"

#include <bit>
#include <fstream>
#include <istream>
#include <sstream>
#include <unordered_set>

#include "simbound/coupling.hpp"
#include "simbound/errors.hpp"

namespace simbound {

PredictionMatrix::PredictionMatrix(std::vector<std::string> model_ids,
                                   std::size_t n_examples)
    : n_examples_(n_examples),
      words_per_model_((n_examples + 63) / 64),
      model_ids_(std::move(model_ids)),
      bits_(words_per_model_ * model_ids_.size(), 0) {}

bool PredictionMatrix::mistake(std::size_t example, std::size_t model) const {
  const std::uint64_t word = bits_[model * words_per_model_ + example / 64];
  return (word >> (example % 64)) & 1u;
}

void PredictionMatrix::set_mistake(std::size_t example, std::size_t model, bool value) {
  std::uint64_t& word = bits_[model * words_per_model_ + example / 64];
  const std::uint64_t mask = std::uint64_t{1} << (example % 64);
  if (value) {
    word |= mask;
  } else {
    word &= ~mask;
  }
}

std::int64_t PredictionMatrix::mistake_count(std::size_t model) const {
  std::int64_t c = 0;
  for (std::size_t w = 0; w < words_per_model_; ++w) {
    c += std::popcount(bits_[model * words_per_model_ + w]);
  }
  return c;
}

std::int64_t PredictionMatrix::agree_count(std::size_t a, std::size_t b) const {
  std::int64_t disagree = 0;
  for (std::size_t w = 0; w < words_per_model_; ++w) {
    disagree += std::popcount(bits_[a * words_per_model_ + w] ^
                              bits_[b * words_per_model_ + w]);
  }
  return static_cast<std::int64_t>(n_examples_) - disagree;
}

std::int64_t PredictionMatrix::co_error_count(std::size_t a, std::size_t b) const {
  std::int64_t c = 0;
  for (std::size_t w = 0; w < words_per_model_; ++w) {
    c += std::popcount(bits_[a * words_per_model_ + w] &
                       bits_[b * words_per_model_ + w]);
  }
  return c;
}

std::int64_t PredictionMatrix::models_in_error(std::size_t example) const {
  std::int64_t c = 0;
  for (std::size_t m = 0; m < n_models(); ++m) {
    c += mistake(example, m) ? 1 : 0;
  }
  return c;
}

namespace {

void strip_cr(std::string& line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> cells;
  std::string cur;
  for (char ch : line) {
    if (ch == ',') {
      cells.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  cells.push_back(cur);
  return cells;
}

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

}  // namespace

PredictionMatrix load_matrix(std::istream& in, const LoadOptions& opts) {
  std::string line;
  std::size_t line_no = 0;

  if (!std::getline(in, line)) throw parse_error("empty input", 1);
  ++line_no;
  strip_cr(line);
  std::vector<std::string> header = split_csv(line);
  if (opts.example_id_col) {
    if (header.size() < 2) throw parse_error("expected model columns after the id column", line_no);
    header.erase(header.begin());
  }
  std::vector<std::string> ids;
  std::unordered_set<std::string> seen;
  for (auto& cell : header) {
    std::string id = trim(cell);
    if (id.empty()) throw parse_error("empty model id in header", line_no);
    if (!seen.insert(id).second) throw parse_error("duplicate model id '" + id + "'", line_no);
    ids.push_back(id);
  }

  std::vector<std::vector<bool>> rows;
  while (std::getline(in, line)) {
    ++line_no;
    strip_cr(line);
    if (line.empty() && in.peek() == EOF) break;  // trailing newline
    std::vector<std::string> cells = split_csv(line);
    if (opts.example_id_col) {
      if (cells.empty()) throw parse_error("missing example id", line_no);
      cells.erase(cells.begin());
    }
    if (cells.size() != ids.size()) {
      throw parse_error("expected " + std::to_string(ids.size()) + " cells, found " +
                            std::to_string(cells.size()),
                        line_no);
    }
    std::vector<bool> row(ids.size());
    for (std::size_t i = 0; i < cells.size(); ++i) {
      std::string v = trim(cells[i]);
      if (v == "0") {
        row[i] = false;
      } else if (v == "1") {
        row[i] = true;
      } else {
        throw parse_error("cell '" + v + "' is not 0 or 1", line_no);
      }
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw parse_error("no data rows", line_no + 1);

  PredictionMatrix m(std::move(ids), rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      if (rows[r][c]) m.set_mistake(r, c, true);
    }
  }
  return m;
}

PredictionMatrix load_matrix_file(const std::string& path, const LoadOptions& opts) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  return load_matrix(in, opts);
}

SimilaritySummary summarize(const PredictionMatrix& matrix) {
  const std::size_t m = matrix.n_models();
  const double n = static_cast<double>(matrix.n_examples());

  SimilaritySummary s;
  s.n_models = m;
  s.n_examples = matrix.n_examples();
  s.error_rates.resize(m);
  s.similarity.assign(m * m, 0.0);
  s.baseline.assign(m * m, 0.0);
  s.agree_counts.assign(m * m, 0);

  for (std::size_t i = 0; i < m; ++i) {
    s.error_rates[i] = static_cast<double>(matrix.mistake_count(i)) / n;
  }
  double sim_sum = 0.0, base_sum = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const std::int64_t agree = matrix.agree_count(i, j);
      s.agree_counts[i * m + j] = agree;
      s.similarity[i * m + j] = static_cast<double>(agree) / n;
      s.baseline[i * m + j] = independence_similarity(s.error_rates[i], s.error_rates[j]);
      if (i != j) {
        sim_sum += s.similarity[i * m + j];
        base_sum += s.baseline[i * m + j];
      }
    }
  }
  const double pairs = static_cast<double>(m) * (m - 1);
  s.mean_similarity = m > 1 ? sim_sum / pairs : 1.0;
  s.mean_baseline = m > 1 ? base_sum / pairs : 1.0;
  return s;
}

DifficultyHistogram difficulty_histogram(const PredictionMatrix& matrix) {
  DifficultyHistogram h;
  h.counts.assign(matrix.n_models() + 1, 0);
  for (std::size_t e = 0; e < matrix.n_examples(); ++e) {
    h.counts[static_cast<std::size_t>(matrix.models_in_error(e))] += 1;
  }
  h.cumulative.resize(h.counts.size());
  std::int64_t running = 0;
  for (std::size_t d = 0; d < h.counts.size(); ++d) {
    running += h.counts[d];
    h.cumulative[d] = running;
  }
  return h;
}

}  // namespace simbound
