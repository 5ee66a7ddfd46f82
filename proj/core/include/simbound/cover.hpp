// Copyright (c) the simbound authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef SIMBOUND_COVER_HPP
#define SIMBOUND_COVER_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "simbound/dataio.hpp"

namespace simbound {

struct CoverWitness {
  std::size_t below = 0;  // cover member with error <= and similarity >= eta
  std::size_t above = 0;  // cover member with error >= and similarity >= eta
};

// An empirical similarity cover: every model has a lower-error and a
// higher-error witness in the cover with empirical similarity >= eta. The
// size is an upper bound on the covering number at that level.
struct CoverResult {
  double eta = 0.0;
  std::vector<std::size_t> cover_indices;   // in selection order
  std::vector<CoverWitness> certificate;    // indexed by model
  std::size_t size() const { return cover_indices.size(); }
};

// Greedy weighted set cover over the 2m witness slots; ties broken by the
// lowest column index. The returned certificate has already passed
// verify_cover.
CoverResult greedy_cover(const PredictionMatrix& matrix, double eta);

// Cover sizes over an eta grid. Evaluated from the highest level down so a
// cover found at a higher level (still valid below) caps the size; the
// resulting curve is nondecreasing in eta.
std::vector<std::pair<double, std::size_t>> cover_curve(
    const PredictionMatrix& matrix, const std::vector<double>& eta_grid);

// Independent re-check of the cover conditions from the raw matrix.
bool verify_cover(const PredictionMatrix& matrix, const CoverResult& result);

// Smallest agreement count that qualifies as similarity >= eta on this
// matrix (ceil of the raw double product).
std::int64_t min_agree_count(const PredictionMatrix& matrix, double eta);

}  // namespace simbound

#endif
