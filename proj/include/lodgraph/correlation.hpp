/*
Copyright 2026 The lodgraph Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lodgraph/measures.hpp"

namespace lodgraph {

/// Measures that together characterise a dataset; the default selection.
const std::vector<std::string>& minimal_measure_set();

/// Pearson coefficient over pairs where both values are present. nullopt if
/// fewer than 3 pairs remain or either side has zero variance.
std::optional<double> pearson(std::span<const std::optional<double>> x,
                              std::span<const std::optional<double>> y);
std::optional<double> pearson(std::span<const double> x, std::span<const double> y);

/// Rows are datasets, columns measures; undefined values are masked.
struct MeasureMatrix {
  std::vector<std::string> datasets;
  std::vector<std::string> measures;
  std::vector<std::vector<std::optional<double>>> columns;  // columns[measure][dataset]
};

/// Throws Error(InvalidArgument) on duplicate or unknown measure names.
MeasureMatrix make_measure_matrix(std::span<const MeasureReport> reports,
                                  std::span<const std::string> measures);

struct CorrelationMatrix {
  std::vector<std::string> measures;
  std::vector<std::vector<std::optional<double>>> r;  // symmetric, unit diagonal
};

/// Throws Error(InvalidArgument) for fewer than 3 datasets.
CorrelationMatrix correlation_matrix(const MeasureMatrix& matrix);

/// CSV with a header row of measure names; masked cells are NA.
void write_correlation_csv(const CorrelationMatrix& c, std::ostream& out);
/// `row<TAB>col<TAB>r` lines for every cell, heatmap-ready.
void write_heatmap_tsv(const CorrelationMatrix& c, std::ostream& out);

}  // namespace lodgraph
