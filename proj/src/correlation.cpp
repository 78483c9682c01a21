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

#include "lodgraph/correlation.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <set>

#include "lodgraph/error.hpp"
#include "lodgraph/format.hpp"

namespace lodgraph {

const std::vector<std::string>& minimal_measure_set() {
  static const std::vector<std::string> set = {"n", "m", "d_max", "z", "p", "y", "delta", "alpha"};
  return set;
}

std::optional<double> pearson(std::span<const std::optional<double>> x,
                              std::span<const std::optional<double>> y) {
  if (x.size() != y.size()) throw Error(ErrorCode::InvalidArgument, "pearson: length mismatch");
  // Running means and co-moments (Welford); stable under shifts and scaling.
  double mean_x = 0, mean_y = 0, sxx = 0, syy = 0, sxy = 0;
  std::size_t k = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!x[i] || !y[i]) continue;
    ++k;
    const double dx = *x[i] - mean_x;
    const double dy = *y[i] - mean_y;
    mean_x += dx / static_cast<double>(k);
    mean_y += dy / static_cast<double>(k);
    const double dx2 = *x[i] - mean_x;
    const double dy2 = *y[i] - mean_y;
    sxx += dx * dx2;
    syy += dy * dy2;
    sxy += dx * dy2;
  }
  if (k < 3 || !(sxx > 0) || !(syy > 0)) return std::nullopt;
  const double r = sxy / std::sqrt(sxx * syy);
  return std::clamp(r, -1.0, 1.0);
}

std::optional<double> pearson(std::span<const double> x, std::span<const double> y) {
  std::vector<std::optional<double>> ox(x.begin(), x.end()), oy(y.begin(), y.end());
  return pearson(ox, oy);
}

MeasureMatrix make_measure_matrix(std::span<const MeasureReport> reports,
                                  std::span<const std::string> measures) {
  std::set<std::string> seen;
  for (const auto& m : measures)
    if (!seen.insert(m).second) throw Error(ErrorCode::InvalidArgument, "duplicate measure '" + m + "'");

  MeasureMatrix mm;
  mm.measures.assign(measures.begin(), measures.end());
  for (const auto& r : reports) mm.datasets.push_back(r.dataset);
  for (const auto& name : measures) {
    std::vector<std::optional<double>> col;
    col.reserve(reports.size());
    try {
      for (const auto& r : reports) col.push_back(measure_value(r, name));
    } catch (const Error& e) {
      throw Error(ErrorCode::InvalidArgument, e.what());
    }
    mm.columns.push_back(std::move(col));
  }
  return mm;
}

CorrelationMatrix correlation_matrix(const MeasureMatrix& matrix) {
  if (matrix.datasets.size() < 3)
    throw Error(ErrorCode::InvalidArgument, "correlation needs at least 3 datasets");
  const std::size_t k = matrix.measures.size();
  CorrelationMatrix c;
  c.measures = matrix.measures;
  c.r.assign(k, std::vector<std::optional<double>>(k));
  for (std::size_t i = 0; i < k; ++i) {
    c.r[i][i] = 1.0;
    for (std::size_t j = i + 1; j < k; ++j) {
      c.r[i][j] = pearson(matrix.columns[i], matrix.columns[j]);
      c.r[j][i] = c.r[i][j];
    }
  }
  return c;
}

void write_correlation_csv(const CorrelationMatrix& c, std::ostream& out) {
  out << "measure";
  for (const auto& m : c.measures) out << ',' << m;
  out << '\n';
  for (std::size_t i = 0; i < c.measures.size(); ++i) {
    out << c.measures[i];
    for (std::size_t j = 0; j < c.measures.size(); ++j)
      out << ',' << (c.r[i][j] ? format_double(*c.r[i][j]) : "NA");
    out << '\n';
  }
  if (!out) throw Error(ErrorCode::Io, "correlation write failed");
}

void write_heatmap_tsv(const CorrelationMatrix& c, std::ostream& out) {
  out << "row\tcol\tr\n";
  for (std::size_t i = 0; i < c.measures.size(); ++i)
    for (std::size_t j = 0; j < c.measures.size(); ++j)
      out << c.measures[i] << '\t' << c.measures[j] << '\t'
          << (c.r[i][j] ? format_double(*c.r[i][j]) : "NA") << '\n';
  if (!out) throw Error(ErrorCode::Io, "heatmap write failed");
}

}  // namespace lodgraph
