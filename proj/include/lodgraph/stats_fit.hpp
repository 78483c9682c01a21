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

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "lodgraph/graph.hpp"

namespace lodgraph {

enum class DegreeMode { In, Out, Total };

const char* to_string(DegreeMode mode) noexcept;
std::optional<DegreeMode> parse_degree_mode(std::string_view s) noexcept;

/// Per-vertex degree of the requested kind, indexed by vertex id.
std::vector<std::uint64_t> degree_sequence(const Graph& g, DegreeMode mode);

/// Exact frequency table: (degree, number of vertices), ascending by degree.
struct DegreeHistogram {
  DegreeMode mode = DegreeMode::Total;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> bins;

  std::uint64_t vertices() const noexcept;
};

DegreeHistogram degree_distribution(const Graph& g, DegreeMode mode);
DegreeHistogram make_histogram(std::span<const std::uint64_t> degrees, DegreeMode mode);

struct Dispersion {
  double mean = 0;
  double variance = 0;  // population variance
  double stddev = 0;
  std::optional<double> cv;  // 100 * stddev / mean; undefined when mean == 0
};

/// Throws UndefinedMeasure on an empty histogram.
Dispersion dispersion(const DegreeHistogram& h);

enum class PowerLawEstimator {
  Exact,        // maximises the discrete likelihood normalised by the Hurwitz zeta
  Approximate,  // closed form 1 + T / sum ln(d / (d_min - 0.5))
};

struct PowerLawOptions {
  std::uint64_t min_tail = 10;
  PowerLawEstimator estimator = PowerLawEstimator::Exact;
};

struct PowerLawFit {
  double alpha = 0;
  std::uint64_t d_min = 0;
  double ks_distance = 0;
  std::uint64_t tail_size = 0;

  bool in_typical_range() const noexcept { return alpha > 2.0 && alpha < 3.0; }
};

/// Evaluates every admissible cutoff: each distinct positive value except the
/// largest whose tail holds at least `min_tail` samples. Zeros are ignored.
std::vector<PowerLawFit> powerlaw_candidates(std::span<const std::uint64_t> sample,
                                             const PowerLawOptions& options = {});

/// Candidate with the smallest KS distance (first one on ties); nullopt when
/// no cutoff is admissible.
std::optional<PowerLawFit> fit_powerlaw(std::span<const std::uint64_t> sample,
                                        const PowerLawOptions& options = {});

/// Hurwitz zeta, sum over k >= 0 of (k + q)^-s, for s > 1 and q > 0.
double hurwitz_zeta(double s, double q);

/// Tab-separated plot data: `# alpha=<v> dmin=<v> mode=<v>` then
/// `k<TAB>count<TAB>tail_prob` rows, tail_prob = P(degree >= k).
/// Throws Error(InvalidArgument) for an empty histogram.
void export_plotdata(const DegreeHistogram& h, const std::optional<PowerLawFit>& fit,
                     std::ostream& out);
void export_plotdata(const DegreeHistogram& h, const std::optional<PowerLawFit>& fit,
                     const std::filesystem::path& path);

}  // namespace lodgraph
