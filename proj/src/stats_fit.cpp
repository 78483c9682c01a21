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

#include "lodgraph/stats_fit.hpp"

#include <algorithm>
#include <array>
#include <boost/math/tools/minima.hpp>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <ostream>

#include "lodgraph/error.hpp"
#include "lodgraph/format.hpp"

namespace lodgraph {

const char* to_string(DegreeMode mode) noexcept {
  switch (mode) {
    case DegreeMode::In: return "in";
    case DegreeMode::Out: return "out";
    case DegreeMode::Total: return "total";
  }
  return "total";
}

std::optional<DegreeMode> parse_degree_mode(std::string_view s) noexcept {
  if (s == "in") return DegreeMode::In;
  if (s == "out") return DegreeMode::Out;
  if (s == "total") return DegreeMode::Total;
  return std::nullopt;
}

std::vector<std::uint64_t> degree_sequence(const Graph& g, DegreeMode mode) {
  std::vector<std::uint64_t> d(g.num_vertices());
  for (VertexId v = 0; v < d.size(); ++v) {
    switch (mode) {
      case DegreeMode::In: d[v] = g.in_degree(v); break;
      case DegreeMode::Out: d[v] = g.out_degree(v); break;
      case DegreeMode::Total: d[v] = g.degree(v); break;
    }
  }
  return d;
}

std::uint64_t DegreeHistogram::vertices() const noexcept {
  std::uint64_t n = 0;
  for (const auto& [k, c] : bins) n += c;
  return n;
}

DegreeHistogram make_histogram(std::span<const std::uint64_t> degrees, DegreeMode mode) {
  std::map<std::uint64_t, std::uint64_t> counts;
  for (auto d : degrees) ++counts[d];
  DegreeHistogram h;
  h.mode = mode;
  h.bins.assign(counts.begin(), counts.end());
  return h;
}

DegreeHistogram degree_distribution(const Graph& g, DegreeMode mode) {
  return make_histogram(degree_sequence(g, mode), mode);
}

Dispersion dispersion(const DegreeHistogram& h) {
  const std::uint64_t n = h.vertices();
  if (n == 0) throw UndefinedMeasure("dispersion of an empty histogram");
  long double sum = 0;
  for (const auto& [k, c] : h.bins) sum += static_cast<long double>(k) * c;
  const long double mean = sum / n;
  long double sq = 0;
  for (const auto& [k, c] : h.bins) {
    const long double dev = static_cast<long double>(k) - mean;
    sq += dev * dev * c;
  }
  Dispersion d;
  d.mean = static_cast<double>(mean);
  d.variance = static_cast<double>(sq / n);
  d.stddev = std::sqrt(d.variance);
  if (d.mean > 0) d.cv = 100.0 * d.stddev / d.mean;
  return d;
}

double hurwitz_zeta(double s, double q) {
  if (!(s > 1.0) || !(q > 0.0)) throw Error(ErrorCode::InvalidArgument, "hurwitz_zeta needs s > 1, q > 0");
  // Euler-Maclaurin: direct terms until the shift exceeds 9, then a tail
  // integral plus Bernoulli corrections. Coefficients are (2j)!/B_2j.
  static constexpr std::array<double, 12> kA = {
      12.0, -720.0, 30240.0, -1209600.0, 47900160.0, -1.8924375803183791606e9,
      7.47242496e10, -2.950130727918164224e12, 1.1646782814350067249e14,
      -4.5979787224074726105e15, 1.8152105401943546773e17, -7.1661652561756670113e18};
  constexpr double eps = std::numeric_limits<double>::epsilon();

  double sum = std::pow(q, -s);
  double a = q;
  double b = 0.0;
  int i = 0;
  while (i < 9 || a <= 9.0) {
    ++i;
    a += 1.0;
    b = std::pow(a, -s);
    sum += b;
    if (std::fabs(b / sum) < eps) return sum;
  }
  const double w = a;
  sum += b * w / (s - 1.0);
  sum -= 0.5 * b;
  double rising = 1.0;
  double k = 0.0;
  for (double coeff : kA) {
    rising *= s + k;
    b /= w;
    const double t = rising * b / coeff;
    sum += t;
    if (std::fabs(t / sum) < eps) break;
    k += 1.0;
    rising *= s + k;
    b /= w;
    k += 1.0;
  }
  return sum;
}

namespace {

constexpr double kAlphaLow = 1.0 + 1e-9;
constexpr double kAlphaHigh = 100.0;

double exact_alpha(std::uint64_t d_min, std::uint64_t tail, double log_sum, double initial) {
  const double T = static_cast<double>(tail);
  const double q = static_cast<double>(d_min);
  auto nll = [&](double a) { return T * std::log(hurwitz_zeta(a, q)) + a * log_sum; };
  // The likelihood is concave in alpha; bracket around the closed-form seed.
  double lo = std::max(kAlphaLow, 1.0 + (initial - 1.0) * 0.25);
  double hi = std::min(kAlphaHigh, 1.0 + (initial - 1.0) * 4.0 + 1.0);
  std::uintmax_t iters = 200;
  auto [a, f] = boost::math::tools::brent_find_minima(nll, lo, hi, 40, iters);
  // Optimum pinned at a bracket end: widen to the full domain.
  if (a - lo < 1e-6 || hi - a < 1e-6) {
    iters = 400;
    std::tie(a, f) = boost::math::tools::brent_find_minima(nll, kAlphaLow, kAlphaHigh, 40, iters);
  }
  return a;
}

}  // namespace

std::vector<PowerLawFit> powerlaw_candidates(std::span<const std::uint64_t> sample,
                                             const PowerLawOptions& options) {
  std::vector<std::uint64_t> x;
  x.reserve(sample.size());
  for (auto d : sample)
    if (d > 0) x.push_back(d);
  std::sort(x.begin(), x.end());

  const std::size_t N = x.size();
  // suffix_log[i] = sum of ln x[j] for j >= i
  std::vector<double> suffix_log(N + 1, 0.0);
  for (std::size_t i = N; i-- > 0;) suffix_log[i] = suffix_log[i + 1] + std::log(static_cast<double>(x[i]));

  // Distinct values with the index of their first occurrence.
  std::vector<std::pair<std::uint64_t, std::size_t>> uniq;
  for (std::size_t i = 0; i < N; ++i)
    if (i == 0 || x[i] != x[i - 1]) uniq.emplace_back(x[i], i);

  std::vector<PowerLawFit> fits;
  if (uniq.size() < 2) return fits;
  for (std::size_t c = 0; c + 1 < uniq.size(); ++c) {
    const auto [d_min, start] = uniq[c];
    const std::size_t tail = N - start;
    if (tail < options.min_tail) break;  // tails only shrink from here
    const double T = static_cast<double>(tail);
    const double log_sum = suffix_log[start];
    const double approx = 1.0 + T / (log_sum - T * std::log(static_cast<double>(d_min) - 0.5));
    const double alpha = options.estimator == PowerLawEstimator::Exact
                             ? exact_alpha(d_min, tail, log_sum, approx)
                             : approx;

    // KS distance between P(X < u) of the tail sample and of the fitted
    // discrete power law, evaluated at each distinct tail value u.
    const double z_min = hurwitz_zeta(alpha, static_cast<double>(d_min));
    double below = 0.0;  // sum_{k = d_min}^{u - 1} k^-alpha
    std::uint64_t at = d_min;
    double ks = 0.0;
    for (std::size_t j = c; j < uniq.size(); ++j) {
      const auto [u, first] = uniq[j];
      if (u - at <= 64) {
        for (; at < u; ++at) below += std::pow(static_cast<double>(at), -alpha);
      } else {
        below = z_min - hurwitz_zeta(alpha, static_cast<double>(u));
        at = u;
      }
      const double empirical = static_cast<double>(first - start) / T;
      const double model = below / z_min;
      ks = std::max(ks, std::fabs(empirical - model));
    }
    fits.push_back(PowerLawFit{alpha, d_min, ks, tail});
  }
  return fits;
}

std::optional<PowerLawFit> fit_powerlaw(std::span<const std::uint64_t> sample,
                                        const PowerLawOptions& options) {
  const auto fits = powerlaw_candidates(sample, options);
  if (fits.empty()) return std::nullopt;
  const auto best = std::min_element(fits.begin(), fits.end(), [](const auto& a, const auto& b) {
    return a.ks_distance < b.ks_distance;
  });
  return *best;
}

void export_plotdata(const DegreeHistogram& h, const std::optional<PowerLawFit>& fit,
                     std::ostream& out) {
  const std::uint64_t n = h.vertices();
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "cannot export an empty histogram");
  out << "# alpha=" << (fit ? format_double(fit->alpha) : "NA")
      << " dmin=" << (fit ? std::to_string(fit->d_min) : "NA") << " mode=" << to_string(h.mode)
      << '\n';
  std::uint64_t at_or_above = n;
  for (const auto& [k, c] : h.bins) {
    out << k << '\t' << c << '\t'
        << format_double(static_cast<double>(at_or_above) / static_cast<double>(n)) << '\n';
    at_or_above -= c;
  }
  if (!out) throw Error(ErrorCode::Io, "plot data write failed");
}

void export_plotdata(const DegreeHistogram& h, const std::optional<PowerLawFit>& fit,
                     const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::Io, "cannot write " + path.string());
  export_plotdata(h, fit, out);
}

}  // namespace lodgraph
