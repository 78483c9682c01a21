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

#include "checks.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "lodgraph/error.hpp"
#include "lodgraph/graph.hpp"
#include "lodgraph/measures.hpp"
#include "lodgraph/stats_fit.hpp"

namespace oracle {

namespace {

class Diff {
 public:
  template <class A, class B>
  void exact(const char* what, const A& got, const B& want) {
    if (!(got == want)) out_ << what << ": got " << got << " want " << want << "; ";
  }
  void close(const char* what, double got, double want, double tol) {
    if (!(std::fabs(got - want) <= tol)) out_ << what << ": got " << got << " want " << want << "; ";
  }
  void note(const std::string& s) { out_ << s << "; "; }
  std::string str() const { return out_.str(); }

 private:
  std::ostringstream out_;
};

}  // namespace

std::string compare_measures(const EdgeList& e) {
  using namespace lodgraph;
  const Graph g = Graph::from_pairs(e.n, e.edges);
  const MeasureReport r = compute_measures(g);
  Diff d;
  const double n = static_cast<double>(e.n);
  const double m = static_cast<double>(e.edges.size());
  const auto din = in_degrees(e), dout = out_degrees(e), dtot = total_degrees(e);
  const auto mu = distinct_pairs(e);

  d.exact("n", r.n.value_or(~0ULL), e.n);
  d.exact("m", r.m.value_or(~0ULL), e.edges.size());
  d.exact("m_u", r.m_u.value_or(~0ULL), mu);
  d.exact("m_p", r.m_p.value_or(~0ULL), e.edges.size() - mu);
  d.exact("d_max", r.d_max.value_or(~0ULL), *std::max_element(dtot.begin(), dtot.end()));
  d.exact("d_max_in", r.d_max_in.value_or(~0ULL), *std::max_element(din.begin(), din.end()));
  d.exact("d_max_out", r.d_max_out.value_or(~0ULL), *std::max_element(dout.begin(), dout.end()));
  d.exact("c_d_max", r.c_d_max.value_or(~0ULL), *std::max_element(dtot.begin(), dtot.end()));
  d.exact("h_d", r.h_d.value_or(~0ULL), h_index_scan(din));
  d.exact("h_u", r.h_u.value_or(~0ULL), h_index_scan(dtot));
  d.close("z", r.z.value_or(NAN), m / n, 1e-9);
  d.close("z_in", r.z_in.value_or(NAN), m / n, 1e-9);
  d.close("z_out", r.z_out.value_or(NAN), m / n, 1e-9);
  d.close("z_total", r.z_total.value_or(NAN), 2 * m / n, 1e-9);
  d.close("p", r.p.value_or(NAN), m / (n * n), 1e-9);
  d.close("p_u", r.p_u.value_or(NAN), static_cast<double>(mu) / (n * n), 1e-9);

  if (e.edges.empty()) {
    if (r.y || r.m_bi) d.note("y/m_bi defined on an edgeless graph");
  } else {
    const auto bi = reciprocated(e);
    d.exact("m_bi", r.m_bi.value_or(~0ULL), bi);
    d.close("y", r.y.value_or(NAN), static_cast<double>(bi) / m, 1e-9);
  }

  const auto cd = centralization(e);
  if (cd.has_value() != r.c_d.has_value())
    d.note("c_d definedness differs");
  else if (cd)
    d.close("c_d", *r.c_d, *cd, 1e-9);

  const auto mi = two_pass_moments(din), mo = two_pass_moments(dout);
  d.close("var_in", r.var_in.value_or(NAN), mi.variance, 1e-9);
  d.close("var_out", r.var_out.value_or(NAN), mo.variance, 1e-9);
  d.close("sd_in", r.sd_in.value_or(NAN), mi.stddev, 1e-9);
  d.close("sd_out", r.sd_out.value_or(NAN), mo.stddev, 1e-9);
  if (mi.cv.has_value() != r.cv_in.has_value())
    d.note("cv_in definedness differs");
  else if (mi.cv)
    d.close("cv_in", *r.cv_in, *mi.cv, 1e-9);
  if (mo.cv.has_value() != r.cv_out.has_value())
    d.note("cv_out definedness differs");
  else if (mo.cv)
    d.close("cv_out", *r.cv_out, *mo.cv, 1e-9);

  // Pseudo-diameter: a lower bound of the exact diameter that is at least
  // half of it (it is some vertex's eccentricity), and exact on forests.
  const auto diam = exact_diameter_largest_component(e);
  if (!r.delta) {
    d.note("delta undefined");
  } else {
    if (*r.delta > diam || 2 * *r.delta < diam)
      d.note("delta " + std::to_string(*r.delta) + " outside [" + std::to_string((diam + 1) / 2) + ", " +
             std::to_string(diam) + "]");
    if (is_forest(e)) d.exact("delta on forest", *r.delta, diam);
  }

  const auto pr = pagerank(g);
  const auto want = dense_pagerank(e, 0.85);
  double sum = 0;
  for (std::size_t v = 0; v < e.n; ++v) {
    d.close("pagerank", pr.scores[v], want[v], 1e-6);
    sum += pr.scores[v];
  }
  d.close("pagerank sum", sum, 1.0, 1e-8);
  d.close("pr_max", r.pr_max.value_or(NAN), *std::max_element(want.begin(), want.end()), 1e-6);
  return d.str();
}

std::pair<double, std::uint64_t> fit_synthetic(double alpha, std::size_t draws, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const PowerLawSampler sample(alpha);
  std::vector<std::uint64_t> xs(draws);
  for (auto& x : xs) x = sample(rng);
  const auto fit = lodgraph::fit_powerlaw(xs);
  if (!fit) return {NAN, 0};
  return {fit->alpha, fit->d_min};
}

}  // namespace oracle
