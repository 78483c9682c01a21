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

// Library-versus-oracle comparisons shared by the unit and acceptance tests.
// Each returns an empty string on agreement, otherwise what differed.

#include <cstdint>
#include <string>

#include "oracles.hpp"

namespace oracle {

std::string compare_measures(const EdgeList& g);

// Power-law sample of `draws` values with exponent `alpha`, fitted by the
// library; returns (alpha, d_min).
std::pair<double, std::uint64_t> fit_synthetic(double alpha, std::size_t draws, std::uint64_t seed);

}  // namespace oracle
