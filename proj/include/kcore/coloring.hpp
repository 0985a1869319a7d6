/*
   Copyright 2026 The kcore-maint Authors

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

#ifndef KCORE_COLORING_HPP
#define KCORE_COLORING_HPP

#include <string_view>
#include <vector>

#include "kcore/graph.hpp"

namespace kcore {

enum class ColoringMode {
  /// Smallest color free at both endpoints, edges in input order.
  /// At most 2*batch_degree - 1 colors.
  greedy,
  /// Misra-Gries fan rotation. At most batch_degree + 1 colors.
  delta_plus_one,
};

const char* to_string(ColoringMode mode);
/// Accepts "greedy" and "delta1". Throws std::invalid_argument otherwise.
ColoringMode parse_coloring_mode(std::string_view text);

/// A proper edge coloring of a batch, one matching per color class.
/// Classes are ordered by color index, empty classes are omitted, and edges
/// inside a class keep their input order.
struct MatchingSchedule {
  std::vector<std::vector<Edge>> classes;
  std::size_t colors_used = 0;
};

MatchingSchedule color_batch(const EdgeBatch& batch, ColoringMode mode);

/// True iff every class is a matching, no class is empty, colors_used equals
/// the class count, and the classes partition the batch edges exactly.
bool verify_schedule(const EdgeBatch& batch, const MatchingSchedule& schedule);

}  // namespace kcore

#endif  // KCORE_COLORING_HPP
