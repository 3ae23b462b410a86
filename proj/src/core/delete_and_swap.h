// Copyright 2026 The Bingo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BINGO_CORE_DELETE_AND_SWAP_H_
#define BINGO_CORE_DELETE_AND_SWAP_H_

#include <omp.h>

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace bingo {

struct SlotMove {
  std::uint32_t from;
  std::uint32_t to;
};

// Plan for removing N distinct positions from a compact list of length n.
//
// Phase 1 looks at the tail window [n - N, n): the gamma marked entries there
// are dropped with the window, the N - gamma unmarked ones are survivors.
// Phase 2 moves the survivors into the N - gamma marked slots below the
// window. Survivors are read only from the window, which phase 2 never
// writes, so the moves are independent of each other.
struct DeletePlan {
  std::uint32_t new_size = 0;
  std::vector<SlotMove> moves;  // ascending by destination
};

// Throws kInvalidArgument on duplicate or out-of-range positions.
DeletePlan plan_delete_and_swap(std::size_t size, std::span<const std::uint32_t> positions);

// Applies the plan's moves to a random-access container; moves run in
// parallel once there are enough of them to be worth it. Inside an enclosing
// parallel region the loop stays serial and skips the team setup.
template <class Container>
void apply_moves(Container& list, const DeletePlan& plan) {
  const std::ptrdiff_t count = static_cast<std::ptrdiff_t>(plan.moves.size());
  const SlotMove* moves = plan.moves.data();
  if (count <= 4096 || omp_in_parallel()) {
    for (std::ptrdiff_t j = 0; j < count; ++j) list[moves[j].to] = list[moves[j].from];
    return;
  }
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t j = 0; j < count; ++j) {
    list[moves[j].to] = list[moves[j].from];
  }
}

// Removes the given positions from `list` keeping it compact; returns the
// moves performed so callers can repair indices that point into the list.
template <class T>
std::vector<SlotMove> parallel_delete_and_swap(std::vector<T>& list,
                                               std::span<const std::uint32_t> positions) {
  DeletePlan plan = plan_delete_and_swap(list.size(), positions);
  apply_moves(list, plan);
  list.resize(plan.new_size);
  return std::move(plan.moves);
}

}  // namespace bingo

#endif  // BINGO_CORE_DELETE_AND_SWAP_H_
