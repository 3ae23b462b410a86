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

#include "core/block_pool.h"

#include <bit>
#include <new>

namespace bingo {
namespace {

int size_class(std::size_t bytes) {
  return static_cast<int>(std::bit_width(bytes > 1 ? bytes - 1 : 1));
}

}  // namespace

BlockPool::~BlockPool() {
  for (SizeClass& c : classes_) {
    for (void* block : c.blocks) ::operator delete(block);
  }
}

void* BlockPool::acquire(std::size_t bytes) {
  const int k = size_class(bytes);
  if (k < kClasses) {
    SizeClass& c = classes_[k];
    std::lock_guard<std::mutex> lock(c.mu);
    if (!c.blocks.empty()) {
      void* block = c.blocks.back();
      c.blocks.pop_back();
      return block;
    }
  }
  return ::operator new(std::size_t{1} << k);
}

void BlockPool::release(void* block, std::size_t bytes) {
  const int k = size_class(bytes);
  if (k >= kClasses) {
    ::operator delete(block);
    return;
  }
  SizeClass& c = classes_[k];
  std::lock_guard<std::mutex> lock(c.mu);
  c.blocks.push_back(block);
}

std::size_t BlockPool::cached_bytes() const {
  std::size_t total = 0;
  for (int k = 0; k < kClasses; ++k) {
    std::lock_guard<std::mutex> lock(classes_[k].mu);
    total += classes_[k].blocks.size() * (std::size_t{1} << k);
  }
  return total;
}

}  // namespace bingo
