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

#ifndef BINGO_CORE_BLOCK_POOL_H_
#define BINGO_CORE_BLOCK_POOL_H_

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <cstring>
#include <mutex>
#include <type_traits>
#include <utility>
#include <vector>

namespace bingo {

// Free lists of power-of-two byte blocks, one list per size class. Blocks
// released by a growable array are handed to the next array that needs that
// size instead of going back to the system allocator. Thread-safe.
class BlockPool {
 public:
  BlockPool() = default;
  BlockPool(const BlockPool&) = delete;
  BlockPool& operator=(const BlockPool&) = delete;
  ~BlockPool();

  // bytes must be a power of two.
  void* acquire(std::size_t bytes);
  void release(void* block, std::size_t bytes);

  std::size_t cached_bytes() const;

 private:
  static constexpr int kClasses = 48;

  struct SizeClass {
    mutable std::mutex mu;
    std::vector<void*> blocks;
  };

  std::array<SizeClass, kClasses> classes_;
};

// Compact growable array of trivially copyable values. Capacity doubles on
// growth, halves when a quarter full, and never drops below kMinCapacity.
// Storage comes from a BlockPool when one is given, otherwise the heap.
template <class T>
class PooledArray {
  static_assert(std::is_trivially_copyable_v<T>);

 public:
  static constexpr std::uint32_t kMinCapacity = 4;

  explicit PooledArray(BlockPool* pool = nullptr) : pool_(pool) {}
  PooledArray(const PooledArray& other) : pool_(other.pool_) {
    reserve(other.size_);
    if (other.size_ != 0) std::memcpy(data_, other.data_, other.size_ * sizeof(T));
    size_ = other.size_;
  }
  PooledArray(PooledArray&& other) noexcept
      : pool_(other.pool_),
        data_(std::exchange(other.data_, nullptr)),
        size_(std::exchange(other.size_, 0)),
        capacity_(std::exchange(other.capacity_, 0)) {}
  PooledArray& operator=(PooledArray other) noexcept {
    swap(other);
    return *this;
  }
  ~PooledArray() { free_storage(); }

  void swap(PooledArray& other) noexcept {
    std::swap(pool_, other.pool_);
    std::swap(data_, other.data_);
    std::swap(size_, other.size_);
    std::swap(capacity_, other.capacity_);
  }

  std::uint32_t size() const { return size_; }
  std::uint32_t capacity() const { return capacity_; }
  bool empty() const { return size_ == 0; }
  T* data() { return data_; }
  const T* data() const { return data_; }
  T& operator[](std::size_t i) { return data_[i]; }
  const T& operator[](std::size_t i) const { return data_[i]; }
  T& back() { return data_[size_ - 1]; }

  void push_back(const T& value) {
    if (size_ == capacity_) reallocate(std::max(kMinCapacity, capacity_ * 2));
    data_[size_++] = value;
  }

  void pop_back() { resize(size_ - 1); }

  void reserve(std::uint32_t n) {
    if (n > capacity_) reallocate(round_up(n));
  }

  // Shrinking may release capacity back to the pool.
  void resize(std::uint32_t n) {
    if (n > capacity_) reallocate(round_up(n));
    size_ = n;
    if (capacity_ > kMinCapacity && size_ <= capacity_ / 4) {
      reallocate(std::max(kMinCapacity, round_up(size_ * 2)));
    }
  }

  void clear() { resize(0); }

 private:
  static std::uint32_t round_up(std::uint32_t n) {
    std::uint32_t c = kMinCapacity;
    while (c < n) c *= 2;
    return c;
  }

  void* allocate(std::size_t bytes) {
    return pool_ ? pool_->acquire(bytes) : ::operator new(bytes);
  }

  void deallocate(void* block, std::size_t bytes) {
    if (pool_) {
      pool_->release(block, bytes);
    } else {
      ::operator delete(block);
    }
  }

  void reallocate(std::uint32_t new_capacity) {
    if (new_capacity == capacity_) return;
    T* fresh = static_cast<T*>(allocate(new_capacity * sizeof(T)));
    if (size_ != 0) std::memcpy(fresh, data_, std::min(size_, new_capacity) * sizeof(T));
    free_storage();
    data_ = fresh;
    capacity_ = new_capacity;
  }

  void free_storage() {
    if (data_ != nullptr) deallocate(data_, capacity_ * sizeof(T));
    data_ = nullptr;
    capacity_ = 0;
  }

  BlockPool* pool_ = nullptr;
  T* data_ = nullptr;
  std::uint32_t size_ = 0;
  std::uint32_t capacity_ = 0;
};

}  // namespace bingo

#endif  // BINGO_CORE_BLOCK_POOL_H_
