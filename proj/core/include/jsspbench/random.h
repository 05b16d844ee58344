// Copyright 2026 The jsspbench Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef JSSPBENCH_RANDOM_H_
#define JSSPBENCH_RANDOM_H_

#include <cstdint>
#include <random>
#include <span>
#include <utility>

namespace jsspbench {

// Seedable generator used by every randomized routine in the library.
//
// The engine is std::mt19937_64, whose output sequence is fixed by the C++
// standard. Range reduction and shuffling are implemented here rather than
// through std::uniform_int_distribution / std::shuffle, whose algorithms are
// implementation-defined, so that a seed produces the same instance with any
// standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t Next() { return engine_(); }

  // Uniform integer in [lo, hi]; requires lo <= hi.
  std::int64_t UniformInt(std::int64_t lo, std::int64_t hi);

  // Uniform integer in [0, n); requires n > 0.
  std::uint64_t Below(std::uint64_t n);

  // Fisher-Yates shuffle.
  template <typename T>
  void Shuffle(std::span<T> values) {
    for (std::size_t i = values.size(); i > 1; --i) {
      const std::size_t j = Below(i);
      using std::swap;
      swap(values[i - 1], values[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

// SplitMix64 finalizer.
std::uint64_t Mix64(std::uint64_t x);

// Stable seed derivation: folds each component into the running state with
// Mix64. Used for suite seeds so that adding groups never perturbs others.
std::uint64_t DeriveSeed(std::uint64_t base, std::uint64_t a, std::uint64_t b,
                         std::uint64_t c);

}  // namespace jsspbench

#endif  // JSSPBENCH_RANDOM_H_
