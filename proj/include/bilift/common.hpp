// Copyright 2026 The Bilift Authors
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

#ifndef BILIFT_COMMON_HPP_
#define BILIFT_COMMON_HPP_

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace bilift {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The coefficients restricted to I do not form a minimal cover of the
// (restricted) right-hand side.
class NotMinimalCoverError : public Error {
 public:
  using Error::Error;
};

// A gamma term was requested with a class tag inconsistent with the sign or
// magnitude of its coefficient.
class ClassMismatchError : public Error {
 public:
  using Error::Error;
};

// An enumeration exceeded its configured size cap.
class CapExceededError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// Deterministic uniform generator. Doubles are derived from the top 53 bits
// of mt19937_64 output, so streams are identical across platforms and build
// modes for a fixed seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform in [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Uniform integer in [lo, hi], inclusive.
  int uniform_int(int lo, int hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(engine_() % span);
  }

 private:
  std::mt19937_64 engine_;
};

// Worker count for parallel point evaluation. BILIFT_THREADS caps it; the
// default keeps a small constant so CI boxes behave alike.
int worker_threads();

}  // namespace bilift

#endif  // BILIFT_COMMON_HPP_
