/*
   Copyright 2026 genocchi developers

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

#ifndef GENOCCHI_TESTUTIL_HPP
#define GENOCCHI_TESTUTIL_HPP

#include <cstdint>
#include <vector>

#include "genocchi/polynomial.hpp"

namespace genocchi::test {

// Deterministic splitmix64; property-style tests draw from a fixed seed so
// every run checks the same inputs.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ull;
    uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  long range(long lo, long hi) {  // inclusive
    return lo + static_cast<long>(next() % static_cast<uint64_t>(hi - lo + 1));
  }

  Rat rat(long num_bound = 99, long den_bound = 20) {
    long num = range(-num_bound, num_bound);
    long den = range(1, den_bound);
    return make_rat(num, den);
  }

  Rat nonzero_rat(long num_bound = 99, long den_bound = 20) {
    Rat r = rat(num_bound, den_bound);
    while (r == 0) r = rat(num_bound, den_bound);
    return r;
  }

  Poly poly(long max_degree) {
    long deg = range(0, max_degree);
    std::vector<Rat> coeffs;
    coeffs.reserve(static_cast<size_t>(deg) + 1);
    for (long i = 0; i <= deg; ++i) coeffs.push_back(rat());
    return Poly(std::move(coeffs));
  }

 private:
  uint64_t state_;
};

}  // namespace genocchi::test

#endif
