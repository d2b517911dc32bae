// Copyright 2026 The zxroute authors
//
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

#include "zxroute/phase.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <stdexcept>

#include "doctest.h"

using zxroute::Phase;

TEST_CASE("phases normalize into [0, 2pi) in lowest terms") {
  CHECK(Phase(1, 4).num() == 1);
  CHECK(Phase(2, 8).num() == 1);
  CHECK(Phase(2, 8).den() == 4);
  CHECK(Phase(-1, 2) == Phase(3, 2));
  CHECK(Phase(9, 4) == Phase(1, 4));
  CHECK(Phase(8, 4) == Phase());
  CHECK(Phase(0, 7) == Phase());
  CHECK_THROWS_AS(Phase(1, 0), std::invalid_argument);
}

TEST_CASE("normalization is idempotent") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> nums(-50, 50);
  std::uniform_int_distribution<std::int64_t> dens(1, 24);
  for (int i = 0; i < 500; ++i) {
    const Phase p(nums(rng), dens(rng));
    CHECK(Phase(p.num(), p.den()) == p);
    CHECK(p.num() >= 0);
    CHECK(p.num() < 2 * p.den());
    CHECK(std::gcd(p.num() == 0 ? 1 : p.num(), p.den()) == 1);
  }
}

TEST_CASE("clifford and pauli predicates follow the denominator") {
  CHECK(Phase().is_pauli());
  CHECK(Phase(1, 1).is_pauli());
  CHECK(Phase(1, 2).is_clifford());
  CHECK(Phase(3, 2).is_clifford());
  CHECK_FALSE(Phase(1, 4).is_clifford());
  CHECK_FALSE(Phase(1, 2).is_pauli());
  // Brute-force agreement: is_clifford iff the denominator divides 2.
  for (std::int64_t num = 0; num < 16; ++num) {
    for (std::int64_t den = 1; den <= 8; ++den) {
      const Phase p(num, den);
      CHECK(p.is_clifford() == (2 % p.den() == 0));
    }
  }
}

TEST_CASE("arithmetic stays exact") {
  CHECK(Phase(1, 4) + Phase(1, 4) == Phase(1, 2));
  CHECK(Phase(1, 2) + Phase(3, 2) == Phase());
  CHECK(Phase(1, 3) - Phase(1, 2) == Phase(-1, 6));
  CHECK(-Phase(1, 4) == Phase(7, 4));
}

TEST_CASE("from_radians snaps to small denominators") {
  double err = 1.0;
  const Phase quarter =
      Phase::from_radians(std::numbers::pi / 4, 1 << 20, &err);
  CHECK(quarter == Phase(1, 4));
  CHECK(err < 1e-12);

  const Phase odd = Phase::from_radians(0.1234567, 1 << 20, &err);
  CHECK(std::abs(odd.radians() - 0.1234567) < 1e-5);
  CHECK(odd.den() <= (1 << 20));
}

TEST_CASE("qasm rendering") {
  CHECK(Phase().to_qasm() == "0");
  CHECK(Phase(1, 1).to_qasm() == "pi");
  CHECK(Phase(1, 4).to_qasm() == "pi/4");
  CHECK(Phase(3, 4).to_qasm() == "3*pi/4");
  CHECK(Phase(-1, 2).to_qasm() == "3*pi/2");
}
