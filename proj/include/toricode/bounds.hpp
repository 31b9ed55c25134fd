#pragma once

#include <cstdint>
#include <optional>

#include "toricode/lattice.hpp"

namespace toricode {

struct PrimePower {
    std::int64_t p = 0;
    int k = 0;
};

// Factors q as p^k for prime p, or nothing. q <= 2^31 is plenty here.
std::optional<PrimePower> prime_power(std::int64_t q);

std::int64_t isqrt64(std::int64_t n);

// Least q0 >= 23 such that sqrt(q) >= c + sqrt(c^2 + 5/2) holds for all
// q >= q0, where c = twice_area/4 - L + 9/4. Decided by the cleared-
// denominator predicate (2q-5)^2 >= N^2 q with N = twice_area - 4L + 9;
// squaring is valid on q >= 5/2 and the lower parabola root stays below 23,
// so the predicate is monotone on the scanned range. No floating point.
std::int64_t threshold_exceptional(std::int64_t twice_area, std::int64_t L);

// Least q0 >= 37 for sqrt(q) >= c + sqrt(c^2 + 2), c = twice_area/4 - L +
// 11/4: predicate 4(q-2)^2 >= N^2 q with N = twice_area - 4L + 11.
std::int64_t threshold_plain(std::int64_t twice_area, std::int64_t L);

struct BoundReport {
    std::int64_t q = 0;
    std::int64_t block_length = 0;   // (q-1)^2
    std::int64_t dimension = 0;      // |P ∩ Z^2|
    std::int64_t L = 0;
    std::int64_t twice_area = 0;
    bool exceptional_case = false;   // some maximal decomposition has an exceptional triangle
    std::int64_t threshold_q = 0;    // applicable branch threshold
    bool bound_valid_at_q = false;   // q >= threshold_q
    std::int64_t d_lower = 0;
};

// Minimum-distance lower bound for the toric code of P over F_q:
//   exceptional branch: (q-1)^2 - L(q-1) - floor(2 sqrt q) + 1
//   plain branch:       (q-1)^2 - L(q-1)
// Requires q to be a prime power, P inside [0, q-2]^2, dim(P) >= 1.
BoundReport bound_report(const LatticePolygon& p, std::int64_t q);

}  // namespace toricode
