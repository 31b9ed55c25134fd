#include "toricode/bounds.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "toricode/errors.hpp"
#include "toricode/minkowski.hpp"

namespace toricode {

std::optional<PrimePower> prime_power(std::int64_t q) {
    if (q < 2) return std::nullopt;
    std::int64_t p = 0;
    std::int64_t n = q;
    for (std::int64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            p = d;
            break;
        }
    }
    if (p == 0) return PrimePower{q, 1};
    int k = 0;
    while (n % p == 0) {
        n /= p;
        ++k;
    }
    if (n != 1) return std::nullopt;
    return PrimePower{p, k};
}

std::int64_t isqrt64(std::int64_t n) {
    if (n < 0) throw std::invalid_argument("isqrt of negative");
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

namespace {

using Wide = __int128;

// Smallest q >= floor_q with pred(q) true; pred is monotone there.
template <class Pred>
std::int64_t least_from(std::int64_t floor_q, Wide hi_bound, Pred pred) {
    if (pred(floor_q)) return floor_q;
    if (hi_bound > std::numeric_limits<std::int64_t>::max())
        throw std::overflow_error("threshold exceeds int64 range");
    std::int64_t lo = floor_q, hi = static_cast<std::int64_t>(hi_bound);
    // invariant: pred(lo) false, pred(hi) true
    while (hi - lo > 1) {
        const std::int64_t mid = lo + (hi - lo) / 2;
        if (pred(mid)) hi = mid;
        else lo = mid;
    }
    return hi;
}

}  // namespace

std::int64_t threshold_exceptional(std::int64_t twice_area, std::int64_t L) {
    if (twice_area < 0 || L < 1) throw std::invalid_argument("need twice_area >= 0 and L >= 1");
    const std::int64_t N = twice_area - 4 * L + 9;
    if (N <= 0) return 23;
    const auto pred = [N](std::int64_t q) {
        const Wide lhs = Wide(2 * q - 5) * (2 * q - 5);
        return lhs >= Wide(N) * N * q;
    };
    const Wide hi = (Wide(N) * N + 20) / 4 + 2;  // 4q >= N^2 + 20 forces the predicate
    return least_from(23, std::max<Wide>(hi, 24), pred);
}

std::int64_t threshold_plain(std::int64_t twice_area, std::int64_t L) {
    if (twice_area < 0 || L < 1) throw std::invalid_argument("need twice_area >= 0 and L >= 1");
    const std::int64_t N = twice_area - 4 * L + 11;
    if (N <= 0) return 37;
    const auto pred = [N](std::int64_t q) {
        const Wide lhs = Wide(4) * (q - 2) * (q - 2);
        return lhs >= Wide(N) * N * q;
    };
    const Wide hi = (Wide(N) * N + 16) / 4 + 2;
    return least_from(37, std::max<Wide>(hi, 38), pred);
}

BoundReport bound_report(const LatticePolygon& p, std::int64_t q) {
    if (!prime_power(q)) throw NotPrimePowerError("q = " + std::to_string(q) + " is not a prime power");
    for (const auto& v : p.vertices()) {
        if (v.x < 0 || v.y < 0 || v.x > q - 2 || v.y > q - 2)
            throw OutsideSquareError("polygon does not fit inside [0, q-2]^2");
    }
    if (p.dimension() == 0)
        throw std::invalid_argument("bound_report needs a positive-dimensional polygon");

    BoundReport r;
    r.q = q;
    r.block_length = (q - 1) * (q - 1);
    r.twice_area = twice_area(p);
    r.dimension = lattice_point_counts(p).total;

    const FullLengthResult full = full_minkowski_length(p);
    r.L = full.length;
    r.exceptional_case = has_exceptional_maximal(p, r.L).found;

    const std::int64_t lq = r.L * (q - 1);
    if (r.exceptional_case) {
        r.threshold_q = threshold_exceptional(r.twice_area, r.L);
        r.d_lower = r.block_length - lq - isqrt64(4 * q) + 1;
    } else {
        r.threshold_q = threshold_plain(r.twice_area, r.L);
        r.d_lower = r.block_length - lq;
    }
    r.bound_valid_at_q = q >= r.threshold_q;
    return r;
}

}  // namespace toricode
