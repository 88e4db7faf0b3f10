#include "sumspec/arith.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sumspec {

namespace {

void check_n(std::uint64_t n, const char* op) {
    if (n > kMaxN) {
        throw RangeError(std::string(op) + ": n exceeds 2^40");
    }
}

}  // namespace

namespace detail {

std::uint64_t isqrt64(std::uint64_t n) noexcept {
    // double carries n < 2^53 exactly, so the estimate is off by at most 1;
    // the correction loops settle it regardless.
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) {
        --r;
    }
    while ((r + 1) * (r + 1) <= n) {
        ++r;
    }
    return r;
}

NormalForm64 strip_fours64(std::uint64_t n) noexcept {
    unsigned k = 0;
    while (n != 0 && (n & 3) == 0) {
        n >>= 2;
        ++k;
    }
    return {k, n};
}

bool is_sum_of_three_squares64(std::uint64_t n) noexcept {
    return strip_fours64(n).m % 8 != 7;
}

}  // namespace detail

std::uint64_t isqrt(std::uint64_t n) {
    check_n(n, "isqrt");
    return detail::isqrt64(n);
}

Sum3NormalForm strip_fours(std::uint64_t n) {
    check_n(n, "strip_fours");
    auto [k, m] = detail::strip_fours64(n);
    Sum3NormalForm out{k, m, std::nullopt};
    if (m % 8 == 7) {
        out.obstruction = (m - 7) / 8;
    }
    return out;
}

bool is_sum_of_three_squares(std::uint64_t n) {
    check_n(n, "is_sum_of_three_squares");
    return detail::is_sum_of_three_squares64(n);
}

std::optional<ThreeSquareTriple> three_square_rep(std::uint64_t n) {
    check_n(n, "three_square_rep");
    if (!detail::is_sum_of_three_squares64(n)) {
        return std::nullopt;
    }
    // First-hit search. The cuts 3a^2 >= n and 2b^2 >= n - a^2 only skip
    // candidates that cannot head a sorted triple; the first acceptance is
    // identical to the uncut descent and is always sorted.
    std::uint64_t a = detail::isqrt64(n);
    while (3 * a * a >= n) {
        const std::uint64_t rem_a = n - a * a;
        std::uint64_t b = std::min(a, detail::isqrt64(rem_a));
        while (2 * b * b >= rem_a) {
            const std::uint64_t rem = rem_a - b * b;
            const std::uint64_t c = detail::isqrt64(rem);
            if (c * c == rem) {
                return ThreeSquareTriple{a, b, c};
            }
            if (b == 0) {
                break;
            }
            --b;
        }
        if (a == 0) {
            break;
        }
        --a;
    }
    throw std::logic_error("three_square_rep: criterion admitted n but search found nothing");
}

bool is_perfect_square(std::uint64_t n) {
    check_n(n, "is_perfect_square");
    const std::uint64_t r = detail::isqrt64(n);
    return r * r == n;
}

bool is_perfect_cube(std::int64_t t) {
    const std::uint64_t mag = t < 0 ? static_cast<std::uint64_t>(-t) : static_cast<std::uint64_t>(t);
    check_n(mag, "is_perfect_cube");
    auto c = static_cast<std::uint64_t>(std::llround(std::cbrt(static_cast<double>(mag))));
    while (c > 0 && c * c * c > mag) {
        --c;
    }
    while ((c + 1) * (c + 1) * (c + 1) <= mag) {
        ++c;
    }
    return c * c * c == mag;
}

}  // namespace sumspec
