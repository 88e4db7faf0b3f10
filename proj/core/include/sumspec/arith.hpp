#pragma once

#include <cstdint>
#include <optional>

#include "sumspec/errors.hpp"

namespace sumspec {

// Operating ranges. With n <= 2^40 and |T| <= 2^21 every intermediate the
// library forms (4n - T^2, squared triple entries, the witness identity
// terms) fits a signed 64-bit word exactly. Out-of-range inputs throw
// RangeError instead of wrapping.
inline constexpr std::uint64_t kMaxN = std::uint64_t{1} << 40;
inline constexpr std::int64_t kMaxT = std::int64_t{1} << 21;

namespace detail {

// floor(sqrt(n)) for any n < 2^62, no range check. Internal callers feed
// values up to 4 * kMaxN = 2^42.
std::uint64_t isqrt64(std::uint64_t n) noexcept;

// strip_fours / is_sum_of_three_squares without the kMaxN check; used on
// intermediates like 4n - T^2 that legitimately exceed kMaxN.
struct NormalForm64 {
    unsigned k;
    std::uint64_t m;
};
NormalForm64 strip_fours64(std::uint64_t n) noexcept;
bool is_sum_of_three_squares64(std::uint64_t n) noexcept;

}  // namespace detail

// n = 4^k * m with 4 not dividing m; (k=0, m=0) for n = 0. When m = 8l+7
// (the three-squares obstruction) `obstruction` holds l.
struct Sum3NormalForm {
    unsigned k = 0;
    std::uint64_t m = 0;
    std::optional<std::uint64_t> obstruction;

    std::uint64_t reconstruct() const { return m << (2 * k); }
    friend bool operator==(const Sum3NormalForm&, const Sum3NormalForm&) = default;
};

// Nonnegative triple with a >= b >= c and a^2 + b^2 + c^2 equal to the
// searched target.
struct ThreeSquareTriple {
    std::uint64_t a = 0;
    std::uint64_t b = 0;
    std::uint64_t c = 0;

    friend bool operator==(const ThreeSquareTriple&, const ThreeSquareTriple&) = default;
};

// floor(sqrt(n)), exact: result r satisfies r^2 <= n < (r+1)^2.
std::uint64_t isqrt(std::uint64_t n);

Sum3NormalForm strip_fours(std::uint64_t n);

// Legendre-Gauss criterion: true iff n is not of the form 4^k(8l+7).
bool is_sum_of_three_squares(std::uint64_t n);

// First triple hit by the deterministic search: a descends from isqrt(n),
// b descends from min(a, isqrt(n - a^2)), c = isqrt(remainder) accepted iff
// exact. Returns nullopt exactly when the three-squares criterion fails.
std::optional<ThreeSquareTriple> three_square_rep(std::uint64_t n);

bool is_perfect_square(std::uint64_t n);
bool is_perfect_cube(std::int64_t t);

}  // namespace sumspec
