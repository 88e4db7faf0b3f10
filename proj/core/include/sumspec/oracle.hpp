#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "sumspec/errors.hpp"
#include "sumspec/spectrum.hpp"

namespace sumspec {

// Exhaustive ground truth, independent of the membership-decision path:
// nothing here consults is_member / spectrum. Enumeration cost grows like
// n^(3/2), hence the tighter range cap.
inline constexpr std::uint64_t kOracleMaxN = 1'000'000;

// Representation with a >= b >= c >= d >= 0.
struct CanonicalQuad {
    std::uint64_t a = 0;
    std::uint64_t b = 0;
    std::uint64_t c = 0;
    std::uint64_t d = 0;

    friend bool operator==(const CanonicalQuad&, const CanonicalQuad&) = default;
};

// Sums a+b+c+d over nonnegative representations only (no sign expansion).
struct SpectrumPlusResult {
    std::uint64_t n = 0;
    std::vector<std::int64_t> members;

    bool contains(std::int64_t value) const;
    friend bool operator==(const SpectrumPlusResult&, const SpectrumPlusResult&) = default;
};

// Every canonical quadruple with squares summing to n, in lexicographic
// descending order. Nonempty for every n.
std::vector<CanonicalQuad> enumerate_reps(std::uint64_t n);

// S(n) by exhaustion: all sign patterns over all canonical quadruples.
SpectrumResult oracle_spectrum(std::uint64_t n);

// S+(n): sums over canonical quadruples, deduplicated, sorted.
SpectrumPlusResult oracle_spectrum_plus(std::uint64_t n);

// Candidates passing parity and T^2 <= 4n minus oracle_spectrum(n).
ExceptionalSet oracle_exceptional(std::uint64_t n);

// For 4 not dividing n: the sums T = n (mod 2) with
// sqrt(3n-2) - 1 <= T <= 2*sqrt(n), bounds evaluated in exact integer
// arithmetic (lower: (T+1)^2 >= 3n-2, upper: T^2 <= 4n). Guaranteed
// subset of S+(n).
std::vector<std::int64_t> cauchy_window(std::uint64_t n);

// Hand-checked reference table of exceptional sums for n = 1..48, embedded
// verbatim; regression anchor for exceptional_set / oracle_exceptional.
std::map<std::uint64_t, ExceptionalSet> golden_exceptional_table();

}  // namespace sumspec
