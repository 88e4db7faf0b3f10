#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "sumspec/arith.hpp"
#include "sumspec/errors.hpp"

namespace sumspec {

// One representation n = a^2 + b^2 + c^2 + d^2 with tracked sum T = a+b+c+d.
struct FourSquareRep {
    std::int64_t a = 0;
    std::int64_t b = 0;
    std::int64_t c = 0;
    std::int64_t d = 0;
    std::uint64_t n = 0;
    std::int64_t sum = 0;

    friend bool operator==(const FourSquareRep&, const FourSquareRep&) = default;
};

// Outcome of the membership test for T in S(n). Failures identify the first
// violated necessary condition, in the order parity -> negativity ->
// three-square obstruction. For FailThreeSquare the certificate
// 4n - T^2 = 4^k (8*ell + 7) is carried in (k, ell).
struct MembershipVerdict {
    enum class Kind { Member, FailParity, FailNegative, FailThreeSquare };

    Kind kind = Kind::Member;
    unsigned k = 0;
    std::uint64_t ell = 0;

    bool ok() const { return kind == Kind::Member; }
    friend bool operator==(const MembershipVerdict&, const MembershipVerdict&) = default;
};

// T in S(n) requested for a T the verdict rejects.
class NotInSpectrum : public std::runtime_error {
public:
    NotInSpectrum(std::uint64_t n, std::int64_t T, MembershipVerdict verdict);

    std::uint64_t n() const { return n_; }
    std::int64_t sum() const { return sum_; }
    const MembershipVerdict& verdict() const { return verdict_; }

private:
    std::uint64_t n_;
    std::int64_t sum_;
    MembershipVerdict verdict_;
};

// All attainable sums of four-square representations of n, sorted ascending.
// Always symmetric under negation and never empty.
struct SpectrumResult {
    std::uint64_t n = 0;
    std::vector<std::int64_t> members;

    bool contains(std::int64_t value) const;
    friend bool operator==(const SpectrumResult&, const SpectrumResult&) = default;
};

// Sums passing the parity and T^2 <= 4n pre-filters that are nevertheless
// not attainable.
struct ExceptionalSet {
    std::uint64_t n = 0;
    std::vector<std::int64_t> members;

    friend bool operator==(const ExceptionalSet&, const ExceptionalSet&) = default;
};

// Verified square and cube members of S(n); power_triple is the
// (2^k, 2^(k+1), 2^(k+2)) chain when that route was taken.
struct SunSunMembers {
    std::int64_t square_member = 0;
    std::int64_t cube_member = 0;
    std::optional<std::array<std::int64_t, 3>> power_triple;
};

// Member iff T = n (mod 2), T^2 <= 4n and 4n - T^2 is a sum of three squares.
MembershipVerdict is_member(std::uint64_t n, std::int64_t T);

// Constructive witness for T in S(n). From (A,B,C) = three_square_rep(4n - T^2):
// if T is odd and A+B-C+T = 2 (mod 4), A is negated; then
//   a = (A+B-C+T)/4, b = (A-B+C+T)/4, c = (-A+B+C+T)/4, d = T-a-b-c,
// all divisions exact. Throws NotInSpectrum when is_member rejects.
FourSquareRep witness(std::uint64_t n, std::int64_t T);

SpectrumResult spectrum(std::uint64_t n);

ExceptionalSet exceptional_set(std::uint64_t n);

// Fast path for 4 not dividing n: every candidate passing the parity and
// bound pre-filters is a member, so no per-T decision is run.
SpectrumResult spectrum_fast_no4(std::uint64_t n);

// Computes S(n) through the dilation reduction: with k the largest integer
// such that 2^(2k+3) divides n, S(n) = 2^(k+1) * S(n / 4^(k+1)); when 8
// does not divide n this is spectrum(n) unchanged.
SpectrumResult spectrum_via_dilation(std::uint64_t n);

// witness(n, 1); valid for every odd n >= 1.
FourSquareRep euler_witness(std::uint64_t n);

// A verified perfect square and perfect cube inside S(n). Odd n routes
// through T = 1, even n through T = 0 when 4n passes the three-squares
// criterion, and otherwise through the power chain 2^k, 2^(k+1), 2^(k+2)
// extracted from 4n = 4^(k+1)(8l+7). Every reported value is re-checked
// with is_member before return.
SunSunMembers sun_sun_members(std::uint64_t n);

}  // namespace sumspec
