#include "sumspec/spectrum.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace sumspec {

namespace {

void check_n(std::uint64_t n, const char* op) {
    if (n > kMaxN) {
        throw RangeError(std::string(op) + ": n exceeds 2^40");
    }
}

void check_T(std::int64_t T, const char* op) {
    if (T > kMaxT || T < -kMaxT) {
        throw RangeError(std::string(op) + ": |T| exceeds 2^21");
    }
}

std::string verdict_text(std::uint64_t n, std::int64_t T, const MembershipVerdict& v) {
    switch (v.kind) {
        case MembershipVerdict::Kind::FailParity:
            return "T = " + std::to_string(T) + " and n = " + std::to_string(n) +
                   " differ in parity";
        case MembershipVerdict::Kind::FailNegative:
            return "T^2 > 4n for T = " + std::to_string(T) + ", n = " + std::to_string(n);
        case MembershipVerdict::Kind::FailThreeSquare:
            return "4n-T^2 = " +
                   std::to_string(4 * static_cast<std::int64_t>(n) - T * T) + " = 4^" +
                   std::to_string(v.k) + "(8*" + std::to_string(v.ell) + "+7)";
        case MembershipVerdict::Kind::Member:
            break;
    }
    return "member";
}

// Largest |T| of the right parity, i.e. isqrt(4n) aligned to n mod 2.
std::int64_t sum_bound(std::uint64_t n) {
    auto s = static_cast<std::int64_t>(detail::isqrt64(4 * n));
    if ((s & 1) != static_cast<std::int64_t>(n & 1)) {
        --s;
    }
    return s;
}

}  // namespace

NotInSpectrum::NotInSpectrum(std::uint64_t n, std::int64_t T, MembershipVerdict verdict)
    : std::runtime_error("not in spectrum: " + verdict_text(n, T, verdict)),
      n_(n),
      sum_(T),
      verdict_(verdict) {}

bool SpectrumResult::contains(std::int64_t value) const {
    return std::binary_search(members.begin(), members.end(), value);
}

MembershipVerdict is_member(std::uint64_t n, std::int64_t T) {
    check_n(n, "is_member");
    check_T(T, "is_member");
    if (((T ^ static_cast<std::int64_t>(n)) & 1) != 0) {
        return {MembershipVerdict::Kind::FailParity, 0, 0};
    }
    const std::int64_t deficit = 4 * static_cast<std::int64_t>(n) - T * T;
    if (deficit < 0) {
        return {MembershipVerdict::Kind::FailNegative, 0, 0};
    }
    const auto nf = detail::strip_fours64(static_cast<std::uint64_t>(deficit));
    if (nf.m % 8 == 7) {
        return {MembershipVerdict::Kind::FailThreeSquare, nf.k, (nf.m - 7) / 8};
    }
    return {MembershipVerdict::Kind::Member, 0, 0};
}

FourSquareRep witness(std::uint64_t n, std::int64_t T) {
    const MembershipVerdict verdict = is_member(n, T);
    if (!verdict.ok()) {
        throw NotInSpectrum(n, T, verdict);
    }
    const auto deficit = static_cast<std::uint64_t>(4 * static_cast<std::int64_t>(n) - T * T);
    const auto triple = three_square_rep(deficit);
    if (!triple) {
        throw std::logic_error("witness: member verdict but no three-square triple");
    }
    auto A = static_cast<std::int64_t>(triple->a);
    const auto B = static_cast<std::int64_t>(triple->b);
    const auto C = static_cast<std::int64_t>(triple->c);
    // A, B, C, T share one parity, so a, b, c below differ by integers; when
    // T is odd the sign of A is the one knob needed to make them integral.
    if ((T & 1) != 0 && (((A + B - C + T) % 4 + 4) % 4 == 2)) {
        A = -A;
    }
    if ((A + B - C + T) % 4 != 0 || (A - B + C + T) % 4 != 0 || (-A + B + C + T) % 4 != 0) {
        throw std::logic_error("witness: solved coordinates not integral");
    }
    FourSquareRep rep;
    rep.a = (A + B - C + T) / 4;
    rep.b = (A - B + C + T) / 4;
    rep.c = (-A + B + C + T) / 4;
    rep.d = T - rep.a - rep.b - rep.c;
    rep.n = n;
    rep.sum = T;
    const std::int64_t norm = rep.a * rep.a + rep.b * rep.b + rep.c * rep.c + rep.d * rep.d;
    if (norm != static_cast<std::int64_t>(n)) {
        throw std::logic_error("witness: reconstructed norm mismatch");
    }
    return rep;
}

SpectrumResult spectrum(std::uint64_t n) {
    check_n(n, "spectrum");
    const std::int64_t bound = sum_bound(n);
    SpectrumResult out{n, {}};
    out.members.reserve(static_cast<std::size_t>(bound) + 1);
    for (std::int64_t T = -bound; T <= bound; T += 2) {
        if (is_member(n, T).ok()) {
            out.members.push_back(T);
        }
    }
    return out;
}

ExceptionalSet exceptional_set(std::uint64_t n) {
    check_n(n, "exceptional_set");
    const std::int64_t bound = sum_bound(n);
    ExceptionalSet out{n, {}};
    for (std::int64_t T = -bound; T <= bound; T += 2) {
        if (!is_member(n, T).ok()) {
            out.members.push_back(T);
        }
    }
    return out;
}

SpectrumResult spectrum_fast_no4(std::uint64_t n) {
    check_n(n, "spectrum_fast_no4");
    if (n == 0 || n % 4 == 0) {
        throw InvalidInput("spectrum_fast_no4: requires n >= 1 with 4 not dividing n");
    }
    const std::int64_t bound = sum_bound(n);
    SpectrumResult out{n, {}};
    out.members.reserve(static_cast<std::size_t>(bound) + 1);
    for (std::int64_t T = -bound; T <= bound; T += 2) {
        out.members.push_back(T);
    }
    return out;
}

SpectrumResult spectrum_via_dilation(std::uint64_t n) {
    check_n(n, "spectrum_via_dilation");
    if (n == 0) {
        throw InvalidInput("spectrum_via_dilation: requires n >= 1");
    }
    unsigned v = 0;
    for (std::uint64_t m = n; (m & 1) == 0; m >>= 1) {
        ++v;
    }
    if (v < 3) {
        return spectrum(n);
    }
    const unsigned k = (v - 3) / 2;  // largest k with 2^(2k+3) | n
    SpectrumResult base = spectrum(n >> (2 * (k + 1)));
    const std::int64_t scale = std::int64_t{1} << (k + 1);
    SpectrumResult out{n, std::move(base.members)};
    for (auto& member : out.members) {
        member *= scale;
    }
    return out;
}

FourSquareRep euler_witness(std::uint64_t n) {
    check_n(n, "euler_witness");
    if (n == 0 || n % 2 == 0) {
        throw InvalidInput("euler_witness: requires odd n >= 1");
    }
    return witness(n, 1);
}

SunSunMembers sun_sun_members(std::uint64_t n) {
    check_n(n, "sun_sun_members");
    const auto verified = [n](std::int64_t T) {
        if (!is_member(n, T).ok()) {
            throw std::logic_error("sun_sun_members: selected T failed re-verification");
        }
        return T;
    };
    if (n == 0) {
        return {verified(0), verified(0), std::nullopt};
    }
    if (n % 2 == 1) {
        // 1 is both a square and a cube, and odd n always admits sum 1.
        return {verified(1), verified(1), std::nullopt};
    }
    if (detail::is_sum_of_three_squares64(4 * n)) {
        return {verified(0), verified(0), std::nullopt};
    }
    // 4n = 4^(k+1)(8l+7); evenness of n forces k >= 1, and the chain
    // 2^k, 2^(k+1), 2^(k+2) is then fully inside S(n).
    const auto nf = detail::strip_fours64(4 * n);
    if (nf.k < 2) {
        throw std::logic_error("sun_sun_members: even n with obstructed 4n must have k >= 1");
    }
    const unsigned k = nf.k - 1;
    const std::int64_t lo = std::int64_t{1} << k;
    SunSunMembers out;
    out.power_triple = {verified(lo), verified(2 * lo), verified(4 * lo)};
    out.square_member = k % 2 == 0 ? lo : 2 * lo;
    const unsigned cube_exp = k % 3 == 0 ? k : (k % 3 == 1 ? k + 2 : k + 1);
    out.cube_member = std::int64_t{1} << cube_exp;
    verified(out.square_member);
    verified(out.cube_member);
    return out;
}

}  // namespace sumspec
