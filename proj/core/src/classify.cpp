#include "sumspec/classify.hpp"

#include <bit>
#include <string>

namespace sumspec {

namespace {

void check_T(std::int64_t T, const char* op) {
    if (T > kMaxT || T < -kMaxT) {
        throw RangeError(std::string(op) + ": |T| exceeds 2^21");
    }
}

void check_n(std::uint64_t n, const char* op) {
    if (n > kMaxN) {
        throw RangeError(std::string(op) + ": n exceeds 2^40");
    }
}

void check_pre(std::int64_t T, std::uint64_t n, const char* op) {
    if (T * T > 4 * static_cast<std::int64_t>(n)) {
        throw InvalidInput(std::string(op) + ": requires n >= T^2/4");
    }
    if (((T ^ static_cast<std::int64_t>(n)) & 1) != 0) {
        throw InvalidInput(std::string(op) + ": requires n = T (mod 2)");
    }
}

unsigned floor_log4(std::uint64_t n) {
    // n >= 1: floor(log2 n) / 2
    return static_cast<unsigned>(std::bit_width(n) - 1) / 2;
}

}  // namespace

TClassification classify_T(std::int64_t T) {
    check_T(T, "classify_T");
    if ((T & 1) != 0) {
        return {TClassification::Kind::OddT, 0};
    }
    const std::int64_t t = T / 2;
    if ((t & 1) != 0) {
        return {TClassification::Kind::TwiceOdd, t};
    }
    return {TClassification::Kind::DivByFour, 0};
}

unsigned exclusion_k_max(std::uint64_t n) {
    return floor_log4(n > 0 ? n : 1) + 2;
}

bool member_by_T(std::int64_t T, std::uint64_t n) {
    check_T(T, "member_by_T");
    check_n(n, "member_by_T");
    check_pre(T, n, "member_by_T");
    const TClassification cls = classify_T(T);
    switch (cls.kind) {
        case TClassification::Kind::OddT:
            return true;
        case TClassification::Kind::TwiceOdd:
            return n % 8 != 0;
        case TClassification::Kind::DivByFour:
            break;
    }
    // Excluded iff n - T^2/4 = 4^(k-1)(8l+7) for some k >= 1, i.e. n lies in
    // the class T^2/4 - 4^(k-1) (mod 2^(2k+1)). Classes beyond exclusion_k_max
    // cannot reach any n in range.
    const auto quarter = static_cast<std::uint64_t>(T * T) / 4;
    const unsigned k_max = exclusion_k_max(n);
    for (unsigned k = 1; k <= k_max; ++k) {
        const std::uint64_t modulus = std::uint64_t{1} << (2 * k + 1);
        const std::uint64_t pow4 = std::uint64_t{1} << (2 * (k - 1));
        const std::uint64_t residue = (quarter % modulus + modulus - pow4 % modulus) % modulus;
        if (n % modulus == residue) {
            return false;
        }
    }
    return true;
}

std::vector<ExclusionClass> exclusion_classes(std::int64_t T, unsigned k_max) {
    check_T(T, "exclusion_classes");
    if (T % 4 != 0) {
        throw InvalidInput("exclusion_classes: requires 4 | T");
    }
    if (k_max == 0 || k_max > 21) {
        throw InvalidInput("exclusion_classes: requires 1 <= k_max <= 21");
    }
    const auto quarter = static_cast<std::uint64_t>(T * T) / 4;
    std::vector<ExclusionClass> out;
    out.reserve(k_max);
    for (unsigned k = 1; k <= k_max; ++k) {
        const std::uint64_t modulus = std::uint64_t{1} << (2 * k + 1);
        const std::uint64_t pow4 = std::uint64_t{1} << (2 * (k - 1));
        const std::uint64_t residue = (quarter % modulus + modulus - pow4 % modulus) % modulus;
        out.push_back({k, residue, modulus});
    }
    return out;
}

std::vector<ExclusionClass> literal_exclusion_classes(std::int64_t T, unsigned k_max) {
    check_T(T, "literal_exclusion_classes");
    if (T % 4 != 0) {
        throw InvalidInput("literal_exclusion_classes: requires 4 | T");
    }
    if (k_max == 0 || k_max > 21) {
        throw InvalidInput("literal_exclusion_classes: requires 1 <= k_max <= 21");
    }
    const auto square = static_cast<std::uint64_t>(T * T);
    std::vector<ExclusionClass> out;
    out.reserve(k_max);
    for (unsigned k = 1; k <= k_max; ++k) {
        const std::uint64_t modulus = std::uint64_t{1} << (2 * k + 3);
        const std::uint64_t pow4 = std::uint64_t{1} << (2 * k);
        const std::uint64_t residue = (square % modulus + modulus - pow4 % modulus) % modulus;
        out.push_back({k, residue, modulus});
    }
    return out;
}

bool member_by_T_literal(std::int64_t T, std::uint64_t n) {
    check_T(T, "member_by_T_literal");
    check_n(n, "member_by_T_literal");
    if (T % 4 != 0) {
        throw InvalidInput("member_by_T_literal: requires 4 | T");
    }
    check_pre(T, n, "member_by_T_literal");
    const auto square = static_cast<std::uint64_t>(T * T);
    const unsigned k_max = exclusion_k_max(n);
    for (unsigned k = 1; k <= k_max; ++k) {
        const std::uint64_t modulus = std::uint64_t{1} << (2 * k + 3);
        const std::uint64_t pow4 = std::uint64_t{1} << (2 * k);
        const std::uint64_t residue = (square % modulus + modulus - pow4 % modulus) % modulus;
        if (n % modulus == residue) {
            return false;
        }
    }
    return true;
}

}  // namespace sumspec
