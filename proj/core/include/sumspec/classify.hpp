#pragma once

#include <cstdint>
#include <vector>

#include "sumspec/arith.hpp"
#include "sumspec/errors.hpp"

namespace sumspec {

// The three residue cases a fixed sum T falls into.
struct TClassification {
    enum class Kind { OddT, TwiceOdd, DivByFour };

    Kind kind = Kind::OddT;
    std::int64_t half = 0;  // t with T = 2t, set for TwiceOdd

    friend bool operator==(const TClassification&, const TClassification&) = default;
};

// For 4 | T, one residue class of n excluded from membership:
// n = residue (mod modulus) with modulus = 2^(2k+1) and
// residue = T^2/4 - 4^(k-1) reduced into [0, modulus).
struct ExclusionClass {
    unsigned k = 0;
    std::uint64_t residue = 0;
    std::uint64_t modulus = 0;

    friend bool operator==(const ExclusionClass&, const ExclusionClass&) = default;
};

TClassification classify_T(std::int64_t T);

// Fixed-T membership decision for n >= T^2/4 with n = T (mod 2):
//   T odd            -> always a member
//   T twice an odd t -> member iff n != 0 (mod 8)
//   4 | T            -> member iff n avoids every exclusion class
// Agrees with is_member(n, T) on the whole precondition domain.
bool member_by_T(std::int64_t T, std::uint64_t n);

// The first k_max exclusion classes for 4 | T (k = 1..k_max, k_max <= 21).
std::vector<ExclusionClass> exclusion_classes(std::int64_t T, unsigned k_max);

// Diagnostics-only variant that tests n directly against the residues
// T^2 - 4^k (mod 2^(2k+3)) instead of the classes member_by_T uses. Known
// to disagree with the four-square criterion (first at n = 28 and n = 44
// for T = 8); retained so the CLI --diagnose-literal sweep can document
// the discrepancy. Requires 4 | T.
bool member_by_T_literal(std::int64_t T, std::uint64_t n);

// The residue classes member_by_T_literal tests: modulus 2^(2k+3),
// residue T^2 - 4^k reduced. Same preconditions as exclusion_classes.
std::vector<ExclusionClass> literal_exclusion_classes(std::int64_t T, unsigned k_max);

// k large enough that no exclusion class beyond it can contain any
// valid n <= the given bound.
unsigned exclusion_k_max(std::uint64_t n);

}  // namespace sumspec
