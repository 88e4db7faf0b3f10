#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>
#include <optional>
#include <vector>

#include "sumspec/classify.hpp"
#include "sumspec/spectrum.hpp"

using namespace sumspec;

TEST_CASE("classify_T selects exactly one case") {
    CHECK(classify_T(3).kind == TClassification::Kind::OddT);
    CHECK(classify_T(-1).kind == TClassification::Kind::OddT);
    CHECK(classify_T(6) == TClassification{TClassification::Kind::TwiceOdd, 3});
    CHECK(classify_T(-6) == TClassification{TClassification::Kind::TwiceOdd, -3});
    CHECK(classify_T(2) == TClassification{TClassification::Kind::TwiceOdd, 1});
    CHECK(classify_T(8).kind == TClassification::Kind::DivByFour);
    CHECK(classify_T(0).kind == TClassification::Kind::DivByFour);
    CHECK(classify_T(-8).kind == TClassification::Kind::DivByFour);
    CHECK(classify_T(kMaxT).kind == TClassification::Kind::DivByFour);
    CHECK_THROWS_AS(classify_T(kMaxT + 1), RangeError);
    CHECK_THROWS_AS(classify_T(-kMaxT - 1), RangeError);
}

TEST_CASE("member_by_T decides hand-checked pairs") {
    CHECK(member_by_T(3, 11));
    CHECK(!member_by_T(2, 8));
    CHECK(!member_by_T(8, 44));
    CHECK(member_by_T(4, 16));
    CHECK(member_by_T(0, 2));
    CHECK(!member_by_T(0, 28));
    CHECK(member_by_T(-8, 44) == member_by_T(8, 44));
}

TEST_CASE("member_by_T enforces its preconditions") {
    CHECK_THROWS_AS(member_by_T(3, 10), InvalidInput);
    CHECK_THROWS_AS(member_by_T(8, 14), InvalidInput);
    CHECK_THROWS_AS(member_by_T(8, kMaxN + 2), RangeError);
    CHECK_THROWS_AS(member_by_T(kMaxT + 1, 1), RangeError);
}

TEST_CASE("member_by_T agrees with is_member across the sweep domain") {
    for (std::int64_t T = -64; T <= 64; ++T) {
        const auto start = static_cast<std::uint64_t>(T * T + 3) / 4;
        for (std::uint64_t n = start; n <= 4096; ++n) {
            if (((T ^ static_cast<std::int64_t>(n)) & 1) != 0) {
                continue;
            }
            if (T * T > 4 * static_cast<std::int64_t>(n)) {
                continue;
            }
            CHECK(member_by_T(T, n) == is_member(n, T).ok());
        }
    }
}

TEST_CASE("exclusion classes carry the expected residues") {
    const auto for_8 = exclusion_classes(8, 2);
    REQUIRE(for_8.size() == 2);
    CHECK(for_8[0] == ExclusionClass{1, 7, 8});
    CHECK(for_8[1] == ExclusionClass{2, 12, 32});

    const auto for_0 = exclusion_classes(0, 1);
    REQUIRE(for_0.size() == 1);
    CHECK(for_0[0] == ExclusionClass{1, 7, 8});

    CHECK_THROWS_AS(exclusion_classes(6, 2), InvalidInput);
    CHECK_THROWS_AS(exclusion_classes(8, 0), InvalidInput);
    CHECK_THROWS_AS(exclusion_classes(8, 22), InvalidInput);
}

TEST_CASE("exclusion classes are pairwise disjoint on the valid range") {
    for (std::int64_t T : {0, 4, 8, 12, 64}) {
        const auto classes = exclusion_classes(T, 6);
        const auto start = static_cast<std::uint64_t>(T * T) / 4;
        for (std::uint64_t n = start; n <= 4096; ++n) {
            int hits = 0;
            for (const ExclusionClass& c : classes) {
                if (n % c.modulus == c.residue) {
                    ++hits;
                }
            }
            CHECK(hits <= 1);
        }
    }
}

TEST_CASE("every exclusion class member is genuinely excluded") {
    for (std::int64_t T : {0, 4, 8, 12}) {
        for (const ExclusionClass& c : exclusion_classes(T, 5)) {
            const auto start = static_cast<std::uint64_t>(T * T) / 4;
            for (std::uint64_t n = start; n <= 8192; ++n) {
                if (n % c.modulus == c.residue && ((n ^ static_cast<std::uint64_t>(T)) & 1) == 0) {
                    CHECK(!is_member(n, T).ok());
                }
            }
        }
    }
}

TEST_CASE("literal classes reproduce the printed residues") {
    const auto literal = literal_exclusion_classes(8, 2);
    REQUIRE(literal.size() == 2);
    CHECK(literal[0] == ExclusionClass{1, 28, 32});
    CHECK(literal[1] == ExclusionClass{2, 48, 128});
    CHECK_THROWS_AS(literal_exclusion_classes(2, 2), InvalidInput);
}

TEST_CASE("literal form disagrees with membership first at 28 then 44 for T = 8") {
    CHECK_THROWS_AS(member_by_T_literal(2, 8), InvalidInput);
    CHECK_THROWS_AS(member_by_T_literal(8, 15), InvalidInput);

    // Literal classes wrongly exclude n = 28 (8 is a member) and wrongly
    // admit n = 44 (8 is not a member).
    CHECK(!member_by_T_literal(8, 28));
    CHECK(is_member(28, 8).ok());
    CHECK(member_by_T_literal(8, 44));
    CHECK(!is_member(44, 8).ok());

    std::optional<std::uint64_t> first_disagreement;
    std::optional<std::uint64_t> first_missed_exclusion;
    for (std::uint64_t n = 16; n <= 4096; n += 2) {
        const bool literal = member_by_T_literal(8, n);
        const bool actual = is_member(n, 8).ok();
        if (literal == actual) {
            continue;
        }
        if (!first_disagreement) {
            first_disagreement = n;
        }
        if (literal && !actual && !first_missed_exclusion) {
            first_missed_exclusion = n;
        }
    }
    CHECK(first_disagreement == 28);
    CHECK(first_missed_exclusion == 44);
}

TEST_CASE("exclusion depth covers every reachable class") {
    CHECK(exclusion_k_max(0) == 2);
    CHECK(exclusion_k_max(1) == 2);
    CHECK(exclusion_k_max(3) == 2);
    CHECK(exclusion_k_max(4) == 3);
    CHECK(exclusion_k_max(4096) == 8);
    CHECK(exclusion_k_max(1'000'000) == 11);
    CHECK(exclusion_k_max(kMaxN) == 22);
}
