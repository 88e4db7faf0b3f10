#include "sumspec/oracle.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace sumspec {

namespace {

void check_oracle_n(std::uint64_t n, const char* op) {
    if (n > kOracleMaxN) {
        throw RangeError(std::string(op) + ": n exceeds the oracle cap 10^6");
    }
}

}  // namespace

bool SpectrumPlusResult::contains(std::int64_t value) const {
    return std::binary_search(members.begin(), members.end(), value);
}

std::vector<CanonicalQuad> enumerate_reps(std::uint64_t n) {
    check_oracle_n(n, "enumerate_reps");
    std::vector<CanonicalQuad> reps;
    // a >= b >= c >= d forces a^2 >= n/4, b^2 >= rem/3, c^2 >= rem2/2.
    // Descending loops produce lexicographic descending output directly.
    for (std::uint64_t a = detail::isqrt64(n); 4 * a * a >= n; --a) {
        const std::uint64_t rem = n - a * a;
        for (std::uint64_t b = std::min(a, detail::isqrt64(rem)); 3 * b * b >= rem; --b) {
            const std::uint64_t rem2 = rem - b * b;
            for (std::uint64_t c = std::min(b, detail::isqrt64(rem2)); 2 * c * c >= rem2; --c) {
                const std::uint64_t rem3 = rem2 - c * c;
                const std::uint64_t d = detail::isqrt64(rem3);
                if (d * d == rem3 && d <= c) {
                    reps.push_back({a, b, c, d});
                }
                if (c == 0) break;
            }
            if (b == 0) break;
        }
        if (a == 0) break;
    }
    return reps;
}

SpectrumResult oracle_spectrum(std::uint64_t n) {
    check_oracle_n(n, "oracle_spectrum");
    std::set<std::int64_t> sums;
    for (const CanonicalQuad& q : enumerate_reps(n)) {
        const auto a = static_cast<std::int64_t>(q.a);
        const auto b = static_cast<std::int64_t>(q.b);
        const auto c = static_cast<std::int64_t>(q.c);
        const auto d = static_cast<std::int64_t>(q.d);
        for (unsigned mask = 0; mask < 16; ++mask) {
            const std::int64_t sum = (mask & 1 ? -a : a) + (mask & 2 ? -b : b) +
                                     (mask & 4 ? -c : c) + (mask & 8 ? -d : d);
            sums.insert(sum);
        }
    }
    return {n, std::vector<std::int64_t>(sums.begin(), sums.end())};
}

SpectrumPlusResult oracle_spectrum_plus(std::uint64_t n) {
    check_oracle_n(n, "oracle_spectrum_plus");
    std::set<std::int64_t> sums;
    for (const CanonicalQuad& q : enumerate_reps(n)) {
        sums.insert(static_cast<std::int64_t>(q.a + q.b + q.c + q.d));
    }
    return {n, std::vector<std::int64_t>(sums.begin(), sums.end())};
}

ExceptionalSet oracle_exceptional(std::uint64_t n) {
    check_oracle_n(n, "oracle_exceptional");
    const SpectrumResult attained = oracle_spectrum(n);
    const auto bound = static_cast<std::int64_t>(detail::isqrt64(4 * n));
    std::int64_t t = -bound;
    if (((t ^ static_cast<std::int64_t>(n)) & 1) != 0) ++t;
    std::vector<std::int64_t> missing;
    for (; t <= bound; t += 2) {
        if (!attained.contains(t)) {
            missing.push_back(t);
        }
    }
    return {n, std::move(missing)};
}

std::vector<std::int64_t> cauchy_window(std::uint64_t n) {
    if (n > kOracleMaxN) {
        throw RangeError("cauchy_window: n exceeds the oracle cap 10^6");
    }
    if (n == 0 || n % 4 == 0) {
        throw InvalidInput("cauchy_window: requires n >= 1 with 4 not dividing n");
    }
    const std::uint64_t hi = detail::isqrt64(4 * n);
    const std::uint64_t lower_target = 3 * n - 2;
    std::vector<std::int64_t> window;
    for (std::uint64_t t = n % 2; t <= hi; t += 2) {
        if ((t + 1) * (t + 1) >= lower_target) {
            window.push_back(static_cast<std::int64_t>(t));
        }
    }
    return window;
}

std::map<std::uint64_t, ExceptionalSet> golden_exceptional_table() {
    std::map<std::uint64_t, ExceptionalSet> table;
    for (std::uint64_t n = 1; n <= 48; ++n) {
        table.emplace(n, ExceptionalSet{n, {}});
    }
    table[8].members = {-2, 2};
    table[16].members = {-6, -2, 2, 6};
    table[24].members = {-6, -2, 2, 6};
    table[28].members = {0};
    table[32].members = {-10, -6, -4, -2, 2, 4, 6, 10};
    table[40].members = {-10, -6, -2, 2, 6, 10};
    table[44].members = {-8, 8};
    table[48].members = {-10, -6, -2, 2, 6, 10};
    return table;
}

}  // namespace sumspec
