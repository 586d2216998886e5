#include <gtest/gtest.h>

#include <set>

#include "kmark/marked.hpp"
#include "kmark/partition.hpp"
#include "kmark/self_conjugate.hpp"
#include "kmark/unimodal.hpp"
#include "oracles.hpp"

using namespace kmark;

namespace kmark {
// readable failure messages
void PrintTo(const partition& p, std::ostream* os) { *os << to_string(p); }
void PrintTo(const durfee_symbol& s, std::ostream* os) { *os << to_string(s); }
void PrintTo(const su_symbol& s, std::ostream* os) { *os << to_string(s); }
void PrintTo(const kmarked_durfee_symbol& s, std::ostream* os) { *os << to_string(s); }
void PrintTo(const kmarked_su_symbol& s, std::ostream* os) { *os << to_string(s); }
} // namespace kmark

namespace {

partition P(std::vector<int> v) { return partition(std::move(v)); }

marked_row row(std::initializer_list<std::pair<int, int>> parts)
{
    marked_row r;
    for (auto [v, m] : parts) r.push_back({v, m});
    return r;
}

rank_census to_census(const std::map<std::vector<int>, std::uint64_t>& m) { return {m.begin(), m.end()}; }

} // namespace

// ---------------------------------------------------------------------------
// partitions, Durfee symbols, Dyson rank

TEST(Partitions, FiveOfFour)
{
    auto ps = enumerate_partitions(4);
    std::vector<partition> want{P({4}), P({3, 1}), P({2, 2}), P({2, 1, 1}), P({1, 1, 1, 1})};
    EXPECT_EQ(ps, want);
}

TEST(Partitions, Zero)
{
    auto ps = enumerate_partitions(0);
    ASSERT_EQ(ps.size(), 1u);
    EXPECT_TRUE(ps[0].empty());
    EXPECT_EQ(to_string(ps[0]), "()");
}

TEST(Partitions, CountsMatchOracle)
{
    EXPECT_EQ(enumerate_partitions(6).size(), 11u);
    for (int n = 0; n <= 20; ++n) {
        auto ps = enumerate_partitions(n);
        EXPECT_EQ(ps.size(), oracle::partition_count(n)) << n;
        EXPECT_EQ(std::set<partition>(ps.begin(), ps.end()).size(), ps.size());
        EXPECT_TRUE(std::is_sorted(ps.rbegin(), ps.rend()));
        for (const auto& p : ps) EXPECT_EQ(p.size(), n);
    }
}

TEST(Partitions, Validation)
{
    EXPECT_THROW(P({1, 2}), std::invalid_argument);
    EXPECT_THROW(P({2, 0}), std::invalid_argument);
    EXPECT_EQ(conjugate(P({3, 1})), P({2, 1, 1}));
}

TEST(Durfee, SymbolsOfFour)
{
    // the five Durfee symbols of the partitions of 4, in partition order
    const std::vector<durfee_symbol> want{
        {P({1, 1, 1}), P({}), 1}, {P({1, 1}), P({1}), 1}, {P({}), P({}), 2},
        {P({1}), P({1, 1}), 1},   {P({}), P({1, 1, 1}), 1},
    };
    auto ps = enumerate_partitions(4);
    ASSERT_EQ(ps.size(), want.size());
    for (std::size_t i = 0; i < ps.size(); ++i) EXPECT_EQ(durfee_decompose(ps[i]), want[i]) << to_string(ps[i]);
    EXPECT_EQ(to_string(durfee_decompose(P({3, 1}))), "(1 1 / 1)_1");
}

TEST(Durfee, SmallCases)
{
    EXPECT_EQ(durfee_decompose(P({1})), (durfee_symbol{P({}), P({}), 1}));
    EXPECT_THROW(durfee_decompose(P({})), std::invalid_argument);
    try {
        durfee_decompose(P({}));
    } catch (const std::invalid_argument& e) {
        EXPECT_NE(std::string(e.what()).find("no Durfee square"), std::string::npos);
    }
}

TEST(Durfee, RoundTripAndSize)
{
    for (int n = 1; n <= 20; ++n) {
        for (const auto& p : enumerate_partitions(n)) {
            auto d = durfee_decompose(p);
            EXPECT_EQ(d.size(), n);
            EXPECT_LE(d.top.largest(), d.side);
            EXPECT_LE(d.bottom.largest(), d.side);
            EXPECT_EQ(durfee_compose(d), p);
            EXPECT_EQ(d.rank(), dyson_rank(p));
        }
    }
}

TEST(DysonRank, Examples)
{
    EXPECT_EQ(dyson_rank(P({4})), 3);
    EXPECT_THROW(dyson_rank(P({})), std::invalid_argument);
    EXPECT_EQ(count_N(0, 0), 1u);
    EXPECT_EQ(count_N(1, 0), 0u);
    EXPECT_EQ(count_N(-2, 0), 0u);
    EXPECT_EQ(count_N(0, 4), 1u);
}

TEST(DysonRank, SumAndSymmetry)
{
    for (int n = 0; n <= 20; ++n) {
        std::uint64_t total = 0;
        for (int m = -n; m <= n; ++m) {
            total += count_N(m, n);
            EXPECT_EQ(count_N(m, n), count_N(-m, n)) << m << " " << n;
        }
        EXPECT_EQ(total, oracle::partition_count(n)) << n;
    }
}

// ---------------------------------------------------------------------------
// strongly unimodal sequences

TEST(Unimodal, SymbolsOfFour)
{
    std::set<std::vector<int>> got;
    for (const auto& s : enumerate_su_sequences(4)) got.insert(s.parts());
    EXPECT_EQ(got, (std::set<std::vector<int>>{{4}, {1, 3}, {3, 1}, {1, 2, 1}}));

    EXPECT_EQ(su_symbol_of(su_sequence({4})), (su_symbol{P({}), P({}), 4}));
    EXPECT_EQ(su_symbol_of(su_sequence({1, 3})), (su_symbol{P({}), P({1}), 3}));
    EXPECT_EQ(su_symbol_of(su_sequence({3, 1})), (su_symbol{P({1}), P({}), 3}));
    EXPECT_EQ(su_symbol_of(su_sequence({1, 2, 1})), (su_symbol{P({1}), P({1}), 2}));
    EXPECT_EQ(su_rank(su_sequence({1, 3})), -1);
    EXPECT_EQ(count_u_total(1), 1u);
}

TEST(Unimodal, Validation)
{
    EXPECT_THROW(su_sequence({1, 1}), std::invalid_argument);
    EXPECT_THROW(su_sequence({2, 1, 2}), std::invalid_argument);
    EXPECT_THROW(su_sequence({}), std::invalid_argument);
    EXPECT_THROW(su_unsymbol({P({3}), P({}), 3}), std::invalid_argument);
}

TEST(Unimodal, MatchesCompositionOracle)
{
    for (int n = 1; n <= 20; ++n) {
        const auto want = oracle::su_rank_counts(n);
        std::uint64_t total = 0;
        for (int m = -n; m <= n; ++m) {
            const auto it = want.find(m);
            EXPECT_EQ(count_u(m, n), it == want.end() ? 0u : it->second) << m << " " << n;
            total += count_u(m, n);
        }
        EXPECT_EQ(total, count_u_total(n));
        EXPECT_EQ(total, oracle::su_sequences(n).size());
    }
}

TEST(Unimodal, SymbolRoundTrip)
{
    for (int n = 1; n <= 20; ++n) {
        for (const auto& s : enumerate_su_sequences(n)) {
            auto sym = su_symbol_of(s);
            EXPECT_TRUE(is_valid(sym));
            EXPECT_EQ(sym.size(), n);
            EXPECT_EQ(su_unsymbol(sym), s);
            EXPECT_EQ(sym.rank(), su_rank(s));
        }
    }
}

// ---------------------------------------------------------------------------
// k-marked Durfee symbols

TEST(KMarkedDurfee, SymbolOf55)
{
    kmarked_durfee_symbol s{row({{4, 3}, {4, 3}, {3, 2}, {3, 2}, {2, 2}, {2, 1}}),
                            row({{5, 3}, {3, 2}, {2, 2}, {2, 1}}), 5, 3};
    EXPECT_FALSE(durfee_violation(s)) << *durfee_violation(s);
    EXPECT_EQ(s.size(), 55);
    EXPECT_EQ(ranks_durfee(s), (rank_vector{-1, 0, 1}));
}

TEST(KMarkedDurfee, Violations)
{
    // missing mark 1 in the top row
    EXPECT_FALSE(is_valid(kmarked_durfee_symbol{row({{2, 2}}), {}, 2, 2}));
    // bottom 1-marked part above M_1
    EXPECT_FALSE(is_valid(kmarked_durfee_symbol{row({{1, 1}}), row({{2, 1}}), 2, 2}));
    // marks increasing left to right
    EXPECT_FALSE(is_valid(kmarked_durfee_symbol{row({{2, 1}, {2, 2}}), {}, 2, 2}));
    // part larger than the side
    EXPECT_FALSE(is_valid(kmarked_durfee_symbol{row({{3, 1}}), {}, 2, 2}));
    // shared endpoint M_1 is allowed for both marks 1 and 2
    EXPECT_TRUE(is_valid(kmarked_durfee_symbol{row({{1, 1}}), row({{1, 2}, {1, 1}}), 2, 2}));
    EXPECT_THROW(ranks_durfee(kmarked_durfee_symbol{row({{2, 2}}), {}, 2, 2}), std::invalid_argument);
}

TEST(KMarkedDurfee, KOneIsDysonRank)
{
    std::uint64_t total = 0;
    for (const auto& [m, c] : durfee_rank_census(5, 1)) total += c;
    EXPECT_EQ(total, 7u);
    for (int n = 1; n <= 12; ++n)
        for (int m = -n; m <= n; ++m) EXPECT_EQ(count_Dk({m}, n, 1), count_N(m, n));
}

TEST(KMarkedDurfee, MatchesFerrersOracle)
{
    for (int k = 1; k <= 3; ++k)
        for (int n = 1; n <= 12; ++n)
            EXPECT_EQ(durfee_rank_census(n, k), to_census(oracle::kdurfee_census(n, k))) << "k=" << k << " n=" << n;
}

TEST(KMarkedDurfee, Errors)
{
    EXPECT_THROW(enumerate_kmarked_durfee(0, 2), std::invalid_argument);
    EXPECT_THROW(enumerate_kmarked_durfee(3, 0), std::invalid_argument);
    EXPECT_THROW(count_Dk({0}, 3, 2), std::invalid_argument);
}

// ---------------------------------------------------------------------------
// k-marked strongly unimodal symbols

TEST(KMarkedSU, SmallestCases)
{
    for (auto strategy : {enumeration_strategy::filter, enumeration_strategy::constructive}) {
        auto three = enumerate_kmarked_su(3, 2, strategy);
        ASSERT_EQ(three.size(), 1u);
        EXPECT_EQ(three[0], (kmarked_su_symbol{row({{1, 1}}), {}, 2, 2}));
        EXPECT_EQ(ranks_su(three[0]), (rank_vector{0, 0}));

        EXPECT_TRUE(enumerate_kmarked_su(1, 2, strategy).empty());
        EXPECT_TRUE(enumerate_kmarked_su(2, 2, strategy).empty());

        auto four = enumerate_kmarked_su(4, 2, strategy);
        std::vector<kmarked_su_symbol> want{{row({{1, 1}}), row({{1, 1}}), 2, 2}, {row({{1, 1}}), {}, 3, 2}};
        EXPECT_EQ(four, want);
    }
    EXPECT_EQ(ranks_su({row({{1, 1}}), row({{1, 1}}), 2, 2}), (rank_vector{-1, 0}));
    EXPECT_EQ(ranks_su({row({{1, 1}}), {}, 3, 2}), (rank_vector{0, 0}));
}

TEST(KMarkedSU, MinimalSize)
{
    for (int k = 1; k <= 4; ++k) {
        const int least = k * (k + 1) / 2;
        for (int n = 1; n < least; ++n) EXPECT_TRUE(enumerate_kmarked_su(n, k).empty()) << k << " " << n;
        EXPECT_EQ(enumerate_kmarked_su(least, k).size(), 1u) << k;
    }
}

TEST(KMarkedSU, KOneIsStronglyUnimodalRank)
{
    auto syms = enumerate_kmarked_su(4, 1);
    EXPECT_EQ(syms.size(), 4u);
    kmarked_su_symbol one_three{{}, row({{1, 1}}), 3, 1};
    EXPECT_EQ(ranks_su(one_three), (rank_vector{-1}));
    EXPECT_EQ(ranks_su(one_three)[0], su_rank(su_sequence({1, 3})));
    for (int n = 1; n <= 15; ++n)
        for (int m = -n; m <= n; ++m) EXPECT_EQ(count_Uk({m}, n, 1), count_u(m, n));
}

TEST(KMarkedSU, OutOfIntervalBottomPart)
{
    // Bottom part 3_3 sits outside the mark-3 interval [M_2 + 1, M_3 - 1] = [4, 4], so this
    // symbol of 21 is rejected. Moving that part to 4_3 keeps every row length and gives a valid
    // symbol with ranks (-1, 0, 0).
    kmarked_su_symbol drawn{row({{4, 3}, {3, 2}, {2, 2}, {1, 1}}), row({{3, 3}, {2, 2}, {1, 1}}), 5, 3};
    EXPECT_EQ(drawn.size(), 21);
    ASSERT_TRUE(su_violation(drawn));
    EXPECT_NE(su_violation(drawn)->find("3_3"), std::string::npos);

    kmarked_su_symbol fixed = drawn;
    fixed.bottom[0].value = 4;
    EXPECT_FALSE(su_violation(fixed)) << *su_violation(fixed);
    EXPECT_EQ(ranks_su(fixed), (rank_vector{-1, 0, 0}));
}

TEST(KMarkedSU, Violations)
{
    // parts must be strictly decreasing
    EXPECT_FALSE(is_valid(kmarked_su_symbol{row({{2, 1}, {2, 1}}), {}, 3, 2}));
    // a part equal to the peak
    EXPECT_FALSE(is_valid(kmarked_su_symbol{row({{1, 1}}), row({{2, 2}}), 2, 2}));
    // bottom 2-marked part may not sit at M_1 (the intervals are disjoint)
    EXPECT_FALSE(is_valid(kmarked_su_symbol{row({{1, 1}}), row({{1, 2}}), 3, 2}));
    EXPECT_TRUE(is_valid(kmarked_su_symbol{row({{1, 1}}), row({{2, 2}}), 3, 2}));
    // missing mark
    EXPECT_FALSE(is_valid(kmarked_su_symbol{row({{2, 2}}), {}, 3, 3}));
    EXPECT_THROW(ranks_su(kmarked_su_symbol{{}, {}, 2, 2}), std::invalid_argument);
}

TEST(KMarkedSU, MatchesLiteralOracle)
{
    for (int k = 1; k <= 3; ++k)
        for (int n = 1; n <= 12; ++n)
            EXPECT_EQ(su_rank_census(n, k), to_census(oracle::ksu_census(n, k))) << "k=" << k << " n=" << n;
}

TEST(KMarkedSU, StrategiesAgree)
{
    for (int k = 2; k <= 3; ++k) {
        for (int n = 1; n <= 18; ++n) {
            auto f = enumerate_kmarked_su(n, k, enumeration_strategy::filter);
            auto c = enumerate_kmarked_su(n, k, enumeration_strategy::constructive);
            EXPECT_EQ(f, c) << "k=" << k << " n=" << n;
            EXPECT_EQ(std::set<kmarked_su_symbol>(c.begin(), c.end()).size(), c.size());
            for (const auto& s : c) {
                EXPECT_TRUE(is_valid(s));
                EXPECT_EQ(s.size(), n);
            }
        }
    }
}

TEST(KMarkedSU, TopPartsFallInTheirIntervals)
{
    for (int k = 2; k <= 3; ++k) {
        for (int n = 1; n <= 14; ++n) {
            for (const auto& s : enumerate_kmarked_su(n, k)) {
                std::vector<int> M(static_cast<std::size_t>(k) + 1, 0);
                for (const auto& p : s.top) M[p.mark] = std::max(M[p.mark], p.value);
                M[k] = s.peak;
                for (const auto& p : s.top) {
                    EXPECT_GE(p.value, M[p.mark - 1] + 1);
                    EXPECT_LE(p.value, p.mark == k ? s.peak - 1 : M[p.mark]);
                }
            }
        }
    }
}

TEST(KMarkedSU, ToString)
{
    EXPECT_EQ(to_string(kmarked_su_symbol{row({{1, 1}}), {}, 2, 2}), "(1_1 / -)_2");
}

// ---------------------------------------------------------------------------
// self-conjugate symbols, odd partitions, omega / epsilon

TEST(SelfConjugate, Examples)
{
    EXPECT_EQ(count_SCUk(4, 1), 2u);
    EXPECT_EQ(count_SCUk(4, 2), 1u);
    for (int n = 1; n < 4; ++n) EXPECT_EQ(count_SCUk(n, 2), 0u);
    EXPECT_EQ(enumerate_self_conjugate(4, 2)[0], (kmarked_su_symbol{row({{1, 1}}), row({{1, 1}}), 2, 2}));
}

TEST(SelfConjugate, FilterOfFullEnumeration)
{
    for (int k = 1; k <= 3; ++k) {
        for (int n = 1; n <= 16; ++n) {
            std::vector<kmarked_su_symbol> want;
            for (const auto& s : enumerate_kmarked_su(n, k))
                if (s.top == s.bottom) want.push_back(s);
            EXPECT_EQ(enumerate_self_conjugate(n, k), want) << k << " " << n;
        }
    }
}

TEST(SelfConjugate, CompleteOddPartitions)
{
    for (int n = 1; n <= 30; ++n) {
        EXPECT_EQ(count_SCUk(n, 1), oracle::complete_odd_partition_count(n)) << n;
        EXPECT_EQ(enumerate_complete_odd_partitions(n).size(), oracle::complete_odd_partition_count(n)) << n;
    }
}

TEST(Bijection, Examples)
{
    EXPECT_EQ(selfconj_to_odd_partition(su_symbol{P({1}), P({1}), 2}), P({3, 1}));
    EXPECT_EQ(selfconj_to_odd_partition(su_symbol{P({}), P({}), 4}), P({1, 1, 1, 1}));
    EXPECT_EQ(odd_partition_to_selfconj(P({3, 1})), (su_symbol{P({1}), P({1}), 2}));
}

TEST(Bijection, Errors)
{
    EXPECT_THROW(selfconj_to_odd_partition(su_symbol{P({1}), P({}), 2}), std::invalid_argument);
    EXPECT_THROW(odd_partition_to_selfconj(P({2})), std::invalid_argument);
    EXPECT_THROW(odd_partition_to_selfconj(P({})), std::invalid_argument);
    try {
        odd_partition_to_selfconj(P({5, 1}));
        FAIL();
    } catch (const std::invalid_argument& e) {
        EXPECT_NE(std::string(e.what()).find("odd value 3"), std::string::npos);
    }
}

TEST(Bijection, RoundTrips)
{
    for (int n = 1; n <= 20; ++n) {
        std::set<partition> images;
        for (const auto& s : enumerate_self_conjugate(n, 1)) {
            su_symbol plain{P({}), P({}), s.peak};
            std::vector<int> values;
            for (const auto& p : s.top) values.push_back(p.value);
            plain.top = plain.bottom = P(values);
            auto p = selfconj_to_odd_partition(plain);
            EXPECT_EQ(p.size(), n);
            EXPECT_EQ(odd_partition_to_selfconj(p), plain);
            images.insert(p);
        }
        const auto odd = enumerate_complete_odd_partitions(n);
        EXPECT_EQ(images, std::set<partition>(odd.begin(), odd.end())) << n;
        for (const auto& p : odd) EXPECT_EQ(selfconj_to_odd_partition(odd_partition_to_selfconj(p)), p);
    }
}

TEST(OmegaEpsilon, Examples)
{
    auto c = count_omega_epsilon(4, 2);
    EXPECT_EQ(c.omega, 1u);
    EXPECT_EQ(c.epsilon, 0u);
    for (int n = 0; n <= 3; ++n) {
        auto z = count_omega_epsilon(n, 2);
        EXPECT_EQ(z.omega + z.epsilon, 0u) << n;
    }
    EXPECT_EQ(static_cast<long long>(c.omega) - static_cast<long long>(c.epsilon), static_cast<long long>(count_SCUk(4, 2)));
    EXPECT_THROW(count_omega_epsilon(4, 1), std::domain_error);
}

TEST(OmegaEpsilon, MatchesPartitionOracle)
{
    for (int k = 2; k <= 3; ++k) {
        for (int n = 0; n <= 22; ++n) {
            auto got = count_omega_epsilon(n, k);
            auto [omega, epsilon] = oracle::omega_epsilon(n, k);
            EXPECT_EQ(got.omega, omega) << k << " " << n;
            EXPECT_EQ(got.epsilon, epsilon) << k << " " << n;
        }
    }
}
