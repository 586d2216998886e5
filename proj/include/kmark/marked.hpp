#pragma once

// k-marked Durfee symbols and k-marked strongly unimodal symbols.
//
// Rows are stored left to right as written: values and marks both nonincreasing. For
// k = 1 every mark is 1 and the objects reduce to plain Durfee / strongly unimodal symbols.

#include <algorithm>
#include <cassert>
#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "kmark/partition.hpp"
#include "kmark/unimodal.hpp"

namespace kmark {

struct marked_part {
    int value = 0;
    int mark = 1;

    friend auto operator<=>(const marked_part&, const marked_part&) = default;
};

using marked_row = std::vector<marked_part>;

struct kmarked_durfee_symbol {
    marked_row top;
    marked_row bottom;
    int side = 0;
    int k = 1;

    int size() const
    {
        int s = side * side;
        for (const auto& p : top) s += p.value;
        for (const auto& p : bottom) s += p.value;
        return s;
    }

    friend bool operator==(const kmarked_durfee_symbol&, const kmarked_durfee_symbol&) = default;
    // canonical order: side first, then top row, then bottom row
    friend auto operator<=>(const kmarked_durfee_symbol& a, const kmarked_durfee_symbol& b)
    {
        return std::tie(a.side, a.top, a.bottom, a.k) <=> std::tie(b.side, b.top, b.bottom, b.k);
    }
};

struct kmarked_su_symbol {
    marked_row top;
    marked_row bottom;
    int peak = 0;
    int k = 1;

    int size() const
    {
        int s = peak;
        for (const auto& p : top) s += p.value;
        for (const auto& p : bottom) s += p.value;
        return s;
    }

    friend bool operator==(const kmarked_su_symbol&, const kmarked_su_symbol&) = default;
    // canonical order: peak first, then top row, then bottom row
    friend auto operator<=>(const kmarked_su_symbol& a, const kmarked_su_symbol& b)
    {
        return std::tie(a.peak, a.top, a.bottom, a.k) <=> std::tie(b.peak, b.top, b.bottom, b.k);
    }
};

enum class enumeration_strategy { filter, constructive };

inline std::string to_string(const marked_row& row)
{
    if (row.empty()) return "-";
    std::string s;
    for (std::size_t i = 0; i < row.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(row[i].value) + "_" + std::to_string(row[i].mark);
    }
    return s;
}

inline std::string to_string(const kmarked_durfee_symbol& s)
{
    return "(" + to_string(s.top) + " / " + to_string(s.bottom) + ")_" + std::to_string(s.side);
}

inline std::string to_string(const kmarked_su_symbol& s)
{
    return "(" + to_string(s.top) + " / " + to_string(s.bottom) + ")_" + std::to_string(s.peak);
}

namespace detail {

inline std::optional<std::string> check_row_shape(const marked_row& row, int k, bool strict, const char* name)
{
    for (std::size_t i = 0; i < row.size(); ++i) {
        if (row[i].value < 1) return std::string(name) + " row has a nonpositive part";
        if (row[i].mark < 1 || row[i].mark > k) return std::string(name) + " row has a mark outside 1..k";
        if (i == 0) continue;
        if (strict ? row[i].value >= row[i - 1].value : row[i].value > row[i - 1].value)
            return std::string(name) + (strict ? " row parts are not strictly decreasing"
                                               : " row parts are not weakly decreasing");
        if (row[i].mark > row[i - 1].mark) return std::string(name) + " row marks are not nonincreasing";
    }
    return std::nullopt;
}

// Largest top-row part of each mark 1..k-1 (index j), nullopt if some mark is missing.
inline std::optional<std::vector<int>> top_mark_maxima(const marked_row& top, int k)
{
    std::vector<int> maxima(static_cast<std::size_t>(k) + 1, 0);
    std::vector<bool> seen(static_cast<std::size_t>(k) + 1, false);
    for (const auto& p : top) {
        maxima[p.mark] = std::max(maxima[p.mark], p.value);
        seen[p.mark] = true;
    }
    for (int j = 1; j < k; ++j)
        if (!seen[j]) return std::nullopt;
    return maxima;
}

inline rank_vector mark_ranks(const marked_row& top, const marked_row& bottom, int k)
{
    rank_vector r(static_cast<std::size_t>(k), 0);
    for (const auto& p : top) ++r[p.mark - 1];
    for (const auto& p : bottom) --r[p.mark - 1];
    for (int j = 0; j + 1 < k; ++j) --r[j];
    return r;
}

// All nonincreasing mark sequences of the given length over 1..k.
inline std::vector<std::vector<int>> mark_sequences(std::size_t length, int k)
{
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int max_mark) {
        if (cur.size() == length) {
            out.push_back(cur);
            return;
        }
        for (int m = max_mark; m >= 1; --m) {
            cur.push_back(m);
            rec(m);
            cur.pop_back();
        }
    };
    rec(k);
    return out;
}

inline marked_row apply_marks(const std::vector<int>& values, const std::vector<int>& marks)
{
    marked_row row;
    row.reserve(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) row.push_back({values[i], marks[i]});
    return row;
}

} // namespace detail

// ---------------------------------------------------------------------------
// k-marked Durfee symbols
// ---------------------------------------------------------------------------

/// Reason the symbol breaks the k-marked Durfee rules, or nullopt when it is valid.
inline std::optional<std::string> durfee_violation(const kmarked_durfee_symbol& s)
{
    if (s.k < 1) return "k must be >= 1";
    if (s.side < 1) return "side must be >= 1";
    if (auto e = detail::check_row_shape(s.top, s.k, false, "top")) return e;
    if (auto e = detail::check_row_shape(s.bottom, s.k, false, "bottom")) return e;
    for (const auto* row : {&s.top, &s.bottom})
        for (const auto& p : *row)
            if (p.value > s.side) return "part exceeds the Durfee side";
    if (s.k == 1) return std::nullopt;

    auto maxima = detail::top_mark_maxima(s.top, s.k);
    if (!maxima) return "top row is missing one of the marks 1..k-1";
    auto& M = *maxima;
    M[s.k] = s.side;
    for (const auto& p : s.bottom) {
        const int lo = p.mark == 1 ? 1 : M[p.mark - 1];
        if (p.value < lo || p.value > M[p.mark])
            return "bottom part " + std::to_string(p.value) + "_" + std::to_string(p.mark) +
                   " lies outside [" + std::to_string(lo) + ", " + std::to_string(M[p.mark]) + "]";
    }
    return std::nullopt;
}

inline bool is_valid(const kmarked_durfee_symbol& s) { return !durfee_violation(s); }

/// (rho_1, ..., rho_k): rho_j = l(alpha^j) - l(beta^j) - 1 for j < k, and without the -1 for j = k.
inline rank_vector ranks_durfee(const kmarked_durfee_symbol& s)
{
    if (auto e = durfee_violation(s)) throw std::invalid_argument("invalid k-marked Durfee symbol: " + *e);
    return detail::mark_ranks(s.top, s.bottom, s.k);
}

/// Every k-marked Durfee symbol of n, ordered by (side, top, bottom).
inline std::vector<kmarked_durfee_symbol> enumerate_kmarked_durfee(int n, int k)
{
    if (n < 1) throw std::invalid_argument("enumerate_kmarked_durfee: n must be >= 1");
    if (k < 1) throw std::invalid_argument("enumerate_kmarked_durfee: k must be >= 1");
    std::vector<kmarked_durfee_symbol> out;
    for (const auto& p : enumerate_partitions(n)) {
        const auto d = durfee_decompose(p);
        const auto top_marks = detail::mark_sequences(d.top.length(), k);
        const auto bottom_marks = detail::mark_sequences(d.bottom.length(), k);
        for (const auto& tm : top_marks) {
            for (const auto& bm : bottom_marks) {
                kmarked_durfee_symbol s{detail::apply_marks(d.top.parts(), tm),
                                        detail::apply_marks(d.bottom.parts(), bm), d.side, k};
                if (is_valid(s)) out.push_back(std::move(s));
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline rank_census durfee_rank_census(int n, int k)
{
    rank_census c;
    for (const auto& s : enumerate_kmarked_durfee(n, k)) ++c[ranks_durfee(s)];
    return c;
}

/// D_k(m_1, ..., m_k; n).
inline std::uint64_t count_Dk(const rank_vector& m, int n, int k)
{
    if (m.size() != static_cast<std::size_t>(k)) throw std::invalid_argument("rank vector length must equal k");
    const auto c = durfee_rank_census(n, k);
    auto it = c.find(m);
    return it == c.end() ? 0 : it->second;
}

// ---------------------------------------------------------------------------
// k-marked strongly unimodal symbols
// ---------------------------------------------------------------------------

/// Reason the symbol breaks the k-marked strongly unimodal rules, or nullopt when it is valid.
inline std::optional<std::string> su_violation(const kmarked_su_symbol& s)
{
    if (s.k < 1) return "k must be >= 1";
    if (s.peak < 1) return "peak must be >= 1";
    if (auto e = detail::check_row_shape(s.top, s.k, true, "top")) return e;
    if (auto e = detail::check_row_shape(s.bottom, s.k, true, "bottom")) return e;
    for (const auto* row : {&s.top, &s.bottom})
        for (const auto& p : *row)
            if (p.value >= s.peak) return "part is not below the peak";
    if (s.k == 1) return std::nullopt;

    auto maxima = detail::top_mark_maxima(s.top, s.k);
    if (!maxima) return "top row is missing one of the marks 1..k-1";
    auto& M = *maxima;
    M[0] = 0;
    M[s.k] = s.peak;
    auto interval_hi = [&](int mark) { return mark == s.k ? M[s.k] - 1 : M[mark]; };
    for (const auto& p : s.bottom) {
        const int lo = M[p.mark - 1] + 1;
        const int hi = interval_hi(p.mark);
        if (p.value < lo || p.value > hi)
            return "bottom part " + std::to_string(p.value) + "_" + std::to_string(p.mark) +
                   " lies outside [" + std::to_string(lo) + ", " + std::to_string(hi) + "]";
    }
    // Top parts land in the same intervals as a consequence of the ordering rules.
    for ([[maybe_unused]] const auto& p : s.top)
        assert(p.value >= M[p.mark - 1] + 1 && p.value <= interval_hi(p.mark));
    return std::nullopt;
}

inline bool is_valid(const kmarked_su_symbol& s) { return !su_violation(s); }

inline rank_vector ranks_su(const kmarked_su_symbol& s)
{
    if (auto e = su_violation(s)) throw std::invalid_argument("invalid k-marked strongly unimodal symbol: " + *e);
    return detail::mark_ranks(s.top, s.bottom, s.k);
}

namespace detail {

inline std::vector<kmarked_su_symbol> kmarked_su_filter(int n, int k)
{
    std::vector<kmarked_su_symbol> out;
    for (const auto& sym : enumerate_su_symbols(n)) {
        const auto top_marks = mark_sequences(sym.top.length(), k);
        const auto bottom_marks = mark_sequences(sym.bottom.length(), k);
        for (const auto& tm : top_marks) {
            for (const auto& bm : bottom_marks) {
                kmarked_su_symbol s{apply_marks(sym.top.parts(), tm), apply_marks(sym.bottom.parts(), bm), sym.peak,
                                    k};
                if (is_valid(s)) out.push_back(std::move(s));
            }
        }
    }
    return out;
}

// Subsets of [lo, hi] (as decreasing lists) with sum at most `budget`.
inline std::vector<std::vector<int>> bounded_subsets(int lo, int hi, int budget)
{
    std::vector<std::vector<int>> out;
    for (int s = 0; s <= budget; ++s) {
        auto part = distinct_parts(lo, hi, s);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

inline int row_sum(const std::vector<int>& v)
{
    int s = 0;
    for (int x : v) s += x;
    return s;
}

// Interval construction: choose M_1 < ... < M_{k-1} < M_k = peak, then for each mark j the
// top parts (containing M_j when j < k) and bottom parts inside [M_{j-1}+1, M_j] (top, j<k),
// [M_{j-1}+1, M_j] (bottom, j<k) or [M_{k-1}+1, M_k-1] (both rows, j=k).
struct su_constructor {
    int n;
    int k;
    std::vector<std::vector<int>> tops;    // per mark, decreasing values
    std::vector<std::vector<int>> bottoms; // per mark
    std::vector<kmarked_su_symbol> out;

    void emit(int peak)
    {
        kmarked_su_symbol s;
        s.peak = peak;
        s.k = k;
        for (int j = k; j >= 1; --j) {
            for (int v : tops[j]) s.top.push_back({v, j});
            for (int v : bottoms[j]) s.bottom.push_back({v, j});
        }
        out.push_back(std::move(s));
    }

    // Least total size any completion can add once marks 1..j are fixed with M_j = last.
    int min_completion(int j, int last) const
    {
        int c = 0;
        int m = last;
        for (int i = j + 1; i <= k; ++i) c += ++m;
        return c;
    }

    void run(int j, int prev, int remaining)
    {
        if (j == k) {
            for (int peak = prev + 1; peak <= remaining; ++peak) {
                const int budget = remaining - peak;
                for (const auto& top : bounded_subsets(prev + 1, peak - 1, budget)) {
                    const int rest = budget - row_sum(top);
                    for (const auto& bottom : distinct_parts(prev + 1, peak - 1, rest)) {
                        tops[k] = top;
                        bottoms[k] = bottom;
                        emit(peak);
                    }
                }
            }
            return;
        }
        for (int M = prev + 1; M + min_completion(j, M) <= remaining; ++M) {
            const int budget = remaining - M - min_completion(j, M);
            for (const auto& extra : bounded_subsets(prev + 1, M - 1, budget)) {
                const int after_top = budget - row_sum(extra);
                for (const auto& bottom : bounded_subsets(prev + 1, M, after_top)) {
                    std::vector<int> top{M};
                    top.insert(top.end(), extra.begin(), extra.end());
                    tops[j] = std::move(top);
                    bottoms[j] = bottom;
                    run(j + 1, M, remaining - M - row_sum(extra) - row_sum(bottom));
                }
            }
        }
    }
};

} // namespace detail

/// Every k-marked strongly unimodal symbol of size n, ordered by (peak, top, bottom).
///
/// filter: mark every strongly unimodal symbol of n in all admissible ways and keep the valid ones.
/// constructive: build the symbols directly from the mark intervals.
inline std::vector<kmarked_su_symbol> enumerate_kmarked_su(int n, int k,
                                                           enumeration_strategy strategy = enumeration_strategy::constructive)
{
    if (n < 1) throw std::invalid_argument("enumerate_kmarked_su: n must be >= 1");
    if (k < 1) throw std::invalid_argument("enumerate_kmarked_su: k must be >= 1");
    std::vector<kmarked_su_symbol> out;
    if (strategy == enumeration_strategy::filter) {
        out = detail::kmarked_su_filter(n, k);
    } else {
        detail::su_constructor c{n, k, std::vector<std::vector<int>>(static_cast<std::size_t>(k) + 1),
                                 std::vector<std::vector<int>>(static_cast<std::size_t>(k) + 1), {}};
        c.run(1, 0, n);
        out = std::move(c.out);
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline rank_census su_rank_census(int n, int k, enumeration_strategy strategy = enumeration_strategy::constructive)
{
    rank_census c;
    for (const auto& s : enumerate_kmarked_su(n, k, strategy)) ++c[ranks_su(s)];
    return c;
}

/// U_k(m_1, ..., m_k; n).
inline std::uint64_t count_Uk(const rank_vector& m, int n, int k)
{
    if (m.size() != static_cast<std::size_t>(k)) throw std::invalid_argument("rank vector length must equal k");
    const auto c = su_rank_census(n, k);
    auto it = c.find(m);
    return it == c.end() ? 0 : it->second;
}

} // namespace kmark
