#pragma once

// Self-conjugate strongly unimodal symbols (top row identical to bottom row), their bijection
// with odd partitions, and the signed even-part counts omega_k / epsilon_k.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "kmark/marked.hpp"
#include "kmark/partition.hpp"
#include "kmark/unimodal.hpp"

namespace kmark {

/// Self-conjugate k-marked strongly unimodal symbols of size n, ordered by (peak, row).
inline std::vector<kmarked_su_symbol> enumerate_self_conjugate(int n, int k)
{
    if (n < 1) throw std::invalid_argument("enumerate_self_conjugate: n must be >= 1");
    if (k < 1) throw std::invalid_argument("enumerate_self_conjugate: k must be >= 1");
    std::vector<kmarked_su_symbol> out;
    for (int peak = 1; peak <= n; ++peak) {
        if ((n - peak) % 2 != 0) continue;
        for (const auto& values : distinct_parts(1, peak - 1, (n - peak) / 2)) {
            for (const auto& marks : detail::mark_sequences(values.size(), k)) {
                auto row = detail::apply_marks(values, marks);
                kmarked_su_symbol s{row, row, peak, k};
                if (is_valid(s)) out.push_back(std::move(s));
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// SCU_k(n).
inline std::uint64_t count_SCUk(int n, int k) { return enumerate_self_conjugate(n, k).size(); }

/// Partitions of n into odd parts in which every odd value below the largest part occurs.
inline std::vector<partition> enumerate_complete_odd_partitions(int n)
{
    std::vector<partition> out;
    for (auto& p : enumerate_partitions(n)) {
        if (p.empty()) continue;
        bool ok = std::all_of(p.parts().begin(), p.parts().end(), [](int a) { return a % 2 == 1; });
        for (int v = 1; ok && v < p.largest(); v += 2)
            ok = std::find(p.parts().begin(), p.parts().end(), v) != p.parts().end();
        if (ok) out.push_back(std::move(p));
    }
    return out;
}

/// Reads the diagram of a self-conjugate strongly unimodal symbol row by row: level r above the
/// base contributes the odd part 1 + 2 * #{side parts >= r}.
inline partition selfconj_to_odd_partition(const su_symbol& s)
{
    if (!is_valid(s)) throw std::invalid_argument("selfconj_to_odd_partition: invalid symbol " + to_string(s));
    if (s.top != s.bottom) throw std::invalid_argument("selfconj_to_odd_partition: top row differs from bottom row");
    std::vector<int> rows;
    for (int r = 1; r <= s.peak; ++r) {
        int width = 1;
        for (int a : s.top.parts())
            if (a >= r) width += 2;
        rows.push_back(width);
    }
    return partition(std::move(rows));
}

inline su_symbol odd_partition_to_selfconj(const partition& p)
{
    if (p.empty()) throw std::invalid_argument("odd_partition_to_selfconj: partition is empty");
    for (int a : p.parts())
        if (a % 2 == 0) throw std::invalid_argument("odd_partition_to_selfconj: part " + std::to_string(a) + " is even");
    for (int v = 1; v < p.largest(); v += 2)
        if (std::find(p.parts().begin(), p.parts().end(), v) == p.parts().end())
            throw std::invalid_argument("odd_partition_to_selfconj: odd value " + std::to_string(v) +
                                        " below the largest part is missing");
    // side part i = number of rows wider than 2i - 1
    std::vector<int> side;
    for (int i = 1; 2 * i + 1 <= p.largest(); ++i) {
        int h = 0;
        for (int a : p.parts())
            if (a >= 2 * i + 1) ++h;
        side.push_back(h);
    }
    partition row(side);
    return {row, row, static_cast<int>(p.length())};
}

struct omega_epsilon {
    std::uint64_t omega = 0;   // odd number of even parts
    std::uint64_t epsilon = 0; // even number of even parts
};

namespace detail {

// Distinct even values 2v_1 < ... < 2v_{slots} (v < bound), each used r_j >= 1 times, summing to
// `remaining`; tallies by parity of the total number of even parts.
inline void even_configurations(int slots, int min_value, int bound, int remaining, int parts, omega_epsilon& acc)
{
    if (slots == 0) {
        if (remaining == 0) ++(parts % 2 == 1 ? acc.omega : acc.epsilon);
        return;
    }
    for (int v = min_value; v < bound && 2 * v <= remaining; ++v)
        for (int r = 1; 2 * v * r <= remaining; ++r)
            even_configurations(slots - 1, v + 1, bound, remaining - 2 * v * r, parts + r, acc);
}

} // namespace detail

/// (omega_k(n), epsilon_k(n)): an odd partition with at least k parts and every smaller odd value
/// present, together with k-1 distinctly valued marked even parts (mark j on the j-th smallest
/// value), each value repeatable and below twice the number of odd parts.
inline omega_epsilon count_omega_epsilon(int n, int k)
{
    if (k < 2) throw std::domain_error("omega/epsilon counts are defined for k >= 2 only");
    if (n < 0) throw std::invalid_argument("count_omega_epsilon: n must be >= 0");
    omega_epsilon acc;
    for (int odd_total = 1; odd_total <= n; ++odd_total) {
        for (const auto& p : enumerate_complete_odd_partitions(odd_total)) {
            const int odd_parts = static_cast<int>(p.length());
            if (odd_parts < k) continue;
            detail::even_configurations(k - 1, 1, odd_parts, n - odd_total, 0, acc);
        }
    }
    return acc;
}

} // namespace kmark
