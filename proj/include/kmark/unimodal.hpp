#pragma once

// Strongly unimodal sequences a_1 < ... < a_p > ... > a_s and their symbols.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "kmark/partition.hpp"

namespace kmark {

class su_sequence {
public:
    explicit su_sequence(std::vector<int> parts) : parts_(std::move(parts))
    {
        if (parts_.empty()) throw std::invalid_argument("strongly unimodal sequence must be nonempty");
        if (std::any_of(parts_.begin(), parts_.end(), [](int a) { return a < 1; }))
            throw std::invalid_argument("strongly unimodal sequence parts must be positive");
        peak_ = static_cast<std::size_t>(std::max_element(parts_.begin(), parts_.end()) - parts_.begin());
        for (std::size_t i = 0; i + 1 < parts_.size(); ++i) {
            bool ok = i < peak_ ? parts_[i] < parts_[i + 1] : parts_[i] > parts_[i + 1];
            if (!ok) throw std::invalid_argument("sequence is not strongly unimodal");
        }
    }

    const std::vector<int>& parts() const noexcept { return parts_; }
    std::size_t peak_index() const noexcept { return peak_; }
    int peak() const noexcept { return parts_[peak_]; }
    int size() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

    friend bool operator==(const su_sequence& a, const su_sequence& b) { return a.parts_ == b.parts_; }

private:
    std::vector<int> parts_;
    std::size_t peak_ = 0;
};

inline std::string to_string(const su_sequence& s)
{
    std::string r;
    for (std::size_t i = 0; i < s.parts().size(); ++i) {
        if (i) r += ',';
        r += std::to_string(s.parts()[i]);
    }
    return r;
}

/// (top; bottom)_peak. Top holds the parts after the peak, bottom the parts before it,
/// both listed in decreasing order.
struct su_symbol {
    partition top;
    partition bottom;
    int peak = 0;

    int size() const { return peak + top.size() + bottom.size(); }
    int rank() const { return static_cast<int>(top.length()) - static_cast<int>(bottom.length()); }

    friend bool operator==(const su_symbol&, const su_symbol&) = default;
    // canonical order: peak first, then top row, then bottom row
    friend auto operator<=>(const su_symbol& a, const su_symbol& b)
    {
        return std::tie(a.peak, a.top, a.bottom) <=> std::tie(b.peak, b.top, b.bottom);
    }
};

namespace detail {

inline bool strictly_decreasing_below(const partition& p, int bound)
{
    for (std::size_t i = 0; i < p.length(); ++i) {
        if (p[i] >= bound) return false;
        if (i > 0 && p[i] >= p[i - 1]) return false;
    }
    return true;
}

} // namespace detail

inline bool is_valid(const su_symbol& s)
{
    return s.peak >= 1 && detail::strictly_decreasing_below(s.top, s.peak) &&
           detail::strictly_decreasing_below(s.bottom, s.peak);
}

inline std::string to_string(const su_symbol& s)
{
    auto row = [](const partition& p) {
        if (p.empty()) return std::string("-");
        std::string r;
        for (std::size_t i = 0; i < p.length(); ++i) {
            if (i) r += ' ';
            r += std::to_string(p[i]);
        }
        return r;
    };
    return "(" + row(s.top) + " / " + row(s.bottom) + ")_" + std::to_string(s.peak);
}

inline su_symbol su_symbol_of(const su_sequence& s)
{
    const auto& a = s.parts();
    std::vector<int> before(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(s.peak_index()));
    std::reverse(before.begin(), before.end());
    std::vector<int> after(a.begin() + static_cast<std::ptrdiff_t>(s.peak_index()) + 1, a.end());
    return {partition(std::move(after)), partition(std::move(before)), s.peak()};
}

inline su_sequence su_unsymbol(const su_symbol& sym)
{
    if (!is_valid(sym)) throw std::invalid_argument("invalid strongly unimodal symbol " + to_string(sym));
    std::vector<int> seq(sym.bottom.parts().rbegin(), sym.bottom.parts().rend());
    seq.push_back(sym.peak);
    seq.insert(seq.end(), sym.top.parts().begin(), sym.top.parts().end());
    return su_sequence(std::move(seq));
}

/// Parts after the peak minus parts before it.
inline int su_rank(const su_sequence& s)
{
    return static_cast<int>(s.parts().size() - s.peak_index() - 1) - static_cast<int>(s.peak_index());
}

namespace detail {

// Strictly decreasing lists of values in [lo, hi] summing to exactly `sum`.
inline void distinct_parts_rec(int lo, int hi, int sum, std::vector<int>& cur, std::vector<std::vector<int>>& out)
{
    if (sum == 0) {
        out.push_back(cur);
        return;
    }
    for (int v = std::min(hi, sum); v >= lo; --v) {
        // remaining values are all < v; prune when even the largest choices cannot reach sum
        const long long best = static_cast<long long>(v) * (v + 1) / 2 - static_cast<long long>(lo - 1) * lo / 2;
        if (best < sum) break;
        cur.push_back(v);
        distinct_parts_rec(lo, v - 1, sum - v, cur, out);
        cur.pop_back();
    }
}

} // namespace detail

/// Strictly decreasing lists of values in [lo, hi] with the given sum.
inline std::vector<std::vector<int>> distinct_parts(int lo, int hi, int sum)
{
    std::vector<std::vector<int>> out;
    if (sum < 0) return out;
    std::vector<int> cur;
    detail::distinct_parts_rec(std::max(lo, 1), hi, sum, cur, out);
    return out;
}

/// All strongly unimodal symbols of size n, ordered by (peak, top, bottom).
inline std::vector<su_symbol> enumerate_su_symbols(int n)
{
    if (n < 1) throw std::invalid_argument("enumerate_su_symbols: n must be >= 1");
    std::vector<su_symbol> out;
    for (int peak = 1; peak <= n; ++peak) {
        for (int t = 0; t <= n - peak; ++t) {
            auto tops = distinct_parts(1, peak - 1, t);
            auto bottoms = distinct_parts(1, peak - 1, n - peak - t);
            for (const auto& top : tops)
                for (const auto& bottom : bottoms) out.push_back({partition(top), partition(bottom), peak});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<su_sequence> enumerate_su_sequences(int n)
{
    std::vector<su_sequence> out;
    for (const auto& sym : enumerate_su_symbols(n)) out.push_back(su_unsymbol(sym));
    return out;
}

/// u(m, n).
inline std::uint64_t count_u(int m, int n)
{
    std::uint64_t c = 0;
    for (const auto& sym : enumerate_su_symbols(n))
        if (sym.rank() == m) ++c;
    return c;
}

/// u(n).
inline std::uint64_t count_u_total(int n) { return enumerate_su_symbols(n).size(); }

} // namespace kmark
