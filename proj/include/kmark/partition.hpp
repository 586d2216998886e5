#pragma once

// Integer partitions, Durfee symbols and Dyson's rank.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace kmark {

/// Rank statistics (m_1, ..., m_k); doubles as an exponent vector of x_1^{m_1} ... x_k^{m_k}.
using rank_vector = std::vector<int>;

/// Number of objects per rank vector.
using rank_census = std::map<rank_vector, std::uint64_t>;

/// Weakly decreasing sequence of positive parts. The empty partition is the partition of 0.
class partition {
public:
    partition() = default;
    explicit partition(std::vector<int> parts) : parts_(std::move(parts))
    {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw std::invalid_argument("partition parts must be weakly decreasing");
        }
    }

    const std::vector<int>& parts() const noexcept { return parts_; }
    std::size_t length() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }
    int size() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    int largest() const noexcept { return parts_.empty() ? 0 : parts_.front(); }
    int operator[](std::size_t i) const { return parts_[i]; }

    friend auto operator<=>(const partition&, const partition&) = default;

private:
    std::vector<int> parts_;
};

inline std::string to_string(const partition& p)
{
    if (p.empty()) return "()";
    std::string s;
    for (std::size_t i = 0; i < p.length(); ++i) {
        if (i) s += '+';
        s += std::to_string(p[i]);
    }
    return s;
}

namespace detail {

inline void partitions_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<partition>& out)
{
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(remaining - p, p, cur, out);
        cur.pop_back();
    }
}

} // namespace detail

/// All partitions of n in lexicographically descending order (4, 3+1, 2+2, 2+1+1, 1+1+1+1).
inline std::vector<partition> enumerate_partitions(int n)
{
    if (n < 0) throw std::invalid_argument("enumerate_partitions: n must be >= 0");
    std::vector<partition> out;
    std::vector<int> cur;
    detail::partitions_rec(n, n, cur, out);
    return out;
}

/// Conjugate partition (columns of the Ferrers diagram read as parts).
inline partition conjugate(const partition& p)
{
    std::vector<int> cols;
    for (int c = 1; c <= p.largest(); ++c) {
        int len = 0;
        while (static_cast<std::size_t>(len) < p.length() && p[len] >= c) ++len;
        cols.push_back(len);
    }
    return partition(std::move(cols));
}

/// (top; bottom)_side. Top lists the column lengths to the right of the Durfee square,
/// bottom the row lengths beneath it.
struct durfee_symbol {
    partition top;
    partition bottom;
    int side = 0;

    int size() const { return side * side + top.size() + bottom.size(); }
    int rank() const { return static_cast<int>(top.length()) - static_cast<int>(bottom.length()); }

    friend bool operator==(const durfee_symbol&, const durfee_symbol&) = default;
    // canonical order: side first, then top row, then bottom row
    friend auto operator<=>(const durfee_symbol& a, const durfee_symbol& b)
    {
        return std::tie(a.side, a.top, a.bottom) <=> std::tie(b.side, b.top, b.bottom);
    }
};

inline std::string to_string(const durfee_symbol& d)
{
    auto row = [](const partition& p) {
        if (p.empty()) return std::string("-");
        std::string s;
        for (std::size_t i = 0; i < p.length(); ++i) {
            if (i) s += ' ';
            s += std::to_string(p[i]);
        }
        return s;
    };
    return "(" + row(d.top) + " / " + row(d.bottom) + ")_" + std::to_string(d.side);
}

inline durfee_symbol durfee_decompose(const partition& p)
{
    if (p.empty()) throw std::invalid_argument("no Durfee square: empty partition");
    int d = 0;
    while (static_cast<std::size_t>(d) < p.length() && p[d] >= d + 1) ++d;
    std::vector<int> top;
    for (int c = d + 1; c <= p.largest(); ++c) {
        int len = 0;
        while (static_cast<std::size_t>(len) < p.length() && p[len] >= c) ++len;
        top.push_back(len);
    }
    std::vector<int> bottom(p.parts().begin() + d, p.parts().end());
    return {partition(std::move(top)), partition(std::move(bottom)), d};
}

/// Inverse of durfee_decompose.
inline partition durfee_compose(const durfee_symbol& sym)
{
    if (sym.side < 1) throw std::invalid_argument("Durfee side must be >= 1");
    if (sym.top.largest() > sym.side || sym.bottom.largest() > sym.side)
        throw std::invalid_argument("Durfee symbol parts must not exceed the side");
    std::vector<int> rows;
    for (int i = 1; i <= sym.side; ++i) {
        int extra = 0;
        for (int a : sym.top.parts())
            if (a >= i) ++extra;
        rows.push_back(sym.side + extra);
    }
    rows.insert(rows.end(), sym.bottom.parts().begin(), sym.bottom.parts().end());
    return partition(std::move(rows));
}

/// Largest part minus number of parts. Undefined for the empty partition.
inline int dyson_rank(const partition& p)
{
    if (p.empty()) throw std::invalid_argument("dyson_rank: rank of the empty partition is undefined");
    return p.largest() - static_cast<int>(p.length());
}

/// N(m, n): partitions of n with rank m, with N(m, 0) = delta_{m0}.
inline std::uint64_t count_N(int m, int n)
{
    if (n < 0) throw std::invalid_argument("count_N: n must be >= 0");
    if (n == 0) return m == 0 ? 1 : 0;
    std::uint64_t c = 0;
    for (const auto& p : enumerate_partitions(n))
        if (dyson_rank(p) == m) ++c;
    return c;
}

} // namespace kmark
