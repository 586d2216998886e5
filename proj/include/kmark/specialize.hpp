#pragma once

// Evaluation of the x variables of a truncated_series at roots of unity.

#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "kmark/series.hpp"

namespace kmark {

/// e^{2 pi i num / den}, stored in lowest terms with 0 <= num < den.
class root_of_unity {
public:
    root_of_unity() = default;
    root_of_unity(long long num, long long den)
    {
        if (den < 1) throw std::invalid_argument("root of unity denominator must be positive");
        num %= den;
        if (num < 0) num += den;
        const long long g = std::gcd(num, den);
        num_ = num / g;
        den_ = den / g;
    }

    long long num() const noexcept { return num_; }
    long long den() const noexcept { return den_; }

    friend bool operator==(const root_of_unity&, const root_of_unity&) = default;

private:
    long long num_ = 0;
    long long den_ = 1;
};

using root_vector = std::vector<root_of_unity>;

/// Parses "a/b" or "a" (meaning a/1).
inline root_of_unity parse_root(const std::string& text)
{
    const auto slash = text.find('/');
    try {
        std::size_t used = 0;
        if (slash == std::string::npos) {
            long long a = std::stoll(text, &used);
            if (used != text.size()) throw std::invalid_argument(text);
            return {a, 1};
        }
        const std::string a = text.substr(0, slash), b = text.substr(slash + 1);
        long long num = std::stoll(a, &used);
        if (used != a.size()) throw std::invalid_argument(text);
        long long den = std::stoll(b, &used);
        if (used != b.size()) throw std::invalid_argument(text);
        return {num, den};
    } catch (const std::logic_error&) {
        throw std::invalid_argument("cannot parse root of unity angle '" + text + "' (expected a/b)");
    }
}

struct gaussian_integer {
    integer re = 0;
    integer im = 0;

    friend bool operator==(const gaussian_integer&, const gaussian_integer&) = default;
};

struct gaussian_series {
    std::size_t order = 0;
    std::vector<gaussian_integer> coeffs;
};

struct complex_series {
    std::size_t order = 0;
    std::vector<std::complex<double>> coeffs;
    /// Per-coefficient bound on |computed - exact|.
    std::vector<double> error_bound;
};

namespace detail {

inline void check_roots(const truncated_series& s, const root_vector& v)
{
    if (v.size() != s.var_count())
        throw std::invalid_argument("root vector length " + std::to_string(v.size()) + " does not match var_count " +
                                    std::to_string(s.var_count()));
}

// (a * e) mod b, in [0, b).
inline long long reduced_turns(const root_of_unity& w, int e)
{
    long long t = (w.num() * (e % w.den())) % w.den();
    return t < 0 ? t + w.den() : t;
}

} // namespace detail

/// Exact evaluation when every root is a 4th root of unity (values 1, i, -1, -i).
inline gaussian_series specialize_exact(const truncated_series& s, const root_vector& v)
{
    detail::check_roots(s, v);
    for (const auto& w : v)
        if (4 % w.den() != 0)
            throw std::domain_error("root of unity " + std::to_string(w.num()) + "/" + std::to_string(w.den()) +
                                    " is not a 4th root; use specialize_numeric");
    gaussian_series out{s.order(), std::vector<gaussian_integer>(s.order() + 1)};
    for (std::size_t n = 0; n <= s.order(); ++n) {
        auto& acc = out.coeffs[n];
        for (const auto& [e, c] : s[n]) {
            long long quarter_turns = 0;
            for (std::size_t i = 0; i < e.size(); ++i)
                quarter_turns += detail::reduced_turns(v[i], e[i]) * (4 / v[i].den());
            switch (quarter_turns % 4) {
            case 0: acc.re += c; break;
            case 1: acc.im += c; break;
            case 2: acc.re -= c; break;
            default: acc.im -= c; break;
            }
        }
    }
    return out;
}

/// Double-precision evaluation at arbitrary rational angles.
///
/// The bound recorded for coefficient n is 2 * (terms + 8 (k + 2)) * (sum of |c|) * epsilon. The
/// angle of each monomial is reduced to [0, 1) turns, so evaluating it costs O(k) ulps relative
/// to |c|, and the running sum adds at most one rounding of size eps * sum |c| per term.
inline complex_series specialize_numeric(const truncated_series& s, const root_vector& v)
{
    detail::check_roots(s, v);
    constexpr double eps = std::numeric_limits<double>::epsilon();
    complex_series out{s.order(), std::vector<std::complex<double>>(s.order() + 1), std::vector<double>(s.order() + 1)};
    for (std::size_t n = 0; n <= s.order(); ++n) {
        std::complex<double> acc = 0;
        double magnitude = 0;
        for (const auto& [e, c] : s[n]) {
            double turns = 0;
            for (std::size_t i = 0; i < e.size(); ++i)
                turns += static_cast<double>(detail::reduced_turns(v[i], e[i])) / static_cast<double>(v[i].den());
            turns -= std::floor(turns);
            const double value = c.convert_to<double>();
            acc += value * std::polar(1.0, 2.0 * std::numbers::pi * turns);
            magnitude += std::abs(value);
        }
        out.coeffs[n] = acc;
        const double terms = static_cast<double>(s[n].term_count());
        const double vars = static_cast<double>(s.var_count());
        out.error_bound[n] = 2.0 * (terms + 8.0 * (vars + 2.0)) * magnitude * eps;
    }
    return out;
}

} // namespace kmark
