#pragma once

// Truncated formal power series in q whose coefficients are Laurent
// polynomials in x_1, ..., x_k with arbitrary-precision integer values.
//
// A truncated_series of order N is exact modulo q^{N+1}. Binary operations on
// series of different orders truncate to the smaller order.

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace kmark {

using integer = boost::multiprecision::cpp_int;

/// Powers (e_1, ..., e_k) of the monomial x_1^{e_1} ... x_k^{e_k}.
using exponent_vector = std::vector<int>;

class laurent_coefficient {
public:
    using term_map = std::map<exponent_vector, integer>;

    laurent_coefficient() = default;
    explicit laurent_coefficient(std::size_t var_count) : var_count_(var_count) {}

    static laurent_coefficient constant(std::size_t var_count, const integer& value)
    {
        laurent_coefficient c(var_count);
        c.add_term(exponent_vector(var_count, 0), value);
        return c;
    }

    std::size_t var_count() const noexcept { return var_count_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t term_count() const noexcept { return terms_.size(); }
    const term_map& terms() const noexcept { return terms_; }
    term_map::const_iterator begin() const noexcept { return terms_.begin(); }
    term_map::const_iterator end() const noexcept { return terms_.end(); }

    /// Integer attached to x^v, zero when absent.
    integer at(const exponent_vector& v) const
    {
        check_exponent(v);
        auto it = terms_.find(v);
        return it == terms_.end() ? integer(0) : it->second;
    }

    /// True when the only monomial present is x^0 with value one.
    bool is_one() const
    {
        return terms_.size() == 1 && terms_.begin()->second == 1 &&
               std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(),
                           [](int e) { return e == 0; });
    }

    /// Sum of all values, i.e. the coefficient evaluated at x_1 = ... = x_k = 1.
    integer value_sum() const
    {
        integer s = 0;
        for (const auto& [e, c] : terms_) s += c;
        return s;
    }

    int max_abs_exponent() const noexcept
    {
        int m = 0;
        for (const auto& [e, c] : terms_)
            for (int x : e) m = std::max(m, std::abs(x));
        return m;
    }

    void add_term(const exponent_vector& v, const integer& value)
    {
        check_exponent(v);
        if (value == 0) return;
        accumulate(exponent_vector(v), value);
    }

    /// this += scale * x^shift * other. An empty shift means x^0.
    void add_scaled(const laurent_coefficient& other, const integer& scale,
                    const exponent_vector& shift = {})
    {
        check_same_vars(other);
        if (scale == 0) return;
        if (!shift.empty()) check_exponent(shift);
        for (const auto& [e, c] : other.terms_) {
            exponent_vector key = e;
            if (!shift.empty())
                for (std::size_t i = 0; i < key.size(); ++i) key[i] += shift[i];
            accumulate(std::move(key), c * scale);
        }
    }

    laurent_coefficient& operator+=(const laurent_coefficient& other)
    {
        add_scaled(other, 1);
        return *this;
    }

    laurent_coefficient& operator-=(const laurent_coefficient& other)
    {
        add_scaled(other, -1);
        return *this;
    }

    laurent_coefficient operator-() const
    {
        laurent_coefficient r(var_count_);
        r.add_scaled(*this, -1);
        return r;
    }

    friend laurent_coefficient operator+(laurent_coefficient a, const laurent_coefficient& b)
    {
        a += b;
        return a;
    }

    friend laurent_coefficient operator-(laurent_coefficient a, const laurent_coefficient& b)
    {
        a -= b;
        return a;
    }

    friend laurent_coefficient operator*(const laurent_coefficient& a, const laurent_coefficient& b)
    {
        a.check_same_vars(b);
        laurent_coefficient r(a.var_count_);
        for (const auto& [e, c] : b.terms_) r.add_scaled(a, c, e);
        return r;
    }

    friend bool operator==(const laurent_coefficient&, const laurent_coefficient&) = default;

private:
    void accumulate(exponent_vector&& key, const integer& value)
    {
        auto [it, inserted] = terms_.try_emplace(std::move(key), value);
        if (!inserted) {
            it->second += value;
            if (it->second == 0) terms_.erase(it);
        }
    }

    void check_exponent(const exponent_vector& v) const
    {
        if (v.size() != var_count_)
            throw std::invalid_argument("exponent vector length " + std::to_string(v.size()) +
                                        " does not match var_count " + std::to_string(var_count_));
    }

    void check_same_vars(const laurent_coefficient& other) const
    {
        if (other.var_count_ != var_count_) throw std::invalid_argument("mismatched var_count");
    }

    std::size_t var_count_ = 0;
    term_map terms_;
};

class truncated_series {
public:
    truncated_series() : truncated_series(0, 0) {}
    truncated_series(std::size_t order, std::size_t var_count)
        : order_(order), var_count_(var_count), coeffs_(order + 1, laurent_coefficient(var_count))
    {
    }

    /// Truncation order N; the series is exact modulo q^{N+1}.
    std::size_t order() const noexcept { return order_; }
    std::size_t var_count() const noexcept { return var_count_; }
    const std::vector<laurent_coefficient>& coefficients() const noexcept { return coeffs_; }

    const laurent_coefficient& operator[](std::size_t n) const { return coeffs_[n]; }

    /// Mutable access for builders; the caller keeps var_count fixed.
    laurent_coefficient& operator[](std::size_t n) { return coeffs_[n]; }

    void add_term(std::size_t n, const exponent_vector& v, const integer& value)
    {
        if (n > order_) return;
        coeffs_[n].add_term(v, value);
    }

    bool is_zero() const
    {
        return std::all_of(coeffs_.begin(), coeffs_.end(), [](const auto& c) { return c.is_zero(); });
    }

    friend bool operator==(const truncated_series&, const truncated_series&) = default;

private:
    std::size_t order_;
    std::size_t var_count_;
    std::vector<laurent_coefficient> coeffs_;
};

inline truncated_series zero_series(std::size_t order, std::size_t var_count)
{
    return truncated_series(order, var_count);
}

inline truncated_series one_series(std::size_t order, std::size_t var_count)
{
    truncated_series s(order, var_count);
    s[0] = laurent_coefficient::constant(var_count, 1);
    return s;
}

/// value * x^v * q^{q_power}.
inline truncated_series monomial_series(const integer& value, const exponent_vector& v, std::size_t q_power,
                                        std::size_t order, std::size_t var_count)
{
    if (q_power > order)
        throw std::invalid_argument("exponent beyond truncation: q^" + std::to_string(q_power) +
                                    " with N = " + std::to_string(order));
    truncated_series s(order, var_count);
    s[q_power].add_term(v, value);
    return s;
}

/// Copy of s reduced to order `order` (which must not exceed s.order()).
inline truncated_series truncate(const truncated_series& s, std::size_t order)
{
    if (order > s.order()) throw std::invalid_argument("cannot raise truncation order");
    truncated_series r(order, s.var_count());
    for (std::size_t n = 0; n <= order; ++n) r[n] = s[n];
    return r;
}

namespace detail {

inline void check_compatible(const truncated_series& a, const truncated_series& b)
{
    if (a.var_count() != b.var_count())
        throw std::invalid_argument("mismatched var_count: " + std::to_string(a.var_count()) + " vs " +
                                    std::to_string(b.var_count()));
}

} // namespace detail

inline truncated_series add(const truncated_series& a, const truncated_series& b)
{
    detail::check_compatible(a, b);
    truncated_series r(std::min(a.order(), b.order()), a.var_count());
    for (std::size_t n = 0; n <= r.order(); ++n) r[n] = a[n] + b[n];
    return r;
}

inline truncated_series negate(const truncated_series& a)
{
    truncated_series r(a.order(), a.var_count());
    for (std::size_t n = 0; n <= a.order(); ++n) r[n] = -a[n];
    return r;
}

inline truncated_series subtract(const truncated_series& a, const truncated_series& b)
{
    detail::check_compatible(a, b);
    truncated_series r(std::min(a.order(), b.order()), a.var_count());
    for (std::size_t n = 0; n <= r.order(); ++n) r[n] = a[n] - b[n];
    return r;
}

/// Cauchy product truncated at min(N_a, N_b).
inline truncated_series multiply(const truncated_series& a, const truncated_series& b)
{
    detail::check_compatible(a, b);
    truncated_series r(std::min(a.order(), b.order()), a.var_count());
    for (std::size_t i = 0; i <= r.order(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; i + j <= r.order(); ++j) {
            if (b[j].is_zero()) continue;
            r[i + j] += a[i] * b[j];
        }
    }
    return r;
}

inline truncated_series operator+(const truncated_series& a, const truncated_series& b) { return add(a, b); }
inline truncated_series operator-(const truncated_series& a, const truncated_series& b) { return subtract(a, b); }
inline truncated_series operator-(const truncated_series& a) { return negate(a); }
inline truncated_series operator*(const truncated_series& a, const truncated_series& b) { return multiply(a, b); }

/// Multiplicative inverse; the constant coefficient must be exactly the integer 1.
inline truncated_series inverse(const truncated_series& a)
{
    if (!a[0].is_one()) throw std::domain_error("non-unit constant term");
    truncated_series b(a.order(), a.var_count());
    b[0] = a[0];
    for (std::size_t n = 1; n <= a.order(); ++n) {
        laurent_coefficient acc(a.var_count());
        for (std::size_t j = 1; j <= n; ++j) {
            if (a[j].is_zero() || b[n - j].is_zero()) continue;
            acc -= a[j] * b[n - j];
        }
        b[n] = std::move(acc);
    }
    return b;
}

/// s * x^v * q^{q_power}; terms pushed past the truncation order are dropped.
inline truncated_series shift(const truncated_series& s, const exponent_vector& v, std::size_t q_power)
{
    truncated_series r(s.order(), s.var_count());
    for (std::size_t n = 0; n + q_power <= s.order(); ++n) r[n + q_power].add_scaled(s[n], 1, v);
    return r;
}

/// In place: s *= (1 + c * x^v * q^{q_power}).
inline void multiply_binomial(truncated_series& s, const integer& c, const exponent_vector& v,
                              std::size_t q_power)
{
    if (c == 0) return;
    if (q_power == 0) {
        for (std::size_t n = 0; n <= s.order(); ++n) {
            laurent_coefficient extra(s.var_count());
            extra.add_scaled(s[n], c, v);
            s[n] += extra;
        }
        return;
    }
    for (std::size_t n = s.order() + 1; n-- > q_power;) {
        if (s[n - q_power].is_zero()) continue;
        s[n].add_scaled(s[n - q_power], c, v);
    }
}

/// In place: s /= (1 + c * x^v * q^{q_power}) with q_power >= 1.
inline void divide_binomial(truncated_series& s, const integer& c, const exponent_vector& v,
                            std::size_t q_power)
{
    if (q_power == 0) throw std::domain_error("non-unit constant term");
    if (c == 0) return;
    for (std::size_t n = q_power; n <= s.order(); ++n) {
        if (s[n - q_power].is_zero()) continue;
        s[n].add_scaled(s[n - q_power], -c, v);
    }
}

/// Argument of a q-Pochhammer symbol: the product is prod_{j=1}^{n} (1 - a q^{step (j-1)})
/// with a = sign * x_{var_index}^{var_exponent} * q^{q_offset}. var_index is 1-based; 0 means
/// the factor carries no x variable.
struct factor_spec {
    int sign = 1;
    std::size_t var_index = 0;
    int var_exponent = 1;
    std::size_t q_offset = 0;
    std::size_t q_step = 1;
};

struct infinite_t {
    explicit constexpr infinite_t() = default;
};
inline constexpr infinite_t infinite{};

namespace detail {

inline exponent_vector factor_exponent(const factor_spec& spec, std::size_t var_count)
{
    if (spec.sign != 1 && spec.sign != -1) throw std::invalid_argument("factor sign must be +1 or -1");
    exponent_vector v(var_count, 0);
    if (spec.var_index != 0) {
        if (spec.var_index > var_count)
            throw std::invalid_argument("factor var_index " + std::to_string(spec.var_index) +
                                        " exceeds var_count " + std::to_string(var_count));
        if (spec.var_exponent != 1 && spec.var_exponent != -1)
            throw std::invalid_argument("factor var_exponent must be +1 or -1");
        v[spec.var_index - 1] = spec.var_exponent;
    }
    return v;
}

inline void pochhammer_into(truncated_series& s, const factor_spec& spec, std::size_t length)
{
    const auto v = factor_exponent(spec, s.var_count());
    const integer c = -spec.sign;
    for (std::size_t j = 0; j < length; ++j) {
        const std::size_t p = spec.q_offset + spec.q_step * j;
        // factors at or beyond q^{N+1} are 1 mod q^{N+1}, and p only grows with j
        if (p > s.order()) break;
        multiply_binomial(s, c, v, p);
    }
}

} // namespace detail

/// (a; q^step)_n truncated at order N.
inline truncated_series pochhammer(const factor_spec& spec, std::size_t length, std::size_t order,
                                   std::size_t var_count)
{
    auto s = one_series(order, var_count);
    detail::pochhammer_into(s, spec, length);
    return s;
}

/// (a; q^step)_infinity truncated at order N. Requires a positive step.
inline truncated_series pochhammer(const factor_spec& spec, infinite_t, std::size_t order,
                                   std::size_t var_count)
{
    if (spec.q_offset + spec.q_step == 0 || spec.q_step == 0) throw std::domain_error("divergent product");
    auto s = one_series(order, var_count);
    const std::size_t factors = spec.q_offset > order ? 0 : (order - spec.q_offset) / spec.q_step + 1;
    detail::pochhammer_into(s, spec, factors);
    return s;
}

inline const laurent_coefficient& coefficient(const truncated_series& s, std::size_t n)
{
    if (n > s.order())
        throw std::out_of_range("beyond truncation: q^" + std::to_string(n) + " with N = " +
                                std::to_string(s.order()));
    return s[n];
}

inline integer coefficient(const truncated_series& s, std::size_t n, const exponent_vector& v)
{
    return coefficient(s, n).at(v);
}

/// Every x-exponent at q-order n has absolute value at most n.
inline bool exponents_bounded_by_order(const truncated_series& s)
{
    for (std::size_t n = 0; n <= s.order(); ++n)
        if (static_cast<std::size_t>(s[n].max_abs_exponent()) > n) return false;
    return true;
}

/// Integer series obtained by setting every x_i = 1.
inline std::vector<integer> value_sums(const truncated_series& s)
{
    std::vector<integer> r;
    r.reserve(s.order() + 1);
    for (const auto& c : s.coefficients()) r.push_back(c.value_sum());
    return r;
}

} // namespace kmark
