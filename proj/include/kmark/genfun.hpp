#pragma once

// Generating functions as truncated series. Each multi-sum is restricted to the index region
// whose terms have q-order at most N; every term outside that region vanishes mod q^{N+1}.

#include <cassert>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <vector>

#include "kmark/self_conjugate.hpp"
#include "kmark/series.hpp"

namespace kmark {

enum class scu_form { raw, simplified };
enum class psi_form { theta, pochhammer, enumerative };

namespace detail {

inline exponent_vector unit_exponent(std::size_t var_count, std::size_t index, int power)
{
    exponent_vector v(var_count, 0);
    v[index] = power;
    return v;
}

// Visits every strictly increasing M_1 < ... < M_k with M_1 >= 1 (weakly increasing when
// `strict` is false) for which bound(M) <= N. `bound` must be nondecreasing in every M_j and
// `partial_bound(prefix)` must lower-bound bound() over all completions of the prefix.
inline void for_each_chain(std::size_t k, bool strict, std::size_t N,
                           const std::function<std::size_t(const std::vector<std::size_t>&, std::size_t)>& partial_bound,
                           const std::function<void(const std::vector<std::size_t>&)>& visit)
{
    std::vector<std::size_t> M;
    std::function<void()> rec = [&]() {
        if (M.size() == k) {
            visit(M);
            return;
        }
        std::size_t start = M.empty() ? 1 : M.back() + (strict ? 1 : 0);
        for (std::size_t m = start;; ++m) {
            M.push_back(m);
            const bool fits = partial_bound(M, k) <= N;
            if (fits) rec();
            M.pop_back();
            if (!fits) break;
        }
    };
    if (k == 0) return;
    rec();
}

} // namespace detail

/// sum_n p(n) q^n as 1 / (q; q)_infinity.
inline truncated_series build_partition_genfn(std::size_t N)
{
    return inverse(pochhammer(factor_spec{1, 0, 1, 1, 1}, infinite, N, 0));
}

/// R_1(x; q) = sum_n q^{n^2} / ((x q; q)_n (x^{-1} q; q)_n).
inline truncated_series build_r1(std::size_t N)
{
    truncated_series total(N, 1);
    const exponent_vector up{1}, down{-1};
    for (std::size_t n = 0; n * n <= N; ++n) {
        auto term = monomial_series(1, {0}, n * n, N, 1);
        for (std::size_t j = 1; j <= n; ++j) {
            divide_binomial(term, -1, up, j);
            divide_binomial(term, -1, down, j);
        }
        total = total + term;
    }
    assert(exponents_bounded_by_order(total));
    return total;
}

/// Rank generating function of k-marked Durfee symbols. k = 1 is R_1.
///
/// Sums over m_1 > 0, m_2, ..., m_k >= 0 (so M_1 <= M_2 <= ... <= M_k) with term order
/// M_k^2 + M_1 + ... + M_{k-1} <= N; the term is q^{that order} divided by
/// (x_1 q; q)_{m_1} (q/x_1; q)_{m_1} and (x_j q^{M_{j-1}}; q)_{m_j+1} (q^{M_{j-1}}/x_j; q)_{m_j+1} for j >= 2.
inline truncated_series build_rk(std::size_t k, std::size_t N)
{
    if (k == 0) throw std::invalid_argument("build_rk: k must be >= 1");
    if (k == 1) return build_r1(N);
    truncated_series total(N, k);
    auto order_of = [k](const std::vector<std::size_t>& M, std::size_t) {
        // unchosen M_j are at least the last chosen value
        const std::size_t last = M.back();
        std::size_t o = 0;
        for (std::size_t j = 0; j < M.size() && j + 1 < k; ++j) o += M[j];
        for (std::size_t j = M.size(); j + 1 < k; ++j) o += last;
        return o + last * last;
    };
    detail::for_each_chain(k, false, N, order_of, [&](const std::vector<std::size_t>& M) {
        const std::size_t order = order_of(M, k);
        auto term = monomial_series(1, exponent_vector(k, 0), 0, N - order, k);
        for (std::size_t i = 1; i <= M[0]; ++i) {
            divide_binomial(term, -1, detail::unit_exponent(k, 0, 1), i);
            divide_binomial(term, -1, detail::unit_exponent(k, 0, -1), i);
        }
        for (std::size_t j = 1; j < k; ++j) {
            for (std::size_t i = M[j - 1]; i <= M[j]; ++i) {
                divide_binomial(term, -1, detail::unit_exponent(k, j, 1), i);
                divide_binomial(term, -1, detail::unit_exponent(k, j, -1), i);
            }
        }
        for (std::size_t n = 0; n <= N - order; ++n) total[n + order] += term[n];
    });
    assert(exponents_bounded_by_order(total));
    return total;
}

/// U(x; q) = sum_{n >= 0} q^{n+1} (-x q; q)_n (-x^{-1} q; q)_n.
inline truncated_series build_u1(std::size_t N)
{
    truncated_series total(N, 1);
    for (std::size_t n = 0; n + 1 <= N; ++n) {
        auto term = monomial_series(1, {0}, n + 1, N, 1);
        term = term * pochhammer(factor_spec{-1, 1, 1, 1, 1}, n, N, 1);
        term = term * pochhammer(factor_spec{-1, 1, -1, 1, 1}, n, N, 1);
        total = total + term;
    }
    assert(exponents_bounded_by_order(total));
    return total;
}

/// Rank generating function of k-marked strongly unimodal symbols.
///
/// Sums over m_1, ..., m_k >= 1 (M_1 < ... < M_k) with term order M_1 + ... + M_k <= N. Each term is
/// q^{M_1 + ... + M_k} prod_{j<k} (1 + x_j^{-1} q^{M_j})
///   prod_j (-x_j q^{M_{j-1}+1}; q)_{m_j - 1} (-x_j^{-1} q^{M_{j-1}+1}; q)_{m_j - 1}.
inline truncated_series build_uk(std::size_t k, std::size_t N)
{
    if (k == 0) throw std::invalid_argument("build_uk: k must be >= 1");
    truncated_series total(N, k);
    auto order_of = [](const std::vector<std::size_t>& M, std::size_t k_) {
        std::size_t o = 0;
        for (std::size_t m : M) o += m;
        std::size_t last = M.back();
        for (std::size_t j = M.size(); j < k_; ++j) o += ++last;
        return o;
    };
    detail::for_each_chain(k, true, N, order_of, [&](const std::vector<std::size_t>& M) {
        const std::size_t order = order_of(M, k);
        const std::size_t T = N - order;
        auto term = one_series(T, k);
        std::size_t prev = 0;
        for (std::size_t j = 0; j < k; ++j) {
            const auto up = detail::unit_exponent(k, j, 1);
            const auto down = detail::unit_exponent(k, j, -1);
            if (j + 1 < k) multiply_binomial(term, 1, down, M[j]);
            for (std::size_t i = prev + 1; i < M[j]; ++i) {
                multiply_binomial(term, 1, up, i);
                multiply_binomial(term, 1, down, i);
            }
            prev = M[j];
        }
        for (std::size_t n = 0; n <= T; ++n) total[n + order] += term[n];
    });
    assert(exponents_bounded_by_order(total));
    return total;
}

/// Generating function of self-conjugate k-marked strongly unimodal symbols (no x variables).
///
/// raw: sum over M_1 < ... < M_k of q^{2(M_1 + ... + M_{k-1}) + M_k} prod_j (-q^{2(M_{j-1}+1)}; q^2)_{m_j - 1}.
/// simplified: sum over M_k >= k of q^{M_k} (-q^2; q^2)_{M_k - 1} times the inner sum over
/// M_1 < ... < M_{k-1} < M_k of prod_j q^{2 M_j} / (1 + q^{2 M_j}).
inline truncated_series build_scuk(std::size_t k, std::size_t N, scu_form form = scu_form::raw)
{
    if (k == 0) throw std::invalid_argument("build_scuk: k must be >= 1");
    truncated_series total(N, 0);
    const exponent_vector none;
    auto order_of = [](const std::vector<std::size_t>& M, std::size_t k_) {
        std::size_t o = 0;
        std::size_t last = M.back();
        for (std::size_t j = 0; j < M.size(); ++j) o += (j + 1 < k_ ? 2 : 1) * M[j];
        for (std::size_t j = M.size(); j < k_; ++j) o += (j + 1 < k_ ? 2 : 1) * ++last;
        return o;
    };

    if (form == scu_form::raw) {
        detail::for_each_chain(k, true, N, order_of, [&](const std::vector<std::size_t>& M) {
            const std::size_t order = order_of(M, k);
            const std::size_t T = N - order;
            auto term = one_series(T, 0);
            std::size_t prev = 0;
            for (std::size_t j = 0; j < k; ++j) {
                const std::size_t m = M[j] - prev;
                detail::pochhammer_into(term, factor_spec{-1, 0, 1, 2 * (prev + 1), 2}, m - 1);
                prev = M[j];
            }
            for (std::size_t n = 0; n <= T; ++n) total[n + order] += term[n];
        });
        return total;
    }

    for (std::size_t peak = k; peak <= N; ++peak) {
        // inner sum over M_1 < ... < M_{k-1} < peak, order 2(M_1 + ... + M_{k-1}) + peak <= N
        const std::size_t T = N - peak;
        truncated_series inner(T, 0);
        if (k == 1) {
            inner = one_series(T, 0);
        } else {
            auto inner_order = [](const std::vector<std::size_t>& M, std::size_t k_) {
                std::size_t o = 0;
                std::size_t last = M.back();
                for (std::size_t m : M) o += 2 * m;
                for (std::size_t j = M.size(); j < k_; ++j) o += 2 * ++last;
                return o;
            };
            detail::for_each_chain(k - 1, true, T, inner_order, [&](const std::vector<std::size_t>& M) {
                if (M.back() >= peak) return;
                std::size_t o = 0;
                for (std::size_t m : M) o += 2 * m;
                auto t = monomial_series(1, none, o, T, 0);
                for (std::size_t m : M) {
                    auto denom = one_series(T, 0);
                    multiply_binomial(denom, 1, none, 2 * m);
                    t = t * inverse(denom);
                }
                inner = inner + t;
            });
        }
        auto outer = monomial_series(1, none, peak, N, 0);
        outer = outer * pochhammer(factor_spec{-1, 0, 1, 2, 2}, peak - 1, N, 0);
        // inner has order T = N - peak; lift it to order N before multiplying
        truncated_series lifted(N, 0);
        for (std::size_t n = 0; n <= T; ++n) lifted[n] = inner[n];
        auto product = outer * lifted;
        total = total + product;
    }
    return total;
}

/// Ramanujan's third-order mock theta function psi(q), in one of three independent forms.
///
/// theta: sum_{n >= 1} q^{n^2} / (q; q^2)_n; pochhammer: sum_{n >= 1} q^n (-q^2; q^2)_{n-1};
/// enumerative: coefficients counted from self-conjugate strongly unimodal symbols.
inline truncated_series build_psi(std::size_t N, psi_form form = psi_form::theta)
{
    switch (form) {
    case psi_form::theta: {
        truncated_series total(N, 0);
        for (std::size_t n = 1; n * n <= N; ++n) {
            auto term = monomial_series(1, {}, n * n, N, 0);
            term = term * inverse(pochhammer(factor_spec{1, 0, 1, 1, 2}, n, N, 0));
            total = total + term;
        }
        return total;
    }
    case psi_form::pochhammer:
        return build_scuk(1, N, scu_form::raw);
    case psi_form::enumerative: {
        truncated_series total(N, 0);
        for (std::size_t n = 1; n <= N; ++n) total.add_term(n, {}, count_SCUk(static_cast<int>(n), 1));
        return total;
    }
    }
    throw std::invalid_argument("build_psi: unknown form");
}

/// sum_n (-1)^k (omega_k(n) - epsilon_k(n)) q^n.
inline truncated_series build_omega_epsilon_diff(std::size_t k, std::size_t N)
{
    if (k < 2) throw std::domain_error("omega/epsilon counts are defined for k >= 2 only");
    truncated_series total(N, 0);
    for (std::size_t n = 0; n <= N; ++n) {
        const auto [omega, epsilon] = count_omega_epsilon(static_cast<int>(n), static_cast<int>(k));
        integer diff = integer(omega) - integer(epsilon);
        if (k % 2 == 1) diff = -diff;
        total.add_term(n, {}, diff);
    }
    return total;
}

} // namespace kmark
