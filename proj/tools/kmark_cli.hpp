#pragma once

// Command implementations for the kmark command-line tool.
//
// Output formats (schema_version 1):
//   series, json:  {"schema_version":1,"n":<int>,"exponents":[<int>...],"value":<integer>}
//                  specialized exact:   {"schema_version":1,"n":..,"re":<integer>,"im":<integer>}
//                  specialized numeric: {"schema_version":1,"n":..,"re":<double>,"im":<double>,"error_bound":<double>}
//   series, csv:   n,exponents,value  |  n,re,im  |  n,re,im,error_bound
//   enumerate:     json objects with object,n,k,index,ranks,text plus object-specific fields;
//                  csv columns object,n,k,index,ranks,text
//   verify:        text lines "<suite> k=<k> n=<n> PASS|FAIL [detail]" and a summary line, or json
//                  objects {"schema_version":1,"suite":..,"k":..,"n":..,"pass":..,"detail":..}
// Records are ordered by n, then exponent vector (lexicographic). Exit codes: 0 success,
// 1 verification mismatch, 2 invalid invocation.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "kmark/kmark.hpp"

namespace kmark::cli {

inline constexpr int schema_version = 1;
inline constexpr int exit_ok = 0;
inline constexpr int exit_mismatch = 1;
inline constexpr int exit_usage = 2;

/// Raised for invalid parameter combinations; maps to exit code 2.
struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class output_format { json, csv, text };

inline output_format parse_format(const std::string& s)
{
    if (s == "json") return output_format::json;
    if (s == "csv") return output_format::csv;
    if (s == "text") return output_format::text;
    throw usage_error("unknown format '" + s + "'");
}

inline std::string exponent_list(const exponent_vector& v)
{
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(v[i]);
    }
    return s + "]";
}

inline std::string format_double(double x)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

// ---------------------------------------------------------------------------
// Desk-scale guardrail
// ---------------------------------------------------------------------------

namespace detail {

inline constexpr int estimate_n_limit = 2000;

// p(0..n) as doubles.
inline std::vector<double> partition_counts(int n)
{
    std::vector<double> p(static_cast<std::size_t>(n) + 1, 0.0);
    p[0] = 1;
    for (int part = 1; part <= n; ++part)
        for (int s = part; s <= n; ++s) p[s] += p[s - part];
    return p;
}

// u(0..n) as doubles.
inline std::vector<double> unimodal_counts(int n)
{
    std::vector<double> u(static_cast<std::size_t>(n) + 1, 0.0);
    // distinct[s]: partitions of s into distinct parts < current peak
    std::vector<double> distinct(static_cast<std::size_t>(n) + 1, 0.0);
    distinct[0] = 1;
    for (int peak = 1; peak <= n; ++peak) {
        for (int t = 0; t <= n - peak; ++t)
            for (int b = 0; t + b <= n - peak; ++b) u[peak + t + b] += distinct[t] * distinct[b];
        for (int s = n; s >= peak; --s) distinct[s] += distinct[s - peak];
    }
    return u;
}

inline double binomial(double n, double r)
{
    double c = 1;
    for (int i = 1; i <= static_cast<int>(r); ++i) c = c * (n - r + i) / i;
    return c;
}

inline double mark_assignments(int max_row, int k) { return binomial(max_row + k - 1, k - 1); }

inline int max_distinct_row(int n)
{
    int L = 0;
    while ((L + 1) * (L + 2) / 2 <= n) ++L;
    return L;
}

} // namespace detail

/// Rough upper estimate of the number of objects an enumeration of size n with k marks visits.
inline double estimate_objects(const std::string& object, int n, int k)
{
    if (n > detail::estimate_n_limit) return INFINITY;
    if (n < 0) return 0;
    if (object == "partition") return detail::partition_counts(n)[n];
    if (object == "su-seq") return detail::unimodal_counts(n)[n];
    if (object == "kdurfee") {
        // the two rows hold at most n - 1 parts; the product of their mark counts peaks at an even split
        const double a = detail::mark_assignments(n / 2, k);
        return detail::partition_counts(n)[n] * a * a;
    }
    if (object == "ksu") {
        const double a = detail::mark_assignments(detail::max_distinct_row(n), k);
        return detail::unimodal_counts(n)[n] * a * a;
    }
    if (object == "omega-eps") {
        return detail::partition_counts(n)[n] * std::pow(static_cast<double>(n + 1), std::max(k - 1, 0));
    }
    throw std::invalid_argument("estimate_objects: unknown object " + object);
}

inline void check_budget(double estimate, double budget, const std::string& what)
{
    if (estimate > budget) {
        std::ostringstream msg;
        msg << what << ": estimated " << estimate << " objects exceeds the budget of " << budget
            << " (raise --budget to override)";
        throw usage_error(msg.str());
    }
}

// ---------------------------------------------------------------------------
// series
// ---------------------------------------------------------------------------

struct series_options {
    std::string function;
    int k = 1;
    bool k_given = false;
    int n_max = 10;
    output_format format = output_format::json;
    std::optional<std::string> form;
    std::vector<std::string> specialize;
    double budget = 1e8;
};

inline truncated_series build_requested_series(const series_options& o)
{
    if (o.n_max < 0) throw usage_error("--n-max must be >= 0");
    if (o.k < 1) throw usage_error("--k must be >= 1");
    const auto N = static_cast<std::size_t>(o.n_max);
    const auto k = static_cast<std::size_t>(o.k);
    const auto& f = o.function;
    const bool takes_k = f == "rk" || f == "uk" || f == "scuk" || f == "omega-eps";
    const bool takes_form = f == "scuk" || f == "psi";
    if (!takes_k && o.k_given && o.k != 1) throw usage_error("--function " + f + " does not take --k");
    if (!takes_form && o.form) throw usage_error("--function " + f + " does not take --form");

    if (f == "partition") return build_partition_genfn(N);
    if (f == "r1") return build_r1(N);
    if (f == "rk") return build_rk(k, N);
    if (f == "u1") return build_u1(N);
    if (f == "uk") return build_uk(k, N);
    if (f == "scuk") {
        const std::string form = o.form.value_or("raw");
        if (form != "raw" && form != "simplified") throw usage_error("--form for scuk must be raw or simplified");
        return build_scuk(k, N, form == "raw" ? scu_form::raw : scu_form::simplified);
    }
    if (f == "psi") {
        const std::string form = o.form.value_or("theta");
        if (form == "theta") return build_psi(N, psi_form::theta);
        if (form == "pochhammer") return build_psi(N, psi_form::pochhammer);
        if (form == "enumerative") {
            check_budget(o.n_max * estimate_objects("su-seq", o.n_max, 1), o.budget, "psi enumerative");
            return build_psi(N, psi_form::enumerative);
        }
        throw usage_error("--form for psi must be theta, pochhammer or enumerative");
    }
    if (f == "omega-eps") {
        if (o.k < 2) throw usage_error("omega-eps is defined for --k >= 2 only");
        check_budget(o.n_max * estimate_objects("omega-eps", o.n_max, o.k), o.budget, "omega-eps");
        return build_omega_epsilon_diff(k, N);
    }
    throw usage_error("unknown --function '" + f + "'");
}

inline int cmd_series(const series_options& o, std::ostream& out)
{
    const auto s = build_requested_series(o);
    if (o.format == output_format::text) throw usage_error("series supports json and csv output");
    const bool json = o.format == output_format::json;
    const std::string schema = "{\"schema_version\":" + std::to_string(schema_version);

    if (o.specialize.empty()) {
        if (!json) out << "n,exponents,value\n";
        for (std::size_t n = 0; n <= s.order(); ++n) {
            for (const auto& [e, c] : s[n]) {
                if (json)
                    out << schema << ",\"n\":" << n << ",\"exponents\":" << exponent_list(e) << ",\"value\":" << c
                        << "}\n";
                else
                    out << n << ",\"" << exponent_list(e) << "\"," << c << "\n";
            }
        }
        return exit_ok;
    }

    root_vector roots;
    for (const auto& text : o.specialize) {
        try {
            roots.push_back(parse_root(text));
        } catch (const std::invalid_argument& e) {
            throw usage_error(e.what());
        }
    }
    if (roots.size() != s.var_count())
        throw usage_error("--specialize needs " + std::to_string(s.var_count()) + " angle(s) for --function " +
                          o.function + ", got " + std::to_string(roots.size()));
    const bool exact = std::all_of(roots.begin(), roots.end(), [](const auto& w) { return 4 % w.den() == 0; });
    if (exact) {
        const auto g = specialize_exact(s, roots);
        if (!json) out << "n,re,im\n";
        for (std::size_t n = 0; n <= g.order; ++n) {
            const auto& c = g.coeffs[n];
            if (json)
                out << schema << ",\"n\":" << n << ",\"re\":" << c.re << ",\"im\":" << c.im << "}\n";
            else
                out << n << "," << c.re << "," << c.im << "\n";
        }
    } else {
        const auto z = specialize_numeric(s, roots);
        if (!json) out << "n,re,im,error_bound\n";
        for (std::size_t n = 0; n <= z.order; ++n) {
            const auto re = format_double(z.coeffs[n].real()), im = format_double(z.coeffs[n].imag()),
                       err = format_double(z.error_bound[n]);
            if (json)
                out << schema << ",\"n\":" << n << ",\"re\":" << re << ",\"im\":" << im << ",\"error_bound\":" << err
                    << "}\n";
            else
                out << n << "," << re << "," << im << "," << err << "\n";
        }
    }
    return exit_ok;
}

// ---------------------------------------------------------------------------
// enumerate
// ---------------------------------------------------------------------------

struct enumerate_options {
    std::string object;
    int n = 0;
    int k = 1;
    output_format format = output_format::json;
    std::string strategy = "constructive";
    double budget = 1e8;
};

inline nlohmann::ordered_json marked_row_json(const marked_row& row)
{
    auto a = nlohmann::ordered_json::array();
    for (const auto& p : row) a.push_back({p.value, p.mark});
    return a;
}

inline int cmd_enumerate(const enumerate_options& o, std::ostream& out)
{
    using nlohmann::ordered_json;
    const auto& obj = o.object;
    if (obj != "partition" && obj != "su-seq" && obj != "kdurfee" && obj != "ksu")
        throw usage_error("unknown --object '" + obj + "'");
    if (o.n < 0) throw usage_error("--n must be >= 0");
    if (obj != "partition" && o.n < 1) throw usage_error("--n must be >= 1 for " + obj);
    if (o.k < 1) throw usage_error("--k must be >= 1");
    if ((obj == "partition" || obj == "su-seq") && o.k != 1) throw usage_error("--object " + obj + " does not take --k");
    if (o.strategy != "constructive" && o.strategy != "filter") throw usage_error("--strategy must be filter or constructive");
    if (o.format == output_format::text) throw usage_error("enumerate supports json and csv output");
    check_budget(estimate_objects(obj, o.n, o.k), o.budget, "enumerate");

    std::vector<ordered_json> records;
    auto base = [&](std::size_t index, const rank_vector& ranks, const std::string& text) {
        ordered_json r;
        r["schema_version"] = schema_version;
        r["object"] = obj;
        r["n"] = o.n;
        r["k"] = o.k;
        r["index"] = index;
        r["ranks"] = ranks;
        r["text"] = text;
        return r;
    };

    if (obj == "partition") {
        const auto ps = enumerate_partitions(o.n);
        for (std::size_t i = 0; i < ps.size(); ++i) {
            rank_vector ranks;
            if (!ps[i].empty()) ranks.push_back(dyson_rank(ps[i]));
            auto r = base(i, ranks, to_string(ps[i]));
            r["parts"] = ps[i].parts();
            records.push_back(std::move(r));
        }
    } else if (obj == "su-seq") {
        const auto syms = enumerate_su_symbols(o.n);
        for (std::size_t i = 0; i < syms.size(); ++i) {
            const auto seq = su_unsymbol(syms[i]);
            auto r = base(i, {su_rank(seq)}, to_string(seq) + " " + to_string(syms[i]));
            r["parts"] = seq.parts();
            r["peak"] = syms[i].peak;
            records.push_back(std::move(r));
        }
    } else if (obj == "kdurfee") {
        const auto syms = enumerate_kmarked_durfee(o.n, o.k);
        for (std::size_t i = 0; i < syms.size(); ++i) {
            auto r = base(i, ranks_durfee(syms[i]), to_string(syms[i]));
            r["top"] = marked_row_json(syms[i].top);
            r["bottom"] = marked_row_json(syms[i].bottom);
            r["side"] = syms[i].side;
            records.push_back(std::move(r));
        }
    } else {
        const auto strategy = o.strategy == "filter" ? enumeration_strategy::filter : enumeration_strategy::constructive;
        const auto syms = enumerate_kmarked_su(o.n, o.k, strategy);
        for (std::size_t i = 0; i < syms.size(); ++i) {
            auto r = base(i, ranks_su(syms[i]), to_string(syms[i]));
            r["top"] = marked_row_json(syms[i].top);
            r["bottom"] = marked_row_json(syms[i].bottom);
            r["peak"] = syms[i].peak;
            records.push_back(std::move(r));
        }
    }

    if (o.format == output_format::json) {
        for (const auto& r : records) out << r.dump() << "\n";
    } else {
        out << "object,n,k,index,ranks,text\n";
        for (const auto& r : records)
            out << obj << "," << o.n << "," << o.k << "," << r["index"].get<std::size_t>() << ",\""
                << exponent_list(r["ranks"].get<rank_vector>()) << "\",\"" << r["text"].get<std::string>() << "\"\n";
    }
    return exit_ok;
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

struct verify_options {
    std::string suite = "all";
    int n_max = 10;
    int k_max = 2;
    unsigned threads = 1;
    output_format format = output_format::text;
    double budget = 1e8;
};

struct cell_result {
    std::string suite;
    int k = 0;
    int n = 0;
    bool pass = true;
    std::string detail;
};

namespace detail {

// First monomial where the series coefficient and the census disagree.
inline std::optional<std::string> compare_census(const laurent_coefficient& c, const rank_census& census)
{
    for (const auto& [e, v] : c) {
        auto it = census.find(e);
        const integer expected = it == census.end() ? integer(0) : integer(it->second);
        if (v != expected)
            return "x^" + exponent_list(e) + ": series=" + v.str() + " census=" + expected.str();
    }
    for (const auto& [e, v] : census) {
        if (c.at(e) != integer(v))
            return "x^" + exponent_list(e) + ": series=" + c.at(e).str() + " census=" + std::to_string(v);
    }
    return std::nullopt;
}

inline std::optional<std::string> compare_values(const std::vector<std::pair<std::string, integer>>& values)
{
    for (std::size_t i = 1; i < values.size(); ++i) {
        if (values[i].second != values[0].second) {
            std::string s;
            for (const auto& [name, v] : values) s += (s.empty() ? "" : " ") + name + "=" + v.str();
            return s;
        }
    }
    return std::nullopt;
}

inline cell_result make_cell(std::string suite, int k, int n, std::optional<std::string> failure)
{
    return {std::move(suite), k, n, !failure, failure.value_or("")};
}

inline std::vector<cell_result> run_tasks(std::vector<std::function<cell_result()>>& tasks, unsigned threads)
{
    std::vector<cell_result> results(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) results[i] = tasks[i]();
    };
    const unsigned count = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(tasks.size())));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < count; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    return results;
}

} // namespace detail

inline std::vector<std::string> suite_names(const std::string& suite)
{
    static const std::vector<std::string> all{"thm-1-2", "thm-1-1", "thm-1-5", "psi", "bijections"};
    if (suite == "all") return all;
    if (std::find(all.begin(), all.end(), suite) == all.end()) throw usage_error("unknown --suite '" + suite + "'");
    return {suite};
}

inline double estimate_suite(const std::string& suite, int n_max, int k_max)
{
    double total = 0;
    for (int n = 1; n <= n_max; ++n) {
        if (suite == "thm-1-2")
            for (int k = 1; k <= k_max; ++k) total += 2 * estimate_objects("ksu", n, k);
        else if (suite == "thm-1-1")
            for (int k = 1; k <= k_max; ++k) total += estimate_objects("kdurfee", n, k);
        else if (suite == "thm-1-5")
            for (int k = 2; k <= k_max; ++k) total += estimate_objects("omega-eps", n, k);
        else if (suite == "psi" || suite == "bijections")
            total += estimate_objects("partition", n, 1) + estimate_objects("su-seq", n, 1);
    }
    return total;
}

/// Builds one task per (suite, k, n) cell, in report order.
inline std::vector<std::function<cell_result()>> verify_tasks(const std::string& suite, int n_max, int k_max)
{
    using detail::make_cell;
    std::vector<std::function<cell_result()>> tasks;
    const auto N = static_cast<std::size_t>(n_max);

    if (suite == "thm-1-2") {
        for (int k = 1; k <= k_max; ++k) {
            auto series = std::make_shared<truncated_series>(build_uk(static_cast<std::size_t>(k), N));
            for (int n = 0; n <= n_max; ++n) {
                tasks.push_back([series, k, n] {
                    if (n == 0)
                        return make_cell("thm-1-2", k, n,
                                         (*series)[0].is_zero() ? std::nullopt
                                                                : std::optional<std::string>("nonzero q^0 term"));
                    const auto constructive = su_rank_census(n, k, enumeration_strategy::constructive);
                    if (auto f = detail::compare_census((*series)[n], constructive)) return make_cell("thm-1-2", k, n, f);
                    const auto filtered = su_rank_census(n, k, enumeration_strategy::filter);
                    if (filtered != constructive)
                        return make_cell("thm-1-2", k, n, std::string("filter and constructive enumerations differ"));
                    return make_cell("thm-1-2", k, n, std::nullopt);
                });
            }
        }
    } else if (suite == "thm-1-1") {
        for (int k = 1; k <= k_max; ++k) {
            auto series = std::make_shared<truncated_series>(build_rk(static_cast<std::size_t>(k), N));
            for (int n = 0; n <= n_max; ++n) {
                tasks.push_back([series, k, n] {
                    rank_census census;
                    if (n == 0) {
                        if (k == 1) census[{0}] = 1;
                    } else {
                        census = durfee_rank_census(n, k);
                    }
                    return make_cell("thm-1-1", k, n, detail::compare_census((*series)[n], census));
                });
            }
        }
    } else if (suite == "thm-1-5") {
        for (int k = 2; k <= k_max; ++k) {
            const auto kk = static_cast<std::size_t>(k);
            auto raw = std::make_shared<truncated_series>(build_scuk(kk, N, scu_form::raw));
            auto simplified = std::make_shared<truncated_series>(build_scuk(kk, N, scu_form::simplified));
            for (int n = 0; n <= n_max; ++n) {
                tasks.push_back([raw, simplified, k, n] {
                    const auto [omega, epsilon] = count_omega_epsilon(n, k);
                    integer signed_diff = integer(omega) - integer(epsilon);
                    if (k % 2 == 1) signed_diff = -signed_diff;
                    const integer scu = n == 0 ? 0 : integer(count_SCUk(n, k));
                    const exponent_vector none;
                    return make_cell("thm-1-5", k, n,
                                     detail::compare_values({{"count_SCU", scu},
                                                             {"omega_minus_epsilon", signed_diff},
                                                             {"raw", (*raw)[n].at(none)},
                                                             {"simplified", (*simplified)[n].at(none)}}));
                });
            }
        }
    } else if (suite == "psi") {
        auto theta = std::make_shared<truncated_series>(build_psi(N, psi_form::theta));
        auto poch = std::make_shared<truncated_series>(build_psi(N, psi_form::pochhammer));
        for (int n = 0; n <= n_max; ++n) {
            tasks.push_back([theta, poch, n] {
                const exponent_vector none;
                const integer scu = n == 0 ? 0 : integer(count_SCUk(n, 1));
                const integer odd = n == 0 ? 0 : integer(enumerate_complete_odd_partitions(n).size());
                return make_cell("psi", 1, n,
                                 detail::compare_values({{"theta", (*theta)[n].at(none)},
                                                         {"pochhammer", (*poch)[n].at(none)},
                                                         {"enumerative", scu},
                                                         {"odd_partitions", odd}}));
            });
        }
    } else if (suite == "bijections") {
        for (int n = 0; n <= n_max; ++n) {
            tasks.push_back([n] {
                for (const auto& p : enumerate_partitions(n)) {
                    if (p.empty()) continue;
                    if (durfee_compose(durfee_decompose(p)) != p)
                        return make_cell("bijections", 1, n, "Durfee round trip fails at " + to_string(p));
                }
                if (n == 0) return make_cell("bijections", 1, n, std::nullopt);
                for (const auto& seq : enumerate_su_sequences(n)) {
                    if (!(su_unsymbol(su_symbol_of(seq)) == seq))
                        return make_cell("bijections", 1, n, "symbol round trip fails at " + to_string(seq));
                }
                for (const auto& sym : enumerate_su_symbols(n)) {
                    if (sym.top != sym.bottom) continue;
                    if (odd_partition_to_selfconj(selfconj_to_odd_partition(sym)) != sym)
                        return make_cell("bijections", 1, n, "self-conjugate round trip fails at " + to_string(sym));
                }
                for (const auto& p : enumerate_complete_odd_partitions(n)) {
                    if (selfconj_to_odd_partition(odd_partition_to_selfconj(p)) != p)
                        return make_cell("bijections", 1, n, "odd partition round trip fails at " + to_string(p));
                }
                return make_cell("bijections", 1, n, std::nullopt);
            });
        }
    }
    return tasks;
}

inline int cmd_verify(const verify_options& o, std::ostream& out)
{
    if (o.n_max < 0) throw usage_error("--n-max must be >= 0");
    if (o.k_max < 1) throw usage_error("--k-max must be >= 1");
    if (o.format == output_format::csv) throw usage_error("verify supports text and json output");
    const auto suites = suite_names(o.suite);
    double estimate = 0;
    for (const auto& s : suites) estimate += estimate_suite(s, o.n_max, o.k_max);
    check_budget(estimate, o.budget, "verify");

    std::size_t passed = 0, failed = 0;
    for (const auto& s : suites) {
        auto tasks = verify_tasks(s, o.n_max, o.k_max);
        for (const auto& r : detail::run_tasks(tasks, o.threads)) {
            (r.pass ? passed : failed)++;
            if (o.format == output_format::json) {
                nlohmann::ordered_json j;
                j["schema_version"] = schema_version;
                j["suite"] = r.suite;
                j["k"] = r.k;
                j["n"] = r.n;
                j["pass"] = r.pass;
                j["detail"] = r.detail;
                out << j.dump() << "\n";
            } else {
                out << r.suite << " k=" << r.k << " n=" << r.n << (r.pass ? " PASS" : " FAIL");
                if (!r.pass) out << " " << r.detail;
                out << "\n";
            }
        }
    }
    if (o.format == output_format::text)
        out << "summary: " << passed + failed << " cells, " << passed << " passed, " << failed << " failed\n";
    return failed == 0 ? exit_ok : exit_mismatch;
}

// ---------------------------------------------------------------------------
// argument parsing
// ---------------------------------------------------------------------------

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"kmark: k-marked strongly unimodal symbols, rank generating functions and verification"};
    app.require_subcommand(1);

    series_options so;
    std::string series_format = "json";
    std::string series_form;
    auto* series = app.add_subcommand("series", "Emit generating-function coefficients");
    series->add_option("--function", so.function, "r1|rk|u1|uk|scuk|psi|partition|omega-eps")->required();
    auto* series_k = series->add_option("--k", so.k, "number of marks");
    series->add_option("--n-max", so.n_max, "truncation order N")->required();
    series->add_option("--format", series_format, "json|csv");
    auto* series_form_opt = series->add_option("--form", series_form, "scuk: raw|simplified; psi: theta|pochhammer|enumerative");
    series->add_option("--specialize", so.specialize, "root-of-unity angles a/b, one per variable")->delimiter(',');
    series->add_option("--budget", so.budget, "object budget for enumerative builders");

    enumerate_options eo;
    std::string enumerate_format = "json";
    auto* enumerate = app.add_subcommand("enumerate", "List combinatorial objects with their ranks");
    enumerate->add_option("--object", eo.object, "partition|su-seq|kdurfee|ksu")->required();
    enumerate->add_option("--n", eo.n, "size")->required();
    enumerate->add_option("--k", eo.k, "number of marks");
    enumerate->add_option("--format", enumerate_format, "json|csv");
    enumerate->add_option("--strategy", eo.strategy, "ksu: filter|constructive");
    enumerate->add_option("--budget", eo.budget, "maximum estimated object count");

    verify_options vo;
    std::string verify_format = "text";
    auto* verify = app.add_subcommand("verify", "Check identities against brute-force enumeration");
    verify->add_option("--suite", vo.suite, "thm-1-2|thm-1-1|thm-1-5|psi|bijections|all");
    verify->add_option("--n-max", vo.n_max, "largest size checked");
    verify->add_option("--k-max", vo.k_max, "largest number of marks checked");
    verify->add_option("--threads", vo.threads, "worker threads");
    verify->add_option("--format", verify_format, "text|json");
    verify->add_option("--budget", vo.budget, "maximum estimated object count");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }

    try {
        if (*series) {
            so.format = parse_format(series_format);
            so.k_given = series_k->count() > 0;
            if (series_form_opt->count() > 0) so.form = series_form;
            return cmd_series(so, out);
        }
        if (*enumerate) {
            eo.format = parse_format(enumerate_format);
            return cmd_enumerate(eo, out);
        }
        vo.format = parse_format(verify_format);
        return cmd_verify(vo, out);
    } catch (const usage_error& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
}

} // namespace kmark::cli
