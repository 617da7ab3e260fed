#pragma once

#include "quotmot/bb_oracle.hpp"
#include "quotmot/closed_forms.hpp"
#include "quotmot/config.hpp"
#include "quotmot/measures.hpp"
#include "quotmot/nested.hpp"
#include "quotmot/verify.hpp"
#include "quotmot/zeta.hpp"

#include "json.hpp"

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace quotmot {

enum class output_format { text, json, csv };

inline std::string format_name(output_format f) {
    switch (f) {
    case output_format::text: return "text";
    case output_format::json: return "json";
    case output_format::csv: return "csv";
    }
    throw parameter_error("format_name: unknown format");
}

inline std::optional<output_format> parse_format(std::string_view s) {
    if (s == "text") return output_format::text;
    if (s == "json") return output_format::json;
    if (s == "csv") return output_format::csv;
    return std::nullopt;
}

// One fully resolved invocation: series parameters plus presentation.
struct run_config {
    int rank = 1;
    int depth = 1;
    int genus = 0;
    int cap = 5;
    measure_kind measure = measure_kind::universal;
    output_format format = output_format::text;

    quot_series_config series_config() const {
        return quot_series_config::uniform(rank, depth, cap);
    }
    measure_spec measure_config() const { return measure_spec(measure, genus); }
};

struct table_row {
    std::vector<int> n;
    std::string value;
};

// One row per nested tuple with n_d <= cap, ordered by total size and then
// lexicographically; the value is the chosen measure of the coefficient.
inline std::vector<table_row> compute_rows(const run_config& rc) {
    const quot_series_config cfg = rc.series_config();
    const measure_spec ms = rc.measure_config();
    const auto series = main_series(cfg);
    std::vector<table_row> rows;
    for (const auto& n : enumerate_nested(rc.depth, rc.cap)) {
        const universal_motive c = series.coefficient(n.to_exponents());
        std::string value;
        switch (ms.kind) {
        case measure_kind::universal: value = c.to_string(); break;
        case measure_kind::hodge_deligne: value = apply_hodge_deligne(c, ms.genus).to_string(); break;
        case measure_kind::signed_poincare:
            value = apply_signed_poincare(c, ms.genus).to_string();
            break;
        case measure_kind::euler: value = apply_euler(c, ms.genus).to_string(); break;
        }
        rows.push_back({n.values(), std::move(value)});
    }
    return rows;
}

namespace detail {

inline std::string tuple_string(const std::vector<int>& n) {
    return exponent_vector(n).to_string();
}

inline void render_header_line(const run_config& rc, std::ostream& os) {
    os << "r=" << rc.rank << " d=" << rc.depth << " genus=" << rc.genus << " cap=" << rc.cap
       << " measure=" << measure_name(rc.measure) << "\n";
}

} // namespace detail

inline void render_text(const run_config& rc, const std::vector<table_row>& rows,
                        std::ostream& os) {
    detail::render_header_line(rc, os);
    for (const auto& row : rows) os << detail::tuple_string(row.n) << " " << row.value << "\n";
}

inline void render_json(const run_config& rc, const std::vector<table_row>& rows,
                        std::ostream& os) {
    nlohmann::ordered_json j;
    j["r"] = rc.rank;
    j["d"] = rc.depth;
    j["genus"] = rc.genus;
    j["measure"] = measure_name(rc.measure);
    j["cap"] = rc.cap;
    j["coefficients"] = nlohmann::ordered_json::array();
    for (const auto& row : rows)
        j["coefficients"].push_back({{"n", row.n}, {"value", row.value}});
    os << j.dump(2) << "\n";
}

// Values never contain commas, so no quoting is needed.
inline void render_csv(const run_config& rc, const std::vector<table_row>& rows,
                       std::ostream& os) {
    for (int i = 1; i <= rc.depth; ++i) os << "n" << i << ",";
    os << "value\n";
    for (const auto& row : rows) {
        for (int x : row.n) os << x << ",";
        os << row.value << "\n";
    }
}

inline int run_compute(const run_config& rc, std::ostream& os) {
    const auto rows = compute_rows(rc);
    switch (rc.format) {
    case output_format::text: render_text(rc, rows, os); break;
    case output_format::json: render_json(rc, rows, os); break;
    case output_format::csv: render_csv(rc, rows, os); break;
    }
    return 0;
}

inline int run_verify(const run_config& rc, std::ostream& os) {
    bool all_passed = true;
    for (const auto& c : run_all_checks(rc.series_config(), rc.genus)) {
        os << (c.passed ? "[PASS] " : "[FAIL] ") << c.name;
        if (!c.passed) {
            os << ": " << c.detail;
            all_passed = false;
        }
        os << "\n";
    }
    return all_passed ? 0 : 1;
}

inline int run_exp_check(const run_config& rc, std::ostream& os) {
    const check_result c = check_exp_reformulation(rc.series_config());
    os << (c.passed ? "[PASS] " : "[FAIL] ") << c.name;
    if (!c.passed) os << ": " << c.detail;
    os << "\n";
    return c.passed ? 0 : 1;
}

// Euler numbers along three routes: the rational closed form, the measure of
// the universal coefficient, and (genus 0 only) the fixed-point count.
struct euler_row {
    std::vector<int> n;
    bigint closed_form;
    bigint measure_path;
    std::optional<bigint> combinatorial;
    bool consistent = false;
};

inline std::vector<euler_row> compute_euler_rows(const run_config& rc) {
    const quot_series_config cfg = rc.series_config();
    const auto closed = euler_closed_form(cfg, rc.genus);
    const auto lifted = lift_euler(main_series(cfg), rc.genus);
    std::vector<euler_row> rows;
    for (const auto& n : enumerate_nested(rc.depth, rc.cap)) {
        const exponent_vector e = n.to_exponents();
        euler_row row;
        row.n = n.values();
        row.closed_form = closed.coefficient(e);
        row.measure_path = lifted.coefficient(e);
        row.consistent = row.closed_form == row.measure_path;
        if (rc.genus == 0) {
            row.combinatorial = euler_count(cfg.rank, n);
            row.consistent = row.consistent && *row.combinatorial == row.closed_form;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

inline int run_euler_table(const run_config& rc, std::ostream& os) {
    const auto rows = compute_euler_rows(rc);
    bool all_consistent = true;
    for (const auto& row : rows) all_consistent = all_consistent && row.consistent;

    if (rc.format == output_format::json) {
        nlohmann::ordered_json j;
        j["r"] = rc.rank;
        j["d"] = rc.depth;
        j["genus"] = rc.genus;
        j["measure"] = "euler";
        j["cap"] = rc.cap;
        j["rows"] = nlohmann::ordered_json::array();
        for (const auto& row : rows) {
            nlohmann::ordered_json jr;
            jr["n"] = row.n;
            jr["closed_form"] = row.closed_form.to_string();
            jr["measure_path"] = row.measure_path.to_string();
            if (row.combinatorial) jr["combinatorial"] = row.combinatorial->to_string();
            jr["consistent"] = row.consistent;
            j["rows"].push_back(std::move(jr));
        }
        j["all_consistent"] = all_consistent;
        os << j.dump(2) << "\n";
    } else if (rc.format == output_format::csv) {
        for (int i = 1; i <= rc.depth; ++i) os << "n" << i << ",";
        os << "closed_form,measure_path,combinatorial,consistent\n";
        for (const auto& row : rows) {
            for (int x : row.n) os << x << ",";
            os << row.closed_form << "," << row.measure_path << ","
               << (row.combinatorial ? row.combinatorial->to_string() : "") << ","
               << (row.consistent ? "true" : "false") << "\n";
        }
    } else {
        run_config labeled = rc;
        labeled.measure = measure_kind::euler;
        detail::render_header_line(labeled, os);
        for (const auto& row : rows) {
            os << detail::tuple_string(row.n) << " closed=" << row.closed_form
               << " measure=" << row.measure_path;
            if (row.combinatorial) os << " count=" << *row.combinatorial;
            os << (row.consistent ? " ok" : " MISMATCH") << "\n";
        }
    }
    return all_consistent ? 0 : 1;
}

} // namespace quotmot
