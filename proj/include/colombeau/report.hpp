// Copyright 2026 The colombeau-kit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Check reports and their JSON / CSV / text renderings.

#include <cmath>
#include <cstdio>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace colombeau
{

inline constexpr const char* version = "0.1.0";

struct Check
{
    std::string name;
    std::string paper_ref;  // formula the check reproduces
    double closed_form = 0.0;
    std::optional<double> quadrature;
    double rel_dev = 0.0;
    double tolerance = 0.0;
    bool pass = false;

    bool operator==(const Check&) const = default;
};

struct ReportMeta
{
    int q = 2;
    double eps = 0.0;
    double a = 0.0;
    std::string unit_mode = "gaussian";
    std::string version = colombeau::version;

    bool operator==(const ReportMeta&) const = default;
};

struct Report
{
    ReportMeta meta;
    std::vector<Check> checks;

    bool all_pass() const
    {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }

    bool operator==(const Report&) const = default;
};

/// Relative deviation with an absolute fallback when the reference is zero.
inline double relative_deviation(double value, double reference, double scale = 0.0)
{
    const double denom = reference != 0.0 ? std::abs(reference) : scale;
    return denom > 0.0 ? std::abs(value - reference) / denom : std::abs(value - reference);
}

inline Check make_check(std::string name, std::string formula, double closed, std::optional<double> quadrature,
                        double tolerance, double scale = 0.0)
{
    Check c{std::move(name), std::move(formula), closed, quadrature, 0.0, tolerance, false};
    c.rel_dev = quadrature ? relative_deviation(*quadrature, closed, scale) : 0.0;
    c.pass = std::isfinite(c.rel_dev) && c.rel_dev <= tolerance;
    return c;
}

// ---------------------------------------------------------------------------
// JSON

namespace detail
{

inline nlohmann::ordered_json number(double v)
{
    if (!std::isfinite(v)) return nullptr;
    return v;
}

inline double number_from(const nlohmann::ordered_json& j)
{
    return j.is_null() ? std::nan("") : j.get<double>();
}

}  // namespace detail

inline nlohmann::ordered_json to_json(const Report& r)
{
    nlohmann::ordered_json meta = {
        {"q", r.meta.q},
        {"eps", detail::number(r.meta.eps)},
        {"a", detail::number(r.meta.a)},
        {"unit_mode", r.meta.unit_mode},
        {"version", r.meta.version},
    };
    auto checks = nlohmann::ordered_json::array();
    for (const auto& c : r.checks)
    {
        checks.push_back({
            {"name", c.name},
            {"paper_ref", c.paper_ref},
            {"closed_form", detail::number(c.closed_form)},
            {"quadrature", c.quadrature ? detail::number(*c.quadrature) : nullptr},
            {"rel_dev", detail::number(c.rel_dev)},
            {"tolerance", detail::number(c.tolerance)},
            {"pass", c.pass},
        });
    }
    return {{"meta", meta}, {"checks", checks}};
}

inline Report report_from_json(const nlohmann::ordered_json& j)
{
    Report r;
    const auto& meta = j.at("meta");
    r.meta.q = meta.at("q").get<int>();
    r.meta.eps = detail::number_from(meta.at("eps"));
    r.meta.a = detail::number_from(meta.at("a"));
    r.meta.unit_mode = meta.at("unit_mode").get<std::string>();
    r.meta.version = meta.at("version").get<std::string>();
    for (const auto& c : j.at("checks"))
    {
        Check out;
        out.name = c.at("name").get<std::string>();
        out.paper_ref = c.at("paper_ref").get<std::string>();
        out.closed_form = detail::number_from(c.at("closed_form"));
        if (!c.at("quadrature").is_null()) out.quadrature = c.at("quadrature").get<double>();
        out.rel_dev = detail::number_from(c.at("rel_dev"));
        out.tolerance = detail::number_from(c.at("tolerance"));
        out.pass = c.at("pass").get<bool>();
        r.checks.push_back(std::move(out));
    }
    return r;
}

inline std::string emit_json(const Report& r) { return to_json(r).dump(2) + "\n"; }

// ---------------------------------------------------------------------------
// CSV and text

inline std::string format_double(double v)
{
    if (std::isnan(v)) return "nan";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

/// RFC 4180 field quoting.
inline std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s)
    {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

inline std::string csv_row(const std::vector<std::string>& fields)
{
    std::string line;
    for (std::size_t i = 0; i < fields.size(); ++i) line += (i ? "," : "") + csv_field(fields[i]);
    return line + "\r\n";
}

inline std::string emit_csv(const Report& r)
{
    std::string out = csv_row({"name", "paper_ref", "closed_form", "quadrature", "rel_dev", "tolerance", "pass"});
    for (const auto& c : r.checks)
    {
        out += csv_row({c.name, c.paper_ref, format_double(c.closed_form),
                        c.quadrature ? format_double(*c.quadrature) : "", format_double(c.rel_dev),
                        format_double(c.tolerance), c.pass ? "true" : "false"});
    }
    return out;
}

/// Left-aligned columns padded to the widest cell.
inline std::string aligned_table(const std::vector<std::vector<std::string>>& rows)
{
    std::vector<std::size_t> width;
    for (const auto& row : rows)
    {
        if (width.size() < row.size()) width.resize(row.size(), 0);
        for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
    }
    std::ostringstream os;
    for (const auto& row : rows)
    {
        std::string line;
        for (std::size_t i = 0; i < row.size(); ++i)
        {
            line += row[i];
            if (i + 1 < row.size()) line += std::string(width[i] - row[i].size() + 2, ' ');
        }
        os << line << "\n";
    }
    return os.str();
}

inline std::string short_double(double v)
{
    std::ostringstream os;
    os << std::setprecision(10) << v;
    return os.str();
}

inline std::string emit_text(const Report& r)
{
    std::ostringstream head;
    head << "q=" << r.meta.q << " eps=" << short_double(r.meta.eps) << " a=" << short_double(r.meta.a)
         << " units=" << r.meta.unit_mode << " version=" << r.meta.version << "\n";
    std::vector<std::vector<std::string>> rows{{"check", "closed form", "quadrature", "rel dev", "tol", "pass", "formula"}};
    for (const auto& c : r.checks)
    {
        rows.push_back({c.name, short_double(c.closed_form), c.quadrature ? short_double(*c.quadrature) : "-",
                        short_double(c.rel_dev), short_double(c.tolerance), c.pass ? "PASS" : "FAIL", c.paper_ref});
    }
    std::size_t passed = 0;
    for (const auto& c : r.checks) passed += c.pass;
    std::ostringstream tail;
    tail << passed << "/" << r.checks.size() << " checks passed\n";
    return head.str() + aligned_table(rows) + tail.str();
}

enum class Format
{
    text,
    json,
    csv,
};

inline std::string emit_report(const Report& r, Format f)
{
    switch (f)
    {
        case Format::json: return emit_json(r);
        case Format::csv: return emit_csv(r);
        case Format::text: break;
    }
    return emit_text(r);
}

}  // namespace colombeau
