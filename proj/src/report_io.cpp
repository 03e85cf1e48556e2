#include "szego_lab/report_io.h"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <ostream>

namespace szego {

std::string format_double(double v)
{
    if (std::isnan(v)) {
        return "nan";
    }
    if (std::isinf(v)) {
        return v > 0 ? "inf" : "-inf";
    }
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    std::string s(buf);
    // the C locale is never changed by this library, but guard the separator anyway
    for (char& c : s) {
        if (c == ',') {
            c = '.';
        }
    }
    return s;
}

std::string format_fixed12(double v)
{
    if (!std::isfinite(v)) {
        return format_double(v);
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12f", v);
    std::string s(buf);
    while (s.size() > 2 && s.back() == '0' && s[s.size() - 2] != '.') {
        s.pop_back();
    }
    return s;
}

std::string json_quote(std::string_view s) { return nlohmann::json(std::string(s)).dump(); }

JsonObject& JsonObject::add(std::string_view key, double value)
{
    return add_raw(key, std::isfinite(value) ? format_double(value) : json_quote(format_double(value)));
}

JsonObject& JsonObject::add(std::string_view key, int value) { return add_raw(key, std::to_string(value)); }

JsonObject& JsonObject::add(std::string_view key, std::uint64_t value)
{
    return add_raw(key, std::to_string(value));
}

JsonObject& JsonObject::add(std::string_view key, bool value) { return add_raw(key, value ? "true" : "false"); }

JsonObject& JsonObject::add(std::string_view key, std::string_view value)
{
    return add_raw(key, json_quote(value));
}

JsonObject& JsonObject::add_null(std::string_view key) { return add_raw(key, "null"); }

JsonObject& JsonObject::add_raw(std::string_view key, std::string value)
{
    fields_.emplace_back(std::string(key), std::move(value));
    return *this;
}

std::string JsonObject::str() const
{
    std::string out = "{";
    for (std::size_t i = 0; i < fields_.size(); ++i) {
        if (i > 0) {
            out += ", ";
        }
        out += json_quote(fields_[i].first);
        out += ": ";
        out += fields_[i].second;
    }
    out += "}";
    return out;
}

void write_samples_csv(std::ostream& out, const BoundarySamples& f)
{
    out << "theta,re,im\n";
    for (std::size_t j = 0; j < f.size(); ++j) {
        out << format_double(f.grid.node(j)) << ',' << format_double(f.values[j].real()) << ','
            << format_double(f.values[j].imag()) << '\n';
    }
}

JsonObject ap_scan_footer(const ApScanReport& report)
{
    JsonObject footer;
    footer.add("s", report.s).add("p", report.p).add("a", report.a).add("b", report.b);
    footer.add("fitted_slope", report.fitted_slope);
    if (report.predicted_slope) {
        footer.add("predicted_slope", *report.predicted_slope);
    } else {
        footer.add_null("predicted_slope");
    }
    footer.add("verdict", to_string(report.verdict));
    return footer;
}

void write_ap_scan(std::ostream& out, const ApScanReport& report)
{
    out << "delta,quotient\n";
    for (const LadderPoint& pt : report.ladder) {
        out << format_double(pt.delta) << ',' << format_double(pt.quotient) << '\n';
    }
    out << ap_scan_footer(report).str() << '\n';
}

void write_projection_csv(std::ostream& out, std::span<const cplx> points,
                          std::span<const cplx> values)
{
    out << "re_z,im_z,re_val,im_val\n";
    for (std::size_t i = 0; i < points.size() && i < values.size(); ++i) {
        out << format_double(points[i].real()) << ',' << format_double(points[i].imag()) << ','
            << format_double(values[i].real()) << ',' << format_double(values[i].imag()) << '\n';
    }
}

void write_blowup(std::ostream& out, const BlowupReport& report)
{
    out << "n_points,lower_bound\n";
    for (std::size_t i = 0; i < report.grid_sizes.size(); ++i) {
        out << report.grid_sizes[i] << ',' << format_double(report.estimates[i]) << '\n';
    }
    JsonObject footer;
    footer.add("alpha", report.alpha).add("p", report.p).add("verdict", to_string(report.verdict));
    out << footer.str() << '\n';
}

JsonObject representation_json(const RepresentationReport& report)
{
    JsonObject obj;
    obj.add("alpha", report.alpha)
        .add("p", report.p)
        .add("max_residual", report.max_residual)
        .add("n_tests", report.n_tests)
        .add("seed", report.seed)
        .add("pass", report.pass);
    return obj;
}

} // namespace szego
