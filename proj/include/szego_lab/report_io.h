#pragma once

#include "szego_lab/duality.h"
#include "szego_lab/muckenhoupt.h"
#include "szego_lab/norms.h"

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace szego {

/// 17 significant digits, '.' decimal point regardless of locale; "inf",
/// "-inf" and "nan" for non-finite values.
std::string format_double(double v);

/// Rounded to 12 decimals with trailing zeros dropped (keeping one): 4 -> "4.0".
std::string format_fixed12(double v);

/// Flat JSON object with keys in insertion order. Numbers go through
/// format_double; non-finite numbers are written as strings.
class JsonObject {
public:
    JsonObject& add(std::string_view key, double value);
    JsonObject& add(std::string_view key, int value);
    JsonObject& add(std::string_view key, std::uint64_t value);
    JsonObject& add(std::string_view key, bool value);
    JsonObject& add(std::string_view key, std::string_view value);
    JsonObject& add(std::string_view key, const char* value) { return add(key, std::string_view(value)); }
    JsonObject& add_null(std::string_view key);
    /// value must already be valid JSON
    JsonObject& add_raw(std::string_view key, std::string value);

    std::string str() const;

private:
    std::vector<std::pair<std::string, std::string>> fields_;
};

std::string json_quote(std::string_view s);

/// header theta,re,im
void write_samples_csv(std::ostream& out, const BoundarySamples& f);

/// header delta,quotient, then one JSON footer line
/// {s, p, a, b, fitted_slope, predicted_slope, verdict}
void write_ap_scan(std::ostream& out, const ApScanReport& report);
JsonObject ap_scan_footer(const ApScanReport& report);

/// header re_z,im_z,re_val,im_val
void write_projection_csv(std::ostream& out, std::span<const cplx> points,
                          std::span<const cplx> values);

/// header n_points,lower_bound, then a JSON verdict footer
void write_blowup(std::ostream& out, const BlowupReport& report);

/// {alpha, p, max_residual, n_tests, seed, pass}
JsonObject representation_json(const RepresentationReport& report);

} // namespace szego
