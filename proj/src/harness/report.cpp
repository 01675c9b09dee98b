#include <cmath>
#include <limits>

#include <json.hpp>

#include "helmholtz2d/harness.hpp"

namespace helmholtz2d::harness {

VerificationReport& VerificationReport::set(std::string key, ParamValue value) {
    parameters.emplace_back(std::move(key), std::move(value));
    return *this;
}

VerificationReport make_report(std::string identity_name, const std::vector<double>& errors,
                               double tolerance) {
    VerificationReport report;
    report.identity_name = std::move(identity_name);
    report.tolerance = tolerance;
    bool finite = true;
    double max_error = 0.0;
    double sum_sq = 0.0;
    for (double e : errors) {
        if (!std::isfinite(e)) {
            finite = false;
            continue;
        }
        max_error = std::max(max_error, e);
        sum_sq += e * e;
    }
    report.max_abs_error = finite ? max_error : std::numeric_limits<double>::infinity();
    report.rms_error = errors.empty() ? 0.0 : std::sqrt(sum_sq / errors.size());
    report.pass = finite && report.max_abs_error <= tolerance;
    report.set("samples", static_cast<long long>(errors.size()));
    return report;
}

VerificationReport merge_reports(std::string identity_name,
                                 const std::vector<VerificationReport>& cases, double tolerance) {
    VerificationReport merged;
    merged.identity_name = std::move(identity_name);
    merged.tolerance = tolerance;
    double max_error = 0.0;
    double sum_sq = 0.0;
    bool finite = true;
    for (const auto& c : cases) {
        if (!std::isfinite(c.max_abs_error)) {
            finite = false;
        } else {
            max_error = std::max(max_error, c.max_abs_error);
        }
        sum_sq += c.rms_error * c.rms_error;
        merged.runtime_ms += c.runtime_ms;
    }
    merged.max_abs_error = finite ? max_error : std::numeric_limits<double>::infinity();
    merged.rms_error = cases.empty() ? 0.0 : std::sqrt(sum_sq / cases.size());
    merged.pass = finite && merged.max_abs_error <= tolerance;
    merged.set("cases", static_cast<long long>(cases.size()));
    return merged;
}

std::string to_json_line(const VerificationReport& report) {
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [key, value] : report.parameters) {
        std::visit([&params, &key](const auto& v) { params[key] = v; }, value);
    }
    nlohmann::ordered_json j;
    j["identity_name"] = report.identity_name;
    j["parameters"] = params;
    // JSON has no infinity; a non-finite error is emitted as null
    if (std::isfinite(report.max_abs_error)) {
        j["max_abs_error"] = report.max_abs_error;
    } else {
        j["max_abs_error"] = nullptr;
    }
    if (std::isfinite(report.rms_error)) {
        j["rms_error"] = report.rms_error;
    } else {
        j["rms_error"] = nullptr;
    }
    j["tolerance"] = report.tolerance;
    j["pass"] = report.pass;
    j["runtime_ms"] = report.runtime_ms;
    return j.dump();
}

}  // namespace helmholtz2d::harness
