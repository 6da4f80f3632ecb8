#pragma once

#include <string>

#include "mzvq/precision.hpp"
#include "mzvq/report.hpp"
#include "mzvq/series.hpp"

// vendored single-header nlohmann/json
#include "json.hpp"

namespace mzvq {

using OrderedJson = nlohmann::ordered_json;

/// {"kind":"rational","num":...,"den":...,"pi_power":...} with the integers
/// serialized losslessly as decimal strings.
OrderedJson rational_record(const PiRational& q);

/// {"kind":"value","value":...,"abs_err":...} as decimal strings.
OrderedJson value_record(const ApproxReal& v);

/// {"kind":"report","name":...,"instance":...,"mode":...,"passed":...,"residual":...}
OrderedJson report_record(const VerificationReport& r);

std::string real_to_string(const Real& v, unsigned digits = 30);

std::string rational_text_line(const PiRational& q);
std::string value_text_line(const ApproxReal& v);
std::string report_text_line(const VerificationReport& r);

/// CSV with one row per n (1..max_n) and one num/den cell per d (1..max_d).
std::string table_csv(const BivariateSeries& table);
std::string table_text(const BivariateSeries& table);
OrderedJson table_record(const BivariateSeries& table);

}  // namespace mzvq
