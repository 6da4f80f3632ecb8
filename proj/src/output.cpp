#include "mzvq/output.hpp"

#include <sstream>

namespace mzvq {

std::string real_to_string(const Real& v, unsigned digits) {
    return v.str(digits);
}

OrderedJson rational_record(const PiRational& q) {
    OrderedJson j;
    j["kind"] = "rational";
    j["num"] = numerator(q.coeff).str();
    j["den"] = denominator(q.coeff).str();
    j["pi_power"] = q.pi_power;
    return j;
}

OrderedJson value_record(const ApproxReal& v) {
    OrderedJson j;
    j["kind"] = "value";
    j["value"] = real_to_string(v.value);
    j["abs_err"] = real_to_string(v.err, 6);
    return j;
}

OrderedJson report_record(const VerificationReport& r) {
    OrderedJson j;
    j["kind"] = "report";
    j["name"] = r.name;
    j["instance"] = r.instance;
    j["mode"] = r.mode;
    j["passed"] = r.passed;
    if (r.mode == "numeric") {
        OrderedJson res;
        res["value"] = r.residual;
        res["abs_err"] = r.err_bound;
        j["residual"] = res;
    } else {
        j["residual"] = r.residual;
    }
    return j;
}

std::string rational_text_line(const PiRational& q) {
    std::string s = q.coeff.str();
    if (q.pi_power != 0) s += " * pi^" + std::to_string(q.pi_power);
    return s;
}

std::string value_text_line(const ApproxReal& v) {
    return real_to_string(v.value) + "  (abs err <= " + real_to_string(v.err, 6) + ")";
}

std::string report_text_line(const VerificationReport& r) {
    std::string s = r.passed ? "[PASS] " : "[FAIL] ";
    s += r.name + " " + r.instance + " (" + r.mode + ") residual=" + r.residual;
    if (!r.err_bound.empty()) s += " err<=" + r.err_bound;
    return s;
}

namespace {
std::string cell(const BigRational& q) {
    return numerator(q).str() + "/" + denominator(q).str();
}
}  // namespace

std::string table_csv(const BivariateSeries& table) {
    std::ostringstream out;
    out << "n";
    for (int d = 1; d <= table.order_t(); ++d) out << ",d=" << d;
    out << "\n";
    for (int n = 1; n <= table.order_s(); ++n) {
        out << n;
        for (int d = 1; d <= table.order_t(); ++d) out << "," << cell(table.at(n, d));
        out << "\n";
    }
    return out.str();
}

std::string table_text(const BivariateSeries& table) {
    std::ostringstream out;
    for (int n = 1; n <= table.order_s(); ++n)
        for (int d = 1; d <= table.order_t(); ++d)
            out << "Q(" << 4 * n << "," << d << ")/pi^" << 4 * n << " = "
                << cell(table.at(n, d)) << "\n";
    return out.str();
}

OrderedJson table_record(const BivariateSeries& table) {
    OrderedJson j;
    j["kind"] = "table";
    j["max_n"] = table.order_s();
    j["max_d"] = table.order_t();
    OrderedJson entries = OrderedJson::array();
    for (int n = 1; n <= table.order_s(); ++n)
        for (int d = 1; d <= table.order_t(); ++d) {
            OrderedJson e;
            e["n"] = n;
            e["d"] = d;
            e["num"] = numerator(table.at(n, d)).str();
            e["den"] = denominator(table.at(n, d)).str();
            entries.push_back(e);
        }
    j["entries"] = entries;
    return j;
}

}  // namespace mzvq
