#include "mzvq/quarter_power.hpp"

#include <climits>

namespace mzvq {

int QuarterPowerPoly::max_exponent() const {
    return terms_.empty() ? INT_MIN : terms_.rbegin()->first;
}

BigRational QuarterPowerPoly::value_at_base_one() const {
    BigRational acc = 0;
    for (const auto& [e, c] : terms_) acc += c;
    return acc;
}

QuarterPowerPoly QuarterPowerPoly::scaled(const BigRational& c) const {
    QuarterPowerPoly r(base_);
    if (c == 0) return r;
    for (const auto& [e, coeff] : terms_) r.terms_.emplace(e, coeff * c);
    return r;
}

QuarterPowerPoly QuarterPowerPoly::exponent_shifted(int delta) const {
    QuarterPowerPoly r(base_);
    for (const auto& [e, coeff] : terms_) r.terms_.emplace(e + delta, coeff);
    return r;
}

QuarterPowerPoly operator+(const QuarterPowerPoly& a, const QuarterPowerPoly& b) {
    if (a.base_ != b.base_)
        throw std::invalid_argument("QuarterPowerPoly: base variable mismatch");
    QuarterPowerPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
}

QuarterPowerPoly operator-(const QuarterPowerPoly& a, const QuarterPowerPoly& b) {
    if (a.base_ != b.base_)
        throw std::invalid_argument("QuarterPowerPoly: base variable mismatch");
    QuarterPowerPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
    return r;
}

QuarterPowerPoly ddv(const QuarterPowerPoly& p) {
    if (p.base() != BaseVar::OneMinusV)
        throw std::invalid_argument("ddv: polynomial base is not (1-v)");
    QuarterPowerPoly r(BaseVar::OneMinusV);
    for (const auto& [e, c] : p.terms())
        r.add_term(e - 4, -c * BigRational(e, 4));
    return r;
}

QuarterPowerPoly ddu(const QuarterPowerPoly& p) {
    if (p.base() != BaseVar::U)
        throw std::invalid_argument("ddu: polynomial base is not u");
    QuarterPowerPoly r(BaseVar::U);
    for (const auto& [e, c] : p.terms()) {
        if (e % 4 != 0)
            throw std::invalid_argument("ddu: fractional power of u");
        if (e != 0) r.add_term(e - 4, c * BigRational(e, 4));
    }
    return r;
}

}  // namespace mzvq
