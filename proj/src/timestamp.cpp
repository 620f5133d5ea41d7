#include "traveler/timestamp.hpp"

#include <algorithm>
#include <cmath>

namespace traveler {

namespace {

std::string millis_to_string(std::int64_t ms, bool keep_decimal) {
    bool negative = ms < 0;
    std::int64_t abs_ms = negative ? -ms : ms;
    std::int64_t whole = abs_ms / 1000;
    std::int64_t frac = abs_ms % 1000;

    std::string out = negative ? "-" : "";
    out += std::to_string(whole);
    if (frac == 0) {
        if (keep_decimal) out += ".0";
        return out;
    }
    char buf[8];
    std::snprintf(buf, sizeof(buf), "%03lld", static_cast<long long>(frac));
    std::string digits(buf);
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
    out += '.';
    out += digits;
    return out;
}

}  // namespace

Timestamp::Timestamp(double seconds) {
    if (!std::isfinite(seconds)) {
        millis_ = 0;
        return;
    }
    millis_ = static_cast<std::int64_t>(std::llround(seconds * 1000.0));
}

Timestamp Timestamp::from_millis(std::int64_t millis) {
    Timestamp t;
    t.millis_ = millis;
    return t;
}

double Timestamp::seconds() const {
    return static_cast<double>(millis_) / 1000.0;
}

std::string Timestamp::key() const {
    return millis_to_string(millis_, true);
}

std::string Timestamp::compact() const {
    return millis_to_string(millis_, false);
}

Timestamp clamp_to_video(Timestamp t, double duration_seconds) {
    std::int64_t hi = Timestamp(duration_seconds).millis();
    return Timestamp::from_millis(std::clamp<std::int64_t>(t.millis(), 0, hi));
}

std::string format_seconds(double seconds) {
    return Timestamp(seconds).compact();
}

}  // namespace traveler
