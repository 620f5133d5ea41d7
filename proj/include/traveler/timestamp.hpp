#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace traveler {

// A position in the video, in seconds from the start. Quantized to
// milliseconds so map keys compare exactly and renders are stable; the
// memory bank keys round to three decimals on insertion.
class Timestamp {
public:
    Timestamp() = default;
    explicit Timestamp(double seconds);
    static Timestamp from_millis(std::int64_t millis);

    double seconds() const;
    std::int64_t millis() const { return millis_; }

    // Dictionary-key form, always with a decimal part: "11.0", "1.25".
    std::string key() const;
    // Prompt form, integral values drop the decimal: "12", "1.25".
    std::string compact() const;

    auto operator<=>(const Timestamp&) const = default;

private:
    std::int64_t millis_ = 0;
};

// Clamps into [0, duration_seconds].
Timestamp clamp_to_video(Timestamp t, double duration_seconds);

// "44" for 44.0, "0.5" for 0.5. Used for prompt slots that carry seconds.
std::string format_seconds(double seconds);

}  // namespace traveler
