#include "traveler/types.hpp"

namespace traveler {

std::string Question::choices_block() const {
    std::string out;
    for (std::size_t i = 0; i < choices.size(); ++i) {
        if (i) out += '\n';
        out += std::to_string(i);
        out += ": ";
        out += choices[i];
    }
    return out;
}

void Question::validate() const {
    if (text.empty()) throw std::invalid_argument("question text is empty");
    if (choices.size() < 2) throw std::invalid_argument("question needs at least 2 choices");
    if (answer_index &&
        (*answer_index < 0 || *answer_index >= static_cast<int>(choices.size()))) {
        throw std::invalid_argument("answer_index out of range");
    }
}

std::string Plan::numbered() const {
    std::string out;
    for (std::size_t i = 0; i < steps.size(); ++i) {
        if (i) out += '\n';
        out += std::to_string(i + 1);
        out += ". ";
        out += steps[i];
    }
    return out;
}

void VideoMeta::validate() const {
    if (duration_seconds <= 0.0) throw std::invalid_argument("video duration must be positive");
}

}  // namespace traveler
