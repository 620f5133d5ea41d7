#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace traveler {

// A multiple-choice question. answer_index is ground truth and only present
// when the harness scores runs.
struct Question {
    std::string text;
    std::vector<std::string> choices;
    std::optional<int> answer_index;
    std::optional<std::string> category;

    // Zero-indexed "0: <text>" lines, the form embedded in prompts and the
    // parse target for answer indices.
    std::string choices_block() const;

    void validate() const;  // throws std::invalid_argument
};

// The traversal plan: an ordered list of instruction steps. raw keeps the
// verbatim model output for traces.
struct Plan {
    std::vector<std::string> steps;
    std::string raw;

    // "1. <step>" lines, the form embedded in downstream prompts.
    std::string numbered() const;
};

// Evaluator outcome: either the chosen answer index, or a continue signal
// carrying the explanation that seeds the next plan.
class Verdict {
public:
    static Verdict answer(int index) { return Verdict(index); }
    static Verdict carry_on(std::string explanation) { return Verdict(std::move(explanation)); }

    bool is_answer() const { return std::holds_alternative<int>(v_); }
    int answer_index() const { return std::get<int>(v_); }
    const std::string& explanation() const { return std::get<std::string>(v_); }

private:
    explicit Verdict(int index) : v_(index) {}
    explicit Verdict(std::string explanation) : v_(std::move(explanation)) {}
    std::variant<int, std::string> v_;
};

struct VideoMeta {
    std::string id;
    double duration_seconds = 0.0;

    void validate() const;  // throws std::invalid_argument
};

}  // namespace traveler
