#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "traveler/memory.hpp"
#include "traveler/timestamp.hpp"
#include "traveler/types.hpp"

namespace traveler {

// Thrown when a template slot has no binding or a marker survives rendering.
class RenderError : public std::runtime_error {
public:
    RenderError(std::string slot, const std::string& template_name);
    const std::string& slot() const { return slot_; }

private:
    std::string slot_;
};

// Replaces every {SLOT} marker (uppercase name) in body with its binding.
// Substituted values are spliced, never re-scanned. Throws RenderError on a
// marker without a binding.
std::string render_template(const std::string& body,
                            const std::map<std::string, std::string>& bindings,
                            const std::string& template_name);

// The stage prompt templates, loaded from text assets so prompt edits need
// no rebuild. Immutable after load; safe to share across concurrent renders.
class TemplateSet {
public:
    // Reads planner/retriever/extractor/evaluator/evaluator_forced/
    // summarizer/captioner .txt from dir. Throws on a missing file.
    static TemplateSet load_dir(const std::filesystem::path& dir);

    // TRAVELER_PROMPTS_DIR if set, else the directory baked in at build time.
    static TemplateSet load_default();

    std::string planner(const Question& q, const std::string& memory_text,
                        const std::optional<std::string>& explanation) const;
    std::string retriever(const Question& q, const Plan& plan, const std::string& memory_text,
                          Timestamp current, double window_seconds,
                          double length_seconds) const;
    std::string extractor(const Question& q, const Plan& plan, const std::string& memory_text,
                          const std::string& caption, Timestamp current, double length_seconds,
                          int n_questions) const;
    std::string evaluator(const Question& q, const Plan& plan, const std::string& memory_text,
                          bool forced) const;
    std::string summarizer(const std::string& memory_text) const;
    const std::string& captioner() const { return captioner_; }

    const std::string& body(const std::string& name) const;

private:
    std::map<std::string, std::string> bodies_;
    std::string captioner_;
};

}  // namespace traveler
