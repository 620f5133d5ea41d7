#pragma once

#include <stdexcept>

namespace traveler {

// All loop parameters. Defaults follow the best-performing settings: a
// 5-frame retrieval window (halfwidth 2), 3 extractor questions, 5 memory
// init frames, 4 iterations, and a 150-token LMM response cap.
struct RunConfig {
    int window_halfwidth = 2;       // frames per retrieval = 2w+1
    int num_questions = 3;          // extractor questions per frame
    int memory_init_count = 5;      // evenly sampled frames seeding memory
    int max_iterations = 4;         // forced answer on the last iteration
    int summarize_threshold_chars = 12000;
    int lmm_max_tokens = 150;
    double grid_step_seconds = 1.0;  // spacing of window frames
    double temperature = 0.0;

    // Ablation switches.
    bool no_planner = false;        // fixed generic plan, planner never called
    bool captions_only = false;     // no extractor questions, QA lists stay empty
    bool uniform_sampling = false;  // evenly spread timestamps, retriever never called

    // Send every window frame with each VQA request when the backend takes
    // multiple images; otherwise only the center frame is attached.
    bool vqa_uses_window_frames = true;

    int effective_num_questions() const { return captions_only ? 0 : num_questions; }

    void validate() const {
        if (window_halfwidth < 0) throw std::invalid_argument("window_halfwidth must be >= 0");
        if (num_questions < 0) throw std::invalid_argument("num_questions must be >= 0");
        if (memory_init_count < 1) throw std::invalid_argument("memory_init_count must be >= 1");
        if (max_iterations < 1) throw std::invalid_argument("max_iterations must be >= 1");
        if (summarize_threshold_chars < 1) {
            throw std::invalid_argument("summarize_threshold_chars must be >= 1");
        }
        if (lmm_max_tokens < 1) throw std::invalid_argument("lmm_max_tokens must be >= 1");
        if (grid_step_seconds <= 0.0) throw std::invalid_argument("grid_step_seconds must be > 0");
        if (temperature < 0.0) throw std::invalid_argument("temperature must be >= 0");
    }
};

}  // namespace traveler
