#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "traveler/timestamp.hpp"

namespace traveler {

struct QAPair {
    std::string question;
    std::string answer;

    bool operator==(const QAPair&) const = default;
};

// What one visited frame contributed: a caption plus the question-answer
// pairs extracted from it. The QA list is empty for caption-only entries.
struct MemoryEntry {
    std::string caption;
    std::vector<QAPair> qa;
};

// Ordered store of per-frame information keyed by timestamp. Iteration is
// always ascending; inserting at an existing key merges instead of
// overwriting so collected evidence is never lost.
class MemoryBank {
public:
    // Merge rule: a new key is inserted in sort order; an existing key keeps
    // its original caption and appends the incoming QA pairs.
    void insert(Timestamp t, MemoryEntry entry);

    // Dictionary-style text, e.g.
    //   {5.0: ["Caption: a boy on a slide", "Q: what now A: he waits"]}
    // Keys ascend; equal banks render byte-identically.
    std::string render() const;

    // Length of render() in characters.
    std::size_t char_size() const;

    // Inverse of render(), tolerant of surrounding prose. Returns nullopt if
    // the text is not a well-formed bank (used to gate summarizer output).
    static std::optional<MemoryBank> parse_render(const std::string& text);

    bool same_keys(const MemoryBank& other) const;

    bool empty() const { return entries_.empty(); }
    std::size_t size() const { return entries_.size(); }
    const std::map<Timestamp, MemoryEntry>& entries() const { return entries_; }
    std::vector<Timestamp> keys() const;

private:
    std::map<Timestamp, MemoryEntry> entries_;
};

}  // namespace traveler
