#include "traveler/memory.hpp"

#include <cctype>
#include <cstdlib>

namespace traveler {

namespace {

std::string escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '\\': out += "\\\\"; break;
            case '"': out += "\\\""; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default: out += c;
        }
    }
    return out;
}

struct Scanner {
    const std::string& text;
    std::size_t pos = 0;

    bool done() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }

    void skip_ws() {
        while (!done() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool consume(char c) {
        skip_ws();
        if (done() || text[pos] != c) return false;
        ++pos;
        return true;
    }

    std::optional<double> number() {
        skip_ws();
        if (done()) return std::nullopt;
        const char* begin = text.c_str() + pos;
        char* end = nullptr;
        double v = std::strtod(begin, &end);
        if (end == begin) return std::nullopt;
        pos += static_cast<std::size_t>(end - begin);
        return v;
    }

    std::optional<std::string> quoted_string() {
        skip_ws();
        if (done() || text[pos] != '"') return std::nullopt;
        ++pos;
        std::string out;
        while (!done()) {
            char c = text[pos++];
            if (c == '"') return out;
            if (c == '\\' && !done()) {
                char e = text[pos++];
                switch (e) {
                    case 'n': out += '\n'; break;
                    case 'r': out += '\r'; break;
                    case 't': out += '\t'; break;
                    default: out += e;
                }
            } else {
                out += c;
            }
        }
        return std::nullopt;  // unterminated
    }
};

const std::string kCaptionPrefix = "Caption: ";
const std::string kQuestionPrefix = "Q: ";
const std::string kAnswerSep = " A: ";

std::optional<MemoryEntry> entry_from_items(const std::vector<std::string>& items) {
    if (items.empty()) return std::nullopt;
    if (items.front().rfind(kCaptionPrefix, 0) != 0) return std::nullopt;
    MemoryEntry entry;
    entry.caption = items.front().substr(kCaptionPrefix.size());
    if (entry.caption.empty()) return std::nullopt;
    for (std::size_t i = 1; i < items.size(); ++i) {
        const std::string& item = items[i];
        if (item.rfind(kQuestionPrefix, 0) != 0) return std::nullopt;
        std::size_t sep = item.find(kAnswerSep, kQuestionPrefix.size());
        if (sep == std::string::npos) return std::nullopt;
        QAPair qa;
        qa.question = item.substr(kQuestionPrefix.size(), sep - kQuestionPrefix.size());
        qa.answer = item.substr(sep + kAnswerSep.size());
        if (qa.question.empty() || qa.answer.empty()) return std::nullopt;
        entry.qa.push_back(std::move(qa));
    }
    return entry;
}

}  // namespace

void MemoryBank::insert(Timestamp t, MemoryEntry entry) {
    auto it = entries_.find(t);
    if (it == entries_.end()) {
        entries_.emplace(t, std::move(entry));
        return;
    }
    auto& qa = it->second.qa;
    qa.insert(qa.end(), std::make_move_iterator(entry.qa.begin()),
              std::make_move_iterator(entry.qa.end()));
}

std::string MemoryBank::render() const {
    std::string out = "{";
    bool first_entry = true;
    for (const auto& [t, entry] : entries_) {
        if (!first_entry) out += ", ";
        first_entry = false;
        out += t.key();
        out += ": [\"Caption: ";
        out += escape(entry.caption);
        out += '"';
        for (const QAPair& qa : entry.qa) {
            out += ", \"Q: ";
            out += escape(qa.question);
            out += " A: ";
            out += escape(qa.answer);
            out += '"';
        }
        out += ']';
    }
    out += '}';
    return out;
}

std::size_t MemoryBank::char_size() const {
    return render().size();
}

std::optional<MemoryBank> MemoryBank::parse_render(const std::string& text) {
    std::size_t open = text.find('{');
    std::size_t close = text.rfind('}');
    if (open == std::string::npos || close == std::string::npos || close < open) {
        return std::nullopt;
    }
    std::string body = text.substr(open + 1, close - open - 1);
    Scanner sc{body};

    MemoryBank bank;
    sc.skip_ws();
    while (!sc.done()) {
        auto key = sc.number();
        if (!key) return std::nullopt;
        if (!sc.consume(':')) return std::nullopt;
        if (!sc.consume('[')) return std::nullopt;

        std::vector<std::string> items;
        sc.skip_ws();
        if (!sc.consume(']')) {
            while (true) {
                auto item = sc.quoted_string();
                if (!item) return std::nullopt;
                items.push_back(std::move(*item));
                if (sc.consume(']')) break;
                if (!sc.consume(',')) return std::nullopt;
            }
        }
        auto entry = entry_from_items(items);
        if (!entry) return std::nullopt;

        Timestamp t(*key);
        if (bank.entries_.count(t)) return std::nullopt;  // duplicate key
        bank.entries_.emplace(t, std::move(*entry));

        sc.skip_ws();
        if (sc.done()) break;
        if (!sc.consume(',')) return std::nullopt;
        sc.skip_ws();
    }
    return bank;
}

bool MemoryBank::same_keys(const MemoryBank& other) const {
    if (entries_.size() != other.entries_.size()) return false;
    auto a = entries_.begin();
    auto b = other.entries_.begin();
    for (; a != entries_.end(); ++a, ++b) {
        if (a->first != b->first) return false;
    }
    return true;
}

std::vector<Timestamp> MemoryBank::keys() const {
    std::vector<Timestamp> out;
    out.reserve(entries_.size());
    for (const auto& [t, entry] : entries_) out.push_back(t);
    return out;
}

}  // namespace traveler
