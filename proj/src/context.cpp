#include "adavrag/context.hpp"

#include <cctype>
#include <set>
#include <sstream>

namespace adavrag {

std::string GenerationContext::serialize() const {
    std::ostringstream out;
    out << "QUERY: " << query << "\n";
    out << "LEVEL: " << level_name(level) << "\n";
    std::set<std::string> videos;
    for (const auto& c : clip_refs) videos.insert(c.video_id);
    out << "CLIPS: ";
    for (std::size_t i = 0; i < clip_refs.size(); ++i) {
        if (i) out << ",";
        if (videos.size() > 1) out << clip_refs[i].video_id << ":";
        out << clip_refs[i].clip_id;
    }
    out << "\n";
    for (const auto& section : sections) {
        out << section.label << ":\n";
        for (const auto& line : section.lines) out << line.text << "\n";
    }
    return out.str();
}

std::size_t GenerationContext::word_count() const {
    std::string s = serialize();
    std::size_t count = 0;
    bool in_word = false;
    for (unsigned char c : s) {
        if (std::isspace(c)) {
            in_word = false;
        } else if (!in_word) {
            in_word = true;
            ++count;
        }
    }
    return count;
}

} // namespace adavrag
