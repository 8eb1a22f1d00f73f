#pragma once
// The assembled input handed to the generator backend: the clip list plus
// level-dependent labeled text sections. Lines carry the score used by the
// truncation policy (clip refs are never dropped).

#include "adavrag/types.hpp"

#include <string>
#include <vector>

namespace adavrag {

struct ClipRef {
    std::string video_id;
    int clip_id = 0;
    double start_s = 0.0;
    double end_s = 0.0;
};

struct ContextLine {
    std::string text;
    double score = 0.0;
};

struct ContextSection {
    std::string label; // AUX_TEXTS or GRAPH_CONTEXT
    std::vector<ContextLine> lines;
};

struct GenerationContext {
    Level level = Level::L1;
    std::vector<ClipRef> clip_refs;
    std::vector<ContextSection> sections;
    std::string query;
    bool degraded = false; // empty pool fell back to whole-video refs

    bool has_section(const std::string& label) const {
        for (const auto& s : sections)
            if (s.label == label) return true;
        return false;
    }

    std::string serialize() const;
    // Whitespace-split word count of the serialization, the token budget proxy.
    std::size_t word_count() const;
};

} // namespace adavrag
