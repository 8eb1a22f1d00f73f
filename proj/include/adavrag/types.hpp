#pragma once
// Core domain types shared across the pipeline: the video and its clips,
// sampled frames, modality-tagged text chunks, vision entries, and the
// routing decision.

#include "adavrag/embedding.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace adavrag {

enum class Modality { caption, asr, ocr };

inline const char* modality_name(Modality m) {
    switch (m) {
        case Modality::caption: return "caption";
        case Modality::asr: return "asr";
        case Modality::ocr: return "ocr";
    }
    return "?";
}

// One clip's pre-extracted fixture content. Raw media goes through an
// external extractor that produces the same shape.
struct ClipFixture {
    std::string caption;
    std::string asr;
    std::string ocr;
    std::vector<std::string> frame_labels;
};

// The input video plus its clip source.
struct MediaBundle {
    std::string video_id;
    double duration_s = 0.0;
    double clip_len_s = 30.0;
    std::vector<ClipFixture> clips; // indexed by clip_id
};

// One fixed-interval clip with its sampling times filled in later.
struct ClipRecord {
    int clip_id = 0;
    double start_s = 0.0;
    double end_s = 0.0;

    double length_s() const { return end_s - start_s; }
};

// Reference to one sampled frame. `label` is resolved lazily by the mock
// gateway from the bound fixture when empty.
struct FrameRef {
    int clip_id = 0;
    int frame_index = 0;
    double time_s = 0.0;
    std::string label;
};

struct FrameSet {
    std::string video_id;
    int clip_id = 0;
    std::vector<FrameRef> frames;

    std::vector<double> times_s() const {
        std::vector<double> t;
        t.reserve(frames.size());
        for (const auto& f : frames) t.push_back(f.time_s);
        return t;
    }
};

// Reference into a bundle's audio track for one clip.
struct AudioRef {
    std::string video_id;
    int clip_id = 0;
};

// One modality-tagged text unit with provenance and embedding.
struct TextChunk {
    std::string chunk_id;
    std::string video_id;
    int clip_id = 0;
    Modality modality = Modality::caption;
    std::string text;
    EmbeddingVector embedding;
    double start_s = 0.0;
    double end_s = 0.0;
    bool empty_flag = false; // silent clip / no scene text

    bool operator==(const TextChunk& o) const {
        return chunk_id == o.chunk_id && video_id == o.video_id && clip_id == o.clip_id &&
               modality == o.modality && text == o.text && embedding == o.embedding &&
               start_s == o.start_s && end_s == o.end_s && empty_flag == o.empty_flag;
    }
};

// Concatenated frame features for one clip.
struct VisionEntry {
    std::string video_id;
    int clip_id = 0;
    EmbeddingVector embedding;

    bool operator==(const VisionEntry& o) const {
        return video_id == o.video_id && clip_id == o.clip_id && embedding == o.embedding;
    }
};

enum class Level { L1 = 1, L2 = 2, L3 = 3 };
enum class LevelSource { llm, heuristic, forced };

inline const char* level_name(Level l) {
    switch (l) {
        case Level::L1: return "L1";
        case Level::L2: return "L2";
        case Level::L3: return "L3";
    }
    return "?";
}

inline const char* level_source_name(LevelSource s) {
    switch (s) {
        case LevelSource::llm: return "llm";
        case LevelSource::heuristic: return "heuristic";
        case LevelSource::forced: return "forced";
    }
    return "?";
}

// The routing decision. `level` is always populated; the fallback chain
// guarantees totality for non-empty queries.
struct IntentLevel {
    Level level = Level::L1;
    LevelSource source = LevelSource::heuristic;
    std::string raw_output;
};

// A retrieved clip with its alignment score (graph hits carry score 0).
struct ClipHit {
    std::string video_id;
    int clip_id = 0;
    double start_s = 0.0;
    double score = 0.0;
};

} // namespace adavrag
