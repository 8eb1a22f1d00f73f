#pragma once
// Turns a video (or a pre-extracted bundle) into fixed-interval clips,
// uniformly sampled frames, and modality-tagged text chunks.

#include "adavrag/gateway.hpp"
#include "adavrag/types.hpp"

#include <string>
#include <vector>

namespace adavrag {

// Fixed-interval segmentation covering [0, duration_s) exactly. A trailing
// remainder shorter than 1 s is merged into the previous clip so no clip is
// ever too short to carry evidence.
std::vector<ClipRecord> segment_video(const MediaBundle& bundle, double clip_len_s);

// Uniform sampling at subinterval midpoints:
//   t_i = start + (i + 0.5) * (end - start) / n
// Midpoints avoid duplicate boundary frames between adjacent clips.
FrameSet sample_frames(const std::string& video_id, const ClipRecord& clip, int n);

struct ClipTexts {
    TextChunk caption;
    TextChunk asr;
    TextChunk ocr;
};

// Runs the captioner / ASR / OCR backends for one clip. ASR and OCR may be
// empty (flagged); the caption must be non-empty.
ClipTexts extract_clip_texts(const std::string& video_id, const ClipRecord& clip,
                             const FrameSet& frames, ModelGateway& gateway);

// Loads a fixture directory (manifest.json + clips/<id>.json), or runs the
// configured extractor command over raw media to produce the same layout.
// The extractor template takes placeholders {input}, {clip_start},
// {clip_end}, {outdir} and is invoked once per clip; raw media needs a
// sidecar "<path>.json" manifest supplying video_id and duration_s.
MediaBundle build_media_bundle(const std::string& path,
                               const std::string& extractor_cmd_template = "");

} // namespace adavrag
