#include "adavrag/ingestion.hpp"

#include "adavrag/textutil.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>

namespace adavrag {

namespace fs = std::filesystem;
using nlohmann::json;

std::vector<ClipRecord> segment_video(const MediaBundle& bundle, double clip_len_s) {
    if (clip_len_s <= 0.0) throw std::invalid_argument("clip_len_s must be positive");
    if (bundle.duration_s <= 0.0) throw MalformedBundle("bundle duration must be positive");

    std::vector<ClipRecord> clips;
    const int n = static_cast<int>(std::ceil(bundle.duration_s / clip_len_s));
    for (int i = 0; i < n; ++i) {
        ClipRecord clip;
        clip.clip_id = i;
        clip.start_s = i * clip_len_s;
        clip.end_s = std::min((i + 1) * clip_len_s, bundle.duration_s);
        clips.push_back(clip);
    }
    // Sub-second remainder merges into the previous clip.
    if (clips.size() > 1 && clips.back().length_s() < 1.0) {
        clips[clips.size() - 2].end_s = clips.back().end_s;
        clips.pop_back();
    }
    return clips;
}

FrameSet sample_frames(const std::string& video_id, const ClipRecord& clip, int n) {
    if (n < 1) throw std::invalid_argument("frame count must be >= 1");
    FrameSet set;
    set.video_id = video_id;
    set.clip_id = clip.clip_id;
    const double step = (clip.end_s - clip.start_s) / n;
    for (int i = 0; i < n; ++i) {
        FrameRef ref;
        ref.clip_id = clip.clip_id;
        ref.frame_index = i;
        ref.time_s = clip.start_s + (i + 0.5) * step;
        set.frames.push_back(ref);
    }
    return set;
}

namespace {

TextChunk make_chunk(const std::string& video_id, const ClipRecord& clip, Modality modality,
                     std::string text) {
    TextChunk chunk;
    chunk.video_id = video_id;
    chunk.clip_id = clip.clip_id;
    chunk.modality = modality;
    chunk.chunk_id =
        video_id + ":c" + std::to_string(clip.clip_id) + ":" + modality_name(modality);
    chunk.start_s = clip.start_s;
    chunk.end_s = clip.end_s;
    chunk.text = std::move(text);
    chunk.empty_flag = trim(chunk.text).empty();
    return chunk;
}

} // namespace

ClipTexts extract_clip_texts(const std::string& video_id, const ClipRecord& clip,
                             const FrameSet& frames, ModelGateway& gateway) {
    ClipTexts out;

    std::string caption;
    try {
        caption = gateway.caption_frames(frames);
    } catch (const Error& e) {
        throw ExtractionFailed("captioner", e.what());
    }
    if (trim(caption).empty()) {
        throw EmptyCaption("clip " + std::to_string(clip.clip_id) + " produced no caption");
    }
    out.caption = make_chunk(video_id, clip, Modality::caption, caption);

    try {
        out.asr = make_chunk(video_id, clip, Modality::asr,
                             gateway.transcribe_audio({video_id, clip.clip_id}));
    } catch (const Error& e) {
        throw ExtractionFailed("asr", e.what());
    }

    try {
        out.ocr = make_chunk(video_id, clip, Modality::ocr, gateway.ocr_frames(frames));
    } catch (const Error& e) {
        throw ExtractionFailed("ocr", e.what());
    }

    return out;
}

namespace {

json read_json_file(const fs::path& path, const char* what) {
    std::ifstream in(path);
    if (!in) throw MalformedBundle(std::string("cannot open ") + what + ": " + path.string());
    json doc = json::parse(in, nullptr, false);
    if (doc.is_discarded()) {
        throw MalformedBundle(std::string("invalid JSON in ") + what + ": " + path.string());
    }
    return doc;
}

MediaBundle load_fixture_dir(const fs::path& dir) {
    const fs::path manifest_path = dir / "manifest.json";
    if (!fs::exists(manifest_path)) {
        throw MalformedBundle("missing manifest.json in " + dir.string());
    }
    json manifest = read_json_file(manifest_path, "manifest");

    MediaBundle bundle;
    try {
        bundle.video_id = manifest.at("video_id").get<std::string>();
        bundle.duration_s = manifest.at("duration_s").get<double>();
        bundle.clip_len_s = manifest.value("clip_len_s", 30.0);
    } catch (const json::exception& e) {
        throw MalformedBundle("manifest fields invalid: " + std::string(e.what()));
    }
    if (bundle.duration_s <= 0.0) throw MalformedBundle("duration_s must be positive");
    if (bundle.video_id.empty()) throw MalformedBundle("video_id must be non-empty");

    const int n_clips =
        static_cast<int>(segment_video(bundle, bundle.clip_len_s).size());
    for (int i = 0; i < n_clips; ++i) {
        const fs::path clip_path = dir / "clips" / (std::to_string(i) + ".json");
        if (!fs::exists(clip_path)) {
            throw MalformedBundle("missing clip entry: " + clip_path.string());
        }
        json doc = read_json_file(clip_path, "clip");
        ClipFixture fx;
        fx.caption = doc.value("caption", "");
        fx.asr = doc.value("asr", "");
        fx.ocr = doc.value("ocr", "");
        if (doc.contains("frame_labels")) {
            for (const auto& label : doc["frame_labels"]) {
                fx.frame_labels.push_back(label.get<std::string>());
            }
        }
        bundle.clips.push_back(std::move(fx));
    }
    return bundle;
}

std::string substitute(std::string tmpl, const std::string& key, const std::string& value) {
    std::string needle = "{" + key + "}";
    std::size_t pos = 0;
    while ((pos = tmpl.find(needle, pos)) != std::string::npos) {
        tmpl.replace(pos, needle.size(), value);
        pos += value.size();
    }
    return tmpl;
}

MediaBundle extract_raw_media(const fs::path& media, const std::string& cmd_template) {
    if (cmd_template.empty()) {
        throw MalformedBundle("raw media requires a configured extractor command: " +
                              media.string());
    }
    const fs::path sidecar = media.string() + ".json";
    if (!fs::exists(sidecar)) {
        throw MalformedBundle("raw media needs a sidecar manifest: " + sidecar.string());
    }
    json manifest = read_json_file(sidecar, "sidecar manifest");
    MediaBundle probe;
    probe.video_id = manifest.at("video_id").get<std::string>();
    probe.duration_s = manifest.at("duration_s").get<double>();
    probe.clip_len_s = manifest.value("clip_len_s", 30.0);

    const fs::path outdir =
        fs::temp_directory_path() / ("adavrag_extract_" + probe.video_id);
    fs::create_directories(outdir / "clips");
    {
        std::ofstream out(outdir / "manifest.json");
        out << manifest.dump(2) << "\n";
    }

    for (const ClipRecord& clip : segment_video(probe, probe.clip_len_s)) {
        std::string cmd = cmd_template;
        cmd = substitute(cmd, "input", media.string());
        cmd = substitute(cmd, "clip_start", std::to_string(clip.start_s));
        cmd = substitute(cmd, "clip_end", std::to_string(clip.end_s));
        cmd = substitute(cmd, "outdir", outdir.string());
        if (std::system(cmd.c_str()) != 0) {
            throw MalformedBundle("extractor command failed for clip " +
                                  std::to_string(clip.clip_id));
        }
    }
    return load_fixture_dir(outdir);
}

} // namespace

MediaBundle build_media_bundle(const std::string& path, const std::string& extractor_cmd_template) {
    const fs::path p(path);
    if (!fs::exists(p)) throw PathNotFound("no such path: " + path);
    if (fs::is_directory(p)) return load_fixture_dir(p);
    return extract_raw_media(p, extractor_cmd_template);
}

} // namespace adavrag
