#include "adavrag/gateway.hpp"

#include "adavrag/textutil.hpp"

#define CPPHTTPLIB_NO_EXCEPTIONS
#include <httplib.h>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace adavrag {

using nlohmann::json;

const char* backend_role_name(BackendRole role) {
    switch (role) {
        case BackendRole::captioner: return "captioner";
        case BackendRole::asr: return "asr";
        case BackendRole::ocr: return "ocr";
        case BackendRole::text_embedder: return "text_embedder";
        case BackendRole::frame_embedder: return "frame_embedder";
        case BackendRole::llm: return "llm";
        case BackendRole::generator: return "generator";
    }
    return "?";
}

BackendRole backend_role_from_name(const std::string& name) {
    for (BackendRole r : all_backend_roles) {
        if (name == backend_role_name(r)) return r;
    }
    throw ConfigError("unknown backend role: " + name);
}

void BackendConfig::validate() const {
    if (endpoint != "mock" && endpoint.rfind("http://", 0) != 0 &&
        endpoint.rfind("https://", 0) != 0) {
        throw ConfigError("backend endpoint must be \"mock\" or an http(s) URL: " + endpoint);
    }
    if (endpoint != "mock") {
        auto host_start = endpoint.find("://") + 3;
        if (host_start >= endpoint.size() || endpoint[host_start] == '/') {
            throw ConfigError("backend endpoint URL has no host: " + endpoint);
        }
    }
    if (timeout_ms <= 0) throw ConfigError("timeout_ms must be positive");
    if (max_retries < 0) throw ConfigError("max_retries must be non-negative");
    if (dim <= 0) throw ConfigError("embedding dim must be positive");
}

// ---------------------------------------------------------------------------
// Mock gateway
// ---------------------------------------------------------------------------

namespace {

// Grab the remainder of the line following `marker`, or "" if absent.
std::string line_after(const std::string& text, const std::string& marker) {
    auto pos = text.find(marker);
    if (pos == std::string::npos) return "";
    pos += marker.size();
    auto eol = text.find('\n', pos);
    if (eol == std::string::npos) eol = text.size();
    return trim(text.substr(pos, eol - pos));
}

// Grab everything after `marker` to the end of the text.
std::string rest_after(const std::string& text, const std::string& marker) {
    auto pos = text.find(marker);
    if (pos == std::string::npos) return "";
    return trim(text.substr(pos + marker.size()));
}

std::string strip_question(const std::string& q) {
    std::string s = trim(q);
    while (!s.empty() && (s.back() == '?' || s.back() == '.' || s.back() == '!')) s.pop_back();
    return trim(s);
}

bool contains_any(const std::string& haystack_lower, const std::vector<std::string>& needles) {
    for (const auto& n : needles) {
        if (haystack_lower.find(n) != std::string::npos) return true;
    }
    return false;
}

// Case-preserving tokens, for the capitalized-run entity heuristic.
std::vector<std::string> raw_tokens(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    for (unsigned char c : text) {
        if (std::isalnum(c)) {
            cur.push_back(static_cast<char>(c));
        } else if (!cur.empty()) {
            out.push_back(cur);
            cur.clear();
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

bool is_upper_initial(const std::string& tok) {
    return !tok.empty() && std::isupper(static_cast<unsigned char>(tok[0]));
}

bool is_all_digits(const std::string& tok) {
    return !tok.empty() &&
           std::all_of(tok.begin(), tok.end(),
                       [](unsigned char c) { return std::isdigit(c); });
}

} // namespace

EmbeddingVector MockGateway::token_vector(const std::string& token, int dim) {
    SplitMix64 rng(fnv1a64(token));
    EmbeddingVector v;
    v.values.resize(static_cast<std::size_t>(dim));
    for (int i = 0; i < dim; ++i) {
        double u1 = rng.next_unit();
        double u2 = rng.next_unit();
        v.values[static_cast<std::size_t>(i)] =
            std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }
    v.normalize();
    return v;
}

EmbeddingVector MockGateway::embed_text(const std::string& text) {
    auto tokens = tokenize(text);
    if (tokens.empty()) throw EmptyText("embed_text: empty text");
    EmbeddingVector sum;
    sum.values.assign(static_cast<std::size_t>(dim_), 0.0);
    for (const auto& tok : tokens) {
        EmbeddingVector tv = token_vector(tok, dim_);
        for (std::size_t i = 0; i < sum.values.size(); ++i) sum.values[i] += tv.values[i];
    }
    sum.normalize();
    if (sum.norm() == 0.0) throw EmptyText("embed_text: degenerate token sum");
    return sum;
}

const ClipFixture* MockGateway::fixture_clip(const std::string& video_id, int clip_id) const {
    if (!bundle_ || bundle_->video_id != video_id) return nullptr;
    if (clip_id < 0 || static_cast<std::size_t>(clip_id) >= bundle_->clips.size()) return nullptr;
    return &bundle_->clips[static_cast<std::size_t>(clip_id)];
}

namespace {

std::string resolve_label(const ClipFixture* fx, const FrameRef& frame) {
    if (!frame.label.empty()) return frame.label;
    if (fx && !fx->frame_labels.empty()) {
        std::size_t idx = std::min<std::size_t>(static_cast<std::size_t>(frame.frame_index),
                                                fx->frame_labels.size() - 1);
        return fx->frame_labels[idx];
    }
    return "clip " + std::to_string(frame.clip_id) + " frame " + std::to_string(frame.frame_index);
}

} // namespace

EmbeddingVector MockGateway::embed_frames(const FrameSet& frames) {
    if (frames.frames.empty()) throw EmptyFrameSet("embed_frames: no frames");
    const ClipFixture* fx = fixture_clip(frames.video_id, frames.clip_id);
    EmbeddingVector out;
    out.values.reserve(frames.frames.size() * static_cast<std::size_t>(dim_));
    for (const auto& frame : frames.frames) {
        EmbeddingVector fv = embed_text(resolve_label(fx, frame));
        out.values.insert(out.values.end(), fv.values.begin(), fv.values.end());
    }
    out.normalize();
    return out;
}

std::string MockGateway::caption_frames(const FrameSet& frames) {
    if (frames.frames.empty()) throw EmptyFrameSet("caption_frames: no frames");
    const ClipFixture* fx = fixture_clip(frames.video_id, frames.clip_id);
    if (fx) return fx->caption;
    std::string joined;
    for (const auto& frame : frames.frames) {
        if (!joined.empty()) joined += "; ";
        joined += resolve_label(nullptr, frame);
    }
    return joined;
}

std::string MockGateway::transcribe_audio(const AudioRef& segment) {
    const ClipFixture* fx = fixture_clip(segment.video_id, segment.clip_id);
    if (!fx) {
        throw MissingAudio("no audio for " + segment.video_id + " clip " +
                           std::to_string(segment.clip_id));
    }
    return fx->asr;
}

std::string MockGateway::ocr_frames(const FrameSet& frames) {
    if (frames.frames.empty()) throw EmptyFrameSet("ocr_frames: no frames");
    const ClipFixture* fx = fixture_clip(frames.video_id, frames.clip_id);
    return fx ? fx->ocr : "";
}

std::string MockGateway::generate_answer(const GenerationContext& context,
                                         const std::string& query) {
    if (trim(query).empty()) throw EmptyQuery("generate_answer: empty query");
    if (context.word_count() > token_budget_) {
        throw ContextTooLarge("context of " + std::to_string(context.word_count()) +
                              " words exceeds budget " + std::to_string(token_budget_));
    }
    std::string ids;
    for (const auto& ref : context.clip_refs) {
        if (!ids.empty()) ids += ",";
        ids += std::to_string(ref.clip_id);
    }
    return std::string(level_name(context.level)) + "|clips=" + ids;
}

std::string MockGateway::complete_text(const std::string& prompt, LlmTask) {
    if (trim(prompt).empty()) throw std::invalid_argument("complete_text: empty prompt");
    if (prompt.find("[INTENT]") != std::string::npos) return handle_intent(prompt);
    if (prompt.find("[REWRITE]") != std::string::npos) return handle_rewrite(prompt);
    if (prompt.find("[EXTRACT]") != std::string::npos) return handle_extract(prompt);
    if (prompt.find("[FILTER]") != std::string::npos) return handle_filter(prompt);
    if (prompt.find("[JUDGE]") != std::string::npos) return handle_judge(prompt);
    return "UNRECOGNIZED";
}

std::string MockGateway::handle_intent(const std::string& prompt) const {
    std::string q = lowercase(line_after(prompt, "QUERY:"));
    // Fixed rule table first, cue scan as fallback.
    if (q.find("what color of clothes") != std::string::npos) return "Level-1";
    if (q.find("why did the woman cry") != std::string::npos) return "Level-2";
    if (q.find("what life lessons") != std::string::npos) return "Level-3";
    static const std::vector<std::string> theme_cues = {"lesson",    "theme",   "convey",
                                                        "overall",   "summarize", "message"};
    static const std::vector<std::string> causal_cues = {"why",  "before", "after",
                                                         "cause", "lead to", "when does"};
    if (contains_any(q, theme_cues)) return "Level-3";
    if (contains_any(q, causal_cues)) return "Level-2";
    return "Level-1";
}

std::string MockGateway::handle_rewrite(const std::string& prompt) const {
    std::string query = line_after(prompt, "QUERY:");
    std::string norm = lowercase(strip_question(query));
    if (norm == "how did the number 30 player perform") {
        return "CAPTION: The performance of Number 30 player.\n"
               "ASR: How's the number 30 player doing.\n"
               "OCR: Number 30 player";
    }
    std::string caption = strip_question(query) + ".";
    std::string ocr;
    for (const auto& t : content_tokens(query)) {
        if (!ocr.empty()) ocr += " ";
        ocr += t;
    }
    if (ocr.empty()) ocr = query;
    return "CAPTION: " + caption + "\nASR: " + query + "\nOCR: " + ocr;
}

std::string MockGateway::handle_extract(const std::string& prompt) const {
    std::string clip = line_after(prompt, "CLIP:");
    std::string text = rest_after(prompt, "TEXT:");
    std::string lower = lowercase(text);

    std::ostringstream out;
    if (lower.find("number 30 player") != std::string::npos &&
        lower.find("scores") != std::string::npos) {
        out << "ENTITY\tperson\tNumber 30 player\tclip " << clip << "\t" << text << "\n";
        out << "REL\tNumber 30 player\tgame\tscores_in\t" << text << "\n";
        return out.str();
    }

    // Generic rule: maximal runs of upper-initial tokens (digits may continue
    // a run) become entities; consecutive runs in the same text relate.
    std::vector<std::string> runs;
    auto tokens = raw_tokens(text);
    std::size_t i = 0;
    while (i < tokens.size()) {
        if (is_upper_initial(tokens[i])) {
            std::string run = tokens[i];
            std::size_t j = i + 1;
            while (j < tokens.size() && (is_upper_initial(tokens[j]) || is_all_digits(tokens[j]))) {
                run += " " + tokens[j];
                ++j;
            }
            runs.push_back(run);
            i = j;
        } else {
            ++i;
        }
    }
    std::vector<std::string> seen;
    for (const auto& run : runs) {
        if (std::find(seen.begin(), seen.end(), run) == seen.end()) {
            seen.push_back(run);
            out << "ENTITY\tobject\t" << run << "\tclip " << clip << "\t" << text << "\n";
        }
    }
    for (std::size_t k = 0; k + 1 < runs.size(); ++k) {
        if (runs[k] != runs[k + 1]) {
            out << "REL\t" << runs[k] << "\t" << runs[k + 1] << "\trelated_to\t" << text << "\n";
        }
    }
    std::string s = out.str();
    return s.empty() ? "NONE" : s;
}

std::string MockGateway::handle_filter(const std::string& prompt) const {
    std::string query = line_after(prompt, "QUERY:");
    std::string texts = rest_after(prompt, "CLIP_TEXTS:");
    auto qt = content_tokens(query);
    auto ct = content_tokens(texts);
    for (const auto& t : qt) {
        if (std::find(ct.begin(), ct.end(), t) != ct.end()) return "KEEP";
    }
    return "DROP";
}

std::string MockGateway::handle_judge(const std::string& prompt) const {
    auto a_pos = prompt.find("ANSWER A:");
    auto b_pos = prompt.find("ANSWER B:");
    std::string a, b;
    if (a_pos != std::string::npos && b_pos != std::string::npos && b_pos > a_pos) {
        a = trim(prompt.substr(a_pos + 9, b_pos - (a_pos + 9)));
        std::string rest = prompt.substr(b_pos + 9);
        auto end = rest.find("VERDICT");
        b = trim(end == std::string::npos ? rest : rest.substr(0, end));
    }
    const char* winner = a.size() > b.size() ? "A" : (b.size() > a.size() ? "B" : "tie");
    static const char* dims[] = {"comprehensiveness", "empowerment", "trustworthiness",
                                 "depth",             "density",     "overall"};
    std::ostringstream out;
    for (const char* d : dims) out << d << ": " << winner << "\n";
    return out.str();
}

// ---------------------------------------------------------------------------
// HTTP gateway
// ---------------------------------------------------------------------------

namespace {

// Split an endpoint URL into the httplib client base and the request path.
std::pair<std::string, std::string> split_endpoint(const std::string& endpoint) {
    auto scheme_end = endpoint.find("://");
    auto path_start = endpoint.find('/', scheme_end + 3);
    if (path_start == std::string::npos) return {endpoint, "/"};
    return {endpoint.substr(0, path_start), endpoint.substr(path_start)};
}

std::string frame_descriptor(const FrameSet& frames, const FrameRef& f) {
    if (!f.label.empty()) return f.label;
    return frames.video_id + ":" + std::to_string(f.clip_id) + ":" +
           std::to_string(f.frame_index) + "@" + std::to_string(f.time_s);
}

} // namespace

std::string HttpGateway::post_raw(BackendRole role, const std::string& input_json,
                                  const std::string& params_json) const {
    const BackendConfig& cfg = config_for(role);
    cfg.validate();
    if (cfg.endpoint == "mock") {
        throw ConfigError(std::string("role ") + backend_role_name(role) +
                          " is bound to mock, not an HTTP endpoint");
    }
    json body;
    body["role"] = backend_role_name(role);
    body["model"] = cfg.model_name;
    body["input"] = json::parse(input_json);
    body["params"] = json::parse(params_json);
    const std::string payload = body.dump();

    auto [base, path] = split_endpoint(cfg.endpoint);
    std::string last_error;
    const int attempts = 1 + cfg.max_retries;
    for (int attempt = 0; attempt < attempts; ++attempt) {
        httplib::Client client(base);
        client.set_connection_timeout(0, cfg.timeout_ms * 1000);
        client.set_read_timeout(0, cfg.timeout_ms * 1000);
        client.set_write_timeout(0, cfg.timeout_ms * 1000);
        auto res = client.Post(path, payload, "application/json");
        if (!res) {
            last_error = "transport error: " + httplib::to_string(res.error());
            continue;
        }
        if (res->status != 200) {
            last_error = "http status " + std::to_string(res->status);
            continue;
        }
        json reply = json::parse(res->body, nullptr, false);
        if (reply.is_discarded() || !reply.contains("output")) {
            throw BackendMalformed(std::string(backend_role_name(role)) +
                                   ": response body missing \"output\"");
        }
        return reply["output"].dump();
    }
    throw BackendUnreachable(std::string(backend_role_name(role)) + " endpoint " + cfg.endpoint +
                             " failed after " + std::to_string(attempts) +
                             " attempts: " + last_error);
}

std::string HttpGateway::post_text(BackendRole role, const std::string& input,
                                   const std::string& params_json) const {
    std::string raw = post_raw(role, json(input).dump(), params_json);
    json value = json::parse(raw);
    if (!value.is_string()) {
        throw BackendMalformed(std::string(backend_role_name(role)) + ": expected string output");
    }
    return value.get<std::string>();
}

EmbeddingVector HttpGateway::post_embedding(BackendRole role, const std::string& input_json,
                                            const std::string& params_json) const {
    std::string raw = post_raw(role, input_json, params_json);
    json value = json::parse(raw);
    if (!value.is_array()) {
        throw BackendMalformed(std::string(backend_role_name(role)) + ": expected array output");
    }
    EmbeddingVector v;
    v.values.reserve(value.size());
    for (const auto& x : value) {
        if (!x.is_number()) {
            throw BackendMalformed(std::string(backend_role_name(role)) +
                                   ": non-numeric embedding element");
        }
        v.values.push_back(x.get<double>());
    }
    v.validate_finite();
    return v;
}

std::string HttpGateway::complete_text(const std::string& prompt, LlmTask task) {
    if (trim(prompt).empty()) throw std::invalid_argument("complete_text: empty prompt");
    const char* names[] = {"intent", "rewrite", "extract", "filter", "judge", "generic"};
    json params;
    params["task"] = names[static_cast<int>(task)];
    return post_text(BackendRole::llm, prompt, params.dump());
}

EmbeddingVector HttpGateway::embed_text(const std::string& text) {
    if (trim(text).empty()) throw EmptyText("embed_text: empty text");
    EmbeddingVector v = post_embedding(BackendRole::text_embedder, json(text).dump(), "{}");
    const auto want = static_cast<std::size_t>(config_for(BackendRole::text_embedder).dim);
    if (v.dim() != want) {
        throw DimensionMismatch("text embedding dim " + std::to_string(v.dim()) + ", expected " +
                                std::to_string(want));
    }
    v.normalize();
    return v;
}

EmbeddingVector HttpGateway::embed_frames(const FrameSet& frames) {
    if (frames.frames.empty()) throw EmptyFrameSet("embed_frames: no frames");
    json input = json::array();
    for (const auto& f : frames.frames) input.push_back(frame_descriptor(frames, f));
    EmbeddingVector v = post_embedding(BackendRole::frame_embedder, input.dump(), "{}");
    const auto per_frame = static_cast<std::size_t>(config_for(BackendRole::frame_embedder).dim);
    if (v.dim() != per_frame * frames.frames.size()) {
        throw DimensionMismatch("frame embedding dim " + std::to_string(v.dim()) + ", expected " +
                                std::to_string(per_frame * frames.frames.size()));
    }
    v.normalize();
    return v;
}

std::string HttpGateway::caption_frames(const FrameSet& frames) {
    if (frames.frames.empty()) throw EmptyFrameSet("caption_frames: no frames");
    json input = json::array();
    for (const auto& f : frames.frames) input.push_back(frame_descriptor(frames, f));
    return post_text(BackendRole::captioner, input.dump(), "{}");
}

std::string HttpGateway::transcribe_audio(const AudioRef& segment) {
    std::string ref = segment.video_id + ":" + std::to_string(segment.clip_id);
    return post_text(BackendRole::asr, ref, "{}");
}

std::string HttpGateway::ocr_frames(const FrameSet& frames) {
    if (frames.frames.empty()) throw EmptyFrameSet("ocr_frames: no frames");
    json input = json::array();
    for (const auto& f : frames.frames) input.push_back(frame_descriptor(frames, f));
    return post_text(BackendRole::ocr, input.dump(), "{}");
}

std::string HttpGateway::generate_answer(const GenerationContext& context,
                                         const std::string& query) {
    if (trim(query).empty()) throw EmptyQuery("generate_answer: empty query");
    if (context.word_count() > token_budget_) {
        throw ContextTooLarge("context of " + std::to_string(context.word_count()) +
                              " words exceeds budget " + std::to_string(token_budget_));
    }
    json params;
    params["task"] = "generate";
    return post_text(BackendRole::generator, context.serialize(), params.dump());
}

} // namespace adavrag
