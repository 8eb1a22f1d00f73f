#pragma once
// Uniform abstraction over every external model: captioner, ASR, OCR,
// embedders, the utility LLM, and the answer generator. Two implementations:
//   MockGateway  — deterministic, fixture-bound, reproducible offline
//   HttpGateway  — remote JSON-over-HTTP client with retry accounting
// A routed facade dispatches per-role so mock and remote backends can mix.
//
// All gateway operations are reentrant; implementations hold no mutable
// shared state after construction.

#include "adavrag/context.hpp"
#include "adavrag/embedding.hpp"
#include "adavrag/errors.hpp"
#include "adavrag/types.hpp"

#include <array>
#include <memory>
#include <string>
#include <vector>

namespace adavrag {

enum class BackendRole { captioner, asr, ocr, text_embedder, frame_embedder, llm, generator };

constexpr std::array<BackendRole, 7> all_backend_roles = {
    BackendRole::captioner,     BackendRole::asr, BackendRole::ocr, BackendRole::text_embedder,
    BackendRole::frame_embedder, BackendRole::llm, BackendRole::generator,
};

const char* backend_role_name(BackendRole role);
BackendRole backend_role_from_name(const std::string& name);

// What the completion is for. Remote backends receive it as a param;
// the mock dispatches on prompt markers instead.
enum class LlmTask { intent, rewrite, extract, filter, judge, generic };

struct BackendConfig {
    BackendRole role = BackendRole::llm;
    std::string endpoint = "mock"; // "mock" or an http(s) URL
    std::string model_name = "mock";
    int timeout_ms = 5000;
    int max_retries = 1;
    int dim = 8; // embedding width; per-frame width for the frame embedder

    void validate() const;
};

class ModelGateway {
public:
    virtual ~ModelGateway() = default;

    virtual std::string complete_text(const std::string& prompt, LlmTask task) = 0;
    virtual EmbeddingVector embed_text(const std::string& text) = 0;
    virtual EmbeddingVector embed_frames(const FrameSet& frames) = 0;
    virtual std::string caption_frames(const FrameSet& frames) = 0;
    virtual std::string transcribe_audio(const AudioRef& segment) = 0;
    virtual std::string ocr_frames(const FrameSet& frames) = 0;
    virtual std::string generate_answer(const GenerationContext& context,
                                        const std::string& query) = 0;
};

// ---------------------------------------------------------------------------
// Mock gateway
//
// Every operation is a pure function of its inputs, the bound fixture
// bundle, and the built-in rule tables. The text embedder is a bag of
// hashed-token vectors: each token maps via FNV-1a to a splitmix64 stream,
// which drives Box-Muller gaussians for a pseudo-random unit vector of the
// configured dim; token vectors are summed and L2-normalized. Overlapping
// texts therefore have analytically predictable cosine similarity.
// ---------------------------------------------------------------------------

class MockGateway final : public ModelGateway {
public:
    explicit MockGateway(int dim = 8, std::size_t token_budget = 8192)
        : dim_(dim), token_budget_(token_budget) {}

    // Bind the fixture bundle used to answer caption/asr/ocr/frame lookups.
    void bind_bundle(std::shared_ptr<const MediaBundle> bundle) { bundle_ = std::move(bundle); }

    std::string complete_text(const std::string& prompt, LlmTask task) override;
    EmbeddingVector embed_text(const std::string& text) override;
    EmbeddingVector embed_frames(const FrameSet& frames) override;
    std::string caption_frames(const FrameSet& frames) override;
    std::string transcribe_audio(const AudioRef& segment) override;
    std::string ocr_frames(const FrameSet& frames) override;
    std::string generate_answer(const GenerationContext& context,
                                const std::string& query) override;

    int dim() const { return dim_; }

    // The documented per-token vector: FNV-1a seed, splitmix64 uniforms,
    // Box-Muller gaussians, L2-normalized.
    static EmbeddingVector token_vector(const std::string& token, int dim);

private:
    int dim_;
    std::size_t token_budget_;
    std::shared_ptr<const MediaBundle> bundle_;

    const ClipFixture* fixture_clip(const std::string& video_id, int clip_id) const;
    std::string handle_intent(const std::string& prompt) const;
    std::string handle_rewrite(const std::string& prompt) const;
    std::string handle_extract(const std::string& prompt) const;
    std::string handle_filter(const std::string& prompt) const;
    std::string handle_judge(const std::string& prompt) const;
};

// ---------------------------------------------------------------------------
// HTTP gateway
//
// Wire contract per call: POST <endpoint>, JSON body
//   {"role": string, "model": string, "input": string-or-array, "params": object}
// response JSON {"output": string-or-array-of-numbers}.
// A failing endpoint is attempted exactly 1 + max_retries times.
// ---------------------------------------------------------------------------

class HttpGateway final : public ModelGateway {
public:
    explicit HttpGateway(std::array<BackendConfig, 7> role_configs,
                         std::size_t token_budget = 8192)
        : configs_(std::move(role_configs)), token_budget_(token_budget) {}

    std::string complete_text(const std::string& prompt, LlmTask task) override;
    EmbeddingVector embed_text(const std::string& text) override;
    EmbeddingVector embed_frames(const FrameSet& frames) override;
    std::string caption_frames(const FrameSet& frames) override;
    std::string transcribe_audio(const AudioRef& segment) override;
    std::string ocr_frames(const FrameSet& frames) override;
    std::string generate_answer(const GenerationContext& context,
                                const std::string& query) override;

private:
    std::array<BackendConfig, 7> configs_;
    std::size_t token_budget_;

    const BackendConfig& config_for(BackendRole role) const {
        return configs_[static_cast<std::size_t>(role)];
    }
    // Returns the raw "output" JSON value as a string blob; throws
    // BackendUnreachable / BackendMalformed.
    std::string post_raw(BackendRole role, const std::string& input_json,
                         const std::string& params_json) const;
    std::string post_text(BackendRole role, const std::string& input,
                          const std::string& params_json) const;
    EmbeddingVector post_embedding(BackendRole role, const std::string& input_json,
                                   const std::string& params_json) const;
};

// Per-role dispatch between a mock instance and an http instance.
class RoutedGateway final : public ModelGateway {
public:
    RoutedGateway(std::shared_ptr<ModelGateway> mock, std::shared_ptr<ModelGateway> http,
                  std::array<bool, 7> use_mock)
        : mock_(std::move(mock)), http_(std::move(http)), use_mock_(use_mock) {}

    std::string complete_text(const std::string& prompt, LlmTask task) override {
        return pick(BackendRole::llm).complete_text(prompt, task);
    }
    EmbeddingVector embed_text(const std::string& text) override {
        return pick(BackendRole::text_embedder).embed_text(text);
    }
    EmbeddingVector embed_frames(const FrameSet& frames) override {
        return pick(BackendRole::frame_embedder).embed_frames(frames);
    }
    std::string caption_frames(const FrameSet& frames) override {
        return pick(BackendRole::captioner).caption_frames(frames);
    }
    std::string transcribe_audio(const AudioRef& segment) override {
        return pick(BackendRole::asr).transcribe_audio(segment);
    }
    std::string ocr_frames(const FrameSet& frames) override {
        return pick(BackendRole::ocr).ocr_frames(frames);
    }
    std::string generate_answer(const GenerationContext& context,
                                const std::string& query) override {
        return pick(BackendRole::generator).generate_answer(context, query);
    }

private:
    std::shared_ptr<ModelGateway> mock_;
    std::shared_ptr<ModelGateway> http_;
    std::array<bool, 7> use_mock_;

    ModelGateway& pick(BackendRole role) {
        return use_mock_[static_cast<std::size_t>(role)] ? *mock_ : *http_;
    }
};

} // namespace adavrag
