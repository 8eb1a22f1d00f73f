#include "adavrag/prompts.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace adavrag {

std::string PromptTemplate::render(const std::map<std::string, std::string>& slots) const {
    // Single pass over the body; slot values may safely contain braces.
    std::string out;
    out.reserve(body.size());
    std::size_t i = 0;
    while (i < body.size()) {
        if (body[i] == '{') {
            auto close = body.find('}', i);
            if (close != std::string::npos) {
                const std::string key = body.substr(i + 1, close - i - 1);
                const bool is_name = !key.empty() &&
                                     key.find_first_not_of(
                                         "abcdefghijklmnopqrstuvwxyz_") == std::string::npos;
                if (is_name) {
                    auto it = slots.find(key);
                    if (it == slots.end()) {
                        throw Error("prompt '" + name + "' has unresolved placeholder {" + key +
                                    "}");
                    }
                    out += it->second;
                    i = close + 1;
                    continue;
                }
            }
        }
        out.push_back(body[i]);
        ++i;
    }
    return out;
}

int PromptTemplate::query_placeholder_count() const {
    int count = 0;
    std::size_t pos = 0;
    while ((pos = body.find("{query}", pos)) != std::string::npos) {
        ++count;
        pos += 7;
    }
    return count;
}

const std::map<std::string, std::string>& default_prompt_bodies() {
    // Tier wording below is this project's own formulation of the routing
    // levels; the template is versioned so wording changes are tracked.
    static const std::map<std::string, std::string> bodies = {
        {"intent_classify",
         "[INTENT] You are a routing assistant for a video question-answering system.\n"
         "Classify the difficulty of the user query into exactly one level.\n"
         "\n"
         "Level-1 (direct factual): the answer is visible in a single moment of the\n"
         "video; no reasoning across scenes is needed.\n"
         "  Example: \"What is the person at 0:05 wearing?\" -> Level-1\n"
         "Level-2 (contextual): needs a small number of linked moments, such as a\n"
         "cause and its effect, or locating when something happens across time.\n"
         "  Example: \"Why did the crowd cheer before the timeout?\" -> Level-2\n"
         "Level-3 (multi-hop): needs video-wide synthesis across many entities,\n"
         "relations, or themes; the answer is not tied to a few moments.\n"
         "  Example: \"What overall message does this video convey?\" -> Level-3\n"
         "\n"
         "Think through the reasoning the query demands step by step, then output\n"
         "the single token Level-1, Level-2, or Level-3.\n"
         "\n"
         "QUERY: {query}\n"},
        {"query_rewrite",
         "[REWRITE] Rewrite the user query into three retrieval forms, one per line:\n"
         "CAPTION: a declarative sentence describing the scene content to match\n"
         "against clip captions (drop option letters, keep descriptive detail).\n"
         "ASR: a colloquial spoken form keeping core actions and events, to match\n"
         "fragmented speech.\n"
         "OCR: only the specific entity terms, to match on-screen text.\n"
         "\n"
         "QUERY: {query}\n"},
        {"graph_extract",
         "[EXTRACT] Extract entities and relations from the clip text below.\n"
         "Output one record per line, tab-separated, no other text:\n"
         "ENTITY\\ttype\\tname\\tspatio-temporal attribute\\tdescription\n"
         "REL\\thead name\\ttail name\\tkind\\tdescription\n"
         "Relation kind is one of: spatio-temporal, causal, functional, other.\n"
         "Output NONE if the text has no entities.\n"
         "\n"
         "CLIP: {clip}\n"
         "TEXT: {text}\n"},
        {"evidence_filter",
         "[FILTER] Decide whether the clip described below is relevant to the query.\n"
         "Answer with the single token KEEP or DROP.\n"
         "\n"
         "QUERY: {query}\n"
         "CLIP_TEXTS: {clip_texts}\n"},
        {"pairwise_judge",
         "[JUDGE] Compare two answers to the same video question. For each dimension,\n"
         "name the better answer: A, B, or tie. Dimensions: comprehensiveness (does it\n"
         "cover the question fully), empowerment (practical value to the user),\n"
         "trustworthiness (reliability of the content), depth (goes past surface\n"
         "detail), density (informative without padding), overall.\n"
         "Output exactly six lines, \"<dimension>: <A|B|tie>\".\n"
         "\n"
         "QUERY: {query}\n"
         "ANSWER A: {answer_a}\n"
         "ANSWER B: {answer_b}\n"
         "VERDICTS:\n"},
    };
    return bodies;
}

PromptTemplate PromptStore::get(const std::string& name, int version) const {
    PromptTemplate tmpl;
    tmpl.name = name;
    tmpl.version = version;

    if (!prompt_dir_.empty()) {
        const auto path = std::filesystem::path(prompt_dir_) /
                          (name + ".v" + std::to_string(version) + ".txt");
        std::ifstream in(path);
        if (in) {
            std::ostringstream buf;
            buf << in.rdbuf();
            tmpl.body = buf.str();
            return tmpl;
        }
    }
    auto it = default_prompt_bodies().find(name);
    if (it == default_prompt_bodies().end()) {
        throw Error("unknown prompt template: " + name);
    }
    tmpl.body = it->second;
    return tmpl;
}

} // namespace adavrag
