#pragma once
// Versioned prompt templates. Templates live as plain-text files under a
// prompt directory ("<name>.v<version>.txt") and fall back to embedded
// defaults so the engine runs from any working directory.

#include "adavrag/errors.hpp"

#include <map>
#include <string>

namespace adavrag {

struct PromptTemplate {
    std::string name;
    std::string body;
    int version = 1;

    // Substitutes every "{key}" occurrence; unresolved placeholders throw.
    std::string render(const std::map<std::string, std::string>& slots) const;

    // Count of "{query}" placeholders; the intent template requires exactly one.
    int query_placeholder_count() const;
};

class PromptStore {
public:
    explicit PromptStore(std::string prompt_dir = "") : prompt_dir_(std::move(prompt_dir)) {}

    // File override first, embedded default second.
    PromptTemplate get(const std::string& name, int version = 1) const;

private:
    std::string prompt_dir_;
};

// Embedded default bodies, keyed by template name (version 1).
const std::map<std::string, std::string>& default_prompt_bodies();

} // namespace adavrag
