#pragma once
// Small text helpers used across the engine: tokenization, stable hashing,
// and the deterministic RNG behind the mock embedder. All arithmetic is
// fixed-width so results are identical across runs and platforms.

#include <cctype>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace adavrag {

// Lowercase, split on any non-alphanumeric byte.
inline std::vector<std::string> tokenize(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    for (unsigned char c : text) {
        if (std::isalnum(c)) {
            cur.push_back(static_cast<char>(std::tolower(c)));
        } else if (!cur.empty()) {
            out.push_back(cur);
            cur.clear();
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

inline std::string lowercase(const std::string& s) {
    std::string out = s;
    for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

inline std::string trim(const std::string& s) {
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

// Case-fold + whitespace-collapse, the entity merge key normalization.
inline std::string normalize_name(const std::string& s) {
    std::string out;
    bool pending_space = false;
    for (unsigned char c : s) {
        if (std::isspace(c)) {
            if (!out.empty()) pending_space = true;
        } else {
            if (pending_space) {
                out.push_back(' ');
                pending_space = false;
            }
            out.push_back(static_cast<char>(std::tolower(c)));
        }
    }
    return out;
}

inline const std::set<std::string>& stopwords() {
    static const std::set<std::string> words = {
        "a",     "an",    "and",   "are",   "as",    "at",    "be",    "been",  "but",
        "by",    "can",   "could", "did",   "do",    "does",  "for",   "from",  "had",
        "has",   "have",  "how",   "if",    "in",    "into",  "is",    "it",    "its",
        "may",   "might", "must",  "no",    "not",   "of",    "on",    "or",    "s",
        "should", "so",   "t",     "than",  "that",  "the",   "then",  "these", "this",
        "those", "to",    "was",   "were",  "what",  "when",  "where", "which", "who",
        "whom",  "whose", "why",   "will",  "with",  "would",
    };
    return words;
}

inline std::vector<std::string> content_tokens(const std::string& text) {
    std::vector<std::string> out;
    for (auto& t : tokenize(text)) {
        if (!stopwords().count(t)) out.push_back(t);
    }
    return out;
}

// FNV-1a 64-bit, used for token seeding and persistence checksums.
inline uint64_t fnv1a64(const void* data, size_t len, uint64_t seed = 0xcbf29ce484222325ULL) {
    const auto* p = static_cast<const unsigned char*>(data);
    uint64_t h = seed;
    for (size_t i = 0; i < len; ++i) {
        h ^= p[i];
        h *= 0x100000001b3ULL;
    }
    return h;
}

inline uint64_t fnv1a64(const std::string& s) { return fnv1a64(s.data(), s.size()); }

// splitmix64: the deterministic stream behind per-token vectors.
struct SplitMix64 {
    uint64_t state;
    explicit SplitMix64(uint64_t seed) : state(seed) {}
    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    // uniform in (0,1)
    double next_unit() { return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53; }
};

} // namespace adavrag
