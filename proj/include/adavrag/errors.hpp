#pragma once
// Error taxonomy for the engine. Each failure mode the pipeline can
// surface gets its own type so callers can catch precisely.

#include <stdexcept>
#include <string>

namespace adavrag {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// gateway
struct BackendUnreachable : Error { using Error::Error; };
struct BackendMalformed : Error { using Error::Error; };
struct EmptyText : Error { using Error::Error; };
struct EmptyFrameSet : Error { using Error::Error; };
struct MissingAudio : Error { using Error::Error; };
struct ContextTooLarge : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };

// ingestion
struct PathNotFound : Error { using Error::Error; };
struct MalformedBundle : Error { using Error::Error; };
struct EmptyCaption : Error { using Error::Error; };
struct ExtractionFailed : Error {
    ExtractionFailed(const std::string& role, const std::string& what)
        : Error("extraction failed for role '" + role + "': " + what), role_(role) {}
    const std::string& role() const { return role_; }
private:
    std::string role_;
};

// index store
struct DuplicateChunkId : Error { using Error::Error; };
struct IndexFrozen : Error { using Error::Error; };
struct UnknownSeed : Error { using Error::Error; };
struct EmptyGraph : Error { using Error::Error; };
struct VersionMismatch : Error { using Error::Error; };
struct CorruptIndex : Error { using Error::Error; };

// intent / retrieval / generation
struct EmptyQuery : Error { using Error::Error; };
struct LevelMismatch : Error { using Error::Error; };

// evaluation
struct EmptyVerdicts : Error { using Error::Error; };
struct UnknownItem : Error { using Error::Error; };
struct NotMCQ : Error { using Error::Error; };

// configuration
struct ConfigError : Error { using Error::Error; };

} // namespace adavrag
