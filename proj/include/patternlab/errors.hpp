#pragma once

#include <stdexcept>
#include <string>

namespace patternlab {

/// Malformed pattern or word input (bad letters, too short, unparsable).
struct PatternError : std::invalid_argument {
    explicit PatternError(const std::string& what) : std::invalid_argument(what) {}
};

/// A configured budget (enumeration size, state limit, permutation cap) was exceeded.
struct ResourceLimitError : std::runtime_error {
    explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

/// Cache file failed its integrity check.
struct CacheError : std::runtime_error {
    explicit CacheError(const std::string& what) : std::runtime_error(what) {}
};

/// An exact identity that must hold by construction did not (transcription or logic bug).
struct IdentityViolationError : std::logic_error {
    explicit IdentityViolationError(const std::string& what) : std::logic_error(what) {}
};

/// A required input count could not be produced.
struct DependencyError : std::runtime_error {
    explicit DependencyError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace patternlab
