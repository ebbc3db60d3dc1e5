#pragma once

#include <stdexcept>
#include <string>

namespace eic {

/// Thrown when an exact computation is requested on an instance beyond its
/// configured size cutoff.
class SizeLimitError : public std::runtime_error {
public:
    explicit SizeLimitError(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown on malformed problem/solution text.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when a problem fails its structural invariants.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when random generation exhausts its resample budget.
class GenerationError : public std::runtime_error {
public:
    explicit GenerationError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace eic
