#pragma once

#include <stdexcept>
#include <string>

namespace talentrec {

// Malformed input files or unparseable values. Mapped to CLI exit code 2.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Inputs that parse but violate a contract (referential integrity, illegal
// parameter, degenerate benchmark, digest mismatch). Mapped to exit code 2.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Filesystem failures (missing file, unwritable directory). Exit code 1.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace talentrec
