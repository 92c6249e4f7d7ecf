#pragma once

#include <stdexcept>

namespace gridrel {

// Base class for all domain errors surfaced to the CLI (exit code 1).
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed case files / datasets / model files, with line or record context.
class ParseError : public Error {
public:
    using Error::Error;
};

// Invalid configuration: bad flag combinations, degenerate splits, scheme
// mismatches between datasets and models.
class ConfigError : public Error {
public:
    using Error::Error;
};

// A state tester could not produce a verdict (e.g. LP pivot limit). This is
// never mapped to Reliable/Failure.
class TesterError : public Error {
public:
    using Error::Error;
};

}  // namespace gridrel
