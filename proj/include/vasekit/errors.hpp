#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace vasekit {

// Base for everything the library throws on purpose.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input file content. Carries the 1-based line number.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& reason)
        : Error("parse error at line " + std::to_string(line) + ": " + reason), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// Structurally valid JSON that violates the manifest schema.
class SchemaError : public Error {
public:
    using Error::Error;
};

class InvalidRatios : public Error {
public:
    using Error::Error;
};

class EmptyManifest : public Error {
public:
    using Error::Error;
};

// Two QA pairs of the same attribute type on one entry.
class DuplicateAttribute : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class InvalidConfig : public Error {
public:
    using Error::Error;
};

class EmptyGroup : public Error {
public:
    using Error::Error;
};

class MixedGroup : public Error {
public:
    using Error::Error;
};

class NonSquareMatrix : public Error {
public:
    using Error::Error;
};

class UnknownVaseId : public Error {
public:
    using Error::Error;
};

class EmptyRun : public Error {
public:
    using Error::Error;
};

class ChainMismatch : public Error {
public:
    using Error::Error;
};

// Bad invocation or configuration; maps to exit code 2 in the CLI.
class UsageError : public Error {
public:
    using Error::Error;
};

// Failures surfaced by an embedding provider.
class ProviderError : public Error {
public:
    using Error::Error;
};

// Network-level failure after the retry budget is exhausted, or a fatal HTTP status.
class TransportError : public ProviderError {
public:
    using ProviderError::ProviderError;
};

// Response arrived but does not match the wire contract.
class ProtocolError : public ProviderError {
public:
    using ProviderError::ProviderError;
};

}  // namespace vasekit
