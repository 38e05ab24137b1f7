#pragma once

#include <stdexcept>
#include <string>

namespace kgnav {

// Base class for everything this library throws.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed N-Triples input. Lines count from 1.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& reason)
        : Error("parse error at line " + std::to_string(line) + ": " + reason),
          line_(line), reason_(reason) {}
    std::size_t line() const noexcept { return line_; }
    const std::string& reason() const noexcept { return reason_; }

private:
    std::size_t line_;
    std::string reason_;
};

// Request rejected before it was sent (e.g. IRI failing the injection guard).
class RequestError : public Error {
public:
    using Error::Error;
};

// Could not reach the remote endpoint (connect/timeout, after retries).
class TransportError : public Error {
public:
    using Error::Error;
};

// Endpoint answered with a non-2xx status.
class ProtocolError : public Error {
public:
    ProtocolError(int status, const std::string& msg)
        : Error("HTTP " + std::to_string(status) + ": " + msg), status_(status) {}
    int status() const noexcept { return status_; }

private:
    int status_;
};

// Response body does not match the expected wire format.
class FormatError : public Error {
public:
    using Error::Error;
};

// Vector length does not match the provider dimension.
class DimensionError : public Error {
public:
    using Error::Error;
};

// The linker produced no candidate entity for a question.
class NoEntityError : public Error {
public:
    using Error::Error;
};

// The focus entity has no valid one-hop pairs left to rank.
class EmptyCandidatesError : public Error {
public:
    explicit EmptyCandidatesError(const std::string& msg, std::string entity_iri = {})
        : Error(msg), entity_iri_(std::move(entity_iri)) {}
    // IRI of the entity that was already selected when the pipeline gave up;
    // empty when the error is raised outside the pipeline.
    const std::string& entity_iri() const noexcept { return entity_iri_; }

private:
    std::string entity_iri_;
};

// Two dataset records share an id.
class DuplicateIdError : public Error {
public:
    using Error::Error;
};

// Invalid or inconsistent application configuration.
class ConfigError : public Error {
public:
    using Error::Error;
};

} // namespace kgnav
