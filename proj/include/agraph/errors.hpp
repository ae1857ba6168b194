#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace agraph {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input: mismatched variable counts, non-positive parameters,
/// bad JSON, zero scale factors.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// An operation that needs finite colength was handed a non-Artinian
/// (or zero) ideal.
class NotArtinian : public Error {
public:
    using Error::Error;
};

/// A configurable bound (vertex count, Groebner steps, path length) was hit.
/// Carries how far the computation got so callers never mistake a partial
/// result for a complete one.
class ResourceCap : public Error {
public:
    ResourceCap(const std::string& what, std::size_t reached)
        : Error(what), reached_(reached) {}
    std::size_t reached() const noexcept { return reached_; }

private:
    std::size_t reached_;
};

enum class MoveErrorCode {
    SourceNotGenerator,
    TargetParentNotGenerator,
    LexOrderViolation,
    VariableMismatch,
};

const char* to_string(MoveErrorCode code);

/// Precondition failure of apply_move.
class MoveError : public Error {
public:
    MoveError(MoveErrorCode code, const std::string& detail)
        : Error(std::string(to_string(code)) + ": " + detail), code_(code) {}
    MoveErrorCode code() const noexcept { return code_; }

private:
    MoveErrorCode code_;
};

/// canonical_successor / selection_data was asked for the successor of the
/// terminal ideal.
class TerminalVertex : public Error {
public:
    using Error::Error;
};

/// The selection rules do not produce a valid move for this ideal.
/// `ideal_json` holds the offending ideal serialized for reproduction.
class UncoveredCase : public Error {
public:
    UncoveredCase(const std::string& reason, std::string ideal_json)
        : Error("uncovered case: " + reason), reason_(reason), ideal_json_(std::move(ideal_json)) {}
    const std::string& reason() const noexcept { return reason_; }
    const std::string& ideal_json() const noexcept { return ideal_json_; }

private:
    std::string reason_;
    std::string ideal_json_;
};

}  // namespace agraph
