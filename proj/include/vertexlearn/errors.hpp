// Copyright (c) the vertexlearn contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace vertexlearn {

/// Base class of every error thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A vertex index outside {1..n}, or an otherwise out-of-range argument.
struct RangeError : Error {
    using Error::Error;
};

/// A precondition violated by the caller (universe mismatch, bad cardinality, ...).
struct ContractError : Error {
    using Error::Error;
};

/// Input too large for an exhaustive enumeration path.
struct CapacityError : Error {
    using Error::Error;
};

/// Malformed textual or JSON input.
struct ParseError : Error {
    using Error::Error;
};

/// The other side of a learner/teacher session misbehaved.
struct ProtocolViolation : Error {
    using Error::Error;
};

/// A teacher refused to answer a query; `reason` is the wire-level reason token.
struct QueryRejected : Error {
    std::string reason;
    explicit QueryRejected(std::string r) : Error("query rejected: " + r), reason(std::move(r)) {}
};

/// Requested operation has no fast path for this input shape.
struct UnsupportedError : Error {
    using Error::Error;
};

/// No graph is consistent with the given examples.
struct InconsistencyError : Error {
    using Error::Error;
};

struct NetworkError : Error {
    using Error::Error;
};

/// An internal invariant failed; always a bug.
struct InternalError : Error {
    using Error::Error;
};

struct UsageError : Error {
    using Error::Error;
};

}  // namespace vertexlearn
