#pragma once

#include <stdexcept>
#include <string>

namespace regraph {

// Base for every failure the library raises on bad input or an
// unsatisfiable request.  Callers that want a single catch site can
// catch this; the subclasses exist so tests and tools can distinguish
// the precise cause.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// n*d is odd, or a pairing was asked to match an odd number of arcs.
class ParityError : public Error {
public:
    using Error::Error;
};

// d > n-1: no simple graph can be d-regular on n vertices.
class DegreeTooLargeError : public Error {
public:
    using Error::Error;
};

// An edge list does not give every vertex degree exactly d.
class NotRegularError : public Error {
public:
    using Error::Error;
};

// The same edge appears twice in an edge list.
class DuplicateEdgeError : public Error {
public:
    using Error::Error;
};

// An edge joins a vertex to itself.
class LoopError : public Error {
public:
    using Error::Error;
};

// Two graphs that must share (n, d) do not.
class MismatchedParametersError : public Error {
public:
    using Error::Error;
};

// A switch names an edge the graph does not contain.
class EdgeAbsentError : public Error {
public:
    using Error::Error;
};

// A switch names two edges that share an endvertex.
class IncidentEdgesError : public Error {
public:
    using Error::Error;
};

// Applying a switch would insert an edge that is already present.
class WouldCreateMultiEdgeError : public Error {
public:
    using Error::Error;
};

// The replacement edges of a switch do not re-match the four
// endvertices of the removed pair.
class InvalidReplacementError : public Error {
public:
    using Error::Error;
};

// A vertex id is outside 1..n.
class InvalidVertexError : public Error {
public:
    explicit InvalidVertexError(const std::string& what) : Error(what) {}
};

// Text input that cannot be read as a graph; line is 1-based.
class ParseError : public Error {
public:
    ParseError(const std::string& what, int line_no)
        : Error(what + " (line " + std::to_string(line_no) + ")"), line(line_no) {}
    int line;
};

// Enumeration would exceed the configured state cap.
class StateSpaceTooLargeError : public Error {
public:
    using Error::Error;
};

// A vertex has unequal arc colour counts where equality is required.
class UnbalancedError : public Error {
public:
    using Error::Error;
};

// A count does not fit in 64 bits, or an enumeration product exceeds
// the configured cap.
class TooLargeError : public Error {
public:
    using Error::Error;
};

// A structural limit on bad pairs, bad vertices, or interesting edges
// is exceeded.
class LimitViolationError : public Error {
public:
    using Error::Error;
};

// The kernel is not connected at the requested accuracy: total
// variation distance cannot fall below the stationary mass missing
// from the largest class.
class NotConnectedError : public Error {
public:
    using Error::Error;
};

// An eigensolve or other floating-point routine failed to converge.
class NumericalFailureError : public Error {
public:
    using Error::Error;
};

// A scripted move sequence is illegal from its current position.
class ScriptInvalidError : public Error {
public:
    using Error::Error;
};

} // namespace regraph
