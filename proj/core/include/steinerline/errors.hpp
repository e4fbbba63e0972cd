#pragma once

#include <stdexcept>
#include <string>

namespace steinerline {

// Every failure the library reports, one code per contract violation.
// User-input problems and internal invariant violations share the type;
// callers dispatch on the code (the CLI maps them to exit codes).
enum class Errc {
    LoopEdge,
    DuplicateEdge,
    VertexOutOfRange,
    NotConnected,
    Disconnected,
    UnknownEdgeId,
    NotATree,
    RootNotInTree,
    NotUnicyclic,
    NotSteinerTree,
    TerminalMissing,
    KOutOfRange,
    SameVertex,
    HypothesisViolated,
    SizeLimitExceeded,
    RootInTargets,
    TargetNotInTree,
    PrereqViolated,
    NotAdjacentInLineGraph,
    PackingMismatch,
    NotEdgeDisjoint,
    VerificationFailed,
    ParseError,
    BadArgument,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

} // namespace steinerline
