#pragma once

#include <stdexcept>
#include <string>

namespace qdel {

// Error taxonomy shared across the library. Each condition that callers are
// expected to handle gets its own type so tests can match on it.

struct UnknownQubit : std::runtime_error {
    explicit UnknownQubit(const std::string& what) : std::runtime_error(what) {}
};

struct BadGate : std::runtime_error {
    explicit BadGate(const std::string& what) : std::runtime_error(what) {}
};

struct LabelMismatch : std::runtime_error {
    explicit LabelMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct BadArgument : std::runtime_error {
    explicit BadArgument(const std::string& what) : std::runtime_error(what) {}
};

struct NoCapacity : std::runtime_error {
    explicit NoCapacity(const std::string& what) : std::runtime_error(what) {}
};

struct UnsupportedConjugation : std::runtime_error {
    explicit UnsupportedConjugation(const std::string& what) : std::runtime_error(what) {}
};

struct CorrectionNotLocal : std::runtime_error {
    explicit CorrectionNotLocal(const std::string& what) : std::runtime_error(what) {}
};

struct CircuitUnsupportedByProfile : std::runtime_error {
    explicit CircuitUnsupportedByProfile(const std::string& what) : std::runtime_error(what) {}
};

struct SchedulerStuck : std::runtime_error {
    explicit SchedulerStuck(const std::string& what) : std::runtime_error(what) {}
};

struct ProtocolViolation : std::runtime_error {
    explicit ProtocolViolation(const std::string& what) : std::runtime_error(what) {}
};

struct VerificationUnsupported : std::runtime_error {
    explicit VerificationUnsupported(const std::string& what) : std::runtime_error(what) {}
};

struct TooLargeToSimulate : std::runtime_error {
    explicit TooLargeToSimulate(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qdel
