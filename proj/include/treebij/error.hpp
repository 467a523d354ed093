#pragma once

#include <stdexcept>
#include <string>

namespace treebij {

// Every throwing operation names the violated invariant through Kind, so
// callers (and tests) can dispatch on the reason rather than parse messages.
enum class Kind {
    UnknownLabel,
    WrongEdgeCount,
    HasCycle,
    NotConnected,
    NotAStrictDescendant,
    InvalidCode,
    TooSmall,
    EmptyLabelSet,
    EmptyCodomain,
    EmptyGroundSet,
    DomainCodomainMismatch,
    EmptyTree,
    OverlappingLabels,
    BadDomain,
    CapExceeded,
    PoleAtZero,
    InvalidLabelSet,
    BadInput,
};

inline const char* kind_name(Kind k)
{
    switch (k) {
        case Kind::UnknownLabel: return "UnknownLabel";
        case Kind::WrongEdgeCount: return "WrongEdgeCount";
        case Kind::HasCycle: return "HasCycle";
        case Kind::NotConnected: return "NotConnected";
        case Kind::NotAStrictDescendant: return "NotAStrictDescendant";
        case Kind::InvalidCode: return "InvalidCode";
        case Kind::TooSmall: return "TooSmall";
        case Kind::EmptyLabelSet: return "EmptyLabelSet";
        case Kind::EmptyCodomain: return "EmptyCodomain";
        case Kind::EmptyGroundSet: return "EmptyGroundSet";
        case Kind::DomainCodomainMismatch: return "DomainCodomainMismatch";
        case Kind::EmptyTree: return "EmptyTree";
        case Kind::OverlappingLabels: return "OverlappingLabels";
        case Kind::BadDomain: return "BadDomain";
        case Kind::CapExceeded: return "CapExceeded";
        case Kind::PoleAtZero: return "PoleAtZero";
        case Kind::InvalidLabelSet: return "InvalidLabelSet";
        case Kind::BadInput: return "BadInput";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(Kind kind, const std::string& what)
        : std::runtime_error(std::string(kind_name(kind)) + ": " + what), kind_(kind) {}

    Kind kind() const noexcept { return kind_; }

private:
    Kind kind_;
};

} // namespace treebij
