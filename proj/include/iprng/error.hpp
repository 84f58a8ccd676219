#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace iprng {

enum class ErrorKind {
    NotPrime,
    ExponentOutOfRange,
    ModulusTooLarge,
    NotUnit,
    NonResidue,
    ReductionOutOfRange,
    ZeroElement,
    CaseMismatch,
    UnsupportedContext,
    SweepTooLarge,
    InvalidArgument,
};

constexpr std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::NotPrime: return "NotPrime";
        case ErrorKind::ExponentOutOfRange: return "ExponentOutOfRange";
        case ErrorKind::ModulusTooLarge: return "ModulusTooLarge";
        case ErrorKind::NotUnit: return "NotUnit";
        case ErrorKind::NonResidue: return "NonResidue";
        case ErrorKind::ReductionOutOfRange: return "ReductionOutOfRange";
        case ErrorKind::ZeroElement: return "ZeroElement";
        case ErrorKind::CaseMismatch: return "CaseMismatch";
        case ErrorKind::UnsupportedContext: return "UnsupportedContext";
        case ErrorKind::SweepTooLarge: return "SweepTooLarge";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the ErrorKind tags.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace iprng
