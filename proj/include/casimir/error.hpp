#pragma once

#include <stdexcept>
#include <string>

namespace casimir {

enum class ErrorCode {
    UnsupportedAlgebra,
    InternalConsistency,
    DegenerateMetric,
    DimensionMismatch,
    SlotOutOfRange,
    ResourceCap,
    ModularDisagreement,
    PoleEncountered,
    NoFormula,
    FormulaNotPrinted,
    MissingParameter,
    SingularSystem,
    InconsistentSystem,
    SpectrumMismatch,
    Usage,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}
    ErrorCode code() const { return code_; }

    // Process exit contract: 1 = mathematical mismatch, 2 = usage error,
    // 3 = resource cap.
    int exit_code() const {
        switch (code_) {
            case ErrorCode::ResourceCap:
                return 3;
            case ErrorCode::UnsupportedAlgebra:
            case ErrorCode::Usage:
            case ErrorCode::MissingParameter:
                return 2;
            default:
                return 1;
        }
    }

private:
    ErrorCode code_;
};

inline const char* error_code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::UnsupportedAlgebra: return "UnsupportedAlgebra";
        case ErrorCode::InternalConsistency: return "InternalConsistency";
        case ErrorCode::DegenerateMetric: return "DegenerateMetric";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::SlotOutOfRange: return "SlotOutOfRange";
        case ErrorCode::ResourceCap: return "ResourceCap";
        case ErrorCode::ModularDisagreement: return "ModularDisagreement";
        case ErrorCode::PoleEncountered: return "PoleEncountered";
        case ErrorCode::NoFormula: return "NoFormula";
        case ErrorCode::FormulaNotPrinted: return "FormulaNotPrinted";
        case ErrorCode::MissingParameter: return "MissingParameter";
        case ErrorCode::SingularSystem: return "SingularSystem";
        case ErrorCode::InconsistentSystem: return "InconsistentSystem";
        case ErrorCode::SpectrumMismatch: return "SpectrumMismatch";
        case ErrorCode::Usage: return "Usage";
    }
    return "Unknown";
}

}  // namespace casimir
