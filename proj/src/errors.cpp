#include "lrc/errors.hpp"

namespace lrc {

const char* error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::NonPrimeCharacteristic: return "NonPrimeCharacteristic";
        case ErrorKind::SizeOverflow: return "SizeOverflow";
        case ErrorKind::NotCoprime: return "NotCoprime";
        case ErrorKind::NoSuchRoot: return "NoSuchRoot";
        case ErrorKind::NotASubfield: return "NotASubfield";
        case ErrorKind::DivisionByZeroPolynomial: return "DivisionByZeroPolynomial";
        case ErrorKind::FieldMismatch: return "FieldMismatch";
        case ErrorKind::NonMonicGenerator: return "NonMonicGenerator";
        case ErrorKind::CoefficientNotInBaseField: return "CoefficientNotInBaseField";
        case ErrorKind::NotADivisor: return "NotADivisor";
        case ErrorKind::LengthMismatch: return "LengthMismatch";
        case ErrorKind::InvalidParams: return "InvalidParams";
        case ErrorKind::PreconditionFailed: return "PreconditionFailed";
        case ErrorKind::RootCollision: return "RootCollision";
        case ErrorKind::InfeasibleBudget: return "InfeasibleBudget";
        case ErrorKind::EmptyLocalDual: return "EmptyLocalDual";
        case ErrorKind::LocalRepairInfeasible: return "LocalRepairInfeasible";
        case ErrorKind::AmbiguousErasure: return "AmbiguousErasure";
    }
    return "UnknownError";
}

int error_exit_code(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::NonPrimeCharacteristic:
        case ErrorKind::SizeOverflow:
        case ErrorKind::NotCoprime:
        case ErrorKind::NoSuchRoot:
        case ErrorKind::NotASubfield:
        case ErrorKind::NonMonicGenerator:
        case ErrorKind::CoefficientNotInBaseField:
        case ErrorKind::NotADivisor:
        case ErrorKind::LengthMismatch:
        case ErrorKind::InvalidParams:
        case ErrorKind::PreconditionFailed:
            return 2;
        case ErrorKind::InfeasibleBudget:
            return 3;
        default:
            return 1;
    }
}

}  // namespace lrc
