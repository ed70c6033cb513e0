#pragma once

#include <stdexcept>
#include <string>

namespace flatbase {

enum class Errc {
    NotPrime,
    ShapeMismatch,
    FieldMismatch,
    DivisionByZero,
    NotCommutative,
    NotAssociative,
    BadUnit,
    NotLocal,
    LocalnessUndecided,
    NotAnIdeal,
    NotMonic,
    ReducibleFactor,
    InfiniteColength,
    ResidueNotBase,
    NotUnital,
    NotMultiplicative,
    NotFree,
    NotAModule,
    DepthExceeded,
    RankNotOne,
    NotIso,
    RelationNotKilled,
    SyntaxError,
    SchemaError,
    ValidationError,
    Internal,
};

constexpr const char* errc_name(Errc c) {
    switch (c) {
        case Errc::NotPrime: return "NotPrime";
        case Errc::ShapeMismatch: return "ShapeMismatch";
        case Errc::FieldMismatch: return "FieldMismatch";
        case Errc::DivisionByZero: return "DivisionByZero";
        case Errc::NotCommutative: return "NotCommutative";
        case Errc::NotAssociative: return "NotAssociative";
        case Errc::BadUnit: return "BadUnit";
        case Errc::NotLocal: return "NotLocal";
        case Errc::LocalnessUndecided: return "LocalnessUndecided";
        case Errc::NotAnIdeal: return "NotAnIdeal";
        case Errc::NotMonic: return "NotMonic";
        case Errc::ReducibleFactor: return "ReducibleFactor";
        case Errc::InfiniteColength: return "InfiniteColength";
        case Errc::ResidueNotBase: return "ResidueNotBase";
        case Errc::NotUnital: return "NotUnital";
        case Errc::NotMultiplicative: return "NotMultiplicative";
        case Errc::NotFree: return "NotFree";
        case Errc::NotAModule: return "NotAModule";
        case Errc::DepthExceeded: return "DepthExceeded";
        case Errc::RankNotOne: return "RankNotOne";
        case Errc::NotIso: return "NotIso";
        case Errc::RelationNotKilled: return "RelationNotKilled";
        case Errc::SyntaxError: return "SyntaxError";
        case Errc::SchemaError: return "SchemaError";
        case Errc::ValidationError: return "ValidationError";
        case Errc::Internal: return "Internal";
    }
    return "Unknown";
}

/// Typed failure carrying one of the Errc codes above; everything the
/// library can refuse is reported through this exception.
class Diagnostic : public std::runtime_error {
public:
    Diagnostic(Errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message),
          code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
    throw Diagnostic(code, message);
}

}  // namespace flatbase
