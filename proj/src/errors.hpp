#pragma once

#include <stdexcept>
#include <string>

namespace spinsw {

/* Every failure the calculators can signal, in one place.  The CLI maps these
 * onto process exit codes: ParseError -> 2, NegativeMuResidue and
 * InternalCheck -> 3, everything else (bad or unsupported input data) -> 1. */
enum class Err {
    RingMismatch,
    NotMonic,
    UnknownPart,
    CutoffTooSmall,
    ValidationFailed,
    DimensionMismatch,
    WrongBPlus,
    HypothesisNotMet,
    UnsupportedPrecision,
    NegativeMuResidue,
    NotDivisibleByU3,
    MissingSegre,
    NoChamber,
    ParseError,
    InternalCheck,
};

class calc_error : public std::runtime_error {
public:
    Err code;
    calc_error(Err c, const std::string& msg) : std::runtime_error(msg), code(c) {}
};

[[noreturn]] inline void fail(Err c, const std::string& msg)
{
    throw calc_error(c, msg);
}

inline const char* err_name(Err c)
{
    switch (c) {
    case Err::RingMismatch: return "RingMismatch";
    case Err::NotMonic: return "NotMonic";
    case Err::UnknownPart: return "UnknownPart";
    case Err::CutoffTooSmall: return "CutoffTooSmall";
    case Err::ValidationFailed: return "ValidationFailed";
    case Err::DimensionMismatch: return "DimensionMismatch";
    case Err::WrongBPlus: return "WrongBPlus";
    case Err::HypothesisNotMet: return "HypothesisNotMet";
    case Err::UnsupportedPrecision: return "UnsupportedPrecision";
    case Err::NegativeMuResidue: return "NegativeMuResidue";
    case Err::NotDivisibleByU3: return "NotDivisibleByU3";
    case Err::MissingSegre: return "MissingSegre";
    case Err::NoChamber: return "NoChamber";
    case Err::ParseError: return "ParseError";
    case Err::InternalCheck: return "InternalCheck";
    }
    return "?";
}

}  // namespace spinsw
