#include "hkmod/errors.hpp"

namespace hkmod {

const char* err_code_name(ErrCode code) {
    switch (code) {
        case ErrCode::LatticeMismatch: return "lattice_mismatch";
        case ErrCode::InvalidLattice: return "invalid_lattice";
        case ErrCode::NonIntegralVector: return "non_integral_vector";
        case ErrCode::ZeroVector: return "zero_vector";
        case ErrCode::ZeroClass: return "zero_class";
        case ErrCode::ZeroRank: return "zero_rank";
        case ErrCode::NegativeDimension: return "negative_dimension";
        case ErrCode::RankNotTwo: return "rank_not_two";
        case ErrCode::UnsupportedAssumption: return "unsupported_assumption";
        case ErrCode::HypothesesViolated: return "hypotheses_violated";
        case ErrCode::NotPositiveClass: return "not_positive_class";
        case ErrCode::NonIntegralInput: return "non_integral_input";
        case ErrCode::DegenerateInput: return "degenerate_input";
        case ErrCode::NotBigNef: return "not_big_nef";
        case ErrCode::InvalidParams: return "invalid_params";
    }
    return "unknown";
}

namespace {

std::string compose_message(ErrCode code, const std::string& which, const std::string& detail) {
    std::string msg = err_code_name(code);
    if (!which.empty()) msg += " [" + which + "]";
    if (!detail.empty()) msg += ": " + detail;
    return msg;
}

}  // namespace

Error::Error(ErrCode code, std::string which, const std::string& detail)
    : std::runtime_error(compose_message(code, which, detail)),
      code_(code),
      which_(std::move(which)) {}

void fail(ErrCode code, const std::string& detail) { throw Error(code, "", detail); }

void fail(ErrCode code, const std::string& which, const std::string& detail) {
    throw Error(code, which, detail);
}

}  // namespace hkmod
