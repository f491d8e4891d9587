#pragma once

#include <stdexcept>
#include <string>

namespace hkmod {

enum class ErrCode {
    LatticeMismatch,
    InvalidLattice,
    NonIntegralVector,
    ZeroVector,
    ZeroClass,
    ZeroRank,
    NegativeDimension,
    RankNotTwo,
    UnsupportedAssumption,
    HypothesesViolated,
    NotPositiveClass,
    NonIntegralInput,
    DegenerateInput,
    NotBigNef,
    InvalidParams,
};

// Machine-readable snake_case name, stable across releases (CLI error JSON).
const char* err_code_name(ErrCode code);

// `which` names the specific violated condition when one exists
// (e.g. "equal_slopes", "r1_divides_2a"); empty otherwise.
class Error : public std::runtime_error {
public:
    Error(ErrCode code, std::string which, const std::string& detail);

    ErrCode code() const { return code_; }
    const std::string& which() const { return which_; }

private:
    ErrCode code_;
    std::string which_;
};

[[noreturn]] void fail(ErrCode code, const std::string& detail);
[[noreturn]] void fail(ErrCode code, const std::string& which, const std::string& detail);

}  // namespace hkmod
