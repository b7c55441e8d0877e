#pragma once

#include <stdexcept>
#include <string>

namespace ordring {

// Domain-level failures. The CLI maps these to exit code 1; anything else
// (bad flags, unreadable files) is a usage error and exits 2.
enum class errc {
    group_mismatch,
    undecided_at_truncation,
    not_positive,
    unsupported_family,
    mismatch,
    non_abelian_exponent,
    non_positive_valuation,
    zero_up_to_frontier,
    level_exhausted,
    frontier_budget_exceeded,
    magnus_not_reducible,
    single_term_only,
    not_normal,
    window_exhausted,
    not_found_in_window,
    certification_failed,
    division_by_zero,
    invalid_config,
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::group_mismatch: return "GroupMismatch";
        case errc::undecided_at_truncation: return "UndecidedAtTruncation";
        case errc::not_positive: return "NotPositive";
        case errc::unsupported_family: return "UnsupportedFamily";
        case errc::mismatch: return "Mismatch";
        case errc::non_abelian_exponent: return "NonAbelianExponent";
        case errc::non_positive_valuation: return "NonPositiveValuation";
        case errc::zero_up_to_frontier: return "ZeroUpToFrontier";
        case errc::level_exhausted: return "LevelExhausted";
        case errc::frontier_budget_exceeded: return "FrontierBudgetExceeded";
        case errc::magnus_not_reducible: return "MagnusNotReducible";
        case errc::single_term_only: return "SingleTermOnly";
        case errc::not_normal: return "NotNormal";
        case errc::window_exhausted: return "WindowExhausted";
        case errc::not_found_in_window: return "NotFoundInWindow";
        case errc::certification_failed: return "CertificationFailed";
        case errc::division_by_zero: return "DivisionByZero";
        case errc::invalid_config: return "InvalidConfig";
    }
    return "UnknownError";
}

class domain_error : public std::runtime_error {
  public:
    domain_error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const { return code_; }

  private:
    errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& what) {
    throw domain_error(code, what);
}

}  // namespace ordring
