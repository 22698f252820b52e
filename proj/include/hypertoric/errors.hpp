#pragma once
#include <stdexcept>
#include <string>

namespace hypertoric {

enum class errc {
    invalid_input,
    not_surjective,
    not_unimodular,
    rank_deficient,
    dimension_mismatch,
    cokernel_not_free,
    self_loop_present,
    disconnected,
    ground_size_mismatch,
    not_divisible,        // theorem-invariant violation
    verification_failed,  // theorem-invariant violation
    budget_exceeded,
    prime_too_small,
    unsupported_generator_form,
    unsupported_l3,
    not_dimension_four,
    not_dimension_six,
    size_guard,
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::invalid_input: return "InvalidInput";
        case errc::not_surjective: return "NotSurjective";
        case errc::not_unimodular: return "NotUnimodular";
        case errc::rank_deficient: return "RankDeficient";
        case errc::dimension_mismatch: return "DimensionMismatch";
        case errc::cokernel_not_free: return "CokernelNotFree";
        case errc::self_loop_present: return "SelfLoopPresent";
        case errc::disconnected: return "Disconnected";
        case errc::ground_size_mismatch: return "GroundSizeMismatch";
        case errc::not_divisible: return "NotDivisible";
        case errc::verification_failed: return "VerificationFailed";
        case errc::budget_exceeded: return "BudgetExceeded";
        case errc::prime_too_small: return "PrimeTooSmall";
        case errc::unsupported_generator_form: return "UnsupportedGeneratorForm";
        case errc::unsupported_l3: return "UnsupportedL3";
        case errc::not_dimension_four: return "NotDimensionFour";
        case errc::not_dimension_six: return "NotDimensionSix";
        case errc::size_guard: return "SizeGuard";
    }
    return "Unknown";
}

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
    errc code() const { return code_; }

    // Process exit taxonomy: 1 = bad input, 2 = theorem-invariant violation,
    // 3 = budget exhausted.
    int exit_code() const {
        switch (code_) {
            case errc::not_divisible:
            case errc::verification_failed: return 2;
            case errc::budget_exceeded: return 3;
            default: return 1;
        }
    }

private:
    errc code_;
};

} // namespace hypertoric
