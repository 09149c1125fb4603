#pragma once

#include <stdexcept>
#include <string>

#include "qmf/real.hpp"

namespace qmf {

struct PreconditionError : std::runtime_error {
    explicit PreconditionError(const std::string& m) : std::runtime_error(m) {}
};
struct NumericalError : std::runtime_error {
    explicit NumericalError(const std::string& m) : std::runtime_error(m) {}
};
struct UsageError : std::runtime_error {
    explicit UsageError(const std::string& m) : std::runtime_error(m) {}
};

// Working decimal digits plus the two tolerances everything else derives
// error budgets from. Immutable after construction.
class PrecisionContext {
public:
    explicit PrecisionContext(int digits_ = 40) : digits_v(digits_) {
        if (digits_v < 16) throw PreconditionError("PrecisionContext: digits must be >= 16");
        if (digits_v > 120) throw PreconditionError("PrecisionContext: digits must be <= 120");
    }

    int digits() const { return digits_v; }

    // 10^(8-digits)
    Real series_tail_tol() const { return pow10(8 - digits_v); }
    // 10^(6-digits)
    Real quad_tol() const { return pow10(6 - digits_v); }

    // Mantissa bits used while computing under this context: the requested
    // digits plus guard digits for cancellation-heavy sums.
    mpfr_prec_t prec_bits() const {
        double bits = (digits_v + 30) * 3.3219280948873623;
        return (mpfr_prec_t)(bits + 16);
    }

private:
    int digits_v;
};

// Installs the context's working precision for the current scope.
struct ContextScope {
    PrecScope ps;
    explicit ContextScope(const PrecisionContext& ctx) : ps(ctx.prec_bits()) {}
};

} // namespace qmf
