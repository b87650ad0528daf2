#pragma once

#include <complex>
#include <optional>
#include <string>

#include "toral/presentation.hpp"

namespace toral {

// A partition-function value: the complex amplitude plus separate exact
// bookkeeping of the power of |det K| it carries (already included in
// the amplitude, retained for reporting).
struct PartitionValue {
    std::complex<double> amplitude;
    std::optional<HalfInt> det_k_exponent;
    std::string source_notes;

    double magnitude() const { return std::abs(amplitude); }
};

} // namespace toral
