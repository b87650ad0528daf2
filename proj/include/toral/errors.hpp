#pragma once

#include <stdexcept>
#include <string>

namespace toral {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define TORAL_DEFINE_ERROR(Name)          \
    struct Name : Error {                 \
        using Error::Error;               \
    }

TORAL_DEFINE_ERROR(NotSymmetric);
TORAL_DEFINE_ERROR(NotEven);
TORAL_DEFINE_ERROR(Degenerate);
TORAL_DEFINE_ERROR(SingularForm);
TORAL_DEFINE_ERROR(NonConvergent);
TORAL_DEFINE_ERROR(InvalidPresentation);
TORAL_DEFINE_ERROR(NonHalfInteger);
TORAL_DEFINE_ERROR(IndexOutOfRange);
TORAL_DEFINE_ERROR(RelationViolation);
TORAL_DEFINE_ERROR(SizeLimit);
TORAL_DEFINE_ERROR(NotLagrangian);
TORAL_DEFINE_ERROR(DimensionMismatch);
TORAL_DEFINE_ERROR(DecompositionFailure);
TORAL_DEFINE_ERROR(UnsupportedFamily);
TORAL_DEFINE_ERROR(InputError);

#undef TORAL_DEFINE_ERROR

} // namespace toral
