#pragma once

#include <stdexcept>
#include <string>

namespace minkasym {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define MINKASYM_ERROR(Name)                          \
    struct Name : Error {                             \
        explicit Name(const std::string& what_arg)    \
            : Error(#Name ": " + what_arg) {}         \
    }

MINKASYM_ERROR(DegenerateInput);
MINKASYM_ERROR(EmptyIntersection);
MINKASYM_ERROR(SingularMatrix);
MINKASYM_ERROR(LPFailure);
MINKASYM_ERROR(AsymmetricGauge);
MINKASYM_ERROR(NoTriple);
MINKASYM_ERROR(UnclassifiedPoint);
MINKASYM_ERROR(DomainError);
MINKASYM_ERROR(InconsistentCharacterization);
MINKASYM_ERROR(ParseError);
MINKASYM_ERROR(IOError);

#undef MINKASYM_ERROR

}  // namespace minkasym
