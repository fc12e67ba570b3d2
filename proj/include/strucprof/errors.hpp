#pragma once

#include <stdexcept>
#include <string>

namespace strucprof {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define STRUCPROF_ERROR(NAME)                                        \
    struct NAME : Error {                                            \
        explicit NAME(const std::string& what) : Error(what) {}      \
    }

STRUCPROF_ERROR(ArityMismatch);
STRUCPROF_ERROR(VertexOutOfRange);
STRUCPROF_ERROR(NotAGraph);
STRUCPROF_ERROR(OverlapError);
STRUCPROF_ERROR(SignatureMismatch);
STRUCPROF_ERROR(DomainMismatch);
STRUCPROF_ERROR(NotOrdered);
STRUCPROF_ERROR(NotMonomorphic);
STRUCPROF_ERROR(RangeError);
STRUCPROF_ERROR(TooSmall);
STRUCPROF_ERROR(NotStabilized);
STRUCPROF_ERROR(NonUnitConstantTerm);
STRUCPROF_ERROR(UnknownLetter);
STRUCPROF_ERROR(MalformedTemplate);
STRUCPROF_ERROR(SizeMismatch);
STRUCPROF_ERROR(NotAGraphFamily);
STRUCPROF_ERROR(ParseError);

#undef STRUCPROF_ERROR

}  // namespace strucprof
