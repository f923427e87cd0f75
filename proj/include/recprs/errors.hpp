#pragma once

#include <stdexcept>
#include <string>

namespace recprs {

// Base of every error raised by the library. Subclasses map one-to-one onto
// the failure kinds callers are expected to distinguish.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

#define RECPRS_DEFINE_ERROR(Name)             \
    class Name : public Error {               \
       public:                                \
        using Error::Error;                   \
    }

RECPRS_DEFINE_ERROR(DivisionByZeroRule);
RECPRS_DEFINE_ERROR(DegreeOrder);
RECPRS_DEFINE_ERROR(ZeroPolynomial);
RECPRS_DEFINE_ERROR(InvalidRule);
RECPRS_DEFINE_ERROR(ConstantInput);
RECPRS_DEFINE_ERROR(IndexError);
RECPRS_DEFINE_ERROR(RangeError);
RECPRS_DEFINE_ERROR(NotSquare);
RECPRS_DEFINE_ERROR(OverlapError);
RECPRS_DEFINE_ERROR(OutOfBounds);
RECPRS_DEFINE_ERROR(ZeroEntry);

#undef RECPRS_DEFINE_ERROR

}  // namespace recprs
