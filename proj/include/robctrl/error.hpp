#pragma once

#include <stdexcept>
#include <string>

namespace robctrl {

// Error taxonomy shared by all modules. The C API maps each type to a
// numeric status code.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionError : Error {
    using Error::Error;
};

struct NumericError : Error {
    using Error::Error;
};

struct DomainError : Error {
    using Error::Error;
};

struct StructureError : Error {
    using Error::Error;
};

struct BudgetError : Error {
    using Error::Error;
};

struct StalenessError : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

}  // namespace robctrl
