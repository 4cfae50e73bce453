#ifndef PMSS_ERRORS_HPP
#define PMSS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pmss {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidSymbolError : Error {
    using Error::Error;
};

struct EmptySetError : Error {
    using Error::Error;
};

struct ShortSequenceError : Error {
    using Error::Error;
};

struct CapacityError : Error {
    using Error::Error;
};

struct ParameterError : Error {
    using Error::Error;
};

struct BudgetError : Error {
    using Error::Error;
};

struct NotASupersequenceError : Error {
    using Error::Error;
};

struct SchemaError : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

} // namespace pmss

#endif
