#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wres {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonDecaying : Error {
    using Error::Error;
};

struct MissingJet : Error {
    using Error::Error;
};

struct DimensionTooLarge : Error {
    using Error::Error;
};

struct OddDimension : Error {
    using Error::Error;
};

struct UnsupportedConfiguration : Error {
    using Error::Error;
};

struct UnknownSuite : Error {
    using Error::Error;
};

struct ParseError : Error {
    ParseError(size_t offset, std::string expected, const std::string& ctx)
        : Error("parse error at offset " + std::to_string(offset) + ": expected " + expected +
                (ctx.empty() ? "" : " near '" + ctx + "'")),
          offset(offset), expected(std::move(expected)) {}
    size_t offset;
    std::string expected;
};

} // namespace wres
