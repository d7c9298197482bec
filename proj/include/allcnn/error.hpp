#pragma once

#include <sstream>
#include <stdexcept>
#include <string>

namespace allcnn {

// Base for everything this library throws. The CLI maps these to exit code 2
// (data/model errors); command-line misuse is handled before engine calls.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Tensor/layer dimension disagreements.
class ShapeError : public Error {
public:
    using Error::Error;
};

// Bad argument values (ranges, rates, fractions, degenerate inputs).
class ValueError : public Error {
public:
    using Error::Error;
};

// Malformed files: PPM, .alld, .alck, JSON config.
class FormatError : public Error {
public:
    using Error::Error;
};

// Filesystem failures, reported with the offending path.
class IoError : public Error {
public:
    using Error::Error;
};

namespace detail {

template <typename... Args>
std::string concat(Args&&... args) {
    std::ostringstream os;
    (os << ... << args);
    return os.str();
}

} // namespace detail

} // namespace allcnn

#define ALLCNN_THROW(ExType, ...) \
    throw ExType(::allcnn::detail::concat(__VA_ARGS__))

#define ALLCNN_CHECK(cond, ExType, ...)     \
    do {                                    \
        if (!(cond)) {                      \
            ALLCNN_THROW(ExType, __VA_ARGS__); \
        }                                   \
    } while (0)
