#pragma once

#include <stdexcept>
#include <string>

namespace gstruve {

enum class ErrorKind {
    DegenerateParameter,
    PoleOfGamma,
    PrecisionExhausted,
    IllConditioned,
    ZeroArgument,
    TruncationUnstable,
    DoublePole,
    SectorUnsupported,
    InvalidInput,
};

const char* to_string(ErrorKind k);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace gstruve
