#include "gstruve/errors.hpp"

namespace gstruve {

const char* to_string(ErrorKind k)
{
    switch (k) {
    case ErrorKind::DegenerateParameter: return "DegenerateParameter";
    case ErrorKind::PoleOfGamma: return "PoleOfGamma";
    case ErrorKind::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorKind::IllConditioned: return "IllConditioned";
    case ErrorKind::ZeroArgument: return "ZeroArgument";
    case ErrorKind::TruncationUnstable: return "TruncationUnstable";
    case ErrorKind::DoublePole: return "DoublePole";
    case ErrorKind::SectorUnsupported: return "SectorUnsupported";
    case ErrorKind::InvalidInput: return "InvalidInput";
    }
    return "Unknown";
}

}  // namespace gstruve
