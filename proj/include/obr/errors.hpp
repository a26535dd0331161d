#pragma once

#include <stdexcept>
#include <string>

namespace obr {

/// Base class for all recoverable errors raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// raster
struct MalformedHeader : Error {
    explicit MalformedHeader(const std::string& detail) : Error("MalformedHeader: " + detail) {}
};
struct TruncatedBody : Error {
    explicit TruncatedBody(const std::string& detail) : Error("TruncatedBody: " + detail) {}
};

// enhance
struct DegenerateHistogram : Error {
    explicit DegenerateHistogram(const std::string& detail) : Error("DegenerateHistogram: " + detail) {}
};

// grid
struct InsufficientDots : Error {
    explicit InsufficientDots(const std::string& detail) : Error("InsufficientDots: " + detail) {}
};
struct NoLatticeFit : Error {
    explicit NoLatticeFit(const std::string& detail) : Error("NoLatticeFit: " + detail) {}
};

// codec
struct BadTableFile : Error {
    explicit BadTableFile(const std::string& detail) : Error("BadTableFile: " + detail) {}
};

// synth
struct UnencodableGrapheme : Error {
    UnencodableGrapheme(std::string grapheme_, std::size_t position_)
        : Error("UnencodableGrapheme: \"" + grapheme_ + "\" at position " + std::to_string(position_)),
          grapheme(std::move(grapheme_)),
          position(position_) {}
    std::string grapheme;
    std::size_t position;  // 1-based codepoint index into the source text
};
struct EmptyPage : Error {
    explicit EmptyPage(const std::string& detail) : Error("EmptyPage: " + detail) {}
};

}  // namespace obr
