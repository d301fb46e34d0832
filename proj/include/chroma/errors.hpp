#pragma once

#include <stdexcept>
#include <string>

namespace chroma {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidParameter : Error {
    using Error::Error;
};

// attach_clique was given a vertex pair that is not an edge of the base graph
struct InvalidEdge : Error {
    using Error::Error;
};

// add_apex was given a vertex set that is not pairwise adjacent
struct InvalidClique : Error {
    using Error::Error;
};

struct ParseError : Error {
    int line;
    ParseError(const std::string& what, int line_no)
        : Error("line " + std::to_string(line_no) + ": " + what), line(line_no) {}
};

struct LimitExceeded : Error {
    using Error::Error;
};

// an initial coloring violates properness on its own domain
struct ImproperColoring : Error {
    using Error::Error;
};

// a solver was asked for k < chi(G)
struct ChromaticViolation : Error {
    using Error::Error;
};

struct NotExtendable : Error {
    using Error::Error;
};

struct NotUnique : Error {
    using Error::Error;
};

// a closed-form predictor or checker does not cover the given instance
struct NotApplicable : Error {
    using Error::Error;
};

}  // namespace chroma
