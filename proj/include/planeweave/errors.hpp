#pragma once

#include <stdexcept>
#include <string>

namespace planeweave {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Geometry kernel
struct OverlapError : Error {
    explicit OverlapError(const std::string& what) : Error(what) {}
};
struct PreconditionError : Error {
    explicit PreconditionError(const std::string& what) : Error(what) {}
};
struct DegenerateInput : Error {
    explicit DegenerateInput(const std::string& what) : Error(what) {}
};

// Graphs
struct NotTwoDegenerate : Error {
    explicit NotTwoDegenerate(const std::string& what) : Error(what) {}
};
struct SizeOverflow : Error {
    explicit SizeOverflow(const std::string& what) : Error(what) {}
};
struct UnknownVertex : Error {
    explicit UnknownVertex(const std::string& what) : Error(what) {}
};

// Verification
struct ShapeMismatch : Error {
    explicit ShapeMismatch(const std::string& what) : Error(what) {}
};

// Arrangements
struct NotAllCrossing : Error {
    explicit NotAllCrossing(const std::string& what) : Error(what) {}
};
struct CollinearInput : Error {
    explicit CollinearInput(const std::string& what) : Error(what) {}
};
struct IncompleteColoring : Error {
    explicit IncompleteColoring(const std::string& what) : Error(what) {}
};
struct InvalidCertificate : Error {
    explicit InvalidCertificate(const std::string& what) : Error(what) {}
};

// File formats / CLI
struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(what) {}
};

} // namespace planeweave
