#pragma once

#include <stdexcept>
#include <string>

namespace ecclab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A precondition on the arguments was violated (bad index, bad family
/// parameter, malformed input text).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// A distance-based quantity was requested on a disconnected graph.
class DisconnectedGraph : public Error {
public:
    DisconnectedGraph() : Error("graph is disconnected") {}
    explicit DisconnectedGraph(const std::string& what) : Error(what) {}
};

/// An iterative or exponential solver gave up (iteration cap, size cap).
class ComputationLimit : public Error {
public:
    using Error::Error;
};

}  // namespace ecclab
