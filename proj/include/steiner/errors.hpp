#pragma once

#include <stdexcept>
#include <string>

namespace steiner {

// Base type for every error thrown by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed graph file. Carries the 1-based line number of the offending line.
class ParseError : public Error {
public:
    ParseError(int line, const std::string& reason)
        : Error("line " + std::to_string(line) + ": " + reason), line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

class DisconnectedError : public Error {
public:
    DisconnectedError() : Error("graph is not connected") {}
};

class NotATreeError : public Error {
public:
    NotATreeError() : Error("graph is not a tree") {}
};

class NotBlockGraphError : public Error {
public:
    NotBlockGraphError() : Error("graph is not a block graph") {}
};

class InvalidKError : public Error {
public:
    InvalidKError(int k, int n)
        : Error("k = " + std::to_string(k) + " outside [1, " + std::to_string(n) + "]") {}
};

class TooLargeError : public Error {
public:
    explicit TooLargeError(const std::string& msg) : Error(msg) {}
};

class TooSmallError : public Error {
public:
    explicit TooSmallError(const std::string& msg) : Error(msg) {}
};

class WeightedUnsupportedError : public Error {
public:
    WeightedUnsupportedError() : Error("algorithm requires unit edge weights") {}
};

// Cyclomatic number of the input exceeds the configured cap for the
// spanning-tree recursion. Carries the measured value.
class CyclomaticCapExceededError : public Error {
public:
    CyclomaticCapExceededError(int nu, int cap)
        : Error("cyclomatic number " + std::to_string(nu) + " exceeds cap " +
                std::to_string(cap)),
          nu_(nu) {}

    int cyclomatic_number() const { return nu_; }

private:
    int nu_;
};

}  // namespace steiner
