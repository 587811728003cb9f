#pragma once

#include <array>
#include <stdexcept>
#include <string>

namespace qlines {

// All library errors carry a stable machine-readable code alongside the
// human-readable message; the CLI forwards the code in its error objects.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

private:
    std::string code_;
};

class ParseError : public Error {
public:
    explicit ParseError(const std::string& message) : Error("parse_error", message) {}
};

class NotStronglyConnected : public Error {
public:
    NotStronglyConnected(int from, int to)
        : Error("not_strongly_connected",
                "no directed path from point " + std::to_string(from) + " to point " +
                    std::to_string(to)),
          from_(from), to_(to) {}

    int from() const { return from_; }
    int to() const { return to_; }

private:
    int from_;
    int to_;
};

// kind is one of "identity", "positivity", "triangle", "shape".
class AxiomViolation : public Error {
public:
    AxiomViolation(std::string kind, std::array<int, 3> witness, const std::string& message)
        : Error("axiom_violation", message), kind_(std::move(kind)), witness_(witness) {}

    const std::string& kind() const { return kind_; }
    const std::array<int, 3>& witness() const { return witness_; }

private:
    std::string kind_;
    std::array<int, 3> witness_;
};

class SamePointError : public Error {
public:
    explicit SamePointError(int p)
        : Error("same_point", "operation requires two distinct points, got " + std::to_string(p) +
                                  " twice") {}
};

class DuplicatePointError : public Error {
public:
    explicit DuplicatePointError(int p)
        : Error("duplicate_point", "sequence repeats point " + std::to_string(p)) {}
};

class SizeMismatchError : public Error {
public:
    SizeMismatchError(int a, int b)
        : Error("size_mismatch", "point counts differ: " + std::to_string(a) + " vs " +
                                     std::to_string(b)) {}
};

class TooLargeError : public Error {
public:
    TooLargeError(int n, int bound)
        : Error("too_large", "point count " + std::to_string(n) + " exceeds supported bound " +
                                 std::to_string(bound)) {}
};

class PropertyViolationError : public Error {
public:
    explicit PropertyViolationError(const std::string& message)
        : Error("property_violation", message) {}
};

class InvalidArgumentError : public Error {
public:
    explicit InvalidArgumentError(const std::string& message)
        : Error("invalid_argument", message) {}
};

} // namespace qlines
