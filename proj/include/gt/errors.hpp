#pragma once

#include <stdexcept>
#include <string>

namespace gt {

// Base for every domain error; `kind` is the stable machine-readable tag
// emitted by the CLI.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(what), kind_(std::move(kind)) {}
    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

class ShapeError : public Error {
public:
    explicit ShapeError(const std::string& w) : Error("ShapeMismatch", w) {}
};

class OutOfShapeError : public Error {
public:
    explicit OutOfShapeError(const std::string& w) : Error("OutOfShape", w) {}
};

class SyntaxError : public Error {
public:
    SyntaxError(const std::string& w, std::size_t pos)
        : Error("SyntaxError", w + " (at position " + std::to_string(pos) + ")"), pos_(pos) {}
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

class NotFiniteError : public Error {
public:
    explicit NotFiniteError(const std::string& w) : Error("NotFinite", w) {}
};

class AxiomError : public Error {
public:
    explicit AxiomError(const std::string& w) : Error("AxiomViolation", w) {}
};

class NotStandardError : public Error {
public:
    NotStandardError(const std::string& w, std::string suggestion)
        : Error("NotStandard", w), suggestion_(std::move(suggestion)) {}
    // a W-word conjugating the offending point to a standard one
    const std::string& suggestion() const { return suggestion_; }

private:
    std::string suggestion_;
};

class NotInvariantError : public Error {
public:
    explicit NotInvariantError(const std::string& w) : Error("NotInvariant", w) {}
};

class NotComparableError : public Error {
public:
    explicit NotComparableError(const std::string& w) : Error("NotComparable", w) {}
};

class NoSolutionError : public Error {
public:
    explicit NoSolutionError(const std::string& w) : Error("NoSolution", w) {}
};

class PoleError : public Error {
public:
    explicit PoleError(const std::string& w) : Error("PoleAt", w) {}
};

class SingularError : public Error {
public:
    explicit SingularError(const std::string& w) : Error("SingularGram", w) {}
};

// Invariant violations that indicate an arithmetic bug, never expected input.
class InternalError : public Error {
public:
    explicit InternalError(const std::string& w) : Error("Internal", w) {}
};

}  // namespace gt
