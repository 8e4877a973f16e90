#pragma once

#include <stdexcept>
#include <string>

namespace h2k {

// Base for all library errors. `name()` is the stable identifier surfaced
// by the CLI on stderr; `what()` carries the human-readable detail.
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& msg)
        : std::runtime_error(name + ": " + msg), name_(std::move(name)) {}
    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

// Errors caused by bad user input (CLI maps these to exit code 2).
class InputError : public Error {
public:
    using Error::Error;
};

// Violated internal invariants (CLI maps these to exit code 3).
class InternalError : public Error {
public:
    explicit InternalError(const std::string& msg) : Error("InternalError", msg) {}

protected:
    InternalError(std::string name, const std::string& msg) : Error(std::move(name), msg) {}
};

#define H2K_INPUT_ERROR(NAME)                                            \
    class NAME : public InputError {                                     \
    public:                                                              \
        explicit NAME(const std::string& msg) : InputError(#NAME, msg) {} \
    }

H2K_INPUT_ERROR(SyntaxError);
H2K_INPUT_ERROR(LabelError);
H2K_INPUT_ERROR(InconsistentDiagram);
H2K_INPUT_ERROR(NotAlternating);
H2K_INPUT_ERROR(NotReduced);
H2K_INPUT_ERROR(NotAKnot);
H2K_INPUT_ERROR(EvenDeterminant);
H2K_INPUT_ERROR(EvenModulus);
H2K_INPUT_ERROR(Indefinite);
H2K_INPUT_ERROR(SingularMatrix);
H2K_INPUT_ERROR(NonCyclic);
H2K_INPUT_ERROR(OutOfRange);
H2K_INPUT_ERROR(InconsistentBounds);
H2K_INPUT_ERROR(InvalidArgument);

#undef H2K_INPUT_ERROR

// Reached only when no sign/color choice yields a definite matrix on a
// reduced alternating diagram, which indicates corrupt input or a bug.
class NoDefiniteColoring : public InternalError {
public:
    explicit NoDefiniteColoring(const std::string& msg)
        : InternalError("NoDefiniteColoring", msg) {}
};

}  // namespace h2k
