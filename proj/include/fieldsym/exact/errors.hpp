#pragma once

#include <stdexcept>
#include <string>

namespace fieldsym {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace exact {

class UnknownVariable : public Error {
public:
    explicit UnknownVariable(const std::string& name)
        : Error("unknown variable '" + name + "'"), name_(name) {}
    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

class NotPolynomialIn : public Error {
public:
    explicit NotPolynomialIn(const std::string& name)
        : Error("expression is not polynomial in '" + name + "'"), name_(name) {}
    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
};

class InconsistentSystem : public Error {
public:
    using Error::Error;
};

class NotLinear : public Error {
public:
    using Error::Error;
};

class ContextMismatch : public Error {
public:
    ContextMismatch() : Error("expressions belong to unrelated symbol tables") {}
};

class MissingDerivativeRule : public Error {
public:
    MissingDerivativeRule(const std::string& symbol, const std::string& var)
        : Error("no derivative rule for '" + symbol + "' with respect to '" + var + "'") {}
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : Error("parse error at offset " + std::to_string(offset) + ": " + what), offset_(offset) {}
    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

}  // namespace exact
}  // namespace fieldsym
