#pragma once

#include <stdexcept>
#include <string>

namespace da {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Unterminated comment or string/char literal; carries the opening line.
class LexicalError : public Error {
public:
    LexicalError(const std::string& message, int opening_line)
        : Error(message + " (opened at line " + std::to_string(opening_line) + ")"),
          line_(opening_line) {}
    int line() const { return line_; }

private:
    int line_;
};

// Brace region still open at end of file.
class ParseError : public Error {
public:
    ParseError(std::string file, int line, const std::string& message)
        : Error(file + ":" + std::to_string(line) + ": " + message),
          file_(std::move(file)), line_(line) {}
    const std::string& file() const { return file_; }
    int line() const { return line_; }

private:
    std::string file_;
    int line_;
};

class EmptyCodebaseError : public Error {
public:
    using Error::Error;
};

class NotFoundError : public Error {
public:
    using Error::Error;
};

// Evidence or edge referencing a class outside the model; signals an upstream bug.
class ConsistencyError : public Error {
public:
    using Error::Error;
};

class ValidationError : public Error {
public:
    using Error::Error;
};

class DimensionError : public Error {
public:
    using Error::Error;
};

class NumericError : public Error {
public:
    using Error::Error;
};

class InsufficientDataError : public Error {
public:
    using Error::Error;
};

class DegenerateDataError : public Error {
public:
    using Error::Error;
};

} // namespace da
