#ifndef TEMPRES_ERRORS_HPP
#define TEMPRES_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tempres {

// Instance-size guard tripped (oracle or construction asked to run beyond desk scale).
class GuardError : public std::runtime_error {
public:
    explicit GuardError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed instance text; line is 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

} // namespace tempres

#endif
