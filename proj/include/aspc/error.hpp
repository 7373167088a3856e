#ifndef ASPC_ERROR_HPP
#define ASPC_ERROR_HPP

#include <stdexcept>
#include <string>

namespace aspc {

// Single error type for the whole library. The code distinguishes the
// classes the C API and the CLI care about.
class Error : public std::runtime_error {
public:
    enum class Code {
        Parse,        // syntax error (carries line/column)
        Safety,       // unbound variable
        Arity,        // predicate used with two different arities
        Unsupported,  // construct outside the supported fragment
        Budget,       // grounding / clause / atom / time budget exceeded
        Invalid,      // bad argument or precondition violation
    };

    Error(Code code, std::string message, int line = 0, int column = 0)
        : std::runtime_error(std::move(message)), code_(code), line_(line), column_(column) {}

    Code code() const { return code_; }
    int line() const { return line_; }
    int column() const { return column_; }

private:
    Code code_;
    int line_;
    int column_;
};

} // namespace aspc

#endif
