#pragma once

#include <stdexcept>
#include <string>

namespace pade {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input or insufficient series orders.
class InputError : public Error {
public:
    using Error::Error;
};

/// A zero pivot: the Padé table (or a derived operator) is non-normal.
/// Carries the level at which the recursion broke; -1 marks "not applicable".
class DegenerateError : public Error {
public:
    DegenerateError(const std::string& what, int n, int m = -1, int p = -1)
        : Error(what), n_(n), m_(m), p_(p) {}

    int n() const { return n_; }
    int m() const { return m_; }
    int p() const { return p_; }

private:
    int n_;
    int m_;
    int p_;
};

/// A computation exceeded its time budget.
class TimeoutError : public Error {
public:
    using Error::Error;
};

}  // namespace pade
