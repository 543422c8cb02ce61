#pragma once

#include <chrono>

#include "pade/errors.hpp"

namespace pade {

/// Optional wall-clock budget checked between recursion steps.
class Deadline {
public:
    using clock = std::chrono::steady_clock;

    Deadline() = default;
    explicit Deadline(double seconds)
        : enabled_(seconds > 0),
          end_(clock::now() + std::chrono::duration_cast<clock::duration>(std::chrono::duration<double>(seconds))) {}

    bool expired() const { return enabled_ && clock::now() >= end_; }

    void check() const {
        if (expired()) throw TimeoutError("time budget exceeded");
    }

private:
    bool enabled_ = false;
    clock::time_point end_{};
};

/// Calls d->check() when a deadline is present.
inline void check_deadline(const Deadline* d) {
    if (d != nullptr) d->check();
}

}  // namespace pade
