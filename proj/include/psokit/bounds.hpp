#pragma once

#include <cmath>

#include "psokit/errors.hpp"

namespace psokit {

/// Closed interval [lo, hi] with lo < hi, both finite.
struct bounds {
    double lo = 0.0;
    double hi = 0.0;

    double width() const { return hi - lo; }

    void validate() const {
        if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi))
            throw config_error("bounds require finite lo < hi");
    }

    double clamp(double x) const { return x < lo ? lo : (x > hi ? hi : x); }
    bool contains(double x) const { return x >= lo && x <= hi; }
};

} // namespace psokit
