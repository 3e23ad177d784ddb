#include "tgi/rng.hpp"

#include <cmath>
#include <numbers>

namespace tgi {

double Rng::normal()
{
    if (hasCached_) {
        hasCached_ = false;
        return cached_;
    }
    const double u1 = uniformOpen();
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    cached_ = radius * std::sin(angle);
    hasCached_ = true;
    return radius * std::cos(angle);
}

} // namespace tgi
