#include "bgbench/rng.hpp"

#include <cmath>

namespace bgbench::rng {

double Stream::next_gaussian() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    double u1 = 0.0;
    do {
        u1 = next_real();
    } while (u1 <= 0.0);
    const double u2 = next_real();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * M_PI * u2;
    spare_ = r * std::sin(theta);
    have_spare_ = true;
    return r * std::cos(theta);
}

}  // namespace bgbench::rng
