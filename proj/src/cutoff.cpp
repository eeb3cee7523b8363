#include "lpbk/cutoff.hpp"

#include <cmath>
#include <stdexcept>

namespace lpbk {
namespace {

double w_exp_inv(double t) { return t > 0 ? std::exp(-1.0 / t) : 0.0; }
double w_exp_inv_sq(double t) { return t > 0 ? std::exp(-1.0 / (t * t)) : 0.0; }

}  // namespace

double CutoffProfile::operator()(double r) const {
    if (!(r >= 0)) throw std::invalid_argument("cutoff: radius must be >= 0");
    if (r <= 1.0) return 1.0;
    if (r >= 2.0) return 0.0;
    const auto w = id == "exp-inv-sq" ? w_exp_inv_sq : w_exp_inv;
    const double a = w(2.0 - r), b = w(r - 1.0);
    return a / (a + b);
}

CutoffProfile build_cutoff(const std::string& id) {
    if (id != "exp-inv" && id != "exp-inv-sq")
        throw std::invalid_argument("build_cutoff: unknown profile " + id);
    return CutoffProfile{id};
}

}  // namespace lpbk
