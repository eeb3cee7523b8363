#pragma once

#include <string>

namespace lpbk {

// Smooth radial cutoff profile: psi = 1 on [0, 1], 0 on [2, inf), strictly
// decreasing in between, glued as w(2-r) / (w(2-r) + w(r-1)).
// Profiles: "exp-inv" uses w(t) = exp(-1/t), "exp-inv-sq" uses w(t) = exp(-1/t^2).
struct CutoffProfile {
    std::string id;
    double operator()(double r) const;
};

CutoffProfile build_cutoff(const std::string& id = "exp-inv");

}  // namespace lpbk
