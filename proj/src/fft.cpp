#include "lpbk/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>

namespace lpbk {
namespace {

// FFTW plan creation is not thread safe; execution via fftw_execute_dft is.
// Plans are cached per shape and created with FFTW_UNALIGNED so they can run
// on any caller buffer. FFTW_ESTIMATE keeps planning deterministic.
std::mutex plan_mutex;
std::map<std::tuple<int, int, int>, fftw_plan> plan_cache;

fftw_plan get_plan(const GridSpec& g, int sign) {
    std::lock_guard<std::mutex> lock(plan_mutex);
    auto key = std::make_tuple(g.dim, g.n, sign);
    auto it = plan_cache.find(key);
    if (it != plan_cache.end()) return it->second;

    std::vector<cplx> a(g.size()), b(g.size());
    auto* pa = reinterpret_cast<fftw_complex*>(a.data());
    auto* pb = reinterpret_cast<fftw_complex*>(b.data());
    const int fsign = sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD;
    fftw_plan p = g.dim == 1
        ? fftw_plan_dft_1d(g.n, pa, pb, fsign, FFTW_ESTIMATE | FFTW_UNALIGNED)
        : fftw_plan_dft_2d(g.n, g.n, pa, pb, fsign, FFTW_ESTIMATE | FFTW_UNALIGNED);
    if (!p) throw std::runtime_error("fft: planning failed");
    plan_cache.emplace(key, p);
    return p;
}

}  // namespace

void dft(const GridSpec& g, const cplx* in, cplx* out, int sign) {
    fftw_plan p = get_plan(g, sign);
    // out-of-place c2c transforms preserve the input array
    fftw_execute_dft(p,
                     reinterpret_cast<fftw_complex*>(const_cast<cplx*>(in)),
                     reinterpret_cast<fftw_complex*>(out));
}

}  // namespace lpbk
