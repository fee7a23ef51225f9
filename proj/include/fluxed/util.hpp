// util.hpp -- small shared helpers: angle parsing, deterministic float
// formatting, a bounded worker pool for parameter sweeps.
#pragma once

#include <atomic>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace fluxed {

using cplx = std::complex<double>;
inline constexpr double kPi = 3.141592653589793238462643383279502884;

// Fold an angle into [0, 2*pi).
inline double fold_2pi(double a) {
    double r = std::fmod(a, 2.0 * kPi);
    if (r < 0) r += 2.0 * kPi;
    if (r >= 2.0 * kPi) r = 0.0;
    return r;
}

// Fold into (-pi, pi].
inline double fold_pm_pi(double a) {
    double r = std::fmod(a, 2.0 * kPi);
    if (r > kPi) r -= 2.0 * kPi;
    if (r <= -kPi) r += 2.0 * kPi;
    return r;
}

// Parse angles like "pi/2", "0.75pi", "-2pi/3", "1.5708", "3*pi/4".
inline double parse_angle(const std::string& s) {
    std::string t;
    for (char c : s) if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
    if (t.empty()) throw std::invalid_argument("parse_angle: empty string");
    auto pos = t.find("pi");
    if (pos == std::string::npos) return std::stod(t);
    std::string pre = t.substr(0, pos);
    std::string post = t.substr(pos + 2);
    if (!pre.empty() && pre.back() == '*') pre.pop_back();
    double num = 1.0;
    if (pre == "-") num = -1.0;
    else if (!pre.empty()) num = std::stod(pre);
    double den = 1.0;
    if (!post.empty()) {
        if (post[0] != '/') throw std::invalid_argument("parse_angle: bad suffix in '" + s + "'");
        den = std::stod(post.substr(1));
    }
    return num * kPi / den;
}

// 17 significant digits: round-trips any double; used for all CSV output.
inline std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

// Run fn(i) for i in [0, n) on up to `workers` threads. Results must be
// written to caller-owned slots indexed by i so output order is fixed.
inline void parallel_for(std::size_t n, unsigned workers, const std::function<void(std::size_t)>& fn) {
    if (workers <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    std::atomic<std::size_t> next{0};
    unsigned nt = std::min<std::size_t>(workers, n);
    for (unsigned w = 0; w < nt; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= n) break;
                fn(i);
            }
        });
    }
    for (auto& th : pool) th.join();
}

inline unsigned default_workers() {
    unsigned n = std::thread::hardware_concurrency();
    return n ? n : 1;
}

// Deterministic complex Gaussian vector for solver starts.
inline std::vector<cplx> seeded_gaussian(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g(0.0, 1.0);
    std::vector<cplx> v(n);
    for (auto& x : v) x = cplx(g(rng), g(rng));
    return v;
}

}  // namespace fluxed
