#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace rangevol {

/// splitmix64 finalizer; also used to derive stream seeds.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

struct SplitMix64 {
  std::uint64_t state = 0;
  std::uint64_t next() { return mix64(state++ * 0x9E3779B97F4A7C15ULL + 0xBF58476D1CE4E5B9ULL); }
};

/// xoshiro256++ with splitmix64 seeding. Streams are derived from
/// (seed, stream index), so window generation is reproducible and
/// independent of scheduling.
struct Xoshiro256pp {
  std::array<std::uint64_t, 4> s{};

  explicit Xoshiro256pp(std::uint64_t seed) {
    std::uint64_t sm = seed;
    for (auto& w : s) w = mix64(sm++);
    if (s[0] == 0 && s[1] == 0 && s[2] == 0 && s[3] == 0) s[0] = 1;
  }

  /// Independent, reproducible stream for one window / replication index.
  static Xoshiro256pp for_stream(std::uint64_t seed, std::uint64_t stream) {
    const std::uint64_t key = mix64(seed ^ (stream + 1) * 0xD2B74407B1CE6E93ULL);
    return Xoshiro256pp(key);
  }

  static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

  std::uint64_t next() {
    const std::uint64_t result = rotl(s[0] + s[3], 23) + s[0];
    const std::uint64_t t = s[1] << 17;
    s[2] ^= s[0];
    s[3] ^= s[1];
    s[1] ^= s[2];
    s[0] ^= s[3];
    s[2] ^= t;
    s[3] = rotl(s[3], 45);
    return result;
  }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

namespace detail {

/// Ziggurat tables for a monotone decreasing unnormalized density on [0, inf).
/// n layers of equal area V; layer 0 is the base rectangle plus tail beyond R.
/// R is solved at startup by bisection on the closure condition f(x[n-1]) +
/// V/x[n-1] == f(0), so the tables are self-consistent by construction.
struct ZigguratTable {
  static constexpr int kLayers = 128;
  std::array<double, kLayers + 1> x{};      // x[0] = V/f(R) >= x[1] = R > ... > x[n] = 0
  std::array<double, kLayers + 1> y{};      // y[k] = f(x[k]); y[0] = 0 for the base
  std::array<double, kLayers> ratio{};      // x[k+1]/x[k], fast-accept threshold
  double r = 0.0;

  template <class F, class Tail>
  void build(F&& f, Tail&& tail_area, double lo, double hi) {
    // err(R) > 0 when layers overshoot the mode before n steps (R too small).
    auto closure = [&](double R, std::array<double, kLayers + 1>& xs, double& V) -> double {
      V = R * f(R) + tail_area(R);
      xs[1] = R;
      double fk = f(R);
      for (int k = 1; k <= kLayers - 2; ++k) {
        const double target = fk + V / xs[k];
        if (target >= f(0.0)) return 1.0 + static_cast<double>(kLayers - 1 - k);
        xs[k + 1] = inverse(f, target, xs[k]);
        fk = target;
      }
      return fk + V / xs[kLayers - 1] - f(0.0);
    };

    std::array<double, kLayers + 1> xs{};
    double V = 0.0;
    double flo = closure(lo, xs, V), fhi = closure(hi, xs, V);
    if (!(flo > 0.0 && fhi < 0.0))
      throw std::runtime_error("ziggurat: bracket does not straddle closure root");
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (lo + hi);
      (closure(mid, xs, V) > 0.0 ? lo : hi) = mid;
    }
    r = 0.5 * (lo + hi);
    closure(r, xs, V);
    x = xs;
    x[0] = V / f(r);
    x[kLayers] = 0.0;
    y[0] = 0.0;
    for (int k = 1; k <= kLayers; ++k) y[k] = f(x[k]);
    y[kLayers] = f(0.0);
    for (int k = 0; k < kLayers; ++k) ratio[k] = x[k + 1] / x[k];
  }

 private:
  // Invert the decreasing density by bisection on [0, x_hi].
  template <class F>
  static double inverse(F&& f, double target, double x_hi) {
    double lo = 0.0, hi = x_hi;
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (lo + hi);
      (f(mid) > target ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
  }
};

inline const ZigguratTable& normal_ziggurat() {
  static const ZigguratTable table = [] {
    ZigguratTable t;
    auto f = [](double v) { return std::exp(-0.5 * v * v); };
    auto tail = [](double R) {
      // integral_R^inf exp(-v^2/2) dv = sqrt(pi/2) erfc(R/sqrt(2))
      return 1.25331413731550025 * std::erfc(R * 0.70710678118654752440);
    };
    t.build(f, tail, 2.0, 5.0);
    return t;
  }();
  return table;
}

inline const ZigguratTable& exp_ziggurat() {
  static const ZigguratTable table = [] {
    ZigguratTable t;
    auto f = [](double v) { return std::exp(-v); };
    auto tail = [](double R) { return std::exp(-R); };
    t.build(f, tail, 2.0, 10.0);
    return t;
  }();
  return table;
}

}  // namespace detail

/// Standard normal draw (ziggurat; ~99% of draws take the two-compare path).
inline double draw_normal(Xoshiro256pp& rng) {
  const auto& t = detail::normal_ziggurat();
  for (;;) {
    const std::uint64_t bits = rng.next();
    const int k = static_cast<int>(bits & 127);
    const bool neg = (bits & 128) != 0;
    const double u = static_cast<double>(bits >> 11) * 0x1.0p-53;
    const double xv = u * t.x[k];
    if (u < t.ratio[k]) return neg ? -xv : xv;
    if (k == 0) {
      // Marsaglia tail: x ~ Exp(R) accepted with probability exp(-x^2/2).
      for (;;) {
        const double z = -std::log1p(-rng.uniform01()) / t.r;
        const double w = -std::log1p(-rng.uniform01());
        if (w + w > z * z) {
          const double v = t.r + z;
          return neg ? -v : v;
        }
      }
    }
    const double yv = t.y[k] + rng.uniform01() * (t.y[k + 1] - t.y[k]);
    if (yv < std::exp(-0.5 * xv * xv)) return neg ? -xv : xv;
  }
}

/// Exp(1) draw (ziggurat; the tail restarts shifted by R, memorylessness).
inline double draw_exp(Xoshiro256pp& rng) {
  const auto& t = detail::exp_ziggurat();
  double offset = 0.0;
  for (;;) {
    const std::uint64_t bits = rng.next();
    const int k = static_cast<int>(bits & 127);
    const double u = static_cast<double>(bits >> 11) * 0x1.0p-53;
    const double xv = u * t.x[k];
    if (u < t.ratio[k]) return offset + xv;
    if (k == 0) {
      offset += t.r;
      continue;
    }
    const double yv = t.y[k] + rng.uniform01() * (t.y[k + 1] - t.y[k]);
    if (yv < std::exp(-xv)) return offset + xv;
  }
}

/// Marsaglia polar normal; reference implementation used to cross-validate
/// the ziggurat in tests.
struct PolarNormal {
  double cache = 0.0;
  bool has_cache = false;

  double next(Xoshiro256pp& rng) {
    if (has_cache) {
      has_cache = false;
      return cache;
    }
    for (;;) {
      const double u = 2.0 * rng.uniform01() - 1.0;
      const double v = 2.0 * rng.uniform01() - 1.0;
      const double s = u * u + v * v;
      if (s > 0.0 && s < 1.0) {
        const double m = std::sqrt(-2.0 * std::log(s) / s);
        cache = v * m;
        has_cache = true;
        return u * m;
      }
    }
  }
};

/// Gamma(shape, scale 1) via Marsaglia-Tsang, with the boost U^(1/a)
/// reduction for shape < 1. Shape may be non-integer.
inline double draw_gamma(Xoshiro256pp& rng, double shape) {
  if (!(shape > 0.0)) throw std::invalid_argument("draw_gamma: shape must be > 0");
  if (shape < 1.0) {
    const double g = draw_gamma(rng, shape + 1.0);
    return g * std::pow(rng.uniform01(), 1.0 / shape);
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    const double z = draw_normal(rng);
    const double t = 1.0 + c * z;
    if (t <= 0.0) continue;
    const double v = t * t * t;
    const double u = rng.uniform01();
    if (u < 1.0 - 0.0331 * z * z * z * z) return d * v;
    if (std::log(u) < 0.5 * z * z + d * (1.0 - v + std::log(v))) return d * v;
  }
}

inline double draw_chi2(Xoshiro256pp& rng, double df) { return 2.0 * draw_gamma(rng, 0.5 * df); }

/// Student-t via normal / sqrt(chi2/df); df may be non-integer.
inline double draw_student_t(Xoshiro256pp& rng, double df) {
  return draw_normal(rng) / std::sqrt(draw_chi2(rng, df) / df);
}

/// Double-exponential (Laplace) with unit scale.
inline double draw_laplace(Xoshiro256pp& rng) {
  const double e = draw_exp(rng);
  return (rng.next() & 1) ? e : -e;
}

}  // namespace rangevol
