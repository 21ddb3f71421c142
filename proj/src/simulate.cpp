#include "rangevol/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rangevol {

void WalkSpec::validate() const {
  if (increments_per_window < 1)
    throw std::invalid_argument("WalkSpec: increments_per_window must be >= 1");
  if (law == IncrementLaw::kGaussian && !(sigma > 0.0))
    throw std::invalid_argument("WalkSpec: sigma must be > 0");
  if (law == IncrementLaw::kStudentT && !(df > 0.0))
    throw std::invalid_argument("WalkSpec: df must be > 0");
}

double draw_increment(const WalkSpec& spec, Xoshiro256pp& rng) {
  switch (spec.law) {
    case IncrementLaw::kGaussian: return spec.sigma * draw_normal(rng);
    case IncrementLaw::kStudentT: return draw_student_t(rng, spec.df);
    case IncrementLaw::kUniform: return 2.0 * rng.uniform01() - 1.0;
    case IncrementLaw::kDoubleExponential: return draw_laplace(rng);
  }
  throw std::logic_error("unreachable increment law");
}

SpreadsS1 simulate_window_spreads(const WalkSpec& spec, std::uint64_t index) {
  Xoshiro256pp rng = Xoshiro256pp::for_stream(spec.seed, index);
  double level = 0.0, hi = 0.0, lo = 0.0;
  for (int i = 0; i < spec.increments_per_window; ++i) {
    level += draw_increment(spec, rng);
    hi = std::max(hi, level);
    lo = std::min(lo, level);
  }
  return SpreadsS1{level, hi, lo};
}

std::vector<Candle> simulate_windows(const WalkSpec& spec) {
  spec.validate();
  std::vector<Candle> out;
  out.reserve(spec.windows);
  double open = 0.0;
  for (std::uint64_t i = 0; i < spec.windows; ++i) {
    const SpreadsS1 s = simulate_window_spreads(spec, i);
    out.push_back(Candle{open, open + s.h, open + s.l, open + s.c});
    open += s.c;
  }
  return out;
}

std::vector<ChlSample> sample_ch_exact(std::size_t count, std::uint64_t seed) {
  if (count < 1) throw std::invalid_argument("sample_ch_exact: count must be >= 1");
  std::vector<ChlSample> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    Xoshiro256pp rng = Xoshiro256pp::for_stream(seed, i);
    out.push_back(ChlSample{draw_ch_exact(rng), ChlProvenance::kExactPair});
  }
  return out;
}

SpreadsS2 draw_chl_approx(Xoshiro256pp& rng, int subintervals, ChlCopula copula) {
  const double s = 1.0 / std::sqrt(static_cast<double>(subintervals));
  const double s2 = s * s;
  double level = 0.0, hi = 0.0, lo = 0.0;
  for (int i = 0; i < subintervals; ++i) {
    const double c = s * draw_normal(rng);
    const double e = draw_exp(rng);
    const double h = 0.5 * (c + std::sqrt(c * c + 2.0 * s2 * e));
    double l;
    if (copula == ChlCopula::kAntitheticDefault) {
      l = c - h;
    } else {
      const double e2 = draw_exp(rng);
      l = c - 0.5 * (c + std::sqrt(c * c + 2.0 * s2 * e2));
    }
    hi = std::max(hi, level + h);
    lo = std::min(lo, level + l);
    level += c;
  }
  return flip(SpreadsS1{level, hi, lo});
}

std::vector<ChlSample> sample_chl_approx(std::size_t count, int subintervals,
                                         ChlCopula copula, std::uint64_t seed) {
  if (subintervals < 1)
    throw std::invalid_argument("sample_chl_approx: subintervals must be >= 1");
  std::vector<ChlSample> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    Xoshiro256pp rng = Xoshiro256pp::for_stream(seed, i);
    out.push_back(ChlSample{draw_chl_approx(rng, subintervals, copula),
                            ChlProvenance::kApproxTriple});
  }
  return out;
}

}  // namespace rangevol
