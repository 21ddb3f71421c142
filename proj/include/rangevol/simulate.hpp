#pragma once

#include <cstdint>
#include <vector>

#include "rangevol/candle.hpp"
#include "rangevol/rng.hpp"

namespace rangevol {

enum class IncrementLaw { kGaussian, kStudentT, kUniform, kDoubleExponential };

/// A seeded random-walk ensemble: `windows` windows of `increments_per_window`
/// iid increments each. Every window draws from its own splitmix-derived
/// stream, so output is reproducible and independent of evaluation order.
struct WalkSpec {
  int increments_per_window = 1;
  IncrementLaw law = IncrementLaw::kGaussian;
  double sigma = 1.0;  // gaussian per-increment standard deviation
  double df = 3.0;     // student-t degrees of freedom (may be non-integer)
  std::size_t windows = 0;
  std::uint64_t seed = 0;

  void validate() const;
};

/// One increment of the configured law.
double draw_increment(const WalkSpec& spec, Xoshiro256pp& rng);

/// Spreads of window `index` of the ensemble: the walk's end, max and min
/// over the N+1 lattice points, relative to the window's start.
SpreadsS1 simulate_window_spreads(const WalkSpec& spec, std::uint64_t index);

/// Full candle series; each window opens at the previous window's close
/// (the first at 0). Candle extrema are lattice extrema: they understate the
/// continuous-path extrema by O(1/sqrt(N)).
std::vector<Candle> simulate_windows(const WalkSpec& spec);

enum class ChlProvenance { kPath, kExactPair, kApproxTriple };

struct ChlSample {
  SpreadsS2 s;
  ChlProvenance provenance = ChlProvenance::kApproxTriple;
};

/// One exact draw of the flipped pair (C, H) at sigma = 1: C = |normal| and
/// H solves 2H(H-C) = E with E ~ Exp(1) independent of C (Seshadri).
inline SpreadsS2 draw_ch_exact(Xoshiro256pp& rng) {
  const double c = std::abs(draw_normal(rng));
  const double e = draw_exp(rng);
  const double h = 0.5 * (c + std::sqrt(c * c + 2.0 * e));
  return SpreadsS2{c, h, 0.0};
}

/// `count` exact (C, H) pairs, one stream per sample (L is reported as 0 and
/// is not part of the pair law).
std::vector<ChlSample> sample_ch_exact(std::size_t count, std::uint64_t seed);

/// Within-subinterval coupling of the approximate triple sampler.
/// kAntitheticDefault is the L' = C' - H' choice; kIndependent redraws the
/// minimum's exponential independently.
enum class ChlCopula { kAntitheticDefault, kIndependent };

/// One approximate (C, H, L) triple: on each of `subintervals` pieces of the
/// window an exact signed (c', h') pair at scale 1/sqrt(N) is drawn, the
/// piece minimum is taken as c' - h' (correct marginal, coupled per
/// `copula`), the pieces are chained, and the assembled window is flipped.
/// Marginals of C, H and L and the (C,H), (C,L) pair laws are exact; only
/// the (H, L) coupling is off, when the window max and min land in the same
/// piece.
SpreadsS2 draw_chl_approx(Xoshiro256pp& rng, int subintervals, ChlCopula copula);

std::vector<ChlSample> sample_chl_approx(std::size_t count, int subintervals,
                                         ChlCopula copula, std::uint64_t seed);

}  // namespace rangevol
