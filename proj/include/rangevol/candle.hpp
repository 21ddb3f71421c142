#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace rangevol {

/// One time window's open/high/low/close, in log-price units.
/// The toolkit never applies a log transform itself; ingestion offers one.
struct Candle {
  double open = 0.0;
  double high = 0.0;
  double low = 0.0;
  double close = 0.0;

  bool valid() const {
    return low <= open && open <= high && low <= close && close <= high;
  }
};

/// Raw spreads relative to the window's open:
/// c = close - open, h = high - open, l = low - open.
/// Invariants: h >= max(0, c), l <= min(0, c).
struct SpreadsS1 {
  double c = 0.0;
  double h = 0.0;
  double l = 0.0;
};

/// Sign-flipped spreads (C, H, L) with C = |c|. The flip replaces the path
/// by its mirror image whenever the window closed down, so C >= 0, H >= C,
/// L <= 0 always hold. Delta = H - C and delta = -L are the exchangeable
/// overshoot/undershoot of the flipped path.
struct SpreadsS2 {
  double C = 0.0;
  double H = 0.0;
  double L = 0.0;

  double Delta() const { return H - C; }
  double delta() const { return -L; }
};

/// Spreads of a candle relative to its open. Rejects candles whose
/// high/low do not bracket open and close.
inline SpreadsS1 spreads_from_candle(const Candle& k) {
  if (!k.valid()) {
    throw std::invalid_argument(
        "invalid candle: requires low <= {open, close} <= high (open=" +
        std::to_string(k.open) + ", high=" + std::to_string(k.high) +
        ", low=" + std::to_string(k.low) + ", close=" + std::to_string(k.close) + ")");
  }
  return SpreadsS1{k.close - k.open, k.high - k.open, k.low - k.open};
}

/// The S1 -> S2 flip: C = |c|; (H, L) = (h, l) when c >= 0 and (-l, -h)
/// when c < 0. Ties at c = 0 take the c >= 0 branch (a null event for BM).
inline SpreadsS2 flip(const SpreadsS1& s) {
  if (s.c < 0.0) return SpreadsS2{-s.c, -s.l, -s.h};
  return SpreadsS2{s.c, s.h, s.l};
}

/// Path sign-flip in spread coordinates: (c, h, l) -> (-c, -l, -h).
/// flip() is invariant under it (for c != 0).
inline SpreadsS1 mirror(const SpreadsS1& s) { return SpreadsS1{-s.c, -s.l, -s.h}; }

}  // namespace rangevol
