#pragma once

#include <cmath>

namespace volterra {

struct Argmax {
  double x;
  double value;
};

/// Golden-section search for a maximum of f on [a, b]. Returns the best point
/// evaluated, endpoints included.
template <class F>
Argmax golden_max(F&& f, double a, double b, int iterations = 40) {
  constexpr double kInvPhi = 0.6180339887498949;
  Argmax best{a, f(a)};
  auto track = [&](double x, double v) {
    if (v > best.value) best = {x, v};
    return v;
  };
  track(b, f(b));
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = track(c, f(c));
  double fd = track(d, f(d));
  for (int i = 0; i < iterations; ++i) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = track(c, f(c));
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = track(d, f(d));
    }
  }
  return best;
}

}  // namespace volterra
