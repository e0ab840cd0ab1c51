#pragma once

namespace levysim {

// Even moments m_k = sum_x x^k * weight(x) of a site distribution.
struct Moments {
  double m2 = 0.0;
  double m4 = 0.0;
  double m6 = 0.0;
};

}  // namespace levysim
