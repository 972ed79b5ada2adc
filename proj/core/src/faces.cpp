#include "genus/faces.hpp"

#include <stdexcept>
#include <string>

namespace genus {

int euler_genus(int n, int m, int face_count) {
  long twice = 2L + m - n - face_count;
  if (twice % 2 != 0)
    throw std::logic_error("euler count has odd parity: n=" + std::to_string(n) +
                           " m=" + std::to_string(m) +
                           " f=" + std::to_string(face_count));
  if (twice < 0)
    throw std::logic_error("euler count is negative: n=" + std::to_string(n) +
                           " m=" + std::to_string(m) +
                           " f=" + std::to_string(face_count));
  return static_cast<int>(twice / 2);
}

}  // namespace genus
