#include "abwave/parallel.hpp"

#include <cstdlib>

namespace abwave {

int default_thread_count() {
  if (const char* env = std::getenv("ABWAVE_THREADS")) {
    const int n = std::atoi(env);
    if (n >= 1) return n;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

}  // namespace abwave
