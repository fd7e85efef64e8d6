#include "hline/parallel.hpp"

#include <cstdlib>
#include <string>

namespace hline {

std::size_t default_workers() {
  if (const char* env = std::getenv("HLINE_THREADS")) {
    try {
      long v = std::stol(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace hline
