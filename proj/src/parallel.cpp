#include "dist3/parallel.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>

namespace dist3 {

unsigned default_jobs() {
  if (const char* env = std::getenv("DIST3_JOBS")) {
    unsigned value = 0;
    auto [end, ec] = std::from_chars(env, env + std::strlen(env), value);
    if (ec == std::errc{} && *end == '\0' && value > 0) return value;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace dist3
