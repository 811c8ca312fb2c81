#include "loopsmith/threads.hpp"

#include <charconv>
#include <cstdlib>
#include <string_view>
#include <thread>

namespace loopsmith {

unsigned worker_count() {
  unsigned requested = 0;
  if (const char* env = std::getenv("LOOPSMITH_THREADS")) {
    const std::string_view text(env);
    std::from_chars(text.data(), text.data() + text.size(), requested);
  }
  if (requested == 0) requested = std::thread::hardware_concurrency();
  return requested == 0 ? 1 : requested;
}

}  // namespace loopsmith
