#include "parkgram/config.hpp"

#include <cstdlib>

namespace parkgram {

namespace {

int env_int(const char* name, int fallback) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return fallback;
  char* end = nullptr;
  long v = std::strtol(raw, &end, 10);
  if (end == raw || *end != '\0' || v < 1) return fallback;
  return static_cast<int>(v);
}

}  // namespace

Limits& limits() {
  static Limits instance{
      env_int("PARKGRAM_DERIVE_CAP", Limits{}.derive_cap),
      env_int("PARKGRAM_ENUM_CAP", Limits{}.enum_len_cap),
  };
  return instance;
}

}  // namespace parkgram
