#pragma once

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>

namespace leo {

// Verbosity is read once from LEOPOLDT_LOG (error|info|debug); default error.
inline int log_level() {
  static const int level = [] {
    const char* env = std::getenv("LEOPOLDT_LOG");
    if (env == nullptr) return 0;
    if (std::strcmp(env, "debug") == 0) return 2;
    if (std::strcmp(env, "info") == 0) return 1;
    return 0;
  }();
  return level;
}

inline void log_info(const std::string& msg) {
  if (log_level() >= 1) std::fprintf(stderr, "[info] %s\n", msg.c_str());
}

inline void log_debug(const std::string& msg) {
  if (log_level() >= 2) std::fprintf(stderr, "[debug] %s\n", msg.c_str());
}

}  // namespace leo
