#pragma once

#include <stdexcept>
#include <string>

// Always-on internal consistency check; these guard invariants the rest of
// the pipeline relies on, so they stay active in release builds.
#define KS_CHECK(cond, msg)                                                  \
  do {                                                                       \
    if (!(cond))                                                             \
      throw std::logic_error(std::string("internal check failed: ") + (msg)); \
  } while (0)
