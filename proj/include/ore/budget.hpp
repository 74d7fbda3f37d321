#pragma once

#include <cstdlib>

namespace ore {

/// Resource limits for the bounded searches (witnesses, falsification,
/// monoid-word enumeration) and the Groebner engine.  Environment variables
/// ORE_BUDGET_DEGREE, ORE_BUDGET_EXPONENT and ORE_GB_PAIR_LIMIT override the
/// defaults; CLI flags override both.
struct Budget {
  int degree = 12;        // total-degree cap for structured candidates
  int exponent = 12;      // power cap when enumerating generator powers
  long gb_pair_limit = 20000;
  long search_nodes = 500000;

  static Budget from_env() {
    Budget b;
    if (const char* s = std::getenv("ORE_BUDGET_DEGREE")) b.degree = std::atoi(s);
    if (const char* s = std::getenv("ORE_BUDGET_EXPONENT")) b.exponent = std::atoi(s);
    if (const char* s = std::getenv("ORE_GB_PAIR_LIMIT")) b.gb_pair_limit = std::atol(s);
    return b;
  }
};

}  // namespace ore
