#pragma once

#include "dusk/fincat.hpp"

namespace dusk::testing {

// Two objects with a parallel pair of arrows u, v: 0 -> 1 and no
// non-trivial compositions.  The smallest non-thin category.
inline FinCategory parallel_pair() {
  FinCategory c;
  c.num_objects = 2;
  c.mor_src = {0, 1, 0, 0};
  c.mor_tgt = {0, 1, 1, 1};
  c.identity = {0, 1};
  const int M = 4;
  c.compose_table.assign(M * M, -1);
  auto set = [&](int g, int f, int r) { c.compose_table[g * M + f] = r; };
  set(0, 0, 0);
  set(1, 1, 1);
  set(2, 0, 2);
  set(1, 2, 2);
  set(3, 0, 3);
  set(1, 3, 3);
  return c;
}

// One object whose two endomorphisms form the group of order two.
inline FinCategory cyclic2() {
  FinCategory c;
  c.num_objects = 1;
  c.mor_src = {0, 0};
  c.mor_tgt = {0, 0};
  c.identity = {0};
  c.compose_table = {0, 1, 1, 0};
  return c;
}

}  // namespace dusk::testing
