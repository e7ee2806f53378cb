// Copyright 2026 The mwidth Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Walks through the library on the 10-vertex path and a small cycle.

#include <iostream>

#include "mwidth/mwidth.hpp"

int main() {
  using namespace mwidth;

  const Graph path = path_graph(10);
  const Ordering natural = Ordering::identity(10);
  const Ordering odd_first({0, 2, 4, 6, 8, 1, 3, 5, 7, 9});
  std::cout << "P10 natural order:   mw = " << mw_of_ordering(path, natural).value << '\n';
  std::cout << "P10 odd-first order: mw = " << mw_of_ordering(path, odd_first).value << '\n';
  std::cout << "P10 matching width:  " << matching_width_exact(path).value << '\n';

  const Graph cycle = cycle_graph(5);
  const WidthReport mw = matching_width_exact(cycle);
  const PathDecomposition pd = path_decomposition_from_ordering(cycle, *mw.witness_ordering);
  std::cout << "C5: mw = " << mw.value << ", pw = " << pathwidth_exact(cycle).value
            << ", decomposition from an optimal ordering has width " << pd.width() << '\n';
  pace::write_pd(std::cout, pd, cycle.num_vertices());

  const ExperimentReport lb = run_lower_bound_experiment(cycle, "C5", 1);
  std::cout << "minimum OBDD of CNF(C5): " << lb.measured_size << " nodes, bound " << lb.bound
            << (lb.pass ? " holds" : " fails") << '\n';
  return lb.pass ? 0 : 1;
}
