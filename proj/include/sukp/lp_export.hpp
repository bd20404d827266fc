#pragma once

#include <iosfwd>
#include <string>

#include "sukp/instance.hpp"

namespace sukp {

// Writes the 0/1 model in CPLEX LP text format: binary y<i> selects item i,
// binary x<j> marks element j as counted, the objective maximizes the profit
// over y, one capacity row bounds the weight over x, and one link row
// x_j >= y_i per incidence entry forces counted elements on. The reverse
// implication needs no constraint: x_j only adds weight to the <= capacity
// row, so a maximizing solver never raises it without need.
//
// Ordering is deterministic: y1..ym then x1..xn (1-based), capacity row
// first, link rows in row-major incidence order.
void export_lp(const Instance& inst, std::ostream& out);
std::string export_lp(const Instance& inst);

}  // namespace sukp
