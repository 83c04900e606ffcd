#pragma once

#include <ostream>

namespace geog {

/// Regression suite over the cataloged families: the X(k,r,n) closed forms
/// against recursive folds, the Y(i)/X(i) block tables, the two product
/// families with their canonical divisibilities, and the small-surface
/// homeomorphism types. Prints one line per group; returns true when every
/// check passes. Exact integer equality throughout.
bool run_example_suite(std::ostream& out);

}  // namespace geog
