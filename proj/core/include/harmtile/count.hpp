#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "harmtile/bijection.hpp"

namespace harmtile {

using BigCount = boost::multiprecision::cpp_int;

// The public counting API speaks in rectangle side lengths (width, height);
// the point-graph convention (width+1) x (height+1) stays internal.
struct CountBreakdown {
    int width = 0;
    int height = 0;
    int c = 0;
    int beta = 0;
    int omega = 0;
    BigCount count;
};

// Number of tilings of the width x height rectangle: 2^beta + 2^omega - 2.
// Sides must be nonzero.
CountBreakdown count_breakdown(int width, int height);
BigCount count_tilings(int width, int height);

// Every tiling of the rectangle, white polarity first, each polarity ordered
// by ascending kernel-coordinate mask over the canonical elimination basis
// (basis vector i contributes bit i). Throws CapExceeded when a kernel
// dimension exceeds dim_cap.
std::vector<Tiling> enumerate_tilings(int width, int height, int dim_cap = 20);

// Kernel basis for CLI and tooling, keyed by rectangle sides.
enum class KernelMethod { Elimination, Transfer, Structured };
std::vector<PolarizedVector> kernel_basis(int width, int height, Color polarity,
                                          KernelMethod method);

struct VerifyOptions {
    int max_side = 12;          // sweep 1 <= width <= height <= max_side
    bool dims_only = false;     // only the dimension checks
    int bijection_max_side = 12;
    int bijection_dim_cap = 10;
};

struct CheckResult {
    std::string name;
    long cases = 0;
    bool ok = true;
    std::string detail;  // first counterexample when failing
};

struct VerifyReport {
    bool ok = true;
    std::vector<CheckResult> checks;
};

// Cross-method verification harness: closed-form dimensions against
// elimination nullities, the square dimension law, span agreement of the
// three basis methods, the symmetry suite, and bijection round trips with
// tiling validation.
VerifyReport verify_all(const VerifyOptions& options);

}  // namespace harmtile
