#pragma once

#include <string>
#include <vector>

#include "harmtile/tiling.hpp"

namespace harmtile {

// Thrown when an enumeration is asked to walk a kernel too large for it.
class CapExceeded : public std::runtime_error {
public:
    CapExceeded(int beta, int omega, int cap)
        : std::runtime_error("kernel dimensions (beta=" + std::to_string(beta) +
                             ", omega=" + std::to_string(omega) + ") exceed enumeration cap " +
                             std::to_string(cap)),
          beta(beta),
          omega(omega),
          cap(cap) {}
    int beta;
    int omega;
    int cap;
};

// Maps a nonzero kernel element to its tiling: classify the chunks of the
// splitting cut along the active-adjacency segments. The zero vector has no
// tiling and is rejected, as is any non-kernel input.
Tiling phi(const PolarizedVector& u);

// Inverse map: the vector active exactly at the tiling-colored lattice points
// of non-dashed sides. Validates the tiling first and re-verifies that the
// result is harmonic rather than trusting it, flagging the first point whose
// neighbor sum is odd.
PolarizedVector psi(const Tiling& t);

struct BijectionReport {
    Color polarity = Color::Black;
    int dimension = 0;
    long vectors_checked = 0;
    long distinct_tilings = 0;
    bool ok = false;
    std::vector<std::string> failures;
};

// Walks every nonzero kernel vector of one polarity: checks psi(phi(u)) == u,
// that all tilings are distinct and valid, and that classification never
// fails. Refuses kernels larger than dim_cap.
BijectionReport verify_bijection(const GridGraph& g, Color polarity, int dim_cap = 20);

// The active neighborhood of an opposite-color point w: its in-graph
// neighbors carrying a 1. Kernel elements only ever produce the six
// nontrivial shapes below (or Trivial).
enum class NeighborhoodClass {
    Trivial,
    InteriorRightAngle,  // interior w, two active neighbors at a right angle
    InteriorFull,        // interior w, all four neighbors active
    InteriorCollinear,   // interior w, two collinear active neighbors
    BoundaryCollinear,   // boundary w, the two along-edge neighbors active
    BoundaryRightAngle,  // boundary w, two active neighbors at a right angle
    CornerPair,          // corner w, both neighbors active
};

std::string neighborhood_class_name(NeighborhoodClass c);

NeighborhoodClass active_neighborhood(const PolarizedVector& u, Point w);

}  // namespace harmtile
