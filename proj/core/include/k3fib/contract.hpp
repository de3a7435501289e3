#pragma once

#include <string>
#include <vector>

#include "k3fib/curves.hpp"

namespace k3fib {

struct ContractionResult {
    std::string terminal;  // "P2", "P1xP1", "F2", or "rank <r>" when stuck
    int contracted = 0;
    std::vector<std::vector<std::string>> log;  // orbits in contraction order
};

// Exhaustive search over orders of contracting orbits of pairwise disjoint (-1)-curves on a
// rational elliptic configuration (Picard rank 10). One result per reachable terminal,
// each with the first contraction sequence found. An empty action name means trivial action.
std::vector<ContractionResult> contract_to_minimal(const CurveConfig& c, const std::string& action);

}  // namespace k3fib
