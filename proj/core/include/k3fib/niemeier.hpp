#pragma once

#include <memory>
#include <string>
#include <vector>

#include "k3fib/lattice.hpp"
#include "k3fib/roots.hpp"

namespace k3fib {

// Discriminant class indices used in glue words:
//   A_n: i in Z/(n+1), class i represented by the fundamental weight at node i-1
//   D_n: 0, 1 = s, 2 = v, 3 = c (fundamental weights at nodes n-1, 0, n-2)
//   E6:  0, 1, 2 (nodes 0 and 4);  E7: 0, 1 (node 5);  E8: 0
using GlueWord = std::vector<int>;

struct NiemeierSpec {
    std::string name;                 // canonical root part, or "Leech"
    std::vector<RootType> components; // canonical order, empty for Leech
    std::vector<GlueWord> glue_words;

    bool rootless() const { return components.empty(); }
    int total_rank() const;
    long root_count() const;
};

const std::vector<NiemeierSpec>& catalog();
// Accepts any ordering of the root part ("D16+E8") or "Leech".
const NiemeierSpec& catalog_entry(const std::string& name);
int catalog_index(const NiemeierSpec& spec);

std::vector<RootType> parse_root_part(const std::string& s);

// Dual-basis coordinates (relative to the simple roots) of the class representative.
RatVec glue_representative(const RootType& t, int cls);
int glue_class_count(const RootType& t);

// A Niemeier lattice on an integral basis. For rooted entries the ambient coordinates
// are simple-root coordinates of the root part; for Leech they are Z^24 / sqrt 8.
struct RealizedNiemeier {
    NiemeierSpec spec;
    IntLattice lattice;
    RatMatrix basis;               // rows: basis vectors in ambient coordinates
    IntMatrix roots_to_basis;      // simple roots (rows) in lattice coordinates
    std::vector<int> offsets;      // first simple root index of each component

    // Roots of component i in lattice coordinates, in the order of component_roots_local.
    const std::vector<IntVec>& component_roots(int i) const;
    // Simple roots of component i (Cartan order) in lattice coordinates.
    IntMatrix component_simple_roots(int i) const;
    // Roots of component i in its own simple-root coordinates, sorted.
    const std::vector<IntVec>& component_roots_local(int i) const;
    std::vector<IntVec> all_roots() const;
    Int glue_order() const;
    std::vector<Int> glue_invariants() const;

    struct Cache;
    std::shared_ptr<Cache> cache;
};

RealizedNiemeier realize(const NiemeierSpec& spec);

struct NiemeierReport {
    std::string name;
    bool even = false;
    bool unimodular = false;
    bool definite = false;
    bool roots_match = false;
    bool glue_identity = false;
    long root_count = 0;
    Int glue_order = 0;
    std::vector<std::string> failures;

    bool ok() const { return failures.empty(); }
};

NiemeierReport verify(const NiemeierSpec& spec);

}  // namespace k3fib
