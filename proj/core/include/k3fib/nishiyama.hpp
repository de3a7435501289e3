#pragma once

#include <string>
#include <vector>

#include "k3fib/niemeier.hpp"

namespace k3fib {

struct Target {
    int catalog_index = 0;  // 1-based position in catalog()
    int component = 0;      // index into the entry's components
    RootType type;
};

// Lattice/component pairs admitting a primitive embedding of t0 (A8, D8, E8).
std::vector<Target> admissible_targets(const RootType& t0);

struct EmbeddingSpec {
    RootType t0;
    Target target;
    IntMatrix root_images;  // rows in the lattice coordinates of the realized Niemeier lattice
};

// Isometry invariants of the orthogonal complement.
struct Frame {
    Sublattice w;
    RootDecomposition root_part;
    std::vector<std::vector<KodairaType>> fibers;
    int mw_rank = 0;
    std::vector<Int> mw_torsion;
    Int det = 0;
};

struct EmbeddingSearch {
    std::vector<EmbeddingSpec> embeddings;  // primitive ones found, up to the sample limit
    std::vector<Frame> frames;              // one per distinct set of invariants
    bool uniqueness_violation = false;
    std::string diagnostic;
};

EmbeddingSearch find_embedding(const RealizedNiemeier& n, const RootType& t0, int component,
                               int sample = 4);

Frame frame(const RealizedNiemeier& n, const EmbeddingSpec& e);

struct ClassifyRow {
    int catalog_index = 0;
    std::string niemeier;
    std::string embedding;  // "A8 in D16"
    std::string roots;      // "E8+D7"
    std::string fibers;     // "II*+I3*"
    int mw_rank = 0;
    std::vector<Int> torsion;
    Int det = 0;
    std::string mw;         // "Z/2Z+Z"
    std::string diagnostic;
};

std::vector<ClassifyRow> classify(const RootType& t0);

std::string render_group(const std::vector<Int>& torsion, int free_rank);
std::string render_fibers(const std::vector<std::vector<KodairaType>>& fibers);

}  // namespace k3fib
