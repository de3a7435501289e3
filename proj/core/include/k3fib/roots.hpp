#pragma once

#include <compare>
#include <string>
#include <vector>

#include "k3fib/lattice.hpp"

namespace k3fib {

// Irreducible simply-laced root system A_n (n>=1), D_n (n>=4), E_n (n=6,7,8).
struct RootType {
    char family = 'A';
    int rank = 1;

    std::string str() const;
    long root_count() const;
    bool operator==(const RootType& o) const = default;
};

RootType make_root_type(char family, int rank);
RootType parse_root_type(const std::string& s);
// Canonical display order: E before D before A, larger rank first.
bool canonical_less(const RootType& a, const RootType& b);
void sort_canonical(std::vector<RootType>& v);
// "E7^2+A1^2", "" for the empty root system.
std::string render_root_part(std::vector<RootType> parts);

// Positive definite Cartan matrix. Node labelling:
//   A_n: path 0..n-1
//   D_n: path 0..n-2, node n-1 attached to node n-3
//   E_n: path 0..n-2, node n-1 attached to node 2
IntMatrix cartan_gram(const RootType& t);

// Norm-2 vectors of a positive definite even lattice (or norm -2 for negative definite).
std::vector<IntVec> enumerate_roots(const IntLattice& l);

struct RootComponent {
    RootType type;
    std::vector<IntVec> simple_roots;  // in the Cartan node order above
};

struct RootDecomposition {
    std::vector<RootComponent> components;  // canonical order
    int rank() const;
    std::vector<RootType> types() const;
    std::string str() const { return render_root_part(types()); }
    IntMatrix simple_root_matrix() const;
};

RootDecomposition ade_decompose(const IntLattice& l);
// Decompose a given full root set (closed under negation) with respect to `gram`.
RootDecomposition ade_decompose_roots(const IntMatrix& gram, const std::vector<IntVec>& roots);

// The Dynkin type of a set of simple roots forming a connected simply-laced diagram;
// returns the nodes in Cartan order.
RootType identify_dynkin(const std::vector<std::vector<int>>& adjacency, std::vector<int>& order);

enum class KodairaFamily { In, InStar, II, III, IV, IVStar, IIIStar, IIStar };

struct KodairaType {
    KodairaFamily family = KodairaFamily::In;
    int n = 0;

    std::string str() const;
    int components() const;
    bool operator==(const KodairaType& o) const = default;
};

KodairaType parse_kodaira(const std::string& s);
std::vector<KodairaType> kodaira_candidates(const RootType& t);
RootType root_type_of(const KodairaType& k);
// "I2|III" for ambiguous candidate lists.
std::string render_candidates(const std::vector<KodairaType>& c);

// Intersection matrix of the fibre components (self-intersection -2) and the
// multiplicities. Node 0 is the identity component.
//   I_n: cycle 0..n-1;  III as I_2, IV as I_3
//   I_n*: nodes 0,1 on node 2, path 2..n+2, nodes n+3,n+4 on node n+2
//   IV*: path 0..4, path 2-5-6;  III*: path 0..6, node 7 on 3;  II*: path 0..7, node 8 on 5
struct AffineDiagram {
    IntMatrix gram;
    std::vector<int> marks;
};

AffineDiagram affine_data(const KodairaType& k);

// Height correction of a section meeting component i, the zero section meeting node 0.
Rat contribution(const KodairaType& k, int component);
// Same, for arbitrary simple components met by the zero section and by the section.
Rat contribution_between(const KodairaType& k, int zero_component, int component);

}  // namespace k3fib
