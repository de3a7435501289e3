#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "k3fib/lattice.hpp"

namespace k3fib {

enum class SurfaceKind { K3, RationalElliptic };

struct Curve {
    std::string name;
    int self = -2;
};

// A curve whose class is a fixed combination of other (non-derived) curves.
struct DerivedCurve {
    std::string name;
    std::vector<std::pair<int, std::string>> terms;  // (coefficient, curve)
};

// Permutation of the non-derived curves; image[i] is the index of the image of curve i.
struct Permutation {
    std::vector<int> image;
    int order() const;
    bool operator==(const Permutation& o) const = default;
    bool operator<(const Permutation& o) const { return image < o.image; }
};

struct GroupAction {
    std::string name;
    std::vector<Permutation> generators;
};

struct ReferenceFibration {
    std::vector<std::pair<std::string, std::vector<std::string>>> fibers;
    std::vector<std::string> sections;
    std::string zero;
};

// Named divisor, e.g. the fibre of a fibration of interest.
struct DivisorRecord {
    std::string id;
    std::vector<std::pair<int, std::string>> terms;
    std::string zero;  // optional preferred zero section
};

struct CurveConfig {
    SurfaceKind surface = SurfaceKind::K3;
    bool smooth_branch = false;
    std::vector<Curve> curves;        // derived curves last
    IntMatrix pairing;                // intersection numbers, all curves
    std::vector<DerivedCurve> derived;
    std::optional<ReferenceFibration> reference;
    std::vector<GroupAction> actions;
    std::vector<DivisorRecord> records;
    std::map<std::string, std::string> lifts;  // base names for double-cover lifts

    int size() const { return static_cast<int>(curves.size()); }
    int base_size() const { return size() - static_cast<int>(derived.size()); }
    bool is_derived(int i) const { return i >= base_size(); }
    int index(const std::string& name) const;  // throws DomainError
    std::optional<int> find(const std::string& name) const;
    const GroupAction& action(const std::string& name) const;
    const DivisorRecord& record(const std::string& id) const;

    IntVec divisor(const std::vector<std::pair<int, std::string>>& terms) const;
    IntVec curve_vector(int i) const;
    // Replace derived curves by their defining combinations.
    IntVec expand(const IntVec& coeffs) const;
    Int pair(const IntVec& a, const IntVec& b) const;
    // Pairings of a divisor with every curve; equal rows iff equal classes.
    IntVec class_key(const IntVec& coeffs) const;
    bool same_class(const IntVec& a, const IntVec& b) const;
    IntVec apply(const Permutation& g, const IntVec& coeffs) const;
    std::string render_divisor(const IntVec& coeffs) const;
};

// Builds a config from curves and pairings; derived curve pairings are computed.
void add_derived_curve(CurveConfig& c, const DerivedCurve& d);

struct ValidationReport {
    std::vector<std::string> issues;
    bool ok() const { return issues.empty(); }
};

ValidationReport validate_config(const CurveConfig& c);
// Throws DomainError listing the issues.
void require_valid(const CurveConfig& c);

// The group generated by the action, as permutations of the non-derived curves.
std::vector<Permutation> group_elements(const CurveConfig& c, const GroupAction& a);
Permutation compose(const Permutation& a, const Permutation& b);  // a after b

CurveConfig double_cover_config(const CurveConfig& r);

struct NsLattice {
    IntLattice lattice;
    std::vector<std::string> basis_names;  // empty when no curve basis exists
    IntMatrix basis;                       // rows: coefficient vectors over the curves
};

NsLattice ns_lattice(const CurveConfig& c);

}  // namespace k3fib
