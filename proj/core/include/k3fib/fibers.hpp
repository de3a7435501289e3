#pragma once

#include <functional>
#include <string>
#include <vector>

#include "k3fib/curves.hpp"
#include "k3fib/roots.hpp"

namespace k3fib {

// Calls `visit` for every injective map of the pattern nodes into `pool` whose pairings
// reproduce the pattern exactly (induced). The pattern must be connected. Stops early
// when `visit` returns false.
void match_induced(const IntMatrix& pattern, const CurveConfig& c, const std::vector<int>& pool,
                   const std::function<bool(const std::vector<int>&)>& visit);

struct FiberSupport {
    std::vector<int> curves;  // affine node order
    std::vector<int> marks;
};

struct FiberCandidate {
    KodairaType type;
    IntVec fiber;  // coefficients of one support
    std::vector<FiberSupport> supports;  // all supports in this class
};

std::vector<FiberCandidate> find_fibers(const CurveConfig& c, const KodairaType& k);

// Primitive kernel vector of the induced intersection matrix of a fibre support.
IntVec fiber_class_of(const CurveConfig& c, const std::vector<int>& support);
IntVec reference_fiber_class(const CurveConfig& c);

struct ReducibleFiber {
    std::vector<KodairaType> candidates;
    RootType root;
    std::vector<int> curves;  // listed components
    std::vector<int> nodes;   // affine node of each listed component
    std::vector<int> marks;
    bool partial = false;

    std::string type_str() const;
};

std::vector<ReducibleFiber> fiber_decomposition(const CurveConfig& c, const IntVec& fiber);
std::vector<std::string> sections_of(const CurveConfig& c, const IntVec& fiber);

struct HeightTerm {
    std::string fiber;
    int zero_node = 0;
    int section_node = 0;
    Rat value;
};

struct HeightReport {
    Rat value;
    int constant = 4;   // 2 chi
    Int twice_po;       // 2 (P.O)
    std::vector<HeightTerm> terms;
};

HeightReport height(const CurveConfig& c, const IntVec& fiber, const std::string& zero,
                    const std::string& section);
bool is_torsion_section(const HeightReport& h);

// [NS : span], NS being the span of all listed curves.
Int index_in_ns(const CurveConfig& c, const std::vector<IntVec>& classes);

int fibration_type(const CurveConfig& c, const IntVec& fiber, const std::string& tau,
                   const IntVec& induced);

enum class ImageKind { FiberComponent, Section, MultiSection };

struct ImageClassification {
    ImageKind kind = ImageKind::FiberComponent;
    int m = 0;
};

ImageClassification classify_image(const CurveConfig& c, const std::string& curve,
                                   const std::string& tau);

struct FieldDegreeReport {
    int group_order = 1;
    int fibration_bound = 1;
    int mw_bound = 1;
    std::vector<std::pair<std::string, int>> stabilizer_indices;
};

struct FibrationRecord {
    std::string id;
    IntVec fiber;
    std::vector<ReducibleFiber> fibers;
    std::vector<std::string> sections;
    std::string zero;
    int tau_type = 0;  // 0 when not determined
    FieldDegreeReport bounds;

    std::string root_part() const;
    std::string fiber_types() const;
};

FieldDegreeReport field_degree_bounds(const CurveConfig& c, const FibrationRecord& r,
                                      const std::string& action);

// Decomposition, sections, and (when the config carries tau and a reference
// fibration) type and degree bounds under the action "galois" (or "tau").
FibrationRecord make_record(const CurveConfig& c, const std::string& id, const IntVec& fiber,
                            const std::string& zero = "");
FibrationRecord make_record(const CurveConfig& c, const DivisorRecord& r);

}  // namespace k3fib
