#pragma once

#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "k3fib/curves.hpp"
#include "k3fib/fibers.hpp"
#include "k3fib/normal_form.hpp"

namespace k3fib::testing {

// (curve index, multiplicity), sorted.
using FiberKey = std::vector<std::pair<int, int>>;

// Induced configuration on the given non-derived curves.
CurveConfig sub_config(const CurveConfig& c, const std::vector<int>& keep);

// order[new] = old, over the non-derived curves; derived curves stay last.
CurveConfig permute_config(const CurveConfig& c, const std::vector<int>& order);

// Every connected induced sub-config on at most max_size base curves, as sorted index sets.
std::vector<std::vector<int>> connected_subsets(const CurveConfig& c, int max_size);

std::vector<int> random_order(int n, std::mt19937& rng);

// Exhaustive search over coefficient vectors with entries 0..max_coeff on the
// (-2)-curves: connected support, primitive, D.C = 0 for every support curve.
std::set<FiberKey> brute_force_fibers(const CurveConfig& c, int max_coeff = 6);

// Union of all supports returned by find_fibers over every Kodaira type that fits.
std::set<FiberKey> search_fibers(const CurveConfig& c);

FiberKey key_of(const IntVec& coeffs);

// Whether the support and multiplicities of a listed fibre are returned by find_fibers.
bool listing_found(const CurveConfig& c, const IntVec& listing);

IntMatrix random_symmetric(std::mt19937& rng, int n, int bound);

// Empty when U A V = D holds with unimodular U, V and a divisibility chain on D.
std::string smith_form_defect(const IntMatrix& a, const SmithForm& s);

}  // namespace k3fib::testing
