#pragma once

// Rees matrix construction: carrier I x G x Lambda with
// (i,g,l)(j,h,m) = (i, g p_{l j} h, m).

#include "gengroup/core.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace gengroup {

using SandwichMatrix = Eigen::Matrix<Element, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

struct ReesSpec {
    FiniteGroup base;
    int i_size = 1;
    int lambda_size = 1;
    SandwichMatrix sandwich; // lambda_size x i_size, entry (l, i) = p_{l i}

    bool operator==(const ReesSpec&) const = default;
};

class MalformedSpec : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class IndexOutOfRange : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

void validate(const ReesSpec& spec);

/// Index of the triple (i, g, l) in rees_build(spec).
Element rees_element(const ReesSpec& spec, int i, Element g, int lambda);

struct ReesTriple {
    int i;
    Element g;
    int lambda;
};
ReesTriple rees_triple(const ReesSpec& spec, Element x);

/// Labels are "i:g:l" with g the base-group index.
FiniteGenGroup rees_build(const ReesSpec& spec);

/// The idempotent (i, p_{l i}^{-1}, l).
Element rees_idempotent(const ReesSpec& spec, int i, int lambda);

struct ReesBounds {
    int max_i = 2;
    int max_lambda = 2;
    int max_group_order = 6;
};

/// Names of the fixed base-group catalogue, in catalogue order.
const std::vector<std::string>& catalogue_names();
FiniteGroup catalogue_group(const std::string& name);

/// Deterministic for a given seed. The base group is drawn from the
/// catalogue entries of order <= bounds.max_group_order.
ReesSpec random_rees(std::uint64_t seed, const ReesBounds& bounds = {});

/// Every spec over catalogue groups of order <= max_group_order with
/// |I| <= max_i, |Lambda| <= max_lambda and every sandwich matrix.
std::vector<ReesSpec> enumerate_rees_specs(int max_group_order, int max_i, int max_lambda);

} // namespace gengroup
