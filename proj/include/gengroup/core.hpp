#pragma once

// Finite generalized groups (completely simple semigroups) stored as
// multiplication tables over dense element indices 0..order-1.

#include <Eigen/Core>

#include <array>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace gengroup {

using Element = int;
using CayleyTable = Eigen::Matrix<Element, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

struct LocalIdentityFailure {
    Element element;
    std::vector<Element> candidates; // empty or at least two
    bool operator==(const LocalIdentityFailure&) const = default;
};

/// Outcome of an exhaustive axiom scan. All failures are collected.
struct AxiomReport {
    bool associative = true;
    std::optional<std::array<Element, 3>> associativity_witness;
    std::vector<LocalIdentityFailure> local_identity_failures;
    std::vector<Element> inverse_failures;

    bool verdict() const {
        return associative && local_identity_failures.empty() && inverse_failures.empty();
    }
};

std::string describe(const AxiomReport& report);

class MalformedTable : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class AxiomViolation : public std::runtime_error {
public:
    enum class Kind { NotAssociative, NoUniqueLocalIdentity, NoInverse };

    explicit AxiomViolation(AxiomReport report);

    Kind kind() const { return kind_; }
    const AxiomReport& report() const { return report_; }

private:
    AxiomReport report_;
    Kind kind_;
};

/// Internal invariant breach inside a component; unreachable for valid input.
class ClosureViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Scan every axiom instance. Throws MalformedTable for non-square or
/// out-of-range tables (including the empty table).
AxiomReport verify_axioms(const CayleyTable& table);

/// Immutable, validated generalized group. Local identities and inverses are
/// resolved once at construction.
class FiniteGenGroup {
public:
    /// Throws MalformedTable or AxiomViolation.
    FiniteGenGroup(std::vector<std::string> names, CayleyTable table);

    int order() const { return static_cast<int>(table_.rows()); }
    Element operator()(Element x, Element y) const { return table_(x, y); }
    const CayleyTable& table() const { return table_; }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(Element x) const { return names_[static_cast<std::size_t>(x)]; }

    Element local_identity(Element x) const { return identity_[static_cast<std::size_t>(x)]; }
    Element inverse(Element x) const { return inverse_[static_cast<std::size_t>(x)]; }

    bool operator==(const FiniteGenGroup& other) const {
        return names_ == other.names_ && table_ == other.table_;
    }

private:
    std::vector<std::string> names_;
    CayleyTable table_;
    std::vector<Element> identity_;
    std::vector<Element> inverse_;
};

FiniteGenGroup make_finite_gg(std::vector<std::string> names, CayleyTable table);

inline Element local_identity(const FiniteGenGroup& g, Element x) { return g.local_identity(x); }
inline Element inverse(const FiniteGenGroup& g, Element x) { return g.inverse(x); }

/// Elements x with x*x = x, ascending.
std::vector<Element> idempotents(const FiniteGenGroup& g);

bool is_normal(const FiniteGenGroup& g);
bool is_abelian(const FiniteGenGroup& g);
bool is_group(const FiniteGenGroup& g);

/// A generalized group with exactly one idempotent.
class FiniteGroup {
public:
    /// Throws std::invalid_argument unless g has exactly one idempotent.
    explicit FiniteGroup(FiniteGenGroup g);

    const FiniteGenGroup& gg() const { return gg_; }
    Element identity() const { return identity_; }
    int order() const { return gg_.order(); }
    Element operator()(Element x, Element y) const { return gg_(x, y); }
    Element inverse(Element x) const { return gg_.inverse(x); }

    bool operator==(const FiniteGroup&) const = default;

private:
    FiniteGenGroup gg_;
    Element identity_;
};

/// Parent indices of {g : e(g) = e(a)}, ascending.
std::vector<Element> component_members(const FiniteGenGroup& g, Element a);

/// The group G_{e(a)} with labels inherited from g. Closure is re-verified
/// and a breach raises ClosureViolation.
FiniteGroup group_component(const FiniteGenGroup& g, Element a);

/// Componentwise product; element (x, y) has index x * |h| + y.
FiniteGenGroup direct_product(const FiniteGenGroup& g, const FiniteGenGroup& h);

/// True iff subset is nonempty and closed under product, inverse and e.
bool generalized_subgroup_check(const FiniteGenGroup& g, std::span<const Element> subset);

/// Smallest subset containing seeds closed under product, inverse and e.
std::vector<Element> generated_closure(const FiniteGenGroup& g, std::span<const Element> seeds);

/// The generalized group on a closed subset; element k of the result is
/// subset[k] (after sorting). Throws std::invalid_argument if not closed.
FiniteGenGroup restrict_to(const FiniteGenGroup& g, std::span<const Element> subset);

/// Small named constructions used by fixtures and tests.
FiniteGenGroup cyclic_group(int n);
FiniteGenGroup right_zero_semigroup(int n);
FiniteGenGroup left_zero_semigroup(int n);
FiniteGenGroup trivial_group();

} // namespace gengroup
