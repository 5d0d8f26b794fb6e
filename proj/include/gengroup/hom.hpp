#pragma once

// Element-wise maps between finite generalized groups and the homomorphism
// law f(ab) = f(a)f(b).

#include "gengroup/core.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gengroup {

class ShapeMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class NotAHomomorphism : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Non-owning: source and target must outlive the table.
class HomTable {
public:
    /// Throws ShapeMismatch unless images has one in-range entry per source element.
    HomTable(const FiniteGenGroup& source, const FiniteGenGroup& target, std::vector<Element> images);

    const FiniteGenGroup& source() const { return *source_; }
    const FiniteGenGroup& target() const { return *target_; }
    const std::vector<Element>& images() const { return images_; }
    Element operator()(Element x) const { return images_[static_cast<std::size_t>(x)]; }

private:
    const FiniteGenGroup* source_;
    const FiniteGenGroup* target_;
    std::vector<Element> images_;
};

struct HomCheck {
    bool holds = true;
    std::optional<std::pair<Element, Element>> witness; // first failing (a, b), lexicographic

    explicit operator bool() const { return holds; }
};

HomCheck check_hom(const HomTable& h);

struct PreservationViolation {
    enum class Law { LocalIdentity, Inverse };
    Law law;
    Element element;
};

/// Checks f(e(a)) = e(f(a)) and f(a^-1) = f(a)^-1 for every a. Throws
/// NotAHomomorphism when the law fails. A non-empty result is a defect.
std::vector<PreservationViolation> check_preservation(const HomTable& h);

struct HomEnumeration {
    std::vector<HomTable> homs;
    bool truncated = false;
};

/// All homomorphisms g -> h in lexicographic order of image vectors.
HomEnumeration enumerate_homs(const FiniteGenGroup& g, const FiniteGenGroup& h, std::size_t cap = 100000);

bool is_isomorphism(const HomTable& h);

/// First isomorphism g -> h in lexicographic order, if any.
std::optional<HomTable> find_isomorphism(const FiniteGenGroup& g, const FiniteGenGroup& h);

/// outer after inner; throws ShapeMismatch unless inner.target() is outer.source().
HomTable compose(const HomTable& outer, const HomTable& inner);

/// Sorted distinct images.
std::vector<Element> image(const HomTable& h);

bool is_surjective(const HomTable& h);

} // namespace gengroup
