#include "gengroup/core.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace gengroup {

namespace {

void check_shape(const CayleyTable& table) {
    if (table.rows() == 0 || table.rows() != table.cols())
        throw MalformedTable("table must be square and nonempty");
    const auto n = static_cast<Element>(table.rows());
    if ((table.array() < 0).any() || (table.array() >= n).any())
        throw MalformedTable("table entry out of range");
}

AxiomViolation::Kind first_kind(const AxiomReport& r) {
    if (!r.associative) return AxiomViolation::Kind::NotAssociative;
    if (!r.local_identity_failures.empty()) return AxiomViolation::Kind::NoUniqueLocalIdentity;
    return AxiomViolation::Kind::NoInverse;
}

// Candidates z with z*x = x*z = x.
std::vector<Element> identity_candidates(const CayleyTable& t, Element x) {
    std::vector<Element> out;
    for (Element z = 0; z < t.rows(); ++z)
        if (t(z, x) == x && t(x, z) == x) out.push_back(z);
    return out;
}

std::string join(const std::vector<Element>& xs) {
    std::ostringstream os;
    for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i];
    return os.str();
}

} // namespace

std::string describe(const AxiomReport& r) {
    std::ostringstream os;
    if (r.verdict()) return "all axioms hold";
    if (!r.associative && r.associativity_witness) {
        auto [x, y, z] = *r.associativity_witness;
        os << "NotAssociative witness=(" << x << "," << y << "," << z << ")";
    }
    for (const auto& f : r.local_identity_failures) {
        if (os.tellp() > 0) os << "; ";
        os << "NoUniqueLocalIdentity element=" << f.element << " candidates=[" << join(f.candidates) << "]";
    }
    for (Element x : r.inverse_failures) {
        if (os.tellp() > 0) os << "; ";
        os << "NoInverse element=" << x;
    }
    return os.str();
}

AxiomViolation::AxiomViolation(AxiomReport report)
    : std::runtime_error(describe(report)), report_(std::move(report)), kind_(first_kind(report_)) {}

AxiomReport verify_axioms(const CayleyTable& t) {
    check_shape(t);
    const auto n = static_cast<Element>(t.rows());
    AxiomReport report;
    for (Element x = 0; x < n && report.associative; ++x)
        for (Element y = 0; y < n && report.associative; ++y)
            for (Element z = 0; z < n; ++z)
                if (t(t(x, y), z) != t(x, t(y, z))) {
                    report.associative = false;
                    report.associativity_witness = {x, y, z};
                    break;
                }
    for (Element x = 0; x < n; ++x) {
        auto candidates = identity_candidates(t, x);
        if (candidates.size() != 1) {
            report.local_identity_failures.push_back({x, std::move(candidates)});
            continue;
        }
        const Element e = candidates.front();
        bool found = false;
        for (Element y = 0; y < n && !found; ++y) found = t(x, y) == e && t(y, x) == e;
        if (!found) report.inverse_failures.push_back(x);
    }
    return report;
}

FiniteGenGroup::FiniteGenGroup(std::vector<std::string> names, CayleyTable table)
    : names_(std::move(names)), table_(std::move(table)) {
    check_shape(table_);
    if (names_.size() != static_cast<std::size_t>(table_.rows()))
        throw MalformedTable("name count does not match table order");
    auto report = verify_axioms(table_);
    if (!report.verdict()) throw AxiomViolation(std::move(report));

    const Element n = order();
    identity_.resize(static_cast<std::size_t>(n));
    inverse_.resize(static_cast<std::size_t>(n));
    for (Element x = 0; x < n; ++x) {
        const Element e = identity_candidates(table_, x).front();
        identity_[static_cast<std::size_t>(x)] = e;
        // Inverses are unique; the smallest index is the inverse.
        for (Element y = 0; y < n; ++y)
            if (table_(x, y) == e && table_(y, x) == e) {
                inverse_[static_cast<std::size_t>(x)] = y;
                break;
            }
    }
}

FiniteGenGroup make_finite_gg(std::vector<std::string> names, CayleyTable table) {
    return FiniteGenGroup(std::move(names), std::move(table));
}

std::vector<Element> idempotents(const FiniteGenGroup& g) {
    std::vector<Element> out;
    for (Element x = 0; x < g.order(); ++x)
        if (g(x, x) == x) out.push_back(x);
    return out;
}

bool is_normal(const FiniteGenGroup& g) {
    for (Element x = 0; x < g.order(); ++x)
        for (Element y = 0; y < g.order(); ++y)
            if (g.local_identity(g(x, y)) != g(g.local_identity(x), g.local_identity(y))) return false;
    return true;
}

bool is_abelian(const FiniteGenGroup& g) { return g.table() == g.table().transpose(); }

bool is_group(const FiniteGenGroup& g) { return idempotents(g).size() == 1; }

FiniteGroup::FiniteGroup(FiniteGenGroup g) : gg_(std::move(g)) {
    const auto ids = idempotents(gg_);
    if (ids.size() != 1) throw std::invalid_argument("a group has exactly one idempotent");
    identity_ = ids.front();
}

std::vector<Element> component_members(const FiniteGenGroup& g, Element a) {
    const Element e = g.local_identity(a);
    std::vector<Element> out;
    for (Element x = 0; x < g.order(); ++x)
        if (g.local_identity(x) == e) out.push_back(x);
    return out;
}

FiniteGroup group_component(const FiniteGenGroup& g, Element a) {
    const auto members = component_members(g, a);
    try {
        FiniteGroup group(restrict_to(g, members));
        if (members[static_cast<std::size_t>(group.identity())] != g.local_identity(a))
            throw ClosureViolation("component identity differs from e(a)");
        return group;
    } catch (const ClosureViolation&) {
        throw;
    } catch (const std::exception& ex) {
        throw ClosureViolation(std::string("component of ") + g.name(a) + " is not a group: " + ex.what());
    }
}

FiniteGenGroup direct_product(const FiniteGenGroup& g, const FiniteGenGroup& h) {
    const int m = h.order();
    const int n = g.order() * m;
    CayleyTable t(n, n);
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(n));
    for (Element x = 0; x < n; ++x) {
        names.push_back("(" + g.name(x / m) + "," + h.name(x % m) + ")");
        for (Element y = 0; y < n; ++y) t(x, y) = g(x / m, y / m) * m + h(x % m, y % m);
    }
    return FiniteGenGroup(std::move(names), std::move(t));
}

bool generalized_subgroup_check(const FiniteGenGroup& g, std::span<const Element> subset) {
    if (subset.empty()) return false;
    std::vector<bool> in(static_cast<std::size_t>(g.order()), false);
    for (Element x : subset) {
        if (x < 0 || x >= g.order()) return false;
        in[static_cast<std::size_t>(x)] = true;
    }
    auto member = [&](Element x) { return in[static_cast<std::size_t>(x)]; };
    for (Element x : subset) {
        if (!member(g.inverse(x)) || !member(g.local_identity(x))) return false;
        for (Element y : subset)
            if (!member(g(x, y))) return false;
    }
    return true;
}

std::vector<Element> generated_closure(const FiniteGenGroup& g, std::span<const Element> seeds) {
    std::set<Element> closed(seeds.begin(), seeds.end());
    std::vector<Element> frontier(closed.begin(), closed.end());
    while (!frontier.empty()) {
        std::vector<Element> next;
        auto add = [&](Element x) {
            if (closed.insert(x).second) next.push_back(x);
        };
        for (Element x : frontier) {
            add(g.inverse(x));
            add(g.local_identity(x));
            const std::vector<Element> snapshot(closed.begin(), closed.end());
            for (Element y : snapshot) {
                add(g(x, y));
                add(g(y, x));
            }
        }
        frontier = std::move(next);
    }
    return {closed.begin(), closed.end()};
}

FiniteGenGroup restrict_to(const FiniteGenGroup& g, std::span<const Element> subset) {
    std::vector<Element> members(subset.begin(), subset.end());
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    std::vector<Element> position(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t k = 0; k < members.size(); ++k) {
        if (members[k] < 0 || members[k] >= g.order()) throw std::invalid_argument("subset element out of range");
        position[static_cast<std::size_t>(members[k])] = static_cast<Element>(k);
    }
    const auto n = static_cast<Eigen::Index>(members.size());
    CayleyTable t(n, n);
    std::vector<std::string> names;
    for (Eigen::Index i = 0; i < n; ++i) {
        names.push_back(g.name(members[static_cast<std::size_t>(i)]));
        for (Eigen::Index j = 0; j < n; ++j) {
            const Element p = position[static_cast<std::size_t>(
                g(members[static_cast<std::size_t>(i)], members[static_cast<std::size_t>(j)]))];
            if (p < 0) throw ClosureViolation("subset is not closed under the operation");
            t(i, j) = p;
        }
    }
    return FiniteGenGroup(std::move(names), std::move(t));
}

FiniteGenGroup cyclic_group(int n) {
    if (n < 1) throw std::invalid_argument("cyclic group order must be positive");
    CayleyTable t(n, n);
    std::vector<std::string> names;
    for (int x = 0; x < n; ++x) {
        names.push_back(std::to_string(x));
        for (int y = 0; y < n; ++y) t(x, y) = (x + y) % n;
    }
    return FiniteGenGroup(std::move(names), std::move(t));
}

FiniteGenGroup right_zero_semigroup(int n) {
    if (n < 1) throw std::invalid_argument("order must be positive");
    CayleyTable t(n, n);
    std::vector<std::string> names;
    for (int x = 0; x < n; ++x) {
        names.push_back("r" + std::to_string(x));
        for (int y = 0; y < n; ++y) t(x, y) = y;
    }
    return FiniteGenGroup(std::move(names), std::move(t));
}

FiniteGenGroup left_zero_semigroup(int n) {
    if (n < 1) throw std::invalid_argument("order must be positive");
    CayleyTable t(n, n);
    std::vector<std::string> names;
    for (int x = 0; x < n; ++x) {
        names.push_back("l" + std::to_string(x));
        for (int y = 0; y < n; ++y) t(x, y) = x;
    }
    return FiniteGenGroup(std::move(names), std::move(t));
}

FiniteGenGroup trivial_group() { return cyclic_group(1); }

} // namespace gengroup
