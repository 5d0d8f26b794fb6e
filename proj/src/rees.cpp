#include "gengroup/rees.hpp"

#include <random>

namespace gengroup {

void validate(const ReesSpec& spec) {
    if (spec.i_size < 1 || spec.lambda_size < 1) throw MalformedSpec("index sets must be nonempty");
    if (spec.sandwich.rows() != spec.lambda_size || spec.sandwich.cols() != spec.i_size)
        throw MalformedSpec("sandwich must be lambda_size x i_size");
    const auto n = spec.base.order();
    if ((spec.sandwich.array() < 0).any() || (spec.sandwich.array() >= n).any())
        throw MalformedSpec("sandwich entry is not a base group element");
}

Element rees_element(const ReesSpec& spec, int i, Element g, int lambda) {
    return (i * spec.base.order() + g) * spec.lambda_size + lambda;
}

ReesTriple rees_triple(const ReesSpec& spec, Element x) {
    const int lambda = x % spec.lambda_size;
    const int rest = x / spec.lambda_size;
    return {rest / spec.base.order(), rest % spec.base.order(), lambda};
}

FiniteGenGroup rees_build(const ReesSpec& spec) {
    validate(spec);
    const auto& g = spec.base;
    const int n = spec.i_size * g.order() * spec.lambda_size;
    CayleyTable t(n, n);
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(n));
    for (Element x = 0; x < n; ++x) {
        const auto a = rees_triple(spec, x);
        names.push_back(std::to_string(a.i) + ":" + std::to_string(a.g) + ":" + std::to_string(a.lambda));
        for (Element y = 0; y < n; ++y) {
            const auto b = rees_triple(spec, y);
            const Element mid = g(g(a.g, spec.sandwich(a.lambda, b.i)), b.g);
            t(x, y) = rees_element(spec, a.i, mid, b.lambda);
        }
    }
    return FiniteGenGroup(std::move(names), std::move(t));
}

Element rees_idempotent(const ReesSpec& spec, int i, int lambda) {
    if (i < 0 || i >= spec.i_size || lambda < 0 || lambda >= spec.lambda_size)
        throw IndexOutOfRange("rees_idempotent index out of range");
    return rees_element(spec, i, spec.base.inverse(spec.sandwich(lambda, i)), lambda);
}

namespace {

FiniteGroup klein_four() {
    CayleyTable t(4, 4);
    for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 4; ++y) t(x, y) = x ^ y;
    return FiniteGroup(FiniteGenGroup({"e", "a", "b", "ab"}, std::move(t)));
}

// S3 as permutations of {0,1,2}, composed as (p*q)(k) = p(q(k)).
FiniteGroup symmetric_three() {
    const std::vector<std::array<int, 3>> perms = {
        {0, 1, 2}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}, {1, 2, 0}, {2, 0, 1}};
    auto index_of = [&](const std::array<int, 3>& p) {
        for (std::size_t k = 0; k < perms.size(); ++k)
            if (perms[k] == p) return static_cast<Element>(k);
        throw std::logic_error("not a permutation");
    };
    CayleyTable t(6, 6);
    for (int x = 0; x < 6; ++x)
        for (int y = 0; y < 6; ++y) {
            std::array<int, 3> c{};
            for (int k = 0; k < 3; ++k) c[static_cast<std::size_t>(k)] = perms[static_cast<std::size_t>(x)][static_cast<std::size_t>(perms[static_cast<std::size_t>(y)][static_cast<std::size_t>(k)])];
            t(x, y) = index_of(c);
        }
    return FiniteGroup(FiniteGenGroup({"()", "(01)", "(12)", "(02)", "(012)", "(021)"}, std::move(t)));
}

} // namespace

const std::vector<std::string>& catalogue_names() {
    static const std::vector<std::string> names = {"trivial", "Z2", "Z3", "Z4", "Z2xZ2", "S3"};
    return names;
}

FiniteGroup catalogue_group(const std::string& name) {
    if (name == "trivial") return FiniteGroup(cyclic_group(1));
    if (name == "Z2") return FiniteGroup(cyclic_group(2));
    if (name == "Z3") return FiniteGroup(cyclic_group(3));
    if (name == "Z4") return FiniteGroup(cyclic_group(4));
    if (name == "Z2xZ2") return klein_four();
    if (name == "S3") return symmetric_three();
    throw std::invalid_argument("unknown catalogue group: " + name);
}

ReesSpec random_rees(std::uint64_t seed, const ReesBounds& bounds) {
    if (bounds.max_i < 1 || bounds.max_lambda < 1 || bounds.max_group_order < 1)
        throw std::invalid_argument("rees bounds must be at least 1");
    std::mt19937_64 rng(seed);
    auto draw = [&](std::uint64_t n) { return static_cast<int>(rng() % n); };

    std::vector<FiniteGroup> eligible;
    for (const auto& name : catalogue_names()) {
        auto g = catalogue_group(name);
        if (g.order() <= bounds.max_group_order) eligible.push_back(std::move(g));
    }
    ReesSpec spec{eligible[static_cast<std::size_t>(draw(eligible.size()))], 1, 1, {}};
    spec.i_size = 1 + draw(static_cast<std::uint64_t>(bounds.max_i));
    spec.lambda_size = 1 + draw(static_cast<std::uint64_t>(bounds.max_lambda));
    spec.sandwich.resize(spec.lambda_size, spec.i_size);
    for (int l = 0; l < spec.lambda_size; ++l)
        for (int i = 0; i < spec.i_size; ++i)
            spec.sandwich(l, i) = draw(static_cast<std::uint64_t>(spec.base.order()));
    return spec;
}

std::vector<ReesSpec> enumerate_rees_specs(int max_group_order, int max_i, int max_lambda) {
    std::vector<ReesSpec> out;
    for (const auto& name : catalogue_names()) {
        const auto base = catalogue_group(name);
        if (base.order() > max_group_order) continue;
        for (int ni = 1; ni <= max_i; ++ni)
            for (int nl = 1; nl <= max_lambda; ++nl) {
                const int cells = ni * nl;
                long total = 1;
                for (int c = 0; c < cells; ++c) total *= base.order();
                for (long code = 0; code < total; ++code) {
                    ReesSpec spec{base, ni, nl, SandwichMatrix(nl, ni)};
                    long rest = code;
                    for (int c = 0; c < cells; ++c) {
                        spec.sandwich(c / ni, c % ni) = static_cast<Element>(rest % base.order());
                        rest /= base.order();
                    }
                    out.push_back(std::move(spec));
                }
            }
    }
    return out;
}

} // namespace gengroup
