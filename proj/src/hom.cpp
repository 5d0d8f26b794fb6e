#include "gengroup/hom.hpp"

#include <algorithm>

namespace gengroup {

HomTable::HomTable(const FiniteGenGroup& source, const FiniteGenGroup& target, std::vector<Element> images)
    : source_(&source), target_(&target), images_(std::move(images)) {
    if (images_.size() != static_cast<std::size_t>(source.order()))
        throw ShapeMismatch("image count does not match source order");
    for (Element y : images_)
        if (y < 0 || y >= target.order()) throw ShapeMismatch("image outside target carrier");
}

HomCheck check_hom(const HomTable& h) {
    const auto& g = h.source();
    const auto& t = h.target();
    for (Element a = 0; a < g.order(); ++a)
        for (Element b = 0; b < g.order(); ++b)
            if (h(g(a, b)) != t(h(a), h(b))) return {false, std::pair{a, b}};
    return {};
}

std::vector<PreservationViolation> check_preservation(const HomTable& h) {
    if (auto c = check_hom(h); !c)
        throw NotAHomomorphism("law fails at (" + std::to_string(c.witness->first) + "," +
                               std::to_string(c.witness->second) + ")");
    const auto& g = h.source();
    const auto& t = h.target();
    std::vector<PreservationViolation> out;
    for (Element a = 0; a < g.order(); ++a) {
        if (h(g.local_identity(a)) != t.local_identity(h(a)))
            out.push_back({PreservationViolation::Law::LocalIdentity, a});
        if (h(g.inverse(a)) != t.inverse(h(a))) out.push_back({PreservationViolation::Law::Inverse, a});
    }
    return out;
}

namespace {

// Backtracking over images of 0..n-1. Each law instance (a, b) is checked as
// soon as a, b and ab all carry images.
class HomSearch {
public:
    HomSearch(const FiniteGenGroup& g, const FiniteGenGroup& h, bool injective)
        : g_(g), h_(h), injective_(injective), images_(static_cast<std::size_t>(g.order()), -1),
          used_(static_cast<std::size_t>(h.order()), false) {}

    template <typename Visit>
    void run(Visit&& visit) {
        stop_ = false;
        extend(0, visit);
    }

private:
    bool consistent(Element a) const {
        for (Element x = 0; x <= a; ++x)
            for (Element y = 0; y <= a; ++y) {
                if (x != a && y != a) {
                    // Pairs among earlier elements were checked when their product got its image.
                    if (g_(x, y) != a) continue;
                }
                const Element p = g_(x, y);
                if (p > a) continue;
                if (img(p) != h_(img(x), img(y))) return false;
            }
        return true;
    }

    Element img(Element x) const { return images_[static_cast<std::size_t>(x)]; }

    template <typename Visit>
    void extend(Element a, Visit& visit) {
        if (stop_) return;
        if (a == g_.order()) {
            stop_ = !visit(images_);
            return;
        }
        for (Element y = 0; y < h_.order() && !stop_; ++y) {
            if (injective_ && used_[static_cast<std::size_t>(y)]) continue;
            images_[static_cast<std::size_t>(a)] = y;
            if (consistent(a)) {
                used_[static_cast<std::size_t>(y)] = true;
                extend(a + 1, visit);
                used_[static_cast<std::size_t>(y)] = false;
            }
        }
        images_[static_cast<std::size_t>(a)] = -1;
    }

    const FiniteGenGroup& g_;
    const FiniteGenGroup& h_;
    bool injective_;
    std::vector<Element> images_;
    std::vector<bool> used_;
    bool stop_ = false;
};

} // namespace

HomEnumeration enumerate_homs(const FiniteGenGroup& g, const FiniteGenGroup& h, std::size_t cap) {
    HomEnumeration out;
    HomSearch search(g, h, false);
    search.run([&](const std::vector<Element>& images) {
        if (out.homs.size() == cap) {
            out.truncated = true;
            return false;
        }
        out.homs.emplace_back(g, h, images);
        return true;
    });
    return out;
}

bool is_isomorphism(const HomTable& h) {
    const auto& g = h.source();
    const auto& t = h.target();
    if (g.order() != t.order() || !check_hom(h)) return false;
    std::vector<Element> back(static_cast<std::size_t>(t.order()), -1);
    for (Element x = 0; x < g.order(); ++x) {
        auto& slot = back[static_cast<std::size_t>(h(x))];
        if (slot != -1) return false;
        slot = x;
    }
    return static_cast<bool>(check_hom(HomTable(t, g, std::move(back))));
}

std::optional<HomTable> find_isomorphism(const FiniteGenGroup& g, const FiniteGenGroup& h) {
    if (g.order() != h.order() || idempotents(g).size() != idempotents(h).size()) return std::nullopt;
    std::optional<HomTable> found;
    HomSearch search(g, h, true);
    search.run([&](const std::vector<Element>& images) {
        found.emplace(g, h, images);
        return false;
    });
    if (found && !is_isomorphism(*found)) found.reset();
    return found;
}

HomTable compose(const HomTable& outer, const HomTable& inner) {
    if (&inner.target() != &outer.source() && !(inner.target() == outer.source()))
        throw ShapeMismatch("composition requires inner target = outer source");
    std::vector<Element> images;
    images.reserve(inner.images().size());
    for (Element y : inner.images()) images.push_back(outer(y));
    return HomTable(inner.source(), outer.target(), std::move(images));
}

std::vector<Element> image(const HomTable& h) {
    std::vector<Element> out = h.images();
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool is_surjective(const HomTable& h) { return static_cast<int>(image(h).size()) == h.target().order(); }

} // namespace gengroup
