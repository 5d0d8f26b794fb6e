#include "gengroup/harness.hpp"

#include <algorithm>
#include <deque>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace gengroup {

namespace {

std::string format_set(const IndexSet& s) {
    std::ostringstream os;
    os << '{';
    for (std::size_t k = 0; k < s.size(); ++k) os << (k ? "," : "") << s[k];
    os << '}';
    return os.str();
}

std::string format_vector(const IntVector& v) {
    std::ostringstream os;
    os << '(';
    for (Eigen::Index k = 0; k < v.size(); ++k) os << (k ? "," : "") << v(k);
    os << ')';
    return os.str();
}

bool is_zero(const IntVector& v) {
    for (Eigen::Index k = 0; k < v.size(); ++k)
        if (v(k) != 0) return false;
    return true;
}

ClaimReport make_report(std::string id) {
    ClaimReport r;
    r.id = std::move(id);
    return r;
}

ClaimReport falsified(ClaimReport r, std::string witness) {
    r.status = ClaimStatus::Falsified;
    r.witness = std::move(witness);
    return r;
}

ClaimReport skipped(ClaimReport r, std::string note) {
    r.status = ClaimStatus::Skipped;
    r.note = std::move(note);
    return r;
}

Integer nonneg_mod(const Integer& v, std::size_t n) {
    Integer r = v % Integer(n);
    if (r < 0) r += Integer(n);
    return r;
}

const char* rule_name(RepGGHom::Rule r) {
    switch (r) {
    case RepGGHom::Rule::ThroughProjection: return "projection";
    case RepGGHom::Rule::ThroughG: return "g";
    case RepGGHom::Rule::Direct: return "direct";
    }
    return "?";
}

bool is_left_band(const FiniteGenGroup& g, const std::vector<Element>& band) {
    for (Element b : band)
        for (Element c : band)
            if (g(b, c) != b) return false;
    return true;
}

bool is_right_band(const FiniteGenGroup& g, const std::vector<Element>& band) {
    for (Element b : band)
        for (Element c : band)
            if (g(b, c) != c) return false;
    return true;
}

// Failure description for a probe that breaks the law or escapes its window.
std::optional<std::string> probe_failure(const FiniteGenGroup& target, const FiniteProbe& p, SeqIndex bound,
                                         std::mt19937_64& rng, int samples, int coord_range) {
    const SeqIndex reach = p.window() + 3;
    for (int s = 0; s < samples; ++s) {
        const FinSeq x = random_finseq(rng, reach, coord_range);
        const FinSeq y = random_finseq(rng, reach, coord_range);
        if (eval(target, p, star(x, y)) != target(eval(target, p, x), eval(target, p, y)))
            return "probe law fails at x=" + to_string(x) + " y=" + to_string(y);
    }
    const auto off = offdiagonal_set(target, p, bound);
    if (!off.empty() && off.back() > p.window())
        return "off-diagonal index " + std::to_string(off.back()) + " beyond window " + std::to_string(p.window());
    return std::nullopt;
}

std::string seq_pair(const FinSeq& x, const FinSeq& y) { return "x=" + to_string(x) + " y=" + to_string(y); }

} // namespace

// ---------------------------------------------------------------------------
// Representable maps

IntVector eval_rep(const RepHom& h, const FinSeq& x) {
    IntVector out = IntVector::Zero(h.matrix.rows());
    for (const auto& [k, v] : x.coords()) {
        if (k > h.matrix.cols()) break;
        out += v * h.matrix.col(static_cast<Eigen::Index>(k - 1));
    }
    return out;
}

IndexSet declared_support(const RepHom& h) {
    IndexSet out;
    for (Eigen::Index j = 0; j < std::min<Eigen::Index>(h.window, h.matrix.cols()); ++j)
        if (!is_zero(h.matrix.col(j))) out.push_back(j + 1);
    return out;
}

IndexSet offdiagonal_set(const RepHom& h, SeqIndex bound) {
    IndexSet out;
    for (SeqIndex n = 1; n <= bound; ++n)
        if (!is_zero(eval_rep(h, basis(n)))) out.push_back(n);
    return out;
}

IntVector eval(const RepGGHom& h, const FinSeq& x) {
    switch (h.rule) {
    case RepGGHom::Rule::ThroughProjection: return eval_rep(h.base, map_f(x));
    case RepGGHom::Rule::ThroughG: return eval_rep(h.base, map_g(x));
    case RepGGHom::Rule::Direct: return eval_rep(h.base, x);
    }
    throw std::logic_error("unknown composite rule");
}

IndexSet offdiagonal_set(const RepGGHom& h, SeqIndex bound) {
    IndexSet out;
    for (SeqIndex n = 1; n <= bound; ++n)
        if (!is_zero(eval(h, basis(n)))) out.push_back(n);
    return out;
}

Element power(const FiniteGenGroup& g, Element a, const Integer& m) {
    const Element e = g.local_identity(a);
    std::size_t order = 1;
    for (Element p = a; p != e; p = g(p, a)) ++order;
    const auto r = nonneg_mod(m, order).convert_to<std::size_t>();
    Element out = e;
    for (std::size_t k = 0; k < r; ++k) out = g(out, a);
    return out;
}

Element eval(const FiniteGenGroup& target, const FiniteProbe& p, const FinSeq& x) {
    switch (p.kind) {
    case FiniteProbe::Kind::ComponentPower: return power(target, p.elements.front(), eval_rep(p.exponent, map_f(x))(0));
    case FiniteProbe::Kind::LeftBand:
        return p.elements[nonneg_mod(x[1], p.elements.size()).convert_to<std::size_t>()];
    case FiniteProbe::Kind::RightBand:
        return p.elements[nonneg_mod(x[2], p.elements.size()).convert_to<std::size_t>()];
    }
    throw std::logic_error("unknown probe kind");
}

IndexSet offdiagonal_set(const FiniteGenGroup& target, const FiniteProbe& p, SeqIndex bound) {
    IndexSet out;
    for (SeqIndex n = 1; n <= bound; ++n) {
        const Element v = eval(target, p, basis(n));
        if (v != target.local_identity(v)) out.push_back(n);
    }
    return out;
}

std::vector<FiniteProbe> standard_probes(const FiniteGenGroup& target, int window, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<FiniteProbe> out;
    for (Element a = 0; a < target.order(); ++a)
        out.push_back({FiniteProbe::Kind::ComponentPower, {a}, random_rep_hom(rng, window, 1)});

    const auto ids = idempotents(target);
    std::vector<std::vector<Element>> seen_left, seen_right;
    for (Element e : ids) {
        std::vector<Element> left, right;
        for (Element f : ids) {
            if (target(f, e) == f && target(e, f) == e) left.push_back(f);
            if (target(e, f) == f && target(f, e) == e) right.push_back(f);
        }
        if (left.size() > 1 && is_left_band(target, left) &&
            std::find(seen_left.begin(), seen_left.end(), left) == seen_left.end()) {
            seen_left.push_back(left);
            out.push_back({FiniteProbe::Kind::LeftBand, left, {}});
        }
        if (right.size() > 1 && is_right_band(target, right) &&
            std::find(seen_right.begin(), seen_right.end(), right) == seen_right.end()) {
            seen_right.push_back(right);
            out.push_back({FiniteProbe::Kind::RightBand, right, {}});
        }
    }
    return out;
}

FinSeq random_finseq(std::mt19937_64& rng, SeqIndex max_index, int coord_range) {
    FinSeq x;
    const auto span = static_cast<std::uint64_t>(2 * coord_range + 1);
    for (SeqIndex k = 1; k <= max_index; ++k)
        if (rng() % 2) x.set(k, static_cast<long>(rng() % span) - coord_range);
    return x;
}

RepHom random_rep_hom(std::mt19937_64& rng, int window, int rank, int range) {
    RepHom h{window, IntMatrix::Zero(rank, window)};
    const auto span = static_cast<std::uint64_t>(2 * range + 1);
    for (int j = 0; j < window; ++j) {
        if (rng() % 3 == 0) continue;
        for (int i = 0; i < rank; ++i) h.matrix(i, j) = static_cast<long>(rng() % span) - range;
    }
    return h;
}

std::string to_string(ClaimStatus s) {
    switch (s) {
    case ClaimStatus::Verified: return "verified";
    case ClaimStatus::Falsified: return "falsified";
    case ClaimStatus::Skipped: return "skipped";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Claim checks

ClaimReport check_abelian_implies_gg(const RepGGHom& h, SeqIndex bound, const SampleConfig& cfg) {
    auto r = make_report(kAbelianImpliesGg);
    r.parameters = {{"bound", std::to_string(bound)},
                    {"samples", std::to_string(cfg.samples)},
                    {"window", std::to_string(h.window())},
                    {"rule", rule_name(h.rule)}};
    if (bound <= 0) return skipped(std::move(r), "bound is 0");

    // i_n * i_n = i_n off the multiples of 3, so h(i_n) = 2 h(i_n) forces h(i_n) = 0.
    for (SeqIndex n = 1; n <= bound; ++n) {
        if (n % 3 == 0) continue;
        const FinSeq i = basis(n);
        if (star(i, i) != i) return falsified(std::move(r), "i_" + std::to_string(n) + " is not idempotent");
        const IntVector lhs = eval(h, star(i, i));
        const IntVector rhs = eval(h, i) + eval(h, i);
        if (lhs != rhs)
            return falsified(std::move(r), "law fails at (i_" + std::to_string(n) + ",i_" + std::to_string(n) +
                                               "): " + format_vector(lhs) + " != " + format_vector(rhs));
        if (!is_zero(eval(h, i))) return falsified(std::move(r), "h(i_" + std::to_string(n) + ") != 0");
    }

    std::mt19937_64 rng(cfg.seed);
    const SeqIndex reach = h.window() + 3;
    for (int s = 0; s < cfg.samples; ++s) {
        const FinSeq x = random_finseq(rng, reach, cfg.coord_range);
        const FinSeq y = random_finseq(rng, reach, cfg.coord_range);
        if (eval(h, star(x, y)) != eval(h, x) + eval(h, y))
            return falsified(std::move(r), "law fails at " + seq_pair(x, y));
        // h o f is additive on the ordinary product.
        if (eval(h, map_f(add(x, y))) != eval(h, map_f(x)) + eval(h, map_f(y)))
            return falsified(std::move(r), "h o f not additive at " + seq_pair(x, y));
    }

    const IndexSet off = offdiagonal_set(h, bound);
    IndexSet through_f;
    for (SeqIndex n = 1; n <= bound; ++n)
        if (!is_zero(eval(h, map_f(basis(n))))) through_f.push_back(n);
    if (off != through_f)
        return falsified(std::move(r), "off-diagonal set " + format_set(off) + " differs from h o f set " +
                                           format_set(through_f));
    for (SeqIndex n : off)
        if (n % 3 != 0 || n > h.window())
            return falsified(std::move(r), "off-diagonal index " + std::to_string(n) + " outside window " +
                                               std::to_string(h.window()));
    r.parameters["offdiagonal"] = format_set(off);
    return r;
}

ClaimReport check_abelian_implies_gg(const RepHom& h, SeqIndex bound, const SampleConfig& cfg) {
    return check_abelian_implies_gg(RepGGHom{h, RepGGHom::Rule::ThroughProjection}, bound, cfg);
}

ClaimReport check_gg_implies_abelian(const RepHom& h, SeqIndex bound, const SampleConfig& cfg) {
    auto r = make_report(kGgImpliesAbelian);
    const RepGGHom hg{h, RepGGHom::Rule::ThroughG};
    r.parameters = {{"bound", std::to_string(bound)},
                    {"samples", std::to_string(cfg.samples)},
                    {"window", std::to_string(h.window)}};
    if (bound <= 0) return skipped(std::move(r), "bound is 0");

    std::mt19937_64 rng(cfg.seed);
    const SeqIndex reach = hg.window() + 3;
    for (int s = 0; s < cfg.samples; ++s) {
        const FinSeq x = random_finseq(rng, reach, cfg.coord_range);
        const FinSeq y = random_finseq(rng, reach, cfg.coord_range);
        if (eval(hg, star(x, y)) != eval(hg, x) + eval(hg, y))
            return falsified(std::move(r), "h o g law fails at " + seq_pair(x, y));
    }

    IndexSet nonzero;
    for (SeqIndex n = 1; n <= bound; ++n) {
        const IntVector got = eval(hg, basis(n));
        if (n % 3 == 0 && map_g(basis(n)) != basis(n / 3))
            return falsified(std::move(r), "g(i_" + std::to_string(n) + ") != i_" + std::to_string(n / 3));
        const IntVector expected = n % 3 == 0 ? eval_rep(h, basis(n / 3)) : IntVector::Zero(h.target_rank());
        if (got != expected)
            return falsified(std::move(r), "(h o g)(i_" + std::to_string(n) + ")=" + format_vector(got) +
                                               " expected " + format_vector(expected));
        if (!is_zero(got)) nonzero.push_back(n);
    }
    IndexSet predicted;
    for (SeqIndex m : declared_support(h))
        if (3 * m <= bound) predicted.push_back(3 * m);
    if (nonzero != predicted)
        return falsified(std::move(r),
                         "nonzero set " + format_set(nonzero) + " differs from 3*support " + format_set(predicted));
    if (!nonzero.empty() && nonzero.back() > hg.window())
        return falsified(std::move(r), "nonzero index beyond composite window");
    r.parameters["nonzero"] = format_set(nonzero);
    return r;
}

ClaimReport check_window_property(const RepHom& h, SeqIndex bound) {
    auto r = make_report(kWindowProperty);
    r.parameters = {{"bound", std::to_string(bound)}, {"window", std::to_string(h.window)}};
    if (bound <= 0) return skipped(std::move(r), "bound is 0");
    const IndexSet off = offdiagonal_set(h, bound);
    for (SeqIndex n : off)
        if (n > h.window)
            return falsified(std::move(r), "h(i_" + std::to_string(n) + ") != 0 beyond window " +
                                               std::to_string(h.window));
    if (!h.well_formed())
        return falsified(std::move(r), "matrix has " + std::to_string(h.matrix.cols()) + " columns for window " +
                                           std::to_string(h.window));
    r.parameters["offdiagonal"] = format_set(off);
    return r;
}

namespace {

ClaimReport subgroup_check(ClaimReport r, const FiniteGenGroup& g, const std::vector<Element>& subset, int window,
                           SeqIndex bound, const SampleConfig& cfg) {
    std::vector<Element> members = subset;
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    const FiniteGenGroup sub = restrict_to(g, members);
    const HomTable inclusion(sub, g, members);
    if (auto c = check_hom(inclusion); !c)
        return falsified(std::move(r), "inclusion law fails at (" + std::to_string(c.witness->first) + "," +
                                           std::to_string(c.witness->second) + ")");

    std::mt19937_64 rng(cfg.seed);
    const int per_probe = std::min(cfg.samples, 50);
    for (const auto& p : standard_probes(sub, window, cfg.seed)) {
        if (auto fail = probe_failure(sub, p, bound, rng, per_probe, cfg.coord_range))
            return falsified(std::move(r), *fail);
        // Pushed into g, the probe has the same off-diagonal set.
        IndexSet pushed;
        for (SeqIndex n = 1; n <= bound; ++n) {
            const Element v = inclusion(eval(sub, p, basis(n)));
            if (v != g.local_identity(v)) pushed.push_back(n);
        }
        if (pushed != offdiagonal_set(sub, p, bound))
            return falsified(std::move(r), "off-diagonal set changes under inclusion: " + format_set(pushed));
    }
    return r;
}

} // namespace

ClaimReport check_subgroup_slender(const FiniteGenGroup& g, const std::vector<Element>& subset, int window,
                                   SeqIndex bound, const SampleConfig& cfg) {
    auto r = make_report(kSubgroupSlender);
    r.parameters = {{"bound", std::to_string(bound)}, {"order", std::to_string(g.order())},
                    {"subset_size", std::to_string(subset.size())}};
    if (bound <= 0) return skipped(std::move(r), "bound is 0");
    if (!generalized_subgroup_check(g, subset)) return skipped(std::move(r), "subset is not a generalized subgroup");
    return subgroup_check(std::move(r), g, subset, window, bound, cfg);
}

ClaimReport check_component_slender(const FiniteGenGroup& g, Element a, int window, SeqIndex bound,
                                    const SampleConfig& cfg) {
    auto r = make_report(kComponentSlender);
    r.parameters = {{"bound", std::to_string(bound)}, {"element", g.name(a)}};
    if (bound <= 0) return skipped(std::move(r), "bound is 0");
    const auto members = component_members(g, a);
    try {
        const FiniteGroup component = group_component(g, a);
        if (members[static_cast<std::size_t>(component.identity())] != g.local_identity(a))
            return falsified(std::move(r), "component identity is not e(" + g.name(a) + ")");
    } catch (const ClosureViolation& ex) {
        return falsified(std::move(r), ex.what());
    }
    return subgroup_check(std::move(r), g, members, window, bound, cfg);
}

ClaimReport check_surjective_image(const HomTable& f, const std::vector<FiniteProbe>& probes, SeqIndex bound,
                                   const SampleConfig& cfg) {
    auto r = make_report(kSurjectiveImage);
    r.parameters = {{"bound", std::to_string(bound)}, {"probes", std::to_string(probes.size())}};
    r.note = "proof-gap noted: the lift is checked on probes only";
    if (auto c = check_hom(f); !c)
        return falsified(std::move(r), "f law fails at (" + std::to_string(c.witness->first) + "," +
                                           std::to_string(c.witness->second) + ")");
    if (!is_surjective(f)) throw NotSurjective("map is not surjective");
    if (bound <= 0) return skipped(std::move(r), "bound is 0");

    const auto& g = f.source();
    const auto& h = f.target();
    std::vector<std::vector<Element>> preimages(static_cast<std::size_t>(h.order()));
    for (Element a = 0; a < g.order(); ++a) preimages[static_cast<std::size_t>(f(a))].push_back(a);

    std::mt19937_64 rng(cfg.seed);
    const int per_probe = std::min(cfg.samples, 50);
    for (const auto& p : probes) {
        if (auto fail = probe_failure(h, p, bound, rng, per_probe, cfg.coord_range))
            return falsified(std::move(r), *fail);
        const IndexSet off = offdiagonal_set(h, p, bound);
        IndexSet lifted_off;
        for (SeqIndex n = 1; n <= bound; ++n) {
            const Element target = eval(h, p, basis(n));
            Element lift = preimages[static_cast<std::size_t>(target)].front();
            if (target == h.local_identity(target)) lift = g.local_identity(lift);
            if (f(lift) != target)
                return falsified(std::move(r), "lift of h(i_" + std::to_string(n) + ") does not map back");
            if (lift != g.local_identity(lift)) lifted_off.push_back(n);
        }
        if (lifted_off != off)
            return falsified(std::move(r), "lifted off-diagonal set " + format_set(lifted_off) + " != " +
                                               format_set(off));
    }
    return r;
}

ClaimReport check_direct_product(const std::vector<FiniteGenGroup>& factors, int window, SeqIndex bound,
                                 const SampleConfig& cfg) {
    auto r = make_report(kDirectProduct);
    r.parameters = {{"bound", std::to_string(bound)}, {"factors", std::to_string(factors.size())}};
    if (factors.empty()) return skipped(std::move(r), "no factors");
    if (factors.size() > 4) throw std::invalid_argument("at most four factors");
    if (bound <= 0) return skipped(std::move(r), "bound is 0");

    FiniteGenGroup product = factors.front();
    std::size_t idempotent_count = idempotents(factors.front()).size();
    for (std::size_t k = 1; k < factors.size(); ++k) {
        product = direct_product(product, factors[k]);
        idempotent_count *= idempotents(factors[k]).size();
    }
    if (!verify_axioms(product.table()).verdict()) return falsified(std::move(r), "product fails the axioms");
    if (idempotents(product).size() != idempotent_count)
        return falsified(std::move(r), "idempotent count is not multiplicative");

    std::vector<std::vector<FiniteProbe>> probes;
    std::size_t rounds = 0;
    for (std::size_t k = 0; k < factors.size(); ++k) {
        probes.push_back(standard_probes(factors[k], window, cfg.seed + k));
        rounds = std::max(rounds, probes.back().size());
    }
    auto components = [&](Element x) {
        std::vector<Element> c(factors.size());
        for (std::size_t k = factors.size(); k-- > 0;) {
            c[k] = x % factors[k].order();
            x /= factors[k].order();
        }
        return c;
    };
    auto tuple_eval = [&](std::size_t j, const FinSeq& x) {
        Element idx = 0;
        for (std::size_t k = 0; k < factors.size(); ++k)
            idx = idx * factors[k].order() + eval(factors[k], probes[k][j % probes[k].size()], x);
        return idx;
    };

    std::mt19937_64 rng(cfg.seed);
    const int per_probe = std::min(cfg.samples, 50);
    for (std::size_t j = 0; j < rounds; ++j) {
        for (int s = 0; s < per_probe; ++s) {
            const FinSeq x = random_finseq(rng, window + 3, cfg.coord_range);
            const FinSeq y = random_finseq(rng, window + 3, cfg.coord_range);
            if (tuple_eval(j, star(x, y)) != product(tuple_eval(j, x), tuple_eval(j, y)))
                return falsified(std::move(r), "tuple probe law fails at " + seq_pair(x, y));
        }
        for (SeqIndex n = 1; n <= bound; ++n) {
            const Element v = tuple_eval(j, basis(n));
            const auto c = components(v);
            std::size_t non_identity = 0;
            for (std::size_t k = 0; k < factors.size(); ++k)
                if (c[k] != factors[k].local_identity(c[k])) ++non_identity;
            const bool off = v != product.local_identity(v);
            if (off != (non_identity > 0))
                return falsified(std::move(r), "componentwise identity test disagrees at i_" + std::to_string(n));
            if (off && n > window)
                return falsified(std::move(r), "off-diagonal index " + std::to_string(n) + " beyond window");
        }
    }
    return r;
}

ClaimReport check_finite_subproduct(const RepGGHom& h, SeqIndex bound, const SampleConfig& cfg) {
    auto r = make_report(kFiniteSubproduct);
    r.parameters = {{"bound", std::to_string(bound)},
                    {"samples", std::to_string(cfg.samples)},
                    {"window", std::to_string(h.window())},
                    {"rule", rule_name(h.rule)}};
    if (bound <= 0) return skipped(std::move(r), "bound is 0");
    const IndexSet s = offdiagonal_set(h, bound);
    for (SeqIndex n : s)
        if (n > h.window())
            return falsified(std::move(r), "S contains " + std::to_string(n) + " beyond window " +
                                               std::to_string(h.window()));
    std::mt19937_64 rng(cfg.seed);
    const SeqIndex reach = 2 * static_cast<SeqIndex>(h.window()) + 6;
    for (int k = 0; k < cfg.samples; ++k) {
        const FinSeq x = random_finseq(rng, reach, cfg.coord_range);
        if (eval(h, x) != eval(h, truncate(x, h.window())))
            return falsified(std::move(r), "truncation changes h at x=" + to_string(x));
    }
    r.parameters["S"] = format_set(s);
    return r;
}

ClaimReport check_product_not_slender(SeqIndex bound, const SampleConfig& cfg) {
    auto r = make_report(kProductNotSlender);
    r.parameters = {{"bound", std::to_string(bound)}, {"samples", std::to_string(cfg.samples)}};
    if (bound < 3) return skipped(std::move(r), "bound below the first multiple of 3");

    std::mt19937_64 rng(cfg.seed);
    for (int s = 0; s < cfg.samples; ++s) {
        const FinSeq x = random_finseq(rng, 9, cfg.coord_range);
        const FinSeq y = random_finseq(rng, 9, cfg.coord_range);
        const FinSeq z = random_finseq(rng, 9, cfg.coord_range);
        if (star(star(x, y), z) != star(x, star(y, z))) return falsified(std::move(r), "not associative");
        if (star(e_g(x), x) != x || star(x, e_g(x)) != x) return falsified(std::move(r), "e fails at " + to_string(x));
        if (star(x, inv_g(x)) != e_g(x) || star(inv_g(x), x) != e_g(x))
            return falsified(std::move(r), "inverse fails at " + to_string(x));
    }
    // The identity map is a homomorphism onto itself, so its off-diagonal set
    // is every multiple of 3 and grows with the bound.
    auto off = [](SeqIndex b) {
        IndexSet out;
        for (SeqIndex n = 1; n <= b; ++n)
            if (basis(n) != e_g(basis(n))) out.push_back(n);
        return out;
    };
    const IndexSet s = off(bound);
    for (SeqIndex n = 1; n <= bound; ++n)
        if ((n % 3 == 0) != std::binary_search(s.begin(), s.end(), n))
            return falsified(std::move(r), "off-diagonal membership wrong at " + std::to_string(n));
    if (off(2 * bound).size() <= s.size()) return falsified(std::move(r), "off-diagonal set did not grow");
    // Read into the additive product, the identity is not a homomorphism.
    const FinSeq i1 = basis(1);
    if (star(i1, i1) == add(i1, i1)) return falsified(std::move(r), "identity into additive product is a hom");
    r.parameters["offdiagonal_size"] = std::to_string(s.size());
    return r;
}

ClaimReport check_hom_preservation(const std::vector<HomTable>& maps) {
    auto r = make_report(kHomPreservation);
    r.parameters = {{"maps", std::to_string(maps.size())}};
    for (std::size_t k = 0; k < maps.size(); ++k) {
        const auto& h = maps[k];
        if (auto c = check_hom(h); !c)
            return falsified(std::move(r), "map " + std::to_string(k) + " law fails at (" +
                                               std::to_string(c.witness->first) + "," +
                                               std::to_string(c.witness->second) + ")");
        if (const auto v = check_preservation(h); !v.empty())
            return falsified(std::move(r), "map " + std::to_string(k) + " breaks preservation at element " +
                                               std::to_string(v.front().element));
        if (!generalized_subgroup_check(h.target(), image(h)))
            return falsified(std::move(r), "map " + std::to_string(k) + " image is not a generalized subgroup");
    }
    return r;
}

ClaimReport check_local_identity_laws(const std::vector<CayleyTable>& tables) {
    auto r = make_report(kLocalIdentityLaws);
    r.parameters = {{"tables", std::to_string(tables.size())}};
    for (std::size_t k = 0; k < tables.size(); ++k) {
        const std::string tag = "table " + std::to_string(k) + ": ";
        AxiomReport report;
        try {
            report = verify_axioms(tables[k]);
        } catch (const MalformedTable& ex) {
            return falsified(std::move(r), tag + ex.what());
        }
        if (!report.verdict()) return falsified(std::move(r), tag + describe(report));
        std::vector<std::string> names;
        for (Eigen::Index x = 0; x < tables[k].rows(); ++x) names.push_back(std::to_string(x));
        const FiniteGenGroup g(std::move(names), tables[k]);
        std::vector<Element> image_of_e;
        for (Element x = 0; x < g.order(); ++x) {
            const Element e = g.local_identity(x);
            const Element inv = g.inverse(x);
            if (g.local_identity(e) != e) return falsified(std::move(r), tag + "e(e(x)) != e(x) at " + std::to_string(x));
            if (g.inverse(inv) != x) return falsified(std::move(r), tag + "inverse not involutive at " + std::to_string(x));
            if (g.local_identity(inv) != e) return falsified(std::move(r), tag + "e(x^-1) != e(x) at " + std::to_string(x));
            image_of_e.push_back(e);
        }
        std::sort(image_of_e.begin(), image_of_e.end());
        image_of_e.erase(std::unique(image_of_e.begin(), image_of_e.end()), image_of_e.end());
        if (image_of_e != idempotents(g)) return falsified(std::move(r), tag + "idempotents differ from image of e");
        if (is_abelian(g) && !is_group(g)) return falsified(std::move(r), tag + "abelian but not a group");
    }
    return r;
}

ClaimReport check_rees_idempotents(const ReesSpec& spec, const FiniteGenGroup& table) {
    auto r = make_report(kReesIdempotents);
    r.parameters = {{"i_size", std::to_string(spec.i_size)},
                    {"lambda_size", std::to_string(spec.lambda_size)},
                    {"base_order", std::to_string(spec.base.order())}};
    if (table.order() != spec.i_size * spec.base.order() * spec.lambda_size)
        return falsified(std::move(r), "table order does not match the Rees spec");
    for (Element x = 0; x < table.order(); ++x) {
        const auto t = rees_triple(spec, x);
        const Element expected = rees_idempotent(spec, t.i, t.lambda);
        if (table.local_identity(x) != expected)
            return falsified(std::move(r), "e(" + table.name(x) + ")=" + table.name(table.local_identity(x)) +
                                               " expected " + table.name(expected));
    }
    if (idempotents(table).size() != static_cast<std::size_t>(spec.i_size * spec.lambda_size))
        return falsified(std::move(r), "idempotent count differs from |I|*|Lambda|");
    return r;
}

ClaimReport check_snf_certificates(const std::vector<SnfCase>& cases) {
    auto r = make_report(kSnfCertificates);
    r.parameters = {{"cases", std::to_string(cases.size())}};
    for (std::size_t k = 0; k < cases.size(); ++k) {
        const auto audit = audit_snf(cases[k].a, cases[k].certificate);
        if (!audit.ok)
            return falsified(std::move(r), "case " + std::to_string(k) + " " + audit.failure + ": " + audit.witness);
    }
    return r;
}

// ---------------------------------------------------------------------------
// Corpus and aggregate run

std::string to_string(Mutation m) {
    switch (m) {
    case Mutation::None: return "none";
    case Mutation::BrokenTable: return "broken-table";
    case Mutation::NonHomMap: return "non-hom-map";
    case Mutation::WrongSandwich: return "wrong-sandwich";
    case Mutation::CorruptedComposite: return "corrupted-composite";
    case Mutation::NonUnimodularU: return "non-unimodular-u";
    case Mutation::WrongWindow: return "wrong-window";
    }
    return "?";
}

const std::vector<Mutation>& all_mutations() {
    static const std::vector<Mutation> ms = {Mutation::BrokenTable,        Mutation::NonHomMap,
                                             Mutation::WrongSandwich,      Mutation::CorruptedComposite,
                                             Mutation::NonUnimodularU,     Mutation::WrongWindow};
    return ms;
}

Mutation parse_mutation(const std::string& name) {
    if (name == "none") return Mutation::None;
    for (Mutation m : all_mutations())
        if (to_string(m) == name) return m;
    throw std::invalid_argument("unknown mutation: " + name);
}

namespace {

// Folds per-instance reports of one claim: any falsification wins, then any
// verification; all-skipped stays skipped.
ClaimReport merge(const std::string& id, const std::vector<ClaimReport>& parts, std::map<std::string, std::string> params) {
    auto r = make_report(id);
    r.parameters = std::move(params);
    std::size_t verified = 0;
    for (const auto& p : parts) {
        if (p.status == ClaimStatus::Falsified) {
            r.status = ClaimStatus::Falsified;
            r.witness = p.witness;
            r.note = p.note;
            return r;
        }
        if (p.status == ClaimStatus::Verified) ++verified;
        if (!p.note.empty() && r.note.empty() && p.status != ClaimStatus::Skipped) r.note = p.note;
    }
    r.parameters["instances"] = std::to_string(parts.size());
    r.parameters["verified"] = std::to_string(verified);
    if (verified == 0) r.status = ClaimStatus::Skipped;
    return r;
}

ReesSpec fixture_rees() {
    SandwichMatrix p(2, 2);
    p << 0, 0, 0, 1;
    return ReesSpec{catalogue_group("Z2"), 2, 2, p};
}

CayleyTable broken_table() {
    CayleyTable t(3, 3);
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y) t(x, y) = (x - y + 3) % 3;
    return t;
}

} // namespace

std::vector<ClaimReport> run_all(const RunConfig& cfg) {
    const std::vector<std::string> ids = {kAbelianImpliesGg, kComponentSlender, kDirectProduct,  kFiniteSubproduct,
                                          kGgImpliesAbelian, kHomPreservation,  kLocalIdentityLaws, kProductNotSlender,
                                          kReesIdempotents,  kSnfCertificates,  kSubgroupSlender,   kSurjectiveImage,
                                          kWindowProperty};
    std::vector<ClaimReport> out;
    const std::map<std::string, std::string> base_params = {{"seed", std::to_string(cfg.seed)},
                                                            {"bound", std::to_string(cfg.bound)},
                                                            {"samples", std::to_string(cfg.samples)},
                                                            {"mutation", to_string(cfg.mutation)}};
    if (cfg.bound <= 0) {
        for (const auto& id : ids) {
            auto r = make_report(id);
            r.parameters = base_params;
            out.push_back(skipped(std::move(r), "bound is 0"));
        }
        std::sort(out.begin(), out.end(), [](const ClaimReport& a, const ClaimReport& b) { return a.id < b.id; });
        return out;
    }

    std::mt19937_64 master(cfg.seed);
    const int window = static_cast<int>(std::min<SeqIndex>(12, cfg.bound));
    SampleConfig sample{master(), cfg.samples, 9};
    std::map<std::string, std::vector<ClaimReport>> parts;

    // Rees corpus. std::deque keeps references stable for HomTable.
    std::vector<ReesSpec> specs = {fixture_rees()};
    for (int k = 0; k < 12; ++k) specs.push_back(random_rees(master(), {3, 3, 6}));
    std::deque<FiniteGenGroup> groups;
    std::vector<CayleyTable> tables;
    for (const auto& spec : specs) {
        groups.push_back(rees_build(spec));
        tables.push_back(groups.back().table());
        parts[kReesIdempotents].push_back(check_rees_idempotents(spec, groups.back()));
    }
    if (cfg.mutation == Mutation::WrongSandwich) {
        ReesSpec wrong = specs.front();
        wrong.sandwich(1, 1) = 0;
        groups.push_back(rees_build(wrong));
        parts[kReesIdempotents].push_back(check_rees_idempotents(specs.front(), groups.back()));
    }
    for (const auto& g : {right_zero_semigroup(3), left_zero_semigroup(2), cyclic_group(4)}) tables.push_back(g.table());
    if (cfg.mutation == Mutation::BrokenTable) tables.push_back(broken_table());
    parts[kLocalIdentityLaws].push_back(check_local_identity_laws(tables));

    // Subgroups and components of every Rees instance.
    for (std::size_t k = 0; k < specs.size(); ++k) {
        const auto& g = groups[k];
        SampleConfig local = sample;
        local.seed = sample.seed + k;
        std::vector<Element> all(static_cast<std::size_t>(g.order()));
        for (Element x = 0; x < g.order(); ++x) all[static_cast<std::size_t>(x)] = x;
        const std::vector<Element> seed_element = {g.order() - 1};
        parts[kSubgroupSlender].push_back(check_subgroup_slender(g, all, window, cfg.bound, local));
        parts[kSubgroupSlender].push_back(
            check_subgroup_slender(g, generated_closure(g, seed_element), window, cfg.bound, local));
        for (Element e : idempotents(g))
            parts[kComponentSlender].push_back(check_component_slender(g, e, window, cfg.bound, local));
    }

    // Homomorphisms between small instances.
    groups.push_back(cyclic_group(2));
    const auto& z2 = groups.back();
    groups.push_back(cyclic_group(4));
    const auto& z4 = groups.back();
    groups.push_back(right_zero_semigroup(2));
    const auto& rz2 = groups.back();
    groups.push_back(catalogue_group("S3").gg());
    const auto& s3 = groups.back();
    const auto& rees0 = groups.front();
    std::vector<HomTable> maps;
    for (auto [a, b] : std::vector<std::pair<const FiniteGenGroup*, const FiniteGenGroup*>>{
             {&z2, &z4}, {&z4, &z2}, {&s3, &z2}, {&rz2, &rees0}, {&rees0, &z2}, {&rees0, &rz2}}) {
        for (auto& h : enumerate_homs(*a, *b, 64).homs) maps.push_back(std::move(h));
    }
    if (cfg.mutation == Mutation::NonHomMap) maps.emplace_back(z4, z4, std::vector<Element>{1, 2, 3, 0});
    parts[kHomPreservation].push_back(check_hom_preservation(maps));

    // Surjective images.
    groups.push_back(direct_product(rees0, z2));
    const auto& rees_z2 = groups.back();
    std::vector<Element> projection;
    for (Element x = 0; x < rees_z2.order(); ++x) projection.push_back(x / z2.order());
    const std::vector<HomTable> surjections = {HomTable(z4, z2, {0, 1, 0, 1}),
                                               HomTable(rees0, rees0, [&] {
                                                   std::vector<Element> id(static_cast<std::size_t>(rees0.order()));
                                                   for (Element x = 0; x < rees0.order(); ++x) id[static_cast<std::size_t>(x)] = x;
                                                   return id;
                                               }()),
                                               HomTable(rees_z2, rees0, projection)};
    for (std::size_t k = 0; k < surjections.size(); ++k) {
        const auto& f = surjections[k];
        parts[kSurjectiveImage].push_back(
            check_surjective_image(f, standard_probes(f.target(), window, sample.seed + k), cfg.bound, sample));
    }

    // Direct products.
    parts[kDirectProduct].push_back(check_direct_product({rz2, z2}, window, cfg.bound, sample));
    parts[kDirectProduct].push_back(check_direct_product({rees0, cyclic_group(3)}, window, cfg.bound, sample));
    parts[kDirectProduct].push_back(
        check_direct_product({z2, left_zero_semigroup(2), rz2}, window, cfg.bound, sample));

    // Representable homomorphisms into Z^k.
    std::mt19937_64 rep_rng(master());
    std::vector<RepHom> reps;
    for (int k = 0; k < 20; ++k) {
        const int w = 1 + static_cast<int>(rep_rng() % static_cast<std::uint64_t>(window));
        const int rank = 1 + static_cast<int>(rep_rng() % 3);
        reps.push_back(random_rep_hom(rep_rng, w, rank));
    }
    for (std::size_t k = 0; k < reps.size(); ++k) {
        SampleConfig local = sample;
        local.seed = sample.seed + k;
        parts[kAbelianImpliesGg].push_back(check_abelian_implies_gg(reps[k], cfg.bound, local));
        parts[kGgImpliesAbelian].push_back(check_gg_implies_abelian(reps[k], cfg.bound, local));
        parts[kWindowProperty].push_back(check_window_property(reps[k], cfg.bound));
        parts[kFiniteSubproduct].push_back(
            check_finite_subproduct({reps[k], RepGGHom::Rule::ThroughProjection}, cfg.bound, local));
        parts[kFiniteSubproduct].push_back(check_finite_subproduct({reps[k], RepGGHom::Rule::ThroughG}, cfg.bound, local));
    }
    if (cfg.mutation == Mutation::CorruptedComposite) {
        RepHom h{3, IntMatrix::Zero(1, 3)};
        h.matrix(0, 0) = 1;
        h.matrix(0, 2) = 1;
        parts[kAbelianImpliesGg].push_back(check_abelian_implies_gg(RepGGHom{h, RepGGHom::Rule::Direct}, cfg.bound, sample));
    }
    if (cfg.mutation == Mutation::WrongWindow) {
        RepHom h{3, IntMatrix::Zero(1, 6)};
        h.matrix(0, 2) = 1;
        h.matrix(0, 5) = 2;
        parts[kFiniteSubproduct].push_back(
            check_finite_subproduct({h, RepGGHom::Rule::ThroughProjection}, cfg.bound, sample));
        parts[kWindowProperty].push_back(check_window_property(h, cfg.bound));
    }

    parts[kProductNotSlender].push_back(check_product_not_slender(cfg.bound, sample));

    // Smith normal form certificates.
    std::mt19937_64 snf_rng(master());
    std::vector<SnfCase> cases;
    for (int k = 0; k < 40; ++k) {
        const auto rows = 1 + static_cast<Eigen::Index>(snf_rng() % 6);
        const auto cols = 1 + static_cast<Eigen::Index>(snf_rng() % 6);
        IntMatrix a(rows, cols);
        for (Eigen::Index i = 0; i < rows; ++i)
            for (Eigen::Index j = 0; j < cols; ++j) a(i, j) = static_cast<long>(snf_rng() % 41) - 20;
        cases.push_back({a, smith_normal_form(a)});
    }
    if (cfg.mutation == Mutation::NonUnimodularU) {
        IntMatrix a = IntMatrix::Zero(2, 2);
        a(0, 0) = 1;
        IntMatrix u = IntMatrix::Identity(2, 2);
        u(1, 1) = 2;
        cases.push_back({a, {u, a, IntMatrix::Identity(2, 2)}});
    }
    parts[kSnfCertificates].push_back(check_snf_certificates(cases));

    for (const auto& id : ids) out.push_back(merge(id, parts[id], base_params));
    std::sort(out.begin(), out.end(), [](const ClaimReport& a, const ClaimReport& b) { return a.id < b.id; });
    return out;
}

std::string format_report(const std::vector<ClaimReport>& reports) {
    std::ostringstream os;
    for (const auto& r : reports) {
        os << "CLAIM " << r.id << ' ' << to_string(r.status);
        if (!r.witness.empty()) os << " witness=" << r.witness;
        os << '\n';
    }
    return os.str();
}

bool any_falsified(const std::vector<ClaimReport>& reports) {
    return std::any_of(reports.begin(), reports.end(),
                       [](const ClaimReport& r) { return r.status == ClaimStatus::Falsified; });
}

} // namespace gengroup
