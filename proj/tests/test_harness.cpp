#include "gengroup/harness.hpp"

#include <doctest.h>

using namespace gengroup;

namespace {

RepHom row_hom(int window, std::vector<long> row) {
    RepHom h{window, IntMatrix::Zero(1, static_cast<Eigen::Index>(row.size()))};
    for (std::size_t j = 0; j < row.size(); ++j) h.matrix(0, static_cast<Eigen::Index>(j)) = row[j];
    return h;
}

IntVector vec(std::initializer_list<long> v) {
    IntVector out(static_cast<Eigen::Index>(v.size()));
    Eigen::Index k = 0;
    for (long x : v) out(k++) = x;
    return out;
}

const SampleConfig kSmall{7, 200, 9};

const ClaimReport& find(const std::vector<ClaimReport>& rs, const std::string& id) {
    for (const auto& r : rs)
        if (r.id == id) return r;
    throw std::runtime_error("missing claim " + id);
}

} // namespace

TEST_CASE("eval_rep") {
    RepHom h{2, IntMatrix(2, 2)};
    h.matrix << 1, 2, 0, -1;
    CHECK(eval_rep(h, FinSeq{{1, 3}, {2, 4}, {5, 100}}) == vec({11, -4}));
    CHECK(eval_rep(h, FinSeq{}) == vec({0, 0}));
    CHECK(declared_support(h) == IndexSet{1, 2});
    CHECK(h.well_formed());
    CHECK(h.target_rank() == 2);
    CHECK(declared_support(row_hom(4, {0, 3, 0, 1})) == IndexSet{2, 4});
}

TEST_CASE("off-diagonal sets") {
    CHECK(offdiagonal_set(row_hom(3, {0, 0, 0}), 30).empty());
    CHECK(offdiagonal_set(row_hom(3, {1, 0, 2}), 30) == IndexSet{1, 3});

    const RepGGHom proj{row_hom(6, {0, 0, 1, 0, 0, 1}), RepGGHom::Rule::ThroughProjection};
    CHECK(offdiagonal_set(proj, 100) == IndexSet{3, 6});
    const RepGGHom through_g{row_hom(2, {1, 1}), RepGGHom::Rule::ThroughG};
    CHECK(through_g.window() == 6);
    CHECK(offdiagonal_set(through_g, 100) == IndexSet{3, 6});
    CHECK(eval(through_g, FinSeq{{3, 4}, {6, 5}, {9, 7}}) == vec({9}));
}

TEST_CASE("abelian-slender-implies-gg-slender") {
    SUBCASE("zero map") {
        const auto r = check_abelian_implies_gg(row_hom(3, {0, 0, 0}), 100, kSmall);
        CHECK(r.status == ClaimStatus::Verified);
        CHECK(r.parameters.at("offdiagonal") == "{}");
    }
    SUBCASE("window 6, coordinates 3 and 6") {
        const auto r = check_abelian_implies_gg(row_hom(6, {0, 0, 1, 0, 0, 1}), 100, kSmall);
        CHECK(r.status == ClaimStatus::Verified);
        CHECK(r.parameters.at("offdiagonal") == "{3,6}");
    }
    SUBCASE("off-diagonal set stays inside multiples of 3") {
        const auto r = check_abelian_implies_gg(row_hom(6, {1, 2, 3, 4, 5, 6}), 100, kSmall);
        CHECK(r.status == ClaimStatus::Verified);
        CHECK(r.parameters.at("offdiagonal") == "{3,6}");
    }
    SUBCASE("a direct map seeing position 1 is falsified") {
        const RepGGHom bad{row_hom(3, {1, 0, 1}), RepGGHom::Rule::Direct};
        const auto r = check_abelian_implies_gg(bad, 100, kSmall);
        CHECK(r.status == ClaimStatus::Falsified);
        CHECK(r.witness == "law fails at (i_1,i_1): (1) != (2)");
    }
    SUBCASE("bound 0 is skipped") {
        CHECK(check_abelian_implies_gg(row_hom(3, {1, 1, 1}), 0, kSmall).status == ClaimStatus::Skipped);
    }
}

TEST_CASE("gg-slender-implies-abelian-slender") {
    SUBCASE("projection to coordinate 1") {
        const auto r = check_gg_implies_abelian(row_hom(1, {1}), 100, kSmall);
        CHECK(r.status == ClaimStatus::Verified);
        CHECK(r.parameters.at("nonzero") == "{3}");
    }
    SUBCASE("sum of the first two coordinates") {
        const auto r = check_gg_implies_abelian(row_hom(2, {1, 1}), 100, kSmall);
        CHECK(r.status == ClaimStatus::Verified);
        CHECK(r.parameters.at("nonzero") == "{3,6}");
    }
    SUBCASE("gaps in the support") {
        const auto r = check_gg_implies_abelian(row_hom(4, {0, 5, 0, -1}), 100, kSmall);
        CHECK(r.status == ClaimStatus::Verified);
        CHECK(r.parameters.at("nonzero") == "{6,12}");
    }
}

TEST_CASE("window property") {
    CHECK(check_window_property(row_hom(3, {1, 0, 1}), 100).status == ClaimStatus::Verified);
    const auto wide = row_hom(3, {0, 0, 1, 0, 0, 2});
    CHECK_FALSE(wide.well_formed());
    const auto r = check_window_property(wide, 100);
    CHECK(r.status == ClaimStatus::Falsified);
    CHECK(r.witness == "h(i_6) != 0 beyond window 3");
}

TEST_CASE("finite subproduct") {
    const RepGGHom h{row_hom(3, {1, 2, 3}), RepGGHom::Rule::ThroughProjection};
    const auto r = check_finite_subproduct(h, 100, kSmall);
    CHECK(r.status == ClaimStatus::Verified);
    CHECK(r.parameters.at("S") == "{3}");

    const RepGGHom wrong{row_hom(3, {0, 0, 1, 0, 0, 2}), RepGGHom::Rule::ThroughProjection};
    const auto w = check_finite_subproduct(wrong, 100, kSmall);
    CHECK(w.status == ClaimStatus::Falsified);
    CHECK(w.witness == "S contains 6 beyond window 3");
}

TEST_CASE("subgroups and components") {
    const auto z4 = cyclic_group(4);
    CHECK(check_subgroup_slender(z4, {0, 2}, 3, 30, kSmall).status == ClaimStatus::Verified);
    CHECK(check_subgroup_slender(z4, {0, 1}, 3, 30, kSmall).status == ClaimStatus::Skipped);

    const auto rees = rees_build(random_rees(3, {2, 2, 6}));
    for (Element a = 0; a < rees.order(); ++a)
        CHECK(check_component_slender(rees, a, 3, 30, kSmall).status == ClaimStatus::Verified);
}

TEST_CASE("surjective images") {
    const auto z4 = cyclic_group(4);
    const auto z2 = cyclic_group(2);
    const HomTable reduce(z4, z2, {0, 1, 0, 1});
    const auto r = check_surjective_image(reduce, standard_probes(z2, 3, 1), 30, kSmall);
    CHECK(r.status == ClaimStatus::Verified);
    CHECK_FALSE(r.note.empty());

    const HomTable into(z2, z4, {0, 2});
    CHECK_THROWS_AS(check_surjective_image(into, standard_probes(z4, 3, 1), 30, kSmall), NotSurjective);
}

TEST_CASE("direct products") {
    CHECK(check_direct_product({}, 3, 30, kSmall).status == ClaimStatus::Skipped);
    const auto r = check_direct_product({right_zero_semigroup(2), cyclic_group(2)}, 3, 30, kSmall);
    CHECK(r.status == ClaimStatus::Verified);
}

TEST_CASE("standard probes obey the law") {
    const auto g = rees_build(random_rees(11, {2, 3, 6}));
    const auto probes = standard_probes(g, 3, 2);
    CHECK(probes.size() >= static_cast<std::size_t>(g.order()));
    std::mt19937_64 rng(1);
    for (const auto& p : probes)
        for (int s = 0; s < 50; ++s) {
            const auto x = random_finseq(rng, 8, 9);
            const auto y = random_finseq(rng, 8, 9);
            CHECK(eval(g, p, star(x, y)) == g(eval(g, p, x), eval(g, p, y)));
        }
}

TEST_CASE("power") {
    const auto z4 = cyclic_group(4);
    CHECK(power(z4, 1, 0) == 0);
    CHECK(power(z4, 1, 3) == 3);
    CHECK(power(z4, 1, -1) == 3);
    CHECK(power(z4, 2, Integer("1000000000000000000001")) == 2);
}

TEST_CASE("product-not-slender") {
    CHECK(check_product_not_slender(100, kSmall).status == ClaimStatus::Verified);
    CHECK(check_product_not_slender(2, kSmall).status == ClaimStatus::Skipped);
}

TEST_CASE("run_all") {
    SUBCASE("defaults verify every claim") {
        const auto rs = run_all(RunConfig{0, 100, 200, Mutation::None});
        CHECK(rs.size() == 13);
        for (const auto& r : rs) {
            INFO(r.id);
            CHECK(r.status == ClaimStatus::Verified);
        }
        CHECK_FALSE(any_falsified(rs));
        CHECK(std::is_sorted(rs.begin(), rs.end(), [](const auto& a, const auto& b) { return a.id < b.id; }));
    }
    SUBCASE("bound 0 skips everything") {
        for (const auto& r : run_all(RunConfig{0, 0, 200, Mutation::None})) CHECK(r.status == ClaimStatus::Skipped);
    }
    SUBCASE("deterministic") {
        const RunConfig cfg{5, 40, 100, Mutation::None};
        CHECK(format_report(run_all(cfg)) == format_report(run_all(cfg)));
    }
}

TEST_CASE("each mutation falsifies its claim") {
    const std::map<Mutation, std::string> target = {
        {Mutation::BrokenTable, kLocalIdentityLaws},      {Mutation::NonHomMap, kHomPreservation},
        {Mutation::WrongSandwich, kReesIdempotents},      {Mutation::CorruptedComposite, kAbelianImpliesGg},
        {Mutation::NonUnimodularU, kSnfCertificates},     {Mutation::WrongWindow, kFiniteSubproduct},
    };
    for (Mutation m : all_mutations()) {
        INFO(to_string(m));
        CHECK(parse_mutation(to_string(m)) == m);
        const auto rs = run_all(RunConfig{0, 100, 100, m});
        CHECK(any_falsified(rs));
        const auto& r = find(rs, target.at(m));
        CHECK(r.status == ClaimStatus::Falsified);
        CHECK_FALSE(r.witness.empty());
    }
    CHECK_THROWS(parse_mutation("bogus"));
}

TEST_CASE("report format") {
    ClaimReport ok{"a", ClaimStatus::Verified, "", {}, ""};
    ClaimReport bad{"b", ClaimStatus::Falsified, "x=1", {}, ""};
    CHECK(format_report({ok, bad}) == "CLAIM a verified\nCLAIM b falsified witness=x=1\n");
}
