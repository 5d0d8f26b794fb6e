#include "gengroup/slender.hpp"
#include "gengroup/smith.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace gengroup;

namespace {

IntMatrix from_rows(const oracle::Mat& a) {
    const auto rows = static_cast<Eigen::Index>(a.size());
    const auto cols = static_cast<Eigen::Index>(a.empty() ? 0 : a[0].size());
    IntMatrix out(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i)
        for (Eigen::Index j = 0; j < cols; ++j) out(i, j) = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    return out;
}

oracle::Mat to_rows(const IntMatrix& a) {
    oracle::Mat out(static_cast<std::size_t>(a.rows()));
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out[static_cast<std::size_t>(i)].push_back(a(i, j).convert_to<std::int64_t>());
    return out;
}

oracle::Mat random_mat(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int range) {
    oracle::Mat a(rows, std::vector<std::int64_t>(cols));
    for (auto& row : a)
        for (auto& v : row) v = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(2 * range + 1)) - range;
    return a;
}

std::vector<std::int64_t> diagonal_nonzero(const IntMatrix& D) {
    std::vector<std::int64_t> out;
    for (Eigen::Index k = 0; k < std::min(D.rows(), D.cols()); ++k)
        if (D(k, k) != 0) out.push_back(D(k, k).convert_to<std::int64_t>());
    return out;
}

} // namespace

TEST_CASE("SNF small cases") {
    const auto empty = smith_normal_form(IntMatrix(0, 0));
    CHECK(empty.D.size() == 0);

    const auto r = smith_normal_form(from_rows({{2, 4}, {6, 8}}));
    CHECK(r.D == from_rows({{2, 0}, {0, 4}}));
    CHECK(r.U * from_rows({{2, 4}, {6, 8}}) * r.V == r.D);

    const auto id = smith_normal_form(IntMatrix(IntMatrix::Identity(3, 3)));
    CHECK(id.D == IntMatrix::Identity(3, 3));

    const auto six = smith_normal_form(from_rows({{6}}));
    CHECK(six.D(0, 0) == 6);
    const auto neg = smith_normal_form(from_rows({{-6}}));
    CHECK(neg.D(0, 0) == 6);
}

TEST_CASE("property: SNF against minor gcds") {
    std::mt19937_64 rng(21);
    for (int k = 0; k < 300; ++k) {
        const std::size_t rows = 1 + rng() % 3;
        const std::size_t cols = 1 + rng() % 3;
        const auto a = random_mat(rng, rows, cols, 12);
        const auto A = from_rows(a);
        const auto r = smith_normal_form(A);
        CHECK(r.U * A * r.V == r.D);
        CHECK(std::llabs(oracle::det(to_rows(r.U))) == 1);
        CHECK(std::llabs(oracle::det(to_rows(r.V))) == 1);
        CHECK(diagonal_nonzero(r.D) == oracle::invariant_factors(a));
        CHECK(audit_snf(A, r).ok);
    }
}

TEST_CASE("SNF on int64 scalars") {
    Matrix<std::int64_t> A(2, 3);
    A << 4, 6, 8, 10, 12, 14;
    const auto r = smith_normal_form(A);
    CHECK(r.U * A * r.V == r.D);
    CHECK(r.D(0, 0) == 2);
    CHECK(r.D(1, 1) == 6);
    CHECK(is_unimodular(r.U));
    CHECK(is_unimodular(r.V));
}

TEST_CASE("exact determinant") {
    std::mt19937_64 rng(4);
    for (int k = 0; k < 100; ++k) {
        const std::size_t n = 1 + rng() % 4;
        const auto a = random_mat(rng, n, n, 9);
        CHECK(exact_determinant(from_rows(a)) == oracle::det(a));
    }
    CHECK(exact_determinant(IntMatrix(0, 0)) == 1);
    CHECK_FALSE(is_unimodular(from_rows({{2, 0}, {0, 1}})));
    CHECK(is_unimodular(from_rows({{2, 1}, {1, 1}})));
}

TEST_CASE("classify") {
    CHECK(to_string(classify(from_rows({{6}}))) == "Z/6");
    CHECK(to_string(classify(from_rows({{2, 0}}))) == "Z^1 ⊕ Z/2");
    CHECK(to_string(classify(IntMatrix(0, 3))) == "Z^3");
    CHECK(to_string(classify(from_rows({{1}}))) == "0");
    CHECK(to_string(classify(IntMatrix(0, 0), 2)) == "Z^2");
    CHECK(classify(from_rows({{2, 4}, {6, 8}})) == FgAbelian{0, {2, 4}});
    // Z/2 + Z/3 is cyclic of order 6.
    CHECK(classify(from_rows({{2, 0}, {0, 3}})) == FgAbelian{0, {6}});
    CHECK_THROWS_AS(classify(from_rows({{1, 2}}), 3), ShapeError);
    CHECK_THROWS_AS(classify(IntMatrix(0, 0), -1), ShapeError);

    CHECK(is_slender_fg(classify(IntMatrix(0, 3))));
    CHECK_FALSE(is_slender_fg(classify(from_rows({{6}}))));
    CHECK_FALSE(is_slender_fg(classify(from_rows({{2, 0}}))));
}

TEST_CASE("property: classify is invariant under row shuffles and unimodular changes") {
    std::mt19937_64 rng(8);
    for (int k = 0; k < 150; ++k) {
        const std::size_t rows = 1 + rng() % 4;
        const std::size_t cols = 1 + rng() % 4;
        auto a = random_mat(rng, rows, cols, 10);
        const auto base = classify(from_rows(a));
        std::shuffle(a.begin(), a.end(), rng);
        CHECK(classify(from_rows(a)) == base);
        // Add a multiple of one row to another.
        if (rows > 1) {
            const auto m = static_cast<std::int64_t>(rng() % 5) - 2;
            for (std::size_t j = 0; j < cols; ++j) a[1][j] += m * a[0][j];
            CHECK(classify(from_rows(a)) == base);
        }
        // Torsion-free part has rank cols - rank(A).
        const auto factors = oracle::invariant_factors(a);
        CHECK(base.free_rank == static_cast<int>(cols - factors.size()));
    }
}

TEST_CASE("named verdicts") {
    CHECK_FALSE(named_verdict("Q").slender);
    CHECK_FALSE(named_verdict("J_p").slender);
    CHECK_FALSE(named_verdict("prod_Z").slender);
    CHECK(named_verdict("Z^n").slender);
    CHECK(named_verdict("free_abelian").slender);
    for (const auto& name : named_catalogue()) CHECK_FALSE(named_verdict(name).citation.empty());
    CHECK_THROWS_AS(named_verdict("Z/7"), UnknownName);
}

TEST_CASE("audit_snf rejects bad certificates") {
    const auto A = from_rows({{2, 4}, {6, 8}});
    const auto good = smith_normal_form(A);
    CHECK(audit_snf(A, good).ok);

    auto bad = good;
    bad.D(1, 1) += 1;
    CHECK(audit_snf(A, bad).failure == "reconstruction");

    SnfResult<Integer> doubled{from_rows({{2, 0}, {0, 1}}), from_rows({{4, 8}, {6, 8}}), IntMatrix::Identity(2, 2)};
    CHECK(audit_snf(A, doubled).failure == "diagonal");

    SnfResult<Integer> negative{IntMatrix::Identity(1, 1), from_rows({{-3}}), IntMatrix::Identity(1, 1)};
    CHECK(audit_snf(from_rows({{-3}}), negative).failure == "sign");

    SnfResult<Integer> chain{IntMatrix::Identity(2, 2), from_rows({{2, 0}, {0, 3}}), IntMatrix::Identity(2, 2)};
    CHECK(audit_snf(from_rows({{2, 0}, {0, 3}}), chain).failure == "divisibility");

    SnfResult<Integer> scaled{from_rows({{2, 0}, {0, 1}}), from_rows({{2, 0}, {0, 2}}), IntMatrix::Identity(2, 2)};
    CHECK(audit_snf(from_rows({{1, 0}, {0, 2}}), scaled).failure == "unimodular");

    CHECK(audit_snf(A, SnfResult<Integer>{IntMatrix::Identity(3, 3), A, IntMatrix::Identity(2, 2)}).failure == "shape");
}
