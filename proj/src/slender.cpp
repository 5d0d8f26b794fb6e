#include "gengroup/slender.hpp"

#include <sstream>

namespace gengroup {

std::string to_string(const FgAbelian& g) {
    std::ostringstream os;
    const char* sep = "";
    if (g.free_rank > 0) {
        os << "Z^" << g.free_rank;
        sep = " ⊕ ";
    }
    for (const auto& d : g.torsion) {
        os << sep << "Z/" << d;
        sep = " ⊕ ";
    }
    const auto s = os.str();
    return s.empty() ? "0" : s;
}

FgAbelian classify(const IntMatrix& relations, int generators) {
    if (generators < 0) throw ShapeError("generator count must be nonnegative");
    if (relations.size() > 0 && relations.cols() != generators)
        throw ShapeError("relation matrix has " + std::to_string(relations.cols()) + " columns for " +
                         std::to_string(generators) + " generators");
    FgAbelian out;
    out.free_rank = generators;
    if (relations.size() == 0) return out;
    const auto snf = smith_normal_form(relations);
    for (Eigen::Index k = 0; k < std::min(snf.D.rows(), snf.D.cols()); ++k) {
        const Integer& d = snf.D(k, k);
        if (d == 0) break;
        --out.free_rank;
        if (d > 1) out.torsion.push_back(d);
    }
    return out;
}

FgAbelian classify(const IntMatrix& relations) { return classify(relations, static_cast<int>(relations.cols())); }

bool is_slender_fg(const FgAbelian& g) { return g.torsion.empty(); }

const std::vector<std::string>& named_catalogue() {
    static const std::vector<std::string> names = {"Q", "J_p", "prod_Z", "Z^n", "free_abelian"};
    return names;
}

NamedVerdict named_verdict(const std::string& name) {
    if (name == "Q") return {false, "divisible groups such as Q are not slender"};
    if (name == "J_p") return {false, "the p-adic integers J_p are not slender"};
    if (name == "prod_Z")
        return {false, "the identity of the countable product of Z sends no basis element i_n to 0"};
    if (name == "Z^n" || name == "free_abelian") return {true, "every free abelian group is slender"};
    throw UnknownName("unknown group name: " + name);
}

SnfAudit audit_snf(const IntMatrix& A, const SnfResult<Integer>& c) {
    const auto m = A.rows();
    const auto n = A.cols();
    if (c.U.rows() != m || c.U.cols() != m || c.V.rows() != n || c.V.cols() != n || c.D.rows() != m ||
        c.D.cols() != n)
        return {false, "shape", "certificate dimensions do not match A"};
    const IntMatrix product = c.U * A * c.V;
    for (Eigen::Index i = 0; i < m; ++i)
        for (Eigen::Index j = 0; j < n; ++j) {
            if (product(i, j) != c.D(i, j)) {
                std::ostringstream os;
                os << "(U*A*V)(" << i << "," << j << ")=" << product(i, j) << " but D(" << i << "," << j
                   << ")=" << c.D(i, j);
                return {false, "reconstruction", os.str()};
            }
            if (i != j && c.D(i, j) != 0) {
                std::ostringstream os;
                os << "D(" << i << "," << j << ")=" << c.D(i, j);
                return {false, "diagonal", os.str()};
            }
        }
    const auto k = std::min(m, n);
    for (Eigen::Index i = 0; i < k; ++i) {
        if (c.D(i, i) < 0) return {false, "sign", "D(" + std::to_string(i) + "," + std::to_string(i) + ") < 0"};
        if (i + 1 < k) {
            const Integer& a = c.D(i, i);
            const Integer& b = c.D(i + 1, i + 1);
            const bool divides = a == 0 ? b == 0 : Integer(b % a) == 0;
            if (!divides) {
                std::ostringstream os;
                os << "d" << i + 1 << "=" << a << " does not divide d" << i + 2 << "=" << b;
                return {false, "divisibility", os.str()};
            }
        }
    }
    if (const Integer du = exact_determinant(c.U); du != 1 && du != -1) {
        std::ostringstream os;
        os << "det U = " << du;
        return {false, "unimodular", os.str()};
    }
    if (const Integer dv = exact_determinant(c.V); dv != 1 && dv != -1) {
        std::ostringstream os;
        os << "det V = " << dv;
        return {false, "unimodular", os.str()};
    }
    return {};
}

} // namespace gengroup
