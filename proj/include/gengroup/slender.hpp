#pragma once

// Slenderness of finitely generated abelian groups, decided from the
// invariant-factor form of Z^n / rowspace(relations).
//
// Criterion: a finitely generated abelian group is slender iff it is
// torsion-free, i.e. free of finite rank. Free abelian groups are slender;
// that slender groups are torsion-free is the classical fact from
// L. Fuchs, Infinite Abelian Groups (1970), adopted here without proof.

#include "gengroup/integer.hpp"
#include "gengroup/smith.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gengroup {

struct FgAbelian {
    int free_rank = 0;
    std::vector<Integer> torsion; // d_1 | d_2 | ..., each >= 2

    bool operator==(const FgAbelian&) const = default;
};

/// "Z^r ⊕ Z/d1 ⊕ ...", or "0" for the trivial group.
std::string to_string(const FgAbelian& g);

class ShapeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Presents Z^generators modulo the row space of relations.
FgAbelian classify(const IntMatrix& relations, int generators);

/// Relations with generators = relations.cols().
FgAbelian classify(const IntMatrix& relations);

bool is_slender_fg(const FgAbelian& g);

struct NamedVerdict {
    bool slender;
    std::string citation;
};

class UnknownName : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Keys: Q, J_p, prod_Z, Z^n, free_abelian.
NamedVerdict named_verdict(const std::string& name);
const std::vector<std::string>& named_catalogue();

/// Independent audit of a claimed decomposition U * A * V = D.
struct SnfAudit {
    bool ok = true;
    std::string failure; // empty when ok
    std::string witness;
};

SnfAudit audit_snf(const IntMatrix& A, const SnfResult<Integer>& claimed);

} // namespace gengroup
