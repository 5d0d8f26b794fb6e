#pragma once

// Finitely supported integer sequences, read both as elements of the
// additive product of countably many copies of Z and of the generalized
// group whose operation takes x at positions 1 mod 3, y at positions 2 mod 3
// and x + y at positions 0 mod 3. Only finite support is representable;
// every operation here maps finite support to finite support.

#include "gengroup/integer.hpp"

#include <cstdint>
#include <initializer_list>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace gengroup {

using SeqIndex = std::int64_t;

class InvalidIndex : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Canonical sparse sequence: positions are 1-based, no stored zeros.
class FinSeq {
public:
    using Storage = std::map<SeqIndex, Integer>;

    FinSeq() = default;
    FinSeq(std::initializer_list<std::pair<SeqIndex, Integer>> coords);

    /// Value at position k; zero off the support.
    Integer operator[](SeqIndex k) const;
    /// Sets position k (k >= 1), erasing it when value is zero.
    void set(SeqIndex k, Integer value);

    const Storage& coords() const { return coords_; }
    std::size_t support_size() const { return coords_.size(); }
    bool is_zero() const { return coords_.empty(); }
    /// Largest index in the support, or 0 for the zero sequence.
    SeqIndex max_index() const { return coords_.empty() ? 0 : coords_.rbegin()->first; }

    bool operator==(const FinSeq&) const = default;

private:
    Storage coords_;
};

FinSeq basis(SeqIndex n);

FinSeq add(const FinSeq& x, const FinSeq& y);
FinSeq negate(const FinSeq& x);
FinSeq star(const FinSeq& x, const FinSeq& y);
FinSeq e_g(const FinSeq& x);
FinSeq inv_g(const FinSeq& x);
/// Keeps positions 0 mod 3. Read either as f: additive -> generalized, or as
/// the projection generalized -> additive; both are homomorphisms.
FinSeq map_f(const FinSeq& x);
/// Output position k is input position 3k.
FinSeq map_g(const FinSeq& x);
bool is_idempotent_g(const FinSeq& x);
/// Drops every coordinate beyond position n.
FinSeq truncate(const FinSeq& x, SeqIndex n);

inline FinSeq operator+(const FinSeq& x, const FinSeq& y) { return add(x, y); }
inline FinSeq operator-(const FinSeq& x) { return negate(x); }

/// "{1:3,5:7}" with ascending indices; "{}" for zero.
std::string to_string(const FinSeq& x);

class SeqParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Accepts the sparse form "{3:3, 6:6}" (any order, zeros dropped, duplicate
/// indices rejected) and the dense form "[0,0,3]" (1-based).
FinSeq parse_seq(std::string_view text);

} // namespace gengroup
