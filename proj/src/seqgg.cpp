#include "gengroup/seqgg.hpp"

#include <cctype>
#include <limits>
#include <sstream>

namespace gengroup {

namespace {

int residue(SeqIndex k) { return static_cast<int>(k % 3); }

} // namespace

FinSeq::FinSeq(std::initializer_list<std::pair<SeqIndex, Integer>> coords) {
    for (const auto& [k, v] : coords) set(k, v + (*this)[k]);
}

Integer FinSeq::operator[](SeqIndex k) const {
    auto it = coords_.find(k);
    return it == coords_.end() ? Integer(0) : it->second;
}

void FinSeq::set(SeqIndex k, Integer value) {
    if (k < 1) throw InvalidIndex("sequence positions start at 1");
    if (value == 0)
        coords_.erase(k);
    else
        coords_[k] = std::move(value);
}

FinSeq basis(SeqIndex n) {
    if (n < 1) throw InvalidIndex("basis index must be >= 1");
    FinSeq out;
    out.set(n, 1);
    return out;
}

FinSeq add(const FinSeq& x, const FinSeq& y) {
    FinSeq out = x;
    for (const auto& [k, v] : y.coords()) out.set(k, out[k] + v);
    return out;
}

FinSeq negate(const FinSeq& x) {
    FinSeq out;
    for (const auto& [k, v] : x.coords()) out.set(k, -v);
    return out;
}

FinSeq star(const FinSeq& x, const FinSeq& y) {
    FinSeq out;
    for (const auto& [k, v] : x.coords())
        if (residue(k) != 2) out.set(k, v);
    for (const auto& [k, v] : y.coords()) {
        if (residue(k) == 2)
            out.set(k, v);
        else if (residue(k) == 0)
            out.set(k, out[k] + v);
    }
    return out;
}

FinSeq e_g(const FinSeq& x) {
    FinSeq out;
    for (const auto& [k, v] : x.coords())
        if (residue(k) != 0) out.set(k, v);
    return out;
}

FinSeq inv_g(const FinSeq& x) {
    FinSeq out;
    for (const auto& [k, v] : x.coords()) out.set(k, residue(k) == 0 ? Integer(-v) : v);
    return out;
}

FinSeq map_f(const FinSeq& x) {
    FinSeq out;
    for (const auto& [k, v] : x.coords())
        if (residue(k) == 0) out.set(k, v);
    return out;
}

FinSeq map_g(const FinSeq& x) {
    FinSeq out;
    for (const auto& [k, v] : x.coords())
        if (residue(k) == 0) out.set(k / 3, v);
    return out;
}

bool is_idempotent_g(const FinSeq& x) {
    for (const auto& [k, v] : x.coords())
        if (residue(k) == 0) return false;
    return true;
}

FinSeq truncate(const FinSeq& x, SeqIndex n) {
    FinSeq out;
    for (const auto& [k, v] : x.coords())
        if (k <= n) out.set(k, v);
    return out;
}

std::string to_string(const FinSeq& x) {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (const auto& [k, v] : x.coords()) {
        os << (first ? "" : ",") << k << ':' << v;
        first = false;
    }
    os << '}';
    return os.str();
}

namespace {

class Cursor {
public:
    explicit Cursor(std::string_view s) : s_(s) {}

    void skip_space() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool done() {
        skip_space();
        return pos_ == s_.size();
    }
    bool accept(char c) {
        skip_space();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c)) throw SeqParseError(std::string("expected '") + c + "' in sequence literal");
    }
    Integer integer() {
        skip_space();
        const std::size_t start = pos_;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
        const std::size_t digits = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == digits) throw SeqParseError("expected an integer in sequence literal");
        std::string token(s_.substr(start, pos_ - start));
        if (token.front() == '+') token.erase(0, 1);
        return Integer(token);
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;
};

SeqIndex to_index(const Integer& v) {
    if (v < 1 || v > Integer(std::numeric_limits<SeqIndex>::max()))
        throw SeqParseError("sequence index must be a positive 64-bit integer");
    return v.convert_to<SeqIndex>();
}

} // namespace

FinSeq parse_seq(std::string_view text) {
    Cursor c(text);
    FinSeq out;
    if (c.accept('{')) {
        std::map<SeqIndex, bool> seen;
        if (!c.accept('}')) {
            do {
                const SeqIndex k = to_index(c.integer());
                c.expect(':');
                Integer v = c.integer();
                if (seen[k]) throw SeqParseError("duplicate index " + std::to_string(k));
                seen[k] = true;
                out.set(k, std::move(v));
            } while (c.accept(','));
            c.expect('}');
        }
    } else if (c.accept('[')) {
        SeqIndex k = 1;
        if (!c.accept(']')) {
            do out.set(k++, c.integer());
            while (c.accept(','));
            c.expect(']');
        }
    } else {
        throw SeqParseError("sequence literal must start with '{' or '['");
    }
    if (!c.done()) throw SeqParseError("trailing characters after sequence literal");
    return out;
}

} // namespace gengroup
