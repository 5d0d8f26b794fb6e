#include "gengroup/io.hpp"

#include <fstream>
#include <limits>

namespace gengroup::io {

namespace {

const json& field(const json& doc, const char* key) {
    if (!doc.is_object() || !doc.contains(key)) throw DocumentError(std::string("missing field '") + key + "'");
    return doc.at(key);
}

int as_int(const json& v, const char* what) {
    if (!v.is_number_integer()) throw DocumentError(std::string(what) + " must be an integer");
    const auto x = v.get<long long>();
    if (x < std::numeric_limits<int>::min() || x > std::numeric_limits<int>::max())
        throw DocumentError(std::string(what) + " out of range");
    return static_cast<int>(x);
}

Integer as_integer(const json& v) {
    if (v.is_number_integer()) return Integer(v.get<long long>());
    if (v.is_number_unsigned()) return Integer(v.get<unsigned long long>());
    if (v.is_string()) {
        const auto& s = v.get_ref<const std::string&>();
        const std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
        if (s.size() == start || s.find_first_not_of("0123456789", start) != std::string::npos)
            throw DocumentError("matrix entry '" + s + "' is not an integer");
        return Integer(s);
    }
    throw DocumentError("matrix entries must be integers or decimal strings");
}

json integer_json(const Integer& v) {
    if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
        return v.convert_to<long long>();
    return v.str();
}

template <typename Table>
Table int_table(const json& rows, const char* what) {
    if (!rows.is_array()) throw DocumentError(std::string(what) + " must be an array of rows");
    const auto n = static_cast<Eigen::Index>(rows.size());
    Eigen::Index cols = n;
    if (n > 0) {
        if (!rows[0].is_array()) throw DocumentError(std::string(what) + " rows must be arrays");
        cols = static_cast<Eigen::Index>(rows[0].size());
    }
    Table t(n, cols);
    for (Eigen::Index i = 0; i < n; ++i) {
        const auto& row = rows[static_cast<std::size_t>(i)];
        if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols)
            throw DocumentError(std::string(what) + " rows must have equal length");
        for (Eigen::Index j = 0; j < cols; ++j) t(i, j) = as_int(row[static_cast<std::size_t>(j)], what);
    }
    return t;
}

} // namespace

json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw FileError("cannot open " + path.string());
    try {
        return json::parse(in);
    } catch (const json::parse_error& ex) {
        throw DocumentError(path.string() + ": " + ex.what());
    }
}

CayleyDocument parse_cayley(const json& doc) {
    CayleyDocument out;
    const auto& names = field(doc, "names");
    if (!names.is_array()) throw DocumentError("names must be an array of strings");
    for (const auto& n : names) {
        if (!n.is_string()) throw DocumentError("names must be an array of strings");
        out.names.push_back(n.get<std::string>());
    }
    out.table = int_table<CayleyTable>(field(doc, "table"), "table");
    if (out.table.rows() != out.table.cols()) throw MalformedTable("table must be square");
    if (out.names.size() != static_cast<std::size_t>(out.table.rows()))
        throw MalformedTable("name count does not match table order");
    return out;
}

FiniteGenGroup group_from_json(const json& doc) {
    auto d = parse_cayley(doc);
    return FiniteGenGroup(std::move(d.names), std::move(d.table));
}

json to_json(const FiniteGenGroup& g) {
    json table = json::array();
    for (Eigen::Index i = 0; i < g.table().rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < g.table().cols(); ++j) row.push_back(g.table()(i, j));
        table.push_back(std::move(row));
    }
    return {{"names", g.names()}, {"table", std::move(table)}};
}

ReesSpec rees_from_json(const json& doc) {
    ReesSpec spec{FiniteGroup(group_from_json(field(doc, "group"))), as_int(field(doc, "i_size"), "i_size"),
                  as_int(field(doc, "lambda_size"), "lambda_size"),
                  int_table<SandwichMatrix>(field(doc, "sandwich"), "sandwich")};
    validate(spec);
    return spec;
}

json to_json(const ReesSpec& spec) {
    json sandwich = json::array();
    for (Eigen::Index l = 0; l < spec.sandwich.rows(); ++l) {
        json row = json::array();
        for (Eigen::Index i = 0; i < spec.sandwich.cols(); ++i) row.push_back(spec.sandwich(l, i));
        sandwich.push_back(std::move(row));
    }
    return {{"group", to_json(spec.base.gg())},
            {"i_size", spec.i_size},
            {"lambda_size", spec.lambda_size},
            {"sandwich", std::move(sandwich)}};
}

IntMatrix matrix_from_json(const json& doc) {
    const int rows = as_int(field(doc, "rows"), "rows");
    const int cols = as_int(field(doc, "cols"), "cols");
    const auto& entries = field(doc, "entries");
    if (rows < 0 || cols < 0) throw DocumentError("matrix dimensions must be nonnegative");
    if (!entries.is_array() || entries.size() != static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols))
        throw DocumentError("entries must hold rows*cols values");
    IntMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            m(i, j) = as_integer(entries[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols) +
                                         static_cast<std::size_t>(j)]);
    return m;
}

json to_json(const IntMatrix& m) {
    json entries = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) entries.push_back(integer_json(m(i, j)));
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

std::vector<Element> images_from_json(const json& doc) {
    const auto& images = field(doc, "images");
    if (!images.is_array()) throw DocumentError("images must be an array");
    std::vector<Element> out;
    for (const auto& v : images) out.push_back(as_int(v, "image"));
    return out;
}

json images_to_json(const std::vector<Element>& images) { return {{"images", images}}; }

SnfResult<Integer> snf_from_json(const json& doc) {
    return {matrix_from_json(field(doc, "U")), matrix_from_json(field(doc, "D")), matrix_from_json(field(doc, "V"))};
}

json to_json(const SnfResult<Integer>& snf) {
    return {{"U", to_json(snf.U)}, {"D", to_json(snf.D)}, {"V", to_json(snf.V)}};
}

json to_json(const ClaimReport& r) {
    json out = {{"id", r.id}, {"status", to_string(r.status)}, {"parameters", r.parameters}};
    if (!r.witness.empty()) out["witness"] = r.witness;
    if (!r.note.empty()) out["note"] = r.note;
    return out;
}

json report_json(const std::vector<ClaimReport>& reports, const RunConfig& cfg) {
    json claims = json::array();
    for (const auto& r : reports) claims.push_back(to_json(r));
    return {{"seed", cfg.seed},
            {"bound", cfg.bound},
            {"samples", cfg.samples},
            {"mutation", to_string(cfg.mutation)},
            {"scope", "homomorphisms that factor through a finite coordinate window only"},
            {"falsified", any_falsified(reports)},
            {"claims", std::move(claims)}};
}

} // namespace gengroup::io
