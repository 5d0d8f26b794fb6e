#pragma once

// JSON documents for tables, Rees specs, integer matrices, hom tables, SNF
// certificates and harness reports.

#include "gengroup/core.hpp"
#include "gengroup/harness.hpp"
#include "gengroup/rees.hpp"
#include "gengroup/slender.hpp"

#include <json.hpp>

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

namespace gengroup::io {

using json = nlohmann::json;

/// Structurally invalid document (missing keys, wrong types).
class DocumentError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class FileError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

json read_json_file(const std::filesystem::path& path);

/// Unvalidated Cayley document; axioms are checked by the caller.
struct CayleyDocument {
    std::vector<std::string> names;
    CayleyTable table;
};

CayleyDocument parse_cayley(const json& doc);
FiniteGenGroup group_from_json(const json& doc);
json to_json(const FiniteGenGroup& g);

ReesSpec rees_from_json(const json& doc);
json to_json(const ReesSpec& spec);

/// Entries may be JSON integers or decimal strings.
IntMatrix matrix_from_json(const json& doc);
json to_json(const IntMatrix& m);

std::vector<Element> images_from_json(const json& doc);
json images_to_json(const std::vector<Element>& images);

SnfResult<Integer> snf_from_json(const json& doc);
json to_json(const SnfResult<Integer>& snf);

json to_json(const ClaimReport& r);
json report_json(const std::vector<ClaimReport>& reports, const RunConfig& cfg);

} // namespace gengroup::io
