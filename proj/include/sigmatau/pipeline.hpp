#pragma once

#include "sigmatau/document.hpp"

#include <filesystem>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace sigmatau {

struct RunConfig {
    int max_weight = 10;
    std::string method = "plucker"; // plucker | classical | both
    bool enable_weight16 = false;   // layers of weight ≥ 16 are slow
    bool allow_rank3 = false;
    bool use_cache = true;
    std::optional<std::filesystem::path> cache_dir; // default_cache_dir() when empty
};

// Throws ConfigError for anything the derivation would refuse.
void validate(const RunConfig& cfg, const CurveContext& c);

CurveContextPtr load_curve(const std::filesystem::path& p);
std::string read_file(const std::filesystem::path& p);
// Writes to a sibling temporary file, then renames over the target.
void write_atomic(const std::filesystem::path& p, const std::string& content);

// $SIGMATAU_CACHE, else $HOME/.cache/sigmatau.
std::filesystem::path default_cache_dir();
std::string cache_file_name(const CurveContext& c, int max_time_index);
// The τ model with its winding and ω tables read from (or written to) the
// cache. A damaged cache file is ignored and rewritten.
std::unique_ptr<TauModel> cached_model(CurveContextPtr c, int max_weight, const std::optional<std::filesystem::path>& dir,
                      bool* hit = nullptr);

RelationDocument derive_document(CurveContextPtr c, const RunConfig& cfg, std::ostream* log = nullptr);

struct VerifyLine {
    bool pass = false;
    std::string label;
    int weight = 0;
    std::string detail;
};

struct VerifyReport {
    std::vector<VerifyLine> lines;
    // Document relations the reference does not account for, at weights the
    // reference covers completely.
    std::vector<std::string> unmatched;
    std::vector<std::string> notes;
    bool ok() const;
};

// Compares a document against the published relations of its curve. With
// `expected` set, the document must be about that curve.
VerifyReport verify_document(const RelationDocument& doc, const CurveContext* expected = nullptr);

} // namespace sigmatau
