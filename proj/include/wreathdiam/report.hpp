#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "wreathdiam/algebra.hpp"
#include "wreathdiam/oracle.hpp"
#include "wreathdiam/synthesis.hpp"

// Serialization of CLI reports. JSON objects use nlohmann::json, whose object
// keys are kept sorted, so equal inputs give byte-identical output.

namespace wreathdiam {

using Json = nlohmann::json;

/// {"factors": [[coeffs low to high], ...], "k", "order", "p", "q", "rank"}.
/// The trivial factor x - 1 comes first.
Json factor_json(const CyclotomicFactors& factors, const RankReport& rank);

Json word_json(const Word& word);
/// Throws std::invalid_argument on malformed input.
Word word_from_json(const Json& j);

struct SynthRequest {
    GroupParams params;
    GroupKind group = GroupKind::W;
    std::string gens;
    std::string target;
};

/// Parses and synthesizes. Throws ParseError, NotGeneratingError.
Json synth_report(const SynthRequest& request);

struct VerifyResult {
    bool verified = false;
    std::string message;
};

/// Re-parses the generators and target recorded in a synth report and
/// re-evaluates its word.
VerifyResult verify_report(const Json& report);

enum class CellStatus { Exact, Sampled, Skipped };
std::string to_string(CellStatus s);

struct TableOptions {
    bool exhaustive = true;
    std::size_t samples = 100;
    std::uint64_t seed = 1;
    unsigned threads = 0;
};

/// One row of the diameter table. Worst diameters are exact (exhaustive mode,
/// within the enumeration guard), sampled, or skipped.
struct TableRow {
    std::uint32_t p = 0;
    std::uint32_t q = 2;
    std::uint64_t order_w = 0;
    double log2_order_w = 0.0;
    std::uint32_t bound_w = 0;
    std::uint32_t worst_w = 0;
    CellStatus worst_w_status = CellStatus::Skipped;
    std::uint32_t bound_g = 0;
    std::uint32_t worst_g = 0;
    CellStatus worst_g_status = CellStatus::Skipped;
    std::size_t synth_max_w = 0;
    std::size_t synth_sets = 0;
    std::uint32_t rank_formula = 0;
    std::optional<std::size_t> rank_search;
    bool bounds_ok = true;
    std::uint64_t seed = 0;
};

TableRow compute_table_row(const GroupParams& params, const TableOptions& options);

/// Fixed column order; see csv_header().
std::string csv_header();
std::string csv_row(const TableRow& row);
Json table_row_json(const TableRow& row);

Json search_report_json(const CodedGroup& group, const SearchReport& report);
Json diameter_json(const CodedGroup& group, const DiameterResult& result);

}  // namespace wreathdiam
