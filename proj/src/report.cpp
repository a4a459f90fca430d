#include "wreathdiam/report.hpp"

#include <cmath>
#include <iomanip>
#include <random>
#include <sstream>

#include "wreathdiam/element_grammar.hpp"
#include "wreathdiam/modstruct.hpp"

namespace wreathdiam {

Json factor_json(const CyclotomicFactors& factors, const RankReport& rank) {
    Json list = Json::array();
    const auto add = [&](const FqPoly& f) {
        Json coeffs = Json::array();
        for (auto c : f.coeffs()) coeffs.push_back(c);
        list.push_back(std::move(coeffs));
    };
    add(factors.trivial_factor);
    for (const auto& f : factors.simple_factors) add(f);
    Json out;
    out["p"] = factors.params.p;
    out["q"] = factors.params.q;
    out["factors"] = std::move(list);
    out["order"] = factors.order;
    out["k"] = factors.k();
    out["rank"] = rank.rank;
    return out;
}

Json word_json(const Word& word) {
    Json out = Json::array();
    for (const auto& l : word.letters) out.push_back(Json::array({l.generator, l.exponent}));
    return out;
}

Word word_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("word must be a JSON array");
    Word out;
    for (const auto& letter : j) {
        if (!letter.is_array() || letter.size() != 2 || !letter[0].is_number_integer() ||
            !letter[1].is_number_integer()) {
            throw std::invalid_argument("word letters must be [index, exponent] pairs");
        }
        const auto index = letter[0].get<std::int64_t>();
        const auto exponent = letter[1].get<int>();
        if (index < 0) throw std::invalid_argument("negative generator index");
        if (exponent != 1 && exponent != -1) throw std::invalid_argument("letter exponent must be +1 or -1");
        out.push(static_cast<std::size_t>(index), exponent);
    }
    return out;
}

namespace {

template <class Element>
Json synth_json_common(const SynthRequest& request, const SynthesisReport<Element>& report) {
    Json out;
    out["p"] = request.params.p;
    out["q"] = request.params.q;
    out["group"] = to_string(request.group);
    out["gens"] = request.gens;
    out["target"] = request.target;
    out["word"] = word_json(report.word);
    out["length"] = report.length;
    out["bound"] = report.bound;
    out["proven_bound"] = report.proven_bound;
    out["verified"] = report.verified;
    return out;
}

}  // namespace

Json synth_report(const SynthRequest& request) {
    request.params.validate();
    const Decomposition dec(request.params);
    const auto gens = parse_element_list(request.gens, request.params);
    const auto target = parse_element(request.target, request.params);
    if (request.group == GroupKind::W) {
        const WreathSynthesizer synth(dec, gens);
        return synth_json_common(request, synth.synthesize(target));
    }
    std::vector<QuotientElement> images;
    for (const auto& g : gens) images.push_back(quotient_map(g));
    const QuotientSynthesizer synth(dec, std::move(images));
    return synth_json_common(request, synth.synthesize(quotient_map(target)));
}

VerifyResult verify_report(const Json& report) {
    try {
        const auto params = GroupParams::make(report.at("p").get<std::uint32_t>(), report.at("q").get<std::uint32_t>());
        const auto group = parse_group_kind(report.at("group").get<std::string>());
        const auto gens = parse_element_list(report.at("gens").get<std::string>(), params);
        const auto target = parse_element(report.at("target").get<std::string>(), params);
        const Word word = word_from_json(report.at("word"));
        if (report.at("length").get<std::size_t>() != word.length()) {
            return {false, "recorded length does not match the word"};
        }
        if (word.length() > report.at("bound").get<std::size_t>()) return {false, "word exceeds the recorded bound"};
        bool ok = false;
        if (group == GroupKind::W) {
            ok = evaluate(word, std::span<const WreathElement>(gens), params) == target;
        } else {
            std::vector<QuotientElement> images;
            for (const auto& g : gens) images.push_back(quotient_map(g));
            ok = evaluate(word, std::span<const QuotientElement>(images), params) == quotient_map(target);
        }
        return {ok, ok ? "word evaluates to the target" : "word does not evaluate to the target"};
    } catch (const std::exception& e) {
        return {false, e.what()};
    }
}

std::string to_string(CellStatus s) {
    switch (s) {
        case CellStatus::Exact: return "exact";
        case CellStatus::Sampled: return "sampled";
        case CellStatus::Skipped: return "skipped";
    }
    return "skipped";
}

namespace {

void worst_cell(const GroupParams& params, GroupKind kind, const TableOptions& options, std::uint32_t& value,
                CellStatus& status) {
    status = CellStatus::Skipped;
    try {
        const CodedGroup group(params, kind);
        if (options.exhaustive) {
            if (group.order() > kMaxExhaustiveOrder) return;
            value = worst_diameter(group, SearchMode::exhaustive_mode(), options.threads).worst_diameter;
            status = CellStatus::Exact;
        } else {
            value = worst_diameter(group, SearchMode::sampled(options.samples, options.seed + params.p), options.threads)
                        .worst_diameter;
            status = CellStatus::Sampled;
        }
    } catch (const GuardExceeded&) {
        status = CellStatus::Skipped;
    }
}

WreathElement random_w(const GroupParams& params, std::mt19937_64& rng) {
    std::uniform_int_distribution<Residue> coord(0, params.q - 1);
    std::uniform_int_distribution<std::uint32_t> shift(0, params.p - 1);
    std::vector<Residue> v(params.p);
    for (auto& a : v) a = coord(rng);
    return {params, std::move(v), shift(rng)};
}

}  // namespace

TableRow compute_table_row(const GroupParams& params, const TableOptions& options) {
    TableRow row;
    row.p = params.p;
    row.q = params.q;
    row.seed = options.seed;
    row.order_w = static_cast<std::uint64_t>(params.p) * static_cast<std::uint64_t>(std::pow(params.q, params.p));
    row.log2_order_w = std::log2(static_cast<double>(params.p)) + params.p * std::log2(static_cast<double>(params.q));
    row.bound_w = static_cast<std::uint32_t>(wreath_bound(params));
    row.bound_g = static_cast<std::uint32_t>(quotient_bound(params));
    row.rank_formula = rank_formula(params).rank;

    worst_cell(params, GroupKind::W, options, row.worst_w, row.worst_w_status);
    worst_cell(params, GroupKind::G, options, row.worst_g, row.worst_g_status);

    try {
        const CodedGroup g(params, GroupKind::G);
        if (g.order() <= kMaxExhaustiveOrder) row.rank_search = max_irredundant_size(g);
    } catch (const GuardExceeded&) {
    }

    // Synthesis over seeded random generating sets of size 2 or 3.
    const Decomposition dec(params);
    std::mt19937_64 rng(options.seed * 1000003ULL + params.p);
    constexpr std::size_t kTargetsPerSet = 100;
    for (std::size_t s = 0; s < options.samples; ++s) {
        std::vector<WreathElement> gens;
        do {
            gens.clear();
            const std::size_t size = 2 + (rng() % 2);
            for (std::size_t i = 0; i < size; ++i) gens.push_back(random_w(params, rng));
        } while (!generates_W(gens, dec).generates);
        const WreathSynthesizer synth(dec, gens);
        for (std::size_t t = 0; t < kTargetsPerSet; ++t) {
            row.synth_max_w = std::max(row.synth_max_w, synth.synthesize(random_w(params, rng)).length);
        }
        ++row.synth_sets;
    }

    row.bounds_ok = row.synth_max_w <= row.bound_w;
    if (row.worst_w_status != CellStatus::Skipped) row.bounds_ok = row.bounds_ok && row.worst_w <= row.bound_w;
    if (row.worst_g_status != CellStatus::Skipped) row.bounds_ok = row.bounds_ok && row.worst_g <= row.bound_g;
    return row;
}

std::string csv_header() {
    return "p,q,order_w,log2_order_w,bound_w,worst_w,worst_w_status,bound_g,worst_g,worst_g_status,"
           "synth_max_w,synth_sets,rank_formula,rank_search,bounds_ok,seed";
}

std::string csv_row(const TableRow& row) {
    std::ostringstream os;
    const auto cell = [](CellStatus s, std::uint32_t v) { return s == CellStatus::Skipped ? std::string() : std::to_string(v); };
    os << row.p << ',' << row.q << ',' << row.order_w << ',' << std::fixed << std::setprecision(3) << row.log2_order_w
       << ',' << row.bound_w << ',' << cell(row.worst_w_status, row.worst_w) << ',' << to_string(row.worst_w_status)
       << ',' << row.bound_g << ',' << cell(row.worst_g_status, row.worst_g) << ',' << to_string(row.worst_g_status)
       << ',' << row.synth_max_w << ',' << row.synth_sets << ',' << row.rank_formula << ','
       << (row.rank_search ? std::to_string(*row.rank_search) : std::string()) << ','
       << (row.bounds_ok ? "true" : "false") << ',' << row.seed;
    return os.str();
}

Json table_row_json(const TableRow& row) {
    Json out;
    out["p"] = row.p;
    out["q"] = row.q;
    out["order_w"] = row.order_w;
    out["log2_order_w"] = std::round(row.log2_order_w * 1000.0) / 1000.0;
    out["bound_w"] = row.bound_w;
    out["worst_w"] = row.worst_w_status == CellStatus::Skipped ? Json(nullptr) : Json(row.worst_w);
    out["worst_w_status"] = to_string(row.worst_w_status);
    out["bound_g"] = row.bound_g;
    out["worst_g"] = row.worst_g_status == CellStatus::Skipped ? Json(nullptr) : Json(row.worst_g);
    out["worst_g_status"] = to_string(row.worst_g_status);
    out["synth_max_w"] = row.synth_max_w;
    out["synth_sets"] = row.synth_sets;
    out["rank_formula"] = row.rank_formula;
    out["rank_search"] = row.rank_search ? Json(*row.rank_search) : Json(nullptr);
    out["bounds_ok"] = row.bounds_ok;
    out["seed"] = row.seed;
    return out;
}

Json search_report_json(const CodedGroup& group, const SearchReport& report) {
    Json witness = Json::array();
    for (auto c : report.witness) witness.push_back(group.describe(c));
    Json out;
    out["p"] = group.params().p;
    out["q"] = group.params().q;
    out["group"] = to_string(group.kind());
    out["order"] = group.order();
    out["worst_diameter"] = report.worst_diameter;
    out["witness"] = std::move(witness);
    out["sets_examined"] = report.sets_examined;
    out["exhaustive"] = report.exhaustive;
    out["max_irredundant_size"] = report.max_irredundant_size;
    out["bound"] = report.bound;
    out["within_bound"] = report.within_bound;
    return out;
}

Json diameter_json(const CodedGroup& group, const DiameterResult& result) {
    Json gens = Json::array();
    for (auto c : result.generators) gens.push_back(group.describe(c));
    Json out;
    out["p"] = group.params().p;
    out["q"] = group.params().q;
    out["group"] = to_string(group.kind());
    out["order"] = result.group_order;
    out["diameter"] = result.diameter;
    out["eccentric"] = group.describe(result.eccentric);
    out["generators"] = std::move(gens);
    return out;
}

}  // namespace wreathdiam
