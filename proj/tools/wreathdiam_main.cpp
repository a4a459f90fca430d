// wreathdiam: factorization, word synthesis and Cayley-graph diameter oracles
// for the wreath products C_q wr C_p.
//
// Exit codes: 0 success, 1 parameter error, 2 non-generating set,
// 3 guard exceeded (the table command marks such cells "skipped" instead).

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "wreathdiam/algebra.hpp"
#include "wreathdiam/element_grammar.hpp"
#include "wreathdiam/oracle.hpp"
#include "wreathdiam/report.hpp"
#include "wreathdiam/synthesis.hpp"

namespace {

using namespace wreathdiam;

enum ExitCode : int { kOk = 0, kParamError = 1, kNotGenerating = 2, kGuardExceeded = 3 };

struct Options {
    std::uint32_t p = 3;
    std::uint32_t q = 2;
    std::string group = "W";
    std::string gens;
    std::string target = "1";
    std::string mode = "exhaustive";
    std::size_t samples = 100;
    std::uint64_t seed = 1;
    std::string format = "json";
    std::string out;
    std::string in = "-";
    std::uint32_t p_min = 3;
    std::uint32_t p_max = 7;
    unsigned threads = 0;
};

void emit(const Options& opt, const std::string& text) {
    if (opt.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(opt.out, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file " + opt.out);
    f << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

int cmd_factor(const Options& opt) {
    const auto params = GroupParams::make(opt.p, opt.q);
    const auto factors = factor_xp_minus_1(params);
    const auto rank = rank_formula(params);
    if (opt.format == "csv") {
        std::ostringstream os;
        os << "index,degree,coefficients\n";
        const auto row = [&](std::size_t i, const FqPoly& f) {
            os << i << ',' << f.degree() << ',';
            for (std::size_t j = 0; j < f.coeffs().size(); ++j) os << (j ? " " : "") << f.coeffs()[j];
            os << '\n';
        };
        row(0, factors.trivial_factor);
        for (std::size_t i = 0; i < factors.k(); ++i) row(i + 1, factors.simple_factors[i]);
        emit(opt, os.str());
    } else {
        emit(opt, dump(factor_json(factors, rank)));
    }
    return kOk;
}

int cmd_synth(const Options& opt) {
    SynthRequest request{GroupParams::make(opt.p, opt.q), parse_group_kind(opt.group), opt.gens, opt.target};
    emit(opt, dump(synth_report(request)));
    return kOk;
}

int cmd_verify(const Options& opt) {
    Json report;
    if (opt.in == "-") {
        report = Json::parse(std::cin);
    } else {
        std::ifstream f(opt.in);
        if (!f) throw std::invalid_argument("cannot open " + opt.in);
        report = Json::parse(f);
    }
    const auto result = verify_report(report);
    Json out;
    out["verified"] = result.verified;
    out["message"] = result.message;
    emit(opt, dump(out));
    return result.verified ? kOk : kParamError;
}

int cmd_diam(const Options& opt) {
    const auto params = GroupParams::make(opt.p, opt.q);
    const CodedGroup group(params, parse_group_kind(opt.group));
    std::vector<CodedGroup::Code> codes;
    for (const auto& g : parse_element_list(opt.gens, params)) codes.push_back(group.encode(g));
    const auto result = bfs_diameter(group, codes);
    if (opt.format == "csv") {
        std::ostringstream os;
        os << "p,q,group,order,diameter\n"
           << params.p << ',' << params.q << ',' << opt.group << ',' << result.group_order << ',' << result.diameter
           << '\n';
        emit(opt, os.str());
    } else {
        emit(opt, dump(diameter_json(group, result)));
    }
    return kOk;
}

SearchMode search_mode(const Options& opt) {
    if (opt.mode == "exhaustive") return SearchMode::exhaustive_mode();
    if (opt.mode == "sampled") return SearchMode::sampled(opt.samples, opt.seed);
    throw std::invalid_argument("mode must be exhaustive or sampled");
}

int cmd_worst(const Options& opt) {
    const auto params = GroupParams::make(opt.p, opt.q);
    const CodedGroup group(params, parse_group_kind(opt.group));
    const auto report = worst_diameter(group, search_mode(opt), opt.threads);
    if (opt.format == "csv") {
        std::ostringstream os;
        os << "p,q,group,order,worst_diameter,bound,sets_examined,exhaustive,max_irredundant_size,seed\n"
           << params.p << ',' << params.q << ',' << opt.group << ',' << group.order() << ',' << report.worst_diameter
           << ',' << report.bound << ',' << report.sets_examined << ',' << (report.exhaustive ? "true" : "false")
           << ',' << report.max_irredundant_size << ',' << (report.exhaustive ? 0 : opt.seed) << '\n';
        emit(opt, os.str());
    } else {
        Json j = search_report_json(group, report);
        j["seed"] = report.exhaustive ? Json(nullptr) : Json(opt.seed);
        emit(opt, dump(j));
    }
    return kOk;
}

int cmd_table(const Options& opt) {
    const TableOptions table{search_mode(opt).exhaustive, opt.samples, opt.seed, opt.threads};
    std::vector<TableRow> rows;
    for (std::uint32_t p = std::max(3U, opt.p_min); p <= opt.p_max; ++p) {
        if (!is_prime(p) || p == opt.q) continue;
        rows.push_back(compute_table_row(GroupParams::make(p, opt.q), table));
    }
    if (opt.format == "csv") {
        std::ostringstream os;
        os << csv_header() << '\n';
        for (const auto& r : rows) os << csv_row(r) << '\n';
        emit(opt, os.str());
    } else {
        Json j;
        j["mode"] = opt.mode;
        j["samples"] = opt.samples;
        j["seed"] = opt.seed;
        j["rows"] = Json::array();
        for (const auto& r : rows) j["rows"].push_back(table_row_json(r));
        emit(opt, dump(j));
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Word synthesis and Cayley graph diameters for C_q wr C_p"};
    app.require_subcommand(1);
    Options opt;

    const auto add_params = [&](CLI::App* sub) {
        sub->add_option("--p", opt.p, "odd prime p")->required();
        sub->add_option("--q", opt.q, "prime q != p")->capture_default_str();
    };
    const auto add_output = [&](CLI::App* sub) {
        sub->add_option("--format", opt.format, "json or csv")
            ->check(CLI::IsMember({"json", "csv"}))
            ->capture_default_str();
        sub->add_option("--out", opt.out, "write output to this file");
    };
    const auto add_group = [&](CLI::App* sub) {
        sub->add_option("--group", opt.group, "W or G")->check(CLI::IsMember({"W", "G"}))->capture_default_str();
    };
    const auto add_search = [&](CLI::App* sub) {
        sub->add_option("--mode", opt.mode, "exhaustive or sampled")
            ->check(CLI::IsMember({"exhaustive", "sampled"}))
            ->capture_default_str();
        sub->add_option("--samples", opt.samples, "sampled generating sets")->capture_default_str();
        sub->add_option("--seed", opt.seed, "random seed")->capture_default_str();
        sub->add_option("--threads", opt.threads, "worker threads (0 = hardware)")->capture_default_str();
    };

    auto* factor = app.add_subcommand("factor", "factor x^p - 1 over F_q and report o_p(q), k and r(G_p)");
    add_params(factor);
    add_output(factor);

    auto* synth = app.add_subcommand("synth", "synthesize a verified word for a target");
    add_params(synth);
    add_group(synth);
    synth->add_option("--gens", opt.gens, "generators separated by ';'")->required();
    synth->add_option("--target", opt.target, "target element")->capture_default_str();
    synth->add_option("--out", opt.out, "write output to this file");

    auto* verify = app.add_subcommand("verify", "re-evaluate a synth report");
    verify->add_option("--in", opt.in, "report file, '-' for stdin")->capture_default_str();
    verify->add_option("--out", opt.out, "write output to this file");

    auto* diam = app.add_subcommand("diam", "exact Cayley graph diameter by BFS");
    add_params(diam);
    add_group(diam);
    add_output(diam);
    diam->add_option("--gens", opt.gens, "generators separated by ';'")->required();

    auto* worst = app.add_subcommand("worst", "worst diameter over irredundant generating sets");
    add_params(worst);
    add_group(worst);
    add_output(worst);
    add_search(worst);

    auto* table = app.add_subcommand("table", "per-p table of bounds, diameters and ranks");
    table->add_option("--p-min", opt.p_min, "smallest p")->capture_default_str();
    table->add_option("--p-max", opt.p_max, "largest p")->capture_default_str();
    table->add_option("--q", opt.q, "prime q")->capture_default_str();
    add_output(table);
    add_search(table);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kParamError;
    }

    try {
        if (factor->parsed()) return cmd_factor(opt);
        if (synth->parsed()) return cmd_synth(opt);
        if (verify->parsed()) return cmd_verify(opt);
        if (diam->parsed()) return cmd_diam(opt);
        if (worst->parsed()) return cmd_worst(opt);
        if (table->parsed()) return cmd_table(opt);
    } catch (const NotGeneratingError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kNotGenerating;
    } catch (const NotGeneratingSet& e) {
        std::cerr << "error: does not generate: " << e.what() << '\n';
        return kNotGenerating;
    } catch (const GuardExceeded& e) {
        std::cerr << "error: guard exceeded: " << e.what() << '\n';
        return kGuardExceeded;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kParamError;
    }
    return kParamError;
}
