#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "lrc/constructions.hpp"
#include "lrc/descriptor.hpp"
#include "lrc/repair.hpp"

namespace {

using namespace lrc;

DistanceBudget budget_from_env() {
    DistanceBudget budget;
    if (const char* text = std::getenv("LRC_FORGE_BUDGET")) {
        char* end = nullptr;
        unsigned long long cap = std::strtoull(text, &end, 10);
        if (end == text || *end != '\0' || cap == 0)
            raise(ErrorKind::InvalidParams, "LRC_FORGE_BUDGET must be a positive integer");
        budget.rank_tests = cap;
    }
    return budget;
}

std::string read_input(const std::string& path) {
    std::ostringstream buffer;
    if (path == "-") {
        buffer << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in) raise(ErrorKind::InvalidParams, "cannot open " + path);
        buffer << in.rdbuf();
    }
    return buffer.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) raise(ErrorKind::InvalidParams, "cannot write " + path);
    out << text;
}

ConstructionKind kind_from_flags(const std::string& name, uint32_t d) {
    std::optional<KindTag> tag = kind_from_name(name);
    if (!tag) raise(ErrorKind::InvalidParams, "unknown kind '" + name + "'");
    if (*tag == KindTag::Remark3 && d == 0)
        raise(ErrorKind::InvalidParams, "remark3 needs --d");
    return {*tag, *tag == KindTag::Remark3 ? d : 0};
}

std::pair<uint32_t, uint32_t> parse_range(const std::string& text, uint32_t lo, uint32_t hi) {
    if (text.empty()) return {lo, hi};
    size_t colon = text.find(':');
    try {
        if (colon == std::string::npos) {
            uint32_t v = uint32_t(std::stoul(text));
            return {v, v};
        }
        return {uint32_t(std::stoul(text.substr(0, colon))),
                uint32_t(std::stoul(text.substr(colon + 1)))};
    } catch (const std::exception&) {
        raise(ErrorKind::InvalidParams, "range '" + text + "' is not N or LO:HI");
    }
}

std::string witness_text(const DefiningSetWitness& witness) {
    if (!witness.holds) return "no";
    std::string out = "yes (ells=";
    for (size_t i = 0; i < witness.ells.size(); ++i)
        out += (i ? "," : "") + std::to_string(witness.ells[i]);
    return out + " b=" + std::to_string(witness.b) + ")";
}

void print_descriptor_table(const CodeDescriptor& d) {
    auto line = [](const char* name, const std::string& value) {
        std::printf("%-18s %s\n", name, value.c_str());
    };
    line("q", std::to_string(d.q));
    line("n", std::to_string(d.n));
    line("r", std::to_string(d.r));
    line("delta", std::to_string(d.delta));
    std::string kind = kind_name(d.construction);
    if (d.target_d) kind += " (d=" + std::to_string(*d.target_d) + ")";
    line("construction", kind);
    line("k", std::to_string(d.k));
    line("d_exact", std::to_string(d.d_exact));
    line("d_bch_lower", std::to_string(d.d_bch_lower));
    line("singleton_bound", std::to_string(d.singleton));
    line("optimal", d.optimal ? "yes" : "no");
    line("defining_set", witness_text(d.defining_set));
    line("direct_locality", d.direct_locality ? "yes" : "no");
    line("repair_groups", std::to_string(d.groups.size()) + " x " +
                              std::to_string(d.groups.empty() ? 0 : d.groups[0].size()));
}

struct ConstructArgs {
    uint64_t q = 0;
    uint32_t n = 0, r = 0, delta = 0, d = 0;
    std::string kind;
    std::string out;
};

int run_construct(const ConstructArgs& args) {
    ConstructionKind kind = kind_from_flags(args.kind, args.d);
    LrcParams params{args.q, args.n, args.r, args.delta};
    LrcReport report = verify(params, kind, budget_from_env());
    write_output(args.out, to_json_text(describe(report)));
    return 0;
}

struct VerifyArgs {
    std::string in;
    uint64_t q = 0;
    uint32_t n = 0, r = 0, delta = 0, d = 0;
    std::string kind;
    bool json = false;
};

int run_verify(const VerifyArgs& args) {
    DistanceBudget budget = budget_from_env();
    if (args.in.empty()) {
        if (args.kind.empty())
            raise(ErrorKind::InvalidParams, "verify needs --in or the full construction flags");
        ConstructionKind kind = kind_from_flags(args.kind, args.d);
        LrcParams params{args.q, args.n, args.r, args.delta};
        CodeDescriptor descriptor = describe(verify(params, kind, budget));
        if (args.json)
            std::cout << to_json_text(descriptor);
        else
            print_descriptor_table(descriptor);
        return 0;
    }

    CodeDescriptor descriptor = descriptor_from_json_text(read_input(args.in));
    std::vector<std::string> mismatches = audit_descriptor(descriptor, budget);
    if (!mismatches.empty()) {
        std::cerr << "descriptor disagrees with recomputation:\n";
        for (const std::string& field : mismatches) std::cerr << "  " << field << "\n";
        return 2;
    }
    if (args.json)
        std::cout << to_json_text(descriptor);
    else {
        print_descriptor_table(descriptor);
        std::printf("%-18s %s\n", "audit", "all recorded fields match recomputation");
    }
    return 0;
}

struct SearchArgs {
    uint64_t q = 0;
    uint32_t n_max = 0;
    std::string r_range, delta_range;
    bool json = false;
};

int run_search(const SearchArgs& args) {
    auto [r_min, r_max] = parse_range(args.r_range, 1, args.n_max);
    auto [d_min, d_max] = parse_range(args.delta_range, 2, args.n_max);
    std::vector<SearchRow> rows = search_params(args.q, args.n_max, r_min, r_max, d_min, d_max);

    if (args.json) {
        nlohmann::ordered_json out = nlohmann::ordered_json::array();
        for (const SearchRow& row : rows)
            out.push_back({{"n", row.n},
                           {"r", row.r},
                           {"delta", row.delta},
                           {"kind", kind_name(row.kind)},
                           {"d_min", row.d_min},
                           {"d_max", row.d_max},
                           {"rho", row.rho}});
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    std::printf("%6s %4s %6s %-8s %-6s %6s\n", "n", "r", "delta", "kind", "d", "rho");
    for (const SearchRow& row : rows) {
        std::string d = std::to_string(row.d_min);
        if (row.d_max != row.d_min) d += ".." + std::to_string(row.d_max);
        std::printf("%6u %4u %6u %-8s %-6s %6u\n", row.n, row.r, row.delta, kind_name(row.kind),
                    d.c_str(), row.rho);
    }
    std::printf("%zu applicable construction(s)\n", rows.size());
    return 0;
}

struct SimulateArgs {
    std::string in;
    std::string erasures;
    uint64_t trials = 100;
    uint64_t seed = 0;
    bool allow_failures = false;
};

SimulationSpec parse_erasures(const std::string& text, const CodeDescriptor& descriptor,
                              bool allow_failures) {
    SimulationSpec spec;
    spec.allow_failures = allow_failures;
    std::string body = text;
    if (body.rfind("local:", 0) == 0) {
        spec.mode = ErasureMode::LocalRandomGroup;
        body = body.substr(6);
    } else if (body.rfind("global:", 0) == 0) {
        spec.mode = ErasureMode::GlobalRandom;
        body = body.substr(7);
    } else {
        if (body.rfind("explicit:", 0) == 0) body = body.substr(9);
        spec.mode = ErasureMode::Explicit;
    }
    try {
        if (spec.mode == ErasureMode::Explicit) {
            std::istringstream stream(body);
            std::string item;
            while (std::getline(stream, item, ','))
                if (!item.empty()) spec.positions.push_back(uint32_t(std::stoul(item)));
        } else {
            spec.count = uint32_t(std::stoul(body));
        }
    } catch (const std::exception&) {
        raise(ErrorKind::InvalidParams,
              "erasure spec must be local:W, global:W or a comma-separated position list");
    }

    // Capability gate: a spec that must fail every trial is refused up
    // front unless failures are explicitly allowed.
    if (!allow_failures) {
        uint32_t local_limit = descriptor.delta - 1;
        uint32_t global_limit = descriptor.d_exact - 1;
        if (spec.mode == ErasureMode::LocalRandomGroup && spec.count > local_limit)
            raise(ErrorKind::InfeasibleBudget,
                  "local:" + std::to_string(spec.count) + " exceeds the per-group tolerance " +
                      std::to_string(local_limit) + "; pass --allow-failures to run anyway");
        if (spec.mode == ErasureMode::GlobalRandom && spec.count > global_limit)
            raise(ErrorKind::InfeasibleBudget,
                  "global:" + std::to_string(spec.count) + " exceeds the guarantee of " +
                      std::to_string(global_limit) + " erasures; pass --allow-failures to run anyway");
        if (spec.mode == ErasureMode::Explicit) {
            std::vector<uint32_t> per_group(descriptor.groups.size(), 0);
            bool local = !descriptor.groups.empty();
            for (uint32_t pos : spec.positions)
                if (local && descriptor.groups.size())
                    ++per_group[pos % descriptor.groups.size()];
            for (uint32_t count : per_group)
                if (count > local_limit) local = false;
            if (!local && spec.positions.size() > global_limit)
                raise(ErrorKind::InfeasibleBudget,
                      "the explicit pattern exceeds both repair guarantees; pass --allow-failures "
                      "to run anyway");
        }
    }
    return spec;
}

int run_simulate(const SimulateArgs& args) {
    CodeDescriptor descriptor = descriptor_from_json_text(read_input(args.in));
    SimulationSpec spec = parse_erasures(args.erasures, descriptor, args.allow_failures);
    spec.trials = args.trials;
    spec.seed = args.seed;

    CyclicCode code = code_from_descriptor(descriptor);
    SimulationStats stats = run_simulation(code, descriptor.r, descriptor.delta, spec);

    nlohmann::ordered_json out;
    out["erasures"] = args.erasures;
    out["trials"] = stats.trials;
    out["seed"] = args.seed;
    out["successes"] = stats.successes;
    out["failures"] = stats.failures;
    out["local_path"] = stats.local_path;
    out["global_path"] = stats.global_path;
    out["symbols_repaired"] = stats.symbols_repaired;
    out["contact_min"] = stats.contact_min;
    out["contact_max"] = stats.contact_max;
    out["contact_avg"] = stats.symbols_repaired
                             ? double(stats.contact_total) / double(stats.symbols_repaired)
                             : 0.0;
    if (stats.failures) out["first_failure"] = stats.first_failure;
    std::cout << out.dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"construct, verify, search and exercise optimal cyclic (r,delta) locally "
                 "repairable codes"};
    app.require_subcommand(1);

    ConstructArgs construct_args;
    CLI::App* cmd_construct = app.add_subcommand("construct", "build a code and print its descriptor");
    cmd_construct->add_option("--q", construct_args.q, "field size (prime power)")->required();
    cmd_construct->add_option("--n", construct_args.n, "code length")->required();
    cmd_construct->add_option("--r", construct_args.r, "locality")->required();
    cmd_construct->add_option("--delta", construct_args.delta, "local distance")->required();
    cmd_construct->add_option("--kind", construct_args.kind, "t1|t2|t3|remark3|t4")->required();
    cmd_construct->add_option("--d", construct_args.d, "target distance (remark3)");
    cmd_construct->add_option("--out", construct_args.out, "write the descriptor here instead of stdout");

    VerifyArgs verify_args;
    CLI::App* cmd_verify = app.add_subcommand("verify", "recompute and check a descriptor");
    cmd_verify->add_option("--in", verify_args.in, "descriptor file, - for stdin");
    cmd_verify->add_option("--q", verify_args.q, "field size (inline construction)");
    cmd_verify->add_option("--n", verify_args.n, "code length");
    cmd_verify->add_option("--r", verify_args.r, "locality");
    cmd_verify->add_option("--delta", verify_args.delta, "local distance");
    cmd_verify->add_option("--kind", verify_args.kind, "t1|t2|t3|remark3|t4");
    cmd_verify->add_option("--d", verify_args.d, "target distance (remark3)");
    cmd_verify->add_flag("--json", verify_args.json, "machine output");

    SearchArgs search_args;
    CLI::App* cmd_search = app.add_subcommand("search", "list applicable constructions");
    cmd_search->add_option("--q", search_args.q, "field size")->required();
    cmd_search->add_option("--n-max", search_args.n_max, "largest length to consider")->required();
    cmd_search->add_option("--r-range", search_args.r_range, "locality range, N or LO:HI");
    cmd_search->add_option("--delta-range", search_args.delta_range, "local distance range, N or LO:HI");
    cmd_search->add_flag("--json", search_args.json, "machine output");

    SimulateArgs simulate_args;
    CLI::App* cmd_simulate = app.add_subcommand("simulate", "run seeded erasure-repair trials");
    cmd_simulate->add_option("--in", simulate_args.in, "descriptor file, - for stdin")->required();
    cmd_simulate->add_option("--erasures", simulate_args.erasures,
                             "local:W, global:W or a comma-separated position list")->required();
    cmd_simulate->add_option("--trials", simulate_args.trials, "trial count");
    cmd_simulate->add_option("--seed", simulate_args.seed, "PRNG seed");
    cmd_simulate->add_flag("--allow-failures", simulate_args.allow_failures,
                           "count repair failures instead of refusing the spec");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cmd_construct->parsed()) return run_construct(construct_args);
        if (cmd_verify->parsed()) return run_verify(verify_args);
        if (cmd_search->parsed()) return run_search(search_args);
        if (cmd_simulate->parsed()) return run_simulate(simulate_args);
    } catch (const lrc::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return lrc::error_exit_code(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
