#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "starcore/starcore.hpp"

namespace fs = std::filesystem;
using namespace starcore;

namespace {

enum Exit : int {
    ok = 0,
    failure = 1,
    hypothesis_failed = 2,
    violation = 3,
    no_group_inverse = 4,
    exhausted = 5,
};

int emit(const json& j, int code) {
    std::cout << j.dump(2) << '\n';
    return code;
}

int emit_error(const std::string& message, int code) {
    std::cerr << message << '\n';
    return emit(json{{"status", "error"}, {"exit", code}, {"error", message}}, code);
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
    if (flag) return *flag;
    if (const char* env = std::getenv("STARCORE_SEED"); env && *env) {
        std::size_t used = 0;
        std::uint64_t v = 0;
        try {
            v = std::stoull(env, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || env[used] != '\0' || env[0] == '-')
            throw ParseError(std::string("STARCORE_SEED is not a non-negative integer: '") + env + "'");
        return v;
    }
    return 0;
}

// ---- inv -----------------------------------------------------------------

struct InvArgs {
    std::string kind;
    std::string in;
    std::string out;
};

int run_inv(const InvArgs& args) {
    try {
        const Matrix a = read_matrix_file(args.in);
        GenInverse g = [&] {
            if (args.kind == "group") return group_inverse(a);
            if (args.kind == "drazin") return drazin_inverse(a);
            if (args.kind == "mp") return moore_penrose(a);
            if (args.kind == "one3") return one_three_inverse(a);
            return core_inverse(a);
        }();
        const std::string cert_path = args.out + ".cert.json";
        write_matrix_file(args.out, g.inverse);
        write_json_file(cert_path, to_json(g));
        return emit(json{{"status", "ok"},
                         {"kind", std::string(to_string(g.kind))},
                         {"index", g.index},
                         {"out", args.out},
                         {"certificate", cert_path}},
                    ok);
    } catch (const NoGroupInverse& e) {
        return emit_error(e.what(), no_group_inverse);
    } catch (const Error& e) {
        return emit_error(e.what(), failure);
    }
}

// ---- check ---------------------------------------------------------------

struct CheckArgs {
    std::string theorem;
    std::string a, b, c, d;
    std::string lambda;
    std::string report;
    std::string reproducer;
};

lab::Instance instance_from_files(lab::TheoremId id, const CheckArgs& args) {
    using lab::TheoremId;
    auto load = [](const std::string& path) -> std::optional<Matrix> {
        if (path.empty()) return std::nullopt;
        return read_matrix_file(path);
    };
    if (args.a.empty()) throw DimensionMismatch(std::string(lab::to_string(id)) + " requires --a");
    lab::Instance in;
    in.a = *load(args.a);
    auto b = load(args.b);
    in.c = load(args.c);
    in.d = load(args.d);
    const bool needs_b = id == TheoremId::T4_3 || id == TheoremId::C4_4;
    if (!b && needs_b) throw DimensionMismatch(std::string(lab::to_string(id)) + " requires --b");
    if (b) {
        in.b = *b;
    } else if (id != TheoremId::L4_1) {
        in.b = Matrix(in.a.rows(), in.a.cols()); // an omitted second operand is zero
    }
    if (!args.lambda.empty()) in.lambda = parse_scalar(args.lambda);
    return in;
}

int run_check(CheckArgs args) {
    try {
        lab::Instance in;
        std::optional<lab::TheoremId> id;
        if (!args.reproducer.empty()) {
            const json rep = read_json_file(args.reproducer);
            try {
                if (args.theorem.empty()) args.theorem = rep.at("theorem").get<std::string>();
                id = lab::parse_theorem_id(args.theorem);
                if (!id) throw ParseError("unknown theorem '" + args.theorem + "'");
                in = lab::instance_from_json(*id, rep.at("instances"));
            } catch (const json::exception& e) {
                throw ParseError(std::string("reproducer: ") + e.what());
            }
        } else {
            id = lab::parse_theorem_id(args.theorem);
            if (!id) throw ParseError("unknown theorem '" + args.theorem + "'");
            in = instance_from_files(*id, args);
        }
        const lab::TheoremReport report = lab::check(*id, in);
        const json j = lab::to_json(report);
        if (!args.report.empty()) write_json_file(args.report, j);
        switch (report.verdict) {
        case lab::Verdict::EquivalenceHolds: return emit(j, ok);
        case lab::Verdict::HypothesisFailed: return emit(j, hypothesis_failed);
        case lab::Verdict::Violation: return emit(j, violation);
        }
        return emit(j, failure);
    } catch (const Error& e) {
        return emit_error(e.what(), failure);
    }
}

// ---- gen -----------------------------------------------------------------

struct GenArgs {
    std::string family;
    std::size_t n = 0;
    std::optional<std::size_t> rank;
    std::optional<std::uint64_t> seed;
    std::string out;
};

int run_gen(const GenArgs& args) {
    try {
        const auto& names = gen::family_names();
        if (std::find(names.begin(), names.end(), args.family) == names.end())
            throw Error("unknown family '" + args.family + "'");
        if (args.n == 0) throw Error("--n must be at least 1");
        if (args.rank && args.family != "ep") throw Error("--rank only applies to family 'ep'");
        if (args.rank && *args.rank > args.n) throw Error("--rank exceeds --n");
        const std::uint64_t seed = resolve_seed(args.seed);

        const gen::Generated g = gen::generate(args.family, args.n, args.rank, seed);
        fs::create_directories(args.out);
        std::string prefix = args.family + "-n" + std::to_string(args.n);
        if (args.rank) prefix += "-r" + std::to_string(*args.rank);
        prefix += "-s" + std::to_string(seed);

        json files = json::array();
        for (const auto& m : g.matrices) {
            const fs::path path = fs::path(args.out) / (prefix + "-" + m.name + ".json");
            write_matrix_file(path, m.value);
            files.push_back(json{{"name", m.name}, {"path", path.string()}});
        }
        json j{{"status", "ok"}, {"family", g.family}, {"n", args.n}, {"seed", seed}, {"files", std::move(files)}};
        if (args.rank) j["rank"] = *args.rank;
        if (g.lambda) j["lambda"] = format_scalar(*g.lambda);
        return emit(j, ok);
    } catch (const GenerationExhausted& e) {
        return emit_error(e.what(), exhausted);
    } catch (const Error& e) {
        return emit_error(e.what(), failure);
    } catch (const fs::filesystem_error& e) {
        return emit_error(e.what(), failure);
    }
}

// ---- suite ---------------------------------------------------------------

struct SuiteArgs {
    std::string theorem = "all";
    std::size_t trials = 100;
    std::size_t size = 4;
    std::optional<std::uint64_t> seed;
    unsigned jobs = 1;
    std::string report;
    std::string reproducer_dir = ".";
};

int run_suite(const SuiteArgs& args) {
    try {
        lab::SuiteOptions opts;
        if (args.theorem != "all") {
            auto id = lab::parse_theorem_id(args.theorem);
            if (!id) throw ParseError("unknown theorem '" + args.theorem + "'");
            opts.theorems = {*id};
        }
        if (args.size == 0) throw Error("--size must be at least 1");
        opts.trials = args.trials;
        opts.size_bound = args.size;
        opts.seed = resolve_seed(args.seed);
        opts.jobs = args.jobs;
        opts.reproducer_dir = args.reproducer_dir;

        const lab::SuiteResult result = lab::run_suite(opts);
        json full = lab::to_json(result);
        if (!args.report.empty()) write_json_file(args.report, full);

        json summary = full;
        for (auto& t : summary["theorems"]) t.erase("results");
        if (result.any_violation()) return emit(summary, violation);
        if (result.any_generation_failure()) return emit(summary, exhausted);
        return emit(summary, ok);
    } catch (const Error& e) {
        return emit_error(e.what(), failure);
    } catch (const fs::filesystem_error& e) {
        return emit_error(e.what(), failure);
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact generalized inverses and core-inverse theorem checks over Gaussian rationals"};
    app.require_subcommand(1);

    InvArgs inv;
    auto* inv_cmd = app.add_subcommand("inv", "Compute a generalized inverse");
    inv_cmd->add_option("--kind", inv.kind, "group | drazin | mp | one3 | core")
        ->required()
        ->check(CLI::IsMember({"group", "drazin", "mp", "one3", "core"}));
    inv_cmd->add_option("--in", inv.in, "Input matrix JSON")->required();
    inv_cmd->add_option("--out", inv.out, "Output matrix JSON (certificate goes to <out>.cert.json)")->required();

    CheckArgs chk;
    auto* check_cmd = app.add_subcommand("check", "Check one theorem on the given matrices");
    check_cmd->add_option("--theorem", chk.theorem, "L2.1 .. C4.4");
    check_cmd->add_option("--a", chk.a, "First matrix (p for L2.1-L2.3, A for block results)");
    check_cmd->add_option("--b", chk.b, "Second matrix (x / a for L2.1-L2.3, B for block results)");
    check_cmd->add_option("--c", chk.c, "Block C");
    check_cmd->add_option("--d", chk.d, "Block D");
    check_cmd->add_option("--lambda", chk.lambda, "Scalar for L4.2, T4.3, C4.4");
    check_cmd->add_option("--report", chk.report, "Write the report JSON here");
    check_cmd->add_option("--reproducer", chk.reproducer, "Replay the instance stored in a reproducer file");

    GenArgs gn;
    auto* gen_cmd = app.add_subcommand("gen", "Generate an instance family");
    gen_cmd->add_option("--family", gn.family, "Family name")->required();
    gen_cmd->add_option("--n", gn.n, "Matrix size")->required();
    gen_cmd->add_option("--rank", gn.rank, "Rank (family ep)");
    gen_cmd->add_option("--seed", gn.seed, "Seed (default: $STARCORE_SEED, else 0)");
    gen_cmd->add_option("--out", gn.out, "Output directory")->required();

    SuiteArgs st;
    auto* suite_cmd = app.add_subcommand("suite", "Run randomized theorem checks");
    suite_cmd->add_option("--theorem", st.theorem, "Theorem ID or 'all'");
    suite_cmd->add_option("--trials", st.trials, "Trials per theorem")->check(CLI::PositiveNumber);
    suite_cmd->add_option("--size", st.size, "Size bound")->check(CLI::PositiveNumber);
    suite_cmd->add_option("--seed", st.seed, "Seed (default: $STARCORE_SEED, else 0)");
    suite_cmd->add_option("--jobs", st.jobs, "Worker threads")->check(CLI::PositiveNumber);
    suite_cmd->add_option("--report", st.report, "Write the full per-trial report here");
    suite_cmd->add_option("--reproducer-dir", st.reproducer_dir, "Directory for the VIOLATION reproducer");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return failure;
    }

    if (*inv_cmd) return run_inv(inv);
    if (*check_cmd) {
        if (chk.theorem.empty() && chk.reproducer.empty()) {
            std::cerr << "check: --theorem or --reproducer is required\n";
            return failure;
        }
        return run_check(chk);
    }
    if (*gen_cmd) return run_gen(gn);
    return run_suite(st);
}
