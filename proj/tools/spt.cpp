// spt: command-line front end for the stable partition toolkit.
#include <sr/cycles.hpp>
#include <sr/enumerate.hpp>
#include <sr/experiments.hpp>
#include <sr/instance.hpp>
#include <sr/matching.hpp>
#include <sr/optimal.hpp>
#include <sr/partition.hpp>
#include <sr/profile.hpp>
#include <sr/transforms.hpp>

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

namespace {

constexpr int exit_ok = 0;
constexpr int exit_no = 1;
constexpr int exit_input = 2;

// Input problems (bad files, bad arguments) map to exit code 2.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

auto load(const std::string & path) -> sr::Instance
{
    try {
        return sr::read_instance_file(path);
    } catch (const std::exception & e) {
        throw InputError(path + ": " + e.what());
    }
}

void print_profile(const sr::Instance & inst, const sr::Partition & p)
{
    auto pr = sr::profile(inst, p);
    std::cout << "successor: " << sr::format_vector(pr.successor) << '\n'
              << "predecessor: " << sr::format_vector(pr.predecessor) << '\n'
              << "combined: " << sr::format_vector(pr.combined) << '\n'
              << "regret: " << pr.regret << '\n'
              << "cost: " << pr.cost_string() << '\n';
}

void print_cycles(const std::vector<sr::Cycle> & cycles)
{
    for (const auto & c : cycles)
        std::cout << c.to_string() << '\n';
}

auto seed_from_env(std::uint64_t fallback) -> std::uint64_t
{
    if (const char * env = std::getenv("SPT_SEED")) {
        try {
            std::size_t used = 0;
            auto v = std::stoull(env, &used);
            if (used == std::string(env).size())
                return v;
        } catch (const std::exception &) {
        }
        throw InputError("SPT_SEED is not an unsigned integer");
    }
    return fallback;
}

} // namespace

int main(int argc, char ** argv)
{
    CLI::App app{"Stable partitions of Stable Roommates instances"};
    app.require_subcommand(1);

    std::string file;
    int n = 0;
    std::uint64_t seed = 0;
    bool gadget = false;
    auto * gen = app.add_subcommand("gen", "Print a random complete instance");
    gen->add_option("-n", n, "Number of agents")->required()->check(CLI::Range(2, 100000));
    gen->add_option("--seed", seed, "Seed (SPT_SEED overrides)");
    gen->add_flag("--gadget", gadget, "Attach the two forced 3-cycles");

    bool as_matching = false;
    auto * solve = app.add_subcommand("solve", "One stable partition and its profile");
    solve->add_option("file", file)->required();
    solve->add_flag("--matching", as_matching, "Print a stable matching instead; exit 1 if none");

    std::string partition_text;
    auto * verify = app.add_subcommand("verify", "Check a partition such as \"(1 2 3)(4 5 6)\"");
    verify->add_option("file", file)->required();
    verify->add_option("--partition", partition_text)->required();

    bool reduced = false, naive = false, matchings = false;
    std::uint64_t budget = 0;
    auto * enumerate = app.add_subcommand("enumerate", "List stable partitions, one per line");
    enumerate->add_option("file", file)->required();
    auto * reduced_flag = enumerate->add_flag("--reduced", reduced, "Reduced partitions only");
    auto * naive_flag = enumerate->add_flag("--naive", naive, "Reduced partitions plus pairwise merges");
    auto * matchings_flag = enumerate->add_flag("--matchings", matchings, "Stable matchings instead");
    reduced_flag->excludes(naive_flag)->excludes(matchings_flag);
    naive_flag->excludes(matchings_flag);
    enumerate->add_option("--budget", budget, "Recursion node cap, 0 = none");

    bool fixed = false, reduced_cycles = false, all_cycles = false;
    auto * cycles = app.add_subcommand("cycles", "List stable cycles (default --all)");
    cycles->add_option("file", file)->required();
    auto * f1 = cycles->add_flag("--fixed", fixed, "Cycles in every stable partition");
    auto * f2 = cycles->add_flag("--reduced", reduced_cycles, "Odd cycles and stable transpositions");
    auto * f3 = cycles->add_flag("--all", all_cycles, "Every stable cycle");
    f1->excludes(f2)->excludes(f3);
    f2->excludes(f3);

    std::string criterion;
    auto * optimal = app.add_subcommand("optimal", "Optimal stable partition (exact; no approximation modes)");
    optimal->add_option("file", file)->required();
    optimal->add_option("--criterion", criterion,
                    "min-regret | first-choice | rank-maximal | regret-min | generous | egalitarian")
            ->required();
    optimal->add_option("--budget", budget, "Recursion node cap, 0 = none");

    std::string query;
    auto * decide = app.add_subcommand("decide", "Threshold query; exit 0 with a witness on yes, 1 on no");
    decide->add_option("file", file)->required();
    decide->add_option("--query", query, "fc:K | rank:v1,..,vn | rm:K | gen:v1,..,vn | egal:K")->required();
    decide->add_option("--budget", budget, "Recursion node cap, 0 = none");

    std::vector<int> sizes;
    int samples = 1;
    std::string out_path;
    bool serial = false;
    std::uint64_t stats_budget = 1'000'000;
    auto * stats = app.add_subcommand("stats", "Aggregate statistics over seeded random instances (CSV)");
    stats->add_option("--sizes", sizes, "Comma separated sizes")->required()->delimiter(',');
    stats->add_option("--samples", samples)->required()->check(CLI::PositiveNumber);
    stats->add_option("--seed", seed, "Base seed (SPT_SEED overrides)");
    stats->add_option("--out", out_path, "CSV path; stdout when absent");
    stats->add_option("--budget", stats_budget, "Per-instance recursion node cap, 0 = none");
    stats->add_flag("--serial", serial, "Single-threaded reference run");

    std::string kind;
    std::vector<int> pair;
    auto * transform = app.add_subcommand("transform", "Print a derived instance");
    transform->add_option("file", file)->required();
    transform->add_option("--kind", kind, "IE | IT | IP | IS")->required()->check(CLI::IsMember({"IE", "IT", "IP", "IS"}));
    transform->add_option("--pair", pair, "a1,a2 for IS")->delimiter(',')->expected(2);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError & e) {
        int code = app.exit(e);
        return code == 0 ? exit_ok : exit_input;
    }

    try {
        if (*gen) {
            auto inst = sr::random_instance(n, sr::Seed{seed_from_env(seed)});
            sr::write_instance(std::cout, gadget ? sr::attach_gadget(inst) : inst);
            return exit_ok;
        }
        if (*solve) {
            auto inst = load(file);
            if (as_matching) {
                auto m = sr::find_stable_matching(inst);
                if (!m) {
                    std::cout << "no stable matching\n";
                    return exit_no;
                }
                std::cout << m->to_string() << '\n';
                print_profile(inst, sr::matching_to_partition(inst, *m));
                return exit_ok;
            }
            auto p = sr::find_stable_partition(inst);
            std::cout << p.to_string() << '\n';
            print_profile(inst, p);
            return exit_ok;
        }
        if (*verify) {
            auto inst = load(file);
            sr::Partition p;
            try {
                p = sr::parse_partition(partition_text);
            } catch (const std::exception & e) {
                throw InputError(std::string("partition: ") + e.what());
            }
            if (auto v = sr::verify_partition(inst, p)) {
                std::cout << "unstable: " << v->to_string() << '\n';
                return exit_no;
            }
            std::cout << "stable\n";
            return exit_ok;
        }
        if (*enumerate) {
            auto inst = load(file);
            if (matchings) {
                for (const auto & m : sr::all_stable_matchings(inst))
                    std::cout << m.to_string() << '\n';
                return exit_ok;
            }
            std::vector<sr::Partition> out;
            if (reduced) {
                out = sr::enumerate_reduced_partitions(inst);
            } else if (naive) {
                out = sr::enumerate_all_partitions_naive(inst);
            } else {
                sr::Budget b{budget};
                out = sr::enumerate_all_partitions(inst, &b);
            }
            for (const auto & p : out)
                std::cout << p.to_string() << '\n';
            return exit_ok;
        }
        if (*cycles) {
            auto inst = load(file);
            if (fixed)
                print_cycles(sr::fixed_cycles(inst));
            else if (reduced_cycles)
                print_cycles(sr::reduced_stable_cycles(inst));
            else
                print_cycles(sr::all_stable_cycles(inst));
            return exit_ok;
        }
        if (*optimal) {
            auto inst = load(file);
            sr::Criterion c;
            try {
                c = sr::parse_criterion(criterion);
            } catch (const std::invalid_argument & e) {
                throw InputError(e.what());
            }
            sr::Budget b{budget};
            auto opt = sr::optimal_partition(inst, c, &b);
            std::cout << opt.partition.to_string() << '\n';
            print_profile(inst, opt.partition);
            return exit_ok;
        }
        if (*decide) {
            auto inst = load(file);
            sr::ThresholdQuery q;
            try {
                q = sr::parse_query(query);
                if ((q.kind == sr::ThresholdQuery::Kind::Rank || q.kind == sr::ThresholdQuery::Kind::Gen)
                        && static_cast<int>(q.sigma.size()) != inst.size())
                    throw std::invalid_argument("profile threshold needs " + std::to_string(inst.size()) + " entries");
            } catch (const std::invalid_argument & e) {
                throw InputError(e.what());
            }
            sr::Budget b{budget};
            if (auto w = sr::decide(inst, q, &b)) {
                std::cout << "yes\n" << w->to_string() << '\n';
                print_profile(inst, *w);
                return exit_ok;
            }
            std::cout << "no\n";
            return exit_no;
        }
        if (*stats) {
            sr::StatsConfig config{sizes, samples, seed_from_env(seed), stats_budget};
            for (int s : sizes)
                if (s < 1)
                    throw InputError("sizes must be positive");
            auto rows = serial ? sr::run_stats_serial(config) : sr::run_stats(config);
            if (out_path.empty()) {
                sr::write_csv(std::cout, rows);
            } else {
                std::ofstream out(out_path);
                if (!out)
                    throw InputError("cannot write " + out_path);
                sr::write_csv(out, rows);
            }
            return exit_ok;
        }
        if (*transform) {
            auto inst = load(file);
            if (kind == "IS") {
                if (pair.size() != 2)
                    throw InputError("IS needs --pair a1,a2");
                if (pair[0] == pair[1] || !inst.acceptable(pair[0], pair[1]))
                    throw InputError("IS needs two distinct mutually acceptable agents");
                sr::write_instance(std::cout, sr::construct_IS(inst, pair[0], pair[1]));
                return exit_ok;
            }
            auto r = kind == "IE" ? sr::construct_IE(inst) : kind == "IT" ? sr::construct_IT(inst) : sr::construct_IP(inst);
            std::cout << sr::format_transform(r);
            return exit_ok;
        }
    } catch (const InputError & e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_input;
    } catch (const sr::BudgetExceeded & e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_no;
    } catch (const std::invalid_argument & e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_input;
    }
    return exit_input;
}
