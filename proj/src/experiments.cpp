#include <sr/experiments.hpp>

#include <sr/cycles.hpp>
#include <sr/enumerate.hpp>
#include <sr/matching.hpp>
#include <sr/random.hpp>

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace sr {

auto instance_seed(std::uint64_t base, int n, int index) -> std::uint64_t
{
    return derive_seed(derive_seed(base, static_cast<std::uint64_t>(n)), static_cast<std::uint64_t>(index));
}

auto instance_stats(const Instance & inst, std::uint64_t budget) -> InstanceStats
{
    InstanceStats s;
    s.n = inst.size();
    const Partition base = find_stable_partition(inst);
    for (const auto & c : base.cycles()) {
        if (!c.is_odd())
            continue;
        ++s.odd_count;
        s.odd_agents += c.size();
        s.odd_cycle_lengths.push_back(c.size());
        if (c.size() <= odd_lengths.back())
            ++s.hist[c.size() / 2];
    }
    s.solvable = s.odd_count == 0;
    s.rp = static_cast<long long>(enumerate_reduced_partitions(inst).size());
    s.rsc = static_cast<long long>(reduced_stable_cycles(inst).size());
    s.sc = static_cast<long long>(all_stable_cycles(inst).size());
    Budget b{budget};
    try {
        for_each_partition(inst, [&](const Partition &) { ++s.p; }, &b);
    } catch (const BudgetExceeded &) {
        s.budget_exceeded = true;
        s.p = 0;
    }
    return s;
}

auto instance_stats(int n, std::uint64_t seed, std::uint64_t budget) -> InstanceStats
{
    auto s = instance_stats(random_instance(n, Seed{seed}), budget);
    s.seed = seed;
    return s;
}

auto aggregate(int n, const std::vector<InstanceStats> & stats) -> AggregateRow
{
    AggregateRow row;
    row.n = n;
    row.samples = static_cast<int>(stats.size());
    if (stats.empty())
        return row;
    long long solvable = 0, rp = 0, p = 0, rsc = 0, sc = 0, within = 0;
    long long unsolvable = 0, odd_cycles = 0, odd_agents = 0;
    std::array<long long, odd_lengths.size()> hist{};
    for (const auto & s : stats) {
        solvable += s.solvable;
        rp += s.rp;
        rsc += s.rsc;
        sc += s.sc;
        if (s.budget_exceeded) {
            ++row.budget_exceeded;
        } else {
            p += s.p;
            ++within;
        }
        if (!s.solvable) {
            ++unsolvable;
            odd_cycles += s.odd_count;
            odd_agents += s.odd_agents;
            for (std::size_t k = 0; k < hist.size(); ++k)
                hist[k] += s.hist[k];
        }
    }
    const double count = static_cast<double>(stats.size());
    row.solvable_rate = 100.0 * static_cast<double>(solvable) / count;
    row.mean_rp = static_cast<double>(rp) / count;
    row.mean_p = within ? static_cast<double>(p) / static_cast<double>(within) : 0;
    row.mean_rsc = static_cast<double>(rsc) / count;
    row.mean_sc = static_cast<double>(sc) / count;
    if (unsolvable) {
        const double u = static_cast<double>(unsolvable);
        row.mean_odd_len = static_cast<double>(odd_agents) / static_cast<double>(odd_cycles);
        row.mean_odd_count = static_cast<double>(odd_cycles) / u;
        row.mean_odd_agents = static_cast<double>(odd_agents) / u;
        for (std::size_t k = 0; k < hist.size(); ++k)
            row.hist[k] = static_cast<double>(hist[k]) / u;
    }
    return row;
}

namespace {

void check(const StatsConfig & config)
{
    if (config.samples < 1)
        throw std::invalid_argument("samples must be at least 1");
    for (int n : config.sizes)
        if (n < 1)
            throw std::invalid_argument("sizes must be positive");
}

} // namespace

auto run_stats_serial(const StatsConfig & config) -> std::vector<AggregateRow>
{
    check(config);
    std::vector<AggregateRow> rows;
    for (int n : config.sizes) {
        std::vector<InstanceStats> stats;
        for (int k = 0; k < config.samples; ++k)
            stats.push_back(instance_stats(n, instance_seed(config.seed, n, k), config.budget));
        rows.push_back(aggregate(n, stats));
    }
    return rows;
}

auto run_stats(const StatsConfig & config) -> std::vector<AggregateRow>
{
    check(config);
    const auto sizes = static_cast<std::ptrdiff_t>(config.sizes.size());
    const std::ptrdiff_t tasks = sizes * config.samples;
    std::vector<InstanceStats> stats(static_cast<std::size_t>(tasks));
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t t = 0; t < tasks; ++t) {
        int n = config.sizes[t / config.samples];
        int k = static_cast<int>(t % config.samples);
        stats[t] = instance_stats(n, instance_seed(config.seed, n, k), config.budget);
    }
    std::vector<AggregateRow> rows;
    for (std::ptrdiff_t i = 0; i < sizes; ++i) {
        auto first = stats.begin() + i * config.samples;
        rows.push_back(aggregate(config.sizes[i], std::vector<InstanceStats>(first, first + config.samples)));
    }
    return rows;
}

void write_csv_header(std::ostream & out)
{
    out << "n,samples,solvable_rate,mean_rp,mean_p,mean_rsc,mean_sc,mean_odd_len,mean_odd_count,mean_odd_agents";
    for (int len : odd_lengths)
        out << ",hist_" << len;
    out << ",budget_exceeded\n";
}

void write_csv_row(std::ostream & out, const AggregateRow & row)
{
    auto fixed = [](double v) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.6f", v);
        return std::string(buf);
    };
    out << row.n << ',' << row.samples << ',' << fixed(row.solvable_rate) << ',' << fixed(row.mean_rp) << ','
        << fixed(row.mean_p) << ',' << fixed(row.mean_rsc) << ',' << fixed(row.mean_sc) << ','
        << fixed(row.mean_odd_len) << ',' << fixed(row.mean_odd_count) << ',' << fixed(row.mean_odd_agents);
    for (double h : row.hist)
        out << ',' << fixed(h);
    out << ',' << row.budget_exceeded << '\n';
}

void write_csv(std::ostream & out, const std::vector<AggregateRow> & rows)
{
    write_csv_header(out);
    for (const auto & row : rows)
        write_csv_row(out, row);
}

} // namespace sr
