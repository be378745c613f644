#include "vlcbeacon/bench.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "vlcbeacon/datapath.hpp"
#include "vlcbeacon/errors.hpp"
#include "vlcbeacon/format.hpp"

namespace vlcb {
namespace {

void write_manifest(const Scenario& s, const GainTable& table, const std::filesystem::path& file) {
    std::ofstream out(file);
    if (!out) throw Error("cannot write " + file.string());
    out << "front_ends = " << s.network.front_ends << '\n';
    out << "ml = " << s.network.ml << '\n';
    out << "cl = " << s.network.cl << '\n';
    out << "rll = " << to_string(s.network.scheme) << '\n';
    out << "sys_hz = " << s.network.clock.sys_hz() << '\n';
    out << "sr_hz = " << s.network.clock.sr_hz() << '\n';
    out << "latency_cycles = " << s.network.latency_cycles << '\n';
    out << "fifo_depth = " << s.network.fifo_depth << '\n';
    out << "mode = " << to_string(s.cost.mode) << '\n';
    out << "cost_per_xor = " << format_double(s.cost.cost_per_xor) << '\n';
    out << "cost_per_table_lookup = " << format_double(s.cost.cost_per_table_lookup) << '\n';
    out << "cost_per_bit_move = " << format_double(s.cost.cost_per_bit_move) << '\n';
    out << "calibration_scale = " << format_double(s.cost.calibration_scale) << '\n';
    out << "warmup = " << s.cost.warmup << '\n';
    out << "repetitions = " << s.cost.repetitions << '\n';
    out << "seed = " << s.seed << '\n';
    out << "inter_arrival_gap = " << s.inter_arrival_gap << '\n';
    out << "k_values = ";
    for (std::size_t i = 0; i < s.k_values.size(); ++i)
        out << (i ? "," : "") << s.k_values[i];
    out << '\n';
    out << "baseline_delay_unit = " << table.baseline_unit << '\n';
    out << "centralized_delay_unit = seconds\n";
    out << "reference_gains = published hardware measurements at ml 128, informational only\n";
    for (const auto& ref : kReferenceGains)
        out << "reference k=" << ref.k << " arduino=" << format_double(ref.arduino)
            << " raspberry=" << format_double(ref.raspberry) << '\n';
}

}  // namespace

void Scenario::validate() const {
    network.validate();
    cost.validate();
    if (k_values.empty()) throw InvalidParameters("scenario needs at least one k");
    if (!std::is_sorted(k_values.begin(), k_values.end()))
        throw InvalidParameters("k values must be sorted ascending");
    for (uint32_t k : k_values) {
        if (k == 0) throw InvalidParameters("k must be positive");
        if (k > network.front_ends)
            throw InvalidParameters("k exceeds the front-end count");
    }
}

GainTable run_scenario(const Scenario& scenario, const std::filesystem::path& out_dir) {
    scenario.validate();
    std::filesystem::create_directories(out_dir);

    const PolarCodeConfig polar = scenario.network.make_polar_config();
    const RllScheme scheme = scenario.network.scheme;
    const uint64_t latency = scenario.network.latency_cycles;
    const double sys_hz = static_cast<double>(scenario.network.clock.sys_hz());

    GainTable table;
    table.baseline_unit = scenario.cost.mode == CostMode::Measured ? "seconds" : "units";
    DelayReport delays;
    delays.ml = scenario.network.ml;
    delays.scheme = scheme;
    delays.mode = scenario.cost.mode;
    delays.model_label =
        scenario.cost.mode == CostMode::Measured ? "measured_wall_clock" : "modeled_op_counts";

    std::mt19937_64 rng(scenario.seed);
    for (uint32_t k : scenario.k_values) {
        std::vector<BitBlock> messages;
        messages.reserve(k);
        for (uint32_t i = 0; i < k; ++i)
            messages.push_back(random_message(rng, scenario.network.ml));

        const double baseline = run_sequential(messages, polar, scheme, scenario.cost);

        Simulator sim(scenario.network);
        for (uint32_t i = 0; i < k; ++i)
            sim.enqueue_request(UpdateRequest::make(i, messages[i]),
                                static_cast<uint64_t>(i) * scenario.inter_arrival_gap);
        const uint64_t budget =
            (latency + scenario.inter_arrival_gap) * k + latency + 1000;
        sim.run_until_idle(budget);
        if (!sim.idle()) throw Error("centralized run failed to drain");
        if (sim.frames_loaded() != k) throw Error("centralized run dropped requests");
        if (scenario.inter_arrival_gap == 0 && sim.last_load_cycle() != latency * k)
            throw Error("back-to-back drain took an unexpected cycle count");

        // One more shift-register edge moves any still-staged frame into its
        // PISO, then every addressed front-end must hold the baseline's frame.
        sim.run_sr_ticks(1);
        for (uint32_t i = 0; i < k; ++i) {
            const LineCodedFrame expected = transmit_pipeline(messages[i], polar, scheme);
            if (!(sim.front_end(i).piso.bits == expected.bits))
                throw Error("centralized frame differs from the sequential baseline");
        }

        const double centralized = static_cast<double>(sim.last_load_cycle()) / sys_hz;
        delays.rows.push_back(DelayRow{k, baseline});
        table.rows.push_back(GainRow{k, baseline, centralized, baseline / centralized});
    }

    write_delay_csv(delays, out_dir / ("delays_" + to_string(scenario.cost.mode) + ".csv"));
    write_gain_table(table, out_dir / "gains.csv");
    write_manifest(scenario, table, out_dir / "manifest.txt");
    return table;
}

void write_gain_table(const GainTable& table, const std::filesystem::path& file) {
    std::ofstream out(file);
    if (!out) throw Error("cannot write " + file.string());
    out << "k,baseline_delay,centralized_delay,gain\n";
    for (const auto& row : table.rows)
        out << row.k << ',' << format_double(row.baseline_delay) << ','
            << format_double(row.centralized_delay) << ',' << format_double(row.gain) << '\n';
}

GainTable load_gain_table(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw Error("cannot read " + file.string());
    std::string line;
    if (!std::getline(in, line) || line != "k,baseline_delay,centralized_delay,gain")
        throw ParseError(file.string(), 1, "bad gain table header");

    GainTable table;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::istringstream fields(line);
        std::string field;
        std::vector<std::string> parts;
        while (std::getline(fields, field, ',')) parts.push_back(field);
        if (parts.size() != 4) throw ParseError(file.string(), line_no, "expected 4 fields");
        try {
            GainRow row;
            row.k = static_cast<uint32_t>(std::stoul(parts[0]));
            row.baseline_delay = std::stod(parts[1]);
            row.centralized_delay = std::stod(parts[2]);
            row.gain = std::stod(parts[3]);
            table.rows.push_back(row);
        } catch (const std::exception&) {
            throw ParseError(file.string(), line_no, "malformed gain row");
        }
    }
    return table;
}

}  // namespace vlcb
