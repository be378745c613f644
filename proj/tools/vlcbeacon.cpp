#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "vlcbeacon/bench.hpp"
#include "vlcbeacon/datapath.hpp"
#include "vlcbeacon/errors.hpp"
#include "vlcbeacon/firmware.hpp"
#include "vlcbeacon/format.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitLineCode = 3;
constexpr int kExitBadAddress = 4;

struct CodeArgs {
    uint32_t ml = 128;
    uint32_t cl = 256;
    std::string rll = "manchester";
    double erasure = 0.5;
    std::string frozen_file;
};

void add_code_options(CLI::App* cmd, CodeArgs& args) {
    cmd->add_option("--ml", args.ml, "Message length K in bits");
    cmd->add_option("--cl", args.cl, "Codeword length N in bits (power of two)");
    cmd->add_option("--rll", args.rll, "Line code: manchester or 4b6b");
    cmd->add_option("--erasure", args.erasure, "BEC erasure probability for the frozen set");
    cmd->add_option("--frozen-file", args.frozen_file,
                    "Read the frozen set from a file instead of designing it");
}

vlcb::RllScheme require_scheme(const std::string& text) {
    const auto scheme = vlcb::parse_rll_scheme(text);
    if (!scheme) throw vlcb::InvalidParameters("unknown line code: " + text);
    return *scheme;
}

uint32_t exponent_for(uint32_t cl) {
    if (cl < 2 || (cl & (cl - 1)) != 0)
        throw vlcb::InvalidParameters("codeword length must be a power of two >= 2");
    uint32_t n = 0;
    while ((1u << n) < cl) ++n;
    return n;
}

vlcb::PolarCodeConfig make_code(const CodeArgs& args) {
    const uint32_t n = exponent_for(args.cl);
    auto config = args.frozen_file.empty()
                      ? vlcb::PolarCodeConfig::bec_design(n, args.ml, args.erasure)
                      : vlcb::PolarCodeConfig::from_frozen_file(n, args.frozen_file);
    if (config.info_length() != args.ml)
        throw vlcb::InvalidParameters("frozen set leaves " +
                                      std::to_string(config.info_length()) +
                                      " info bits, expected " + std::to_string(args.ml));
    return config;
}

vlcb::BitBlock read_block(const std::string& hex, const std::string& bits, std::size_t length,
                          const char* what) {
    if (hex.empty() == bits.empty())
        throw vlcb::InvalidParameters(std::string("pass exactly one of --") + what + "-hex / --" +
                                      what + "-bits");
    return hex.empty() ? vlcb::BitBlock::from_ascii(bits) : vlcb::BitBlock::from_hex(hex, length);
}

int cmd_encode(const CodeArgs& code, const std::string& hex, const std::string& bits,
               bool out_hex) {
    const auto config = make_code(code);
    const auto scheme = require_scheme(code.rll);
    const auto message = read_block(hex, bits, config.info_length(), "message");
    if (message.size() != config.info_length())
        throw vlcb::InvalidParameters("message length differs from ml");
    const auto frame = vlcb::transmit_pipeline(message, config, scheme);
    std::cout << (out_hex ? frame.bits.to_hex() : frame.bits.to_ascii()) << '\n';
    return kExitOk;
}

int cmd_decode(const CodeArgs& code, const std::string& hex, const std::string& bits,
               bool out_bits) {
    const auto config = make_code(code);
    const auto scheme = require_scheme(code.rll);
    const std::size_t frame_len = vlcb::coded_frame_length(scheme, config.block_length());
    const auto frame_bits = read_block(hex, bits, frame_len, "frame");
    if (frame_bits.size() != frame_len)
        throw vlcb::InvalidParameters("frame length differs from the scheme's");
    const auto message =
        vlcb::polar_extract(vlcb::rll_decode(vlcb::LineCodedFrame{scheme, frame_bits}), config);
    std::cout << (out_bits ? message.to_ascii() : message.to_hex()) << '\n';
    return kExitOk;
}

int cmd_frozen(const CodeArgs& code, const std::string& out_file) {
    const uint32_t n = exponent_for(code.cl);
    const auto config = vlcb::PolarCodeConfig::bec_design(n, code.ml, code.erasure);
    if (!out_file.empty()) {
        std::ofstream out(out_file);
        if (!out) throw vlcb::Error("cannot write " + out_file);
        vlcb::write_frozen_file(out, config.frozen());
        std::cout << "wrote " << out_file << '\n';
        return kExitOk;
    }
    for (uint32_t index : config.frozen()) std::cout << index << '\n';
    return kExitOk;
}

int cmd_simulate(const std::string& config_path, const std::string& schedule_path,
                 uint64_t cycles, const std::string& out_dir) {
    const auto config = vlcb::load_network_config(config_path);
    const auto schedule = vlcb::load_schedule(schedule_path);
    for (const auto& entry : schedule) {
        if (entry.address >= config.front_ends) {
            std::cerr << "schedule addresses anchor " << entry.address << " but the network has "
                      << config.front_ends << " front-ends\n";
            return kExitBadAddress;
        }
    }

    const auto result = vlcb::run_simulate_job(config, schedule, cycles, out_dir);
    std::size_t ok = 0, idle = 0, no_frame = 0, mismatch = 0;
    for (const auto& row : result.rows) {
        if (row.status == "ok") ++ok;
        else if (row.status == "idle") ++idle;
        else if (row.status == "no_frame") ++no_frame;
        else ++mismatch;
    }
    std::cout << "cycles=" << result.cycles_run << " frames_loaded=" << result.frames_loaded
              << '\n';
    std::cout << "verify: ok=" << ok << " idle=" << idle << " no_frame=" << no_frame
              << " mismatch=" << mismatch << '\n';
    std::cout << "wrote " << config.front_ends << " waveform files, events.csv and verify.csv to "
              << out_dir << '\n';
    return kExitOk;
}

int cmd_bench(vlcb::Scenario scenario, const std::string& out_dir) {
    const auto table = vlcb::run_scenario(scenario, out_dir);
    std::printf("%6s %16s %18s %12s %12s %12s\n", "k", "baseline", "centralized_s", "gain",
                "ref_arduino", "ref_raspberry");
    for (const auto& row : table.rows) {
        const vlcb::ReferenceGain* ref = nullptr;
        for (const auto& r : vlcb::kReferenceGains)
            if (r.k == row.k) ref = &r;
        if (ref)
            std::printf("%6u %16.6g %18.6g %12.6g %12g %12g\n", row.k, row.baseline_delay,
                        row.centralized_delay, row.gain, ref->arduino, ref->raspberry);
        else
            std::printf("%6u %16.6g %18.6g %12.6g %12s %12s\n", row.k, row.baseline_delay,
                        row.centralized_delay, row.gain, "-", "-");
    }
    std::cout << "baseline unit: " << table.baseline_unit
              << "; reference columns are published hardware measurements, not asserted\n";
    std::cout << "wrote delay, gain and manifest files to " << out_dir << '\n';
    return kExitOk;
}

int cmd_footprint(uint32_t ml, uint32_t cl, const std::string& rll, std::size_t overhead,
                  bool all) {
    std::vector<vlcb::FootprintReport> reports;
    if (all) {
        for (auto [m, c] : {std::pair{16u, 32u}, {32u, 64u}, {64u, 128u}, {128u, 256u}})
            for (auto scheme : {vlcb::RllScheme::Manchester, vlcb::RllScheme::FourBSixB})
                reports.push_back(vlcb::estimate_footprint(m, c, scheme, overhead));
    } else {
        reports.push_back(vlcb::estimate_footprint(ml, cl, require_scheme(rll), overhead));
    }
    std::cout << "ml,cl,scheme,array_bytes,overhead,total\n";
    for (const auto& r : reports)
        std::cout << r.ml << ',' << r.cl << ',' << vlcb::to_string(r.scheme) << ','
                  << r.array_bytes << ',' << r.overhead_bytes << ',' << r.total << '\n';
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Centralized VLC beacon transmitter: coding pipeline, datapath simulator and "
                 "sequential-baseline benchmarks"};
    app.require_subcommand(1);
    app.fallthrough();

    uint64_t seed = 0;
    std::string out_dir = ".";
    app.add_option("--seed", seed, "Seed for generated workloads");
    app.add_option("--out-dir", out_dir, "Directory for emitted files");

    CodeArgs enc_code, dec_code, frz_code;
    std::string enc_hex, enc_bits, dec_hex, dec_bits, frozen_out;
    bool enc_out_hex = false, dec_out_bits = false;

    auto* enc = app.add_subcommand("encode", "Polar-encode and line-code one message");
    add_code_options(enc, enc_code);
    enc->add_option("--message-hex", enc_hex, "Message as a hex numeral");
    enc->add_option("--message-bits", enc_bits, "Message as an ASCII bit string");
    enc->add_flag("--hex", enc_out_hex, "Print the frame as hex instead of bits");

    auto* dec = app.add_subcommand("decode", "Line-decode a frame and recover the message");
    add_code_options(dec, dec_code);
    dec->add_option("--frame-hex", dec_hex, "Frame as a hex numeral");
    dec->add_option("--frame-bits", dec_bits, "Frame as an ASCII bit string");
    dec->add_flag("--bits", dec_out_bits, "Print the message as bits instead of hex");

    auto* frz = app.add_subcommand("frozen", "Design a frozen set for the binary erasure channel");
    add_code_options(frz, frz_code);
    frz->add_option("--out", frozen_out, "Write the set to a file instead of stdout");

    std::string sim_config, sim_schedule;
    uint64_t sim_cycles = 20000;
    auto* sim = app.add_subcommand("simulate", "Run the cycle-level datapath from a config and "
                                               "request schedule");
    sim->add_option("--config", sim_config, "Network config file")->required();
    sim->add_option("--schedule", sim_schedule, "Request schedule CSV")->required();
    sim->add_option("--cycles", sim_cycles, "Sys cycles to run");

    vlcb::Scenario scenario;
    std::string bench_rll = "manchester", bench_mode = "modeled";
    uint32_t bench_ml = 128;
    auto* ben = app.add_subcommand("bench", "Compare the sequential baseline against the "
                                            "centralized datapath");
    ben->add_option("--k", scenario.k_values, "Transmitter counts")->delimiter(',');
    ben->add_option("--ml", bench_ml, "Message length (cl = 2*ml)");
    ben->add_option("--rll", bench_rll, "Line code: manchester or 4b6b");
    ben->add_option("--mode", bench_mode, "Baseline cost mode: modeled or measured");
    ben->add_option("--gap", scenario.inter_arrival_gap, "Cycles between request arrivals");
    ben->add_option("--front-ends", scenario.network.front_ends, "Anchor count");
    ben->add_option("--repetitions", scenario.cost.repetitions, "Measured-mode repetitions");
    ben->add_option("--warmup", scenario.cost.warmup, "Measured-mode warm-up passes");
    ben->add_option("--calibration-scale", scenario.cost.calibration_scale,
                    "Units-to-seconds factor for the modeled baseline");

    uint32_t fp_ml = 128, fp_cl = 0;
    std::string fp_rll = "manchester";
    std::size_t fp_overhead = 0;
    bool fp_all = false;
    auto* fp = app.add_subcommand("footprint", "Report the sequential encoder's array budget");
    fp->add_option("--ml", fp_ml, "Message length");
    fp->add_option("--cl", fp_cl, "Codeword length (default 2*ml)");
    fp->add_option("--rll", fp_rll, "Line code: manchester or 4b6b");
    fp->add_option("--overhead", fp_overhead, "Extra bytes beyond the arrays");
    fp->add_flag("--all", fp_all, "Report every supported (ml, cl) pair and both schemes");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*enc) return cmd_encode(enc_code, enc_hex, enc_bits, enc_out_hex);
        if (*dec) return cmd_decode(dec_code, dec_hex, dec_bits, dec_out_bits);
        if (*frz) return cmd_frozen(frz_code, frozen_out);
        if (*sim) return cmd_simulate(sim_config, sim_schedule, sim_cycles, out_dir);
        if (*ben) {
            scenario.seed = seed;
            scenario.network.ml = bench_ml;
            scenario.network.cl = 2 * bench_ml;
            scenario.network.scheme = require_scheme(bench_rll);
            scenario.cost.mode = vlcb::parse_cost_mode(bench_mode);
            return cmd_bench(scenario, out_dir);
        }
        if (*fp) return cmd_footprint(fp_ml, fp_cl == 0 ? 2 * fp_ml : fp_cl, fp_rll, fp_overhead,
                                      fp_all);
    } catch (const vlcb::LineCodeViolation& e) {
        std::cerr << e.what() << '\n';
        return kExitLineCode;
    } catch (const std::exception& e) {
        std::cerr << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
