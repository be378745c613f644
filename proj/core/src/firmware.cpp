#include "vlcbeacon/firmware.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>

#include "vlcbeacon/errors.hpp"
#include "vlcbeacon/format.hpp"

namespace vlcb {
namespace {

// Keeps the timed encode loop from being optimized away.
volatile uint64_t g_timing_sink = 0;

double median(std::vector<double> samples) {
    std::sort(samples.begin(), samples.end());
    const std::size_t n = samples.size();
    if (n % 2 == 1) return samples[n / 2];
    return 0.5 * (samples[n / 2 - 1] + samples[n / 2]);
}

}  // namespace

std::string to_string(CostMode mode) {
    return mode == CostMode::Measured ? "measured" : "modeled";
}

CostMode parse_cost_mode(const std::string& text) {
    if (text == "measured") return CostMode::Measured;
    if (text == "modeled") return CostMode::Modeled;
    throw InvalidParameters("unknown cost mode: " + text);
}

void CostModel::validate() const {
    if (cost_per_xor < 0 || cost_per_table_lookup < 0 || cost_per_bit_move < 0)
        throw InvalidParameters("unit costs must be nonnegative");
    if (!(calibration_scale > 0)) throw InvalidParameters("calibration scale must be positive");
    if (repetitions == 0) throw InvalidParameters("measured mode needs at least one repetition");
}

double CostModel::units(const PipelineOpCounts& ops) const {
    return static_cast<double>(ops.xor_ops) * cost_per_xor +
           static_cast<double>(ops.table_lookups) * cost_per_table_lookup +
           static_cast<double>(ops.bit_moves) * cost_per_bit_move;
}

double run_sequential(const std::vector<BitBlock>& messages, const PolarCodeConfig& config,
                      RllScheme scheme, const CostModel& cost) {
    cost.validate();
    if (messages.empty()) throw InvalidParameters("cannot report delay for an empty batch");
    const auto k = messages.size();

    if (cost.mode == CostMode::Modeled) {
        // Op counts depend only on the code lengths, so the batch prices at
        // exactly k times one message.
        PipelineOpCounts first;
        for (std::size_t i = 0; i < k; ++i) {
            PipelineOpCounts ops;
            transmit_pipeline(messages[i], config, scheme, &ops);
            if (i == 0)
                first = ops;
            else if (!(ops == first))
                throw Error("op counts diverged across equally sized messages");
        }
        const double per_message = cost.units(first) * cost.calibration_scale;
        return static_cast<double>(k) * per_message;
    }

    auto encode_all = [&] {
        uint64_t acc = 0;
        for (const auto& message : messages) {
            LineCodedFrame frame = transmit_pipeline(message, config, scheme);
            acc += frame.bits.count_ones();
        }
        g_timing_sink = g_timing_sink + acc;
    };
    for (uint32_t i = 0; i < cost.warmup; ++i) encode_all();
    std::vector<double> samples;
    samples.reserve(cost.repetitions);
    for (uint32_t i = 0; i < cost.repetitions; ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        encode_all();
        const auto t1 = std::chrono::steady_clock::now();
        samples.push_back(std::chrono::duration<double>(t1 - t0).count());
    }
    return median(std::move(samples));
}

DelayReport run_delay_sweep(const std::vector<uint32_t>& k_values, const PolarCodeConfig& config,
                            RllScheme scheme, const CostModel& cost, uint64_t seed) {
    if (k_values.empty()) throw InvalidParameters("delay sweep needs at least one k");
    if (!std::is_sorted(k_values.begin(), k_values.end()))
        throw InvalidParameters("k values must be sorted ascending");

    DelayReport report;
    report.ml = static_cast<uint32_t>(config.info_length());
    report.scheme = scheme;
    report.mode = cost.mode;
    report.model_label =
        cost.mode == CostMode::Measured ? "measured_wall_clock" : "modeled_op_counts";

    std::mt19937_64 rng(seed);
    for (uint32_t k : k_values) {
        if (k == 0) throw InvalidParameters("k must be positive");
        std::vector<BitBlock> messages;
        messages.reserve(k);
        for (uint32_t i = 0; i < k; ++i)
            messages.push_back(random_message(rng, config.info_length()));
        report.rows.push_back(DelayRow{k, run_sequential(messages, config, scheme, cost)});
    }
    return report;
}

FootprintReport estimate_footprint(uint32_t ml, uint32_t cl, RllScheme scheme,
                                   std::size_t overhead_bytes) {
    static constexpr std::pair<uint32_t, uint32_t> kSupported[] = {
        {16, 32}, {32, 64}, {64, 128}, {128, 256}};
    const bool supported = std::any_of(std::begin(kSupported), std::end(kSupported),
                                       [&](auto p) { return p.first == ml && p.second == cl; });
    if (!supported) throw InvalidParameters("unsupported (ml, cl) pair");

    FootprintReport report;
    report.ml = ml;
    report.cl = cl;
    report.scheme = scheme;
    report.overhead_bytes = overhead_bytes;
    // message + frozen index map + codeword + line-coded output, one byte
    // per element.
    const std::size_t out_len = coded_frame_length(scheme, cl);
    report.array_bytes = static_cast<std::size_t>(ml) + cl + cl + out_len;
    report.total = report.array_bytes + overhead_bytes;
    return report;
}

LinearFit least_squares_fit(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size()) throw InvalidParameters("fit inputs differ in length");
    if (x.size() < 2) throw InvalidParameters("fit needs at least two points");
    const double n = static_cast<double>(x.size());
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    if (sxx == 0) throw InvalidParameters("fit needs at least two distinct x values");

    LinearFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    double ss_res = 0, ss_tot = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double predicted = fit.intercept + fit.slope * x[i];
        ss_res += (y[i] - predicted) * (y[i] - predicted);
        ss_tot += (y[i] - my) * (y[i] - my);
    }
    fit.r_squared = ss_tot > 0 ? 1.0 - ss_res / ss_tot : (ss_res == 0 ? 1.0 : 0.0);
    return fit;
}

BitBlock random_message(std::mt19937_64& rng, std::size_t length) {
    BitBlock block(length);
    uint64_t word = 0;
    for (std::size_t i = 0; i < length; ++i) {
        if (i % 64 == 0) word = rng();
        block.set(i, static_cast<uint8_t>((word >> (i % 64)) & 1));
    }
    return block;
}

void write_delay_csv(const DelayReport& report, const std::filesystem::path& file) {
    std::ofstream out(file);
    if (!out) throw Error("cannot write " + file.string());
    out << (report.mode == CostMode::Measured ? "k,delay_seconds\n" : "k,delay_units\n");
    for (const auto& row : report.rows) out << row.k << ',' << format_double(row.delay) << '\n';
}

void write_footprint_csv(const std::vector<FootprintReport>& reports,
                         const std::filesystem::path& file) {
    std::ofstream out(file);
    if (!out) throw Error("cannot write " + file.string());
    out << "ml,cl,scheme,array_bytes,overhead,total\n";
    for (const auto& r : reports)
        out << r.ml << ',' << r.cl << ',' << to_string(r.scheme) << ',' << r.array_bytes << ','
            << r.overhead_bytes << ',' << r.total << '\n';
}

}  // namespace vlcb
