#include "vlcbeacon/config.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "vlcbeacon/request.hpp"

namespace vlcb {

namespace {

std::string trim(std::string_view text) {
    std::size_t begin = text.find_first_not_of(" \t\r");
    if (begin == std::string_view::npos) return {};
    std::size_t end = text.find_last_not_of(" \t\r");
    return std::string(text.substr(begin, end - begin + 1));
}

uint64_t parse_u64(const std::string& token, std::string_view filename, std::size_t line_no,
                   std::string_view key) {
    try {
        std::size_t consumed = 0;
        unsigned long long value = std::stoull(token, &consumed);
        if (consumed != token.size()) throw std::invalid_argument("");
        return value;
    } catch (const std::exception&) {
        throw ParseError(std::string(filename), line_no,
                         "value for '" + std::string(key) + "' must be a nonnegative integer, got '" +
                             token + "'");
    }
}

bool is_supported_pair(uint32_t ml, uint32_t cl) {
    return (ml == 16 && cl == 32) || (ml == 32 && cl == 64) || (ml == 64 && cl == 128) ||
           (ml == 128 && cl == 256);
}

}  // namespace

void NetworkConfig::validate() const {
    if (front_ends == 0 || front_ends > (1u << kAddressBits)) {
        throw InvalidParameters("front_ends must be in [1, " +
                                std::to_string(1u << kAddressBits) +
                                "] under the 7-bit address layout, got " +
                                std::to_string(front_ends));
    }
    if (cl != 2 * ml) {
        throw InvalidParameters("codeword length must be twice the message length, got ml=" +
                                std::to_string(ml) + " cl=" + std::to_string(cl));
    }
    if (!is_supported_pair(ml, cl)) {
        throw InvalidParameters("(ml, cl) must be one of (16,32), (32,64), (64,128), (128,256)");
    }
    clock.validate();
    if (latency_cycles < 1) {
        throw InvalidParameters("latency_cycles must be at least 1");
    }
    if (fifo_depth < 1) {
        throw InvalidParameters("fifo_depth must be at least 1");
    }
    if (frozen.kind == FrozenSource::Kind::Bec &&
        !(frozen.erasure > 0.0 && frozen.erasure < 1.0)) {
        throw InvalidParameters("frozen-set erasure probability must lie in (0, 1)");
    }
}

PolarCodeConfig NetworkConfig::make_polar_config() const {
    uint32_t n = 0;
    while ((1u << n) < cl) ++n;
    if ((1u << n) != cl) {
        throw InvalidParameters("codeword length must be a power of two, got " +
                                std::to_string(cl));
    }
    if (frozen.kind == FrozenSource::Kind::File) {
        PolarCodeConfig config = PolarCodeConfig::from_frozen_file(n, frozen.path);
        if (config.info_length() != ml) {
            throw InvalidParameters("frozen-set file leaves " +
                                    std::to_string(config.info_length()) +
                                    " information bits, expected " + std::to_string(ml));
        }
        return config;
    }
    return PolarCodeConfig::bec_design(n, ml, frozen.erasure);
}

NetworkConfig parse_network_config(std::istream& in, std::string_view filename) {
    NetworkConfig config;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::string stripped = trim(line);
        if (stripped.empty()) continue;

        auto eq = stripped.find('=');
        if (eq == std::string::npos) {
            throw ParseError(std::string(filename), line_no, "expected 'key = value'");
        }
        std::string key = trim(stripped.substr(0, eq));
        std::string value = trim(stripped.substr(eq + 1));
        if (key.empty() || value.empty()) {
            throw ParseError(std::string(filename), line_no, "expected 'key = value'");
        }

        if (key == "front_ends") {
            config.front_ends = static_cast<uint32_t>(parse_u64(value, filename, line_no, key));
        } else if (key == "ml") {
            config.ml = static_cast<uint32_t>(parse_u64(value, filename, line_no, key));
        } else if (key == "cl") {
            config.cl = static_cast<uint32_t>(parse_u64(value, filename, line_no, key));
        } else if (key == "rll") {
            auto scheme = parse_rll_scheme(value);
            if (!scheme) {
                throw ParseError(std::string(filename), line_no,
                                 "rll must be 'manchester' or '4b6b', got '" + value + "'");
            }
            config.scheme = *scheme;
        } else if (key == "sys_hz" || key == "sr_hz") {
            uint64_t hz = parse_u64(value, filename, line_no, key);
            uint64_t sys = key == "sys_hz" ? hz : config.clock.sys_hz();
            uint64_t sr = key == "sr_hz" ? hz : config.clock.sr_hz();
            if (sys == 0 || sr == 0 || sys % sr != 0) {
                throw ParseError(std::string(filename), line_no,
                                 "sys_hz must be a positive integer multiple of sr_hz");
            }
            config.clock = ClockConfig(sys, sr);
        } else if (key == "latency") {
            config.latency_cycles = static_cast<uint32_t>(parse_u64(value, filename, line_no, key));
        } else if (key == "fifo_depth") {
            config.fifo_depth = static_cast<uint32_t>(parse_u64(value, filename, line_no, key));
        } else if (key == "overlap") {
            if (value == "on" || value == "true" || value == "1") {
                config.overlap = true;
            } else if (value == "off" || value == "false" || value == "0") {
                config.overlap = false;
            } else {
                throw ParseError(std::string(filename), line_no,
                                 "overlap must be on/off, got '" + value + "'");
            }
        } else if (key == "frozen") {
            if (value.rfind("bec:", 0) == 0) {
                config.frozen.kind = FrozenSource::Kind::Bec;
                try {
                    std::size_t consumed = 0;
                    config.frozen.erasure = std::stod(value.substr(4), &consumed);
                    if (consumed != value.size() - 4) throw std::invalid_argument("");
                } catch (const std::exception&) {
                    throw ParseError(std::string(filename), line_no,
                                     "frozen = bec:<erasure> needs a real number, got '" + value +
                                         "'");
                }
            } else if (value.rfind("file:", 0) == 0) {
                config.frozen.kind = FrozenSource::Kind::File;
                config.frozen.path = value.substr(5);
            } else {
                throw ParseError(std::string(filename), line_no,
                                 "frozen must be 'bec:<erasure>' or 'file:<path>', got '" + value +
                                     "'");
            }
        } else {
            throw ParseError(std::string(filename), line_no, "unknown key '" + key + "'");
        }
    }

    try {
        config.validate();
    } catch (const InvalidParameters& e) {
        throw ParseError(std::string(filename), line_no, e.what());
    }
    return config;
}

NetworkConfig load_network_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw InvalidParameters("cannot open config file " + path.string());
    }
    return parse_network_config(in, path.string());
}

void write_network_config(std::ostream& out, const NetworkConfig& config) {
    out << "front_ends = " << config.front_ends << '\n';
    out << "ml = " << config.ml << '\n';
    out << "cl = " << config.cl << '\n';
    out << "rll = " << to_string(config.scheme) << '\n';
    out << "sys_hz = " << config.clock.sys_hz() << '\n';
    out << "sr_hz = " << config.clock.sr_hz() << '\n';
    out << "latency = " << config.latency_cycles << '\n';
    out << "fifo_depth = " << config.fifo_depth << '\n';
    out << "overlap = " << (config.overlap ? "on" : "off") << '\n';
    if (config.frozen.kind == FrozenSource::Kind::Bec) {
        out << "frozen = bec:" << config.frozen.erasure << '\n';
    } else {
        out << "frozen = file:" << config.frozen.path.string() << '\n';
    }
}

std::vector<ScheduleEntry> parse_schedule(std::istream& in, std::string_view filename) {
    std::vector<ScheduleEntry> entries;
    std::string line;
    std::size_t line_no = 0;
    bool saw_header = false;
    while (std::getline(in, line)) {
        ++line_no;
        std::string stripped = trim(line);
        if (stripped.empty()) continue;
        if (!saw_header) {
            if (stripped != "cycle,address,payload_hex") {
                throw ParseError(std::string(filename), line_no,
                                 "expected header 'cycle,address,payload_hex'");
            }
            saw_header = true;
            continue;
        }

        std::istringstream fields(stripped);
        std::string cycle_s, address_s, payload_s, extra;
        if (!std::getline(fields, cycle_s, ',') || !std::getline(fields, address_s, ',') ||
            !std::getline(fields, payload_s, ',') || std::getline(fields, extra, ',')) {
            throw ParseError(std::string(filename), line_no,
                             "expected 3 fields 'cycle,address,payload_hex'");
        }
        ScheduleEntry entry;
        entry.cycle = parse_u64(trim(cycle_s), filename, line_no, "cycle");
        entry.address = static_cast<uint32_t>(parse_u64(trim(address_s), filename, line_no, "address"));
        try {
            entry.payload = BitBlock::from_hex(trim(payload_s), kPayloadBits);
        } catch (const InvalidParameters& e) {
            throw ParseError(std::string(filename), line_no, e.what());
        }
        entries.push_back(std::move(entry));
    }
    if (!saw_header) {
        throw ParseError(std::string(filename), line_no,
                         "empty schedule: header 'cycle,address,payload_hex' required");
    }
    return entries;
}

std::vector<ScheduleEntry> load_schedule(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw InvalidParameters("cannot open schedule file " + path.string());
    }
    return parse_schedule(in, path.string());
}

void write_schedule(std::ostream& out, const std::vector<ScheduleEntry>& entries) {
    out << "cycle,address,payload_hex\n";
    for (const ScheduleEntry& e : entries) {
        out << e.cycle << ',' << e.address << ',' << e.payload.to_hex() << '\n';
    }
}

}  // namespace vlcb
