#include "vlcbeacon/polar.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "vlcbeacon/pipeline.hpp"

namespace vlcb {

namespace {

uint32_t checked_block_length(uint32_t n_exponent) {
    if (n_exponent < 1 || n_exponent > 30) {
        throw InvalidParameters("block-length exponent must be in [1, 30], got " +
                                std::to_string(n_exponent));
    }
    return uint32_t{1} << n_exponent;
}

}  // namespace

PolarCodeConfig::PolarCodeConfig(uint32_t n_exponent, std::vector<uint32_t> frozen_indices)
    : n_(n_exponent), block_length_(checked_block_length(n_exponent)) {
    std::sort(frozen_indices.begin(), frozen_indices.end());
    frozen_mask_.assign(block_length_, 0);
    for (uint32_t idx : frozen_indices) {
        if (idx >= block_length_) {
            throw InvalidParameters("frozen index " + std::to_string(idx) +
                                    " out of range for block length " +
                                    std::to_string(block_length_));
        }
        if (frozen_mask_[idx]) {
            throw InvalidParameters("duplicate frozen index " + std::to_string(idx));
        }
        frozen_mask_[idx] = 1;
    }
    if (frozen_indices.size() >= block_length_) {
        throw InvalidParameters("all positions frozen, information length would be 0");
    }
    frozen_ = std::move(frozen_indices);
    info_length_ = block_length_ - static_cast<uint32_t>(frozen_.size());
}

PolarCodeConfig PolarCodeConfig::bec_design(uint32_t n_exponent, uint32_t info_length,
                                            double erasure_prob) {
    return PolarCodeConfig(n_exponent, design_frozen_set(n_exponent, info_length, erasure_prob));
}

PolarCodeConfig PolarCodeConfig::from_frozen_file(uint32_t n_exponent,
                                                  const std::filesystem::path& path) {
    return PolarCodeConfig(n_exponent, load_frozen_file(path));
}

bool PolarCodeConfig::is_frozen(uint32_t index) const {
    if (index >= block_length_) {
        throw InvalidParameters("index " + std::to_string(index) + " out of range");
    }
    return frozen_mask_[index] != 0;
}

std::vector<double> bec_bhattacharyya(uint32_t n_exponent, double erasure_prob) {
    const uint32_t length = checked_block_length(n_exponent);
    if (!(erasure_prob > 0.0 && erasure_prob < 1.0)) {
        throw InvalidParameters("erasure probability must lie in (0, 1)");
    }
    std::vector<double> z{erasure_prob};
    z.reserve(length);
    for (uint32_t stage = 0; stage < n_exponent; ++stage) {
        std::vector<double> next(z.size() * 2);
        for (std::size_t i = 0; i < z.size(); ++i) {
            next[2 * i] = 2.0 * z[i] - z[i] * z[i];
            next[2 * i + 1] = z[i] * z[i];
        }
        z = std::move(next);
    }
    return z;
}

std::vector<uint32_t> design_frozen_set(uint32_t n_exponent, uint32_t info_length,
                                        double erasure_prob) {
    const uint32_t length = checked_block_length(n_exponent);
    if (info_length > length) {
        throw InvalidParameters("information length " + std::to_string(info_length) +
                                " exceeds block length " + std::to_string(length));
    }
    if (info_length == 0) {
        throw InvalidParameters("information length must be at least 1");
    }
    const std::vector<double> z = bec_bhattacharyya(n_exponent, erasure_prob);

    std::vector<uint32_t> order(length);
    std::iota(order.begin(), order.end(), 0);
    // Stable sort keeps ascending indices among equal parameters, so ties
    // freeze the lower index.
    std::stable_sort(order.begin(), order.end(),
                     [&z](uint32_t a, uint32_t b) { return z[a] > z[b]; });

    std::vector<uint32_t> frozen(order.begin(), order.begin() + (length - info_length));
    std::sort(frozen.begin(), frozen.end());
    return frozen;
}

std::vector<uint32_t> parse_frozen_file(std::istream& in, std::string_view filename) {
    std::vector<uint32_t> indices;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::size_t begin = line.find_first_not_of(" \t\r");
        if (begin == std::string::npos) continue;
        std::size_t end = line.find_last_not_of(" \t\r");
        std::string token = line.substr(begin, end - begin + 1);

        uint32_t value = 0;
        try {
            std::size_t consumed = 0;
            unsigned long parsed = std::stoul(token, &consumed);
            if (consumed != token.size() || parsed > 0xFFFFFFFFul) throw std::invalid_argument("");
            value = static_cast<uint32_t>(parsed);
        } catch (const std::exception&) {
            throw ParseError(std::string(filename), line_no,
                             "expected a decimal index, got '" + token + "'");
        }
        if (!indices.empty() && value <= indices.back()) {
            throw ParseError(std::string(filename), line_no,
                             "indices must be strictly ascending; " + std::to_string(value) +
                                 " follows " + std::to_string(indices.back()));
        }
        indices.push_back(value);
    }
    return indices;
}

std::vector<uint32_t> load_frozen_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw InvalidParameters("cannot open frozen-set file " + path.string());
    }
    return parse_frozen_file(in, path.string());
}

void write_frozen_file(std::ostream& out, const std::vector<uint32_t>& indices) {
    for (uint32_t idx : indices) out << idx << '\n';
}

BitBlock insert_frozen(const BitBlock& message, const PolarCodeConfig& config,
                       PipelineOpCounts* ops) {
    if (message.size() != config.info_length()) {
        throw InvalidParameters("message length " + std::to_string(message.size()) +
                                " does not match information length " +
                                std::to_string(config.info_length()));
    }
    BitBlock block(config.block_length());
    std::size_t bit_index = 0;
    for (uint32_t c = 0; c < config.block_length(); ++c) {
        if (config.is_frozen(c)) {
            block.set(c, 0);
        } else {
            block.set(c, message[bit_index]);
            ++bit_index;
        }
        if (ops) ++ops->bit_moves;
    }
    return block;
}

void polar_transform_inplace(BitBlock& block, PipelineOpCounts* ops) {
    const std::size_t length = block.size();
    if (length < 2 || (length & (length - 1)) != 0) {
        throw InvalidParameters("transform length must be a power of two >= 2, got " +
                                std::to_string(length));
    }
    std::size_t n = 0;
    while ((std::size_t{1} << n) < length) ++n;

    for (std::size_t stage = 0; stage < n; ++stage) {
        const std::size_t block_size = length >> stage;
        const std::size_t n_blocks = std::size_t{1} << stage;
        const std::size_t half = block_size / 2;
        for (std::size_t j = 0; j < n_blocks; ++j) {
            const std::size_t base = j * block_size;
            for (std::size_t t = 0; t < half; ++t) {
                block.set(base + t, block[base + t] ^ block[base + t + half]);
                if (ops) ++ops->xor_ops;
            }
        }
    }
}

BitBlock polar_transform(BitBlock block, PipelineOpCounts* ops) {
    polar_transform_inplace(block, ops);
    return block;
}

BitBlock polar_encode(const BitBlock& message, const PolarCodeConfig& config,
                      PipelineOpCounts* ops) {
    BitBlock block = insert_frozen(message, config, ops);
    polar_transform_inplace(block, ops);
    return block;
}

BitBlock polar_extract(const BitBlock& codeword, const PolarCodeConfig& config) {
    if (codeword.size() != config.block_length()) {
        throw InvalidParameters("codeword length " + std::to_string(codeword.size()) +
                                " does not match block length " +
                                std::to_string(config.block_length()));
    }
    BitBlock block = polar_transform(codeword);
    BitBlock message;
    for (uint32_t c = 0; c < config.block_length(); ++c) {
        if (!config.is_frozen(c)) message.push_back(block[c]);
    }
    return message;
}

}  // namespace vlcb
