#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <vector>

#include "vlcbeacon/bit_block.hpp"

namespace vlcb {

struct PipelineOpCounts;

/// Code parameters: block length N = 2^n, the set of frozen input indices,
/// and the information length K = N - |frozen|.
class PolarCodeConfig {
public:
    /// Validates n >= 1, frozen indices distinct and < N, K >= 1.
    PolarCodeConfig(uint32_t n_exponent, std::vector<uint32_t> frozen_indices);

    /// Frozen set chosen by binary-erasure-channel reliability (see
    /// design_frozen_set).
    static PolarCodeConfig bec_design(uint32_t n_exponent, uint32_t info_length,
                                      double erasure_prob = 0.5);

    /// Frozen set loaded from a text file, one decimal index per line,
    /// strictly ascending, '#' comments allowed.
    static PolarCodeConfig from_frozen_file(uint32_t n_exponent, const std::filesystem::path& path);

    uint32_t n() const { return n_; }
    uint32_t block_length() const { return block_length_; }
    uint32_t info_length() const { return info_length_; }

    /// Frozen indices, ascending.
    const std::vector<uint32_t>& frozen() const { return frozen_; }
    bool is_frozen(uint32_t index) const;

private:
    uint32_t n_;
    uint32_t block_length_;
    uint32_t info_length_;
    std::vector<uint32_t> frozen_;
    std::vector<uint8_t> frozen_mask_;
};

/// Bhattacharyya parameters of all 2^n synthesized channels under the
/// erasure-channel recursion Z -> 2Z - Z^2 (upper) / Z -> Z^2 (lower).
std::vector<double> bec_bhattacharyya(uint32_t n_exponent, double erasure_prob);

/// The N - K indices with the largest Bhattacharyya parameters, ascending.
/// Ties freeze the lower index.
std::vector<uint32_t> design_frozen_set(uint32_t n_exponent, uint32_t info_length,
                                        double erasure_prob);

std::vector<uint32_t> parse_frozen_file(std::istream& in, std::string_view filename);
std::vector<uint32_t> load_frozen_file(const std::filesystem::path& path);
void write_frozen_file(std::ostream& out, const std::vector<uint32_t>& indices);

/// Places message bits at non-frozen positions in ascending index order;
/// frozen positions are 0. message.size() must equal config.info_length().
BitBlock insert_frozen(const BitBlock& message, const PolarCodeConfig& config,
                       PipelineOpCounts* ops = nullptr);

/// In-place butterfly: for each stage the first half of every block is XORed
/// with its partner half a block away. Equivalent to multiplication by the
/// n-fold Kronecker power of [[1,0],[1,1]] over GF(2), no bit-reversal.
void polar_transform_inplace(BitBlock& block, PipelineOpCounts* ops = nullptr);
BitBlock polar_transform(BitBlock block, PipelineOpCounts* ops = nullptr);

BitBlock polar_encode(const BitBlock& message, const PolarCodeConfig& config,
                      PipelineOpCounts* ops = nullptr);

/// Noiseless inverse of polar_encode: the transform is an involution, so
/// applying it again and reading the non-frozen positions recovers the
/// message.
BitBlock polar_extract(const BitBlock& codeword, const PolarCodeConfig& config);

}  // namespace vlcb
