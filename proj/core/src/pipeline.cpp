#include "vlcbeacon/pipeline.hpp"

namespace vlcb {

LineCodedFrame transmit_pipeline(const BitBlock& message, const PolarCodeConfig& config,
                                 RllScheme scheme, PipelineOpCounts* ops) {
    return rll_encode(scheme, polar_encode(message, config, ops), ops);
}

}  // namespace vlcb
