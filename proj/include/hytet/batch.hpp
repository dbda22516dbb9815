#pragma once

#include <string>
#include <vector>

#include "hytet/core.hpp"
#include "hytet/volume.hpp"

namespace hytet {

struct BatchEntry {
    VolumeResult result;
    /// Empty on success; otherwise the message of the error thrown.
    std::string error;
};

/// volume_edges over many inputs, parallel over entries with OpenMP. Output
/// order matches input order.
std::vector<BatchEntry> volume_edges_batch(const std::vector<EdgeLengths>& inputs,
                                           const QuadratureConfig& cfg = {});

/// Single-threaded reference for volume_edges_batch.
std::vector<BatchEntry> volume_edges_batch_serial(const std::vector<EdgeLengths>& inputs,
                                                  const QuadratureConfig& cfg = {});

}  // namespace hytet
