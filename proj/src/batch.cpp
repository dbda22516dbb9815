#include "hytet/batch.hpp"

#include <cstdint>
#include <exception>

namespace hytet {

namespace {

BatchEntry evaluate(const EdgeLengths& lengths, const QuadratureConfig& cfg) {
    BatchEntry entry;
    try {
        entry.result = volume_edges(lengths, cfg);
    } catch (const std::exception& ex) {
        entry.error = ex.what();
    }
    return entry;
}

}  // namespace

std::vector<BatchEntry> volume_edges_batch(const std::vector<EdgeLengths>& inputs,
                                           const QuadratureConfig& cfg) {
    std::vector<BatchEntry> out(inputs.size());
    const auto n = static_cast<std::int64_t>(inputs.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < n; ++i) out[i] = evaluate(inputs[i], cfg);
    return out;
}

std::vector<BatchEntry> volume_edges_batch_serial(const std::vector<EdgeLengths>& inputs,
                                                  const QuadratureConfig& cfg) {
    std::vector<BatchEntry> out;
    out.reserve(inputs.size());
    for (const EdgeLengths& l : inputs) out.push_back(evaluate(l, cfg));
    return out;
}

}  // namespace hytet
