#pragma once

#include "spikeseq/numerics.hpp"
#include "spikeseq/tape.hpp"

namespace spikeseq {

/// Per-feature batch normalization applied to weight-sums (the x*W products)
/// before they enter the state updates. Train mode standardizes by batch
/// statistics and maintains running estimates; eval mode uses the running
/// estimates.
struct BnState {
    static constexpr double kEps = 1e-5;

    Matrix scale;         // 1 x n, trainable
    Matrix shift;         // 1 x n, trainable
    Matrix running_mean;  // 1 x n
    Matrix running_var;   // 1 x n
    double momentum = 0.9;
    bool train_mode = true;

    BnState() = default;
    explicit BnState(std::size_t features);

    std::size_t features() const { return scale.cols(); }
};

// Normalizes a (batch x features) block. In train mode requires batch >= 2,
// updates running stats, and fills `rec` (when given) with what backward
// needs. Biased (1/B) variance is used throughout.
Matrix batchnorm(const Matrix& x, BnState& bn, BnSiteRecord* rec = nullptr);

// Gradient through train-mode batchnorm. Returns d(input); accumulates
// parameter gradients into d_scale / d_shift.
Matrix batchnorm_backward(const Matrix& d_out, const BnState& bn, const BnSiteRecord& rec,
                          Matrix& d_scale, Matrix& d_shift);

}  // namespace spikeseq
