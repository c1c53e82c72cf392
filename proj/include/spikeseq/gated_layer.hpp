#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "spikeseq/activation.hpp"
#include "spikeseq/lif_layer.hpp"
#include "spikeseq/numerics.hpp"
#include "spikeseq/tape.hpp"

namespace spikeseq {

enum class GatedVariant { V1, V2 };

/// Spiking layer with gated synaptic-current updates. v1 derives the forget
/// and candidate signals from the inputs alone; v2 additionally feeds the
/// previous output codes through recurrent weight matrices.
struct GatedParams {
    GatedVariant variant = GatedVariant::V1;
    Matrix W_fi;  // m x n
    Matrix W_ci;  // m x n
    Matrix W_fr;  // n x n, v2 only
    Matrix W_cr;  // n x n, v2 only
    double alpha = 0.95;
    QuantConfig quant;
    RangeTracker tracker;
    // Test hook: forces the forget signal to a constant, bypassing the
    // sigmoid. Makes the gradient-preservation property directly assertable.
    std::optional<double> pin_forget;

    std::size_t input_dim() const { return W_fi.rows(); }
    std::size_t units() const { return W_fi.cols(); }
    void validate() const;
};

// One step of the gated dynamics:
//   F  = sigmoid(x * W_fi [+ Y_prev * W_fr])
//   C  = relu(x * W_ci [+ Y_prev * W_cr])
//   I' = F . I + (1 - F) . C
//   V' = alpha * V + I' - reset(Y_prev);  y = quantize(V', b, quant)
std::pair<LayerState, Matrix> gated_step(const GatedParams& p, const LayerState& s,
                                         const Matrix& x);

std::vector<Matrix> gated_forward(const GatedParams& p, std::span<const Matrix> x_seq,
                                  LayerTape* tape = nullptr);

std::size_t param_count(const GatedParams& p);

// Closed-form trainable-parameter counts per architecture.
std::size_t param_count_formula(LayerKind kind, std::size_t m, std::size_t n);

}  // namespace spikeseq
