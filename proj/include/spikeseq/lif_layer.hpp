#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "spikeseq/activation.hpp"
#include "spikeseq/numerics.hpp"
#include "spikeseq/tape.hpp"

namespace spikeseq {

/// Traditional leaky integrate-and-fire layer. alpha and beta are the
/// membrane and synaptic-current decay factors.
struct LifParams {
    Matrix W;  // m x n
    double alpha = 0.95;
    double beta = 0.9;
    QuantConfig quant;
    RangeTracker tracker;
    // When set, outputs are unit_step(V - step_gamma) and the reset subtracts
    // step_gamma * Y: the plain binary-spike rule with an absolute threshold.
    std::optional<double> step_gamma;

    std::size_t input_dim() const { return W.rows(); }
    std::size_t units() const { return W.cols(); }
    void validate() const;
};

/// Recurrent state carried between time-steps: synaptic currents, membrane
/// potentials and the previous output codes, all batch x n.
struct LayerState {
    Matrix I;
    Matrix V;
    Matrix Y_prev;

    bool same_shape() const { return I.same_shape(V) && I.same_shape(Y_prev); }
};

LayerState reset_state(std::size_t batch, std::size_t units);

// One step of Eq.-style LIF dynamics:
//   I' = beta * I + x * W
//   V' = alpha * V + I' - reset(Y_prev)
//   y  = quantize(V', b, quant)
std::pair<LayerState, Matrix> lif_step(const LifParams& p, const LayerState& s, const Matrix& x);

// Runs lif_step for every frame starting from the zero state. Records the
// per-step activations when a tape is supplied.
std::vector<Matrix> lif_forward(const LifParams& p, std::span<const Matrix> x_seq,
                                LayerTape* tape = nullptr);

std::size_t param_count(const LifParams& p);

}  // namespace spikeseq
