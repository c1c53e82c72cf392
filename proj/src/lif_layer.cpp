#include "spikeseq/lif_layer.hpp"

#include "spikeseq/dynamics.hpp"

namespace spikeseq {

void LifParams::validate() const {
    quant.validate();
    if (!(alpha > 0.0 && alpha <= 1.0) || !(beta > 0.0 && beta <= 1.0)) {
        throw ValueError("LifParams: alpha and beta must lie in (0, 1]");
    }
    if (W.rows() == 0 || W.cols() == 0) throw ValueError("LifParams: empty weight matrix");
}

LayerState reset_state(std::size_t batch, std::size_t units) {
    if (batch < 1 || units < 1) throw ValueError("reset_state: batch and units must be >= 1");
    return {Matrix(batch, units), Matrix(batch, units), Matrix(batch, units)};
}

std::pair<LayerState, Matrix> lif_step(const LifParams& p, const LayerState& s, const Matrix& x) {
    LayerState next = s;
    Matrix y = layer_step(LayerRef(p), next, x, StepHooks{}, nullptr);
    return {std::move(next), std::move(y)};
}

std::vector<Matrix> lif_forward(const LifParams& p, std::span<const Matrix> x_seq,
                                LayerTape* tape) {
    return layer_forward(LayerRef(p), x_seq, StepHooks{}, tape);
}

std::size_t param_count(const LifParams& p) { return p.W.rows() * p.W.cols(); }

}  // namespace spikeseq
