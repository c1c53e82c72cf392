#include "spikeseq/gated_layer.hpp"

#include "spikeseq/dynamics.hpp"

namespace spikeseq {

void GatedParams::validate() const {
    quant.validate();
    if (!(alpha > 0.0 && alpha <= 1.0)) throw ValueError("GatedParams: alpha must lie in (0, 1]");
    if (!W_fi.same_shape(W_ci)) {
        throw DimensionError("GatedParams: W_fi " + W_fi.shape_str() + " and W_ci " +
                             W_ci.shape_str() + " must match");
    }
    const std::size_t n = units();
    if (variant == GatedVariant::V1) {
        if (!W_fr.empty() || !W_cr.empty()) {
            throw ValueError("GatedParams: v1 must not carry recurrent matrices");
        }
    } else {
        if (W_fr.rows() != n || W_fr.cols() != n || W_cr.rows() != n || W_cr.cols() != n) {
            throw DimensionError("GatedParams: v2 recurrent matrices must be " +
                                 std::to_string(n) + "x" + std::to_string(n));
        }
    }
}

std::pair<LayerState, Matrix> gated_step(const GatedParams& p, const LayerState& s,
                                         const Matrix& x) {
    p.validate();
    LayerState next = s;
    Matrix y = layer_step(LayerRef(p), next, x, StepHooks{}, nullptr);
    return {std::move(next), std::move(y)};
}

std::vector<Matrix> gated_forward(const GatedParams& p, std::span<const Matrix> x_seq,
                                  LayerTape* tape) {
    p.validate();
    return layer_forward(LayerRef(p), x_seq, StepHooks{}, tape);
}

std::size_t param_count(const GatedParams& p) {
    const std::size_t mn = p.W_fi.rows() * p.W_fi.cols();
    const std::size_t n = p.units();
    return p.variant == GatedVariant::V1 ? 2 * mn : 2 * (mn + n * n);
}

std::size_t param_count_formula(LayerKind kind, std::size_t m, std::size_t n) {
    switch (kind) {
        case LayerKind::Lif: return m * n;
        case LayerKind::GatedV1: return 2 * m * n;
        case LayerKind::GatedV2: return 2 * (m * n + n * n);
        case LayerKind::Gru: return 3 * (m * n + n * n);
        case LayerKind::Lstm: return 4 * (m * n + n * n);
    }
    return 0;
}

}  // namespace spikeseq
