#pragma once

#include <span>

#include "spikeseq/baselines.hpp"
#include "spikeseq/batchnorm.hpp"
#include "spikeseq/gated_layer.hpp"
#include "spikeseq/lif_layer.hpp"
#include "spikeseq/tape.hpp"

namespace spikeseq {

/// Non-owning view of one layer's parameters, whichever kind it is.
struct LayerRef {
    LayerKind kind = LayerKind::Lif;
    const LifParams* lif = nullptr;
    const GatedParams* gated = nullptr;
    const GruParams* gru = nullptr;
    const LstmParams* lstm = nullptr;

    LayerRef() = default;
    LayerRef(const LifParams& p) : kind(LayerKind::Lif), lif(&p) {}
    LayerRef(const GatedParams& p)
        : kind(p.variant == GatedVariant::V1 ? LayerKind::GatedV1 : LayerKind::GatedV2),
          gated(&p) {}
    LayerRef(const GruParams& p) : kind(LayerKind::Gru), gru(&p) {}
    LayerRef(const LstmParams& p) : kind(LayerKind::Lstm), lstm(&p) {}

    std::size_t input_dim() const;
    std::size_t units() const;
    bool spiking() const { return kind != LayerKind::Gru && kind != LayerKind::Lstm; }
    // Number of batch-normalization sites the hooked forward expects.
    std::size_t bn_site_count() const;
    // Quantizer range in effect (spiking kinds only).
    double range_b() const;
    // Amount subtracted per emitted code unit in the membrane reset.
    double reset_scale() const;
};

/// Optional training-time machinery threaded through the forward pass.
/// All fields off reproduces the bare spec dynamics.
struct StepHooks {
    bool smooth = false;                     // ramp outputs instead of codes
    std::span<BnState> bn = {};              // one state per BN site
    const Matrix* dropout_mask = nullptr;    // candidate-path mask, batch x n
};

// Advances one step; returns the emitted output. Fills `rec` when given.
Matrix layer_step(const LayerRef& p, LayerState& s, const Matrix& x, const StepHooks& hooks,
                  StepRecord* rec);

// Full forward from the zero state. Errors on an empty sequence.
std::vector<Matrix> layer_forward(const LayerRef& p, std::span<const Matrix> x_seq,
                                  const StepHooks& hooks, LayerTape* tape);

}  // namespace spikeseq
