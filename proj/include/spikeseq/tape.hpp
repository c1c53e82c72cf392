#pragma once

#include <vector>

#include "spikeseq/numerics.hpp"

namespace spikeseq {

enum class LayerKind { Lif, GatedV1, GatedV2, Gru, Lstm };

const char* layer_kind_name(LayerKind kind);

// Per-step, per-site batch-normalization intermediates needed by backward.
struct BnSiteRecord {
    Matrix xhat;      // batch x n, normalized pre-affine values
    Matrix inv_std;   // 1 x n
};

// One time-step of saved activations.
//
// Field use per layer kind:
//   Lif:     x, I, V, y
//   GatedV*: x, I, V, y, gates = {F, C}          (C post-ReLU, pre-dropout)
//   Gru:     x, y (= h), gates = {z, r, hc}      (hc pre-dropout)
//   Lstm:    x, I (= cell c), y (= h), gates = {i, f, o, g}  (g pre-dropout)
struct StepRecord {
    Matrix x;
    Matrix I;
    Matrix V;
    Matrix y;
    std::vector<Matrix> gates;
    std::vector<BnSiteRecord> bn;
};

/// Saved forward pass of one layer over one sequence batch. Immutable after
/// the forward; backward and the oracles replay it.
struct LayerTape {
    LayerKind kind = LayerKind::Lif;
    double b = 1.0;        // quantizer range in effect during this forward
    bool smooth = false;   // ramp outputs instead of integer codes
    Matrix dropout_mask;   // empty when dropout was off
    std::vector<StepRecord> steps;

    std::size_t step_count() const { return steps.size(); }
};

}  // namespace spikeseq
