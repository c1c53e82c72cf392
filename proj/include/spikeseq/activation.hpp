#pragma once

#include "spikeseq/numerics.hpp"

namespace spikeseq {

// How the membrane potential is reduced after an output is emitted.
// `Code` subtracts threshold * code (the binary-spike rule applied to raw
// codes); `Dequantized` subtracts (b / 2^n_bits) * code, the potential the
// code stands for.
enum class ResetMode { Code, Dequantized };

/// Output-generation settings for a spiking layer. The firing threshold is
/// constrained to gamma = k_threshold * b / 2^n_bits.
struct QuantConfig {
    int n_bits = 1;
    int k_threshold = 1;
    ResetMode reset_mode = ResetMode::Dequantized;

    int levels() const { return 1 << n_bits; }
    double threshold(double b) const { return static_cast<double>(k_threshold) * b / levels(); }
    void validate() const;
};

/// Running estimate of the maximum membrane potential b, kept as an
/// exponential moving average over batch maxima. Frozen at evaluation time.
class RangeTracker {
public:
    RangeTracker() = default;
    explicit RangeTracker(double momentum) : momentum_(momentum) {}

    double b() const { return b_ema_; }
    double momentum() const { return momentum_; }
    bool frozen() const { return frozen_; }
    bool initialized() const { return initialized_; }

    // First update adopts batch_max outright; later updates blend with the
    // configured momentum. Updating a frozen tracker is a state error.
    void update(double batch_max);

    void freeze() { frozen_ = true; }
    void unfreeze() { frozen_ = false; }

    void restore(double b_ema, double momentum, bool initialized, bool frozen) {
        b_ema_ = b_ema;
        momentum_ = momentum;
        initialized_ = initialized;
        frozen_ = frozen;
    }

private:
    double b_ema_ = 1.0;  // pre-initialization default scale
    double momentum_ = 0.99;
    bool initialized_ = false;
    bool frozen_ = false;
};

RangeTracker ema_update(RangeTracker tracker, double batch_max);

enum class SurrogateKind { ClippedLinear };

/// Pseudo-derivative used in place of the quantizer's ill-defined one.
/// The support is [0, b) in potential units regardless of the threshold.
struct SurrogateConfig {
    SurrogateKind kind = SurrogateKind::ClippedLinear;
};

// Entrywise 1 where v > gamma, else 0 (strict inequality).
Matrix unit_step(const Matrix& v, double gamma);

// Multi-bit spiking activation: 0 on v <= gamma, else floor(v / b * 2^n_bits)
// clamped to the top code. Codes are exact integers stored as reals.
Matrix quantize(const Matrix& v, double b, const QuantConfig& cfg);
double quantize_scalar(double v, double b, const QuantConfig& cfg);

// Pseudo-derivative 2^n_bits / b on 0 < v < b, zero elsewhere. Gradient is
// passed through the sub-threshold band as well; see quantize.
Matrix surrogate_grad(const Matrix& v, double b, const QuantConfig& cfg,
                      const SurrogateConfig& s = {});
double surrogate_grad_scalar(double v, double b, const QuantConfig& cfg);

// Continuous stand-in for quantize whose exact derivative is surrogate_grad:
// 0 below 0, v * 2^n_bits / b on (0, b), 2^n_bits above. Used by the smooth
// forward mode that makes finite-difference checks meaningful.
Matrix smooth_ramp(const Matrix& v, double b, const QuantConfig& cfg);
double smooth_ramp_scalar(double v, double b, const QuantConfig& cfg);

}  // namespace spikeseq
