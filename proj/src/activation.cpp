#include "spikeseq/activation.hpp"

#include <cmath>
#include <sstream>

namespace spikeseq {

void QuantConfig::validate() const {
    if (n_bits < 1 || n_bits > 16) {
        std::ostringstream msg;
        msg << "QuantConfig: n_bits must be in [1, 16], got " << n_bits;
        throw ValueError(msg.str());
    }
    if (k_threshold < 0 || k_threshold >= levels()) {
        std::ostringstream msg;
        msg << "QuantConfig: k_threshold must be in [0, 2^n_bits), got " << k_threshold
            << " with n_bits=" << n_bits;
        throw ValueError(msg.str());
    }
}

void RangeTracker::update(double batch_max) {
    if (frozen_) throw StateError("RangeTracker: update on a frozen tracker");
    if (!std::isfinite(batch_max)) throw ValueError("RangeTracker: batch_max must be finite");
    if (!initialized_) {
        b_ema_ = batch_max;
        initialized_ = true;
    } else {
        b_ema_ = momentum_ * b_ema_ + (1.0 - momentum_) * batch_max;
    }
}

RangeTracker ema_update(RangeTracker tracker, double batch_max) {
    tracker.update(batch_max);
    return tracker;
}

Matrix unit_step(const Matrix& v, double gamma) {
    return map(v, [gamma](double x) { return x > gamma ? 1.0 : 0.0; });
}

static void check_range(double b, const QuantConfig& cfg) {
    cfg.validate();
    if (!(b > 0.0)) {
        std::ostringstream msg;
        msg << "quantize: potential range b must be > 0, got " << b;
        throw ValueError(msg.str());
    }
}

double quantize_scalar(double v, double b, const QuantConfig& cfg) {
    const double levels = cfg.levels();
    const double gamma = cfg.threshold(b);
    if (v <= gamma) return 0.0;
    double code = std::floor(v / b * levels);
    if (code > levels - 1.0) code = levels - 1.0;
    if (code < 0.0) code = 0.0;
    return code;
}

Matrix quantize(const Matrix& v, double b, const QuantConfig& cfg) {
    check_range(b, cfg);
    return map(v, [&](double x) { return quantize_scalar(x, b, cfg); });
}

double surrogate_grad_scalar(double v, double b, const QuantConfig& cfg) {
    return (v > 0.0 && v < b) ? cfg.levels() / b : 0.0;
}

Matrix surrogate_grad(const Matrix& v, double b, const QuantConfig& cfg, const SurrogateConfig&) {
    check_range(b, cfg);
    return map(v, [&](double x) { return surrogate_grad_scalar(x, b, cfg); });
}

double smooth_ramp_scalar(double v, double b, const QuantConfig& cfg) {
    const double levels = cfg.levels();
    if (v <= 0.0) return 0.0;
    if (v >= b) return levels;
    return v / b * levels;
}

Matrix smooth_ramp(const Matrix& v, double b, const QuantConfig& cfg) {
    check_range(b, cfg);
    return map(v, [&](double x) { return smooth_ramp_scalar(x, b, cfg); });
}

}  // namespace spikeseq
