#include "spikeseq/batchnorm.hpp"

#include <cmath>

namespace spikeseq {

BnState::BnState(std::size_t features)
    : scale(Matrix::full(1, features, 1.0)),
      shift(1, features),
      running_mean(1, features),
      running_var(Matrix::full(1, features, 1.0)) {}

Matrix batchnorm(const Matrix& x, BnState& bn, BnSiteRecord* rec) {
    const std::size_t batch = x.rows();
    const std::size_t n = x.cols();
    if (n != bn.features()) {
        throw DimensionError("batchnorm: feature mismatch " + x.shape_str() + " vs " +
                             bn.scale.shape_str());
    }
    Matrix out(batch, n);
    if (bn.train_mode) {
        if (batch < 2) throw ValueError("batchnorm: train mode needs batch >= 2");
        Matrix mean(1, n), var(1, n), inv_std(1, n);
        for (std::size_t j = 0; j < n; ++j) {
            double m = 0.0;
            for (std::size_t i = 0; i < batch; ++i) m += x(i, j);
            m /= static_cast<double>(batch);
            double v = 0.0;
            for (std::size_t i = 0; i < batch; ++i) {
                const double d = x(i, j) - m;
                v += d * d;
            }
            v /= static_cast<double>(batch);
            mean(0, j) = m;
            var(0, j) = v;
            inv_std(0, j) = 1.0 / std::sqrt(v + BnState::kEps);
        }
        Matrix xhat(batch, n);
        for (std::size_t i = 0; i < batch; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                xhat(i, j) = (x(i, j) - mean(0, j)) * inv_std(0, j);
                out(i, j) = bn.scale(0, j) * xhat(i, j) + bn.shift(0, j);
            }
        for (std::size_t j = 0; j < n; ++j) {
            bn.running_mean(0, j) = bn.momentum * bn.running_mean(0, j) + (1.0 - bn.momentum) * mean(0, j);
            bn.running_var(0, j) = bn.momentum * bn.running_var(0, j) + (1.0 - bn.momentum) * var(0, j);
        }
        if (rec) {
            rec->xhat = std::move(xhat);
            rec->inv_std = std::move(inv_std);
        }
    } else {
        for (std::size_t j = 0; j < n; ++j) {
            const double inv = 1.0 / std::sqrt(bn.running_var(0, j) + BnState::kEps);
            for (std::size_t i = 0; i < batch; ++i) {
                out(i, j) = bn.scale(0, j) * (x(i, j) - bn.running_mean(0, j)) * inv + bn.shift(0, j);
            }
        }
    }
    return out;
}

Matrix batchnorm_backward(const Matrix& d_out, const BnState& bn, const BnSiteRecord& rec,
                          Matrix& d_scale, Matrix& d_shift) {
    const std::size_t batch = d_out.rows();
    const std::size_t n = d_out.cols();
    Matrix dx(batch, n);
    for (std::size_t j = 0; j < n; ++j) {
        double sum_dy = 0.0, sum_dy_xhat = 0.0;
        for (std::size_t i = 0; i < batch; ++i) {
            sum_dy += d_out(i, j);
            sum_dy_xhat += d_out(i, j) * rec.xhat(i, j);
        }
        d_shift(0, j) += sum_dy;
        d_scale(0, j) += sum_dy_xhat;
        const double g = bn.scale(0, j) * rec.inv_std(0, j) / static_cast<double>(batch);
        for (std::size_t i = 0; i < batch; ++i) {
            dx(i, j) = g * (static_cast<double>(batch) * d_out(i, j) - sum_dy -
                            rec.xhat(i, j) * sum_dy_xhat);
        }
    }
    return dx;
}

}  // namespace spikeseq
