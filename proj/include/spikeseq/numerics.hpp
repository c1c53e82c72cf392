#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace spikeseq {

// Error hierarchy shared by all modules.
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct ValueError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct StateError : std::logic_error {
    using std::logic_error::logic_error;
};
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Dense row-major matrix of 64-bit reals. The universal value carrier:
/// batches, weights, states and gradients are all Matrix instances.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);  // zero-filled
    Matrix(std::size_t rows, std::size_t cols, std::vector<double> data);
    Matrix(std::initializer_list<std::initializer_list<double>> rows);

    static Matrix zeros(std::size_t rows, std::size_t cols) { return {rows, cols}; }
    static Matrix full(std::size_t rows, std::size_t cols, double value);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t size() const { return data_.size(); }
    bool empty() const { return data_.empty(); }

    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    double* data() { return data_.data(); }
    const double* data() const { return data_.data(); }
    std::span<double> values() { return data_; }
    std::span<const double> values() const { return data_; }

    bool same_shape(const Matrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_;
    }
    std::string shape_str() const;

    bool all_finite() const;
    // Throws NumericError when a NaN/Inf slipped in. `where` names the kernel.
    void require_finite(const char* where) const;

    bool operator==(const Matrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

enum class EwiseOp { Add, Sub, Mul };

// Product with a fixed left-to-right summation order over the inner
// dimension, so results are bit-identical run to run.
Matrix matmul(const Matrix& a, const Matrix& b);
Matrix ewise(const Matrix& a, const Matrix& b, EwiseOp op);
Matrix add(const Matrix& a, const Matrix& b);
Matrix sub(const Matrix& a, const Matrix& b);
Matrix mul(const Matrix& a, const Matrix& b);

Matrix transpose(const Matrix& a);
Matrix scale(const Matrix& a, double s);
// a + s * b, shapes must match.
Matrix axpy(const Matrix& a, double s, const Matrix& b);

double sum(const Matrix& a);
double max_value(const Matrix& a);
double max_abs(const Matrix& a);
double frobenius_norm(const Matrix& a);
std::size_t count_nonzero(const Matrix& a);

template <typename F>
Matrix map(const Matrix& a, F&& f) {
    Matrix out(a.rows(), a.cols());
    const double* src = a.data();
    double* dst = out.data();
    for (std::size_t i = 0; i < a.size(); ++i) dst[i] = f(src[i]);
    return out;
}

/// Deterministic PCG32 stream. Identical (seed, stream_id, call sequence)
/// gives identical output on every platform; no libc or libstdc++
/// distributions are involved anywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed, std::uint64_t stream_id = 0);

    std::uint32_t next_u32();
    std::uint64_t next_u64();
    // Uniform in [0, 1) with 53 random bits.
    double uniform();
    double uniform(double lo, double hi);
    // Box-Muller without caching, so the state is exactly (state, inc).
    double normal();

    Matrix uniform_matrix(std::size_t rows, std::size_t cols, double lo, double hi);
    Matrix normal_matrix(std::size_t rows, std::size_t cols, double mean, double stddev);

    void shuffle(std::vector<std::size_t>& items);

    std::uint64_t stream_id() const { return stream_id_; }
    // Raw state for checkpointing.
    std::uint64_t state() const { return state_; }
    std::uint64_t increment() const { return inc_; }
    void restore(std::uint64_t state, std::uint64_t inc, std::uint64_t stream_id) {
        state_ = state;
        inc_ = inc;
        stream_id_ = stream_id;
    }

private:
    std::uint64_t state_ = 0;
    std::uint64_t inc_ = 0;
    std::uint64_t stream_id_ = 0;
};

Matrix rng_uniform(Rng& rng, std::size_t rows, std::size_t cols, double lo, double hi);

}  // namespace spikeseq
