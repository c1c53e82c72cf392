#include "spikeseq/numerics.hpp"

#include <cmath>
#include <cstring>
#include <sstream>

namespace spikeseq {

namespace {

#ifdef NDEBUG
constexpr bool kDebugChecks = false;
#else
constexpr bool kDebugChecks = true;
#endif

void debug_check(const Matrix& m, const char* where) {
    if (kDebugChecks) m.require_finite(where);
}

[[noreturn]] void throw_shape_mismatch(const char* op, const Matrix& a, const Matrix& b) {
    std::ostringstream msg;
    msg << op << ": shape mismatch " << a.shape_str() << " vs " << b.shape_str();
    throw DimensionError(msg.str());
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<double> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) {
        std::ostringstream msg;
        msg << "Matrix: data length " << data_.size() << " does not match " << shape_str();
        throw DimensionError(msg.str());
    }
    require_finite("Matrix(data)");
}

Matrix::Matrix(std::initializer_list<std::initializer_list<double>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) throw DimensionError("Matrix: ragged initializer rows");
        data_.insert(data_.end(), row.begin(), row.end());
    }
    require_finite("Matrix(init)");
}

Matrix Matrix::full(std::size_t rows, std::size_t cols, double value) {
    Matrix m(rows, cols);
    for (double& v : m.data_) v = value;
    m.require_finite("Matrix::full");
    return m;
}

std::string Matrix::shape_str() const {
    std::ostringstream s;
    s << "(" << rows_ << "x" << cols_ << ")";
    return s.str();
}

bool Matrix::all_finite() const {
    for (double v : data_) {
        if (!std::isfinite(v)) return false;
    }
    return true;
}

void Matrix::require_finite(const char* where) const {
    if (!all_finite()) {
        throw NumericError(std::string(where) + ": non-finite entry in " + shape_str() + " matrix");
    }
}

Matrix matmul(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw_shape_mismatch("matmul", a, b);
    const std::size_t m = a.rows(), k = a.cols(), n = b.cols();
    Matrix out(m, n);
    const double* ap = a.data();
    const double* bp = b.data();
    double* op = out.data();
    // i-k-j order: the k loop still accumulates left-to-right for every
    // output element, and B is traversed row-contiguously.
    for (std::size_t i = 0; i < m; ++i) {
        double* orow = op + i * n;
        for (std::size_t kk = 0; kk < k; ++kk) {
            const double aik = ap[i * k + kk];
            const double* brow = bp + kk * n;
            for (std::size_t j = 0; j < n; ++j) orow[j] += aik * brow[j];
        }
    }
    debug_check(out, "matmul");
    return out;
}

Matrix ewise(const Matrix& a, const Matrix& b, EwiseOp op) {
    if (!a.same_shape(b)) throw_shape_mismatch("ewise", a, b);
    Matrix out(a.rows(), a.cols());
    const double* ap = a.data();
    const double* bp = b.data();
    double* op_ = out.data();
    const std::size_t n = a.size();
    switch (op) {
        case EwiseOp::Add:
            for (std::size_t i = 0; i < n; ++i) op_[i] = ap[i] + bp[i];
            break;
        case EwiseOp::Sub:
            for (std::size_t i = 0; i < n; ++i) op_[i] = ap[i] - bp[i];
            break;
        case EwiseOp::Mul:
            for (std::size_t i = 0; i < n; ++i) op_[i] = ap[i] * bp[i];
            break;
    }
    debug_check(out, "ewise");
    return out;
}

Matrix add(const Matrix& a, const Matrix& b) { return ewise(a, b, EwiseOp::Add); }
Matrix sub(const Matrix& a, const Matrix& b) { return ewise(a, b, EwiseOp::Sub); }
Matrix mul(const Matrix& a, const Matrix& b) { return ewise(a, b, EwiseOp::Mul); }

Matrix transpose(const Matrix& a) {
    Matrix out(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
    return out;
}

Matrix scale(const Matrix& a, double s) {
    Matrix out = map(a, [s](double v) { return v * s; });
    debug_check(out, "scale");
    return out;
}

Matrix axpy(const Matrix& a, double s, const Matrix& b) {
    if (!a.same_shape(b)) throw_shape_mismatch("axpy", a, b);
    Matrix out(a.rows(), a.cols());
    const double* ap = a.data();
    const double* bp = b.data();
    double* op = out.data();
    for (std::size_t i = 0; i < a.size(); ++i) op[i] = ap[i] + s * bp[i];
    debug_check(out, "axpy");
    return out;
}

double sum(const Matrix& a) {
    double acc = 0.0;
    for (double v : a.values()) acc += v;
    return acc;
}

double max_value(const Matrix& a) {
    if (a.empty()) throw ValueError("max_value: empty matrix");
    double best = a.data()[0];
    for (double v : a.values()) best = v > best ? v : best;
    return best;
}

double max_abs(const Matrix& a) {
    double best = 0.0;
    for (double v : a.values()) {
        const double m = std::fabs(v);
        best = m > best ? m : best;
    }
    return best;
}

double frobenius_norm(const Matrix& a) {
    double acc = 0.0;
    for (double v : a.values()) acc += v * v;
    return std::sqrt(acc);
}

std::size_t count_nonzero(const Matrix& a) {
    std::size_t n = 0;
    for (double v : a.values()) n += (v != 0.0);
    return n;
}

// ---------------------------------------------------------------------------
// PCG32 (O'Neill). 64-bit LCG state, xorshift-rotate output.

namespace {
constexpr std::uint64_t kPcgMult = 6364136223846793005ULL;
}

Rng::Rng(std::uint64_t seed, std::uint64_t stream_id) : stream_id_(stream_id) {
    inc_ = (stream_id << 1u) | 1u;
    state_ = 0;
    next_u32();
    state_ += seed;
    next_u32();
}

std::uint32_t Rng::next_u32() {
    const std::uint64_t old = state_;
    state_ = old * kPcgMult + inc_;
    const auto xorshifted = static_cast<std::uint32_t>(((old >> 18u) ^ old) >> 27u);
    const auto rot = static_cast<std::uint32_t>(old >> 59u);
    return (xorshifted >> rot) | (xorshifted << ((32u - rot) & 31u));
}

std::uint64_t Rng::next_u64() {
    const std::uint64_t hi = next_u32();
    const std::uint64_t lo = next_u32();
    return (hi << 32u) | lo;
}

double Rng::uniform() {
    return static_cast<double>(next_u64() >> 11u) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) {
    if (!(lo < hi)) {
        std::ostringstream msg;
        msg << "Rng::uniform: lo (" << lo << ") must be < hi (" << hi << ")";
        throw ValueError(msg.str());
    }
    return lo + (hi - lo) * uniform();
}

double Rng::normal() {
    // u1 in (0, 1] so the log is finite.
    const double u1 = 1.0 - uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

Matrix Rng::uniform_matrix(std::size_t rows, std::size_t cols, double lo, double hi) {
    if (!(lo < hi)) {
        std::ostringstream msg;
        msg << "Rng::uniform_matrix: lo (" << lo << ") must be < hi (" << hi << ")";
        throw ValueError(msg.str());
    }
    Matrix out(rows, cols);
    for (double& v : out.values()) v = lo + (hi - lo) * uniform();
    return out;
}

Matrix Rng::normal_matrix(std::size_t rows, std::size_t cols, double mean, double stddev) {
    Matrix out(rows, cols);
    for (double& v : out.values()) v = mean + stddev * normal();
    return out;
}

void Rng::shuffle(std::vector<std::size_t>& items) {
    if (items.size() < 2) return;
    for (std::size_t i = items.size() - 1; i > 0; --i) {
        // Modulo bias is ~2^-32 per draw; irrelevant for shuffling and keeps
        // the draw count per element fixed.
        const std::size_t j = next_u32() % (i + 1);
        std::swap(items[i], items[j]);
    }
}

Matrix rng_uniform(Rng& rng, std::size_t rows, std::size_t cols, double lo, double hi) {
    return rng.uniform_matrix(rows, cols, lo, hi);
}

}  // namespace spikeseq
