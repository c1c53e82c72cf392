#pragma once

#include <utility>
#include <vector>

#include "spikeseq/numerics.hpp"
#include "spikeseq/tape.hpp"

namespace spikeseq {

/// Bias-free unidirectional GRU cell. Three input matrices (m x n) and three
/// recurrent matrices (n x n): 3(mn + n^2) parameters.
struct GruParams {
    Matrix Wz, Wr, Wh;  // m x n
    Matrix Uz, Ur, Uh;  // n x n

    std::size_t input_dim() const { return Wz.rows(); }
    std::size_t units() const { return Wz.cols(); }
    void validate() const;
};

/// Bias-free unidirectional LSTM cell (input/forget/output/candidate gates):
/// 4(mn + n^2) parameters.
struct LstmParams {
    Matrix Wi, Wf, Wo, Wg;  // m x n
    Matrix Ui, Uf, Uo, Ug;  // n x n

    std::size_t input_dim() const { return Wi.rows(); }
    std::size_t units() const { return Wi.cols(); }
    void validate() const;
};

// z = sig(xWz + hUz); r = sig(xWr + hUr); hc = tanh(xWh + (r.h)Uh)
// h' = z . h + (1 - z) . hc
Matrix gru_step(const GruParams& p, const Matrix& h, const Matrix& x);

// i,f,o = sig(...); g = tanh(...); c' = f . c + i . g; h' = o . tanh(c')
std::pair<Matrix, Matrix> lstm_step(const LstmParams& p, const Matrix& h, const Matrix& c,
                                    const Matrix& x);

std::vector<Matrix> gru_forward(const GruParams& p, std::span<const Matrix> x_seq,
                                LayerTape* tape = nullptr);
std::vector<Matrix> lstm_forward(const LstmParams& p, std::span<const Matrix> x_seq,
                                 LayerTape* tape = nullptr);

std::size_t param_count(const GruParams& p);
std::size_t param_count(const LstmParams& p);

}  // namespace spikeseq
