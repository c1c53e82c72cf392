#include "spikeseq/baselines.hpp"

#include "spikeseq/dynamics.hpp"
#include "spikeseq/lif_layer.hpp"

namespace spikeseq {

namespace {
void check_cell(const Matrix& Wx, const Matrix& U, const char* who) {
    if (U.rows() != Wx.cols() || U.cols() != Wx.cols()) {
        throw DimensionError(std::string(who) + ": recurrent matrix " + U.shape_str() +
                             " must be units x units for input matrix " + Wx.shape_str());
    }
}
}  // namespace

void GruParams::validate() const {
    for (const Matrix* w : {&Wz, &Wr, &Wh}) {
        if (!w->same_shape(Wz)) throw DimensionError("GruParams: input matrices must match");
    }
    for (const Matrix* u : {&Uz, &Ur, &Uh}) check_cell(Wz, *u, "GruParams");
}

void LstmParams::validate() const {
    for (const Matrix* w : {&Wi, &Wf, &Wo, &Wg}) {
        if (!w->same_shape(Wi)) throw DimensionError("LstmParams: input matrices must match");
    }
    for (const Matrix* u : {&Ui, &Uf, &Uo, &Ug}) check_cell(Wi, *u, "LstmParams");
}

Matrix gru_step(const GruParams& p, const Matrix& h, const Matrix& x) {
    p.validate();
    LayerState s = reset_state(x.rows(), p.units());
    s.Y_prev = h;
    return layer_step(LayerRef(p), s, x, StepHooks{}, nullptr);
}

std::pair<Matrix, Matrix> lstm_step(const LstmParams& p, const Matrix& h, const Matrix& c,
                                    const Matrix& x) {
    p.validate();
    LayerState s = reset_state(x.rows(), p.units());
    s.Y_prev = h;
    s.I = c;
    Matrix h_new = layer_step(LayerRef(p), s, x, StepHooks{}, nullptr);
    return {std::move(h_new), std::move(s.I)};
}

std::vector<Matrix> gru_forward(const GruParams& p, std::span<const Matrix> x_seq,
                                LayerTape* tape) {
    p.validate();
    return layer_forward(LayerRef(p), x_seq, StepHooks{}, tape);
}

std::vector<Matrix> lstm_forward(const LstmParams& p, std::span<const Matrix> x_seq,
                                 LayerTape* tape) {
    p.validate();
    return layer_forward(LayerRef(p), x_seq, StepHooks{}, tape);
}

std::size_t param_count(const GruParams& p) {
    return 3 * (p.input_dim() * p.units() + p.units() * p.units());
}

std::size_t param_count(const LstmParams& p) {
    return 4 * (p.input_dim() * p.units() + p.units() * p.units());
}

}  // namespace spikeseq
