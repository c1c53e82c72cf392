#include "spikeseq/dynamics.hpp"

#include <cmath>

namespace spikeseq {

const char* layer_kind_name(LayerKind kind) {
    switch (kind) {
        case LayerKind::Lif: return "lif";
        case LayerKind::GatedV1: return "gated_v1";
        case LayerKind::GatedV2: return "gated_v2";
        case LayerKind::Gru: return "gru";
        case LayerKind::Lstm: return "lstm";
    }
    return "?";
}

std::size_t LayerRef::input_dim() const {
    switch (kind) {
        case LayerKind::Lif: return lif->input_dim();
        case LayerKind::GatedV1:
        case LayerKind::GatedV2: return gated->input_dim();
        case LayerKind::Gru: return gru->input_dim();
        case LayerKind::Lstm: return lstm->input_dim();
    }
    return 0;
}

std::size_t LayerRef::units() const {
    switch (kind) {
        case LayerKind::Lif: return lif->units();
        case LayerKind::GatedV1:
        case LayerKind::GatedV2: return gated->units();
        case LayerKind::Gru: return gru->units();
        case LayerKind::Lstm: return lstm->units();
    }
    return 0;
}

std::size_t LayerRef::bn_site_count() const {
    switch (kind) {
        case LayerKind::Lif: return 1;
        case LayerKind::GatedV1: return 2;
        case LayerKind::GatedV2: return 4;
        default: return 0;
    }
}

double LayerRef::range_b() const {
    if (kind == LayerKind::Lif) return lif->tracker.b();
    return gated->tracker.b();
}

double LayerRef::reset_scale() const {
    const QuantConfig& q = kind == LayerKind::Lif ? lif->quant : gated->quant;
    const double b = range_b();
    if (kind == LayerKind::Lif && lif->step_gamma) return *lif->step_gamma;
    return q.reset_mode == ResetMode::Code ? q.threshold(b) : b / q.levels();
}

namespace {

Matrix sigmoid(const Matrix& a) {
    return map(a, [](double v) { return 1.0 / (1.0 + std::exp(-v)); });
}

Matrix relu(const Matrix& a) {
    return map(a, [](double v) { return v > 0.0 ? v : 0.0; });
}

Matrix tanh_m(const Matrix& a) {
    return map(a, [](double v) { return std::tanh(v); });
}

void check_input(const LayerRef& p, const LayerState& s, const Matrix& x) {
    if (x.cols() != p.input_dim()) {
        throw DimensionError(std::string("layer_step(") + layer_kind_name(p.kind) +
                             "): input " + x.shape_str() + " does not match input_dim " +
                             std::to_string(p.input_dim()));
    }
    if (x.rows() != s.I.rows() || s.I.cols() != p.units() || !s.same_shape()) {
        throw DimensionError(std::string("layer_step(") + layer_kind_name(p.kind) +
                             "): state " + s.I.shape_str() + " does not match batch " +
                             std::to_string(x.rows()) + " x units " + std::to_string(p.units()));
    }
}

// Applies BN at site `idx` when hooks carry one, else passes through.
Matrix maybe_bn(const Matrix& u, const StepHooks& hooks, std::size_t idx, StepRecord* rec) {
    if (hooks.bn.empty()) return u;
    BnSiteRecord* site = nullptr;
    if (rec) {
        if (rec->bn.size() <= idx) rec->bn.resize(idx + 1);
        site = &rec->bn[idx];
    }
    return batchnorm(u, hooks.bn[idx], site);
}

Matrix maybe_dropout(const Matrix& c, const StepHooks& hooks) {
    if (!hooks.dropout_mask) return c;
    return mul(c, *hooks.dropout_mask);
}

Matrix spiking_output(const LayerRef& p, const Matrix& v, const StepHooks& hooks) {
    const QuantConfig& q = p.kind == LayerKind::Lif ? p.lif->quant : p.gated->quant;
    const double b = p.range_b();
    if (p.kind == LayerKind::Lif && p.lif->step_gamma) return unit_step(v, *p.lif->step_gamma);
    if (hooks.smooth) return smooth_ramp(v, b, q);
    return quantize(v, b, q);
}

Matrix step_spiking(const LayerRef& p, LayerState& s, const Matrix& x, const StepHooks& hooks,
                    StepRecord* rec) {
    const double reset = p.reset_scale();
    Matrix I_new;
    if (p.kind == LayerKind::Lif) {
        Matrix drive = maybe_dropout(maybe_bn(matmul(x, p.lif->W), hooks, 0, rec), hooks);
        I_new = axpy(drive, p.lif->beta, s.I);
    } else {
        const GatedParams& g = *p.gated;
        const bool v2 = g.variant == GatedVariant::V2;
        Matrix F;
        if (g.pin_forget) {
            F = Matrix::full(x.rows(), g.units(), *g.pin_forget);
        } else {
            Matrix a_f = maybe_bn(matmul(x, g.W_fi), hooks, 0, rec);
            if (v2) a_f = add(a_f, maybe_bn(matmul(s.Y_prev, g.W_fr), hooks, 1, rec));
            F = sigmoid(a_f);
        }
        Matrix a_c = maybe_bn(matmul(x, g.W_ci), hooks, 2 - (v2 ? 0 : 1), rec);
        if (v2) a_c = add(a_c, maybe_bn(matmul(s.Y_prev, g.W_cr), hooks, 3, rec));
        Matrix C = relu(a_c);
        if (rec) rec->gates = {F, C};
        Matrix Cm = maybe_dropout(C, hooks);
        // I' = F . I + (1 - F) . C
        I_new = Matrix(F.rows(), F.cols());
        for (std::size_t i = 0; i < I_new.size(); ++i) {
            const double f = F.data()[i];
            I_new.data()[i] = f * s.I.data()[i] + (1.0 - f) * Cm.data()[i];
        }
    }
    const double alpha = p.kind == LayerKind::Lif ? p.lif->alpha : p.gated->alpha;
    Matrix V_new = axpy(axpy(I_new, alpha, s.V), -reset, s.Y_prev);
    Matrix y = spiking_output(p, V_new, hooks);
    s.I = I_new;
    s.V = V_new;
    s.Y_prev = y;
    if (rec) {
        rec->I = s.I;
        rec->V = s.V;
        rec->y = y;
    }
    return y;
}

Matrix step_gru(const GruParams& g, LayerState& s, const Matrix& x, const StepHooks& hooks,
                StepRecord* rec) {
    const Matrix& h = s.Y_prev;
    Matrix z = sigmoid(add(matmul(x, g.Wz), matmul(h, g.Uz)));
    Matrix r = sigmoid(add(matmul(x, g.Wr), matmul(h, g.Ur)));
    Matrix hc = tanh_m(add(matmul(x, g.Wh), matmul(mul(r, h), g.Uh)));
    Matrix hcm = maybe_dropout(hc, hooks);
    Matrix h_new(h.rows(), h.cols());
    for (std::size_t i = 0; i < h_new.size(); ++i) {
        const double zi = z.data()[i];
        h_new.data()[i] = zi * h.data()[i] + (1.0 - zi) * hcm.data()[i];
    }
    if (rec) {
        rec->gates = {z, r, hc};
        rec->y = h_new;
    }
    s.Y_prev = h_new;
    return h_new;
}

Matrix step_lstm(const LstmParams& l, LayerState& s, const Matrix& x, const StepHooks& hooks,
                 StepRecord* rec) {
    const Matrix& h = s.Y_prev;
    const Matrix& c = s.I;
    Matrix gi = sigmoid(add(matmul(x, l.Wi), matmul(h, l.Ui)));
    Matrix gf = sigmoid(add(matmul(x, l.Wf), matmul(h, l.Uf)));
    Matrix go = sigmoid(add(matmul(x, l.Wo), matmul(h, l.Uo)));
    Matrix gg = tanh_m(add(matmul(x, l.Wg), matmul(h, l.Ug)));
    Matrix ggm = maybe_dropout(gg, hooks);
    Matrix c_new = add(mul(gf, c), mul(gi, ggm));
    Matrix h_new = mul(go, tanh_m(c_new));
    if (rec) {
        rec->gates = {gi, gf, go, gg};
        rec->I = c_new;
        rec->y = h_new;
    }
    s.I = c_new;
    s.Y_prev = h_new;
    return h_new;
}

}  // namespace

Matrix layer_step(const LayerRef& p, LayerState& s, const Matrix& x, const StepHooks& hooks,
                  StepRecord* rec) {
    check_input(p, s, x);
    if (rec) rec->x = x;
    switch (p.kind) {
        case LayerKind::Lif:
        case LayerKind::GatedV1:
        case LayerKind::GatedV2: return step_spiking(p, s, x, hooks, rec);
        case LayerKind::Gru: return step_gru(*p.gru, s, x, hooks, rec);
        case LayerKind::Lstm: return step_lstm(*p.lstm, s, x, hooks, rec);
    }
    throw StateError("layer_step: unknown kind");
}

std::vector<Matrix> layer_forward(const LayerRef& p, std::span<const Matrix> x_seq,
                                  const StepHooks& hooks, LayerTape* tape) {
    if (x_seq.empty()) throw ValueError("layer_forward: empty sequence");
    LayerState s = reset_state(x_seq.front().rows(), p.units());
    if (tape) {
        tape->kind = p.kind;
        tape->b = p.spiking() ? p.range_b() : 1.0;
        tape->smooth = hooks.smooth;
        tape->dropout_mask = hooks.dropout_mask ? *hooks.dropout_mask : Matrix();
        tape->steps.clear();
        tape->steps.reserve(x_seq.size());
    }
    std::vector<Matrix> ys;
    ys.reserve(x_seq.size());
    for (const Matrix& x : x_seq) {
        StepRecord rec;
        Matrix y = layer_step(p, s, x, hooks, tape ? &rec : nullptr);
        if (tape) tape->steps.push_back(std::move(rec));
        ys.push_back(std::move(y));
    }
    return ys;
}

}  // namespace spikeseq
