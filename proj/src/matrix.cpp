#include "robctrl/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace robctrl::num {

Matrix Matrix::from_rows(std::initializer_list<std::initializer_list<double>> rows) {
    Matrix m(rows.size(), rows.size() ? rows.begin()->size() : 0);
    std::size_t i = 0;
    for (const auto& r : rows) {
        if (r.size() != m.cols_) throw DimensionError("from_rows: ragged rows");
        std::copy(r.begin(), r.end(), m.row(i));
        ++i;
    }
    return m;
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Matrix Matrix::gaussian(std::size_t rows, std::size_t cols, Rng& rng, double stddev) {
    Matrix m(rows, cols);
    std::normal_distribution<double> dist(0.0, stddev);
    for (auto& x : m.data_) x = dist(rng);
    return m;
}

void Matrix::set_row(std::size_t i, const std::vector<double>& v) {
    if (v.size() != cols_) throw DimensionError("set_row: width mismatch");
    std::copy(v.begin(), v.end(), row(i));
}

bool Matrix::all_finite() const {
    return std::all_of(data_.begin(), data_.end(), [](double x) { return std::isfinite(x); });
}

Matrix& Matrix::operator+=(const Matrix& o) {
    if (!same_shape(o)) throw DimensionError("operator+=: shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
    if (!same_shape(o)) throw DimensionError("operator-=: shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
}

Matrix& Matrix::operator*=(double s) {
    for (auto& x : data_) x *= s;
    return *this;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw DimensionError("matmul: inner dimensions differ");
    Matrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        const double* arow = a.row(i);
        double* orow = out.row(i);
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const double aik = arow[k];
            if (aik == 0.0) continue;
            const double* brow = b.row(k);
            for (std::size_t j = 0; j < b.cols(); ++j) orow[j] += aik * brow[j];
        }
    }
    return out;
}

Matrix transpose(const Matrix& m) {
    Matrix out(m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(j, i) = m(i, j);
    return out;
}

Matrix hadamard(const Matrix& a, const Matrix& b) {
    if (!a.same_shape(b)) throw DimensionError("hadamard: shape mismatch");
    Matrix out = a;
    for (std::size_t i = 0; i < out.rows(); ++i)
        for (std::size_t j = 0; j < out.cols(); ++j) out(i, j) *= b(i, j);
    return out;
}

Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
Matrix operator*(Matrix a, double s) { return a *= s; }

double frobenius_sq(const Matrix& m) {
    double s = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) s += m(i, j) * m(i, j);
    return s;
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
    if (!a.same_shape(b)) throw DimensionError("max_abs_diff: shape mismatch");
    double d = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            d = std::max(d, std::abs(a(i, j) - b(i, j)));
    return d;
}

double sigmoid_scalar(double x) {
    if (x >= 0.0) return 1.0 / (1.0 + std::exp(-x));
    const double e = std::exp(x);
    return e / (1.0 + e);
}

static void require_finite(const Matrix& x, const char* who) {
    if (!x.all_finite()) throw NumericError(std::string(who) + ": non-finite input");
}

Matrix relu(const Matrix& x) {
    require_finite(x, "relu");
    Matrix out = x;
    for (std::size_t i = 0; i < out.rows(); ++i)
        for (std::size_t j = 0; j < out.cols(); ++j)
            if (out(i, j) < 0.0) out(i, j) = 0.0;
    return out;
}

Matrix sigmoid(const Matrix& x) {
    require_finite(x, "sigmoid");
    Matrix out = x;
    for (std::size_t i = 0; i < out.rows(); ++i)
        for (std::size_t j = 0; j < out.cols(); ++j) out(i, j) = sigmoid_scalar(out(i, j));
    return out;
}

Matrix softmax_rows(const Matrix& x) {
    require_finite(x, "softmax");
    Matrix out = x;
    for (std::size_t i = 0; i < out.rows(); ++i) {
        double mx = -std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < out.cols(); ++j) mx = std::max(mx, out(i, j));
        double sum = 0.0;
        for (std::size_t j = 0; j < out.cols(); ++j) {
            out(i, j) = std::exp(out(i, j) - mx);
            sum += out(i, j);
        }
        for (std::size_t j = 0; j < out.cols(); ++j) out(i, j) /= sum;
    }
    return out;
}

Matrix activate(const Matrix& x, Activation kind) {
    switch (kind) {
        case Activation::Relu: return relu(x);
        case Activation::Sigmoid: return sigmoid(x);
        case Activation::SoftmaxRows: return softmax_rows(x);
    }
    throw DomainError("activate: unknown kind");
}

// log softmax(x)[label] via log-sum-exp.
static double row_log_prob(const Matrix& logits, std::size_t i, int label) {
    double mx = -std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < logits.cols(); ++j) mx = std::max(mx, logits(i, j));
    double sum = 0.0;
    for (std::size_t j = 0; j < logits.cols(); ++j) sum += std::exp(logits(i, j) - mx);
    return logits(i, static_cast<std::size_t>(label)) - mx - std::log(sum);
}

double cross_entropy(const Matrix& logits, const std::vector<int>& labels,
                     const std::vector<std::size_t>& mask) {
    if (mask.empty()) throw DomainError("cross_entropy: empty mask");
    double total = 0.0;
    for (std::size_t i : mask) {
        if (i >= logits.rows()) throw DimensionError("cross_entropy: mask index out of range");
        const int y = labels[i];
        if (y < 0 || static_cast<std::size_t>(y) >= logits.cols())
            throw DomainError("cross_entropy: label out of range");
        total -= row_log_prob(logits, i, y);
    }
    return total / static_cast<double>(mask.size());
}

Matrix cross_entropy_backward(const Matrix& logits, const std::vector<int>& labels,
                              const std::vector<std::size_t>& mask) {
    if (mask.empty()) throw DomainError("cross_entropy_backward: empty mask");
    Matrix grad(logits.rows(), logits.cols());
    const Matrix probs = softmax_rows(logits);
    const double inv = 1.0 / static_cast<double>(mask.size());
    for (std::size_t i : mask) {
        for (std::size_t j = 0; j < logits.cols(); ++j) grad(i, j) = probs(i, j) * inv;
        grad(i, static_cast<std::size_t>(labels[i])) -= inv;
    }
    return grad;
}

void GradTape::zero_grads() {
    for (auto& g : grads) g = Matrix(g.rows(), g.cols());
}

void GradTape::check_shapes() const {
    for (std::size_t i = 0; i < params.size(); ++i)
        if (!params[i]->same_shape(grads[i]))
            throw DimensionError("GradTape: gradient/parameter shape mismatch");
}

AdamState AdamState::for_tape(const GradTape& tape, AdamConfig cfg) {
    AdamState st;
    st.cfg = cfg;
    for (const auto* p : tape.params) {
        st.m.emplace_back(p->rows(), p->cols());
        st.v.emplace_back(p->rows(), p->cols());
    }
    return st;
}

void adam_step(GradTape& tape, AdamState& state) {
    tape.check_shapes();
    if (state.m.size() != tape.count())
        throw DimensionError("adam_step: state not sized for tape");
    state.step += 1;
    const double b1 = state.cfg.beta1;
    const double b2 = state.cfg.beta2;
    const double bc1 = 1.0 - std::pow(b1, static_cast<double>(state.step));
    const double bc2 = 1.0 - std::pow(b2, static_cast<double>(state.step));
    for (std::size_t p = 0; p < tape.count(); ++p) {
        Matrix& w = *tape.params[p];
        const Matrix& g = tape.grads[p];
        Matrix& m = state.m[p];
        Matrix& v = state.v[p];
        for (std::size_t i = 0; i < w.rows(); ++i) {
            for (std::size_t j = 0; j < w.cols(); ++j) {
                m(i, j) = b1 * m(i, j) + (1.0 - b1) * g(i, j);
                v(i, j) = b2 * v(i, j) + (1.0 - b2) * g(i, j) * g(i, j);
                const double mhat = m(i, j) / bc1;
                const double vhat = v(i, j) / bc2;
                w(i, j) -= state.cfg.lr * mhat / (std::sqrt(vhat) + state.cfg.eps);
            }
        }
    }
}

Matrix finite_diff_grad(const std::function<double(const Matrix&)>& f, const Matrix& x,
                        double eps) {
    if (eps <= 0.0) throw DomainError("finite_diff_grad: eps must be positive");
    Matrix grad(x.rows(), x.cols());
    Matrix probe = x;
    for (std::size_t i = 0; i < x.rows(); ++i) {
        for (std::size_t j = 0; j < x.cols(); ++j) {
            const double x0 = probe(i, j);
            probe(i, j) = x0 + eps;
            const double fp = f(probe);
            probe(i, j) = x0 - eps;
            const double fm = f(probe);
            probe(i, j) = x0;
            grad(i, j) = (fp - fm) / (2.0 * eps);
        }
    }
    return grad;
}

double grad_check_rel_error(const Matrix& analytic, const Matrix& numeric) {
    if (!analytic.same_shape(numeric))
        throw DimensionError("grad_check_rel_error: shape mismatch");
    double worst = 0.0;
    for (std::size_t i = 0; i < analytic.rows(); ++i) {
        for (std::size_t j = 0; j < analytic.cols(); ++j) {
            const double a = analytic(i, j);
            const double n = numeric(i, j);
            const double scale = std::max({1.0, std::abs(a), std::abs(n)});
            worst = std::max(worst, std::abs(a - n) / scale);
        }
    }
    return worst;
}

}  // namespace robctrl::num
