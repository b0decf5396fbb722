#pragma once

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

#include "robctrl/error.hpp"
#include "robctrl/rng.hpp"

namespace robctrl::num {

// Dense row-major matrix of 64-bit reals. All learning modules run on these;
// graphs stay sparse and multiply into them via edge loops.
class Matrix {
  public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix from_rows(std::initializer_list<std::initializer_list<double>> rows);
    static Matrix identity(std::size_t n);
    static Matrix gaussian(std::size_t rows, std::size_t cols, Rng& rng, double stddev = 1.0);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t size() const { return data_.size(); }
    bool empty() const { return data_.empty(); }

    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    double* data() { return data_.data(); }
    const double* data() const { return data_.data(); }
    double* row(std::size_t i) { return data_.data() + i * cols_; }
    const double* row(std::size_t i) const { return data_.data() + i * cols_; }

    std::vector<double> row_vec(std::size_t i) const {
        return {row(i), row(i) + cols_};
    }
    void set_row(std::size_t i, const std::vector<double>& v);

    bool same_shape(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_; }
    bool all_finite() const;

    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    Matrix& operator*=(double s);

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

Matrix matmul(const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& m);
Matrix hadamard(const Matrix& a, const Matrix& b);
Matrix operator+(Matrix a, const Matrix& b);
Matrix operator-(Matrix a, const Matrix& b);
Matrix operator*(Matrix a, double s);

double frobenius_sq(const Matrix& m);
double max_abs_diff(const Matrix& a, const Matrix& b);

enum class Activation { Relu, Sigmoid, SoftmaxRows };

Matrix activate(const Matrix& x, Activation kind);
Matrix relu(const Matrix& x);
Matrix sigmoid(const Matrix& x);
Matrix softmax_rows(const Matrix& x);
double sigmoid_scalar(double x);

// Mean negative log-likelihood of the masked rows, labels indexing logit
// columns. Softmax applied internally (log-sum-exp stabilized).
double cross_entropy(const Matrix& logits, const std::vector<int>& labels,
                     const std::vector<std::size_t>& mask);

// dL/dlogits of cross_entropy: (softmax - onehot)/|mask| on masked rows.
Matrix cross_entropy_backward(const Matrix& logits, const std::vector<int>& labels,
                              const std::vector<std::size_t>& mask);

// Named parameter/gradient pairs produced by one backward pass.
struct GradTape {
    std::vector<std::string> names;
    std::vector<Matrix*> params;
    std::vector<Matrix> grads;
    double loss = 0.0;

    void add(std::string name, Matrix& param) {
        names.push_back(std::move(name));
        params.push_back(&param);
        grads.emplace_back(param.rows(), param.cols());
    }
    Matrix& grad(std::size_t i) { return grads[i]; }
    std::size_t count() const { return params.size(); }
    void zero_grads();
    void check_shapes() const;
};

struct AdamConfig {
    double lr = 1e-3;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double eps = 1e-8;
};

struct AdamState {
    AdamConfig cfg;
    std::vector<Matrix> m;
    std::vector<Matrix> v;
    long step = 0;

    static AdamState for_tape(const GradTape& tape, AdamConfig cfg = {});
};

// One bias-corrected Adam update of every parameter on the tape, in place.
void adam_step(GradTape& tape, AdamState& state);

// Central differences (f(x+e)-f(x-e))/(2e), entry by entry.
Matrix finite_diff_grad(const std::function<double(const Matrix&)>& f, const Matrix& x,
                        double eps = 1e-6);

// max over entries of |a-g| / max(1, |a|, |g|); the gradient-check metric.
double grad_check_rel_error(const Matrix& analytic, const Matrix& numeric);

}  // namespace robctrl::num
