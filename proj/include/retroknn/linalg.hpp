#pragma once

#include <cassert>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace retroknn {

// Non-owning row-major matrix view into a flat parameter array.
struct MatView {
    double* data = nullptr;
    int rows = 0;
    int cols = 0;

    double& operator()(int i, int j) { return data[static_cast<size_t>(i) * cols + j]; }
    double operator()(int i, int j) const { return data[static_cast<size_t>(i) * cols + j]; }
    size_t size() const { return static_cast<size_t>(rows) * cols; }
};

struct ConstMatView {
    const double* data = nullptr;
    int rows = 0;
    int cols = 0;

    ConstMatView() = default;
    ConstMatView(const MatView& m) : data(m.data), rows(m.rows), cols(m.cols) {}
    double operator()(int i, int j) const { return data[static_cast<size_t>(i) * cols + j]; }
    size_t size() const { return static_cast<size_t>(rows) * cols; }
};

// y += W x
inline void matvec_acc(ConstMatView w, std::span<const double> x, std::span<double> y) {
    assert(static_cast<int>(x.size()) == w.cols && static_cast<int>(y.size()) == w.rows);
    for (int i = 0; i < w.rows; ++i) {
        const double* row = w.data + static_cast<size_t>(i) * w.cols;
        double acc = 0.0;
        for (int j = 0; j < w.cols; ++j) acc += row[j] * x[j];
        y[i] += acc;
    }
}

// x += W^T g
inline void matvec_t_acc(ConstMatView w, std::span<const double> g, std::span<double> x) {
    assert(static_cast<int>(g.size()) == w.rows && static_cast<int>(x.size()) == w.cols);
    for (int i = 0; i < w.rows; ++i) {
        const double* row = w.data + static_cast<size_t>(i) * w.cols;
        double gi = g[i];
        for (int j = 0; j < w.cols; ++j) x[j] += row[j] * gi;
    }
}

// W += g x^T  (outer-product accumulation into a gradient block)
inline void outer_acc(MatView w, std::span<const double> g, std::span<const double> x) {
    assert(static_cast<int>(g.size()) == w.rows && static_cast<int>(x.size()) == w.cols);
    for (int i = 0; i < w.rows; ++i) {
        double* row = w.data + static_cast<size_t>(i) * w.cols;
        double gi = g[i];
        for (int j = 0; j < w.cols; ++j) row[j] += gi * x[j];
    }
}

inline void vec_acc(std::span<double> y, std::span<const double> x) {
    assert(y.size() == x.size());
    for (size_t i = 0; i < y.size(); ++i) y[i] += x[i];
}

inline double dot(std::span<const double> a, std::span<const double> b) {
    assert(a.size() == b.size());
    double acc = 0.0;
    for (size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

// Squared Euclidean distance between two f32 vectors, accumulated in double
// left to right so results are reproducible and shared with the test oracles.
inline double l2_sq(std::span<const float> a, std::span<const float> b) {
    assert(a.size() == b.size());
    double acc = 0.0;
    for (size_t i = 0; i < a.size(); ++i) {
        double d = static_cast<double>(a[i]) - static_cast<double>(b[i]);
        acc += d * d;
    }
    return acc;
}

// Named shape registry over one flat f64 array. Parameter structs describe
// their blocks once; optimizers, serializers, and gradient checks all work on
// the flat view.
class ParamLayout {
public:
    struct Block {
        std::string name;
        size_t offset;
        int rows;
        int cols;
    };

    size_t add(const std::string& name, int rows, int cols) {
        size_t off = total_;
        blocks_.push_back({name, off, rows, cols});
        total_ += static_cast<size_t>(rows) * cols;
        return off;
    }

    size_t total() const { return total_; }
    const std::vector<Block>& blocks() const { return blocks_; }

    MatView view(std::vector<double>& data, size_t idx) const {
        const Block& b = blocks_[idx];
        return {data.data() + b.offset, b.rows, b.cols};
    }

private:
    std::vector<Block> blocks_;
    size_t total_ = 0;
};

}  // namespace retroknn
