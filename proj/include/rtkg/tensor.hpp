#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace rtkg {

/// Dense row-major matrix of doubles. The workhorse container for entity
/// embeddings, relation embeddings, and mixing matrices.
struct Matrix {
    int rows = 0;
    int cols = 0;
    std::vector<double> v;

    Matrix() = default;
    Matrix(int r, int c, double fill = 0.0)
        : rows(r), cols(c), v(static_cast<size_t>(r) * static_cast<size_t>(c), fill) {
        if (r < 0 || c < 0) throw std::invalid_argument("Matrix: negative dimension");
    }

    double& operator()(int i, int j) { return v[static_cast<size_t>(i) * cols + j]; }
    double operator()(int i, int j) const { return v[static_cast<size_t>(i) * cols + j]; }

    std::span<double> row(int i) { return {v.data() + static_cast<size_t>(i) * cols, static_cast<size_t>(cols)}; }
    std::span<const double> row(int i) const {
        return {v.data() + static_cast<size_t>(i) * cols, static_cast<size_t>(cols)};
    }

    size_t size() const { return v.size(); }
    bool same_shape(const Matrix& o) const { return rows == o.rows && cols == o.cols; }
};

/// 3-way core tensor stored as d_r frontal slices of shape d_e x d_e,
/// slice-major (slice l occupies entries [l*d_e*d_e, (l+1)*d_e*d_e)).
/// `fixed` marks entries that are structural constants rather than free
/// parameters; an empty mask means every entry is free.
struct CoreTensor {
    int d_e = 0;
    int d_r = 0;
    std::vector<double> v;
    std::vector<uint8_t> fixed;

    CoreTensor() = default;
    CoreTensor(int de, int dr, double fill = 0.0)
        : d_e(de), d_r(dr), v(static_cast<size_t>(dr) * de * de, fill) {
        if (de <= 0 || dr <= 0) throw std::invalid_argument("CoreTensor: dimensions must be positive");
    }

    size_t slice_size() const { return static_cast<size_t>(d_e) * d_e; }
    size_t size() const { return v.size(); }

    double& at(int l, int i, int j) { return v[slice_size() * l + static_cast<size_t>(i) * d_e + j]; }
    double at(int l, int i, int j) const { return v[slice_size() * l + static_cast<size_t>(i) * d_e + j]; }

    std::span<double> slice(int l) { return {v.data() + slice_size() * l, slice_size()}; }
    std::span<const double> slice(int l) const { return {v.data() + slice_size() * l, slice_size()}; }

    void mark_all_fixed() { fixed.assign(v.size(), 1); }
    bool is_fixed(size_t idx) const { return !fixed.empty() && fixed[idx] != 0; }
};

inline void check_same_length(size_t a, size_t b, const char* what) {
    if (a != b) throw std::invalid_argument(std::string(what) + ": length mismatch");
}

// y = M x
inline void matvec(const Matrix& m, std::span<const double> x, std::span<double> y) {
    check_same_length(x.size(), static_cast<size_t>(m.cols), "matvec");
    check_same_length(y.size(), static_cast<size_t>(m.rows), "matvec");
    for (int i = 0; i < m.rows; ++i) {
        const double* row = m.v.data() + static_cast<size_t>(i) * m.cols;
        double acc = 0.0;
        for (int j = 0; j < m.cols; ++j) acc += row[j] * x[j];
        y[i] = acc;
    }
}

// y = M^T x
inline void matvec_t(const Matrix& m, std::span<const double> x, std::span<double> y) {
    check_same_length(x.size(), static_cast<size_t>(m.rows), "matvec_t");
    check_same_length(y.size(), static_cast<size_t>(m.cols), "matvec_t");
    for (int j = 0; j < m.cols; ++j) y[j] = 0.0;
    for (int i = 0; i < m.rows; ++i) {
        const double* row = m.v.data() + static_cast<size_t>(i) * m.cols;
        const double xi = x[i];
        for (int j = 0; j < m.cols; ++j) y[j] += xi * row[j];
    }
}

inline double dot(std::span<const double> a, std::span<const double> b) {
    check_same_length(a.size(), b.size(), "dot");
    double acc = 0.0;
    for (size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

// M += scale * a b^T
inline void add_outer(Matrix& m, double scale, std::span<const double> a, std::span<const double> b) {
    check_same_length(a.size(), static_cast<size_t>(m.rows), "add_outer");
    check_same_length(b.size(), static_cast<size_t>(m.cols), "add_outer");
    for (int i = 0; i < m.rows; ++i) {
        double* row = m.v.data() + static_cast<size_t>(i) * m.cols;
        const double s = scale * a[i];
        for (int j = 0; j < m.cols; ++j) row[j] += s * b[j];
    }
}

inline void axpy(double a, std::span<const double> x, std::span<double> y) {
    check_same_length(x.size(), y.size(), "axpy");
    for (size_t i = 0; i < x.size(); ++i) y[i] += a * x[i];
}

}  // namespace rtkg
