#pragma once

#include <cstddef>
#include <vector>

namespace fwat {

using Vec = std::vector<double>;

// Dense row-major matrix. Everything in this library is small (n up to a few
// hundred), so no sparse storage and no external linear-algebra dependency.
class Mat {
public:
    Mat() = default;
    Mat(int rows, int cols, double fill = 0.0)
        : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, fill) {}

    static Mat identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    double& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    double operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

    const std::vector<double>& data() const { return a_; }
    std::vector<double>& data() { return a_; }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<double> a_;
};

Vec operator*(const Mat& m, const Vec& v);
Mat operator*(const Mat& a, const Mat& b);

// m ⊗ I_2: used to lift a graph Laplacian to stacked planar coordinates.
Mat kron_eye2(const Mat& m);

double dot(const Vec& a, const Vec& b);
double norm2(const Vec& v);
double norm_inf(const Vec& v);
bool all_finite(const Vec& v);

// All eigenvalues of a symmetric matrix, ascending. Cyclic Jacobi rotations;
// deterministic and accurate to ~1e-14 * ||A|| for the sizes used here.
Vec symmetric_eigenvalues(Mat a);

}  // namespace fwat
