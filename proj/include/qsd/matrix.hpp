#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

namespace qsd {

/// Dense matrix over an exact field F (RatFunc or Rational).
template <class F>
struct Mat {
    int rows = 0;
    int cols = 0;
    std::vector<F> a;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, F(0)) {}

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i)
            m.at(i, i) = F(1);
        return m;
    }

    F& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const F& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    bool is_zero() const {
        for (const F& x : a)
            if (!x.is_zero())
                return false;
        return true;
    }

    friend Mat operator+(const Mat& x, const Mat& y) {
        Mat r = x;
        for (size_t i = 0; i < r.a.size(); ++i)
            r.a[i] += y.a[i];
        return r;
    }
    friend Mat operator-(const Mat& x, const Mat& y) {
        Mat r = x;
        for (size_t i = 0; i < r.a.size(); ++i)
            r.a[i] -= y.a[i];
        return r;
    }
    friend Mat operator*(const Mat& x, const Mat& y) {
        if (x.cols != y.rows)
            throw std::invalid_argument("matrix size mismatch");
        Mat r(x.rows, y.cols);
        for (int i = 0; i < x.rows; ++i)
            for (int k = 0; k < x.cols; ++k) {
                const F& c = x.at(i, k);
                if (c.is_zero())
                    continue;
                for (int j = 0; j < y.cols; ++j)
                    if (!y.at(k, j).is_zero())
                        r.at(i, j) += c * y.at(k, j);
            }
        return r;
    }
    Mat operator*(const F& s) const {
        Mat r = *this;
        for (auto& x : r.a)
            x *= s;
        return r;
    }
    friend bool operator==(const Mat& x, const Mat& y) {
        return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
    }
    friend bool operator!=(const Mat& x, const Mat& y) { return !(x == y); }

    std::vector<F> vec() const { return a; }
};

template <class F>
Mat<F> commutator(const Mat<F>& x, const Mat<F>& y) {
    return x * y - y * x;
}

/// Incremental reduced row echelon form. Pivot rule: first nonzero entry in
/// row-major order; rows are kept mutually reduced with unit pivots.
template <class F>
class RowSpace {
  public:
    explicit RowSpace(int ncols) : ncols_(ncols) {}

    int ncols() const { return ncols_; }
    int dim() const { return static_cast<int>(rows_.size()); }
    const std::vector<std::pair<int, std::vector<F>>>& rows() const { return rows_; }

    void reduce(std::vector<F>& v) const {
        for (const auto& [p, r] : rows_) {
            if (v[static_cast<size_t>(p)].is_zero())
                continue;
            F c = v[static_cast<size_t>(p)];
            for (int j = p; j < ncols_; ++j)
                if (!r[static_cast<size_t>(j)].is_zero())
                    v[static_cast<size_t>(j)] -= c * r[static_cast<size_t>(j)];
        }
    }

    bool contains(std::vector<F> v) const {
        reduce(v);
        for (const F& x : v)
            if (!x.is_zero())
                return false;
        return true;
    }

    /// Inserts v into the span; returns true iff v was independent.
    bool insert(std::vector<F> v) {
        if (static_cast<int>(v.size()) != ncols_)
            throw std::invalid_argument("row length mismatch");
        reduce(v);
        int p = -1;
        for (int j = 0; j < ncols_; ++j)
            if (!v[static_cast<size_t>(j)].is_zero()) {
                p = j;
                break;
            }
        if (p < 0)
            return false;
        const F inv = F(1) / v[static_cast<size_t>(p)];
        for (int j = p; j < ncols_; ++j)
            if (!v[static_cast<size_t>(j)].is_zero())
                v[static_cast<size_t>(j)] *= inv;
        for (auto& [p2, r] : rows_) {
            if (r[static_cast<size_t>(p)].is_zero())
                continue;
            F c = r[static_cast<size_t>(p)];
            for (int j = p; j < ncols_; ++j)
                if (!v[static_cast<size_t>(j)].is_zero())
                    r[static_cast<size_t>(j)] -= c * v[static_cast<size_t>(j)];
        }
        auto pos = rows_.begin();
        while (pos != rows_.end() && pos->first < p)
            ++pos;
        rows_.insert(pos, {p, std::move(v)});
        return true;
    }

    /// Basis of the solution space of (rows) * x = 0.
    std::vector<std::vector<F>> kernel_basis() const {
        std::vector<bool> is_pivot(static_cast<size_t>(ncols_), false);
        for (const auto& [p, r] : rows_)
            is_pivot[static_cast<size_t>(p)] = true;
        std::vector<std::vector<F>> out;
        for (int f = 0; f < ncols_; ++f) {
            if (is_pivot[static_cast<size_t>(f)])
                continue;
            std::vector<F> x(static_cast<size_t>(ncols_), F(0));
            x[static_cast<size_t>(f)] = F(1);
            for (const auto& [p, r] : rows_)
                x[static_cast<size_t>(p)] = F(0) - r[static_cast<size_t>(f)];
            out.push_back(std::move(x));
        }
        return out;
    }

  private:
    int ncols_;
    std::vector<std::pair<int, std::vector<F>>> rows_;
};

/// Commutant of a set of s x s matrices: the solution space of [X, g] = 0
/// for every g, by exact elimination in the s^2 entries of X.
template <class F>
std::pair<int, std::vector<Mat<F>>> commutant(const std::vector<Mat<F>>& gens, int s) {
    for (const auto& g : gens)
        if (g.rows != s || g.cols != s)
            throw std::invalid_argument("matrix size mismatch");
    const int n = s * s;
    RowSpace<F> eqs(n);
    std::vector<F> row(static_cast<size_t>(n));
    for (const auto& g : gens) {
        for (int i = 0; i < s; ++i)
            for (int j = 0; j < s; ++j) {
                std::fill(row.begin(), row.end(), F(0));
                // (Xg - gX)_{ij} = sum_a X_{ia} g_{aj} - sum_b g_{ib} X_{bj}
                for (int a = 0; a < s; ++a)
                    if (!g.at(a, j).is_zero())
                        row[static_cast<size_t>(i * s + a)] += g.at(a, j);
                for (int b = 0; b < s; ++b)
                    if (!g.at(i, b).is_zero())
                        row[static_cast<size_t>(b * s + j)] -= g.at(i, b);
                eqs.insert(row);
            }
    }
    std::vector<Mat<F>> basis;
    for (auto& v : eqs.kernel_basis()) {
        Mat<F> m(s, s);
        m.a = std::move(v);
        basis.push_back(std::move(m));
    }
    return {static_cast<int>(basis.size()), std::move(basis)};
}

/// Dimension and an independent sub-list of the span of the given matrices.
template <class F>
std::pair<int, std::vector<Mat<F>>> span_basis(const std::vector<Mat<F>>& mats) {
    if (mats.empty())
        return {0, {}};
    RowSpace<F> space(mats.front().rows * mats.front().cols);
    std::vector<Mat<F>> basis;
    for (const auto& m : mats)
        if (space.insert(m.vec()))
            basis.push_back(m);
    return {space.dim(), std::move(basis)};
}

/// Smallest unital subalgebra containing the generators: iterate products of
/// the current independent basis with the generators until stable.
template <class F>
std::pair<int, std::vector<Mat<F>>> algebra_closure(const std::vector<Mat<F>>& gens, int s) {
    RowSpace<F> space(s * s);
    std::vector<Mat<F>> basis;
    std::vector<Mat<F>> queue;
    Mat<F> id = Mat<F>::identity(s);
    space.insert(id.vec());
    basis.push_back(id);
    queue.push_back(id);
    while (!queue.empty()) {
        Mat<F> m = std::move(queue.back());
        queue.pop_back();
        for (const auto& g : gens) {
            Mat<F> prod = m * g;
            if (space.insert(prod.vec())) {
                basis.push_back(prod);
                queue.push_back(std::move(prod));
            }
        }
    }
    return {space.dim(), std::move(basis)};
}

}  // namespace qsd
