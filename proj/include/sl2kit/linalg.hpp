#pragma once

// Dense exact Gaussian elimination over any scalar type T that provides
// +, -, *, /, and free functions is_zero(T) / inverse(T) visible here.
// Pivoting is deterministic: the first row (top-down) with a nonzero entry
// in the current column.

#include "sl2kit/errors.hpp"
#include "sl2kit/rational.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace sl2kit::linalg {

template <class T>
using Dense = std::vector<std::vector<T>>;

template <class T>
struct Echelon {
    Dense<T> rows;                     // reduced row echelon form
    std::vector<std::size_t> pivots;   // pivot column per nonzero row
    T det_factor{};                    // product of pivots times sign (square input only)
};

// Reduced row echelon form. When `cols_to_reduce` is smaller than the width
// only those leading columns are pivoted (used for augmented systems).
template <class T>
Echelon<T> rref(Dense<T> a, std::optional<std::size_t> cols_to_reduce = std::nullopt) {
    Echelon<T> out;
    const std::size_t nrows = a.size();
    const std::size_t ncols = nrows == 0 ? 0 : a[0].size();
    const std::size_t limit = cols_to_reduce.value_or(ncols);
    T det = T(1);
    std::size_t r = 0;
    for (std::size_t c = 0; c < limit && r < nrows; ++c) {
        std::size_t pivot = r;
        while (pivot < nrows && is_zero(a[pivot][c])) ++pivot;
        if (pivot == nrows) continue;
        if (pivot != r) {
            std::swap(a[pivot], a[r]);
            det = -det;
        }
        const T pinv = inverse(a[r][c]);
        det = det * a[r][c];
        for (std::size_t k = c; k < ncols; ++k) a[r][k] = a[r][k] * pinv;
        for (std::size_t i = 0; i < nrows; ++i) {
            if (i == r || is_zero(a[i][c])) continue;
            const T factor = a[i][c];
            for (std::size_t k = c; k < ncols; ++k) a[i][k] = a[i][k] - factor * a[r][k];
        }
        out.pivots.push_back(c);
        ++r;
    }
    out.rows = std::move(a);
    out.det_factor = det;
    return out;
}

template <class T>
std::size_t rank(const Dense<T>& a) {
    return rref(a).pivots.size();
}

template <class T>
T determinant(const Dense<T>& a) {
    auto e = rref(a);
    if (e.pivots.size() < a.size()) return T(0);
    return e.det_factor;
}

// Basis of the right kernel {v : a v = 0}; each vector has a 1 in one free
// column and zeros in the others.
template <class T>
std::vector<std::vector<T>> kernel(const Dense<T>& a, std::size_t ncols) {
    auto e = rref(a);
    std::vector<bool> is_pivot(ncols, false);
    for (auto c : e.pivots) is_pivot[c] = true;
    std::vector<std::vector<T>> basis;
    for (std::size_t free = 0; free < ncols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<T> v(ncols, T(0));
        v[free] = T(1);
        for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.rows[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

// One solution of a x = b (free variables set to zero), or nullopt.
template <class T>
std::optional<std::vector<T>> solve(const Dense<T>& a, const std::vector<T>& b) {
    const std::size_t n = a.empty() ? 0 : a[0].size();
    Dense<T> aug = a;
    for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
    auto e = rref(std::move(aug), n);
    for (std::size_t r = e.pivots.size(); r < e.rows.size(); ++r) {
        if (!is_zero(e.rows[r][n])) return std::nullopt;
    }
    std::vector<T> x(n, T(0));
    for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.rows[r][n];
    return x;
}

template <class T>
Dense<T> invert(const Dense<T>& a) {
    const std::size_t n = a.size();
    Dense<T> aug = a;
    for (std::size_t i = 0; i < n; ++i) {
        aug[i].resize(2 * n, T(0));
        aug[i][n + i] = T(1);
    }
    auto e = rref(std::move(aug), n);
    if (e.pivots.size() < n) throw Error(ErrorCode::Singular, "matrix is singular");
    Dense<T> out(n, std::vector<T>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) out[i][j] = e.rows[i][n + j];
    }
    return out;
}

}  // namespace sl2kit::linalg
