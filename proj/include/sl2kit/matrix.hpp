#pragma once

#include "sl2kit/linalg.hpp"
#include "sl2kit/number_field.hpp"

#include <array>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace sl2kit {

// Fixed-size square matrix over a number field, row-major.
template <std::size_t N>
class SquareMatrix {
public:
    SquareMatrix() = default;

    SquareMatrix(std::initializer_list<std::initializer_list<FieldElement>> rows) {
        std::size_t i = 0;
        for (const auto& row : rows) {
            std::size_t j = 0;
            for (const auto& x : row) at(i, j++) = x;
            ++i;
        }
    }

    static SquareMatrix identity(NumberField field = NumberField::rationals()) {
        SquareMatrix m;
        for (std::size_t i = 0; i < N; ++i) {
            for (std::size_t j = 0; j < N; ++j) m.at(i, j) = FieldElement(field, Rational(i == j ? 1 : 0));
        }
        return m;
    }

    static SquareMatrix diagonal(const std::array<FieldElement, N>& d) {
        SquareMatrix m;
        for (std::size_t i = 0; i < N; ++i) m.at(i, i) = d[i];
        return m;
    }

    static constexpr std::size_t size() { return N; }

    FieldElement& at(std::size_t i, std::size_t j) { return entries_[i * N + j]; }
    const FieldElement& at(std::size_t i, std::size_t j) const { return entries_[i * N + j]; }
    FieldElement& operator()(std::size_t i, std::size_t j) { return at(i, j); }
    const FieldElement& operator()(std::size_t i, std::size_t j) const { return at(i, j); }

    const std::array<FieldElement, N * N>& entries() const { return entries_; }

    // Field of the entries (degree-1 entries defer to any other field).
    NumberField field() const {
        NumberField f = NumberField::rationals();
        for (const auto& x : entries_) f = common_field(f, x.field());
        return f;
    }

    FieldElement trace() const {
        FieldElement t;
        for (std::size_t i = 0; i < N; ++i) t += at(i, i);
        return t;
    }

    SquareMatrix transpose() const {
        SquareMatrix t;
        for (std::size_t i = 0; i < N; ++i) {
            for (std::size_t j = 0; j < N; ++j) t.at(j, i) = at(i, j);
        }
        return t;
    }

    FieldElement determinant() const {
        if constexpr (N == 2) {
            return at(0, 0) * at(1, 1) - at(0, 1) * at(1, 0);
        } else {
            return linalg::determinant(to_dense());
        }
    }

    // Throws Error{Singular} when the determinant vanishes.
    SquareMatrix inverse() const {
        if constexpr (N == 2) {
            const FieldElement det = determinant();
            if (det.is_zero()) throw Error(ErrorCode::Singular, "matrix is singular");
            const FieldElement inv = det.inverse();
            SquareMatrix m;
            m.at(0, 0) = at(1, 1) * inv;
            m.at(0, 1) = -at(0, 1) * inv;
            m.at(1, 0) = -at(1, 0) * inv;
            m.at(1, 1) = at(0, 0) * inv;
            return m;
        } else {
            return from_dense(linalg::invert(to_dense()));
        }
    }

    // Monic characteristic polynomial det(xI - A), coefficient of x^k at
    // index k, by the Faddeev-LeVerrier recursion (characteristic zero).
    std::vector<FieldElement> characteristic_polynomial() const {
        std::vector<FieldElement> c(N + 1);
        c[N] = FieldElement(1);
        SquareMatrix m;  // M_0 = 0
        for (std::size_t k = 1; k <= N; ++k) {
            SquareMatrix next = (*this) * m;
            for (std::size_t i = 0; i < N; ++i) next.at(i, i) += c[N - k + 1];
            m = next;
            const SquareMatrix am = (*this) * m;
            c[N - k] = -am.trace() / FieldElement(static_cast<long>(k));
        }
        return c;
    }

    bool is_identity() const {
        for (std::size_t i = 0; i < N; ++i) {
            for (std::size_t j = 0; j < N; ++j) {
                const FieldElement& x = at(i, j);
                if (i == j ? !x.is_one() : !x.is_zero()) return false;
            }
        }
        return true;
    }

    SquareMatrix operator-() const {
        SquareMatrix out;
        for (std::size_t k = 0; k < N * N; ++k) out.entries_[k] = -entries_[k];
        return out;
    }

    friend SquareMatrix operator+(const SquareMatrix& a, const SquareMatrix& b) {
        SquareMatrix out;
        for (std::size_t k = 0; k < N * N; ++k) out.entries_[k] = a.entries_[k] + b.entries_[k];
        return out;
    }

    friend SquareMatrix operator-(const SquareMatrix& a, const SquareMatrix& b) {
        SquareMatrix out;
        for (std::size_t k = 0; k < N * N; ++k) out.entries_[k] = a.entries_[k] - b.entries_[k];
        return out;
    }

    friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
        SquareMatrix out;
        for (std::size_t i = 0; i < N; ++i) {
            for (std::size_t j = 0; j < N; ++j) {
                FieldElement acc = a.at(i, 0) * b.at(0, j);
                for (std::size_t k = 1; k < N; ++k) acc += a.at(i, k) * b.at(k, j);
                out.at(i, j) = std::move(acc);
            }
        }
        return out;
    }

    friend SquareMatrix operator*(const FieldElement& s, const SquareMatrix& a) {
        SquareMatrix out;
        for (std::size_t k = 0; k < N * N; ++k) out.entries_[k] = s * a.entries_[k];
        return out;
    }

    friend bool operator==(const SquareMatrix& a, const SquareMatrix& b) { return a.entries_ == b.entries_; }
    friend std::strong_ordering operator<=>(const SquareMatrix& a, const SquareMatrix& b) {
        for (std::size_t k = 0; k < N * N; ++k) {
            auto c = a.entries_[k] <=> b.entries_[k];
            if (c != std::strong_ordering::equal) return c;
        }
        return std::strong_ordering::equal;
    }

    linalg::Dense<FieldElement> to_dense() const {
        linalg::Dense<FieldElement> d(N, std::vector<FieldElement>(N));
        for (std::size_t i = 0; i < N; ++i) {
            for (std::size_t j = 0; j < N; ++j) d[i][j] = at(i, j);
        }
        return d;
    }

    static SquareMatrix from_dense(const linalg::Dense<FieldElement>& d) {
        SquareMatrix m;
        for (std::size_t i = 0; i < N; ++i) {
            for (std::size_t j = 0; j < N; ++j) m.at(i, j) = d[i][j];
        }
        return m;
    }

    std::string to_string() const {
        std::string out = "[";
        for (std::size_t i = 0; i < N; ++i) {
            out += i ? ", [" : "[";
            for (std::size_t j = 0; j < N; ++j) {
                if (j) out += ", ";
                out += at(i, j).to_string();
            }
            out += "]";
        }
        return out + "]";
    }

private:
    std::array<FieldElement, N * N> entries_{};
};

using Mat2 = SquareMatrix<2>;
using Mat4 = SquareMatrix<4>;

}  // namespace sl2kit
