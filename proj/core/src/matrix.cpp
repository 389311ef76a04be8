#include "galint/matrix.hpp"

#include "galint/error.hpp"

namespace galint {

RfMatrix RfMatrix::identity(long n) {
    RfMatrix m(n, n);
    for (long i = 0; i < n; ++i) m.at(i, i) = RatFunc(Rational(1));
    return m;
}

RfMatrix operator*(const RfMatrix& a, const RfMatrix& b) {
    if (a.cols != b.rows) throw MathError("matrix dimension mismatch in product");
    RfMatrix out(a.rows, b.cols);
    for (long i = 0; i < a.rows; ++i)
        for (long k = 0; k < a.cols; ++k) {
            if (a.at(i, k).is_zero()) continue;
            for (long j = 0; j < b.cols; ++j) {
                if (b.at(k, j).is_zero()) continue;
                out.at(i, j) += a.at(i, k) * b.at(k, j);
            }
        }
    return out;
}

RfMatrix operator+(const RfMatrix& a, const RfMatrix& b) {
    if (a.rows != b.rows || a.cols != b.cols)
        throw MathError("matrix dimension mismatch in sum");
    RfMatrix out(a.rows, a.cols);
    for (std::size_t i = 0; i < out.data.size(); ++i) out.data[i] = a.data[i] + b.data[i];
    return out;
}

RfMatrix operator-(const RfMatrix& a, const RfMatrix& b) {
    if (a.rows != b.rows || a.cols != b.cols)
        throw MathError("matrix dimension mismatch in difference");
    RfMatrix out(a.rows, a.cols);
    for (std::size_t i = 0; i < out.data.size(); ++i) out.data[i] = a.data[i] - b.data[i];
    return out;
}

RfMatrix transpose(const RfMatrix& m) {
    RfMatrix out(m.cols, m.rows);
    for (long i = 0; i < m.rows; ++i)
        for (long j = 0; j < m.cols; ++j) out.at(j, i) = m.at(i, j);
    return out;
}

RatFunc det(const RfMatrix& m) {
    if (m.rows != m.cols) throw MathError("determinant of non-square matrix");
    RfMatrix a = m;
    long n = a.rows;
    RatFunc d{Rational(1)};
    for (long col = 0; col < n; ++col) {
        long pivot = -1;
        for (long r = col; r < n; ++r)
            if (!a.at(r, col).is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) return RatFunc();
        if (pivot != col) {
            for (long j = 0; j < n; ++j) std::swap(a.at(pivot, j), a.at(col, j));
            d = -d;
        }
        d *= a.at(col, col);
        RatFunc inv = RatFunc(Rational(1)) / a.at(col, col);
        for (long r = col + 1; r < n; ++r) {
            if (a.at(r, col).is_zero()) continue;
            RatFunc f = a.at(r, col) * inv;
            for (long j = col; j < n; ++j) a.at(r, j) -= f * a.at(col, j);
        }
    }
    return d;
}

std::optional<RfMatrix> inverse(const RfMatrix& m) {
    if (m.rows != m.cols) throw MathError("inverse of non-square matrix");
    long n = m.rows;
    RfMatrix a = m;
    RfMatrix inv = RfMatrix::identity(n);
    for (long col = 0; col < n; ++col) {
        long pivot = -1;
        for (long r = col; r < n; ++r)
            if (!a.at(r, col).is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) return std::nullopt;
        if (pivot != col)
            for (long j = 0; j < n; ++j) {
                std::swap(a.at(pivot, j), a.at(col, j));
                std::swap(inv.at(pivot, j), inv.at(col, j));
            }
        RatFunc pinv = RatFunc(Rational(1)) / a.at(col, col);
        for (long j = 0; j < n; ++j) {
            a.at(col, j) *= pinv;
            inv.at(col, j) *= pinv;
        }
        for (long r = 0; r < n; ++r) {
            if (r == col || a.at(r, col).is_zero()) continue;
            RatFunc f = a.at(r, col);
            for (long j = 0; j < n; ++j) {
                a.at(r, j) -= f * a.at(col, j);
                inv.at(r, j) -= f * inv.at(col, j);
            }
        }
    }
    return inv;
}

long rank(const RfMatrix& m) {
    RfMatrix a = m;
    long rk = 0;
    long row = 0;
    for (long col = 0; col < a.cols && row < a.rows; ++col) {
        long pivot = -1;
        for (long r = row; r < a.rows; ++r)
            if (!a.at(r, col).is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != row)
            for (long j = 0; j < a.cols; ++j) std::swap(a.at(pivot, j), a.at(row, j));
        RatFunc inv = RatFunc(Rational(1)) / a.at(row, col);
        for (long r = row + 1; r < a.rows; ++r) {
            if (a.at(r, col).is_zero()) continue;
            RatFunc f = a.at(r, col) * inv;
            for (long j = col; j < a.cols; ++j) a.at(r, j) -= f * a.at(row, j);
        }
        ++row;
        ++rk;
    }
    return rk;
}

RfMatrix substitute(const RfMatrix& m, const std::map<std::string, RatFunc>& bindings) {
    RfMatrix out(m.rows, m.cols);
    for (std::size_t i = 0; i < m.data.size(); ++i) out.data[i] = m.data[i].substitute(bindings);
    return out;
}

RfMatrix symplectic_form(long n) {
    RfMatrix j(2 * n, 2 * n);
    for (long i = 0; i < n; ++i) {
        j.at(i, n + i) = RatFunc(Rational(1));
        j.at(n + i, i) = RatFunc(Rational(-1));
    }
    return j;
}

}  // namespace galint
