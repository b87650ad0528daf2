#pragma once

// Exact integer / rational linear algebra used throughout:
// determinants, inverses, congruence signatures and Smith normal form.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "toral/errors.hpp"

namespace toral {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// floor-mod into [0, m)
inline Int mod_floor(const Int& a, const Int& m) {
    Int r = a % m;
    if (r < 0) r += m;
    return r;
}

template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

    Matrix transposed() const {
        Matrix m(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
        return m;
    }

    Matrix operator*(const Matrix& o) const {
        Matrix m(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const T& a = (*this)(i, k);
                if (a == 0) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) m(i, j) += a * o(k, j);
            }
        return m;
    }

    bool is_symmetric() const {
        if (rows_ != cols_) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = i + 1; j < cols_; ++j)
                if ((*this)(i, j) != (*this)(j, i)) return false;
        return true;
    }

    void swap_rows(std::size_t a, std::size_t b) {
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }
    void swap_cols(std::size_t a, std::size_t b) {
        for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
    }
    // row a += c * row b
    void add_row(std::size_t a, std::size_t b, const T& c) {
        for (std::size_t j = 0; j < cols_; ++j) (*this)(a, j) += c * (*this)(b, j);
    }
    void add_col(std::size_t a, std::size_t b, const T& c) {
        for (std::size_t i = 0; i < rows_; ++i) (*this)(i, a) += c * (*this)(i, b);
    }
    void scale_row(std::size_t a, const T& c) {
        for (std::size_t j = 0; j < cols_; ++j) (*this)(a, j) *= c;
    }
    void scale_col(std::size_t a, const T& c) {
        for (std::size_t i = 0; i < rows_; ++i) (*this)(i, a) *= c;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<T> data_;
};

using IntMat = Matrix<Int>;
using RatMat = Matrix<Rat>;

inline RatMat to_rational(const IntMat& m) {
    RatMat r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rat(m(i, j));
    return r;
}

inline Rat det(const RatMat& m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("det: matrix not square");
    const std::size_t n = m.rows();
    RatMat a = m;
    Rat d = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && a(piv, k) == 0) ++piv;
        if (piv == n) return 0;
        if (piv != k) {
            a.swap_rows(piv, k);
            d = -d;
        }
        d *= a(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a(i, k) == 0) continue;
            Rat f = a(i, k) / a(k, k);
            for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
        }
    }
    return d;
}

inline Int det(const IntMat& m) {
    Rat d = det(to_rational(m));
    return boost::multiprecision::numerator(d) / boost::multiprecision::denominator(d);
}

inline RatMat inverse(const RatMat& m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("inverse: matrix not square");
    const std::size_t n = m.rows();
    RatMat a = m;
    RatMat inv = RatMat::identity(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && a(piv, k) == 0) ++piv;
        if (piv == n) throw Degenerate("inverse: singular matrix");
        if (piv != k) {
            a.swap_rows(piv, k);
            inv.swap_rows(piv, k);
        }
        Rat p = a(k, k);
        for (std::size_t j = 0; j < n; ++j) {
            a(k, j) /= p;
            inv(k, j) /= p;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || a(i, k) == 0) continue;
            Rat f = a(i, k);
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) -= f * a(k, j);
                inv(i, j) -= f * inv(k, j);
            }
        }
    }
    return inv;
}

inline RatMat inverse(const IntMat& m) { return inverse(to_rational(m)); }

// exact inverse of a unimodular integer matrix
inline IntMat unimodular_inverse(const IntMat& m) {
    RatMat r = inverse(m);
    IntMat out(r.rows(), r.cols());
    for (std::size_t i = 0; i < r.rows(); ++i)
        for (std::size_t j = 0; j < r.cols(); ++j) {
            if (boost::multiprecision::denominator(r(i, j)) != 1)
                throw Degenerate("unimodular_inverse: matrix is not unimodular");
            out(i, j) = boost::multiprecision::numerator(r(i, j));
        }
    return out;
}

// Signature of a symmetric matrix by exact symmetric congruence
// diagonalization (Sylvester count). Handles zero-diagonal blocks by
// folding an off-diagonal entry onto the diagonal first.
inline int signature(const RatMat& m) {
    if (!m.is_symmetric()) throw NotSymmetric("signature: matrix not symmetric");
    const std::size_t n = m.rows();
    RatMat a = m;
    int sig = 0;
    for (std::size_t k = 0; k < n; ++k) {
        if (a(k, k) == 0) {
            // prefer a nonzero diagonal pivot from the remaining block
            std::size_t l = k + 1;
            while (l < n && a(l, l) == 0) ++l;
            if (l < n) {
                a.swap_rows(k, l);
                a.swap_cols(k, l);
            } else {
                // whole remaining diagonal is zero; fold an off-diagonal
                // entry onto it (a(j,j) = 0, so a(k,k) becomes 2 a(i,j))
                std::size_t fi = n, fj = n;
                for (std::size_t i = k; i < n && fi == n; ++i)
                    for (std::size_t j = i + 1; j < n; ++j)
                        if (a(i, j) != 0) {
                            fi = i;
                            fj = j;
                            break;
                        }
                if (fi == n) break; // remaining block is zero
                if (fi != k) {
                    a.swap_rows(k, fi);
                    a.swap_cols(k, fi);
                }
                a.add_row(k, fj, 1);
                a.add_col(k, fj, 1);
            }
        }
        sig += (a(k, k) > 0) ? 1 : -1;
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a(i, k) == 0) continue;
            Rat f = a(i, k) / a(k, k);
            a.add_row(i, k, -f);
            a.add_col(i, k, -f);
        }
    }
    return sig;
}

inline int signature(const IntMat& m) { return signature(to_rational(m)); }

// Kronecker product
template <typename T>
Matrix<T> kron(const Matrix<T>& a, const Matrix<T>& b) {
    Matrix<T> m(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a(i, j) == 0) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    m(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
        }
    return m;
}

struct SmithData {
    IntMat u, v;               // u * m * v = diag(divisors), u, v unimodular
    std::vector<Int> divisors; // positive, d_i | d_{i+1}
};

namespace detail {

inline bool snf_find_pivot(const IntMat& a, std::size_t t, std::size_t& pi, std::size_t& pj) {
    const std::size_t n = a.rows();
    bool found = false;
    Int best = 0;
    for (std::size_t i = t; i < n; ++i)
        for (std::size_t j = t; j < a.cols(); ++j) {
            if (a(i, j) == 0) continue;
            Int mag = abs(a(i, j));
            if (!found || mag < best) {
                found = true;
                best = mag;
                pi = i;
                pj = j;
            }
        }
    return found;
}

} // namespace detail

// Smith normal form with transforms: u * m * v = diag(d_1, ..., d_n),
// d_i >= 0, d_i | d_{i+1}. Throws Degenerate on singular input unless
// allow_singular is set (cokernel computations need the singular case;
// zero divisors then sit at the end of the chain).
inline SmithData smith_normal_form(const IntMat& m, bool allow_singular = false) {
    if (m.rows() != m.cols()) throw DimensionMismatch("smith_normal_form: matrix not square");
    const std::size_t n = m.rows();
    IntMat a = m;
    IntMat u = IntMat::identity(n);
    IntMat v = IntMat::identity(n);

    for (std::size_t t = 0; t < n; ++t) {
        for (;;) {
            std::size_t pi = t, pj = t;
            if (!detail::snf_find_pivot(a, t, pi, pj)) {
                // remaining block is zero
                break;
            }
            if (pi != t) {
                a.swap_rows(t, pi);
                u.swap_rows(t, pi);
            }
            if (pj != t) {
                a.swap_cols(t, pj);
                v.swap_cols(t, pj);
            }
            bool clean = true;
            for (std::size_t i = t + 1; i < n; ++i) {
                if (a(i, t) == 0) continue;
                Int q = a(i, t) / a(t, t);
                a.add_row(i, t, -q);
                u.add_row(i, t, -q);
                if (a(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (a(t, j) == 0) continue;
                Int q = a(t, j) / a(t, t);
                a.add_col(j, t, -q);
                v.add_col(j, t, -q);
                if (a(t, j) != 0) clean = false;
            }
            if (!clean) continue;
            // enforce divisibility of the trailing block by the pivot
            bool divisible = true;
            for (std::size_t i = t + 1; i < n && divisible; ++i)
                for (std::size_t j = t + 1; j < n && divisible; ++j)
                    if (a(i, j) % a(t, t) != 0) {
                        a.add_row(t, i, 1);
                        u.add_row(t, i, 1);
                        divisible = false;
                    }
            if (divisible) break;
        }
        if (a(t, t) < 0) {
            a.scale_row(t, -1);
            u.scale_row(t, -1);
        }
    }

    SmithData s;
    s.u = std::move(u);
    s.v = std::move(v);
    s.divisors.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        s.divisors[i] = a(i, i);
        if (s.divisors[i] == 0 && !allow_singular)
            throw Degenerate("smith_normal_form: singular matrix");
    }
    return s;
}

} // namespace toral
