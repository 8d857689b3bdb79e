#pragma once

// Exact dense linear algebra over Scalar, as free functions on Eigen types.
// Forward elimination is fraction-free (Bareiss) on denominator-cleared rows,
// so intermediate entries stay in Z[sqrt d]; pivot normalization and back
// substitution use field division.  Pivoting is deterministic: first nonzero
// row per column.

#include <Eigen/Core>

#include <optional>
#include <utility>
#include <vector>

#include "qtoric/errors.hpp"
#include "qtoric/scalar.hpp"

namespace qtoric {

inline Scalar pairing(const VecS& u, const VecS& v) {
    if (u.size() != v.size()) throw InternalError("pairing: size mismatch");
    Scalar s;
    for (Eigen::Index i = 0; i < u.size(); ++i) s += u(i) * v(i);
    return s;
}

inline bool isIntegral(const Scalar& x) {
    return denominator(x.rationalPart()) == 1 && denominator(x.sqrtPart()) == 1;
}

inline void clearRowDenominators(MatS& m) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        Int l = 1;
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            l = lcm(l, Int(denominator(m(i, j).rationalPart())));
            l = lcm(l, Int(denominator(m(i, j).sqrtPart())));
        }
        if (l == 1) continue;
        const Scalar s{Rat(l)};
        for (Eigen::Index j = 0; j < m.cols(); ++j) m(i, j) *= s;
    }
}

struct Echelon {
    MatS mat;
    std::vector<int> pivotCols;
    int rank = 0;
};

inline Echelon fractionFreeEchelon(MatS m) {
    clearRowDenominators(m);
    const Eigen::Index rows = m.rows();
    const Eigen::Index cols = m.cols();
    Echelon e;
    Scalar prev(1);
    Eigen::Index r = 0;
    for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
        Eigen::Index p = -1;
        for (Eigen::Index i = r; i < rows; ++i) {
            if (!m(i, c).isZero()) {
                p = i;
                break;
            }
        }
        if (p < 0) continue;
        if (p != r) m.row(p).swap(m.row(r));
        const Scalar piv = m(r, c);
        for (Eigen::Index i = r + 1; i < rows; ++i) {
            const Scalar f = m(i, c);
            for (Eigen::Index j = c; j < cols; ++j) {
                m(i, j) = (piv * m(i, j) - f * m(r, j)) / prev;
                if (!isIntegral(m(i, j)))
                    throw InternalError("fraction-free elimination: inexact division");
            }
        }
        prev = piv;
        e.pivotCols.push_back(static_cast<int>(c));
        ++r;
    }
    e.rank = static_cast<int>(e.pivotCols.size());
    e.mat = std::move(m);
    return e;
}

inline int rank(const MatS& m) { return fractionFreeEchelon(m).rank; }

// Reduced row echelon form; pivots normalized to 1, zeros above pivots.
inline std::pair<MatS, std::vector<int>> reducedRowEchelon(const MatS& input) {
    Echelon e = fractionFreeEchelon(input);
    MatS m = std::move(e.mat);
    for (int k = static_cast<int>(e.pivotCols.size()) - 1; k >= 0; --k) {
        const int c = e.pivotCols[static_cast<size_t>(k)];
        const Scalar piv = m(k, c);
        for (Eigen::Index j = c; j < m.cols(); ++j) m(k, j) /= piv;
        for (Eigen::Index i = 0; i < k; ++i) {
            const Scalar f = m(i, c);
            if (f.isZero()) continue;
            for (Eigen::Index j = c; j < m.cols(); ++j) m(i, j) -= f * m(k, j);
        }
    }
    return {std::move(m), std::move(e.pivotCols)};
}

// Unique solution of a square system, or nullopt when the matrix is singular.
inline std::optional<VecS> solveSquare(const MatS& a, const VecS& b) {
    const Eigen::Index n = a.rows();
    if (a.cols() != n || b.size() != n) throw InternalError("solveSquare: shape mismatch");
    MatS aug(n, n + 1);
    aug.leftCols(n) = a;
    aug.col(n) = b;
    auto [r, piv] = reducedRowEchelon(aug);
    if (static_cast<Eigen::Index>(piv.size()) != n || (n > 0 && piv.back() >= n))
        return std::nullopt;
    return VecS(r.col(n));
}

// X with A*X = B for A of full column rank; nullopt when rank-deficient or
// inconsistent.
inline std::optional<MatS> solveExact(const MatS& a, const MatS& b) {
    if (a.rows() != b.rows()) throw InternalError("solveExact: shape mismatch");
    const Eigen::Index k = a.cols();
    MatS aug(a.rows(), k + b.cols());
    aug.leftCols(k) = a;
    aug.rightCols(b.cols()) = b;
    auto [r, piv] = reducedRowEchelon(aug);
    if (static_cast<Eigen::Index>(piv.size()) != k) return std::nullopt;
    for (size_t t = 0; t < piv.size(); ++t)
        if (piv[t] != static_cast<int>(t)) return std::nullopt;
    return MatS(r.topRows(k).rightCols(b.cols()));
}

inline std::optional<MatS> inverse(const MatS& a) {
    const Eigen::Index n = a.rows();
    if (a.cols() != n) throw InternalError("inverse: matrix not square");
    MatS id = MatS::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) id(i, i) = Scalar(1);
    return solveExact(a, id);
}

// Columns form a deterministic basis of {x : A x = 0}, read off the RREF.
inline MatS nullspaceBasis(const MatS& a) {
    auto [r, piv] = reducedRowEchelon(a);
    const Eigen::Index cols = a.cols();
    std::vector<char> isPivot(static_cast<size_t>(cols), 0);
    for (int c : piv) isPivot[static_cast<size_t>(c)] = 1;
    MatS basis = MatS::Zero(cols, cols - static_cast<Eigen::Index>(piv.size()));
    Eigen::Index bi = 0;
    for (Eigen::Index f = 0; f < cols; ++f) {
        if (isPivot[static_cast<size_t>(f)]) continue;
        basis(f, bi) = Scalar(1);
        for (size_t t = 0; t < piv.size(); ++t) basis(piv[t], bi) = -r(static_cast<Eigen::Index>(t), f);
        ++bi;
    }
    return basis;
}

inline MatS toScalarMatrix(const MatZ& m) {
    MatS r(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) r(i, j) = Scalar(m(i, j));
    return r;
}

// Rank of the affine hull of a point set.
inline int affineRank(const std::vector<VecS>& points) {
    if (points.size() <= 1) return 0;
    MatS diffs(points.size() - 1, points[0].size());
    for (size_t i = 1; i < points.size(); ++i)
        diffs.row(static_cast<Eigen::Index>(i - 1)) = (points[i] - points[0]).transpose();
    return rank(diffs);
}

} // namespace qtoric
