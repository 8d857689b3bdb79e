#include "qtoric/intmatrix.hpp"

#include <cstdlib>

#include "qtoric/errors.hpp"

namespace qtoric {

namespace {

Int absInt(const Int& x) { return x < 0 ? Int(-x) : x; }

// floor division, divisor > 0
Int floorDiv(const Int& x, const Int& m) {
    Int q = x / m;
    if (x % m != 0 && x < 0) --q;
    return q;
}

void rowSub(MatZ& a, Eigen::Index dst, Eigen::Index src, const Int& q) {
    if (q == 0) return;
    for (Eigen::Index j = 0; j < a.cols(); ++j) a(dst, j) -= q * a(src, j);
}

void colSub(MatZ& a, Eigen::Index dst, Eigen::Index src, const Int& q) {
    if (q == 0) return;
    for (Eigen::Index i = 0; i < a.rows(); ++i) a(i, dst) -= q * a(i, src);
}

} // namespace

MatZ hermiteRowBasis(MatZ a) {
    const Eigen::Index rows = a.rows();
    const Eigen::Index cols = a.cols();
    Eigen::Index r = 0;
    for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
        // Euclidean reduction of column c among rows r..end.
        while (true) {
            Eigen::Index p = -1;
            for (Eigen::Index i = r; i < rows; ++i) {
                if (a(i, c) != 0 && (p < 0 || absInt(a(i, c)) < absInt(a(p, c)))) p = i;
            }
            if (p < 0) break;
            if (p != r) a.row(p).swap(a.row(r));
            bool residue = false;
            for (Eigen::Index i = r + 1; i < rows; ++i) {
                if (a(i, c) == 0) continue;
                rowSub(a, i, r, Int(a(i, c) / a(r, c)));
                if (a(i, c) != 0) residue = true;
            }
            if (!residue) break;
        }
        if (a(r, c) == 0) continue;
        if (a(r, c) < 0)
            for (Eigen::Index j = 0; j < cols; ++j) a(r, j) = -a(r, j);
        for (Eigen::Index i = 0; i < r; ++i) rowSub(a, i, r, floorDiv(a(i, c), a(r, c)));
        ++r;
    }
    return a.topRows(r);
}

SmithResult smithNormalForm(MatZ a) {
    const Eigen::Index rows = a.rows();
    const Eigen::Index cols = a.cols();
    const Eigen::Index mi = rows < cols ? rows : cols;
    SmithResult res;
    Eigen::Index t = 0;
    while (t < mi) {
        // smallest-magnitude pivot in the trailing block
        Eigen::Index pi = -1, pj = -1;
        for (Eigen::Index i = t; i < rows; ++i)
            for (Eigen::Index j = t; j < cols; ++j)
                if (a(i, j) != 0 && (pi < 0 || absInt(a(i, j)) < absInt(a(pi, pj)))) {
                    pi = i;
                    pj = j;
                }
        if (pi < 0) break;
        if (pi != t) a.row(pi).swap(a.row(t));
        if (pj != t) a.col(pj).swap(a.col(t));

        bool clean = false;
        while (!clean) {
            for (Eigen::Index i = t + 1; i < rows; ++i) rowSub(a, i, t, Int(a(i, t) / a(t, t)));
            for (Eigen::Index j = t + 1; j < cols; ++j) colSub(a, j, t, Int(a(t, j) / a(t, t)));
            clean = true;
            for (Eigen::Index i = t + 1; i < rows && clean; ++i)
                if (a(i, t) != 0) {
                    a.row(i).swap(a.row(t));
                    clean = false;
                }
            for (Eigen::Index j = t + 1; j < cols && clean; ++j)
                if (a(t, j) != 0) {
                    a.col(j).swap(a.col(t));
                    clean = false;
                }
            if (!clean) continue;
            // divisibility fix: fold a row carrying a bad entry into row t
            for (Eigen::Index i = t + 1; i < rows && clean; ++i)
                for (Eigen::Index j = t + 1; j < cols && clean; ++j)
                    if (a(i, j) % a(t, t) != 0) {
                        for (Eigen::Index c = 0; c < cols; ++c) a(t, c) += a(i, c);
                        clean = false;
                    }
        }
        if (a(t, t) < 0) a(t, t) = -a(t, t);
        ++t;
    }
    for (Eigen::Index i = 0; i < t; ++i) res.invariants.push_back(a(i, i));
    for (Eigen::Index i = t; i < mi; ++i) res.invariants.push_back(0);
    res.rank = static_cast<int>(t);
    return res;
}

} // namespace qtoric
