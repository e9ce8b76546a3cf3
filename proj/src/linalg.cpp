#include "paracon/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace paracon {

namespace {

using ZMat = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;

// Row-scaled integer copy.  Scaling rows by positive integers changes neither
// the rank nor the kernel.
ZMat clear_denominators(const QMatrix& m) {
    ZMat z(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        Int l = 1;
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            l = lcm(l, m(i, j).get_den());
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            Rat s = m(i, j) * l;
            z(i, j) = s.get_num();
        }
    }
    return z;
}

struct Echelon {
    ZMat m;                      // fraction-free row echelon form
    std::vector<int> pivot_col;  // pivot column of row r, strictly increasing
};

// Bareiss one-step fraction-free elimination.  All divisions are exact;
// entries stay integral and are bounded by minors of the input.
Echelon bareiss(ZMat a) {
    const int rows = static_cast<int>(a.rows());
    const int cols = static_cast<int>(a.cols());
    Echelon e;
    Int prev = 1;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        // smallest nonzero pivot in the column limits entry growth
        int piv = -1;
        for (int i = r; i < rows; ++i) {
            if (a(i, c) == 0) continue;
            if (piv < 0 || mpz_cmpabs(a(i, c).get_mpz_t(), a(piv, c).get_mpz_t()) < 0)
                piv = i;
        }
        if (piv < 0) continue;
        if (piv != r) a.row(piv).swap(a.row(r));
        for (int i = r + 1; i < rows; ++i) {
            for (int j = c + 1; j < cols; ++j) {
                Int t = a(r, c) * a(i, j) - a(i, c) * a(r, j);
                mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a(i, c) = 0;
        }
        prev = a(r, c);
        e.pivot_col.push_back(c);
        ++r;
    }
    e.m = std::move(a);
    return e;
}

} // namespace

int rank_of(const QMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    return static_cast<int>(bareiss(clear_denominators(m)).pivot_col.size());
}

std::vector<QVector> kernel_basis(const QMatrix& m) {
    const int cols = static_cast<int>(m.cols());
    if (cols == 0) return {};
    if (m.rows() == 0) {
        std::vector<QVector> id;
        for (int j = 0; j < cols; ++j) {
            QVector v = QVector::Zero(cols);
            v(j) = 1;
            id.push_back(v);
        }
        return id;
    }
    Echelon e = bareiss(clear_denominators(m));
    const int r = static_cast<int>(e.pivot_col.size());
    std::vector<char> is_pivot(cols, 0);
    for (int c : e.pivot_col) is_pivot[c] = 1;

    std::vector<QVector> basis;
    for (int f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        QVector v = QVector::Zero(cols);
        v(f) = 1;
        // back-substitute through the echelon rows
        for (int i = r - 1; i >= 0; --i) {
            int pc = e.pivot_col[i];
            Rat acc = 0;
            for (int j = pc + 1; j < cols; ++j)
                if (v(j) != 0) acc += Rat(e.m(i, j)) * v(j);
            v(pc) = -acc / Rat(e.m(i, pc));
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

QMatrix inverse(const QMatrix& m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("inverse: matrix not square");
    const int n = static_cast<int>(m.rows());
    QMatrix a = m;
    QMatrix inv = QMatrix::Identity(n, n);
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int i = c; i < n; ++i)
            if (a(i, c) != 0) { piv = i; break; }
        if (piv < 0) throw std::invalid_argument("inverse: singular matrix");
        if (piv != c) { a.row(piv).swap(a.row(c)); inv.row(piv).swap(inv.row(c)); }
        Rat d = a(c, c);
        for (int j = 0; j < n; ++j) { a(c, j) /= d; inv(c, j) /= d; }
        for (int i = 0; i < n; ++i) {
            if (i == c || a(i, c) == 0) continue;
            Rat f = a(i, c);
            for (int j = 0; j < n; ++j) {
                a(i, j) -= f * a(c, j);
                inv(i, j) -= f * inv(c, j);
            }
        }
    }
    return inv;
}

QVector solve(const QMatrix& m, const QVector& rhs) {
    const int rows = static_cast<int>(m.rows());
    const int cols = static_cast<int>(m.cols());
    QMatrix aug(rows, cols + 1);
    aug.leftCols(cols) = m;
    aug.col(cols) = rhs;
    // plain rational Gauss-Jordan; sizes here are small
    int r = 0;
    std::vector<int> pivot_col;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (aug(i, c) != 0) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != r) aug.row(piv).swap(aug.row(r));
        Rat d = aug(r, c);
        for (int j = c; j <= cols; ++j) aug(r, j) /= d;
        for (int i = 0; i < rows; ++i) {
            if (i == r || aug(i, c) == 0) continue;
            Rat f = aug(i, c);
            for (int j = c; j <= cols; ++j) aug(i, j) -= f * aug(r, j);
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (int i = r; i < rows; ++i)
        if (aug(i, cols) != 0)
            throw std::invalid_argument("solve: inconsistent system");
    QVector x = QVector::Zero(cols);
    for (int i = 0; i < r; ++i) x(pivot_col[i]) = aug(i, cols);
    return x;
}

Rat interpolation_node(int k) {
    if (k == 0) return 0;
    int half = (k + 1) / 2;
    return (k % 2 == 1) ? Rat(half) : Rat(-half);
}

std::vector<Rat> poly_coeffs(const std::vector<Rat>& nodes,
                             const std::vector<Rat>& values, int count) {
    const int n = static_cast<int>(nodes.size());
    if (n == 0 || static_cast<int>(values.size()) != n)
        throw std::invalid_argument("poly_coeffs: bad sample lists");
    // Newton divided differences
    std::vector<Rat> dd = values;
    for (int level = 1; level < n; ++level) {
        for (int i = n - 1; i >= level; --i) {
            Rat den = nodes[i] - nodes[i - level];
            if (den == 0)
                throw std::invalid_argument("poly_coeffs: duplicate nodes");
            dd[i] = (dd[i] - dd[i - 1]) / den;
        }
    }
    // expand the Newton form into monomial coefficients
    std::vector<Rat> coeffs(n, Rat(0));
    std::vector<Rat> base(n, Rat(0)); // product (x - x_0)...(x - x_{i-1})
    base[0] = 1;
    int base_len = 1;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < base_len; ++j) coeffs[j] += dd[i] * base[j];
        if (i + 1 < n) {
            // base *= (x - nodes[i])
            for (int j = base_len; j > 0; --j)
                base[j] = base[j - 1] - nodes[i] * base[j];
            base[0] = -nodes[i] * base[0];
            ++base_len;
        }
    }
    coeffs.resize(static_cast<size_t>(count), Rat(0));
    return coeffs;
}

std::vector<Rat> interpolate(const std::vector<std::pair<Rat, Rat>>& samples) {
    if (samples.empty())
        throw std::invalid_argument("interpolate: no samples");
    std::vector<Rat> nodes, values;
    nodes.reserve(samples.size());
    values.reserve(samples.size());
    for (const auto& [x, y] : samples) {
        nodes.push_back(x);
        values.push_back(y);
    }
    std::vector<Rat> c = poly_coeffs(nodes, values, static_cast<int>(samples.size()));
    while (!c.empty() && c.back() == 0) c.pop_back();
    return c;
}

Rat eval_poly(const std::vector<Rat>& coeffs, const Rat& x) {
    Rat acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

} // namespace paracon
