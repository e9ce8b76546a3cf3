#include "paracon/charpoly.hpp"

#include <stdexcept>

namespace paracon {

CharPoly char_poly(const QMatrix& y) {
    if (y.rows() != y.cols())
        throw std::invalid_argument("char_poly: matrix not square");
    const int n = static_cast<int>(y.rows());
    CharPoly cp;
    cp.c.assign(static_cast<size_t>(n) + 1, Rat(0));
    cp.c[0] = 1;
    cp.aux.reserve(static_cast<size_t>(n));
    QMatrix m = QMatrix::Identity(n, n);
    for (int k = 1; k <= n; ++k) {
        cp.aux.push_back(m);
        QMatrix ym(n, n);
        // manual product: the profiler-visible hot spot at desk sizes
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Rat acc = 0;
                for (int t = 0; t < n; ++t)
                    if (y(i, t) != 0 && m(t, j) != 0) acc += y(i, t) * m(t, j);
                ym(i, j) = std::move(acc);
            }
        Rat ck = -ym.trace() / k;
        cp.c[static_cast<size_t>(k)] = ck;
        m = std::move(ym);
        for (int i = 0; i < n; ++i) m(i, i) += ck;
    }
    return cp;
}

Rat char_coeff_derivative(const CharPoly& cp, int k, const SparseMat& dir) {
    const QMatrix& m = cp.aux[static_cast<size_t>(k - 1)];
    Rat acc = 0;
    for (const auto& e : dir.entries) acc += m(e.col, e.row) * e.val;
    return -acc;
}

Pfaffian pfaffian(const QMatrix& a) {
    const int n = static_cast<int>(a.rows());
    if (n % 2 != 0 || a.cols() != n)
        throw std::invalid_argument("pfaffian: need an even square matrix");
    if (a.transpose() != -a)
        throw std::invalid_argument("pfaffian: matrix not skew-symmetric");
    if (n > 20)
        throw std::invalid_argument("pfaffian: subset recursion capped at 20");

    // pf[mask] over even-cardinality index subsets; recursion on the lowest
    // set bit:  Pf(S) = sum_j (-1)^{pos(j)+1} a(i,j) Pf(S - {i,j})
    const unsigned full = (n == 0) ? 0u : ((1u << n) - 1u);
    std::vector<Rat> pf(static_cast<size_t>(full) + 1, Rat(0));
    pf[0] = 1;
    for (unsigned mask = 1; mask <= full; ++mask) {
        int bits = __builtin_popcount(mask);
        if (bits % 2 != 0) continue;
        int i = __builtin_ctz(mask);
        unsigned rest = mask & ~(1u << i);
        Rat acc = 0;
        int pos = 0;
        for (unsigned m2 = rest; m2; m2 &= m2 - 1, ++pos) {
            int j = __builtin_ctz(m2);
            if (a(i, j) == 0) continue;
            Rat term = a(i, j) * pf[rest & ~(1u << j)];
            if (pos % 2 == 0) acc += term;
            else acc -= term;
        }
        pf[mask] = std::move(acc);
    }

    Pfaffian out;
    out.value = pf[full];
    out.removed_two = QMatrix::Zero(n, n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            out.removed_two(u, v) = pf[full & ~(1u << u) & ~(1u << v)];
    return out;
}

Rat pfaffian_derivative(const Pfaffian& pf, const SparseMat& dir) {
    Rat acc = 0;
    for (const auto& e : dir.entries) {
        int u = e.row, v = e.col;
        if (u >= v) continue;  // skew direction: lower entries mirror upper
        Rat g = pf.removed_two(u, v);
        if (((u + v) % 2) == 1) acc += g * e.val;  // sign (-1)^{u+v+1}, 0-indexed
        else acc -= g * e.val;
    }
    return acc;
}

} // namespace paracon
