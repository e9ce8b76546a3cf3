#include "paracon/contraction.hpp"

#include <stdexcept>

namespace paracon {

QVector ContractedAlgebra::bracket(const QVector& x, const QVector& y) const {
    QVector z = QVector::Zero(dim);
    for (int i = 0; i < dim; ++i) {
        if (x(i) == 0) continue;
        for (int j = 0; j < dim; ++j) {
            if (y(j) == 0) continue;
            Rat f = x(i) * y(j);
            for (const auto& [k, c] : bracket_list(i, j)) z(k) += f * c;
        }
    }
    return z;
}

ContractedAlgebra contract(const ParabolicDecomposition& p) {
    const AlgebraBasis& g = *p.algebra;
    ContractedAlgebra q;
    q.parent = &p;
    q.dim = g.dim;
    q.structure.assign(static_cast<size_t>(g.dim) * g.dim, {});
    for (int i = 0; i < g.dim; ++i) {
        const bool i_lower = p.region[static_cast<size_t>(i)] == Region::lower;
        for (int j = 0; j < g.dim; ++j) {
            const bool j_lower = p.region[static_cast<size_t>(j)] == Region::lower;
            if (i_lower && j_lower) continue;  // abelian ideal
            BracketList out;
            for (const auto& [k, c] : g.bracket_list(i, j)) {
                if ((i_lower || j_lower) &&
                    p.region[static_cast<size_t>(k)] != Region::lower)
                    continue;  // project mixed brackets onto n_-
                out.emplace_back(k, c);
            }
            q.structure[static_cast<size_t>(i) * g.dim + j] = std::move(out);
        }
    }
    return q;
}

QVector family_bracket(const ParabolicDecomposition& p, const QVector& x,
                       const QVector& y, const Rat& t) {
    if (t == 0)
        throw std::invalid_argument("family_bracket: t = 0 (use contract)");
    const AlgebraBasis& g = *p.algebra;
    auto scale_lower = [&](const QVector& v, const Rat& f) {
        QVector w = v;
        for (int a : p.idx_nminus) w(a) *= f;
        return w;
    };
    QVector z = g.bracket(scale_lower(x, t), scale_lower(y, t));
    return scale_lower(z, Rat(1) / t);
}

QMatrix coadjoint_form(const ContractedAlgebra& q, const QVector& xi) {
    QMatrix b = QMatrix::Zero(q.dim, q.dim);
    for (int i = 0; i < q.dim; ++i)
        for (int j = i + 1; j < q.dim; ++j) {
            Rat v = 0;
            for (const auto& [k, c] : q.bracket_list(i, j)) v += c * xi(k);
            b(i, j) = v;
            b(j, i) = -v;
        }
    return b;
}

int stabilizer_dim(const ContractedAlgebra& q, const QVector& xi) {
    return q.dim - rank_of(coadjoint_form(q, xi));
}

IndexReport index_of(const ContractedAlgebra& q, int trials, std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("index_of: trials must be >= 1");
    IndexReport rep;
    rep.trials = trials;
    rep.seed = seed;
    SplitMix64 gen(seed);
    for (int t = 0; t < trials; ++t) {
        int d = stabilizer_dim(q, random_point(q.dim, gen));
        if (rep.index < 0 || d < rep.index) rep.index = d;
    }
    return rep;
}

QVector coadjoint_derivative(const ContractedAlgebra& q, int x, const QVector& xi) {
    QVector out = QVector::Zero(q.dim);
    for (int a = 0; a < q.dim; ++a) {
        Rat v = 0;
        for (const auto& [k, c] : q.bracket_list(x, a)) v += c * xi(k);
        out(a) = -v;
    }
    return out;
}

QVector adjoint_derivative(const ContractedAlgebra& q, int x, const QVector& v) {
    QVector out = QVector::Zero(q.dim);
    for (int j = 0; j < q.dim; ++j) {
        if (v(j) == 0) continue;
        for (const auto& [k, c] : q.bracket_list(x, j)) out(k) += c * v(j);
    }
    return out;
}

} // namespace paracon
