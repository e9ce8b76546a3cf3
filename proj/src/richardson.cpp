#include "paracon/richardson.hpp"

#include <stdexcept>

namespace paracon {

int richardson_certificate(const ParabolicDecomposition& p, const QVector& e_coords) {
    const AlgebraBasis& g = *p.algebra;
    std::vector<int> idx_p = p.idx_n;
    idx_p.insert(idx_p.end(), p.idx_levi.begin(), p.idx_levi.end());
    QMatrix m = QMatrix::Zero(g.dim, static_cast<int>(idx_p.size()));
    for (int col = 0; col < static_cast<int>(idx_p.size()); ++col) {
        int j = idx_p[static_cast<size_t>(col)];
        for (int a = 0; a < g.dim; ++a) {
            if (e_coords(a) == 0) continue;
            for (const auto& [k, c] : g.bracket_list(j, a))
                m(k, col) += e_coords(a) * c;
        }
    }
    return rank_of(m);
}

RichardsonElement find_richardson(const ParabolicDecomposition& p, int trials,
                                  std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("find_richardson: trials >= 1");
    const AlgebraBasis& g = *p.algebra;
    const int dn = p.dim_n();
    SplitMix64 gen(seed);
    for (int t = 0; t < trials; ++t) {
        QVector coords = QVector::Zero(g.dim);
        for (int a : p.idx_n) coords(a) = Rat(gen.int_in(-20, 20));
        int cert = richardson_certificate(p, coords);
        if (cert == dn) {
            RichardsonElement e;
            e.coords = std::move(coords);
            e.matrix = g.dense_of(e.coords);
            e.certificate_rank = cert;
            e.seed = seed;
            return e;
        }
    }
    throw std::runtime_error("find_richardson: no certified element in " +
                             std::to_string(trials) + " draws");
}

Partition jordan_type(const QMatrix& e) {
    const int n = static_cast<int>(e.rows());
    std::vector<int> block_counts;  // block_counts[k-1] = #{Jordan blocks of size >= k}
    QMatrix power = e;
    int prev_rank = n;
    for (int k = 1; k <= n; ++k) {
        int r = rank_of(power);
        block_counts.push_back(prev_rank - r);
        prev_rank = r;
        if (r == 0) break;
        power = power * e;
    }
    if (prev_rank != 0)
        throw std::invalid_argument("jordan_type: matrix is not nilpotent");
    return dual(Partition(std::move(block_counts)));
}

CentraliserData centraliser(const AlgebraBasis& g, const QVector& e_coords) {
    CentraliserData c;
    c.basis = kernel_basis(g.ad_matrix(e_coords));
    c.dim = static_cast<int>(c.basis.size());
    const int k = c.dim;

    // coordinates of each pairwise bracket inside span(basis)
    QMatrix u(g.dim, k);
    for (int i = 0; i < k; ++i) u.col(i) = c.basis[static_cast<size_t>(i)];
    c.structure.assign(static_cast<size_t>(k) * k, {});
    std::vector<std::vector<QVector>> brackets(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            QVector w = g.bracket(c.basis[static_cast<size_t>(i)],
                                  c.basis[static_cast<size_t>(j)]);
            QVector sub = solve(u, w);  // closure makes this consistent
            BracketList list;
            for (int t = 0; t < k; ++t)
                if (sub(t) != 0) list.emplace_back(t, sub(t));
            BracketList neg;
            for (auto& [t, v] : list) neg.emplace_back(t, -v);
            c.structure[static_cast<size_t>(i) * k + j] = std::move(list);
            c.structure[static_cast<size_t>(j) * k + i] = std::move(neg);
            brackets[static_cast<size_t>(i)].push_back(std::move(w));
        }

    // centre: x with [x, u_j] = 0 for every j
    QMatrix cm = QMatrix::Zero(k * k, k);
    for (int j = 0; j < k; ++j)
        for (int i = 0; i < k; ++i)
            for (const auto& [t, v] : c.bracket_list(i, j))
                cm(j * k + t, i) = v;
    c.centre_dim = k - rank_of(cm);

    // derived subalgebra: span of all pairwise brackets
    int pair_count = k * (k - 1) / 2;
    QMatrix dm = QMatrix::Zero(g.dim, pair_count);
    int col = 0;
    for (int i = 0; i < k; ++i)
        for (const auto& w : brackets[static_cast<size_t>(i)]) dm.col(col++) = w;
    c.derived_dim = pair_count == 0 ? 0 : rank_of(dm);
    return c;
}

int subalgebra_index(const CentraliserData& c, int trials, std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("subalgebra_index: trials >= 1");
    SplitMix64 gen(seed);
    int best = -1;
    for (int t = 0; t < trials; ++t) {
        QVector xi = random_point(c.dim, gen);
        QMatrix b = QMatrix::Zero(c.dim, c.dim);
        for (int i = 0; i < c.dim; ++i)
            for (int j = i + 1; j < c.dim; ++j) {
                Rat v = 0;
                for (const auto& [k2, coef] : c.bracket_list(i, j)) v += coef * xi(k2);
                b(i, j) = v;
                b(j, i) = -v;
            }
        int idx = c.dim - rank_of(b);
        if (best < 0 || idx < best) best = idx;
    }
    return best;
}

SubregularStructure subregular_structure(const CentraliserData& c, int rank_l) {
    SubregularStructure s;
    s.centre_dim = c.centre_dim;
    s.derived_dim = c.derived_dim;
    s.centre_ok = (c.centre_dim == rank_l - 1);
    s.derived_ok = (c.derived_dim >= 2);
    return s;
}

} // namespace paracon
