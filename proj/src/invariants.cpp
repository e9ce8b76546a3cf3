#include "paracon/invariants.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace paracon {

namespace {

// J X for the anti-diagonal orthogonal form: row r moves to n-1-r
SparseMat apply_so_form(const SparseMat& m) {
    SparseMat out;
    out.n = m.n;
    out.entries.reserve(m.entries.size());
    for (const auto& e : m.entries) out.entries.push_back({m.n - 1 - e.row, e.col, e.val});
    return out;
}

QMatrix so_form_times(const QMatrix& y) {
    const int n = static_cast<int>(y.rows());
    QMatrix a(n, n);
    for (int i = 0; i < n; ++i) a.row(i) = y.row(n - 1 - i);
    return a;
}

int top_nonzero_of(const std::vector<Rat>& coeffs) {
    for (int j = static_cast<int>(coeffs.size()) - 1; j >= 0; --j)
        if (coeffs[static_cast<size_t>(j)] != 0) return j;
    return -1;
}

} // namespace

InvariantFamily::InvariantFamily(const AlgebraBasis& g) : g_(&g) {
    const int n = g.n;
    struct Item { int degree; int coeff; };
    std::vector<Item> items;
    switch (g.type.family) {
        case Family::GL:
            for (int k = 1; k <= n; ++k) items.push_back({k, k});
            break;
        case Family::A:
            for (int k = 2; k <= n; ++k) items.push_back({k, k});
            break;
        case Family::B:
        case Family::C:
            for (int k = 2; k <= n; k += 2) items.push_back({k, k});
            break;
        case Family::D:
            for (int k = 2; k <= n - 2; k += 2) items.push_back({k, k});
            items.push_back({n / 2, -1});  // Pfaffian
            break;
    }
    std::stable_sort(items.begin(), items.end(),
                     [](const Item& a, const Item& b) { return a.degree < b.degree; });
    for (const auto& it : items) {
        degrees_.push_back(it.degree);
        coeff_index_.push_back(it.coeff);
        max_degree_ = std::max(max_degree_, it.degree);
    }
    if (count() != g.type.invariant_count())
        throw std::logic_error("InvariantFamily: unexpected invariant count");
}

QMatrix InvariantFamily::matrix_at(const QVector& pt, PointSide side) const {
    return side == PointSide::coadjoint ? g_->dual_combination(pt) : g_->dense_of(pt);
}

const SparseMat& InvariantFamily::direction(int a, PointSide side) const {
    return side == PointSide::coadjoint ? g_->dual[static_cast<size_t>(a)]
                                        : g_->basis[static_cast<size_t>(a)];
}

std::vector<Rat> InvariantFamily::eval_all(const QVector& pt, PointSide side) const {
    QMatrix y = matrix_at(pt, side);
    CharPoly cp = char_poly(y);
    std::vector<Rat> out;
    out.reserve(static_cast<size_t>(count()));
    Pfaffian pf;
    bool have_pf = false;
    for (int i = 0; i < count(); ++i) {
        int k = coeff_index_[static_cast<size_t>(i)];
        if (k >= 0) {
            out.push_back(cp.c[static_cast<size_t>(k)]);
        } else {
            if (!have_pf) { pf = pfaffian(so_form_times(y)); have_pf = true; }
            out.push_back(pf.value);
        }
    }
    return out;
}

Rat InvariantFamily::eval(int i, const QVector& pt, PointSide side) const {
    return eval_all(pt, side)[static_cast<size_t>(i)];
}

InvariantFamily::Evaluation InvariantFamily::eval_all_grad(const QVector& pt,
                                                           PointSide side) const {
    const int dim = g_->dim;
    QMatrix y = matrix_at(pt, side);
    CharPoly cp = char_poly(y);
    Pfaffian pf;
    bool have_pf = false;
    Evaluation ev;
    ev.value.reserve(static_cast<size_t>(count()));
    for (int i = 0; i < count(); ++i) {
        int k = coeff_index_[static_cast<size_t>(i)];
        QVector grad(dim);
        if (k >= 0) {
            ev.value.push_back(cp.c[static_cast<size_t>(k)]);
            for (int a = 0; a < dim; ++a)
                grad(a) = char_coeff_derivative(cp, k, direction(a, side));
        } else {
            if (!have_pf) { pf = pfaffian(so_form_times(y)); have_pf = true; }
            ev.value.push_back(pf.value);
            for (int a = 0; a < dim; ++a)
                grad(a) = pfaffian_derivative(pf, apply_so_form(direction(a, side)));
        }
        ev.gradient.push_back(std::move(grad));
    }
    return ev;
}

int CurvePolys::top_nonzero(int i) const {
    return top_nonzero_of(value[static_cast<size_t>(i)]);
}

CurvePolys expand_on_curve(const InvariantFamily& fam, const QVector& base,
                           const QVector& dir, PointSide side, bool with_grad) {
    const int nodes_n = fam.max_degree() + 1;
    const int dim = fam.algebra().dim;
    std::vector<Rat> nodes(static_cast<size_t>(nodes_n));
    for (int j = 0; j < nodes_n; ++j) nodes[static_cast<size_t>(j)] = interpolation_node(j);

    std::vector<std::vector<Rat>> val_samples(
        static_cast<size_t>(fam.count()), std::vector<Rat>(static_cast<size_t>(nodes_n)));
    // grad_samples[i][a][node]
    std::vector<std::vector<std::vector<Rat>>> grad_samples;
    if (with_grad)
        grad_samples.assign(static_cast<size_t>(fam.count()),
                            std::vector<std::vector<Rat>>(
                                static_cast<size_t>(dim),
                                std::vector<Rat>(static_cast<size_t>(nodes_n))));

    for (int j = 0; j < nodes_n; ++j) {
        QVector pt = base + nodes[static_cast<size_t>(j)] * dir;
        if (with_grad) {
            auto ev = fam.eval_all_grad(pt, side);
            for (int i = 0; i < fam.count(); ++i) {
                val_samples[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                    ev.value[static_cast<size_t>(i)];
                for (int a = 0; a < dim; ++a)
                    grad_samples[static_cast<size_t>(i)][static_cast<size_t>(a)]
                                [static_cast<size_t>(j)] =
                        ev.gradient[static_cast<size_t>(i)](a);
            }
        } else {
            auto v = fam.eval_all(pt, side);
            for (int i = 0; i < fam.count(); ++i)
                val_samples[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                    v[static_cast<size_t>(i)];
        }
    }

    CurvePolys out;
    out.value.resize(static_cast<size_t>(fam.count()));
    if (with_grad) out.grad.resize(static_cast<size_t>(fam.count()));
    for (int i = 0; i < fam.count(); ++i) {
        const int m = fam.degree(i);
        std::vector<Rat> coeffs =
            poly_coeffs(nodes, val_samples[static_cast<size_t>(i)], nodes_n);
        for (int j = m + 1; j < nodes_n; ++j)
            if (coeffs[static_cast<size_t>(j)] != 0)
                throw std::logic_error("expand_on_curve: degree bound violated");
        coeffs.resize(static_cast<size_t>(m) + 1);
        out.value[static_cast<size_t>(i)] = std::move(coeffs);
        if (with_grad) {
            auto& gi = out.grad[static_cast<size_t>(i)];
            gi.resize(static_cast<size_t>(dim));
            for (int a = 0; a < dim; ++a) {
                std::vector<Rat> gc = poly_coeffs(
                    nodes, grad_samples[static_cast<size_t>(i)][static_cast<size_t>(a)],
                    nodes_n);
                gc.resize(static_cast<size_t>(m) + 1);  // gradients have degree < m
                gi[static_cast<size_t>(a)] = std::move(gc);
            }
        }
    }
    return out;
}

// ---- coadjoint bi-grading ---------------------------------------------------

BiComponentProfile bicomponents(const InvariantFamily& fam, int i,
                                const ParabolicDecomposition& p, const QVector& xi) {
    QVector base = p.restrict_to_p(xi);
    QVector dir = p.restrict_to(xi, Region::lower);
    CurvePolys cp = expand_on_curve(fam, base, dir, PointSide::coadjoint, false);
    BiComponentProfile prof;
    prof.invariant = i;
    prof.degree = fam.degree(i);
    prof.values = cp.value[static_cast<size_t>(i)];
    prof.top_nonzero = cp.top_nonzero(i);
    return prof;
}

std::vector<int> n_minus_degrees(const InvariantFamily& fam,
                                 const ParabolicDecomposition& p, int trials,
                                 std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("n_minus_degrees: trials >= 1");
    SplitMix64 gen(seed);
    std::vector<int> b(static_cast<size_t>(fam.count()), -1);
    for (int t = 0; t < trials; ++t) {
        QVector xi = random_point(fam.algebra().dim, gen);
        QVector base = p.restrict_to_p(xi);
        QVector dir = p.restrict_to(xi, Region::lower);
        CurvePolys cp = expand_on_curve(fam, base, dir, PointSide::coadjoint, false);
        for (int i = 0; i < fam.count(); ++i)
            b[static_cast<size_t>(i)] = std::max(b[static_cast<size_t>(i)], cp.top_nonzero(i));
    }
    for (int i = 0; i < fam.count(); ++i)
        if (b[static_cast<size_t>(i)] < 0)
            throw std::runtime_error("n_minus_degrees: invariant vanished at every trial");
    return b;
}

int n_minus_degree(const InvariantFamily& fam, int i, const ParabolicDecomposition& p,
                   int trials, std::uint64_t seed) {
    return n_minus_degrees(fam, p, trials, seed)[static_cast<size_t>(i)];
}

Rat eval_highest(const InvariantFamily& fam, int i, const ParabolicDecomposition& p,
                 const QVector& xi, int b_i) {
    BiComponentProfile prof = bicomponents(fam, i, p, xi);
    return prof.values[static_cast<size_t>(b_i)];
}

// Gradient of the highest component through the chain rule on the scaled
// curve c(s) = xi_p + s xi_{n_-}:
//   p-coordinate a:   d_a F_i^hi (xi) = [s^{b_i}]   (d_a F_i)(c(s))
//   n_--coordinate a: d_a F_i^hi (xi) = [s^{b_i-1}] (d_a F_i)(c(s))
std::vector<QVector> highest_gradients(const InvariantFamily& fam,
                                       const ParabolicDecomposition& p,
                                       const QVector& xi, const std::vector<int>& b) {
    const int dim = fam.algebra().dim;
    QVector base = p.restrict_to_p(xi);
    QVector dir = p.restrict_to(xi, Region::lower);
    CurvePolys cp = expand_on_curve(fam, base, dir, PointSide::coadjoint, true);
    std::vector<QVector> rows;
    for (int i = 0; i < fam.count(); ++i) {
        const int bi = b[static_cast<size_t>(i)];
        QVector row(dim);
        for (int a = 0; a < dim; ++a) {
            const auto& g = cp.grad[static_cast<size_t>(i)][static_cast<size_t>(a)];
            int j = (p.region[static_cast<size_t>(a)] == Region::lower) ? bi - 1 : bi;
            row(a) = (j >= 0 && j < static_cast<int>(g.size())) ? g[static_cast<size_t>(j)]
                                                                : Rat(0);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

// ---- adjoint bi-grading -----------------------------------------------------

std::vector<int> p_top_degrees(const InvariantFamily& fam,
                               const ParabolicDecomposition& p, int trials,
                               std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("p_top_degrees: trials >= 1");
    SplitMix64 gen(seed);
    std::vector<int> t_(static_cast<size_t>(fam.count()), -1);
    for (int t = 0; t < trials; ++t) {
        QVector x = random_point(fam.algebra().dim, gen);
        QVector base = p.restrict_to(x, Region::lower);
        QVector dir = p.restrict_to_p(x);
        CurvePolys cp = expand_on_curve(fam, base, dir, PointSide::adjoint, false);
        for (int i = 0; i < fam.count(); ++i)
            t_[static_cast<size_t>(i)] =
                std::max(t_[static_cast<size_t>(i)], cp.top_nonzero(i));
    }
    for (int i = 0; i < fam.count(); ++i)
        if (t_[static_cast<size_t>(i)] < 0)
            throw std::runtime_error("p_top_degrees: invariant vanished at every trial");
    return t_;
}

Rat eval_adjoint_lowered(const InvariantFamily& fam, int i,
                         const ParabolicDecomposition& p, const QVector& x, int t_i) {
    QVector base = p.restrict_to(x, Region::lower);
    QVector dir = p.restrict_to_p(x);
    CurvePolys cp = expand_on_curve(fam, base, dir, PointSide::adjoint, false);
    return cp.value[static_cast<size_t>(i)][static_cast<size_t>(t_i)];
}

std::vector<QVector> lowered_gradients(const InvariantFamily& fam,
                                       const ParabolicDecomposition& p,
                                       const QVector& x, const std::vector<int>& t) {
    const int dim = fam.algebra().dim;
    QVector base = p.restrict_to(x, Region::lower);
    QVector dir = p.restrict_to_p(x);
    CurvePolys cp = expand_on_curve(fam, base, dir, PointSide::adjoint, true);
    std::vector<QVector> rows;
    for (int i = 0; i < fam.count(); ++i) {
        const int ti = t[static_cast<size_t>(i)];
        QVector row(dim);
        for (int a = 0; a < dim; ++a) {
            const auto& g = cp.grad[static_cast<size_t>(i)][static_cast<size_t>(a)];
            int j = (p.region[static_cast<size_t>(a)] == Region::lower) ? ti : ti - 1;
            row(a) = (j >= 0 && j < static_cast<int>(g.size())) ? g[static_cast<size_t>(j)]
                                                                : Rat(0);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

// ---- slice functions --------------------------------------------------------

QMatrix make_slice_normalizer(const ParabolicDecomposition& p, const QMatrix& e,
                              int trials, std::uint64_t seed) {
    const AlgebraBasis& g = *p.algebra;
    SplitMix64 gen(seed);
    for (int t = 0; t < trials; ++t) {
        QVector coords = QVector::Zero(g.dim);
        for (int a : p.idx_nminus) coords(a) = Rat(gen.int_in(-20, 20));
        QMatrix y = g.dense_of(coords);
        Rat pairing = (y * e).trace();
        if (pairing != 0) {
            y /= pairing;
            return y;
        }
    }
    throw std::runtime_error("make_slice_normalizer: tr(y e) = 0 for every draw");
}

Rat eval_slice(const InvariantFamily& fam, int i, const ParabolicDecomposition& p,
               const QMatrix& e, const QMatrix& v, int b_i) {
    QVector xi = fam.algebra().trace_coords(e + v);
    return eval_highest(fam, i, p, xi, b_i);
}

int slodowy_min_index(const InvariantFamily& fam, int i, const QMatrix& e,
                      int trials, std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("slodowy_min_index: trials >= 1");
    const AlgebraBasis& g = fam.algebra();
    QVector delta = g.trace_coords(e);
    SplitMix64 gen(seed);
    int top = -1;
    for (int t = 0; t < trials; ++t) {
        QVector xi = random_point(g.dim, gen);
        CurvePolys cp = expand_on_curve(fam, xi, delta, PointSide::coadjoint, false);
        top = std::max(top, cp.top_nonzero(i));
    }
    if (top < 0)
        throw std::runtime_error("slodowy_min_index: invariant vanished at every trial");
    return fam.degree(i) - top;
}

Rat slodowy_slice_eval(const InvariantFamily& fam, int i, const QMatrix& e,
                       const QMatrix& y, const QVector& xi, int k_i) {
    const AlgebraBasis& g = fam.algebra();
    if ((y * e).trace() != 1)
        throw std::invalid_argument("slodowy_slice_eval: tr(y e) != 1");
    QVector delta = g.trace_coords(e);
    CurvePolys cp = expand_on_curve(fam, xi, delta, PointSide::coadjoint, false);
    const int j = fam.degree(i) - k_i;
    return cp.value[static_cast<size_t>(i)][static_cast<size_t>(j)];
}

// ---- derivatives, ranks, probes ----------------------------------------------

Rat directional_derivative(const std::function<Rat(const QVector&)>& eval,
                           int total_degree, const QVector& xi, const QVector& d) {
    const int nodes_n = total_degree + 1;
    std::vector<Rat> nodes(static_cast<size_t>(nodes_n)), values;
    values.reserve(static_cast<size_t>(nodes_n));
    for (int j = 0; j < nodes_n; ++j) {
        nodes[static_cast<size_t>(j)] = interpolation_node(j);
        values.push_back(eval(xi + nodes[static_cast<size_t>(j)] * d));
    }
    if (nodes_n == 1) return 0;
    return poly_coeffs(nodes, values, nodes_n)[1];
}

int jacobian_rank(const std::vector<QVector>& rows) {
    if (rows.empty()) return 0;
    QMatrix m(static_cast<int>(rows.size()), rows.front().size());
    for (int i = 0; i < static_cast<int>(rows.size()); ++i)
        m.row(i) = rows[static_cast<size_t>(i)].transpose();
    return rank_of(m);
}

int jacobian_rank(const std::vector<QVector>& rows,
                  const std::vector<QVector>& directions) {
    QMatrix m(static_cast<int>(rows.size()), static_cast<int>(directions.size()));
    for (int i = 0; i < static_cast<int>(rows.size()); ++i)
        for (int j = 0; j < static_cast<int>(directions.size()); ++j)
            m(i, j) = rows[static_cast<size_t>(i)].dot(directions[static_cast<size_t>(j)]);
    return rank_of(m);
}

ProbeReport invariance_probe(const ContractedAlgebra& q, PointSide side,
                             const GradientRows& rows, int trials,
                             std::uint64_t seed) {
    SplitMix64 gen(seed);
    ProbeReport rep;
    for (int t = 0; t < trials; ++t) {
        QVector pt = random_point(q.dim, gen);
        std::vector<QVector> grads = rows(pt);
        for (int x = 0; x < q.dim; ++x) {
            QVector v = side == PointSide::coadjoint ? coadjoint_derivative(q, x, pt)
                                                     : adjoint_derivative(q, x, pt);
            for (size_t i = 0; i < grads.size(); ++i) {
                Rat dot = grads[i].dot(v);
                if (dot != 0) {
                    std::ostringstream os;
                    os << "invariant " << i << ", basis direction " << x << ", trial "
                       << t << ": derivative = " << rat_str(dot);
                    rep.passed = false;
                    rep.witness = os.str();
                    return rep;
                }
            }
        }
    }
    return rep;
}

KostantRecord kostant_probe(const ContractedAlgebra& q, const InvariantFamily& fam,
                            const std::vector<int>& b, const QVector& xi) {
    KostantRecord rec;
    rec.stab_dim = stabilizer_dim(q, xi);
    rec.jac_rank = jacobian_rank(highest_gradients(fam, *q.parent, xi, b));
    const int l = fam.count();
    rec.consistent = (rec.jac_rank == l) == (rec.stab_dim == l);
    return rec;
}

} // namespace paracon
