#include "paracon/lie_algebra.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace paracon {

int LieType::matrix_size() const {
    switch (family) {
        case Family::A:
        case Family::GL: return rank + 1;
        case Family::B: return 2 * rank + 1;
        case Family::C:
        case Family::D: return 2 * rank;
    }
    return 0;
}

int LieType::dim() const {
    const int l = rank;
    switch (family) {
        case Family::A: return l * l + 2 * l;
        case Family::GL: return (l + 1) * (l + 1);
        case Family::B:
        case Family::C: return l * (2 * l + 1);
        case Family::D: return l * (2 * l - 1);
    }
    return 0;
}

int LieType::invariant_count() const {
    return family == Family::GL ? rank + 1 : rank;
}

std::string LieType::name() const {
    switch (family) {
        case Family::A: return "sl" + std::to_string(rank + 1);
        case Family::GL: return "gl" + std::to_string(rank + 1);
        case Family::B: return "so" + std::to_string(2 * rank + 1);
        case Family::C: return "sp" + std::to_string(2 * rank);
        case Family::D: return "so" + std::to_string(2 * rank);
    }
    return "?";
}

int LieType::killing_to_trace_ratio() const {
    const int n = matrix_size();
    switch (family) {
        case Family::A:
        case Family::GL: return 2 * n;
        case Family::B:
        case Family::D: return n - 2;
        case Family::C: return n + 2;
    }
    return 0;
}

LieType parse_lie_type(const std::string& family_letter, int rank) {
    Family f;
    if (family_letter == "A" || family_letter == "a") f = Family::A;
    else if (family_letter == "B" || family_letter == "b") f = Family::B;
    else if (family_letter == "C" || family_letter == "c") f = Family::C;
    else if (family_letter == "D" || family_letter == "d") f = Family::D;
    else if (family_letter == "GL" || family_letter == "gl") f = Family::GL;
    else throw std::invalid_argument("unknown family: " + family_letter);
    if (rank < 1) throw std::invalid_argument("rank must be positive");
    if (f == Family::D && rank < 2)
        throw std::invalid_argument("type D needs rank >= 2");
    return LieType{f, rank};
}

QMatrix SparseMat::dense() const {
    QMatrix m = QMatrix::Zero(n, n);
    for (const auto& e : entries) m(e.row, e.col) += e.val;
    return m;
}

namespace {

void push_entry(std::vector<MatEntry>& out, int r, int c, Rat v) {
    if (v == 0) return;
    for (auto& e : out) {
        if (e.row == r && e.col == c) {
            e.val += v;
            return;
        }
    }
    out.push_back({r, c, std::move(v)});
}

void prune_zeros(std::vector<MatEntry>& v) {
    v.erase(std::remove_if(v.begin(), v.end(),
                           [](const MatEntry& e) { return e.val == 0; }),
            v.end());
}

} // namespace

SparseMat commutator(const SparseMat& a, const SparseMat& b) {
    SparseMat r;
    r.n = a.n;
    for (const auto& x : a.entries)
        for (const auto& y : b.entries) {
            if (x.col == y.row) push_entry(r.entries, x.row, y.col, x.val * y.val);
            if (y.col == x.row) push_entry(r.entries, y.row, x.col, -(x.val * y.val));
        }
    prune_zeros(r.entries);
    return r;
}

Rat trace_product(const SparseMat& a, const SparseMat& b) {
    Rat t = 0;
    for (const auto& x : a.entries)
        for (const auto& y : b.entries)
            if (x.col == y.row && y.col == x.row) t += x.val * y.val;
    return t;
}

namespace {

// sign of the anti-diagonal form: symplectic +1/-1 split, orthogonal all +1
int form_sign(Family f, int i, int n) {
    if (f == Family::C) return (i < n / 2) ? 1 : -1;
    return 1;
}

// reflected position across the anti-diagonal
std::pair<int, int> reflect(int i, int j, int n) { return {n - 1 - j, n - 1 - i}; }

struct BuildItem {
    SparseMat mat;
    std::pair<int, int> lead;
    int kind;  // 0 = strictly upper, 1 = diagonal, 2 = strictly lower
};

std::vector<BuildItem> build_gl_or_sl(int n, bool traceless) {
    std::vector<BuildItem> items;
    auto e = [&](int i, int j, long v) { return MatEntry{i, j, Rat(v)}; };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            SparseMat m{n, {e(i, j, 1)}};
            items.push_back({std::move(m), {i, j}, i < j ? 0 : 2});
        }
    if (traceless) {
        for (int i = 0; i + 1 < n; ++i) {
            SparseMat m{n, {e(i, i, 1), e(i + 1, i + 1, -1)}};
            items.push_back({std::move(m), {i, i}, 1});
        }
    } else {
        for (int i = 0; i < n; ++i) {
            SparseMat m{n, {e(i, i, 1)}};
            items.push_back({std::move(m), {i, i}, 1});
        }
    }
    return items;
}

// sp/so element attached to position (i,j):  E_ij - s(i)s(j) E_ref(i,j),
// canonical when (i,j) <= reflect(i,j) lexicographically
std::vector<BuildItem> build_form_type(Family f, int n) {
    std::vector<BuildItem> items;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            auto [ri, rj] = reflect(i, j, n);
            if (std::pair(i, j) > std::pair(ri, rj)) continue;
            Rat sign = Rat(form_sign(f, i, n) * form_sign(f, j, n));
            SparseMat m;
            m.n = n;
            m.entries.push_back({i, j, Rat(1)});
            if (std::pair(i, j) == std::pair(ri, rj)) {
                // anti-diagonal fixed point: zero for so, doubled for sp
                if (f != Family::C) continue;
                m.entries[0].val = 2;
            } else {
                push_entry(m.entries, ri, rj, -sign);
            }
            prune_zeros(m.entries);
            if (m.entries.empty()) continue;
            int kind = (i < j) ? 0 : (i == j ? 1 : 2);
            items.push_back({std::move(m), {i, j}, kind});
        }
    return items;
}

} // namespace

QVector AlgebraBasis::coords_of(const QMatrix& x) const {
    QVector c = QVector::Zero(dim);
    if (type.family == Family::A || type.family == Family::GL) {
        // off-diagonal entries are direct coordinates; the (traceless)
        // diagonal is recovered through partial sums
        for (int a = 0; a < dim; ++a) {
            auto [i, j] = lead[a];
            if (i != j) {
                c(a) = x(i, j);
            } else if (type.family == Family::GL) {
                c(a) = x(i, i);
            } else {
                Rat partial = 0;
                for (int t = 0; t <= i; ++t) partial += x(t, t);
                c(a) = partial;
            }
        }
    } else {
        for (int a = 0; a < dim; ++a) {
            auto [i, j] = lead[a];
            c(a) = x(i, j) / basis[a].entries.front().val;
        }
    }
    if (dense_of(c) != x)
        throw std::invalid_argument("coords_of: matrix not in the span of the basis");
    return c;
}

QMatrix AlgebraBasis::dense_of(const QVector& coords) const {
    QMatrix m = QMatrix::Zero(n, n);
    for (int a = 0; a < dim; ++a) {
        if (coords(a) == 0) continue;
        for (const auto& e : basis[a].entries) m(e.row, e.col) += coords(a) * e.val;
    }
    return m;
}

QVector AlgebraBasis::bracket(const QVector& x, const QVector& y) const {
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

QMatrix AlgebraBasis::ad_matrix(const QVector& e_coords) const {
    QMatrix m = QMatrix::Zero(dim, dim);
    for (int i = 0; i < dim; ++i) {
        if (e_coords(i) == 0) continue;
        for (int j = 0; j < dim; ++j)
            for (const auto& [k, c] : bracket_list(i, j))
                m(k, j) += e_coords(i) * c;
    }
    return m;
}

QVector AlgebraBasis::trace_coords(const QMatrix& z) const {
    QVector xi(dim);
    for (int a = 0; a < dim; ++a) {
        Rat t = 0;
        for (const auto& e : basis[a].entries) t += z(e.col, e.row) * e.val;
        xi(a) = t;
    }
    return xi;
}

QMatrix AlgebraBasis::dual_combination(const QVector& xi) const {
    QMatrix m = QMatrix::Zero(n, n);
    for (int a = 0; a < dim; ++a) {
        if (xi(a) == 0) continue;
        for (const auto& e : dual[a].entries) m(e.row, e.col) += xi(a) * e.val;
    }
    return m;
}

AlgebraBasis build_algebra(LieType t) {
    AlgebraBasis g;
    g.type = t;
    g.n = t.matrix_size();

    std::vector<BuildItem> items;
    switch (t.family) {
        case Family::A: items = build_gl_or_sl(g.n, true); break;
        case Family::GL: items = build_gl_or_sl(g.n, false); break;
        default: items = build_form_type(t.family, g.n); break;
    }
    // adapted order: strictly upper, diagonal, strictly lower;
    // within a segment, by lead position
    std::stable_sort(items.begin(), items.end(),
                     [](const BuildItem& a, const BuildItem& b) {
                         if (a.kind != b.kind) return a.kind < b.kind;
                         return a.lead < b.lead;
                     });
    g.dim = static_cast<int>(items.size());
    if (g.dim != t.dim())
        throw std::logic_error("build_algebra: dimension mismatch for " + t.name());
    for (auto& it : items) {
        g.basis.push_back(std::move(it.mat));
        g.lead.push_back(it.lead);
        if (it.kind == 0) ++g.upper_count;
        if (it.kind == 1) ++g.diag_count;
    }

    // structure tensor from exact matrix commutators
    g.structure_.assign(static_cast<size_t>(g.dim) * g.dim, {});
    for (int i = 0; i < g.dim; ++i)
        for (int j = i + 1; j < g.dim; ++j) {
            SparseMat com = commutator(g.basis[i], g.basis[j]);
            if (com.entries.empty()) continue;
            QVector c = g.coords_of(com.dense());
            BracketList list;
            for (int k = 0; k < g.dim; ++k)
                if (c(k) != 0) list.emplace_back(k, c(k));
            g.structure_[static_cast<size_t>(i) * g.dim + j] = list;
            BracketList neg;
            for (auto& [k, v] : list) neg.emplace_back(k, -v);
            g.structure_[static_cast<size_t>(j) * g.dim + i] = std::move(neg);
        }

    // trace pairing and its dual basis
    g.gram = QMatrix::Zero(g.dim, g.dim);
    for (int i = 0; i < g.dim; ++i)
        for (int j = i; j < g.dim; ++j) {
            Rat tij = trace_product(g.basis[i], g.basis[j]);
            g.gram(i, j) = tij;
            g.gram(j, i) = tij;
        }
    QMatrix gram_inv = inverse(g.gram);  // throws if degenerate
    for (int a = 0; a < g.dim; ++a) {
        SparseMat d;
        d.n = g.n;
        for (int k = 0; k < g.dim; ++k) {
            if (gram_inv(a, k) == 0) continue;
            for (const auto& e : g.basis[k].entries)
                push_entry(d.entries, e.row, e.col, gram_inv(a, k) * e.val);
        }
        prune_zeros(d.entries);
        g.dual.push_back(std::move(d));
    }
    return g;
}

} // namespace paracon
