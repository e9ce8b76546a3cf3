#include "paracon/parabolic.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace paracon {

ParabolicSpec ParabolicSpec::borel(LieType t) {
    ParabolicSpec s;
    switch (t.family) {
        case Family::A:
        case Family::GL:
            s.composition.assign(t.rank + 1, 1);
            break;
        case Family::B:
            s.composition.assign(t.rank, 1);
            s.central_block = 1;
            break;
        case Family::C:
        case Family::D:
            s.composition.assign(t.rank, 1);
            s.central_block = 0;
            break;
    }
    return s;
}

std::string ParabolicSpec::str() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < composition.size(); ++i) {
        if (i) os << ",";
        os << composition[i];
    }
    if (central_block > 0) os << ";" << central_block;
    os << ")";
    return os.str();
}

void validate_spec(const ParabolicSpec& s, LieType t) {
    for (int p : s.composition)
        if (p < 1) throw std::invalid_argument("composition parts must be positive");
    const int total = std::accumulate(s.composition.begin(), s.composition.end(), 0);
    const int n = t.matrix_size();
    switch (t.family) {
        case Family::A:
        case Family::GL:
            if (s.central_block != 0)
                throw std::invalid_argument("type A/GL takes no central block");
            if (total != n)
                throw std::invalid_argument("composition must sum to " + std::to_string(n));
            break;
        case Family::B:
            if (s.central_block < 1 || s.central_block % 2 == 0)
                throw std::invalid_argument("type B needs an odd central block");
            if (2 * total + s.central_block != n)
                throw std::invalid_argument("2*sum + central must equal " + std::to_string(n));
            break;
        case Family::C:
            if (s.central_block < 0 || s.central_block % 2 == 1)
                throw std::invalid_argument("type C needs an even central block");
            if (2 * total + s.central_block != n)
                throw std::invalid_argument("2*sum + central must equal " + std::to_string(n));
            break;
        case Family::D:
            if (s.central_block < 0 || s.central_block % 2 == 1 || s.central_block == 2)
                throw std::invalid_argument("type D needs an even central block != 2");
            if (2 * total + s.central_block != n)
                throw std::invalid_argument("2*sum + central must equal " + std::to_string(n));
            break;
    }
}

namespace {

int so_semisimple_rank(int m) { return m <= 2 ? 0 : m / 2; }

// position of each matrix row in the diagonal block order
std::vector<int> block_order(const ParabolicSpec& s, LieType t) {
    const int n = t.matrix_size();
    const int tcnt = static_cast<int>(s.composition.size());
    std::vector<int> ord(n, 0);
    if (t.family == Family::A || t.family == Family::GL) {
        int row = 0, b = 0;
        for (int sz : s.composition) {
            for (int k = 0; k < sz; ++k) ord[row++] = b;
            ++b;
        }
        return ord;
    }
    int row = 0, b = 0;
    for (int sz : s.composition) {
        for (int k = 0; k < sz; ++k) ord[row++] = b;
        ++b;
    }
    for (int k = 0; k < s.central_block; ++k) ord[row++] = tcnt;
    for (int bi = tcnt - 1; bi >= 0; --bi)
        for (int k = 0; k < s.composition[static_cast<size_t>(bi)]; ++k)
            ord[row++] = 2 * tcnt - bi;
    return ord;
}

} // namespace

bool ParabolicDecomposition::is_minimal() const {
    int srank = 0;
    for (const auto& b : levi_blocks) {
        if (b.kind == Family::GL) srank += b.size - 1;
        else if (b.kind == Family::C) srank += b.size / 2;
        else srank += so_semisimple_rank(b.size);
    }
    return srank == 1;
}

QVector ParabolicDecomposition::restrict_to(const QVector& v, Region r) const {
    QVector out = QVector::Zero(v.size());
    for (int a = 0; a < static_cast<int>(region.size()); ++a)
        if (region[static_cast<size_t>(a)] == r) out(a) = v(a);
    return out;
}

QVector ParabolicDecomposition::restrict_to_p(const QVector& v) const {
    QVector out = QVector::Zero(v.size());
    for (int a = 0; a < static_cast<int>(region.size()); ++a)
        if (region[static_cast<size_t>(a)] != Region::lower) out(a) = v(a);
    return out;
}

ParabolicDecomposition build_parabolic(const AlgebraBasis& g, const ParabolicSpec& s) {
    validate_spec(s, g.type);
    ParabolicDecomposition p;
    p.algebra = &g;
    p.spec = s;
    const std::vector<int> ord = block_order(s, g.type);

    p.region.resize(static_cast<size_t>(g.dim));
    for (int a = 0; a < g.dim; ++a) {
        auto [i, j] = g.lead[a];
        Region r = ord[i] < ord[j] ? Region::upper
                 : ord[i] > ord[j] ? Region::lower
                                   : Region::levi;
        p.region[static_cast<size_t>(a)] = r;
        (r == Region::upper ? p.idx_n : r == Region::levi ? p.idx_levi : p.idx_nminus)
            .push_back(a);
    }
    if (p.idx_n.size() != p.idx_nminus.size())
        throw std::logic_error("build_parabolic: dim n != dim n_-");

    int off = 0;
    for (int sz : s.composition) {
        p.levi_blocks.push_back({Family::GL, off, sz});
        off += sz;
    }
    if (s.central_block > 0 && g.type.family != Family::A && g.type.family != Family::GL)
        p.levi_blocks.push_back({g.type.family, off, s.central_block});
    return p;
}

std::vector<int> block_invariant_degrees(const std::vector<LeviBlockLabel>& blocks,
                                         bool drop_one_linear) {
    std::vector<int> deg;
    for (const auto& b : blocks) {
        switch (b.kind) {
            case Family::GL:
            case Family::A:
                for (int d = 1; d <= b.size; ++d) deg.push_back(d);
                break;
            case Family::C:
                for (int d = 2; d <= b.size; d += 2) deg.push_back(d);
                break;
            case Family::B:
            case Family::D:
                if (b.size % 2 == 1) {
                    for (int d = 2; d <= b.size - 1; d += 2) deg.push_back(d);
                } else {
                    for (int d = 2; d <= b.size - 2; d += 2) deg.push_back(d);
                    if (b.size >= 2) deg.push_back(b.size / 2);
                }
                break;
        }
    }
    if (drop_one_linear) {
        auto it = std::find(deg.begin(), deg.end(), 1);
        if (it == deg.end())
            throw std::logic_error("expected a linear invariant to drop in sl mode");
        deg.erase(it);
    }
    std::sort(deg.begin(), deg.end());
    return deg;
}

int levi_dim(const std::vector<LeviBlockLabel>& blocks, bool traceless) {
    int d = 0;
    for (const auto& b : blocks) {
        if (b.kind == Family::GL || b.kind == Family::A) d += b.size * b.size;
        else if (b.kind == Family::C) d += b.size * (b.size + 1) / 2;
        else d += b.size * (b.size - 1) / 2;
    }
    return traceless ? d - 1 : d;
}

int levi_rank(const std::vector<LeviBlockLabel>& blocks, bool traceless) {
    int r = 0;
    for (const auto& b : blocks) {
        if (b.kind == Family::GL || b.kind == Family::A) r += b.size;
        else r += b.size / 2;
    }
    return traceless ? r - 1 : r;
}

std::vector<int> levi_invariant_degrees(const ParabolicSpec& s, LieType t) {
    validate_spec(s, t);
    std::vector<LeviBlockLabel> blocks;
    for (int sz : s.composition) blocks.push_back({Family::GL, sz});
    if (s.central_block > 0 && t.family != Family::A && t.family != Family::GL)
        blocks.push_back({t.family, s.central_block});
    return block_invariant_degrees(blocks, t.family == Family::A);
}

} // namespace paracon
