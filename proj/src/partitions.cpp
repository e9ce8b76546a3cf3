#include "paracon/partitions.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace paracon {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 1) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts[i] > parts[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    if (parts.empty()) throw std::invalid_argument("partition must be nonempty");
}

int Partition::total() const {
    return std::accumulate(parts.begin(), parts.end(), 0);
}

std::string Partition::str() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) os << ",";
        os << parts[i];
    }
    os << ")";
    return os.str();
}

Partition dual(const Partition& p) {
    std::vector<int> d(static_cast<size_t>(p.parts.front()), 0);
    for (int part : p.parts)
        for (int i = 0; i < part; ++i) ++d[static_cast<size_t>(i)];
    return Partition(std::move(d));
}

bool is_valid_nilpotent(LieType t, const Partition& p) {
    if (p.total() != t.matrix_size())
        throw std::invalid_argument("partition total " + std::to_string(p.total()) +
                                    " does not match matrix size " +
                                    std::to_string(t.matrix_size()));
    if (t.family == Family::A || t.family == Family::GL) return true;
    const bool odd_constrained = (t.family == Family::C);
    for (size_t i = 0; i < p.parts.size();) {
        size_t j = i;
        while (j < p.parts.size() && p.parts[j] == p.parts[i]) ++j;
        const int mult = static_cast<int>(j - i);
        const bool odd_part = p.parts[i] % 2 == 1;
        if (odd_constrained == odd_part && mult % 2 != 0) return false;
        i = j;
    }
    return true;
}

namespace {

int odd_range(const Partition& p) {
    int r = 0;
    for (int j = 1; j <= static_cast<int>(p.parts.size()); ++j)
        if (p.part(j) % 2 == 1) r = j;
    return r;
}

} // namespace

bool is_richardson_C(const Partition& p) {
    const int r = odd_range(p);
    if (r % 2 != 0) return false;
    for (int j = 1; 2 * j <= r; ++j)
        if ((p.part(2 * j - 1) - p.part(2 * j)) % 2 != 0) return false;
    for (int j = 1; 2 * j < r; ++j) {
        const int a = p.part(2 * j), b = p.part(2 * j + 1);
        if (a % 2 == 0 && b % 2 == 0 && a < b + 2) return false;
    }
    return true;
}

bool is_admissible_B(const Partition& p) {
    if (p.part(1) % 2 == 0) return false;
    for (size_t i = 1; i < p.parts.size(); ++i)
        if (p.parts[i] % 2 != 0) return false;
    return true;
}

Partition modified_partition_C(const Partition& p) {
    if (!is_richardson_C(p))
        throw std::invalid_argument("modified_partition_C: partition is not Richardson");
    const int r = odd_range(p);
    std::vector<int> out = p.parts;
    for (int j = 1; 2 * j <= r; ++j) {
        if (out[static_cast<size_t>(2 * j - 2)] % 2 == 0) {
            out[static_cast<size_t>(2 * j - 2)] += 1;
            out[static_cast<size_t>(2 * j - 1)] -= 1;
        }
    }
    Partition result(std::move(out));
    // moving only empty boxes: the first r parts are odd, the rest even
    for (int j = 1; j <= static_cast<int>(result.parts.size()); ++j)
        if ((result.part(j) % 2 == 1) != (j <= r))
            throw std::logic_error("modified_partition_C: parity pattern violated");
    return result;
}

std::vector<LeviBlockLabel> levi_type(Family f, const Partition& p) {
    std::vector<LeviBlockLabel> blocks;
    switch (f) {
        case Family::A:
        case Family::GL: {
            for (int part : dual(p).parts) blocks.push_back({Family::GL, part});
            break;
        }
        case Family::C: {
            const int r = odd_range(p);
            Partition d = dual(modified_partition_C(p));
            // pair equal rows into gl blocks; the one row of length r (odd
            // multiplicity) becomes the sp block
            size_t i = 0;
            bool used_sp = false;
            while (i < d.parts.size()) {
                size_t j = i;
                while (j < d.parts.size() && d.parts[j] == d.parts[i]) ++j;
                int mult = static_cast<int>(j - i);
                if (mult % 2 != 0) {
                    if (used_sp || d.parts[i] != r)
                        throw std::logic_error("levi_type: unpaired row of length " +
                                               std::to_string(d.parts[i]));
                    used_sp = true;
                    blocks.push_back({Family::C, r});
                    --mult;
                }
                for (int k = 0; k < mult / 2; ++k)
                    blocks.push_back({Family::GL, d.parts[i]});
                i = j;
            }
            if (r > 0 && !used_sp)
                throw std::logic_error("levi_type: expected an sp block of size " +
                                       std::to_string(r));
            break;
        }
        case Family::B: {
            if (!is_admissible_B(p))
                throw std::invalid_argument("levi_type: partition not admissible in so");
            Partition d = dual(p);
            size_t i = 0;
            while (i < d.parts.size()) {
                size_t j = i;
                while (j < d.parts.size() && d.parts[j] == d.parts[i]) ++j;
                int mult = static_cast<int>(j - i);
                if (mult % 2 != 0) {
                    if (d.parts[i] != 1)
                        throw std::logic_error("levi_type: unpaired dual part != 1");
                    --mult;  // the leftover 1 is the trivial so_1 middle
                }
                for (int k = 0; k < mult / 2; ++k)
                    blocks.push_back({Family::GL, d.parts[i]});
                i = j;
            }
            break;
        }
        case Family::D:
            throw std::invalid_argument("levi_type: no combinatorial rule in type D");
    }
    std::stable_sort(blocks.begin(), blocks.end(),
                     [](const LeviBlockLabel& a, const LeviBlockLabel& b) {
                         if ((a.kind == Family::GL) != (b.kind == Family::GL))
                             return a.kind == Family::GL;  // gl blocks first
                         return a.size > b.size;
                     });
    return blocks;
}

std::vector<int> ambient_degrees(Family f, int total, bool gl_mode) {
    std::vector<int> deg;
    switch (f) {
        case Family::GL:
            for (int d = 1; d <= total; ++d) deg.push_back(d);
            break;
        case Family::A:
            if (gl_mode)
                for (int d = 1; d <= total; ++d) deg.push_back(d);
            else
                for (int d = 2; d <= total; ++d) deg.push_back(d);
            break;
        case Family::B:
        case Family::C:
            for (int d = 2; d < total; d += 2) deg.push_back(d);
            if (total % 2 == 0) deg.push_back(total);
            break;
        case Family::D:
            for (int d = 2; d <= total - 2; d += 2) deg.push_back(d);
            deg.push_back(total / 2);
            std::sort(deg.begin(), deg.end());
            break;
    }
    return deg;
}

std::vector<int> e_degree_multiset(Family f, const Partition& p, bool gl_mode) {
    std::vector<int> out;
    if (f == Family::A || f == Family::GL) {
        // row i of the diagram contributes part_i copies of degree i
        const bool drop_one = (f == Family::A && !gl_mode);
        for (int i = 1; i <= static_cast<int>(p.parts.size()); ++i) {
            int copies = p.part(i) - (i == 1 && drop_one ? 1 : 0);
            for (int c = 0; c < copies; ++c) out.push_back(i);
        }
        std::sort(out.begin(), out.end());
        return out;
    }
    if (f == Family::D)
        throw std::invalid_argument("e_degree_multiset: no rule in type D");
    // interval rule: deg = i when the partial sums straddle deg F_j
    std::vector<int> sums;
    int acc = 0;
    for (int part : p.parts) sums.push_back(acc += part);
    for (int d : ambient_degrees(f, p.total())) {
        int i = 0;
        while (sums[static_cast<size_t>(i)] < d) ++i;
        out.push_back(i + 1);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::pair<int, int>> bidegree_table(Family f, const Partition& p,
                                                bool gl_mode) {
    std::vector<int> full = ambient_degrees(f, p.total(), gl_mode);
    std::vector<int> lowered;
    if (f == Family::A || f == Family::GL) {
        std::vector<int> sums;
        int acc = 0;
        for (int part : p.parts) sums.push_back(acc += part);
        for (int d : full) {
            int i = 0;
            while (sums[static_cast<size_t>(i)] < d) ++i;
            lowered.push_back(i + 1);
        }
    } else {
        lowered = e_degree_multiset(f, p);
        // e_degree_multiset sorts; the interval rule is monotone in deg F_j,
        // so the sorted order already matches increasing full degrees
    }
    std::vector<std::pair<int, int>> table;
    for (size_t i = 0; i < full.size(); ++i)
        table.emplace_back(lowered[i], full[i] - lowered[i]);
    return table;
}

bool degrees_match_levi(Family f, const Partition& p) {
    std::vector<LeviBlockLabel> blocks = levi_type(f, p);
    const bool sl_mode = (f == Family::A);
    std::vector<int> from_levi = block_invariant_degrees(blocks, sl_mode);
    std::vector<int> from_partition = e_degree_multiset(f, p);
    if (from_levi != from_partition) return false;

    // sum identities
    const int n = p.total();
    int dim_g = 0, rank_g = 0;
    switch (f) {
        case Family::A: dim_g = n * n - 1; rank_g = n - 1; break;
        case Family::GL: dim_g = n * n; rank_g = n; break;
        case Family::C: dim_g = n * (n + 1) / 2; rank_g = n / 2; break;
        case Family::B:
        case Family::D: dim_g = n * (n - 1) / 2; rank_g = n / 2; break;
    }
    (void)rank_g;
    const int dim_levi_v = levi_dim(blocks, sl_mode);
    const int dim_n = (dim_g - dim_levi_v) / 2;
    const int dim_borel_levi = (dim_levi_v + levi_rank(blocks, sl_mode)) / 2;

    auto table = bidegree_table(f, p);
    int sum_p = 0, sum_nm = 0;
    for (auto [dp, dn] : table) { sum_p += dp; sum_nm += dn; }
    return sum_nm == dim_n && sum_p == dim_borel_levi;
}

RichardsonProfile richardson_profile(LieType t, const Partition& p) {
    RichardsonProfile prof{t, p, dual(p), p};
    prof.valid_nilpotent = is_valid_nilpotent(t, p);
    switch (t.family) {
        case Family::A:
        case Family::GL:
            prof.richardson = true;
            break;
        case Family::C:
            prof.richardson = prof.valid_nilpotent && is_richardson_C(p);
            if (prof.richardson) prof.modified = modified_partition_C(p);
            break;
        case Family::B:
            prof.admissible = prof.valid_nilpotent && is_admissible_B(p);
            break;
        case Family::D:
            return prof;  // no combinatorial rule; flags stay false
    }
    const bool covered = (t.family == Family::C)   ? prof.richardson
                         : (t.family == Family::B) ? prof.admissible
                                                   : prof.valid_nilpotent;
    if (!covered) return prof;
    prof.levi = levi_type(t.family, p);
    prof.degree_multiset = e_degree_multiset(t.family, p, t.family == Family::GL);
    prof.bidegrees = bidegree_table(t.family, p, t.family == Family::GL);
    prof.matches_levi = degrees_match_levi(t.family, p);
    return prof;
}

std::vector<Partition> all_partitions(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rest, int maxpart) -> void {
        if (rest == 0) {
            out.push_back(Partition(cur));
            return;
        }
        for (int next = std::min(rest, maxpart); next >= 1; --next) {
            cur.push_back(next);
            self(self, rest - next, next);
            cur.pop_back();
        }
    };
    if (n > 0) rec(rec, n, n);
    return out;
}

} // namespace paracon
