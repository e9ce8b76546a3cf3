#include "paracon/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace paracon {

// ---- Levi pullback family ---------------------------------------------------

LeviPullbackFamily::LeviPullbackFamily(const ParabolicDecomposition& p) : p_(&p) {
    const Family fam = p.algebra->type.family;
    int last_gl = -1;
    for (int bi = 0; bi < static_cast<int>(p.levi_blocks.size()); ++bi)
        if (p.levi_blocks[static_cast<size_t>(bi)].kind == Family::GL) last_gl = bi;
    for (int bi = 0; bi < static_cast<int>(p.levi_blocks.size()); ++bi) {
        const LeviBlock& b = p.levi_blocks[static_cast<size_t>(bi)];
        if (b.kind == Family::GL) {
            for (int d = 1; d <= b.size; ++d) {
                if (fam == Family::A && bi == last_gl && d == 1)
                    continue;  // sl convention: one trace is dependent, drop it
                invs_.push_back({bi, d, d});
            }
        } else if (b.kind == Family::C) {
            for (int d = 2; d <= b.size; d += 2) invs_.push_back({bi, d, d});
        } else if (b.size % 2 == 1) {  // odd so block
            for (int d = 2; d <= b.size - 1; d += 2) invs_.push_back({bi, d, d});
        } else {  // even so block
            for (int d = 2; d <= b.size - 2; d += 2) invs_.push_back({bi, d, d});
            if (b.size >= 2) invs_.push_back({bi, b.size / 2, -1});
        }
    }
    std::stable_sort(invs_.begin(), invs_.end(),
                     [](const BlockInv& a, const BlockInv& b) { return a.degree < b.degree; });
    for (const auto& iv : invs_) degrees_.push_back(iv.degree);
}

namespace {

QMatrix block_of(const QMatrix& x, const LeviBlock& b) {
    return x.block(b.offset, b.offset, b.size, b.size);
}

QMatrix so_form_times_small(const QMatrix& y) {
    const int n = static_cast<int>(y.rows());
    QMatrix a(n, n);
    for (int i = 0; i < n; ++i) a.row(i) = y.row(n - 1 - i);
    return a;
}

// entries of a sparse basis matrix that fall inside a diagonal block,
// reindexed to the block
SparseMat restrict_to_block(const SparseMat& m, const LeviBlock& b) {
    SparseMat out;
    out.n = b.size;
    for (const auto& e : m.entries)
        if (e.row >= b.offset && e.row < b.offset + b.size && e.col >= b.offset &&
            e.col < b.offset + b.size)
            out.entries.push_back({e.row - b.offset, e.col - b.offset, e.val});
    return out;
}

SparseMat so_form_times_sparse(const SparseMat& m) {
    SparseMat out;
    out.n = m.n;
    for (const auto& e : m.entries) out.entries.push_back({m.n - 1 - e.row, e.col, e.val});
    return out;
}

} // namespace

std::vector<Rat> LeviPullbackFamily::eval_all(const QVector& x) const {
    const ParabolicDecomposition& p = *p_;
    const AlgebraBasis& g = *p.algebra;
    QMatrix xl = g.dense_of(p.restrict_to(x, Region::levi));
    std::vector<CharPoly> cps;
    std::vector<Pfaffian> pfs(p.levi_blocks.size());
    std::vector<char> pf_done(p.levi_blocks.size(), 0);
    for (const auto& b : p.levi_blocks) cps.push_back(char_poly(block_of(xl, b)));
    std::vector<Rat> out;
    for (const auto& iv : invs_) {
        if (iv.coeff >= 0) {
            out.push_back(cps[static_cast<size_t>(iv.block)].c[static_cast<size_t>(iv.coeff)]);
        } else {
            if (!pf_done[static_cast<size_t>(iv.block)]) {
                const LeviBlock& b = p.levi_blocks[static_cast<size_t>(iv.block)];
                pfs[static_cast<size_t>(iv.block)] =
                    pfaffian(so_form_times_small(block_of(xl, b)));
                pf_done[static_cast<size_t>(iv.block)] = 1;
            }
            out.push_back(pfs[static_cast<size_t>(iv.block)].value);
        }
    }
    return out;
}

std::vector<QVector> LeviPullbackFamily::gradient_rows(const QVector& x) const {
    const ParabolicDecomposition& p = *p_;
    const AlgebraBasis& g = *p.algebra;
    QMatrix xl = g.dense_of(p.restrict_to(x, Region::levi));
    std::vector<CharPoly> cps;
    std::vector<Pfaffian> pfs(p.levi_blocks.size());
    std::vector<char> pf_done(p.levi_blocks.size(), 0);
    for (const auto& b : p.levi_blocks) cps.push_back(char_poly(block_of(xl, b)));
    std::vector<QVector> rows;
    for (const auto& iv : invs_) {
        const LeviBlock& b = p.levi_blocks[static_cast<size_t>(iv.block)];
        QVector row = QVector::Zero(g.dim);
        if (iv.coeff < 0 && !pf_done[static_cast<size_t>(iv.block)]) {
            pfs[static_cast<size_t>(iv.block)] =
                pfaffian(so_form_times_small(block_of(xl, b)));
            pf_done[static_cast<size_t>(iv.block)] = 1;
        }
        for (int a : p.idx_levi) {
            SparseMat dir = restrict_to_block(g.basis[static_cast<size_t>(a)], b);
            if (dir.entries.empty()) continue;
            if (iv.coeff >= 0)
                row(a) = char_coeff_derivative(cps[static_cast<size_t>(iv.block)],
                                               iv.coeff, dir);
            else
                row(a) = pfaffian_derivative(pfs[static_cast<size_t>(iv.block)],
                                             so_form_times_sparse(dir));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

// ---- suite plumbing -----------------------------------------------------------

std::string suite_name(Suite s) {
    switch (s) {
        case Suite::coadjoint: return "coadjoint";
        case Suite::adjoint: return "adjoint";
        case Suite::subregular: return "subregular";
        case Suite::counterexample: return "counterexample";
        case Suite::combinatorics: return "combinatorics";
    }
    return "?";
}

Suite parse_suite(const std::string& name) {
    for (Suite s : {Suite::coadjoint, Suite::adjoint, Suite::subregular,
                    Suite::counterexample, Suite::combinatorics})
        if (suite_name(s) == name) return s;
    throw std::invalid_argument("unknown suite: " + name);
}

std::string sz_bound(int degree, int trials, long bound) {
    if (degree <= 0) return "";
    Int n = 2 * bound + 1;
    Int lhs, rhs;
    mpz_ui_pow_ui(lhs.get_mpz_t(), static_cast<unsigned long>(degree),
                  static_cast<unsigned long>(trials));
    mpz_pow_ui(rhs.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(trials));
    int k = 0;
    Int l2 = lhs * 2;
    while (l2 <= rhs) { ++k; l2 *= 2; }
    std::ostringstream os;
    os << "(" << degree << "/" << n.get_str() << ")^" << trials << " < 2^-" << k;
    return os.str();
}

namespace {

struct Recorder {
    const SuiteConfig* cfg;
    std::vector<CheckRecord> checks;
    int counter = 0;

    std::uint64_t check_seed() { return derive_seed(cfg->seed, static_cast<std::uint64_t>(counter)); }

    void add(const std::string& name, const std::string& anchor, bool ok,
             const std::string& witness, const std::string& bound, std::uint64_t seed) {
        checks.push_back({name, anchor, ok, witness, bound, seed});
        ++counter;
    }
    void add_exact(const std::string& name, const std::string& anchor, bool ok,
                   const std::string& witness) {
        add(name, anchor, ok, witness, "", 0);
    }
};

template <typename T>
std::string list_str(const std::vector<T>& v) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << ",";
        os << v[i];
    }
    os << "]";
    return os.str();
}

std::string pairs_str(const std::vector<std::pair<int, int>>& v) {
    std::ostringstream os;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << " ";
        os << "(" << v[i].first << "," << v[i].second << ")";
    }
    return os.str();
}

std::string blocks_str(const std::vector<LeviBlockLabel>& blocks) {
    std::ostringstream os;
    for (size_t i = 0; i < blocks.size(); ++i) {
        if (i) os << "+";
        switch (blocks[i].kind) {
            case Family::GL:
            case Family::A: os << "gl" << blocks[i].size; break;
            case Family::C: os << "sp" << blocks[i].size; break;
            default: os << "so" << blocks[i].size; break;
        }
    }
    return os.str();
}

std::vector<LeviBlockLabel> decomposition_labels(const ParabolicDecomposition& p) {
    std::vector<LeviBlockLabel> out;
    for (const auto& b : p.levi_blocks) out.push_back({b.kind, b.size});
    // reports show the canonically sorted type; the composition itself stays
    // ordered since it names a specific parabolic
    std::stable_sort(out.begin(), out.end(),
                     [](const LeviBlockLabel& a, const LeviBlockLabel& b) {
                         if ((a.kind == Family::GL) != (b.kind == Family::GL))
                             return a.kind == Family::GL;
                         return a.size > b.size;
                     });
    return out;
}

int levi_semisimple_rank_of_spec(const ParabolicSpec& s, LieType t) {
    int r = 0;
    for (int sz : s.composition) r += sz - 1;
    if (t.family == Family::C) r += s.central_block / 2;
    else if (t.family == Family::B || t.family == Family::D)
        r += s.central_block <= 2 ? 0 : s.central_block / 2;
    return r;
}

// shared front half of the matrix suites: build everything, run the index,
// Richardson, centraliser and degree checks
struct Pipeline {
    AlgebraBasis g;
    ParabolicDecomposition p;
    ContractedAlgebra q;
    InvariantFamily fam;
    RichardsonElement e;
    Partition lambda{std::vector<int>{1}};
    CentraliserData cent;
    std::vector<int> b;  // certified n_- degrees

    Pipeline(const SuiteConfig& cfg)
        : g(build_algebra(cfg.type)),
          p(build_parabolic(g, cfg.spec)),
          q(contract(p)),
          fam(g) {}
};

void run_build_check(Recorder& rec, const Pipeline& pl) {
    std::ostringstream os;
    os << pl.g.type.name() << " " << pl.p.spec.str() << ": dim g=" << pl.g.dim
       << " dim p=" << pl.p.dim_p() << " dim n=" << pl.p.dim_n()
       << " dim levi=" << pl.p.dim_levi() << " levi=" << blocks_str(decomposition_labels(pl.p));
    rec.add_exact("build", "q = p x| n_- on the fixed basis", true, os.str());
}

void run_index_checks(Recorder& rec, Pipeline& pl, int trials) {
    const int l = pl.g.type.rank;
    {
        std::uint64_t seed = rec.check_seed();
        IndexReport ir = index_of(pl.q, trials, seed);
        std::ostringstream os;
        os << "min stab dim = " << ir.index << " over " << ir.trials << " trials";
        rec.add("index-of-q", "ind q = rk g", ir.index == l, os.str(),
                sz_bound((pl.q.dim - l) / 2, trials), seed);
    }
}

void run_richardson_checks(Recorder& rec, Pipeline& pl) {
    const SuiteConfig& cfg = *rec.cfg;
    {
        std::uint64_t seed = rec.check_seed();
        pl.e = find_richardson(pl.p, 32, seed);
        std::ostringstream os;
        os << "certificate rank " << pl.e.certificate_rank << " = dim n = " << pl.p.dim_n();
        rec.add("richardson-certificate", "[p, e] = n (dense P-orbit in n)",
                pl.e.certificate_rank == pl.p.dim_n(), os.str(),
                sz_bound(std::max(1, pl.p.dim_n()), 32, 20), seed);
    }
    {
        pl.lambda = jordan_type(pl.e.matrix);
        bool valid = is_valid_nilpotent(cfg.type, pl.lambda);
        bool predicate = true;
        std::string pred_note;
        if (cfg.type.family == Family::C) {
            predicate = is_richardson_C(pl.lambda);
            pred_note = predicate ? "Richardson test passed" : "Richardson test FAILED";
        } else if (cfg.type.family == Family::B) {
            bool adm = is_admissible_B(pl.lambda);
            bool minimal = pl.p.is_minimal();
            predicate = adm || minimal || pl.p.is_degenerate();
            pred_note = adm ? "admissible" : (minimal ? "not admissible, minimal parabolic"
                                                      : "not admissible");
        }
        std::ostringstream os;
        os << "Jordan type " << pl.lambda.str();
        if (!pred_note.empty()) os << " (" << pred_note << ")";
        rec.add_exact("jordan-type", "partition of e matches the orbit predicates",
                      valid && predicate, os.str());
    }
    {
        pl.cent = centraliser(pl.g, pl.e.coords);
        bool dims_ok = pl.cent.dim == pl.g.dim - 2 * pl.p.dim_n();
        bool inside_p = true;
        for (const auto& v : pl.cent.basis)
            for (int a : pl.p.idx_nminus)
                if (v(a) != 0) inside_p = false;
        std::ostringstream os;
        os << "dim g_e = " << pl.cent.dim << " (= dim g - 2 dim n = "
           << pl.g.dim - 2 * pl.p.dim_n() << "), g_e in p: " << (inside_p ? "yes" : "NO");
        rec.add_exact("centraliser", "dim g_e = dim g - 2 dim n and g_e = p_e",
                      dims_ok && inside_p, os.str());
    }
    {
        std::uint64_t seed = rec.check_seed();
        int trials = std::max(10, cfg.trials);
        int idx = subalgebra_index(pl.cent, trials, seed);
        std::ostringstream os;
        os << "ind g_e = " << idx << " over " << trials << " trials";
        rec.add("index-of-centraliser", "ind g_e = rk g (matches ind q)",
                idx == pl.g.type.rank, os.str(),
                sz_bound(std::max(1, (pl.cent.dim - pl.g.type.rank) / 2), trials), seed);
    }
}

void run_degree_checks(Recorder& rec, Pipeline& pl) {
    const SuiteConfig& cfg = *rec.cfg;
    {
        std::uint64_t seed = rec.check_seed();
        pl.b = n_minus_degrees(pl.fam, pl.p, 8, seed);
        bool ok = true;
        // a P-invariant cannot live inside S(n_-), so b_i < deg F_i for a
        // proper parabolic
        if (!pl.p.is_degenerate())
            for (int i = 0; i < pl.fam.count(); ++i)
                if (pl.b[static_cast<size_t>(i)] > pl.fam.degree(i) - 1) ok = false;
        std::string predicted = "(no combinatorial rule in this type)";
        if (cfg.type.family != Family::D) {
            auto table = bidegree_table(cfg.type.family, pl.lambda);
            std::vector<int> pred;
            for (auto [dp, dn] : table) pred.push_back(dn);
            ok = ok && pred.size() == pl.b.size();
            for (size_t i = 0; ok && i < pred.size(); ++i) ok = pred[i] == pl.b[i];
            predicted = list_str(pred);
        }
        std::ostringstream os;
        os << "measured " << list_str(pl.b) << ", predicted " << predicted;
        rec.add("n-minus-degrees", "measured top n_- degrees match the interval rule",
                ok, os.str(), sz_bound(pl.fam.max_degree(), 8), seed);
    }
    {
        int sum = std::accumulate(pl.b.begin(), pl.b.end(), 0);
        std::ostringstream os;
        os << "sum b_i = " << sum << ", dim n = " << pl.p.dim_n();
        rec.add_exact("degree-sum-n", "sum of n_- degrees of F_i-highest = dim n",
                      sum == pl.p.dim_n(), os.str());
    }
    {
        auto labels = decomposition_labels(pl.p);
        const bool sl_mode = cfg.type.family == Family::A;
        int borel = (levi_dim(labels, sl_mode) + levi_rank(labels, sl_mode)) / 2;
        int sum = 0;
        for (int i = 0; i < pl.fam.count(); ++i)
            sum += pl.fam.degree(i) - pl.b[static_cast<size_t>(i)];
        std::ostringstream os;
        os << "sum (deg F_i - b_i) = " << sum << ", dim borel(levi) = " << borel;
        rec.add_exact("degree-sum-p", "sum of p-degrees = dim of a Borel of the Levi",
                      sum == borel, os.str());
    }
    {
        std::vector<int> measured;
        for (int i = 0; i < pl.fam.count(); ++i)
            measured.push_back(pl.fam.degree(i) - pl.b[static_cast<size_t>(i)]);
        std::sort(measured.begin(), measured.end());
        std::vector<int> levi = levi_invariant_degrees(cfg.spec, cfg.type);
        std::ostringstream os;
        os << "slice degrees " << list_str(measured) << ", Levi degrees " << list_str(levi);
        rec.add_exact("degrees-match-levi",
                      "multiset of slice degrees = Levi invariant degrees",
                      measured == levi, os.str());
    }
    if (cfg.type.family == Family::A || cfg.type.family == Family::C ||
        (cfg.type.family == Family::B && is_admissible_B(pl.lambda))) {
        bool ok = degrees_match_levi(cfg.type.family, pl.lambda);
        std::ostringstream os;
        os << pl.lambda.str() << " -> Levi "
           << blocks_str(levi_type(cfg.type.family, pl.lambda));
        rec.add_exact("partition-degrees-match-levi",
                      "partition route reproduces the Levi degree multiset", ok, os.str());
    }
}

void run_invariance_checks(Recorder& rec, Pipeline& pl) {
    const SuiteConfig& cfg = *rec.cfg;
    {
        std::uint64_t seed = rec.check_seed();
        ProbeReport pr = invariance_probe(
            pl.q, PointSide::coadjoint,
            [&](const QVector& xi) { return highest_gradients(pl.fam, pl.p, xi, pl.b); },
            cfg.trials, seed);
        rec.add("highest-invariance",
                "every F_i-highest is annihilated by all coadjoint derivations",
                pr.passed, pr.passed ? "exact zero at every trial" : pr.witness, "", seed);
    }
    {
        std::uint64_t seed = rec.check_seed();
        SplitMix64 gen(seed);
        const int l = pl.fam.count();
        int min_rank = -1, max_rank = -1;
        bool ok = true;
        for (int t = 0; t < cfg.trials; ++t) {
            QVector xi = random_point(pl.q.dim, gen);
            int r = jacobian_rank(highest_gradients(pl.fam, pl.p, xi, pl.b));
            min_rank = (t == 0) ? r : std::min(min_rank, r);
            max_rank = (t == 0) ? r : std::max(max_rank, r);
            if (r != l) ok = false;
        }
        std::ostringstream os;
        os << "rank range [" << min_rank << "," << max_rank << "] over " << cfg.trials
           << " points, want " << l;
        rec.add("jacobian-rank", "differentials of the F_i-highest are independent",
                ok, os.str(), sz_bound(l * (pl.fam.max_degree() - 1), cfg.trials), seed);
    }
}

void run_kostant_checks(Recorder& rec, Pipeline& pl) {
    const SuiteConfig& cfg = *rec.cfg;
    const int l = pl.fam.count();
    {
        std::uint64_t seed = rec.check_seed();
        SplitMix64 gen(seed);
        bool ok = true;
        int regular = 0;
        for (int t = 0; t < cfg.trials; ++t) {
            QVector xi = random_point(pl.q.dim, gen);
            KostantRecord kr = kostant_probe(pl.q, pl.fam, pl.b, xi);
            if (!kr.consistent) ok = false;
            if (kr.stab_dim == l) ++regular;
        }
        std::ostringstream os;
        os << regular << "/" << cfg.trials << " probed points regular, all consistent: "
           << (ok ? "yes" : "NO");
        rec.add("kostant-random",
                "differentials independent iff the stabilizer has minimal dimension",
                ok, os.str(), "", seed);
    }
    {
        std::uint64_t seed = rec.check_seed();
        SplitMix64 gen(seed);
        std::vector<CoadjointPoint> crafted;
        crafted.push_back({QVector::Zero(pl.q.dim), "zero"});
        for (int t = 0; t < 2; ++t) {
            QVector xi = QVector::Zero(pl.q.dim);
            for (int a : pl.p.idx_nminus) xi(a) = Rat(gen.int_in(-10000, 10000));
            crafted.push_back({std::move(xi), "n-minus-supported"});
        }
        // slice points e + v with v in the kernel of the p-block of B(coords e)
        QVector xi_e = pl.g.trace_coords(pl.e.matrix);
        std::vector<int> idx_p = pl.p.idx_n;
        idx_p.insert(idx_p.end(), pl.p.idx_levi.begin(), pl.p.idx_levi.end());
        std::sort(idx_p.begin(), idx_p.end());
        QMatrix be = coadjoint_form(pl.q, xi_e);
        QMatrix sub(static_cast<int>(idx_p.size()), static_cast<int>(idx_p.size()));
        for (size_t r = 0; r < idx_p.size(); ++r)
            for (size_t c = 0; c < idx_p.size(); ++c)
                sub(static_cast<int>(r), static_cast<int>(c)) = be(idx_p[r], idx_p[c]);
        auto kern = kernel_basis(sub);
        for (size_t kv = 0; kv < kern.size() && kv < 3; ++kv) {
            QVector xi = xi_e;
            for (size_t r = 0; r < idx_p.size(); ++r) xi(idx_p[r]) += kern[kv](static_cast<int>(r));
            crafted.push_back({std::move(xi), "slice+kernel"});
        }
        bool ok = true;
        int singular = 0;
        std::ostringstream os;
        for (size_t i = 0; i < crafted.size(); ++i) {
            KostantRecord kr = kostant_probe(pl.q, pl.fam, pl.b, crafted[i].xi);
            if (!kr.consistent) ok = false;
            if (kr.stab_dim > l) ++singular;
            if (i) os << " ";
            os << crafted[i].tag << "(stab=" << kr.stab_dim << ",rank=" << kr.jac_rank << ")";
        }
        if (singular <= 1)
            os << " -- note: no singular witness beyond the zero point";
        rec.add("kostant-crafted", "the equivalence also holds at crafted singular points",
                ok, os.str(), "", seed);
    }
}

void run_slice_checks(Recorder& rec, Pipeline& pl) {
    const SuiteConfig& cfg = *rec.cfg;
    if (pl.p.is_degenerate()) {
        rec.add_exact("slice-coincidence",
                      "highest component restricted to e + p_- equals the slice invariant",
                      true, "degenerate parabolic: e = 0 and the slice is all of q*");
        return;
    }
    std::uint64_t seed = rec.check_seed();
    SplitMix64 gen(seed);
    QMatrix y = make_slice_normalizer(pl.p, pl.e.matrix, 32, gen.next());
    // slice-restriction degrees agree with the bi-degree data
    bool k_ok = true;
    std::vector<int> ks;
    for (int i = 0; i < pl.fam.count(); ++i) {
        int k = slodowy_min_index(pl.fam, i, pl.e.matrix, 8, gen.next());
        ks.push_back(k);
        if (k != pl.fam.degree(i) - pl.b[static_cast<size_t>(i)]) k_ok = false;
    }
    {
        std::ostringstream os;
        os << "minimal y-split indices " << list_str(ks) << " vs deg F_i - b_i";
        rec.add("slice-degree", "p-degree of the highest = degree of the slice restriction",
                k_ok, os.str(), sz_bound(pl.fam.max_degree(), 8), seed);
    }
    const int points = std::max(cfg.trials, 20);
    bool eq_ok = true;
    std::string witness = "exact agreement at every point";
    for (int t = 0; t < points && eq_ok; ++t) {
        QVector vcoords = QVector::Zero(pl.g.dim);
        if (t > 0) {  // t = 0 probes the origin of the slice
            for (int a : pl.p.idx_levi) vcoords(a) = Rat(gen.int_in(-100, 100));
            for (int a : pl.p.idx_nminus) vcoords(a) = Rat(gen.int_in(-100, 100));
        }
        QMatrix v = pl.g.dense_of(vcoords);
        QVector xi = pl.g.trace_coords(pl.e.matrix + v);
        for (int i = 0; i < pl.fam.count(); ++i) {
            Rat lhs = eval_slice(pl.fam, i, pl.p, pl.e.matrix, v, pl.b[static_cast<size_t>(i)]);
            Rat rhs = slodowy_slice_eval(pl.fam, i, pl.e.matrix, y, xi,
                                         ks[static_cast<size_t>(i)]);
            if (lhs != rhs) {
                eq_ok = false;
                std::ostringstream os;
                os << "invariant " << i << " at slice point " << t << ": highest route "
                   << rat_str(lhs) << " != y-split route " << rat_str(rhs);
                witness = os.str();
                break;
            }
            if (t == 0 && pl.fam.degree(i) - pl.b[static_cast<size_t>(i)] >= 1 && lhs != 0) {
                eq_ok = false;
                witness = "slice restriction nonzero at the origin";
                break;
            }
        }
    }
    std::ostringstream os;
    os << points << " slice points: " << witness;
    rec.add("slice-coincidence",
            "highest component restricted to e + p_- equals the slice invariant",
            eq_ok, os.str(), "", seed);

    {
        // membership in S(g_e): values on the slice depend only on the
        // pairings with the centraliser, so moving v inside the annihilator
        // of g_e changes nothing
        QMatrix pairing(pl.cent.dim, static_cast<int>(pl.p.idx_levi.size() +
                                                      pl.p.idx_nminus.size()));
        std::vector<int> idx_pm = pl.p.idx_levi;
        idx_pm.insert(idx_pm.end(), pl.p.idx_nminus.begin(), pl.p.idx_nminus.end());
        for (int t = 0; t < pl.cent.dim; ++t) {
            QVector gu = pl.g.gram * pl.cent.basis[static_cast<size_t>(t)];
            for (size_t c = 0; c < idx_pm.size(); ++c)
                pairing(t, static_cast<int>(c)) = gu(idx_pm[c]);
        }
        auto ann = kernel_basis(pairing);
        bool mem_ok = true;
        int compared = 0;
        for (int t = 0; t < 2 && mem_ok; ++t) {
            QVector vcoords = QVector::Zero(pl.g.dim);
            for (int a : idx_pm) vcoords(a) = Rat(gen.int_in(-50, 50));
            QMatrix v = pl.g.dense_of(vcoords);
            for (size_t w = 0; w < ann.size() && w < 2 && mem_ok; ++w) {
                QVector shifted = vcoords;
                for (size_t c = 0; c < idx_pm.size(); ++c)
                    shifted(idx_pm[c]) += ann[w](static_cast<int>(c));
                QMatrix v2 = pl.g.dense_of(shifted);
                for (int i = 0; i < pl.fam.count() && mem_ok; ++i) {
                    if (eval_slice(pl.fam, i, pl.p, pl.e.matrix, v,
                                   pl.b[static_cast<size_t>(i)]) !=
                        eval_slice(pl.fam, i, pl.p, pl.e.matrix, v2,
                                   pl.b[static_cast<size_t>(i)]))
                        mem_ok = false;
                    ++compared;
                }
            }
        }
        std::ostringstream ms;
        ms << compared << " annihilator perturbations left every value fixed ("
           << ann.size() << "-dimensional annihilator)";
        rec.add_exact("slice-membership",
                      "the slice restriction is a function of the centraliser alone",
                      mem_ok, ms.str());
    }
}

SuiteReport make_report(const SuiteConfig& cfg, Recorder& rec,
                        std::chrono::steady_clock::time_point t0) {
    SuiteReport rep;
    rep.config = cfg;
    rep.checks = std::move(rec.checks);
    rep.passed = std::all_of(rep.checks.begin(), rep.checks.end(),
                             [](const CheckRecord& c) { return c.passed; });
    rep.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
    return rep;
}

SuiteReport suite_coadjoint(const SuiteConfig& cfg) {
    auto t0 = std::chrono::steady_clock::now();
    Recorder rec{&cfg, {}, 0};
    Pipeline pl(cfg);
    run_build_check(rec, pl);
    run_index_checks(rec, pl, std::max(10, cfg.trials));
    run_richardson_checks(rec, pl);
    run_degree_checks(rec, pl);
    run_invariance_checks(rec, pl);
    run_kostant_checks(rec, pl);
    run_slice_checks(rec, pl);
    return make_report(cfg, rec, t0);
}

SuiteReport suite_subregular(const SuiteConfig& cfg) {
    auto t0 = std::chrono::steady_clock::now();
    Recorder rec{&cfg, {}, 0};
    Pipeline pl(cfg);
    run_build_check(rec, pl);
    run_index_checks(rec, pl, std::max(10, cfg.trials));
    run_richardson_checks(rec, pl);
    run_degree_checks(rec, pl);
    run_invariance_checks(rec, pl);
    run_kostant_checks(rec, pl);
    run_slice_checks(rec, pl);
    {
        const int l = pl.fam.count();
        bool ok = true;
        std::vector<int> pdeg;
        for (int i = 0; i < l; ++i) {
            int d = pl.fam.degree(i) - pl.b[static_cast<size_t>(i)];
            pdeg.push_back(d);
            if (i + 1 < l ? d != 1 : d != 2) ok = false;
        }
        rec.add_exact("p-degree-pattern",
                      "p-degrees are 1,...,1,2 for a minimal parabolic", ok,
                      list_str(pdeg));
    }
    {
        SubregularStructure s = subregular_structure(pl.cent, pl.g.type.rank);
        std::ostringstream os;
        os << "centre dim " << s.centre_dim << " (want " << pl.g.type.rank - 1
           << "), derived dim " << s.derived_dim << " (want >= 2)";
        rec.add_exact("subregular-centraliser",
                      "centre of g_e has dimension l-1 and [g_e,g_e] is not a line",
                      s.centre_ok && s.derived_ok, os.str());
    }
    {
        std::uint64_t seed = rec.check_seed();
        ParabolicDecomposition pb = build_parabolic(pl.g, ParabolicSpec::borel(cfg.type));
        std::vector<int> bb = n_minus_degrees(pl.fam, pb, 8, seed);
        bool ok = true;
        for (int i = 0; i < pl.fam.count(); ++i)
            if (bb[static_cast<size_t>(i)] != pl.fam.degree(i) - 1) ok = false;
        std::ostringstream os;
        os << "Borel-relative top degrees " << list_str(bb) << " vs deg F_i - 1";
        rec.add("borel-top-degree",
                "relative to the Borel, every top component drops exactly one degree",
                ok, os.str(), sz_bound(pl.fam.max_degree(), 8), seed);
    }
    return make_report(cfg, rec, t0);
}

SuiteReport suite_adjoint(const SuiteConfig& cfg) {
    auto t0 = std::chrono::steady_clock::now();
    Recorder rec{&cfg, {}, 0};
    Pipeline pl(cfg);
    run_build_check(rec, pl);
    LeviPullbackFamily lf(pl.p);
    {
        std::vector<int> want = levi_invariant_degrees(cfg.spec, cfg.type);
        std::vector<int> got = lf.degrees();
        std::sort(got.begin(), got.end());
        rec.add_exact("pullback-degrees",
                      "pulled-back family realizes the Levi degree multiset",
                      got == want, "degrees " + list_str(got));
    }
    {
        std::uint64_t seed = rec.check_seed();
        ProbeReport pr = invariance_probe(
            pl.q, PointSide::adjoint,
            [&](const QVector& x) { return lf.gradient_rows(x); }, cfg.trials, seed);
        rec.add("pullback-invariance",
                "Levi invariants pulled back through q -> p -> levi are q-invariant",
                pr.passed, pr.passed ? "exact zero at every trial" : pr.witness, "", seed);
    }
    {
        int sum_levi = std::accumulate(lf.degrees().begin(), lf.degrees().end(), 0);
        int sum_g = std::accumulate(pl.fam.degrees().begin(), pl.fam.degrees().end(), 0);
        bool ok = pl.p.is_degenerate() ? sum_levi == sum_g : sum_levi < sum_g;
        std::ostringstream os;
        os << "sum Levi degrees " << sum_levi << (pl.p.is_degenerate() ? " = " : " < ")
           << "sum ambient degrees " << sum_g;
        rec.add_exact("degree-decrease",
                      "adjoint invariant degrees strictly decrease for a proper parabolic",
                      ok, os.str());
    }
    {
        std::uint64_t seed = rec.check_seed();
        std::vector<int> tt = p_top_degrees(pl.fam, pl.p, 8, seed);
        bool full = true;
        for (int i = 0; i < pl.fam.count(); ++i)
            if (tt[static_cast<size_t>(i)] != pl.fam.degree(i)) full = false;
        ProbeReport pr = invariance_probe(
            pl.q, PointSide::adjoint,
            [&](const QVector& x) { return lowered_gradients(pl.fam, pl.p, x, tt); },
            cfg.trials, seed);
        std::ostringstream os;
        os << "top p-degrees " << list_str(tt)
           << (full ? " (pure Levi restriction)" : " (unexpected drop)") << "; "
           << (pr.passed ? "invariance exact" : pr.witness);
        rec.add("lowered-invariance",
                "components of top p-degree are q-invariant on the adjoint side",
                full && pr.passed, os.str(), sz_bound(pl.fam.max_degree(), 8), seed);
    }
    {
        // diagnostic only: the lowered family keeps the ambient degrees, so it
        // cannot generate the (smaller) adjoint invariant ring
        int sum_levi = std::accumulate(lf.degrees().begin(), lf.degrees().end(), 0);
        int sum_g = std::accumulate(pl.fam.degrees().begin(), pl.fam.degrees().end(), 0);
        std::ostringstream os;
        os << "lowered degrees " << list_str(pl.fam.degrees()) << " (sum " << sum_g
           << ") vs generating degrees sum " << sum_levi;
        rec.add_exact("lowered-degrees-diagnostic",
                      "lowered components do not generate: their degrees stay ambient",
                      true, os.str());
    }
    return make_report(cfg, rec, t0);
}

SuiteReport suite_counterexample(const SuiteConfig& cfg) {
    auto t0 = std::chrono::steady_clock::now();
    Recorder rec{&cfg, {}, 0};
    Pipeline pl(cfg);
    run_build_check(rec, pl);
    run_index_checks(rec, pl, std::max(10, cfg.trials));
    {
        std::uint64_t seed = rec.check_seed();
        pl.e = find_richardson(pl.p, 32, seed);
        pl.lambda = jordan_type(pl.e.matrix);
        std::ostringstream os;
        os << "Jordan type " << pl.lambda.str();
        rec.add("jordan-type", "the composition (4,1,1;0) carries the orbit (5,3,2,2)",
                pl.lambda == Partition({5, 3, 2, 2}), os.str(), "", seed);
    }
    {
        pl.cent = centraliser(pl.g, pl.e.coords);
        std::ostringstream os;
        os << "dim g_e = " << pl.cent.dim;
        rec.add_exact("centraliser-dim", "dim g_e = 18 for this orbit",
                      pl.cent.dim == 18, os.str());
    }
    {
        std::uint64_t seed = rec.check_seed();
        int trials = std::max(10, cfg.trials);
        int idx = subalgebra_index(pl.cent, trials, seed);
        rec.add("index-of-centraliser", "ind g_e = rk g even for the dependent family",
                idx == pl.g.type.rank, "ind g_e = " + std::to_string(idx),
                sz_bound((pl.cent.dim - pl.g.type.rank) / 2, trials), seed);
    }
    {
        std::uint64_t seed = rec.check_seed();
        pl.b = n_minus_degrees(pl.fam, pl.p, 8, seed);
        int sum = std::accumulate(pl.b.begin(), pl.b.end(), 0);
        std::ostringstream os;
        os << "b = " << list_str(pl.b) << ", sum " << sum << " > dim n = " << pl.p.dim_n();
        rec.add("degree-sum-strict",
                "degree sum exceeds dim n, as it must for a dependent family",
                sum > pl.p.dim_n(), os.str(), sz_bound(pl.fam.max_degree(), 8), seed);
    }
    {
        std::uint64_t seed = rec.check_seed();
        SplitMix64 gen(seed);
        const int l = pl.fam.count();
        int points = std::max(cfg.trials, 20);
        int max_rank = 0;
        bool ok = true;
        for (int t = 0; t < points; ++t) {
            QVector xi = random_point(pl.q.dim, gen);
            int r = jacobian_rank(highest_gradients(pl.fam, pl.p, xi, pl.b));
            max_rank = std::max(max_rank, r);
            if (r >= l) ok = false;
        }
        std::ostringstream os;
        os << "max Jacobian rank " << max_rank << " over " << points << " points (l = "
           << l << ")";
        rec.add("jacobian-rank-deficient",
                "the highest components stay algebraically dependent", ok, os.str(), "",
                seed);
    }
    return make_report(cfg, rec, t0);
}

SuiteReport suite_combinatorics(const SuiteConfig& cfg) {
    auto t0 = std::chrono::steady_clock::now();
    Recorder rec{&cfg, {}, 0};
    {
        Partition p({6, 4, 2});
        auto ms = e_degree_multiset(Family::C, p);
        auto table = bidegree_table(Family::C, p);
        bool ok = ms == std::vector<int>{1, 1, 1, 2, 2, 3} &&
                  table == std::vector<std::pair<int, int>>{
                               {1, 1}, {1, 3}, {1, 5}, {2, 6}, {2, 8}, {3, 9}} &&
                  degrees_match_levi(Family::C, p);
        rec.add_exact("sp12-partition", "(6,4,2) in sp12: degrees and bi-degrees", ok,
                      "multiset " + list_str(ms) + ", bi-degrees " + pairs_str(table) +
                          ", Levi " + blocks_str(levi_type(Family::C, p)));
    }
    {
        Partition p({3, 3, 1, 1});
        auto ms = e_degree_multiset(Family::C, p);
        auto table = bidegree_table(Family::C, p);
        bool ok = ms == std::vector<int>{1, 2, 2, 4} &&
                  table == std::vector<std::pair<int, int>>{{1, 1}, {2, 2}, {2, 4}, {4, 4}} &&
                  degrees_match_levi(Family::C, p);
        rec.add_exact("sp8-partition", "(3,3,1,1) in sp8: degrees and bi-degrees", ok,
                      "multiset " + list_str(ms) + ", bi-degrees " + pairs_str(table) +
                          ", Levi " + blocks_str(levi_type(Family::C, p)));
    }
    {
        Partition p({5, 4, 4, 2, 2});
        auto ms = e_degree_multiset(Family::B, p);
        bool ok = ms == std::vector<int>{1, 1, 2, 2, 3, 3, 4, 5} &&
                  is_admissible_B(p) && degrees_match_levi(Family::B, p);
        rec.add_exact("so17-partition", "(5,4,4,2,2) in so17: admissible degrees", ok,
                      "multiset " + list_str(ms) + ", Levi " +
                          blocks_str(levi_type(Family::B, p)));
    }
    {
        Partition p({6, 6, 5, 5, 2});
        Partition mod = modified_partition_C(p);
        auto ms = e_degree_multiset(Family::C, p);
        auto levi = levi_type(Family::C, p);
        bool ok = mod == Partition({7, 5, 5, 5, 2}) &&
                  ms == std::vector<int>{1, 1, 1, 2, 2, 2, 3, 3, 4, 4, 4, 5} &&
                  blocks_str(levi) == "gl5+gl4+gl1+sp4" &&
                  degrees_match_levi(Family::C, p);
        rec.add_exact("sp24-figure-partition",
                      "(6,6,5,5,2): odd-shift, Levi blocks and degree multiset", ok,
                      "modified " + mod.str() + ", multiset " + list_str(ms) + ", Levi " +
                          blocks_str(levi));
    }
    {
        std::uint64_t seed = rec.check_seed();
        SplitMix64 gen(seed);
        std::vector<Partition> pool;
        for (int total = 2; total <= 30; total += 2) {
            LieType t{Family::C, total / 2};
            for (auto& p : all_partitions(total))
                if (is_valid_nilpotent(t, p) && is_richardson_C(p)) pool.push_back(p);
        }
        bool ok = true;
        std::string bad;
        for (int i = 0; i < 200 && ok; ++i) {
            const Partition& p =
                pool[static_cast<size_t>(gen.int_in(0, static_cast<long>(pool.size()) - 1))];
            if (!degrees_match_levi(Family::C, p)) { ok = false; bad = p.str(); }
        }
        rec.add("sweep-richardson-C",
                "200 random Richardson partitions match their Levi degrees", ok,
                ok ? "pool size " + std::to_string(pool.size()) : "mismatch at " + bad, "",
                seed);
    }
    {
        std::uint64_t seed = rec.check_seed();
        SplitMix64 gen(seed);
        std::vector<Partition> pool;
        for (int total = 3; total <= 29; total += 2) {
            LieType t{Family::B, (total - 1) / 2};
            for (auto& p : all_partitions(total))
                if (is_valid_nilpotent(t, p) && is_admissible_B(p)) pool.push_back(p);
        }
        bool ok = true;
        std::string bad;
        for (int i = 0; i < 100 && ok; ++i) {
            const Partition& p =
                pool[static_cast<size_t>(gen.int_in(0, static_cast<long>(pool.size()) - 1))];
            if (!degrees_match_levi(Family::B, p)) { ok = false; bad = p.str(); }
        }
        rec.add("sweep-admissible-B",
                "100 random admissible partitions match their Levi degrees", ok,
                ok ? "pool size " + std::to_string(pool.size()) : "mismatch at " + bad, "",
                seed);
    }
    return make_report(cfg, rec, t0);
}

} // namespace

void validate_config(const SuiteConfig& cfg) {
    if (cfg.trials < 1) throw std::invalid_argument("trials must be >= 1");
    if (cfg.suite == Suite::combinatorics) return;
    validate_spec(cfg.spec, cfg.type);
    switch (cfg.suite) {
        case Suite::coadjoint:
            if (cfg.type.family == Family::GL)
                throw std::invalid_argument("coadjoint suite runs on types A/B/C/D");
            break;
        case Suite::subregular: {
            if (cfg.type.rank < 2)
                throw std::invalid_argument("subregular suite needs rank >= 2");
            if (levi_semisimple_rank_of_spec(cfg.spec, cfg.type) != 1)
                throw std::invalid_argument(
                    "subregular suite needs a minimal parabolic composition");
            break;
        }
        case Suite::counterexample: {
            if (cfg.type.family != Family::D || cfg.type.rank != 6 ||
                cfg.spec.composition != std::vector<int>{4, 1, 1} ||
                cfg.spec.central_block != 0)
                throw std::invalid_argument(
                    "counterexample suite is pinned to so12 with composition (4,1,1;0)");
            break;
        }
        default: break;
    }
}

SuiteReport run_suite(const SuiteConfig& cfg) {
    validate_config(cfg);
    switch (cfg.suite) {
        case Suite::coadjoint: return suite_coadjoint(cfg);
        case Suite::adjoint: return suite_adjoint(cfg);
        case Suite::subregular: return suite_subregular(cfg);
        case Suite::counterexample: return suite_counterexample(cfg);
        case Suite::combinatorics: return suite_combinatorics(cfg);
    }
    throw std::logic_error("run_suite: unreachable");
}

// ---- report rendering ---------------------------------------------------------

nlohmann::ordered_json SuiteReport::to_json() const {
    nlohmann::ordered_json j;
    j["schema_version"] = 1;
    nlohmann::ordered_json jc;
    jc["command"] = "verify";
    jc["suite"] = suite_name(config.suite);
    if (config.suite != Suite::combinatorics) {
        switch (config.type.family) {
            case Family::A: jc["type"] = "A"; break;
            case Family::B: jc["type"] = "B"; break;
            case Family::C: jc["type"] = "C"; break;
            case Family::D: jc["type"] = "D"; break;
            case Family::GL: jc["type"] = "GL"; break;
        }
        jc["rank"] = config.type.rank;
        jc["composition"] = config.spec.composition;
        jc["central"] = config.spec.central_block;
    }
    jc["trials"] = config.trials;
    jc["seed"] = config.seed;
    j["config"] = jc;
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& c : checks) {
        nlohmann::ordered_json cj;
        cj["name"] = c.name;
        cj["anchor"] = c.anchor;
        cj["status"] = c.passed ? "pass" : "fail";
        cj["witness"] = c.witness;
        cj["bound"] = c.bound;
        cj["seed"] = c.seed;
        arr.push_back(cj);
    }
    j["checks"] = arr;
    nlohmann::ordered_json js;
    js["status"] = passed ? "pass" : "fail";
    js["runtime_ms"] = runtime_ms;
    js["seed"] = config.seed;
    j["summary"] = js;
    return j;
}

void SuiteReport::print(std::ostream& os) const {
    os << "== suite " << suite_name(config.suite);
    if (config.suite != Suite::combinatorics)
        os << " " << config.type.name() << " " << config.spec.str();
    os << " (trials " << config.trials << ", seed " << config.seed << ")\n";
    for (const auto& c : checks) {
        os << (c.passed ? "[PASS] " : "[FAIL] ") << c.name << ": " << c.witness;
        if (!c.bound.empty()) os << "  {failure bound " << c.bound << "}";
        os << "\n";
        if (!c.passed) os << "       claim: " << c.anchor << "\n";
    }
    os << "== " << (passed ? "PASS" : "FAIL") << " (" << checks.size() << " checks, "
       << runtime_ms << " ms)\n";
}

} // namespace paracon
