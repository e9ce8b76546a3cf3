#pragma once

#include "paracon/charpoly.hpp"
#include "paracon/contraction.hpp"

#include <functional>
#include <string>

namespace paracon {

// Which coordinate system a point lives in.
//   coadjoint: xi in q*, evaluated through the trace-dual matrix
//              Y(xi) = sum_a xi_a dual[a]
//   adjoint:   x in q, evaluated at X = sum_a x_a basis[a]
enum class PointSide { coadjoint, adjoint };

struct CoadjointPoint {
    QVector xi;
    std::string tag;  // provenance: seed, "slice", "crafted", ...
};

struct CurvePolys;

// The basic symmetric invariants: characteristic polynomial coefficients
// (even ones for sp/so, trace dropped for sl) plus the Pfaffian for so_{2l}.
// Sign convention: det(t*I - Y) = t^N + c_1 t^{N-1} + ...; nothing checked
// here depends on the signs.
class InvariantFamily {
public:
    explicit InvariantFamily(const AlgebraBasis& g);

    int count() const { return static_cast<int>(degrees_.size()); }
    const std::vector<int>& degrees() const { return degrees_; }
    int degree(int i) const { return degrees_[static_cast<size_t>(i)]; }
    int max_degree() const { return max_degree_; }
    const AlgebraBasis& algebra() const { return *g_; }

    std::vector<Rat> eval_all(const QVector& pt, PointSide side) const;
    Rat eval(int i, const QVector& pt, PointSide side) const;

    struct Evaluation {
        std::vector<Rat> value;        // per invariant
        std::vector<QVector> gradient; // per invariant, w.r.t. pt coordinates
    };
    Evaluation eval_all_grad(const QVector& pt, PointSide side) const;

private:
    const AlgebraBasis* g_;
    std::vector<int> degrees_;
    std::vector<int> coeff_index_;  // char-poly index, or -1 for the Pfaffian
    int max_degree_ = 0;

    QMatrix matrix_at(const QVector& pt, PointSide side) const;
    const SparseMat& direction(int a, PointSide side) const;

    friend struct CurvePolys;
    friend CurvePolys expand_on_curve(const InvariantFamily&, const QVector&,
                                      const QVector&, PointSide, bool);
};

// Exact polynomial expansion of every invariant along s -> base + s*dir,
// by evaluation at max_degree+1 small integer nodes and interpolation.
struct CurvePolys {
    // value[i][j] = [s^j] F_i(base + s*dir), j = 0..deg(F_i)
    std::vector<std::vector<Rat>> value;
    // grad[i][a][j] = [s^j] (d_a F_i)(base + s*dir); empty unless requested
    std::vector<std::vector<std::vector<Rat>>> grad;

    int top_nonzero(int i) const;  // -1 if identically zero on the line
};

CurvePolys expand_on_curve(const InvariantFamily& fam, const QVector& base,
                           const QVector& dir, PointSide side, bool with_grad);

// ---- coadjoint bi-grading S(p) (x) S(n_-) ----------------------------------

// per-point bi-homogeneous component values of one invariant
struct BiComponentProfile {
    int invariant = 0;
    int degree = 0;            // m = deg F_i
    std::vector<Rat> values;   // values[j] = component of n_- degree j at xi
    int top_nonzero = -1;      // largest j with values[j] != 0 here
};

BiComponentProfile bicomponents(const InvariantFamily& fam, int i,
                                const ParabolicDecomposition& p, const QVector& xi);

// certified n_- degrees b_i: max of top_nonzero over `trials` random points;
// throws if an invariant vanishes on every probed line
std::vector<int> n_minus_degrees(const InvariantFamily& fam,
                                 const ParabolicDecomposition& p, int trials,
                                 std::uint64_t seed);
int n_minus_degree(const InvariantFamily& fam, int i,
                   const ParabolicDecomposition& p, int trials, std::uint64_t seed);

// F_i-highest-component value at xi, given its certified n_- degree
Rat eval_highest(const InvariantFamily& fam, int i, const ParabolicDecomposition& p,
                 const QVector& xi, int b_i);

// gradient rows of all highest components at xi (the Kostant Jacobian)
std::vector<QVector> highest_gradients(const InvariantFamily& fam,
                                       const ParabolicDecomposition& p,
                                       const QVector& xi, const std::vector<int>& b);

// ---- adjoint bi-grading S(p*) (x) S(n_-*) ----------------------------------

// certified top p-degrees of F_i on q (expected = deg F_i; certified anyway)
std::vector<int> p_top_degrees(const InvariantFamily& fam,
                               const ParabolicDecomposition& p, int trials,
                               std::uint64_t seed);

// component of highest p-degree, evaluated at x in q (adjoint coordinates)
Rat eval_adjoint_lowered(const InvariantFamily& fam, int i,
                         const ParabolicDecomposition& p, const QVector& x, int t_i);

std::vector<QVector> lowered_gradients(const InvariantFamily& fam,
                                       const ParabolicDecomposition& p,
                                       const QVector& x, const std::vector<int>& t);

// ---- slice functions -------------------------------------------------------

// y in span(n_-) with tr(y e) = 1, found by sampling and rescaling;
// throws if every draw pairs to zero
QMatrix make_slice_normalizer(const ParabolicDecomposition& p, const QMatrix& e,
                              int trials, std::uint64_t seed);

// highest component restricted to the slice e + p_-: value at xi = coords(e+v)
Rat eval_slice(const InvariantFamily& fam, int i, const ParabolicDecomposition& p,
               const QMatrix& e, const QMatrix& v, int b_i);

// independent route: minimal-index component along g = k*y (+) e-orthogonal,
// extracted as the leading coefficient of c -> F_i(xi + c * tr-coords(e)).
// k_i is certified over random points first.
int slodowy_min_index(const InvariantFamily& fam, int i, const QMatrix& e,
                      int trials, std::uint64_t seed);
Rat slodowy_slice_eval(const InvariantFamily& fam, int i, const QMatrix& e,
                       const QMatrix& y, const QVector& xi, int k_i);

// ---- derivatives, ranks, probes --------------------------------------------

// coefficient of u^1 in u -> eval(xi + u*d), interpolated at degree+1 nodes;
// the slow generic route, kept as a cross-check of the gradient machinery
Rat directional_derivative(const std::function<Rat(const QVector&)>& eval,
                           int total_degree, const QVector& xi, const QVector& d);

int jacobian_rank(const std::vector<QVector>& rows);
int jacobian_rank(const std::vector<QVector>& rows,
                  const std::vector<QVector>& directions);

struct ProbeReport {
    bool passed = true;
    std::string witness;
};

// exact annihilation of a family by every basis derivation of q;
// rows(xi) must return the gradient rows of the family at xi
using GradientRows = std::function<std::vector<QVector>(const QVector&)>;
ProbeReport invariance_probe(const ContractedAlgebra& q, PointSide side,
                             const GradientRows& rows, int trials,
                             std::uint64_t seed);

struct KostantRecord {
    int stab_dim = 0;
    int jac_rank = 0;
    bool consistent = false;  // (jac_rank = l) <=> (stab_dim = l)
};

KostantRecord kostant_probe(const ContractedAlgebra& q, const InvariantFamily& fam,
                            const std::vector<int>& b, const QVector& xi);

} // namespace paracon
