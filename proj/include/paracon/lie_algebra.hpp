#pragma once

#include "paracon/linalg.hpp"

#include <string>
#include <vector>

namespace paracon {

enum class Family { A, B, C, D, GL };

// Classical type with its split matrix model.  A_l is realized as sl(l+1),
// GL as gl(l+1) (used only for degree combinatorics), B_l as so(2l+1),
// C_l as sp(2l), D_l as so(2l), all with respect to an anti-diagonal bilinear
// form so that the standard Borel is upper triangular.
struct LieType {
    Family family = Family::A;
    int rank = 1;

    int matrix_size() const;
    int dim() const;
    // number of basic symmetric invariants (rank, except l+1 in GL mode)
    int invariant_count() const;
    std::string name() const;

    // The Killing form is kappa = c * trace-form with this constant; every
    // implemented statement is invariant under rescaling the form, so the
    // toolkit works with tr(xy) throughout and only records c.
    int killing_to_trace_ratio() const;
};

LieType parse_lie_type(const std::string& family_letter, int rank);

struct MatEntry {
    int row, col;
    Rat val;
};

// Basis matrices have at most two entries; keeping them sparse makes
// structure constants and trace pairings O(1) per pair.
struct SparseMat {
    int n = 0;
    std::vector<MatEntry> entries;

    QMatrix dense() const;
};

SparseMat commutator(const SparseMat& a, const SparseMat& b);
Rat trace_product(const SparseMat& a, const SparseMat& b);

// list of (k, c) with [b_i, b_j] = sum_k c * b_k
using BracketList = std::vector<std::pair<int, Rat>>;

class AlgebraBasis {
public:
    LieType type;
    int n = 0;    // matrix size
    int dim = 0;  // algebra dimension

    // ordered adapted basis: strictly upper part, then diagonal, then
    // strictly lower, each matrix with its canonical lead position
    std::vector<SparseMat> basis;
    std::vector<std::pair<int, int>> lead;  // (row, col), 0-indexed
    int upper_count = 0;
    int diag_count = 0;

    // trace-form data, filled at construction
    QMatrix gram;                  // gram(i,j) = tr(b_i b_j)
    std::vector<SparseMat> dual;   // tr(dual[a] * b_j) = delta_aj

    const BracketList& bracket_list(int i, int j) const {
        return structure_[static_cast<size_t>(i) * dim + j];
    }

    // coordinates in the ordered basis; throws if the matrix is not in the span
    QVector coords_of(const QMatrix& x) const;
    QMatrix dense_of(const QVector& coords) const;

    // [x, y] on coordinate vectors through the structure tensor
    QVector bracket(const QVector& x, const QVector& y) const;

    // columns are coords of [e, b_j]; kernel = centraliser of e
    QMatrix ad_matrix(const QVector& e_coords) const;

    // coordinates of the functional tr(z . ) in the dual basis of q*,
    // i.e. xi_a = tr(z * b_a)
    QVector trace_coords(const QMatrix& z) const;

    // reconstruction Y(xi) = sum_a xi_a dual[a]; tr(Y(xi) x) = <xi, x>
    QMatrix dual_combination(const QVector& xi) const;

private:
    friend AlgebraBasis build_algebra(LieType t);
    std::vector<BracketList> structure_;
};

AlgebraBasis build_algebra(LieType t);

} // namespace paracon
