#pragma once

#include "paracon/parabolic.hpp"
#include "paracon/rng.hpp"

#include <cstdint>

namespace paracon {

// The contracted Lie algebra q = p x| n_-^a on the same ordered basis:
// the bracket keeps the p part of [x,y] when x,y are in p, keeps only the
// n_- projection when one argument is in n_-, and kills n_- x n_-.
struct ContractedAlgebra {
    const ParabolicDecomposition* parent = nullptr;
    int dim = 0;

    const BracketList& bracket_list(int i, int j) const {
        return structure[static_cast<size_t>(i) * dim + j];
    }
    QVector bracket(const QVector& x, const QVector& y) const;

    std::vector<BracketList> structure;
};

ContractedAlgebra contract(const ParabolicDecomposition& p);

// one-parameter family [x,y]_(t) = c_t^{-1}([c_t x, c_t y]) with
// c_t(p + eta) = p + t*eta; t = 0 is rejected (that limit is `contract`)
QVector family_bracket(const ParabolicDecomposition& p, const QVector& x,
                       const QVector& y, const Rat& t);

// B(xi)_ij = <xi, [b_i, b_j]_q>, antisymmetric
QMatrix coadjoint_form(const ContractedAlgebra& q, const QVector& xi);

// dim q_xi = dim q - rank B(xi)
int stabilizer_dim(const ContractedAlgebra& q, const QVector& xi);

// Index probe: min of stabilizer_dim over random integer points.  The result
// is an upper bound for ind q that is exact up to the reported
// Schwartz-Zippel failure probability.
struct IndexReport {
    int index = -1;
    int trials = 0;
    std::uint64_t seed = 0;
};
IndexReport index_of(const ContractedAlgebra& q, int trials, std::uint64_t seed);

// infinitesimal coadjoint action: component a of (ad* b_x)(xi) = -<xi, [b_x, b_a]_q>
QVector coadjoint_derivative(const ContractedAlgebra& q, int x, const QVector& xi);

// infinitesimal adjoint action: [b_x, v]_q
QVector adjoint_derivative(const ContractedAlgebra& q, int x, const QVector& v);

} // namespace paracon
