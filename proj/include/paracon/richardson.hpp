#pragma once

#include "paracon/partitions.hpp"
#include "paracon/rng.hpp"

#include <cstdint>

namespace paracon {

// e in span(n) together with the certificate that its P-orbit is dense:
// the bracket map p -> n, x |-> [x, e], has full rank dim n.
struct RichardsonElement {
    QVector coords;       // in the algebra basis, supported on n indices
    QMatrix matrix;
    int certificate_rank = 0;
    std::uint64_t seed = 0;
};

// search-and-certify: first random integer draw in span(n) whose certificate
// rank equals dim n; throws after `trials` failures (which would indicate a
// bug, not bad luck)
RichardsonElement find_richardson(const ParabolicDecomposition& p, int trials,
                                  std::uint64_t seed);

// rank of the bracket map p -> n at e; equals dim n iff e is Richardson for p
int richardson_certificate(const ParabolicDecomposition& p, const QVector& e_coords);

// Jordan type of a nilpotent matrix from the ranks of its powers;
// throws std::invalid_argument if some power never reaches zero
Partition jordan_type(const QMatrix& e);

struct CentraliserData {
    std::vector<QVector> basis;  // kernel of ad(e), in algebra coordinates
    int dim = 0;
    int centre_dim = 0;
    int derived_dim = 0;
    // structure constants of g_e in its own basis
    std::vector<BracketList> structure;

    const BracketList& bracket_list(int i, int j) const {
        return structure[static_cast<size_t>(i) * dim + j];
    }
};

CentraliserData centraliser(const AlgebraBasis& g, const QVector& e_coords);

// ind g_e probed through the coadjoint form of the centraliser
int subalgebra_index(const CentraliserData& c, int trials, std::uint64_t seed);

struct SubregularStructure {
    int centre_dim = 0;
    int derived_dim = 0;
    bool centre_ok = false;   // centre dimension = l - 1
    bool derived_ok = false;  // dim [g_e, g_e] >= 2
};

SubregularStructure subregular_structure(const CentraliserData& c, int rank_l);

} // namespace paracon
