#pragma once

#include "paracon/lie_algebra.hpp"

namespace paracon {

// An ordered composition of isotropic block sizes.  For A/GL the sizes sum to
// the matrix size and central_block is 0; for B/C/D the blocks describe an
// isotropic flag and central_block the fixed middle: 2*sum + central = N with
// central odd (B), even (C), even and != 2 (D).
struct ParabolicSpec {
    std::vector<int> composition;
    int central_block = 0;

    static ParabolicSpec borel(LieType t);
    std::string str() const;
};

// throws std::invalid_argument with a diagnostic on an invalid spec
void validate_spec(const ParabolicSpec& s, LieType t);

enum class Region : char { upper, levi, lower };  // n, levi factor, n_-

struct LeviBlock {
    Family kind;   // GL for a gl factor, B/C/D for the middle block
    int offset;    // first matrix row of the block
    int size;      // gl_size, or the middle sp/so size
};

struct ParabolicDecomposition {
    const AlgebraBasis* algebra = nullptr;
    ParabolicSpec spec;

    std::vector<int> idx_n, idx_levi, idx_nminus;
    std::vector<Region> region;       // per basis index
    std::vector<LeviBlock> levi_blocks;

    int dim_g() const { return algebra->dim; }
    int dim_n() const { return static_cast<int>(idx_n.size()); }
    int dim_levi() const { return static_cast<int>(idx_levi.size()); }
    int dim_p() const { return dim_n() + dim_levi(); }

    bool is_degenerate() const { return idx_n.empty(); }  // p = g
    // Levi factor has semisimple rank 1 (one sl2)
    bool is_minimal() const;

    // coordinate restrictions (zero out the complement)
    QVector restrict_to(const QVector& v, Region r) const;
    QVector restrict_to_p(const QVector& v) const;
};

ParabolicDecomposition build_parabolic(const AlgebraBasis& g, const ParabolicSpec& s);

// Multiset (sorted ascending) of the degrees of the basic symmetric
// invariants of the Levi factor:  gl_k gives 1..k, sp_2r gives 2,4,..,2r,
// so_{2r+1} gives 2,4,..,2r, so_2r gives 2,4,..,2r-2,r; in type A one
// degree-1 entry is dropped (sl versus gl convention).
std::vector<int> levi_invariant_degrees(const ParabolicSpec& s, LieType t);

// same, from an explicit block list (sizes of gl blocks plus optional middle)
struct LeviBlockLabel {
    Family kind;  // GL, or B/C/D for sp/so middle
    int size;
};
std::vector<int> block_invariant_degrees(const std::vector<LeviBlockLabel>& blocks,
                                         bool drop_one_linear);

int levi_dim(const std::vector<LeviBlockLabel>& blocks, bool traceless);
int levi_rank(const std::vector<LeviBlockLabel>& blocks, bool traceless);

} // namespace paracon
