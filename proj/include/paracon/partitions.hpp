#pragma once

#include "paracon/parabolic.hpp"

#include <string>
#include <vector>

namespace paracon {

struct Partition {
    std::vector<int> parts;  // weakly decreasing, positive

    Partition() = default;
    explicit Partition(std::vector<int> p);

    int total() const;
    int part(int i) const {  // 1-indexed, 0 past the end
        return (i >= 1 && i <= static_cast<int>(parts.size()))
                   ? parts[static_cast<size_t>(i - 1)]
                   : 0;
    }
    std::string str() const;

    bool operator==(const Partition&) const = default;
};

// dual (conjugate) partition: column lengths of the Young diagram
Partition dual(const Partition& p);

// multiplicity condition for nilpotent orbits: in sp every odd part has even
// multiplicity, in so every even part has even multiplicity; checks the total
// against the matrix size of t first
bool is_valid_nilpotent(LieType t, const Partition& p);

// Richardson test in sp_{2l}: with r = max{ j : part j odd } (0 if none),
//   (1) r is even,  (2) parts 2j-1 and 2j have equal parity for 2j <= r,
//   (3) even neighbours inside the odd range are separated by >= 2
bool is_richardson_C(const Partition& p);

// admissible in so_{2l+1}: first part odd, all other parts even
bool is_admissible_B(const Partition& p);

// type C modification: every even pair (part 2j-1, part 2j) with 2j <= r
// becomes (+1, -1); the result has r odd parts followed by even ones
Partition modified_partition_C(const Partition& p);

// canonical Levi attached to the partition: gl blocks sorted descending,
// then the single sp/so block when present
std::vector<LeviBlockLabel> levi_type(Family f, const Partition& p);

// multiset (ascending) of the slice-restriction degrees of the basic
// invariants; for type A the sl convention drops one entry equal to 1
// (gl_mode keeps it)
std::vector<int> e_degree_multiset(Family f, const Partition& p, bool gl_mode = false);

// (p-degree, n_--degree) pairs in increasing order of deg F_i
std::vector<std::pair<int, int>> bidegree_table(Family f, const Partition& p,
                                                bool gl_mode = false);

// degrees of the full invariants F_i of the ambient algebra fixed by f and
// the partition total
std::vector<int> ambient_degrees(Family f, int total, bool gl_mode = false);

// e_degree_multiset equals the Levi degree multiset, and both sum identities
// hold: sum of n_- degrees = dim n, sum of p-degrees = dim of a Borel of the
// Levi
bool degrees_match_levi(Family f, const Partition& p);

// all partitions of n (descending parts), lexicographically descending
std::vector<Partition> all_partitions(int n);

// One partition's complete combinatorial record: dual, modification, Levi
// type, degree data and predicate flags.  Throws on a partition whose total
// does not fit the type.
struct RichardsonProfile {
    LieType lie_type;
    Partition lambda;
    Partition dual_partition;
    Partition modified;  // type C only; equals lambda elsewhere
    bool valid_nilpotent = false;
    bool richardson = false;   // the type C test (true in type A)
    bool admissible = false;   // the type B test
    std::vector<LeviBlockLabel> levi;               // empty if predicates fail
    std::vector<int> degree_multiset;               // ditto
    std::vector<std::pair<int, int>> bidegrees;     // ditto
    bool matches_levi = false;
};

RichardsonProfile richardson_profile(LieType t, const Partition& p);

} // namespace paracon
