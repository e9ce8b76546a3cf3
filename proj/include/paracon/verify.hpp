#pragma once

#include "paracon/invariants.hpp"
#include "paracon/richardson.hpp"

#include <json.hpp>

#include <cstdint>
#include <iosfwd>
#include <string>

namespace paracon {

// Basic invariants of the Levi factor pulled back through the projections
// q -> p -> levi (coordinates outside the Levi blocks are killed); these are
// functions on q evaluated in adjoint coordinates.
class LeviPullbackFamily {
public:
    explicit LeviPullbackFamily(const ParabolicDecomposition& p);

    int count() const { return static_cast<int>(invs_.size()); }
    const std::vector<int>& degrees() const { return degrees_; }

    std::vector<Rat> eval_all(const QVector& x) const;
    std::vector<QVector> gradient_rows(const QVector& x) const;

private:
    const ParabolicDecomposition* p_;
    struct BlockInv {
        int block;   // index into p.levi_blocks
        int degree;
        int coeff;   // char-poly coefficient index, or -1 for the Pfaffian
    };
    std::vector<BlockInv> invs_;
    std::vector<int> degrees_;
};

enum class Suite { coadjoint, adjoint, subregular, counterexample, combinatorics };

std::string suite_name(Suite s);
Suite parse_suite(const std::string& name);

struct SuiteConfig {
    Suite suite = Suite::coadjoint;
    LieType type{Family::A, 2};
    ParabolicSpec spec;
    int trials = 20;
    std::uint64_t seed = 0;
};

// suite/type compatibility; throws std::invalid_argument with a diagnostic
void validate_config(const SuiteConfig& cfg);

struct CheckRecord {
    std::string name;
    std::string anchor;   // the mathematical identity the check exercises
    bool passed = true;
    std::string witness;  // concrete data: ranks, degrees, sums, rationals
    std::string bound;    // Schwartz-Zippel failure bound, "" for exact checks
    std::uint64_t seed = 0;
};

struct SuiteReport {
    SuiteConfig config;
    std::vector<CheckRecord> checks;
    bool passed = true;
    long long runtime_ms = 0;

    nlohmann::ordered_json to_json() const;
    void print(std::ostream& os) const;
};

SuiteReport run_suite(const SuiteConfig& cfg);

// failure probability of `trials` independent degree-d Schwartz-Zippel draws
// with coordinates in [-bound, bound], formatted exactly: "(d/N)^T < 2^-k"
std::string sz_bound(int degree, int trials, long bound = 10000);

} // namespace paracon
