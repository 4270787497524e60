#ifndef LRC_CONSTRUCTIONS_HPP
#define LRC_CONSTRUCTIONS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lrc/cyclic_code.hpp"

namespace lrc {

// Parameters of an (r, delta) locally repairable cyclic code of length n
// over GF(q). Admissible parameters have (r+delta-1) | n and gcd(n,q)=1;
// rho counts the repair groups.
struct LrcParams {
    uint64_t q = 0;
    uint32_t n = 0;
    uint32_t r = 0;
    uint32_t delta = 0;

    uint32_t group_size() const { return r + delta - 1; }
    uint32_t rho() const { return n / group_size(); }
};

// The four generator families plus the distance-parameterized variant
// sitting between t1 and t3.
enum class KindTag { T1, T2, T3, Remark3, T4 };

const char* kind_name(KindTag tag);
std::optional<KindTag> kind_from_name(const std::string& name);

struct ConstructionKind {
    KindTag tag = KindTag::T1;
    // Only read for Remark3, where it selects the distance in
    // [delta+1, 2*delta]; the other kinds fix their own distance.
    uint32_t target_d = 0;
};

// The distance the kind is built to reach: delta+1, delta+2, the chosen
// d, 2*delta, 6.
uint32_t target_distance(const LrcParams& params, const ConstructionKind& kind);

// Names of every violated admissibility condition; empty means the
// parameters are accepted for this kind.
std::vector<std::string> check_preconditions(const LrcParams& params,
                                             const ConstructionKind& kind);

// Arithmetic data every generator is assembled from: the splitting field
// GF(q^s), a primitive n-th root xi, alpha = xi^rho of order r+delta-1,
// and for the kinds that need it gamma = alpha^a with
// a*rho + b*(r+delta-1) = delta (t2) or 1 (t3, remark3, t4), a the
// smallest non-negative solution.
struct ConstructionContext {
    LrcParams params;
    ConstructionKind kind;
    uint32_t s;
    uint32_t bezout_target;
    int64_t bezout_a;
    int64_t bezout_b;
    SubfieldMap tower;
    FieldElement xi;
    FieldElement alpha;
    std::optional<FieldElement> gamma;
};

// Errors: PreconditionFailed listing every violated condition.
ConstructionContext make_context(const LrcParams& params, const ConstructionKind& kind);

// The generator as a product of linear and binomial factors over the
// splitting field, monic, before descent to GF(q).
Polynomial generator_over_extension(const ConstructionContext& ctx);

// Builds the code: generator over GF(q^s), distinctness check on its
// roots, descent to GF(q), dimension check against the kind's closed
// form. Errors: PreconditionFailed; RootCollision on a repeated root,
// which the admissibility conditions are supposed to rule out.
CyclicCode construct(const LrcParams& params, const ConstructionKind& kind);

// n - k + 1 - (ceil(k/r) - 1)(delta - 1), the upper bound every
// (r, delta) locally repairable code obeys. Errors: InvalidParams.
int64_t singleton_bound(uint32_t n, uint32_t k, uint32_t r, uint32_t delta);

// Witness that delta-1 residues mod r+delta-1, in arithmetic progression
// with difference b coprime to n, have all their exponent classes inside
// the defining set.
struct DefiningSetWitness {
    bool holds = false;
    std::vector<uint32_t> ells;  // residues in progression order
    uint32_t b = 0;
};

// Sufficient-condition locality test on the defining set. A false
// verdict is inconclusive; in particular (r+delta-1) not dividing n
// reports false rather than an error, since the criterion simply does
// not apply. Errors: InvalidParams for malformed r or delta.
DefiningSetWitness locality_check_defining_set(const CyclicCode& code, uint32_t r, uint32_t delta);

// Checks one explicit witness, with the ells given as signed residues.
bool defining_set_witness_holds(const CyclicCode& code, uint32_t r, uint32_t delta,
                                const std::vector<int64_t>& ells, uint64_t b);

// Definitional locality test: every coordinate needs a repair set of
// size at most r+delta-1 whose punctured code has distance >= delta.
// When (r+delta-1) | n the mod-rho groups are the candidate sets; for
// other lengths every admissible subset is tried. Errors: InvalidParams;
// InfeasibleBudget when a punctured enumeration or the subset sweep
// exceeds the budget.
bool locality_check_direct(const CyclicCode& code, uint32_t r, uint32_t delta,
                           const DistanceBudget& budget = {});

struct LrcReport {
    LrcParams params;
    ConstructionKind kind;
    CyclicCode code;
    uint32_t k;
    // Engaged unless the distance search passed its ceiling, which for a
    // code with genuine (r, delta)-locality cannot happen.
    std::optional<uint32_t> d_exact;
    uint32_t d_ceiling;
    uint32_t bch_lower;
    int64_t bound;
    DefiningSetWitness defining_set;
    bool direct_locality;
    bool optimal;
};

// Construct plus full measurement: exact distance with ceiling bound+1,
// generalized BCH lower bound, both locality verdicts, and the
// optimality verdict d == bound with locality confirmed directly.
LrcReport verify(const LrcParams& params, const ConstructionKind& kind,
                 const DistanceBudget& budget = {});

struct SearchRow {
    uint32_t n = 0;
    uint32_t r = 0;
    uint32_t delta = 0;
    KindTag kind = KindTag::T1;
    // Reachable distances; a proper range only for remark3.
    uint32_t d_min = 0;
    uint32_t d_max = 0;
    uint32_t rho = 0;
};

// Every (n, r, delta, kind) in the ranges whose admissibility conditions
// hold, sorted by n, r, delta, kind. Pure condition evaluation; nothing
// is constructed.
std::vector<SearchRow> search_params(uint64_t q, uint32_t n_max, uint32_t r_min, uint32_t r_max,
                                     uint32_t delta_min, uint32_t delta_max);

}  // namespace lrc

#endif
