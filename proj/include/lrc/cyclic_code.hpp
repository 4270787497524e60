#ifndef LRC_CYCLIC_CODE_HPP
#define LRC_CYCLIC_CODE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "lrc/matrices.hpp"
#include "lrc/polynomials.hpp"
#include "lrc/subfield.hpp"

namespace lrc {

enum class EncodeMode { Multiplicative, Systematic };

// Length-n cyclic code over GF(q) given by a monic generator dividing
// x^n - 1, with gcd(n, q) = 1. Construction resolves the splitting field
// GF(q^s), a primitive n-th root of unity xi there, and the complete
// defining set Z = {e : g(xi^e) = 0}. The parity-check matrix [xi^(e j)]
// is expanded into s rows of GF(q) coordinates per zero, so membership,
// rank and erasure work all happen over the base field.
class CyclicCode {
  public:
    static CyclicCode from_generator(const FiniteField& base, uint32_t n, const Polynomial& g);

    const FiniteField& base_field() const { return *base_; }
    const FiniteField& splitting_field() const { return *splitting_; }
    uint32_t length() const { return n_; }
    uint32_t dimension() const { return k_; }
    uint32_t splitting_degree() const { return s_; }
    const Polynomial& generator() const { return generator_; }
    const std::vector<uint32_t>& zero_exponents() const { return zeros_; }
    const FieldElement& primitive_root() const { return xi_; }
    const SubfieldMap& tower() const { return tower_; }

    // s*|Z| by n over GF(q), kernel equal to the code.
    const GFMatrix& expanded_parity_check() const { return parity_; }
    // Row echelon form of the same matrix with the zero rows dropped,
    // (n-k) by n.
    const GFMatrix& reduced_parity_check() const { return parity_reduced_; }

    // Message has k symbols (codes over GF(q)).
    // Multiplicative: coefficients of m(x) g(x). Systematic: the last k
    // positions carry the message verbatim. Errors: LengthMismatch.
    std::vector<uint32_t> encode(const std::vector<uint32_t>& message, EncodeMode mode) const;

    bool is_codeword(const std::vector<uint32_t>& word) const;

    // Rows x^i g(x), i = 0..k-1; spans the code.
    GFMatrix generator_matrix() const;

  private:
    CyclicCode(const FiniteField& base, const FiniteField& splitting, uint32_t n, uint32_t s,
               Polynomial g, SubfieldMap tower, FieldElement xi)
        : base_(&base), splitting_(&splitting), n_(n), s_(s), k_(0),
          generator_(std::move(g)), tower_(std::move(tower)), xi_(xi),
          parity_(base, 0, 0), parity_reduced_(base, 0, 0) {}

    const FiniteField* base_;
    const FiniteField* splitting_;
    uint32_t n_, s_, k_;
    Polynomial generator_;
    SubfieldMap tower_;
    FieldElement xi_;
    std::vector<uint32_t> zeros_;
    GFMatrix parity_;
    GFMatrix parity_reduced_;
};

struct DistanceBudget {
    // Column-dependence searches abort once a weight stratum would push
    // the number of examined column subsets past this cap.
    uint64_t rank_tests = 5'000'000;
    // Full codeword enumeration runs only when q^k stays within this.
    uint64_t enumeration_cap = uint64_t(1) << 20;
};

struct DistanceResult {
    // Engaged when the minimum distance is at most the ceiling.
    std::optional<uint32_t> distance;
    uint32_t ceiling = 0;
    // Values found by each oracle that ran; equal whenever both did.
    std::optional<uint32_t> enumerated;
    std::optional<uint32_t> column_searched;
};

// Exact minimum distance when it is <= ceiling, by two independent
// routes: full codeword enumeration (when q^k fits the cap) and an
// ascending-weight search for linearly dependent columns of the reduced
// parity check. Both run when both fit, and must agree. Errors:
// InvalidParams (ceiling == 0), InfeasibleBudget when neither oracle
// fits its budget or the column search hits the cap mid-way.
DistanceResult min_distance_exact(const CyclicCode& code, uint32_t ceiling,
                                  const DistanceBudget& budget = {});

// 1 + the longest run u, u+b, .., u+(L-1)b (mod n) inside the defining
// set, over every start u and every step b coprime to n. Returns 1 when
// the defining set is empty.
uint32_t bch_lower_bound(const CyclicCode& code);

// Smallest weight of a nonzero vector in the row space, by odometer
// enumeration; nullopt when q^rank exceeds the cap. A zero row space
// reports UINT32_MAX.
std::optional<uint32_t> min_weight_of_row_space(const GFMatrix& rows, uint64_t cap);

}  // namespace lrc

#endif
