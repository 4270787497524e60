#include "lrc/cyclic_code.hpp"

#include <algorithm>
#include <stdexcept>

namespace lrc {
namespace {

// C(n, w) saturating; anything above the cap behaves the same, so the
// exact value past it does not matter.
uint64_t binomial_capped(uint32_t n, uint32_t w, uint64_t cap) {
    if (w > n) return 0;
    unsigned __int128 acc = 1;
    for (uint32_t i = 1; i <= w; ++i) {
        acc = acc * (n - w + i) / i;
        if (acc > cap) return cap + 1;
    }
    return uint64_t(acc);
}

uint64_t pow_capped(uint64_t base, uint32_t e, uint64_t cap) {
    uint64_t acc = 1;
    for (uint32_t i = 0; i < e; ++i) {
        if (acc > cap / base) return cap + 1;
        acc *= base;
    }
    return acc;
}

// Depth-first walk over column subsets of fixed size w in index order,
// keeping the chosen columns as an eliminated basis. Earlier strata have
// already ruled out smaller dependent sets, so the first column that
// reduces to zero closes a dependent set of exactly the current size.
class ColumnSearch {
  public:
    ColumnSearch(const GFMatrix& h) : h_(h), f_(h.field()), m_(h.rows()) {}

    // Returns true when some w columns are dependent; counts every
    // completed subset in *tests.
    bool stratum_has_dependence(uint32_t w, uint64_t* tests) {
        w_ = w;
        tests_ = tests;
        basis_.clear();
        pivots_.clear();
        return dfs(0, w);
    }

  private:
    bool dfs(uint32_t first_col, uint32_t remaining) {
        uint32_t n = uint32_t(h_.cols());
        for (uint32_t c = first_col; c + remaining <= n; ++c) {
            std::vector<uint32_t> v(m_);
            for (size_t r = 0; r < m_; ++r) v[r] = h_.at(r, c);
            // Reduce against the basis accumulated along this branch.
            for (size_t i = 0; i < basis_.size(); ++i) {
                uint32_t coeff = v[pivots_[i]];
                if (coeff == 0) continue;
                const std::vector<uint32_t>& b = basis_[i];
                for (size_t r = 0; r < m_; ++r)
                    if (b[r]) v[r] = f_.sub(v[r], f_.mul(coeff, b[r]));
            }
            size_t pivot = 0;
            while (pivot < m_ && v[pivot] == 0) ++pivot;
            if (pivot == m_) {
                // Dependent; with all smaller strata exhausted this can
                // only happen on the final column of a subset.
                *tests_ += 1;
                return true;
            }
            if (remaining == 1) {
                *tests_ += 1;
                continue;
            }
            uint32_t scale = f_.inv(v[pivot]);
            if (scale != 1)
                for (size_t r = pivot; r < m_; ++r) v[r] = f_.mul(v[r], scale);
            basis_.push_back(std::move(v));
            pivots_.push_back(pivot);
            bool found = dfs(c + 1, remaining - 1);
            basis_.pop_back();
            pivots_.pop_back();
            if (found) return true;
        }
        return false;
    }

    const GFMatrix& h_;
    const FiniteField& f_;
    size_t m_;
    uint32_t w_ = 0;
    uint64_t* tests_ = nullptr;
    std::vector<std::vector<uint32_t>> basis_;
    std::vector<size_t> pivots_;
};

}  // namespace

CyclicCode CyclicCode::from_generator(const FiniteField& base, uint32_t n, const Polynomial& g) {
    if (&g.field() != &base) raise(ErrorKind::FieldMismatch, "generator is over a different field");
    if (n == 0) raise(ErrorKind::InvalidParams, "length must be positive");
    if (!g.is_monic()) raise(ErrorKind::NonMonicGenerator, "generator must be monic");
    uint64_t q = base.size();
    if (gcd_u64(n, q) != 1)
        raise(ErrorKind::NotCoprime, "length " + std::to_string(n) + " shares a factor with q");
    if (!divides_xn_minus_1(g, n))
        raise(ErrorKind::NotADivisor, "generator does not divide x^" + std::to_string(n) + " - 1");

    uint32_t s = multiplicative_order(q, n);
    auto split = prime_power_split(q);
    const FiniteField& ext = build_field(split->first, split->second * s);
    SubfieldMap tower(base, ext);
    FieldElement xi = primitive_nth_root(ext, n);

    CyclicCode code(base, ext, n, s, g, std::move(tower), xi);
    code.k_ = n - uint32_t(g.degree());

    Polynomial lifted = embed_coefficients(g, code.tower_);
    FieldElement point = FieldElement::one(ext);
    for (uint32_t e = 0; e < n; ++e) {
        if (lifted.eval(point).is_zero()) code.zeros_.push_back(e);
        point = point * xi;
    }
    if (code.zeros_.size() != size_t(g.degree()))
        throw std::logic_error("zero count does not match generator degree");
    for (uint32_t e : code.zeros_) {
        uint32_t img = uint32_t(uint64_t(e) * (q % n) % n);
        if (!std::binary_search(code.zeros_.begin(), code.zeros_.end(), img))
            throw std::logic_error("defining set is not closed under multiplication by q");
    }

    // Expand each splitting-field parity row into s rows of base-field
    // coordinates.
    GFMatrix parity(base, size_t(s) * code.zeros_.size(), n);
    for (size_t zi = 0; zi < code.zeros_.size(); ++zi) {
        FieldElement step = xi.pow(code.zeros_[zi]);
        FieldElement cell = FieldElement::one(ext);
        for (uint32_t j = 0; j < n; ++j) {
            std::vector<FieldElement> coords = code.tower_.expand(cell);
            for (uint32_t c = 0; c < s; ++c) parity.at(zi * s + c, j) = coords[c].code();
            cell = cell * step;
        }
    }
    code.parity_ = parity;
    std::vector<size_t> pivots;
    size_t rank = rref_in_place(parity, &pivots);
    if (rank != size_t(n - code.k_))
        throw std::logic_error("parity check rank does not match the generator degree");
    GFMatrix reduced(base, rank, n);
    for (size_t r = 0; r < rank; ++r)
        for (uint32_t c = 0; c < n; ++c) reduced.at(r, c) = parity.at(r, c);
    code.parity_reduced_ = reduced;
    return code;
}

std::vector<uint32_t> CyclicCode::encode(const std::vector<uint32_t>& message, EncodeMode mode) const {
    if (message.size() != k_)
        raise(ErrorKind::LengthMismatch,
              "message has " + std::to_string(message.size()) + " symbols, expected " + std::to_string(k_));
    Polynomial m = Polynomial::from_codes(*base_, message);
    std::vector<uint32_t> word(n_, 0);
    if (mode == EncodeMode::Multiplicative) {
        Polynomial c = m * generator_;
        for (size_t i = 0; i < c.codes().size(); ++i) word[i] = c.codes()[i];
        return word;
    }
    // Systematic: shift the message to the top positions and cancel the
    // remainder so the result is a multiple of g.
    uint32_t shift = n_ - k_;
    Polynomial top = Polynomial::monomial(*base_, shift, FieldElement::one(*base_)) * m;
    Polynomial rem = top.divmod(generator_).second;
    Polynomial c = top - rem;
    for (size_t i = 0; i < c.codes().size(); ++i) word[i] = c.codes()[i];
    return word;
}

bool CyclicCode::is_codeword(const std::vector<uint32_t>& word) const {
    if (word.size() != n_) return false;
    Polynomial w = Polynomial::from_codes(*base_, word);
    return w.divmod(generator_).second.is_zero();
}

GFMatrix CyclicCode::generator_matrix() const {
    GFMatrix gm(*base_, k_, n_);
    const std::vector<uint32_t>& g = generator_.codes();
    for (uint32_t i = 0; i < k_; ++i)
        for (size_t j = 0; j < g.size(); ++j) gm.at(i, i + j) = g[j];
    return gm;
}

std::optional<uint32_t> min_weight_of_row_space(const GFMatrix& rows, uint64_t cap) {
    const FiniteField& f = rows.field();
    GFMatrix r = rows;
    size_t rk = rref_in_place(r);
    if (rk == 0) return UINT32_MAX;
    uint64_t q = f.size();
    if (pow_capped(q, uint32_t(rk), cap) > cap) return std::nullopt;

    size_t n = rows.cols();
    std::vector<uint32_t> word(n, 0);
    std::vector<uint32_t> digits(rk, 0);
    uint32_t best = UINT32_MAX;
    while (true) {
        // Odometer step; adding row i once per increment is exact because
        // q copies of a row cancel.
        size_t i = 0;
        while (i < rk) {
            for (size_t c = 0; c < n; ++c) word[c] = f.add(word[c], r.at(i, c));
            if (++digits[i] < q) break;
            digits[i] = 0;
            ++i;
        }
        if (i == rk) break;  // wrapped all the way around: back at zero
        uint32_t weight = 0;
        for (size_t c = 0; c < n; ++c) weight += word[c] != 0;
        if (weight && weight < best) best = weight;
    }
    return best;
}

DistanceResult min_distance_exact(const CyclicCode& code, uint32_t ceiling,
                                  const DistanceBudget& budget) {
    if (ceiling == 0) raise(ErrorKind::InvalidParams, "ceiling must be at least 1");
    uint32_t n = code.length();
    ceiling = std::min(ceiling, n);
    DistanceResult result;
    result.ceiling = ceiling;

    uint64_t words = pow_capped(code.base_field().size(), code.dimension(), budget.enumeration_cap);
    bool enum_ok = words <= budget.enumeration_cap;
    if (enum_ok) {
        std::optional<uint32_t> w = min_weight_of_row_space(code.generator_matrix(), budget.enumeration_cap);
        if (w && *w != UINT32_MAX) result.enumerated = *w;
        // A zero code has no nonzero word; leave the oracle value empty.
    }

    // The column search never needs strata past what enumeration already
    // established, and stops at the first dependent subset regardless.
    bool column_ok = true;
    {
        uint64_t tests = 0;
        ColumnSearch search(code.reduced_parity_check());
        std::optional<uint32_t> found;
        for (uint32_t w = 1; w <= ceiling; ++w) {
            uint64_t stratum = binomial_capped(n, w, budget.rank_tests);
            if (tests + stratum > budget.rank_tests) {
                if (enum_ok) {
                    column_ok = false;  // enumeration already decides; skip the cross-check
                    break;
                }
                raise(ErrorKind::InfeasibleBudget,
                      "weight-" + std::to_string(w) + " stratum needs more than " +
                          std::to_string(budget.rank_tests) + " rank tests");
            }
            if (search.stratum_has_dependence(w, &tests)) {
                found = w;
                break;
            }
        }
        if (column_ok) result.column_searched = found;
    }

    if (enum_ok && column_ok) {
        // Two independent oracles; any disagreement is a hard bug.
        std::optional<uint32_t> e = result.enumerated;
        std::optional<uint32_t> c = result.column_searched;
        bool agree = (e && *e <= ceiling) ? (c && *c == *e) : !c;
        if (!agree) throw std::logic_error("distance oracles disagree");
    }

    if (result.enumerated) {
        if (*result.enumerated <= ceiling) result.distance = *result.enumerated;
    } else if (column_ok) {
        result.distance = result.column_searched;
    }
    return result;
}

uint32_t bch_lower_bound(const CyclicCode& code) {
    uint32_t n = code.length();
    const std::vector<uint32_t>& zeros = code.zero_exponents();
    if (zeros.empty()) return 1;
    std::vector<char> in_z(n, 0);
    for (uint32_t e : zeros) in_z[e] = 1;

    uint32_t longest = 1;  // any single zero is a run of length 1
    for (uint32_t b = 1; b < n; ++b) {
        if (gcd_u64(b, n) != 1) continue;
        for (uint32_t u = 0; u < n; ++u) {
            if (!in_z[u]) continue;
            uint32_t len = 1;
            uint32_t pos = (u + b) % n;
            // A run of n distinct residues is the most a progression can
            // visit, so cap there.
            while (len < n && in_z[pos]) {
                ++len;
                pos = (pos + b) % n;
            }
            longest = std::max(longest, len);
        }
    }
    return longest + 1;
}

}  // namespace lrc
