#include "lrc/constructions.hpp"

#include <algorithm>
#include <stdexcept>

#include "lrc/repair.hpp"

namespace lrc {

namespace {

std::string joined(const std::vector<std::string>& parts) {
    std::string out;
    for (const std::string& part : parts) {
        if (!out.empty()) out += "; ";
        out += part;
    }
    return out;
}

bool structurally_sound(const LrcParams& params) {
    return params.q >= 2 && params.n >= 1 && params.r >= 1 && params.delta >= 2;
}

// Residues mod r+delta-1 whose whole exponent class lies in the defining
// set.
std::vector<char> full_residues(const CyclicCode& code, uint32_t m) {
    std::vector<char> in_z(code.length(), 0);
    for (uint32_t e : code.zero_exponents()) in_z[e] = 1;
    std::vector<char> full(m, 1);
    for (uint32_t e = 0; e < code.length(); ++e)
        if (!in_z[e]) full[e % m] = 0;
    return full;
}

// Minimum weight of the code punctured to the given coordinates, or
// nullopt past the enumeration cap. A zero punctured space reports
// UINT32_MAX, which satisfies any distance demand.
std::optional<uint32_t> punctured_distance(const GFMatrix& generator,
                                           const std::vector<uint32_t>& coords, uint64_t cap) {
    return min_weight_of_row_space(generator.columns(coords), cap);
}

}  // namespace

const char* kind_name(KindTag tag) {
    switch (tag) {
        case KindTag::T1: return "t1";
        case KindTag::T2: return "t2";
        case KindTag::T3: return "t3";
        case KindTag::Remark3: return "remark3";
        case KindTag::T4: return "t4";
    }
    return "?";
}

std::optional<KindTag> kind_from_name(const std::string& name) {
    for (KindTag tag : {KindTag::T1, KindTag::T2, KindTag::T3, KindTag::Remark3, KindTag::T4})
        if (name == kind_name(tag)) return tag;
    return std::nullopt;
}

uint32_t target_distance(const LrcParams& params, const ConstructionKind& kind) {
    switch (kind.tag) {
        case KindTag::T1: return params.delta + 1;
        case KindTag::T2: return params.delta + 2;
        case KindTag::T3: return 2 * params.delta;
        case KindTag::Remark3: return kind.target_d;
        case KindTag::T4: return 6;
    }
    return 0;
}

std::vector<std::string> check_preconditions(const LrcParams& params,
                                             const ConstructionKind& kind) {
    std::vector<std::string> bad;
    if (!prime_power_split(params.q)) bad.push_back("q must be a prime power");
    if (params.n < 1) bad.push_back("n must be >= 1");
    if (params.r < 1) bad.push_back("r must be >= 1");
    if (params.delta < 2) bad.push_back("delta must be >= 2");
    if (!structurally_sound(params) || !bad.empty()) return bad;

    uint32_t m = params.group_size();
    bool divides_n = m <= params.n && params.n % m == 0;
    if (!divides_n) bad.push_back("(r+delta-1) must divide n");
    if (gcd_u64(params.n, params.q) != 1) bad.push_back("gcd(n,q) != 1");

    // The fixed-distance kinds all need alpha of order r+delta-1 in
    // GF(q); t4 instead pins that order inside GF(q^2).
    bool order_in_q = (params.q - 1) % m == 0;
    uint64_t coprime_part = divides_n ? gcd_u64(params.rho(), m) : 0;

    switch (kind.tag) {
        case KindTag::T1:
            if (params.r < 2) bad.push_back("r must be >= 2");
            if (!order_in_q) bad.push_back("(r+delta-1) must divide q-1");
            break;
        case KindTag::T2:
            if (params.r < 3) bad.push_back("r must be >= 3");
            if (!order_in_q) bad.push_back("(r+delta-1) must divide q-1");
            if (divides_n && params.delta % coprime_part != 0)
                bad.push_back("gcd(rho, r+delta-1) must divide delta");
            break;
        case KindTag::T3:
            if (params.r < params.delta + 1) bad.push_back("r must be >= delta+1");
            if (!order_in_q) bad.push_back("(r+delta-1) must divide q-1");
            if (divides_n && coprime_part != 1)
                bad.push_back("gcd(rho, r+delta-1) must be 1");
            break;
        case KindTag::Remark3:
            if (kind.target_d < params.delta + 1 || kind.target_d > 2 * params.delta)
                bad.push_back("d must lie in [delta+1, 2*delta]");
            else if (params.r + params.delta < kind.target_d + 1)
                bad.push_back("r must be >= d-delta+1");
            if (!order_in_q) bad.push_back("(r+delta-1) must divide q-1");
            if (divides_n && coprime_part != 1)
                bad.push_back("gcd(rho, r+delta-1) must be 1");
            break;
        case KindTag::T4:
            if (params.delta != 3) bad.push_back("delta must be 3");
            if (params.r < 4) bad.push_back("r must be >= 4");
            if (params.n % 2 == 0) bad.push_back("n must be odd");
            if ((params.q + 1) % m != 0) bad.push_back("(r+delta-1) must divide q+1");
            if (divides_n && coprime_part != 1)
                bad.push_back("gcd(rho, r+delta-1) must be 1");
            break;
    }
    return bad;
}

ConstructionContext make_context(const LrcParams& params, const ConstructionKind& kind) {
    std::vector<std::string> bad = check_preconditions(params, kind);
    if (!bad.empty()) raise(ErrorKind::PreconditionFailed, joined(bad));

    auto split = prime_power_split(params.q);
    const FiniteField& base = build_field(split->first, split->second);
    uint32_t s = multiplicative_order(params.q, params.n);
    const FiniteField& ext = build_field(split->first, split->second * s);
    SubfieldMap tower(base, ext);
    FieldElement xi = primitive_nth_root(ext, params.n);

    uint32_t m = params.group_size();
    uint32_t rho = params.rho();
    FieldElement alpha = xi.pow(rho);

    uint32_t bezout_target = 0;
    switch (kind.tag) {
        case KindTag::T1: break;
        case KindTag::T2: bezout_target = params.delta; break;
        case KindTag::T3:
        case KindTag::Remark3:
        case KindTag::T4: bezout_target = 1; break;
    }

    int64_t a = 0, b = 0;
    std::optional<FieldElement> gamma;
    if (bezout_target) {
        std::optional<uint32_t> found;
        for (uint32_t cand = 0; cand < m; ++cand)
            if ((uint64_t(cand) * rho) % m == bezout_target % m) {
                found = cand;
                break;
            }
        if (!found) throw std::logic_error("admissible parameters left no Bezout coefficient");
        a = *found;
        b = (int64_t(bezout_target) - a * int64_t(rho)) / int64_t(m);
        gamma = alpha.pow(uint64_t(a));
    }

    return ConstructionContext{params,  kind, s,     bezout_target, a,
                               b,       std::move(tower), xi, alpha, gamma};
}

Polynomial generator_over_extension(const ConstructionContext& ctx) {
    const FiniteField& ext = ctx.tower.ext();
    uint32_t rho = ctx.params.rho();
    uint32_t delta = ctx.params.delta;

    Polynomial g = sparse_binomial(1, FieldElement::one(ext));
    if (ctx.kind.tag == KindTag::T4) {
        g = g * sparse_binomial(rho, ctx.alpha);
        g = g * sparse_binomial(rho, ctx.alpha.pow_signed(-1));
        g = g * sparse_binomial(1, ctx.gamma->pow(2));
        g = g * sparse_binomial(1, ctx.gamma->pow_signed(-2));
        return g;
    }

    for (uint32_t i = 1; i < delta; ++i) g = g * sparse_binomial(rho, ctx.alpha.pow(i));
    switch (ctx.kind.tag) {
        case KindTag::T1:
            break;
        case KindTag::T2:
            g = g * sparse_binomial(1, *ctx.gamma);
            break;
        case KindTag::T3:
            for (uint32_t j = delta; j <= 2 * delta - 2; ++j)
                g = g * sparse_binomial(1, ctx.gamma->pow(j));
            break;
        case KindTag::Remark3:
            for (uint32_t j = delta; j + 2 <= ctx.kind.target_d; ++j)
                g = g * sparse_binomial(1, ctx.gamma->pow(j));
            break;
        case KindTag::T4:
            break;
    }
    return g;
}

CyclicCode construct(const LrcParams& params, const ConstructionKind& kind) {
    ConstructionContext ctx = make_context(params, kind);
    Polynomial over_ext = generator_over_extension(ctx);

    // Every factor's roots are n-th roots of unity, so distinctness is
    // exactly "as many distinct roots among the xi powers as the degree".
    uint32_t roots = 0;
    FieldElement point = FieldElement::one(ctx.tower.ext());
    for (uint32_t e = 0; e < params.n; ++e) {
        if (over_ext.eval(point).is_zero()) ++roots;
        point = point * ctx.xi;
    }
    if (roots != uint32_t(over_ext.degree()))
        raise(ErrorKind::RootCollision,
              "generator factors share roots; the admissibility conditions should prevent this");

    Polynomial g = descend_coefficients(over_ext, ctx.tower);
    const FiniteField& base = ctx.tower.base();
    CyclicCode code = CyclicCode::from_generator(base, params.n, g);

    uint32_t r = params.r, rho = params.rho();
    uint32_t drop = 0;
    switch (kind.tag) {
        case KindTag::T1: drop = 1; break;
        case KindTag::T2: drop = 2; break;
        case KindTag::T3: drop = params.delta; break;
        case KindTag::Remark3: drop = kind.target_d - params.delta; break;
        case KindTag::T4: drop = 3; break;
    }
    if (code.dimension() != r * rho - drop)
        throw std::logic_error("constructed dimension differs from the closed form");
    return code;
}

int64_t singleton_bound(uint32_t n, uint32_t k, uint32_t r, uint32_t delta) {
    if (n < 1 || k < 1 || k > n || r < 1 || delta < 2)
        raise(ErrorKind::InvalidParams, "bound needs 1 <= k <= n, r >= 1, delta >= 2");
    uint32_t ceil_kr = (k + r - 1) / r;
    return int64_t(n) - k + 1 - int64_t(ceil_kr - 1) * (delta - 1);
}

DefiningSetWitness locality_check_defining_set(const CyclicCode& code, uint32_t r, uint32_t delta) {
    if (r < 1 || delta < 2)
        raise(ErrorKind::InvalidParams, "locality needs r >= 1 and delta >= 2");
    uint32_t n = code.length();
    uint32_t m = r + delta - 1;
    if (m > n || n % m != 0) return {};

    std::vector<char> full = full_residues(code, m);
    uint32_t needed = delta - 1;
    if (uint32_t(std::count(full.begin(), full.end(), char(1))) < needed) return {};

    for (uint32_t b = 1; b < n; ++b) {
        if (gcd_u64(b, n) != 1) continue;
        // Start the progression at 1 first; a class of multiples of
        // r+delta-1 can be part of a witness but never carries one alone,
        // so 0 goes last.
        for (uint32_t start = 1; start <= m; ++start) {
            uint32_t ell = start % m;
            std::vector<uint32_t> ells;
            std::vector<char> seen(m, 0);
            bool ok = true;
            for (uint32_t i = 0; ok && i < needed; ++i) {
                uint32_t residue = (ell + i * uint64_t(b)) % m;
                if (seen[residue] || !full[residue]) ok = false;
                seen[residue] = 1;
                ells.push_back(residue);
            }
            if (ok) return {true, std::move(ells), b};
        }
    }
    return {};
}

bool defining_set_witness_holds(const CyclicCode& code, uint32_t r, uint32_t delta,
                                const std::vector<int64_t>& ells, uint64_t b) {
    if (r < 1 || delta < 2)
        raise(ErrorKind::InvalidParams, "locality needs r >= 1 and delta >= 2");
    uint32_t n = code.length();
    uint32_t m = r + delta - 1;
    if (m > n || n % m != 0) return false;
    if (ells.size() != size_t(delta) - 1) return false;
    if (gcd_u64(b, n) != 1) return false;

    std::vector<char> full = full_residues(code, m);
    std::vector<char> seen(m, 0);
    uint32_t previous = 0;
    for (size_t i = 0; i < ells.size(); ++i) {
        uint32_t residue = uint32_t(((ells[i] % int64_t(m)) + m) % m);
        if (seen[residue] || !full[residue]) return false;
        if (i > 0 && (previous + b) % m != residue) return false;
        seen[residue] = 1;
        previous = residue;
    }
    return true;
}

bool locality_check_direct(const CyclicCode& code, uint32_t r, uint32_t delta,
                           const DistanceBudget& budget) {
    if (r < 1 || delta < 2)
        raise(ErrorKind::InvalidParams, "locality needs r >= 1 and delta >= 2");
    uint32_t n = code.length();
    uint32_t m = r + delta - 1;
    GFMatrix generator = code.generator_matrix();

    if (m <= n && n % m == 0) {
        GroupLayout layout = repair_groups(n, r, delta);
        for (const RepairGroup& group : layout.groups) {
            std::optional<uint32_t> dist =
                punctured_distance(generator, group.positions, budget.enumeration_cap);
            if (!dist)
                raise(ErrorKind::InfeasibleBudget,
                      "punctured code in group " + std::to_string(group.offset) +
                          " is too large to enumerate");
            if (*dist < delta) return false;
        }
        return true;
    }

    // No group partition at this length: fall back to the definition and
    // look for any small enough repair set per coordinate.
    uint64_t examined = 0;
    for (uint32_t coord = 0; coord < n; ++coord) {
        std::vector<uint32_t> others;
        for (uint32_t j = 0; j < n; ++j)
            if (j != coord) others.push_back(j);

        bool covered = false;
        for (uint32_t size = 1; !covered && size <= std::min(m, n); ++size) {
            uint32_t picks = size - 1;
            std::vector<uint32_t> index(picks);
            for (uint32_t i = 0; i < picks; ++i) index[i] = i;
            while (true) {
                if (++examined > budget.rank_tests)
                    raise(ErrorKind::InfeasibleBudget,
                          "repair-set sweep exceeded " + std::to_string(budget.rank_tests) +
                              " candidate sets");
                std::vector<uint32_t> coords{coord};
                for (uint32_t i : index) coords.push_back(others[i]);
                std::sort(coords.begin(), coords.end());
                std::optional<uint32_t> dist =
                    punctured_distance(generator, coords, budget.enumeration_cap);
                if (!dist)
                    raise(ErrorKind::InfeasibleBudget, "punctured code too large to enumerate");
                if (*dist >= delta) {
                    covered = true;
                    break;
                }
                // Next combination in lexicographic order.
                uint32_t slot = picks;
                while (slot > 0 && index[slot - 1] == others.size() - picks + slot - 1) --slot;
                if (slot == 0) break;
                ++index[slot - 1];
                for (uint32_t i = slot; i < picks; ++i) index[i] = index[i - 1] + 1;
            }
        }
        if (!covered) return false;
    }
    return true;
}

LrcReport verify(const LrcParams& params, const ConstructionKind& kind,
                 const DistanceBudget& budget) {
    CyclicCode code = construct(params, kind);
    uint32_t k = code.dimension();
    int64_t bound = singleton_bound(params.n, k, params.r, params.delta);
    uint32_t ceiling = uint32_t(std::max<int64_t>(bound, 0)) + 1;

    DistanceResult distance = min_distance_exact(code, ceiling, budget);
    uint32_t bch = bch_lower_bound(code);
    DefiningSetWitness defining = locality_check_defining_set(code, params.r, params.delta);
    bool direct = locality_check_direct(code, params.r, params.delta, budget);
    bool optimal = distance.distance && int64_t(*distance.distance) == bound && direct;

    return LrcReport{params,   kind,     std::move(code), k,      distance.distance,
                     distance.ceiling, bch, bound, defining, direct, optimal};
}

std::vector<SearchRow> search_params(uint64_t q, uint32_t n_max, uint32_t r_min, uint32_t r_max,
                                     uint32_t delta_min, uint32_t delta_max) {
    std::vector<SearchRow> rows;
    for (uint32_t n = 1; n <= n_max; ++n)
        for (uint32_t r = std::max(r_min, 1u); r <= std::min(r_max, n); ++r)
            for (uint32_t delta = std::max(delta_min, 2u); delta <= delta_max; ++delta) {
                if (uint64_t(r) + delta - 1 > n) continue;
                LrcParams params{q, n, r, delta};
                for (KindTag tag : {KindTag::T1, KindTag::T2, KindTag::T3, KindTag::Remark3,
                                    KindTag::T4}) {
                    ConstructionKind kind{tag, tag == KindTag::Remark3 ? delta + 1 : 0};
                    if (!check_preconditions(params, kind).empty()) continue;
                    uint32_t d = target_distance(params, kind);
                    SearchRow row{n, r, delta, tag, d, d, params.rho()};
                    if (tag == KindTag::Remark3)
                        row.d_max = std::min(2 * delta, params.group_size());
                    rows.push_back(row);
                }
            }
    return rows;
}

}  // namespace lrc
