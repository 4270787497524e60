#include "lrc/descriptor.hpp"

#include <algorithm>
#include <stdexcept>

#include "json.hpp"

#include "lrc/repair.hpp"

namespace lrc {

namespace {

using ordered_json = nlohmann::ordered_json;

std::vector<std::vector<uint32_t>> generator_digits(const CyclicCode& code) {
    const FiniteField& base = code.base_field();
    std::vector<std::vector<uint32_t>> out;
    out.reserve(code.generator().codes().size());
    for (uint32_t c : code.generator().codes()) out.push_back(base.decode(c));
    return out;
}

ordered_json generator_to_json(const CodeDescriptor& d) {
    ordered_json out = ordered_json::array();
    auto split = prime_power_split(d.q);
    bool prime = split && split->second == 1;
    for (const std::vector<uint32_t>& digits : d.generator) {
        if (prime)
            out.push_back(digits.empty() ? 0 : digits[0]);
        else
            out.push_back(digits);
    }
    return out;
}

uint64_t require_uint(const ordered_json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_unsigned())
        raise(ErrorKind::InvalidParams, std::string("descriptor field '") + key +
                                            "' is missing or not a non-negative integer");
    return j[key].get<uint64_t>();
}

bool require_bool(const ordered_json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_boolean())
        raise(ErrorKind::InvalidParams,
              std::string("descriptor field '") + key + "' is missing or not a boolean");
    return j[key].get<bool>();
}

}  // namespace

CodeDescriptor describe(const LrcReport& report) {
    if (!report.d_exact)
        raise(ErrorKind::InfeasibleBudget,
              "distance search passed its ceiling; nothing exact to record");
    CodeDescriptor d;
    d.q = report.params.q;
    d.n = report.params.n;
    d.r = report.params.r;
    d.delta = report.params.delta;
    d.construction = report.kind.tag;
    if (report.kind.tag == KindTag::Remark3) d.target_d = report.kind.target_d;
    d.generator = generator_digits(report.code);
    d.k = report.k;
    d.d_exact = *report.d_exact;
    d.d_bch_lower = report.bch_lower;
    d.singleton = report.bound;
    d.optimal = report.optimal;
    d.defining_set = report.defining_set;
    d.direct_locality = report.direct_locality;
    GroupLayout layout = repair_groups(d.n, d.r, d.delta);
    for (const RepairGroup& group : layout.groups) d.groups.push_back(group.positions);
    return d;
}

std::string to_json_text(const CodeDescriptor& d) {
    ordered_json j;
    j["q"] = d.q;
    j["n"] = d.n;
    j["r"] = d.r;
    j["delta"] = d.delta;
    j["construction"] = kind_name(d.construction);
    if (d.target_d) j["target_d"] = *d.target_d;
    j["generator"] = generator_to_json(d);
    j["k"] = d.k;
    j["d_exact"] = d.d_exact;
    j["d_bch_lower"] = d.d_bch_lower;
    j["singleton_bound"] = d.singleton;
    j["optimal"] = d.optimal;
    j["locality"] = {{"defining_set",
                      {{"holds", d.defining_set.holds},
                       {"ells", d.defining_set.ells},
                       {"b", d.defining_set.b}}},
                     {"direct", d.direct_locality}};
    j["repair_groups"] = d.groups;
    return j.dump(2) + "\n";
}

CodeDescriptor descriptor_from_json_text(const std::string& text) {
    ordered_json j = ordered_json::parse(text, nullptr, false);
    if (j.is_discarded()) raise(ErrorKind::InvalidParams, "descriptor is not valid JSON");
    if (!j.is_object()) raise(ErrorKind::InvalidParams, "descriptor must be a JSON object");

    CodeDescriptor d;
    d.q = require_uint(j, "q");
    d.n = uint32_t(require_uint(j, "n"));
    d.r = uint32_t(require_uint(j, "r"));
    d.delta = uint32_t(require_uint(j, "delta"));
    if (d.q < 2 || d.n < 1 || d.r < 1 || d.delta < 2)
        raise(ErrorKind::InvalidParams, "descriptor needs q >= 2, n >= 1, r >= 1, delta >= 2");

    if (!j.contains("construction") || !j["construction"].is_string())
        raise(ErrorKind::InvalidParams, "descriptor field 'construction' is missing or not a string");
    std::optional<KindTag> tag = kind_from_name(j["construction"].get<std::string>());
    if (!tag)
        raise(ErrorKind::InvalidParams,
              "unknown construction '" + j["construction"].get<std::string>() + "'");
    d.construction = *tag;
    if (j.contains("target_d")) d.target_d = uint32_t(require_uint(j, "target_d"));

    if (!j.contains("generator") || !j["generator"].is_array())
        raise(ErrorKind::InvalidParams, "descriptor field 'generator' is missing or not an array");
    for (const ordered_json& coeff : j["generator"]) {
        if (coeff.is_number_unsigned()) {
            d.generator.push_back({coeff.get<uint32_t>()});
        } else if (coeff.is_array()) {
            std::vector<uint32_t> digits;
            for (const ordered_json& digit : coeff) {
                if (!digit.is_number_unsigned())
                    raise(ErrorKind::InvalidParams, "generator digits must be non-negative integers");
                digits.push_back(digit.get<uint32_t>());
            }
            d.generator.push_back(std::move(digits));
        } else {
            raise(ErrorKind::InvalidParams, "generator coefficients must be integers or digit arrays");
        }
    }

    d.k = uint32_t(require_uint(j, "k"));
    d.d_exact = uint32_t(require_uint(j, "d_exact"));
    d.d_bch_lower = uint32_t(require_uint(j, "d_bch_lower"));
    if (!j.contains("singleton_bound") || !j["singleton_bound"].is_number_integer())
        raise(ErrorKind::InvalidParams, "descriptor field 'singleton_bound' is missing or not an integer");
    d.singleton = j["singleton_bound"].get<int64_t>();
    d.optimal = require_bool(j, "optimal");

    if (!j.contains("locality") || !j["locality"].is_object() ||
        !j["locality"].contains("defining_set") || !j["locality"]["defining_set"].is_object())
        raise(ErrorKind::InvalidParams, "descriptor field 'locality' is missing or malformed");
    const ordered_json& witness = j["locality"]["defining_set"];
    d.defining_set.holds = require_bool(witness, "holds");
    if (!witness.contains("ells") || !witness["ells"].is_array())
        raise(ErrorKind::InvalidParams, "witness field 'ells' is missing or not an array");
    for (const ordered_json& ell : witness["ells"]) {
        if (!ell.is_number_unsigned())
            raise(ErrorKind::InvalidParams, "witness residues must be non-negative integers");
        d.defining_set.ells.push_back(ell.get<uint32_t>());
    }
    d.defining_set.b = uint32_t(require_uint(witness, "b"));
    d.direct_locality = require_bool(j["locality"], "direct");

    if (!j.contains("repair_groups") || !j["repair_groups"].is_array())
        raise(ErrorKind::InvalidParams, "descriptor field 'repair_groups' is missing or not an array");
    for (const ordered_json& group : j["repair_groups"]) {
        if (!group.is_array())
            raise(ErrorKind::InvalidParams, "each repair group must be an array of positions");
        std::vector<uint32_t> positions;
        for (const ordered_json& pos : group) {
            if (!pos.is_number_unsigned())
                raise(ErrorKind::InvalidParams, "repair group positions must be non-negative integers");
            positions.push_back(pos.get<uint32_t>());
        }
        d.groups.push_back(std::move(positions));
    }
    return d;
}

CyclicCode code_from_descriptor(const CodeDescriptor& d) {
    auto split = prime_power_split(d.q);
    if (!split) raise(ErrorKind::InvalidParams, "q must be a prime power");
    const FiniteField& base = build_field(split->first, split->second);
    std::vector<uint32_t> codes;
    codes.reserve(d.generator.size());
    for (const std::vector<uint32_t>& digits : d.generator) codes.push_back(base.encode(digits));
    return CyclicCode::from_generator(base, d.n, Polynomial::from_codes(base, codes));
}

std::vector<std::string> audit_descriptor(const CodeDescriptor& d, const DistanceBudget& budget) {
    std::vector<std::string> mismatches;
    CyclicCode code = code_from_descriptor(d);

    LrcParams params{d.q, d.n, d.r, d.delta};
    ConstructionKind kind{d.construction, d.target_d.value_or(0)};
    if ((d.construction == KindTag::Remark3) != bool(d.target_d))
        mismatches.push_back("target_d");

    if (!check_preconditions(params, kind).empty()) {
        mismatches.push_back("construction");
    } else if (construct(params, kind).generator() != code.generator()) {
        mismatches.push_back("generator");
    }

    if (code.dimension() != d.k) mismatches.push_back("k");

    int64_t bound = singleton_bound(d.n, code.dimension(), d.r, d.delta);
    if (bound != d.singleton) mismatches.push_back("singleton_bound");

    uint32_t ceiling = uint32_t(std::max<int64_t>({bound, int64_t(d.d_exact), 0})) + 1;
    DistanceResult distance = min_distance_exact(code, ceiling, budget);
    if (!distance.distance || *distance.distance != d.d_exact) mismatches.push_back("d_exact");

    if (bch_lower_bound(code) != d.d_bch_lower) mismatches.push_back("d_bch_lower");

    DefiningSetWitness witness = locality_check_defining_set(code, d.r, d.delta);
    if (witness.holds != d.defining_set.holds || witness.ells != d.defining_set.ells ||
        witness.b != d.defining_set.b)
        mismatches.push_back("locality.defining_set");

    bool direct = locality_check_direct(code, d.r, d.delta, budget);
    if (direct != d.direct_locality) mismatches.push_back("locality.direct");

    bool optimal = distance.distance && int64_t(*distance.distance) == bound && direct;
    if (optimal != d.optimal) mismatches.push_back("optimal");

    uint32_t m = d.r + d.delta - 1;
    if (m <= d.n && d.n % m == 0) {
        GroupLayout layout = repair_groups(d.n, d.r, d.delta);
        std::vector<std::vector<uint32_t>> groups;
        for (const RepairGroup& group : layout.groups) groups.push_back(group.positions);
        if (groups != d.groups) mismatches.push_back("repair_groups");
    } else {
        // No group structure exists for these parameters, so whatever the
        // descriptor recorded cannot be checked, only rejected.
        mismatches.push_back("repair_groups");
    }

    return mismatches;
}

}  // namespace lrc
