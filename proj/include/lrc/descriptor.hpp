#ifndef LRC_DESCRIPTOR_HPP
#define LRC_DESCRIPTOR_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lrc/constructions.hpp"

namespace lrc {

// Flat record of one constructed code and everything measured about it,
// the unit of exchange between commands. Serializes to JSON and back
// without loss; every derived field can be recomputed from q, n and the
// generator, which is what audit_descriptor does.
struct CodeDescriptor {
    uint64_t q = 0;
    uint32_t n = 0;
    uint32_t r = 0;
    uint32_t delta = 0;
    KindTag construction = KindTag::T1;
    // Present exactly for remark3.
    std::optional<uint32_t> target_d;
    // One digit vector per coefficient, low degree first; prime-field
    // coefficients serialize as bare integers instead.
    std::vector<std::vector<uint32_t>> generator;
    uint32_t k = 0;
    uint32_t d_exact = 0;
    uint32_t d_bch_lower = 0;
    int64_t singleton = 0;
    bool optimal = false;
    DefiningSetWitness defining_set;
    bool direct_locality = false;
    std::vector<std::vector<uint32_t>> groups;
};

// Errors: InfeasibleBudget when the report carries no exact distance.
CodeDescriptor describe(const LrcReport& report);

std::string to_json_text(const CodeDescriptor& descriptor);

// Errors: InvalidParams on malformed JSON or a field of the wrong shape.
CodeDescriptor descriptor_from_json_text(const std::string& text);

// The code the recorded generator denotes. Errors propagate from field
// and code construction (bad q, generator not dividing x^n - 1, ...).
CyclicCode code_from_descriptor(const CodeDescriptor& descriptor);

// Rebuilds the code and recomputes every derived field; returns the
// names of the fields whose recorded values disagree, empty for an
// intact descriptor.
std::vector<std::string> audit_descriptor(const CodeDescriptor& descriptor,
                                          const DistanceBudget& budget = {});

}  // namespace lrc

#endif
