#ifndef LRC_REPAIR_HPP
#define LRC_REPAIR_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lrc/cyclic_code.hpp"

namespace lrc {

// One repair group: the residue class offset mod rho, positions spaced
// rho apart, size r+delta-1.
struct RepairGroup {
    uint32_t offset = 0;
    std::vector<uint32_t> positions;
};

struct GroupLayout {
    uint32_t rho = 0;
    uint32_t group_size = 0;
    std::vector<RepairGroup> groups;  // indexed by offset

    const RepairGroup& group_of(uint32_t coordinate) const { return groups[coordinate % rho]; }
};

// Partition of [0, n) into the rho = n/(r+delta-1) residue classes mod
// rho. Errors: InvalidParams when r, delta are out of range or
// (r+delta-1) does not divide n.
GroupLayout repair_groups(uint32_t n, uint32_t r, uint32_t delta);

// Row echelon basis of the dual words supported inside the group,
// restricted to the group's columns in position order. Errors:
// EmptyLocalDual when no nonzero dual word fits in the group.
GFMatrix local_parities(const CyclicCode& code, const RepairGroup& group);

// A codeword with some coordinates unknown. Erasures are a mask, not a
// sentinel symbol, since 0 is a legal symbol; masked entries hold 0.
struct ReceivedWord {
    std::vector<uint32_t> symbols;
    std::vector<char> erased;
};

ReceivedWord make_received(const std::vector<uint32_t>& codeword,
                           const std::vector<uint32_t>& erased_positions);

// One recovered coordinate and the unerased coordinates read to do it.
struct RepairedSymbol {
    uint32_t position = 0;
    std::vector<uint32_t> contacts;
};

struct RepairResult {
    std::vector<uint32_t> word;
    std::vector<RepairedSymbol> repaired;
};

// Local and global erasure repair for one code with an (r, delta) group
// structure. Local repair works group by group and touches only symbols
// inside the erased coordinate's own group; global decode solves against
// the full parity check and exercises the code's minimum distance.
class RepairEngine {
  public:
    // Errors: InvalidParams via repair_groups.
    RepairEngine(const CyclicCode& code, uint32_t r, uint32_t delta);

    const CyclicCode& code() const { return *code_; }
    const GroupLayout& layout() const { return layout_; }

    // Recovers every erased coordinate from its own group. Groups are
    // processed in ascending offset order; the order cannot matter since
    // their supports are disjoint, and this is asserted. Errors:
    // LocalRepairInfeasible when a group holds more than delta-1
    // erasures or its local system is not uniquely solvable.
    RepairResult local_repair(const ReceivedWord& received) const;

    // Solves the erased columns against the reduced parity check.
    // Errors: AmbiguousErasure when the restricted system is rank
    // deficient (possible only once |erased| reaches the distance) or
    // the received word fits no codeword.
    RepairResult global_decode(const ReceivedWord& received) const;

  private:
    const GFMatrix& parities_for(uint32_t offset) const;
    void check_shape(const ReceivedWord& received) const;

    const CyclicCode* code_;
    uint32_t r_, delta_;
    GroupLayout layout_;
    mutable std::vector<std::optional<GFMatrix>> parity_cache_;
};

enum class ErasureMode { LocalRandomGroup, GlobalRandom, Explicit };

struct SimulationSpec {
    ErasureMode mode = ErasureMode::LocalRandomGroup;
    // Erasures per trial for the random modes.
    uint32_t count = 0;
    // Fixed erased positions for Explicit mode.
    std::vector<uint32_t> positions;
    uint64_t trials = 100;
    uint64_t seed = 0;
    // When set, repair errors are counted instead of thrown.
    bool allow_failures = false;
};

struct SimulationStats {
    uint64_t trials = 0;
    uint64_t successes = 0;
    uint64_t failures = 0;
    uint64_t local_path = 0;
    uint64_t global_path = 0;
    uint64_t symbols_repaired = 0;
    uint32_t contact_min = 0;
    uint32_t contact_max = 0;
    uint64_t contact_total = 0;
    std::string first_failure;
};

// Random round trips: draw a message from the (seed, trial) stream,
// encode, erase per the spec, repair, compare. LocalRandomGroup erases
// inside one uniformly chosen group and always takes the local path;
// GlobalRandom always decodes globally; Explicit takes the local path
// exactly when every group holds at most delta-1 erasures.
SimulationStats run_simulation(const CyclicCode& code, uint32_t r, uint32_t delta,
                               const SimulationSpec& spec);

}  // namespace lrc

#endif
