#include "lrc/repair.hpp"

#include <algorithm>
#include <stdexcept>

#include "lrc/rng.hpp"

namespace lrc {

namespace {

std::string group_label(uint32_t offset) { return "group offset " + std::to_string(offset); }

// Positions of the group split into erased and intact, in position order.
struct GroupErasures {
    std::vector<uint32_t> erased;
    std::vector<uint32_t> intact;
};

GroupErasures split_group(const RepairGroup& group, const ReceivedWord& received) {
    GroupErasures out;
    for (uint32_t pos : group.positions)
        (received.erased[pos] ? out.erased : out.intact).push_back(pos);
    return out;
}

}  // namespace

GroupLayout repair_groups(uint32_t n, uint32_t r, uint32_t delta) {
    if (n == 0 || r < 1 || delta < 2)
        raise(ErrorKind::InvalidParams, "repair groups need n >= 1, r >= 1, delta >= 2");
    uint32_t size = r + delta - 1;
    if (size > n || n % size != 0)
        raise(ErrorKind::InvalidParams,
              "(r+delta-1) = " + std::to_string(size) + " must divide n = " + std::to_string(n));
    GroupLayout layout;
    layout.rho = n / size;
    layout.group_size = size;
    layout.groups.resize(layout.rho);
    for (uint32_t t = 0; t < layout.rho; ++t) {
        layout.groups[t].offset = t;
        layout.groups[t].positions.reserve(size);
        for (uint32_t j = 0; j < size; ++j) layout.groups[t].positions.push_back(t + j * layout.rho);
    }
    return layout;
}

GFMatrix local_parities(const CyclicCode& code, const RepairGroup& group) {
    const FiniteField& f = code.base_field();
    const GFMatrix& h = code.reduced_parity_check();
    uint32_t n = code.length();

    std::vector<char> in_group(n, 0);
    for (uint32_t pos : group.positions) in_group[pos] = 1;
    std::vector<uint32_t> outside;
    outside.reserve(n - group.positions.size());
    for (uint32_t c = 0; c < n; ++c)
        if (!in_group[c]) outside.push_back(c);

    // Dual words vanishing outside the group are the combinations y h
    // with y in the left kernel of h's outside columns.
    GFMatrix combos = left_kernel_basis(h.columns(outside));
    if (combos.rows() == 0)
        raise(ErrorKind::EmptyLocalDual,
              "no dual word is supported inside " + group_label(group.offset));

    GFMatrix local(f, combos.rows(), group.positions.size());
    for (size_t i = 0; i < combos.rows(); ++i)
        for (size_t j = 0; j < group.positions.size(); ++j) {
            uint32_t acc = 0;
            for (size_t t = 0; t < h.rows(); ++t)
                if (combos.at(i, t))
                    acc = f.add(acc, f.mul(combos.at(i, t), h.at(t, group.positions[j])));
            local.at(i, j) = acc;
        }
    // h has independent rows, so distinct combinations give distinct dual
    // words and the restriction to their support keeps them independent.
    if (rref_in_place(local) != combos.rows())
        throw std::logic_error("restricted local dual lost rank");
    return local;
}

ReceivedWord make_received(const std::vector<uint32_t>& codeword,
                           const std::vector<uint32_t>& erased_positions) {
    ReceivedWord received{codeword, std::vector<char>(codeword.size(), 0)};
    for (uint32_t pos : erased_positions) {
        if (pos >= codeword.size())
            raise(ErrorKind::InvalidParams, "erased position " + std::to_string(pos) + " out of range");
        if (received.erased[pos])
            raise(ErrorKind::InvalidParams, "erased position " + std::to_string(pos) + " listed twice");
        received.erased[pos] = 1;
        received.symbols[pos] = 0;
    }
    return received;
}

RepairEngine::RepairEngine(const CyclicCode& code, uint32_t r, uint32_t delta)
    : code_(&code), r_(r), delta_(delta),
      layout_(repair_groups(code.length(), r, delta)),
      parity_cache_(layout_.rho) {}

const GFMatrix& RepairEngine::parities_for(uint32_t offset) const {
    if (!parity_cache_[offset])
        parity_cache_[offset] = local_parities(*code_, layout_.groups[offset]);
    return *parity_cache_[offset];
}

void RepairEngine::check_shape(const ReceivedWord& received) const {
    if (received.symbols.size() != code_->length() || received.erased.size() != code_->length())
        raise(ErrorKind::LengthMismatch, "received word length differs from the code length");
}

RepairResult RepairEngine::local_repair(const ReceivedWord& received) const {
    check_shape(received);
    const FiniteField& f = code_->base_field();
    RepairResult result{received.symbols, {}};
    std::vector<char> written(code_->length(), 0);

    for (const RepairGroup& group : layout_.groups) {
        GroupErasures parts = split_group(group, received);
        if (parts.erased.empty()) continue;
        if (parts.erased.size() > size_t(delta_) - 1)
            raise(ErrorKind::LocalRepairInfeasible,
                  group_label(group.offset) + " has " + std::to_string(parts.erased.size()) +
                      " erasures; local repair tolerates " + std::to_string(delta_ - 1));

        const GFMatrix& parities = parities_for(group.offset);
        std::vector<size_t> local_col(code_->length(), 0);
        for (size_t j = 0; j < group.positions.size(); ++j) local_col[group.positions[j]] = j;

        bool solved = false;
        if (parts.erased.size() == 1 && parts.intact.size() > size_t(r_)) {
            // Single erasure: look for a parity word confined to the lost
            // position plus r live ones, the locality guarantee's contact
            // budget. Constructed codes have MDS local codes, where such a
            // word exists for any such support.
            uint32_t lost = parts.erased[0];
            std::vector<uint32_t> support_cols{uint32_t(local_col[lost])};
            for (size_t j = 0; j < size_t(r_); ++j) support_cols.push_back(uint32_t(local_col[parts.intact[j]]));
            std::vector<char> in_support(group.positions.size(), 0);
            for (uint32_t c : support_cols) in_support[c] = 1;
            std::vector<uint32_t> off_support;
            for (uint32_t c = 0; c < group.positions.size(); ++c)
                if (!in_support[c]) off_support.push_back(c);

            GFMatrix combos = left_kernel_basis(parities.columns(off_support));
            for (size_t i = 0; i < combos.rows() && !solved; ++i) {
                std::vector<uint32_t> word(group.positions.size(), 0);
                for (size_t j = 0; j < group.positions.size(); ++j) {
                    uint32_t acc = 0;
                    for (size_t t = 0; t < parities.rows(); ++t)
                        if (combos.at(i, t)) acc = f.add(acc, f.mul(combos.at(i, t), parities.at(t, j)));
                    word[j] = acc;
                }
                uint32_t at_lost = word[local_col[lost]];
                if (at_lost == 0) continue;
                uint32_t acc = 0;
                RepairedSymbol fixed{lost, {}};
                for (uint32_t pos : parts.intact) {
                    uint32_t w = word[local_col[pos]];
                    if (w == 0) continue;
                    acc = f.add(acc, f.mul(w, received.symbols[pos]));
                    fixed.contacts.push_back(pos);
                }
                result.word[lost] = f.neg(f.mul(acc, f.inv(at_lost)));
                written[lost] = 1;
                result.repaired.push_back(std::move(fixed));
                solved = true;
            }
        }

        if (!solved) {
            // General case: solve the group's parity system for the
            // erased columns against the live ones.
            std::vector<uint32_t> erased_cols, intact_cols;
            for (uint32_t pos : parts.erased) erased_cols.push_back(uint32_t(local_col[pos]));
            for (uint32_t pos : parts.intact) intact_cols.push_back(uint32_t(local_col[pos]));

            std::vector<uint32_t> rhs(parities.rows(), 0);
            std::vector<uint32_t> contacts;
            for (size_t idx = 0; idx < parts.intact.size(); ++idx) {
                uint32_t pos = parts.intact[idx];
                uint32_t sym = received.symbols[pos];
                bool used = false;
                for (size_t t = 0; t < parities.rows(); ++t) {
                    uint32_t coeff = parities.at(t, intact_cols[idx]);
                    if (coeff == 0) continue;
                    used = true;
                    if (sym) rhs[t] = f.sub(rhs[t], f.mul(coeff, sym));
                }
                if (used) contacts.push_back(pos);
            }

            LinearSolve ls = solve(parities.columns(erased_cols), rhs);
            if (ls.status != LinearSolve::Status::Unique)
                raise(ErrorKind::LocalRepairInfeasible,
                      "local parity system in " + group_label(group.offset) +
                          " does not determine the erased symbols");
            for (size_t idx = 0; idx < parts.erased.size(); ++idx) {
                uint32_t pos = parts.erased[idx];
                result.word[pos] = ls.solution[idx];
                written[pos] = 1;
                result.repaired.push_back({pos, contacts});
            }
        }
    }

    for (uint32_t pos = 0; pos < code_->length(); ++pos)
        if (bool(received.erased[pos]) != bool(written[pos]))
            throw std::logic_error("local repair wrote outside the erased set");
    return result;
}

RepairResult RepairEngine::global_decode(const ReceivedWord& received) const {
    check_shape(received);
    const FiniteField& f = code_->base_field();
    const GFMatrix& h = code_->reduced_parity_check();

    std::vector<uint32_t> erased, intact;
    for (uint32_t pos = 0; pos < code_->length(); ++pos)
        (received.erased[pos] ? erased : intact).push_back(pos);
    RepairResult result{received.symbols, {}};
    if (erased.empty()) return result;

    std::vector<uint32_t> rhs(h.rows(), 0);
    for (uint32_t pos : intact) {
        uint32_t sym = received.symbols[pos];
        if (sym == 0) continue;
        for (size_t t = 0; t < h.rows(); ++t) {
            uint32_t coeff = h.at(t, pos);
            if (coeff) rhs[t] = f.sub(rhs[t], f.mul(coeff, sym));
        }
    }

    LinearSolve ls = solve(h.columns(erased), rhs);
    if (ls.status == LinearSolve::Status::Underdetermined)
        raise(ErrorKind::AmbiguousErasure,
              "erased columns are linearly dependent; several codewords fit");
    if (ls.status == LinearSolve::Status::Inconsistent)
        raise(ErrorKind::AmbiguousErasure, "received word fits no codeword");
    for (size_t idx = 0; idx < erased.size(); ++idx) {
        result.word[erased[idx]] = ls.solution[idx];
        result.repaired.push_back({erased[idx], intact});
    }
    return result;
}

namespace {

// First w entries of a partial shuffle of pool, consuming pool.
std::vector<uint32_t> draw_without_replacement(std::vector<uint32_t> pool, uint32_t w,
                                               SplitMix64& rng) {
    for (uint32_t i = 0; i < w; ++i) {
        uint32_t j = i + uint32_t(rng.below(pool.size() - i));
        std::swap(pool[i], pool[j]);
    }
    pool.resize(w);
    return pool;
}

}  // namespace

SimulationStats run_simulation(const CyclicCode& code, uint32_t r, uint32_t delta,
                               const SimulationSpec& spec) {
    RepairEngine engine(code, r, delta);
    const GroupLayout& layout = engine.layout();
    const uint64_t q = code.base_field().size();

    if (spec.mode == ErasureMode::LocalRandomGroup && spec.count > layout.group_size)
        raise(ErrorKind::InvalidParams, "cannot erase more positions than a group holds");
    if (spec.mode == ErasureMode::GlobalRandom && spec.count > code.length())
        raise(ErrorKind::InvalidParams, "cannot erase more positions than the code length");
    if (spec.mode == ErasureMode::Explicit)
        for (uint32_t pos : spec.positions)
            if (pos >= code.length())
                raise(ErrorKind::InvalidParams, "erased position " + std::to_string(pos) + " out of range");

    SimulationStats stats;
    stats.contact_min = UINT32_MAX;
    for (uint64_t trial = 0; trial < spec.trials; ++trial) {
        SplitMix64 rng = SplitMix64::for_trial(spec.seed, trial);

        std::vector<uint32_t> message(code.dimension());
        for (uint32_t& sym : message) sym = uint32_t(rng.below(q));
        std::vector<uint32_t> codeword = code.encode(message, EncodeMode::Systematic);

        std::vector<uint32_t> erased;
        bool local = false;
        switch (spec.mode) {
            case ErasureMode::LocalRandomGroup: {
                const RepairGroup& group = layout.groups[rng.below(layout.rho)];
                erased = draw_without_replacement(group.positions, spec.count, rng);
                local = true;
                break;
            }
            case ErasureMode::GlobalRandom: {
                std::vector<uint32_t> all(code.length());
                for (uint32_t i = 0; i < code.length(); ++i) all[i] = i;
                erased = draw_without_replacement(std::move(all), spec.count, rng);
                break;
            }
            case ErasureMode::Explicit: {
                erased = spec.positions;
                std::vector<uint32_t> per_group(layout.rho, 0);
                for (uint32_t pos : erased) ++per_group[pos % layout.rho];
                local = true;
                for (uint32_t count : per_group)
                    if (count > delta - 1) local = false;
                break;
            }
        }

        ++stats.trials;
        local ? ++stats.local_path : ++stats.global_path;
        try {
            ReceivedWord received = make_received(codeword, erased);
            RepairResult repaired =
                local ? engine.local_repair(received) : engine.global_decode(received);
            if (repaired.word == codeword) {
                ++stats.successes;
            } else {
                ++stats.failures;
                if (stats.first_failure.empty())
                    stats.first_failure = "trial " + std::to_string(trial) + ": repaired word differs";
            }
            for (const RepairedSymbol& sym : repaired.repaired) {
                uint32_t touched = uint32_t(sym.contacts.size());
                ++stats.symbols_repaired;
                stats.contact_total += touched;
                stats.contact_min = std::min(stats.contact_min, touched);
                stats.contact_max = std::max(stats.contact_max, touched);
            }
        } catch (const Error& e) {
            if (!spec.allow_failures) throw;
            ++stats.failures;
            if (stats.first_failure.empty())
                stats.first_failure = "trial " + std::to_string(trial) + ": " + e.what();
        }
    }
    if (stats.symbols_repaired == 0) stats.contact_min = 0;
    return stats;
}

}  // namespace lrc
