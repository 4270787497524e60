// Acceptance gate: one line of output per criterion, PASS or FAIL, and a
// nonzero exit when anything fails. Criteria are numbered and phrased
// after the fixture they pin down; each one recomputes what it needs
// from the library instead of trusting another criterion's work.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "lrc/constructions.hpp"
#include "lrc/repair.hpp"
#include "lrc/subfield.hpp"

using namespace lrc;

namespace {

struct CheckFailure {
    std::string detail;
};

void require(bool ok, const std::string& detail) {
    if (!ok) throw CheckFailure{detail};
}

struct Fixture {
    std::string label;
    LrcReport report;
};

std::vector<Fixture> build_fixtures() {
    std::vector<Fixture> out;
    for (uint32_t n = 5; n <= 30; n += 5)
        out.push_back({"t1 n=" + std::to_string(n), verify({11, n, 3, 3}, {KindTag::T1, 0})});
    out.push_back({"t2", verify({19, 27, 4, 6}, {KindTag::T2, 0})});
    out.push_back({"t3", verify({7, 30, 4, 3}, {KindTag::T3, 0})});
    for (uint32_t d = 4; d <= 6; ++d)
        out.push_back(
            {"remark3 d=" + std::to_string(d), verify({7, 30, 4, 3}, {KindTag::Remark3, d})});
    out.push_back({"t4", verify({13, 21, 5, 3}, {KindTag::T4, 0})});
    return out;
}

const Fixture& find_fixture(const std::vector<Fixture>& fixtures, const std::string& label) {
    for (const Fixture& f : fixtures)
        if (f.label == label) return f;
    throw CheckFailure{"fixture '" + label + "' was never built"};
}

struct CliResult {
    int exit_code = -1;
    std::string output;
};

CliResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    std::string cmd = env_prefix + LRC_FORGE_BIN + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) throw CheckFailure{"popen failed for: " + cmd};
    CliResult result;
    char buf[512];
    while (size_t got = fread(buf, 1, sizeof buf, pipe)) result.output.append(buf, got);
    int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

void expect_rejection(const std::string& args, const std::string& named_condition) {
    CliResult got = run_cli(args);
    require(got.exit_code == 2, args + " exited " + std::to_string(got.exit_code) +
                                    ", expected 2; output: " + got.output);
    require(got.output.find("PreconditionFailed") != std::string::npos,
            args + " did not name PreconditionFailed: " + got.output);
    require(got.output.find(named_condition) != std::string::npos,
            args + " did not name '" + named_condition + "': " + got.output);
}

std::string dims(const LrcReport& report) {
    return "[" + std::to_string(report.params.n) + "," + std::to_string(report.k) + "," +
           (report.d_exact ? std::to_string(*report.d_exact) : std::string("?")) + "]";
}

void check_repair_run(const LrcReport& report, ErasureMode mode, uint32_t count, uint64_t seed,
                      uint32_t contact_cap, const std::string& label) {
    SimulationSpec spec;
    spec.mode = mode;
    spec.count = count;
    spec.trials = 1000;
    spec.seed = seed;
    SimulationStats stats = run_simulation(report.code, report.params.r, report.params.delta, spec);
    require(stats.trials == 1000 && stats.failures == 0 && stats.successes == 1000,
            label + ": " + std::to_string(stats.failures) + " failures in " +
                std::to_string(stats.trials) + " trials (" + stats.first_failure + ")");
    if (mode == ErasureMode::LocalRandomGroup) {
        require(stats.local_path == 1000, label + ": expected every trial on the local path");
        require(stats.contact_max <= contact_cap,
                label + ": contact_max " + std::to_string(stats.contact_max) + " exceeds " +
                    std::to_string(contact_cap));
    } else {
        require(stats.global_path == 1000, label + ": expected every trial on the global path");
    }
}

}  // namespace

int main() {
    std::vector<Fixture> fixtures;
    std::string build_error;
    try {
        fixtures = build_fixtures();
    } catch (const std::exception& e) {
        build_error = e.what();
    }

    struct Criterion {
        int id;
        std::string label;
        std::function<void()> run;
    };

    std::vector<Criterion> criteria;

    criteria.push_back({1, "t1 family q=11 (r,delta)=(3,3), n = 5..30: k = 3n/5-1, d = 4, optimal",
                        [&] {
        for (uint32_t n = 5; n <= 30; n += 5) {
            const Fixture& f = find_fixture(fixtures, "t1 n=" + std::to_string(n));
            const LrcReport& rep = f.report;
            require(rep.k == 3 * n / 5 - 1, f.label + ": k = " + std::to_string(rep.k));
            require(rep.d_exact && *rep.d_exact == 4, f.label + ": d " + dims(rep));
            require(rep.bound == 4, f.label + ": bound = " + std::to_string(rep.bound));
            require(rep.optimal, f.label + ": not optimal");
        }
    }});

    criteria.push_back({2, "t2 (q=19, n=27, r=4, delta=6) yields [27,10,8], optimal", [&] {
        const LrcReport& rep = find_fixture(fixtures, "t2").report;
        require(rep.k == 10, "k = " + std::to_string(rep.k));
        require(rep.d_exact && *rep.d_exact == 8, "d " + dims(rep));
        require(rep.bound == 8, "bound = " + std::to_string(rep.bound));
        require(rep.optimal, "not optimal");
    }});

    criteria.push_back({3, "t3 (q=7, n=30, r=4, delta=3) yields [30,17,6], optimal", [&] {
        const LrcReport& rep = find_fixture(fixtures, "t3").report;
        require(rep.k == 17, "k = " + std::to_string(rep.k));
        require(rep.d_exact && *rep.d_exact == 6, "d " + dims(rep));
        require(rep.bound == 6, "bound = " + std::to_string(rep.bound));
        require(rep.optimal, "not optimal");
    }});

    criteria.push_back({4, "remark3 sweep d = 4,5,6 at (q=7, n=30, r=4, delta=3): k = 20-(d-3), optimal",
                        [&] {
        for (uint32_t d = 4; d <= 6; ++d) {
            const Fixture& f = find_fixture(fixtures, "remark3 d=" + std::to_string(d));
            const LrcReport& rep = f.report;
            require(rep.k == 20 - (d - 3), f.label + ": k = " + std::to_string(rep.k));
            require(rep.d_exact && *rep.d_exact == d, f.label + ": d " + dims(rep));
            require(rep.optimal, f.label + ": not optimal");
        }
    }});

    criteria.push_back({5, "t4 (q=13, n=21, r=5, delta=3) yields [21,12,6], optimal, "
                           "coefficients pass the Frobenius subfield test before descent",
                        [&] {
        const LrcReport& rep = find_fixture(fixtures, "t4").report;
        require(rep.k == 12, "k = " + std::to_string(rep.k));
        require(rep.d_exact && *rep.d_exact == 6, "d " + dims(rep));
        require(rep.bound == 6, "bound = " + std::to_string(rep.bound));
        require(rep.optimal, "not optimal");
        ConstructionContext ctx = make_context({13, 21, 5, 3}, {KindTag::T4, 0});
        Polynomial raw = generator_over_extension(ctx);
        require(raw.degree() == 9, "pre-descent degree " + std::to_string(raw.degree()));
        for (size_t i = 0; i < raw.codes().size(); ++i)
            require(bool(in_base_field(raw.coeff(i), 13)),
                    "coefficient of x^" + std::to_string(i) + " is outside GF(13)");
    }});

    criteria.push_back({6, "every fixture has bch lower bound <= d = singleton bound; "
                           "t1 fixtures have bch bound exactly delta+1 = 4",
                        [&] {
        for (const Fixture& f : fixtures) {
            const LrcReport& rep = f.report;
            require(rep.d_exact.has_value(), f.label + ": no exact distance");
            require(rep.bch_lower <= *rep.d_exact,
                    f.label + ": bch " + std::to_string(rep.bch_lower) + " > d");
            require(int64_t(*rep.d_exact) == rep.bound,
                    f.label + ": d " + dims(rep) + " misses bound " + std::to_string(rep.bound));
            if (f.label.rfind("t1 ", 0) == 0)
                require(rep.bch_lower == 4,
                        f.label + ": bch = " + std::to_string(rep.bch_lower) + ", expected 4");
        }
    }});

    criteria.push_back({7, "both distance oracles run and agree wherever q^k fits enumeration",
                        [&] {
        uint32_t cross_checked = 0;
        for (const Fixture& f : fixtures) {
            const LrcReport& rep = f.report;
            double log_size = rep.k * std::log2(double(rep.params.q));
            if (log_size > 20.0) continue;
            DistanceResult d = min_distance_exact(rep.code, rep.d_ceiling);
            require(d.enumerated.has_value(), f.label + ": enumeration oracle did not run");
            require(d.column_searched.has_value(), f.label + ": column oracle did not run");
            require(*d.enumerated == *d.column_searched,
                    f.label + ": oracles disagree, " + std::to_string(*d.enumerated) + " vs " +
                        std::to_string(*d.column_searched));
            require(d.distance && *d.distance == *rep.d_exact, f.label + ": distance shifted");
            ++cross_checked;
        }
        require(cross_checked >= 2, "expected at least the two smallest t1 fixtures to fit");
    }});

    criteria.push_back({8, "locality holds on every fixture by witness and by puncturing; "
                           "the [5,4,2] control has no (2,2) locality",
                        [&] {
        for (const Fixture& f : fixtures) {
            const LrcReport& rep = f.report;
            uint32_t r = rep.params.r, delta = rep.params.delta;
            require(rep.defining_set.holds, f.label + ": defining-set check failed");
            require(rep.direct_locality, f.label + ": direct check failed");
            std::vector<int64_t> ells;
            uint64_t b = 1;
            if (rep.kind.tag == KindTag::T4) {
                ells = {-1, 1};
                b = 2;
            } else {
                for (uint32_t ell = 1; ell <= delta - 1; ++ell) ells.push_back(int64_t(ell));
            }
            require(defining_set_witness_holds(rep.code, r, delta, ells, b),
                    f.label + ": the stated witness does not hold");
        }
        const FiniteField& f11 = build_field(11, 1);
        Polynomial g = Polynomial::x(f11) - Polynomial::constant(FieldElement::one(f11));
        CyclicCode control = CyclicCode::from_generator(f11, 5, g);
        require(!locality_check_direct(control, 2, 2),
                "[5,4,2] control unexpectedly passed the direct check");
    }});

    criteria.push_back({9, "1000 seeded repair trials per fixture: local up to delta-1 with "
                           "bounded contacts, global up to d-1, zero failures",
                        [&] {
        uint64_t seed = 1000;
        for (const Fixture& f : fixtures) {
            const LrcReport& rep = f.report;
            uint32_t r = rep.params.r, delta = rep.params.delta;
            check_repair_run(rep, ErasureMode::LocalRandomGroup, 1, seed++, r,
                             f.label + " local w=1");
            check_repair_run(rep, ErasureMode::LocalRandomGroup, delta - 1, seed++,
                             r + delta - 2, f.label + " local w=delta-1");
            check_repair_run(rep, ErasureMode::GlobalRandom, *rep.d_exact - 1, seed++, 0,
                             f.label + " global w=d-1");
        }
    }});

    criteria.push_back({10, "the command line rejects impossible parameters by name with "
                            "exit 2 and stops at an exhausted budget with exit 3",
                        [&] {
        for (uint32_t n : {6u, 12u})
            expect_rejection("construct --q 5 --n " + std::to_string(n) +
                                 " --r 4 --delta 3 --kind t4",
                             "n must be odd");
        for (uint32_t n : {11u, 21u, 33u})
            expect_rejection("construct --q 5 --n " + std::to_string(n) +
                                 " --r 4 --delta 3 --kind t4",
                             "(r+delta-1) must divide n");
        expect_rejection("construct --q 11 --n 11 --r 3 --delta 3 --kind t1", "gcd(n,q) != 1");

        CliResult budget = run_cli("construct --q 7 --n 30 --r 4 --delta 3 --kind t3",
                                   "LRC_FORGE_BUDGET=10 ");
        require(budget.exit_code == 3, "budget run exited " + std::to_string(budget.exit_code) +
                                           ", expected 3; output: " + budget.output);
        require(budget.output.find("InfeasibleBudget") != std::string::npos,
                "budget run did not name InfeasibleBudget: " + budget.output);
    }});

    int failures = 0;
    for (const Criterion& criterion : criteria) {
        std::string verdict = "PASS";
        std::string detail;
        if (!build_error.empty() && criterion.id != 10) {
            verdict = "FAIL";
            detail = "fixtures failed to build: " + build_error;
        } else {
            try {
                criterion.run();
            } catch (const CheckFailure& f) {
                verdict = "FAIL";
                detail = f.detail;
            } catch (const std::exception& e) {
                verdict = "FAIL";
                detail = e.what();
            }
        }
        if (verdict == "FAIL") ++failures;
        std::printf("%s  criterion %2d: %s%s%s\n", verdict.c_str(), criterion.id,
                    criterion.label.c_str(), detail.empty() ? "" : " -- ", detail.c_str());
    }
    if (failures) std::printf("%d of %zu criteria failed\n", failures, criteria.size());
    else std::printf("all %zu criteria passed\n", criteria.size());
    return failures ? 1 : 0;
}
