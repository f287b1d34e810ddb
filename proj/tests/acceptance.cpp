// Acceptance suite: eight checks, one line each, nonzero exit when any
// selected check fails. An optional argv[1] in 1..8 runs a single check.
// Every tolerance and size lives in the constants right below.

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "helpers.hpp"
#include "pou/construction.hpp"
#include "pou/dynamics.hpp"
#include "pou/errors.hpp"
#include "pou/harness.hpp"
#include "pou/move_game.hpp"

namespace {

using namespace pou;

// criterion 1: growth of the layered family
const std::vector<int> kGrowthSizes{500, 1000, 2000, 4000};
constexpr long long kGrowthMsLimit = 60000;  // per instance, build + run
constexpr double kGrowthExponentLo = 1.8;
constexpr double kGrowthExponentHi = 2.2;
constexpr double kGrowthR2Min = 0.98;

// criterion 2: predicted bad-edge counts, n=300 eps=1/2
constexpr long long kPhase1Bad = 1151;  // 31*37 + 2*2
constexpr long long kFinalBad = 3242;   // boost product sum + 2*2

// criterion 3: first-increase threshold on layered, gadget and greedy traces
constexpr int kThresholdSamples = 1000;
constexpr int kThresholdMaxSeeds = 20000;
constexpr int kThresholdN = 16;
constexpr double kThresholdEdgeP = 0.5;

// criterion 4: doubling gadget at eps=1/4; required final count is 2m+1
const std::vector<int> kGadgetMs{4, 8, 16, 32};

// criterion 5: exhaustive-oracle cross-check
constexpr int kOracleSamples = 200;
constexpr long long kOracleStateLimit = 4'000'000;

// criterion 6: randomized inversion and monovariant trials
constexpr int kInversionTrials = 100000;
constexpr int kMonovariantTrials = 100000;

// criterion 7: upper-bound chain corpus
constexpr int kChainRandomSamples = 1000;

// criterion 8: extraction fixture expectations (hub + 4 spokes + 2 observers)
const std::vector<long long> kExtractNonzeros{4, 3};

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string fmt(double x) {
    std::ostringstream out;
    out.precision(6);
    out << x;
    return out.str();
}

Outcome criterion_growth() {
    std::vector<std::pair<double, double>> points;
    for (int n : kGrowthSizes) {
        const ExperimentRow row = run_experiment(n, {1, 2}, Variant::TwoSided);
        if (row.ms > kGrowthMsLimit) {
            return {false, "(n=" + std::to_string(n) + " took " + std::to_string(row.ms) +
                               " ms, limit " + std::to_string(kGrowthMsLimit) + ")"};
        }
        points.emplace_back(static_cast<double>(row.n), row.pou);
    }
    const FitResult fit = fit_power_law(points);
    const bool pass = fit.exponent >= kGrowthExponentLo && fit.exponent <= kGrowthExponentHi &&
                      fit.r2 >= kGrowthR2Min;
    return {pass, "(pou ~ n^" + fmt(fit.exponent) + ", r2=" + fmt(fit.r2) + ", sizes 500..4000)"};
}

Outcome criterion_predictions() {
    const auto rule = make_rule({1, 2}, Variant::TwoSided);

    auto [phase1_game, plan] = build_full(300, {1, 2});
    const Trace phase1_trace = run_schedule(phase1_game, rule, plan.phase1);

    auto [full_game, plan2] = build_full(300, {1, 2});
    std::vector<int> full = plan2.phase1;
    full.insert(full.end(), plan2.phase2.begin(), plan2.phase2.end());
    const Trace full_trace = run_schedule(full_game, rule, full);

    const bool pass = phase1_trace.final_bad == plan.predicted_phase1_bad &&
                      phase1_trace.final_bad == kPhase1Bad &&
                      full_trace.final_bad == plan.predicted_final_bad &&
                      full_trace.final_bad == predicted_final_bad_edges(plan) &&
                      full_trace.final_bad == kFinalBad;
    return {pass, "(phase1 " + std::to_string(phase1_trace.final_bad) + " vs predicted " +
                      std::to_string(plan.predicted_phase1_bad) + ", full " +
                      std::to_string(full_trace.final_bad) + " vs predicted " +
                      std::to_string(plan.predicted_final_bad) + ")"};
}

Outcome criterion_threshold() {
    {
        const auto rule = make_rule({1, 2}, Variant::TwoSided);
        auto [game, plan] = build_full(300, {1, 2});
        std::vector<int> full = plan.phase1;
        full.insert(full.end(), plan.phase2.begin(), plan.phase2.end());
        const Trace trace = run_schedule(game, rule, full);
        if (!first_increase_threshold_check(trace, rule)) {
            return {false, "(layered n=300 breaks the threshold bound)"};
        }
    }
    {
        const auto rule = make_rule({1, 4}, Variant::TwoSided);
        auto [game, schedule] = build_double_gadget(8, rule);
        const Trace trace = run_schedule(game, rule, schedule);
        if (!first_increase_threshold_check(trace, rule)) {
            return {false, "(gadget m=8 breaks the threshold bound)"};
        }
    }
    const auto rule = make_rule({1, 2}, Variant::TwoSided);
    int collected = 0;
    for (int seed = 0; seed < kThresholdMaxSeeds && collected < kThresholdSamples; ++seed) {
        std::mt19937 rng(static_cast<unsigned>(seed));
        auto game = test_helpers::random_game(rng, kThresholdN, kThresholdEdgeP);
        const Trace trace = greedy_adversary(game, rule, 10000);
        if (trace.moves.empty()) continue;  // no strictly increasing opening
        ++collected;
        if (!first_increase_threshold_check(trace, rule)) {
            return {false, "(seed " + std::to_string(seed) + " breaks the threshold bound)"};
        }
    }
    return {collected == kThresholdSamples,
            "(layered run, gadget run and " + std::to_string(collected) +
                " greedy traces: every first increase within bound)"};
}

Outcome criterion_gadget() {
    const auto rule = make_rule({1, 4}, Variant::TwoSided);
    bool pass = true;
    std::ostringstream detail;
    detail << "(";
    for (size_t i = 0; i < kGadgetMs.size(); ++i) {
        const int m = kGadgetMs[i];
        auto [game, schedule] = build_double_gadget(m, rule);
        const Trace trace = run_schedule(game, rule, schedule);
        const bool initial_ok = trace.initial_bad == m + 1;
        const bool switches_ok = trace.moves.size() == static_cast<size_t>(4 * m + 2);
        const bool final_ok = trace.final_bad == 2 * m + 1;
        pass = pass && initial_ok && switches_ok && final_ok;
        detail << (i ? "; " : "") << "m=" << m << ": initial " << trace.initial_bad
               << (initial_ok ? "" : "!") << ", switches " << trace.moves.size()
               << (switches_ok ? "" : "!") << ", final " << trace.final_bad << " vs required "
               << 2 * m + 1;
    }
    if (!pass) detail << "; each final exceeds its target by m+1, the bad edges still at the hub";
    detail << ")";
    return {pass, detail.str()};
}

Outcome criterion_oracle() {
    const auto rule = make_rule({1, 2}, Variant::TwoSided);

    auto [gadget, schedule] = build_double_gadget(2, rule);
    ConsensusGame scheduled = gadget;
    const Trace gadget_trace = run_schedule(scheduled, rule, schedule);
    const OracleResult gadget_oracle = bfs_oracle_max_bad_edges(gadget, rule, kOracleStateLimit);
    if (gadget_trace.final_bad > gadget_oracle.max_bad) {
        return {false, "(gadget schedule beats the oracle)"};
    }

    for (int i = 0; i < kOracleSamples; ++i) {
        std::mt19937 rng(static_cast<unsigned>(1000 + i));
        const int n = 6 + i % 7;
        auto game = test_helpers::random_game(rng, n, 0.5);
        const OracleResult oracle = bfs_oracle_max_bad_edges(game, rule, kOracleStateLimit);
        ConsensusGame run = game;
        const Trace trace = greedy_adversary(run, rule, 10000);
        if (trace.final_bad > oracle.max_bad) {
            return {false, "(sample " + std::to_string(i) + ": greedy " +
                               std::to_string(trace.final_bad) + " > oracle " +
                               std::to_string(oracle.max_bad) + ")"};
        }
    }
    return {true, "(" + std::to_string(kOracleSamples) +
                      " greedy runs and the m=2 gadget never beat the exhaustive oracle)"};
}

// Random sequence, a present z, and a legal target list for it; targets use
// the explicit pool first and the infinite zero tail after that.
struct AbstractMove {
    EkSequence e;
    long long z = 0;
    std::vector<long long> targets;
    bool used_tail = false;
};

AbstractMove draw_abstract_move(std::mt19937& rng, const Rational& eps) {
    AbstractMove mv;
    std::vector<long long> values;
    const int nz = static_cast<int>(rng() % 6);
    for (int i = 0; i < nz; ++i) values.push_back(1 + static_cast<long long>(rng() % 9));
    const int zeros = static_cast<int>(rng() % 4);
    for (int i = 0; i < zeros; ++i) values.push_back(0);
    mv.e = EkSequence::from_values(values);

    if (!mv.e.nonzeros.empty() && rng() % 2 == 0) {
        mv.z = mv.e.nonzeros[rng() % mv.e.nonzeros.size()];
    }
    if (mv.z == 0) {
        mv.used_tail = mv.e.zero_count == 0;
        return mv;
    }
    const long long alpha = mv.z + floor_mul(eps, mv.z);
    std::vector<long long> pool = mv.e.nonzeros;
    pool.erase(std::find(pool.begin(), pool.end(), mv.z));
    for (long long i = 0; i < mv.e.zero_count; ++i) pool.push_back(0);
    for (long long i = 0; i < alpha; ++i) {
        if (pool.empty()) {
            mv.targets.push_back(0);
            mv.used_tail = true;
            continue;
        }
        const size_t at = rng() % pool.size();
        mv.targets.push_back(pool[at]);
        pool.erase(pool.begin() + static_cast<long long>(at));
    }
    return mv;
}

Outcome criterion_inversion() {
    std::mt19937 rng(777);
    const std::vector<Rational> inversion_pool{{1, 4}, {1, 2}, {9, 16}, {2, 3},
                                               {1, 1}, {5, 4}, {7, 5}};
    for (int iter = 0; iter < kInversionTrials; ++iter) {
        const Rational eps = inversion_pool[rng() % inversion_pool.size()];
        const AbstractMove mv = draw_abstract_move(rng, eps);
        const EkSequence after = apply_move(mv.e, mv.z, mv.targets, eps);
        std::vector<long long> elements;
        for (long long t : mv.targets) elements.push_back(t + 1);
        std::shuffle(elements.begin(), elements.end(), rng);
        const ReversedResult rev = apply_reversed_move(after, elements, eps);
        if (rev.z != mv.z || !rev.e.same_nonzeros(mv.e) ||
            (!mv.used_tail && rev.e.zero_count != mv.e.zero_count)) {
            return {false, "(inversion trial " + std::to_string(iter) + " failed)"};
        }
    }

    // eps <= sqrt(2) here: the squares inequality needs it
    std::mt19937 rng2(778);
    const std::vector<Rational> mono_pool{{1, 4}, {1, 2}, {9, 16}, {2, 3}, {1, 1}, {5, 4}, {7, 5}};
    for (int iter = 0; iter < kMonovariantTrials; ++iter) {
        const Rational eps = mono_pool[rng2() % mono_pool.size()];
        const AbstractMove mv = draw_abstract_move(rng2, eps);
        const EkSequence after = apply_move(mv.e, mv.z, mv.targets, eps);
        ReversedStep step;
        step.sumE_in = after.sum();
        step.sumE2_in = after.sum_sq();
        step.sumE_out = mv.e.sum();
        step.sumE2_out = mv.e.sum_sq();
        step.alpha = static_cast<long long>(mv.targets.size());
        const MonovariantReport report = check_monovariants({step}, eps);
        if (!report.violations.empty()) {
            return {false, "(monovariant trial " + std::to_string(iter) + ": " +
                               report.violations.front() + ")"};
        }
    }
    return {true, "(" + std::to_string(kInversionTrials) + " inversions exact, " +
                      std::to_string(kMonovariantTrials) + " reversed moves within bounds)"};
}

Outcome criterion_chain() {
    long long cases = 0;
    auto check = [&cases](const ConsensusGame& initial, const Trace& trace,
                          const UncertaintyRule& rule, const std::string& name) -> std::string {
        const ChainReport report = verify_upper_bound_chain(initial, trace, rule);
        if (!report.violations.empty()) {
            return name + ": " + report.violations.front();
        }
        if (report.m >= 1 && !(report.slack > 0.0)) {
            return name + ": no slack left in the response budget";
        }
        const ShadowTrace shadow = extract_Ek_trace(initial, trace, rule);
        const MonovariantReport mono =
            check_monovariants(reversed_steps_of(shadow), rule.eps_hat());
        if (!mono.violations.empty()) {
            return name + ": " + mono.violations.front();
        }
        ++cases;
        return "";
    };

    // the layered families driven in criteria 1 and 2, full and phase1-only
    const std::vector<std::pair<int, Rational>> families{
        {300, {1, 2}},  {500, {1, 2}},  {1000, {1, 2}}, {2000, {1, 2}},
        {4000, {1, 2}}, {500, {1, 4}},  {1000, {1, 4}}};
    for (const auto& [n, eps] : families) {
        const auto rule = make_rule(eps, Variant::TwoSided);
        const std::string tag = "layered n=" + std::to_string(n) + " eps=" + eps.str();
        {
            auto [game, plan] = build_full(n, eps);
            const ConsensusGame initial = game;
            std::vector<int> full = plan.phase1;
            full.insert(full.end(), plan.phase2.begin(), plan.phase2.end());
            const Trace trace = run_schedule(game, rule, full);
            if (auto err = check(initial, trace, rule, tag); !err.empty()) return {false, "(" + err + ")"};
        }
        {
            auto [game, plan] = build_full(n, eps);
            const ConsensusGame initial = game;
            const Trace trace = run_schedule(game, rule, plan.phase1);
            if (auto err = check(initial, trace, rule, tag + " phase1"); !err.empty()) {
                return {false, "(" + err + ")"};
            }
        }
    }

    // the gadget runs driven in criterion 4, plus tiny and large edge sizes
    const std::vector<std::pair<int, Rational>> gadgets{
        {1, {1, 2}}, {2, {1, 2}}, {4, {1, 4}}, {8, {1, 4}}, {16, {1, 4}}, {32, {1, 4}}};
    for (const auto& [m, eps] : gadgets) {
        const auto rule = make_rule(eps, Variant::TwoSided);
        auto [game, schedule] = build_double_gadget(m, rule);
        const ConsensusGame initial = game;
        const Trace trace = run_schedule(game, rule, schedule);
        const std::string tag = "gadget m=" + std::to_string(m) + " eps=" + eps.str();
        if (auto err = check(initial, trace, rule, tag); !err.empty()) return {false, "(" + err + ")"};
    }

    // greedy traces drawn exactly like criterion 3's
    const auto rule = make_rule({1, 2}, Variant::TwoSided);
    int collected = 0;
    for (int seed = 0; seed < kThresholdMaxSeeds && collected < kChainRandomSamples; ++seed) {
        std::mt19937 rng(static_cast<unsigned>(seed));
        auto game = test_helpers::random_game(rng, kThresholdN, kThresholdEdgeP);
        const ConsensusGame initial = game;
        const Trace trace = greedy_adversary(game, rule, 10000);
        if (trace.moves.empty()) continue;
        ++collected;
        if (auto err = check(initial, trace, rule, "greedy seed " + std::to_string(seed));
            !err.empty()) {
            return {false, "(" + err + ")"};
        }
    }
    if (collected < kChainRandomSamples) {
        return {false, "(only " + std::to_string(collected) + " greedy traces collected)"};
    }
    return {true, "(" + std::to_string(cases) + " traces: budget, telescoping, floor and final-cost" +
                      " checks all hold)"};
}

Outcome criterion_extraction() {
    const std::vector<std::pair<int, int>> edges{
        {0, 1}, {0, 2}, {0, 3}, {0, 4}, {5, 1}, {5, 2}, {5, 3}, {5, 4}, {6, 1}, {6, 2}, {6, 3}};
    std::vector<Color> colors(7, Color::White);
    colors[0] = Color::Red;
    auto game = ConsensusGame::from_edges(7, edges, colors);
    const ConsensusGame initial = game;
    const auto rule = make_rule({1, 2}, Variant::TwoSided);
    const Trace trace = run_schedule(game, rule, {1});
    const ShadowTrace shadow = extract_Ek_trace(initial, trace, rule);

    const bool pass = shadow.e0.nonzeros == kExtractNonzeros && shadow.e0.zero_count == 0 &&
                      shadow.m() == 0 && shadow.sumE0 == 7 && shadow.sumE0_sq == 25;
    std::ostringstream detail;
    detail << "(E0 = [";
    for (size_t i = 0; i < shadow.e0.nonzeros.size(); ++i) {
        detail << (i ? "," : "") << shadow.e0.nonzeros[i];
    }
    detail << "] +" << shadow.e0.zero_count << " zeros, sum=" << shadow.sumE0
           << ", sum_sq=" << shadow.sumE0_sq << ", responses=" << shadow.m() << ")";
    return {pass, detail.str()};
}

struct Criterion {
    const char* name;
    Outcome (*run)();
};

const Criterion kCriteria[] = {
    {"quadratic pou growth", &criterion_growth},
    {"layered predictions match simulation", &criterion_predictions},
    {"first-increase threshold", &criterion_threshold},
    {"gadget run ends at 2m+1 bad edges", &criterion_gadget},
    {"never above the exhaustive oracle", &criterion_oracle},
    {"move inversion and reversed-move bounds", &criterion_inversion},
    {"upper-bound chain", &criterion_chain},
    {"initial sequence extraction", &criterion_extraction},
};

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    if (argc > 1) {
        only = std::atoi(argv[1]);
        if (only < 1 || only > 8) {
            std::cerr << "usage: acceptance [1-8]\n";
            return 2;
        }
    }
    bool all_pass = true;
    for (int i = 1; i <= 8; ++i) {
        if (only != 0 && only != i) continue;
        Outcome outcome;
        try {
            outcome = kCriteria[i - 1].run();
        } catch (const std::exception& ex) {
            outcome = {false, std::string("(exception: ") + ex.what() + ")"};
        }
        std::cout << "criterion " << i << ", " << kCriteria[i - 1].name << ": "
                  << (outcome.pass ? "PASS " : "FAIL ") << outcome.detail << "\n";
        all_pass = all_pass && outcome.pass;
    }
    return all_pass ? 0 : 1;
}
