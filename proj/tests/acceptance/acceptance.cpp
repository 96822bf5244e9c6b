// Acceptance battery. Prints one PASS/FAIL line per criterion; exits
// nonzero if any selected criterion fails.

#include <CLI11.hpp>
#include <fmt/format.h>

#include <chrono>
#include <cmath>
#include <functional>
#include <numeric>
#include <sstream>

#include "ashwa/agents/game.hpp"
#include "ashwa/analysis/nic.hpp"
#include "ashwa/analysis/security.hpp"
#include "ashwa/bft/thresholds.hpp"
#include "ashwa/cli/commands.hpp"
#include "ashwa/core/random.hpp"
#include "ashwa/csl/shared_state.hpp"
#include "ashwa/sim/fairness.hpp"
#include "ashwa/sim/latency.hpp"
#include "ashwa/sim/session.hpp"
#include "oracles/oracles.hpp"

using namespace ashwa;

namespace {

struct Verdict {
    bool pass = true;
    std::vector<std::string> notes;

    void require(bool ok, std::string what)
    {
        if (!ok) pass = false;
        notes.push_back((ok ? "" : "!") + std::move(what));
    }
};

class Stopwatch {
public:
    double seconds() const
    {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

Rational ratio(long a, long b)
{
    Rational r(a, b);
    r.canonicalize();
    return r;
}

double relative_error(const Rational& a, const Rational& b)
{
    if (b == 0) return a == 0 ? 0.0 : 1.0;
    return std::abs(to_double((a - b) / b));
}

// 1. compromise probability at (51, 0.15)

Verdict security_sizing()
{
    Verdict v;
    Stopwatch clock;
    const double p = analysis::compromise_probability(51, 0.15);
    const auto exact = analysis::compromise_probability_exact(51, ratio(3, 20));
    const auto reference = oracle::binomial_tail(51, ratio(3, 20), static_cast<std::int64_t>(bft::fault_threshold(51)));
    const double seconds = clock.seconds();
    const double alt = to_double(oracle::binomial_tail(51, ratio(3, 20), 17));

    v.require(p >= 1.0e-4 && p <= 2.5e-4, fmt::format("P(51, 0.15) = {:.4e} in [1.0e-4, 2.5e-4] (n_f=18; n_f=17 gives {:.4e})", p, alt));
    v.require(relative_error(exact, reference) <= 1e-12, fmt::format("exact vs oracle rel {:.1e}", relative_error(exact, reference)));
    v.require(std::abs(p - to_double(exact)) <= 1e-12 * to_double(exact), "floating agrees with exact");
    v.require(seconds < 1.0, fmt::format("{:.3f} s < 1 s", seconds));
    return v;
}

// 2. committee-size curve

Verdict committee_curve()
{
    Verdict v;
    Stopwatch clock;
    const auto options = cli::CommitteeSizeOptions::defaults();
    const auto rows = cli::committee_size_table(options, 1);
    const double seconds = clock.seconds();
    v.require(seconds < 10.0, fmt::format("{:.3f} s < 10 s", seconds));

    std::map<std::pair<Rational, Rational>, std::size_t> n_min;
    bool all_found = true;
    for (const auto& r : rows) {
        if (!r.result) {
            all_found = false;
            continue;
        }
        n_min[{r.alpha, r.epsilon}] = r.result->n;
    }
    v.require(all_found, "every grid point has a size");

    bool monotone_alpha = true;
    bool monotone_eps = true;
    for (const auto& eps : options.epsilons)
        for (std::size_t i = 1; i < options.alphas.size(); ++i)
            if (n_min[{options.alphas[i], eps}] < n_min[{options.alphas[i - 1], eps}]) monotone_alpha = false;
    auto eps_desc = options.epsilons;
    std::sort(eps_desc.begin(), eps_desc.end(), std::greater<>());
    for (const auto& a : options.alphas)
        for (std::size_t j = 1; j < eps_desc.size(); ++j)
            if (n_min[{a, eps_desc[j]}] < n_min[{a, eps_desc[j - 1]}]) monotone_eps = false;
    v.require(monotone_alpha, "nondecreasing in alpha_A");
    v.require(monotone_eps, "nondecreasing as epsilon shrinks");

    const auto zero = analysis::min_committee_size({ratio(2, 1000000), 0, options.max_n});
    v.require(zero && zero->n == 4, fmt::format("alpha_A = 0 gives {}", zero ? std::to_string(zero->n) : "none"));

    const auto at = n_min[{ratio(15, 100), ratio(2, 10000)}];
    v.require(at <= 51, fmt::format("n_min(0.15, 2e-4) = {} <= 51", at));
    return v;
}

// 3. delta against enumeration and the pivotal term

Verdict pivotal_delta()
{
    Verdict v;
    Stopwatch clock;
    std::size_t cases = 0;
    std::size_t positive = 0;
    std::size_t enumerated = 0;
    std::size_t closed_form = 0;
    for (std::size_t n = 4; n <= 16; ++n) {
        const std::size_t k = bft::supermajority_threshold(n);
        for (long j = 1; j <= 19; ++j) {
            const auto q = ratio(j, 20);
            const agents::BeliefModel b{q, 0, n};
            const auto d = agents::delta(b);
            ++cases;
            if (d > 0) ++positive;
            if (d == oracle::p_invalid_by_subsets(n, q, k, true) - oracle::p_invalid_by_subsets(n, q, k, false))
                ++enumerated;
            if (d == agents::pivotal_probability(n - 1, k, q)) ++closed_form;
        }
    }
    const double seconds = clock.seconds();
    v.require(positive == cases, fmt::format("delta > 0 in {}/{}", positive, cases));
    v.require(enumerated == cases, fmt::format("subset enumeration {}/{}", enumerated, cases));
    v.require(closed_form == cases, fmt::format("pivotal term {}/{}", closed_form, cases));
    v.require(seconds < 30.0, fmt::format("{:.2f} s < 30 s", seconds));
    return v;
}

// 4. all-s2 equilibrium under the incentive conditions

struct RandomGame {
    agents::CommitteeGame game;
    Rational delta_min;
};

RandomGame random_game(Rng& rng)
{
    RandomGame g;
    auto& game = g.game;
    const std::size_t n_r = 1 + rng.below(12);
    std::size_t n_h = rng.below(6);
    if (n_r + n_h < 4) n_h = 4 - n_r;
    // Any Byzantine count that stays below the fault bound.
    std::vector<std::size_t> allowed;
    for (std::size_t b = 0; b < 8; ++b)
        if (b < bft::fault_threshold(n_r + n_h + b)) allowed.push_back(b);
    game.n_honest = n_h;
    game.n_byzantine = allowed[rng.below(allowed.size())];
    game.alpha_a = ratio(static_cast<long>(1 + rng.below(40)), 100);
    game.params.kappa_r = static_cast<long>(10 + rng.below(500));
    game.params.c_mine = static_cast<long>(rng.below(200));
    game.params.n_tx = 1 + rng.below(100);
    game.kappas.clear();
    for (std::size_t i = 0; i < n_r; ++i) game.kappas.push_back(game.params.kappa_r + static_cast<long>(rng.below(100)));
    g.delta_min = agents::game_delta_min(game);
    return g;
}

Verdict equilibrium()
{
    Verdict v;
    Stopwatch clock;
    Rng rng(2024);

    std::size_t satisfied = 0;
    std::size_t psne = 0;
    std::size_t nonnegative = 0;
    while (satisfied < 500) {
        auto [game, dmin] = random_game(rng);
        if (dmin == 0) continue;
        // Validation cost a random fraction of kappa_r * delta_min.
        game.params.phi = static_cast<long>(1 + rng.below(20));
        game.params.c_val = game.params.kappa_r * dmin * ratio(static_cast<long>(rng.below(101)), 100) / game.params.phi;
        game.params.reward = game.params.validation_cost() + game.params.mining_cost_per_block() +
                             ratio(static_cast<long>(rng.below(1000)), 10);
        if (!analysis::nic_check(game.params, game.n_byzantine, game.size(), dmin).nic()) continue;
        ++satisfied;

        const auto all_s2 = agents::uniform_profile(game, agents::Strategy::S2);
        bool stable = agents::is_equilibrium(game, all_s2);
        for (std::size_t i = 0; i < game.n_rational(); ++i)
            stable = stable && agents::best_response(game, all_s2, i) == agents::Strategy::S2;
        if (stable) ++psne;
        bool ok = true;
        for (std::size_t i = 0; i < game.n_rational(); ++i)
            ok = ok && agents::realized_utility(game, all_s2, i) >= 0;
        if (ok) ++nonnegative;
    }

    std::size_t violated = 0;
    std::size_t deviates = 0;
    while (violated < 500) {
        auto [game, dmin] = random_game(rng);
        game.kappas.assign(game.n_rational(), game.params.kappa_r);
        // Validation cost at least 10% above kappa_r * delta_min.
        game.params.phi = static_cast<long>(1 + rng.below(20));
        game.params.c_val = (game.params.kappa_r * dmin * ratio(static_cast<long>(110 + rng.below(400)), 100) + ratio(1, 100)) /
                            game.params.phi;
        game.params.reward = game.params.validation_cost() + game.params.mining_cost_per_block();
        if (analysis::nic_check(game.params, game.n_byzantine, game.size(), dmin).maximum_payload) continue;
        ++violated;

        // The profile whose belief attains delta_min, with seat 0 still on s2.
        std::size_t worst = 0;
        for (std::size_t peers = 0; peers < game.n_rational(); ++peers) {
            agents::StrategyProfile p(game.n_rational(), agents::Strategy::S2);
            for (std::size_t j = 1; j <= peers; ++j) p[j] = agents::Strategy::S1;
            if (agents::delta(agents::belief_of(game, p, 0)) == dmin) worst = peers;
        }
        agents::StrategyProfile p(game.n_rational(), agents::Strategy::S2);
        for (std::size_t j = 1; j <= worst; ++j) p[j] = agents::Strategy::S1;
        bool found = false;
        for (std::size_t i = 0; i < game.n_rational() && !found; ++i)
            found = agents::best_response(game, p, i) == agents::Strategy::S1;
        if (found) ++deviates;
    }
    const double seconds = clock.seconds();
    v.require(psne == satisfied, fmt::format("all-s2 PSNE {}/{}", psne, satisfied));
    v.require(nonnegative == satisfied, fmt::format("nonnegative utilities {}/{}", nonnegative, satisfied));
    v.require(deviates == violated, fmt::format("s1 best response under payload violation {}/{}", deviates, violated));
    v.require(seconds < 60.0, fmt::format("{:.2f} s < 60 s", seconds));
    return v;
}

// 5 and 6. session battery

struct Battery {
    std::vector<sim::SessionConfig> safe;
    std::vector<sim::SessionConfig> adversarial;
    std::vector<sim::SessionResult> safe_results;
    std::vector<sim::SessionResult> adversarial_results;
    double seconds = 0.0;
};

sim::SessionConfig safe_config(std::size_t i)
{
    static constexpr std::size_t sizes[] = {4, 7, 10};
    sim::SessionConfig c;
    c.seed = 1000 + i;
    c.committee_size = sizes[i % 3];
    const std::size_t n = c.committee_size;
    c.n_byzantine = bft::fault_threshold(n) - 1;
    c.n_rational = (n - c.n_byzantine) / 2;
    c.n_honest = n - c.n_byzantine - c.n_rational;
    c.alphas.assign(n, 0.0);
    for (std::size_t a = 0; a < n; ++a) c.alphas[a] = a < n - c.n_byzantine ? 0.999 / static_cast<double>(n - c.n_byzantine) : 0.001 / static_cast<double>(c.n_byzantine);
    c.byzantine_mode = i % 2 ? sim::ByzantineMode::Equivocate : sim::ByzantineMode::Invalid;
    c.belief_alpha = ratio(1, 10);
    c.game.c_val = ratio(1, 100000);
    c.game.phi = 10;
    c.game.reward = 20;
    c.acl.difficulty = 6;
    c.duration_rounds = 2 * n;
    c.tx_rate = 0.2;
    return c;
}

sim::SessionConfig adversarial_config(std::size_t i)
{
    static constexpr std::size_t sizes[] = {4, 7, 10};
    sim::SessionConfig c;
    c.seed = 5000 + i;
    c.committee_size = sizes[i % 3];
    const std::size_t n = c.committee_size;
    c.n_byzantine = bft::fault_threshold(n);
    c.acl.difficulty = 6;
    c.duration_rounds = 2 * n;
    if (i % 2 == 0) {
        c.byzantine_mode = sim::ByzantineMode::Equivocate;
        c.n_honest = n - c.n_byzantine;
    } else {
        // Lazy rational seats: validation costs more than it protects.
        c.byzantine_mode = sim::ByzantineMode::Invalid;
        c.n_rational = n - c.n_byzantine;
        c.n_honest = 0;
        c.belief_alpha = ratio(3, 10);
        c.game.c_val = 1;
        c.game.phi = 1000;
        c.game.reward = 2000;
    }
    return c;
}

bool nic_holds(const sim::SessionConfig& c)
{
    cli::NicOptions o;
    o.game = c.game;
    o.committee_size = c.committee_size;
    o.n_byzantine = c.n_byzantine;
    o.n_rational = c.n_rational;
    o.alpha_a = c.belief_alpha;
    return cli::nic_evaluate(o).report.nic();
}

const Battery& battery()
{
    static const Battery b = [] {
        Battery b;
        Stopwatch clock;
        for (std::size_t i = 0; i < 100; ++i) b.safe.push_back(safe_config(i));
        for (std::size_t i = 0; i < 20; ++i) b.adversarial.push_back(adversarial_config(i));
        b.safe_results.resize(b.safe.size());
        b.adversarial_results.resize(b.adversarial.size());
        cli::parallel_for(b.safe.size(), 4, [&](std::size_t i) { b.safe_results[i] = sim::run_session(b.safe[i]); });
        cli::parallel_for(b.adversarial.size(), 4,
                          [&](std::size_t i) { b.adversarial_results[i] = sim::run_session(b.adversarial[i]); });
        b.seconds = clock.seconds();
        return b;
    }();
    return b;
}

Verdict safety_liveness()
{
    Verdict v;
    const auto& b = battery();
    std::size_t nic = 0;
    std::size_t secure = 0;
    std::size_t valid = 0;
    std::size_t agree = 0;
    std::size_t live = 0;
    for (std::size_t i = 0; i < b.safe.size(); ++i) {
        const auto& c = b.safe[i];
        const auto& m = b.safe_results[i].metrics;
        if (nic_holds(c)) ++nic;
        if (m.max_adversary_seats < bft::fault_threshold(c.committee_size)) ++secure;
        if (m.invalid_blocks_committed == 0 && m.conflicting_commits == 0) ++valid;
        const auto& digests = b.safe_results[i].replica_digests;
        const auto expected = csl::state_digest(b.safe_results[i].final_state);
        if (m.replicas_agree && std::all_of(digests.begin(), digests.end(), [&](const Digest& d) { return d == expected; }))
            ++agree;
        if (!m.liveness_lost && m.late_transactions == 0 && m.committed_pow_blocks == c.duration_rounds) ++live;
    }
    const std::size_t total = b.safe.size();
    v.require(nic == total, fmt::format("NIC holds {}/{}", nic, total));
    v.require(secure == total, fmt::format("adversary seats below n_f {}/{}", secure, total));
    v.require(valid == total, fmt::format("no invalid commits {}/{}", valid, total));
    v.require(agree == total, fmt::format("replica digests agree {}/{}", agree, total));
    v.require(live == total, fmt::format("transactions within n+10 rounds {}/{}", live, total));

    std::size_t detected = 0;
    std::size_t equivocations = 0;
    std::size_t invalid = 0;
    for (std::size_t i = 0; i < b.adversarial.size(); ++i) {
        const auto& m = b.adversarial_results[i].metrics;
        if (m.conflicting_commits > 0) ++equivocations;
        if (m.invalid_blocks_committed > 0) ++invalid;
        if (m.safety_violated() && !m.violations.empty()) ++detected;
    }
    v.require(detected == b.adversarial.size(),
              fmt::format("n_B = n_f violations reported {}/{} ({} conflicting, {} invalid)", detected,
                          b.adversarial.size(), equivocations, invalid));
    v.require(b.seconds < 120.0, fmt::format("{:.2f} s < 120 s", b.seconds));
    return v;
}

Verdict rotation()
{
    Verdict v;
    const auto& b = battery();
    std::size_t matched = 0;
    std::size_t chained = 0;
    std::size_t epochs = 0;
    for (std::size_t i = 0; i < b.safe.size(); ++i) {
        const auto& r = b.safe_results[i];
        if (sim::rotation_mismatches(r.trace, b.safe[i].committee_size) == 0) ++matched;
        const auto e = sim::epochs_in_trace(r.trace);
        epochs += e;
        if (r.final_state.com_chain.size() == e + 1) ++chained;
    }
    v.require(matched == b.safe.size(), fmt::format("committees match PowChain {}/{}", matched, b.safe.size()));
    v.require(chained == b.safe.size(), fmt::format("|comChain| = epochs + 1 {}/{}", chained, b.safe.size()));
    v.require(epochs >= 2 * b.safe.size(), fmt::format("{} epochs observed", epochs));
    return v;
}

// 7. throughput

Verdict throughput()
{
    Verdict v;
    cli::TpsOptions o;
    const auto rows = cli::tps_sweep(o);
    double at51 = 0.0;
    bool decreasing = true;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].committee_size == 51) at51 = rows[i].tps;
        if (i > 0 && rows[i].tps >= rows[i - 1].tps) decreasing = false;
    }
    v.require(at51 >= 700.0, fmt::format("TPS(51) = {:.2f} >= 700", at51));
    v.require(decreasing, "TPS strictly decreasing over 21..91");

    std::vector<double> x;
    std::vector<double> y;
    std::vector<double> block_time;
    for (std::size_t n : {4, 7, 10, 13, 16}) {
        sim::SessionConfig c;
        c.seed = 77;
        c.committee_size = n;
        c.n_honest = n;
        c.duration_rounds = n;
        c.acl.difficulty = 6;
        const auto m = sim::run_session(c).metrics;
        x.push_back(static_cast<double>(n * n));
        y.push_back(m.mean_messages_per_round());
        block_time.push_back(m.avg_tx_block_time);
    }
    const double mx = std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(x.size());
    const double my = std::accumulate(y.begin(), y.end(), 0.0) / static_cast<double>(y.size());
    double sxy = 0.0;
    double sxx = 0.0;
    double syy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
        syy += (y[i] - my) * (y[i] - my);
    }
    const double r2 = sxy * sxy / (sxx * syy);
    v.require(r2 >= 0.99, fmt::format("messages vs n^2 R^2 = {:.5f}", r2));

    bool increasing = true;
    const sim::LatencyModel model;
    for (std::size_t n = 2; n <= 200; ++n)
        if (sim::consensus_round_time(n, model) <= sim::consensus_round_time(n - 1, model)) increasing = false;
    for (std::size_t i = 1; i < block_time.size(); ++i)
        if (block_time[i] <= block_time[i - 1]) increasing = false;
    v.require(increasing, "consensus time strictly increasing in n");
    return v;
}

// 8. mining fairness and replay

std::string trace_text(const std::vector<bft::TraceEvent>& trace)
{
    std::ostringstream out;
    bft::write_trace(out, trace);
    return out.str();
}

Verdict fairness()
{
    Verdict v;
    const std::vector<double> alphas{0.5, 0.3, 0.2};
    const auto run = sim::run_mining(alphas, 10000, 31);
    const auto report = sim::fairness_report(run.trace, run.expected);
    std::string shares;
    for (const auto& m : report.miners) shares += fmt::format(" {:.4f}/{:.2f}", m.share, m.expected);
    v.require(report.total_blocks == 10000 && report.pass(), "shares within 3 sigma:" + shares);

    const auto again = sim::run_mining(alphas, 10000, 31);
    v.require(trace_text(run.trace) == trace_text(again.trace), "mining replay byte-identical");

    sim::SessionConfig c;
    c.seed = 99;
    c.committee_size = 7;
    c.n_honest = 5;
    c.n_rational = 1;
    c.n_byzantine = 1;
    c.trace_messages = true;
    const auto a = trace_text(sim::run_session(c).trace);
    const auto b = trace_text(sim::run_session(c).trace);
    v.require(a == b, fmt::format("session replay byte-identical ({} bytes)", a.size()));
    return v;
}

struct Criterion {
    const char* name;
    std::function<Verdict()> run;
};

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Acceptance battery"};
    int only = 0;
    app.add_option("--criterion", only, "Run a single criterion")->check(CLI::Range(1, 8));
    CLI11_PARSE(app, argc, argv);

    const Criterion criteria[] = {
        {"security sizing at (51, 0.15)", security_sizing},
        {"committee-size curve", committee_curve},
        {"pivotal delta", pivotal_delta},
        {"all-s2 equilibrium", equilibrium},
        {"safety and liveness battery", safety_liveness},
        {"epoch rotation", rotation},
        {"throughput", throughput},
        {"mining fairness and replay", fairness},
    };

    bool all = true;
    for (int i = 1; i <= 8; ++i) {
        if (only != 0 && only != i) continue;
        Verdict v;
        try {
            v = criteria[i - 1].run();
        } catch (const std::exception& e) {
            v.require(false, std::string("exception: ") + e.what());
        }
        all = all && v.pass;
        std::string detail;
        for (const auto& n : v.notes) detail += (detail.empty() ? "" : "; ") + n;
        fmt::print("criterion {}: {} {}: {}\n", i, v.pass ? "PASS" : "FAIL", criteria[i - 1].name, detail);
    }
    return all ? 0 : 1;
}
