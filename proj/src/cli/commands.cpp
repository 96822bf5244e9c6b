#include "ashwa/cli/commands.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include "ashwa/agents/game.hpp"
#include "ashwa/bft/thresholds.hpp"

namespace ashwa::cli {

void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& fn)
{
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
    if (threads == 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_lock;
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) {
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard lock(failure_lock);
                    if (!failure) failure = std::current_exception();
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
}

namespace {

std::string decimal(const Rational& r) { return to_decimal(r); }

std::vector<Rational> range(const Rational& lo, const Rational& hi, const Rational& step)
{
    std::vector<Rational> out;
    for (Rational v = lo; v <= hi; v += step) out.push_back(v);
    return out;
}

std::vector<std::size_t> to_sizes(const std::vector<std::uint64_t>& v)
{
    return {v.begin(), v.end()};
}

}  // namespace

CommitteeSizeOptions CommitteeSizeOptions::defaults()
{
    CommitteeSizeOptions o;
    o.alphas = range(Rational(1, 100), Rational(18, 100), Rational(1, 100));
    o.epsilons = {Rational(2, 10000), Rational(2, 100000), Rational(2, 1000000)};
    return o;
}

std::vector<CommitteeSizeRow> committee_size_table(const CommitteeSizeOptions& options, unsigned parallel)
{
    if (options.alphas.empty() || options.epsilons.empty())
        throw std::invalid_argument("committee-size: alpha and epsilon grids must be nonempty");
    std::vector<CommitteeSizeRow> rows;
    for (const auto& a : options.alphas)
        for (const auto& e : options.epsilons) rows.push_back({a, e, std::nullopt});
    parallel_for(rows.size(), parallel, [&](std::size_t i) {
        rows[i].result = analysis::min_committee_size({rows[i].epsilon, rows[i].alpha, options.max_n});
    });
    std::sort(rows.begin(), rows.end(), [](const auto& x, const auto& y) {
        return x.alpha != y.alpha ? x.alpha < y.alpha : x.epsilon > y.epsilon;
    });
    return rows;
}

void write_committee_size_csv(std::ostream& out, const std::vector<CommitteeSizeRow>& rows, std::size_t max_n)
{
    out << "# schema: committee-size/1\n";
    out << "alpha_A,epsilon,n_csl_min,compromise_prob_at_min\n";
    bool missing = false;
    for (const auto& r : rows) {
        if (r.result) {
            out << fmt::format("{},{},{},{:.6e}\n", decimal(r.alpha), decimal(r.epsilon), r.result->n,
                               r.result->probability);
        } else {
            missing = true;
            out << fmt::format("{},{},none,NA\n", decimal(r.alpha), decimal(r.epsilon));
        }
    }
    if (missing) out << fmt::format("# none: no committee size up to max_n={} meets epsilon\n", max_n);
}

std::vector<TpsRow> tps_sweep(const TpsOptions& options)
{
    if (options.sizes.empty()) throw std::invalid_argument("tps-sweep: no committee sizes");
    std::vector<TpsRow> rows;
    for (auto n : options.sizes) {
        const double t = options.calibrated ? sim::consensus_round_time(n, options.calibration)
                                            : sim::consensus_round_time(n, options.model);
        rows.push_back({n, t, sim::throughput(t, options.block_bytes, options.tx_bytes)});
    }
    std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.committee_size < b.committee_size; });
    return rows;
}

void write_tps_csv(std::ostream& out, const std::vector<TpsRow>& rows)
{
    out << "# schema: tps-sweep/1\n";
    out << "committee_size,block_time,tps\n";
    for (const auto& r : rows) out << fmt::format("{},{:.6f},{:.6f}\n", r.committee_size, r.block_time, r.tps);
}

DeltaOptions DeltaOptions::defaults()
{
    DeltaOptions o;
    o.sign_probabilities = range(Rational(5, 100), Rational(95, 100), Rational(5, 100));
    return o;
}

std::vector<DeltaRow> delta_table(const DeltaOptions& options, unsigned parallel)
{
    std::vector<DeltaRow> rows;
    for (auto n : options.sizes)
        for (const auto& q : options.sign_probabilities) {
            if (q < 0 || q > 1) throw std::invalid_argument("delta: q must lie in [0, 1]");
            rows.push_back({n, bft::supermajority_threshold(n), q, 0, 0, 0});
        }
    parallel_for(rows.size(), parallel, [&](std::size_t i) {
        auto& r = rows[i];
        agents::BeliefModel belief{r.q, 0, r.committee_size};
        r.p_invalid_s1 = agents::p_invalid(belief, agents::Strategy::S1, r.threshold);
        r.p_invalid_s2 = agents::p_invalid(belief, agents::Strategy::S2, r.threshold);
        r.delta = r.p_invalid_s1 - r.p_invalid_s2;
    });
    return rows;
}

void write_delta_csv(std::ostream& out, const std::vector<DeltaRow>& rows)
{
    out << "# schema: delta/1\n";
    out << "committee_size,threshold,q,p_invalid_s1,p_invalid_s2,delta\n";
    for (const auto& r : rows)
        out << fmt::format("{},{},{},{:.12e},{:.12e},{:.12e}\n", r.committee_size, r.threshold, decimal(r.q),
                           to_double(r.p_invalid_s1), to_double(r.p_invalid_s2), to_double(r.delta));
}

NicResult nic_evaluate(const NicOptions& options)
{
    NicResult r;
    if (options.delta_min) {
        r.delta_min = *options.delta_min;
    } else {
        if (options.n_rational == 0) throw std::invalid_argument("nic-check: delta_min needs at least one rational seat");
        if (options.n_rational + options.n_byzantine > options.committee_size)
            throw std::invalid_argument("nic-check: more rational and Byzantine seats than committee seats");
        agents::CommitteeGame game;
        game.params = options.game;
        game.n_byzantine = options.n_byzantine;
        game.n_honest = options.committee_size - options.n_byzantine - options.n_rational;
        game.kappas.assign(options.n_rational, options.game.kappa_r);
        game.alpha_a = options.alpha_a;
        r.delta_min = agents::game_delta_min(game);
    }
    r.report = analysis::nic_check(options.game, options.n_byzantine, options.committee_size, r.delta_min);
    return r;
}

void write_nic_csv(std::ostream& out, const NicResult& result)
{
    const auto& r = result.report;
    out << "# schema: nic-check/1\n";
    out << "condition,pass,margin\n";
    out << fmt::format("faithful_fault_tolerance,{},{}\n", r.fault_tolerance ? 1 : 0, r.fault_margin);
    out << fmt::format("maximum_payload,{},{}\n", r.maximum_payload ? 1 : 0, to_double(r.payload_slack));
    out << fmt::format("minimum_reward,{},{}\n", r.minimum_reward ? 1 : 0, to_double(r.reward_slack));
    out << fmt::format("nic,{},\n", r.nic() ? 1 : 0);
    out << fmt::format("# delta_min={:.12e}\n", to_double(result.delta_min));
    if (r.degenerate_payload) out << "# degenerate: c_val is zero with phi positive; payload bound holds vacuously\n";
}

agents::GameParams load_game(IniDocument& doc)
{
    agents::GameParams g;
    if (auto v = doc.rational("game", "reward")) g.reward = *v;
    if (auto v = doc.rational("game", "c_mine")) g.c_mine = *v;
    if (auto v = doc.rational("game", "c_val")) g.c_val = *v;
    if (auto v = doc.rational("game", "phi")) g.phi = *v;
    if (auto v = doc.integer("game", "n_tx")) g.n_tx = *v;
    if (auto v = doc.rational("game", "kappa_r")) g.kappa_r = *v;
    try {
        g.validate();
    } catch (const std::invalid_argument& e) {
        doc.fail("game", "n_tx", e.what());
    }
    return g;
}

CommitteeSizeOptions load_committee_size(IniDocument& doc)
{
    auto o = CommitteeSizeOptions::defaults();
    if (auto v = doc.rational_list("committee-size", "alphas")) o.alphas = *v;
    if (auto v = doc.rational_list("committee-size", "epsilons")) o.epsilons = *v;
    if (auto v = doc.integer("committee-size", "max_n")) o.max_n = *v;
    for (const auto& a : o.alphas)
        if (a < 0 || a >= 1) doc.fail("committee-size", "alphas", "alpha_A must lie in [0, 1)");
    for (const auto& e : o.epsilons)
        if (e <= 0 || e >= 1) doc.fail("committee-size", "epsilons", "epsilon must lie in (0, 1)");
    if (o.max_n < analysis::kMinCommitteeSize) doc.fail("committee-size", "max_n", "must be at least 4");
    return o;
}

namespace {

sim::LatencyModel load_latency_model(IniDocument& doc)
{
    sim::LatencyModel m;
    if (auto v = doc.real("latency", "base")) m.base = *v;
    if (auto v = doc.real("latency", "per_message")) m.per_message = *v;
    if (auto v = doc.real("latency", "quadratic")) m.quadratic = *v;
    if (m.base < 0 || m.per_message < 0 || m.quadratic < 0) doc.fail("latency", "base", "terms must be non-negative");
    return m;
}

/// "reference" or a list of "size:seconds" pairs.
std::optional<sim::Calibration> load_calibration(IniDocument& doc)
{
    const auto mode = doc.text("latency", "mode").value_or("model");
    const auto table = doc.text("latency", "calibration");
    if (mode == "model") {
        if (table) doc.fail("latency", "calibration", "only meaningful with mode = calibration");
        return std::nullopt;
    }
    if (mode != "calibration") doc.fail("latency", "mode", "expected 'model' or 'calibration'");
    if (!table || *table == "reference") return sim::reference_block_times();
    sim::Calibration cal;
    std::string item;
    std::istringstream in(*table);
    while (std::getline(in, item, ',')) {
        const auto colon = item.find(':');
        try {
            if (colon == std::string::npos) throw std::invalid_argument(item);
            const auto n = std::stoul(item.substr(0, colon));
            const auto t = std::stod(item.substr(colon + 1));
            if (n == 0 || !(t > 0)) throw std::invalid_argument(item);
            cal[n] = t;
        } catch (const std::exception&) {
            doc.fail("latency", "calibration", "expected 'size:seconds' pairs, got '" + item + "'");
        }
    }
    if (cal.empty()) doc.fail("latency", "calibration", "empty table");
    return cal;
}

}  // namespace

TpsOptions load_tps(IniDocument& doc)
{
    TpsOptions o;
    if (auto v = doc.integer_list("tps-sweep", "sizes")) o.sizes = to_sizes(*v);
    if (auto v = doc.boolean("tps-sweep", "calibrated")) o.calibrated = *v;
    if (auto v = doc.integer("tps-sweep", "block_bytes")) o.block_bytes = *v;
    if (auto v = doc.integer("tps-sweep", "tx_bytes")) o.tx_bytes = *v;
    if (o.tx_bytes == 0) doc.fail("tps-sweep", "tx_bytes", "must be positive");
    for (auto n : o.sizes)
        if (n == 0) doc.fail("tps-sweep", "sizes", "committee sizes must be positive");
    return o;
}

DeltaOptions load_delta(IniDocument& doc)
{
    auto o = DeltaOptions::defaults();
    if (auto v = doc.integer_list("delta", "sizes")) o.sizes = to_sizes(*v);
    if (auto v = doc.rational_list("delta", "q")) o.sign_probabilities = *v;
    for (auto n : o.sizes)
        if (n < 1) doc.fail("delta", "sizes", "committee sizes must be positive");
    for (const auto& q : o.sign_probabilities)
        if (q < 0 || q > 1) doc.fail("delta", "q", "q must lie in [0, 1]");
    return o;
}

NicOptions load_nic(IniDocument& doc)
{
    NicOptions o;
    if (auto v = doc.integer("nic", "committee_size")) o.committee_size = *v;
    if (auto v = doc.integer("nic", "n_byzantine")) o.n_byzantine = *v;
    if (auto v = doc.integer("nic", "n_rational")) o.n_rational = *v;
    if (auto v = doc.rational("nic", "alpha_a")) o.alpha_a = *v;
    if (auto v = doc.rational("nic", "delta_min")) o.delta_min = *v;
    if (o.committee_size < 1) doc.fail("nic", "committee_size", "must be positive");
    if (o.alpha_a < 0 || o.alpha_a > 1) doc.fail("nic", "alpha_a", "must lie in [0, 1]");
    return o;
}

sim::SessionConfig load_session(IniDocument& doc)
{
    sim::SessionConfig c;
    const std::string s = "session";
    if (auto v = doc.integer(s, "seed")) c.seed = *v;
    if (auto v = doc.integer(s, "committee_size")) c.committee_size = *v;
    if (auto v = doc.integer(s, "n_honest")) c.n_honest = *v;
    if (auto v = doc.integer(s, "n_rational")) c.n_rational = *v;
    if (auto v = doc.integer(s, "n_byzantine")) c.n_byzantine = *v;
    if (auto v = doc.real_list(s, "alphas")) c.alphas = *v;
    if (auto v = doc.rational_list(s, "kappas")) c.kappas = *v;
    if (auto v = doc.rational(s, "belief_alpha")) c.belief_alpha = *v;
    if (auto v = doc.rational(s, "belief_rho")) c.belief_rho = *v;
    if (auto v = doc.integer(s, "block_bytes")) c.block_bytes = *v;
    if (auto v = doc.integer(s, "tx_bytes")) c.tx_bytes = *v;
    if (auto v = doc.integer(s, "duration_rounds")) c.duration_rounds = *v;
    if (auto v = doc.real(s, "tx_rate")) c.tx_rate = *v;
    if (auto v = doc.integer(s, "accounts")) c.accounts = *v;
    if (auto v = doc.integer(s, "fee")) c.fee = *v;
    if (auto v = doc.integer(s, "block_reward")) c.block_reward = *v;
    if (auto v = doc.text(s, "byzantine_mode")) {
        try {
            c.byzantine_mode = sim::parse_byzantine_mode(*v);
        } catch (const sim::ConfigError& e) {
            doc.fail(s, "byzantine_mode", e.what());
        }
    }
    if (auto v = doc.boolean(s, "shuffle_seats")) c.shuffle_seats = *v;
    if (auto v = doc.boolean(s, "trace_messages")) c.trace_messages = *v;
    if (auto v = doc.integer(s, "liveness_slack")) c.liveness_slack = *v;

    c.game = load_game(doc);
    if (auto v = doc.integer("acl", "difficulty")) c.acl.difficulty = static_cast<std::uint32_t>(*v);
    if (auto v = doc.integer("acl", "finality_depth")) c.acl.finality_depth = *v;
    if (auto v = doc.real("acl", "expected_block_interval")) c.acl.expected_block_interval = *v;
    if (auto v = doc.integer("acl", "max_nonce_attempts")) c.acl.max_nonce_attempts = *v;
    c.latency = load_latency_model(doc);
    c.calibration = load_calibration(doc);

    try {
        c.validate();
    } catch (const sim::ConfigError& e) {
        const std::string what = e.what();
        std::string key = "committee_size";
        for (const char* k : {"alphas", "kappas", "duration_rounds", "tx_rate", "accounts", "belief_alpha"})
            if (what.find(k) != std::string::npos) key = k;
        doc.fail(s, key, what);
    }
    return c;
}

namespace {

struct Experiment {
    CommitteeSizeOptions committee_size;
    TpsOptions tps;
    DeltaOptions delta;
    NicOptions nic;
    sim::SessionConfig session;
    std::uint64_t runs = 1;
    std::optional<std::string> trace_path;
};

Experiment load_experiment(const std::optional<std::string>& path)
{
    IniDocument doc;
    if (path) {
        doc = IniDocument::load(*path);
    } else {
        std::istringstream empty;
        doc = IniDocument::parse(empty, "<defaults>");
    }
    Experiment e;
    e.committee_size = load_committee_size(doc);
    e.tps = load_tps(doc);
    e.delta = load_delta(doc);
    e.nic = load_nic(doc);
    e.session = load_session(doc);
    e.nic.game = e.session.game;
    e.tps.model = e.session.latency;
    if (e.session.calibration) e.tps.calibration = *e.session.calibration;
    if (auto v = doc.integer("session", "runs")) e.runs = *v;
    if (e.runs < 1) doc.fail("session", "runs", "must be at least 1");
    e.trace_path = doc.text("session", "trace");
    doc.finish();
    return e;
}

class Output {
public:
    explicit Output(const std::string& path)
    {
        if (path == "-") return;
        file_.open(path);
        if (!file_) throw ConfigError(path + ": cannot open output for writing");
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

std::string trace_file(const Experiment& e, const ExperimentSpec& spec, std::uint64_t seed)
{
    std::string base = e.trace_path ? *e.trace_path : (spec.out_path == "-" ? "" : spec.out_path + ".trace");
    if (base.empty() || e.runs == 1) return base;
    return base + "." + std::to_string(seed);
}

int cmd_simulate(const Experiment& e, const ExperimentSpec& spec, std::ostream& err)
{
    const std::uint64_t first_seed = spec.seed.value_or(e.session.seed);
    std::vector<sim::SessionConfig> configs(e.runs, e.session);
    for (std::uint64_t i = 0; i < e.runs; ++i) configs[i].seed = first_seed + i;
    std::vector<sim::SessionResult> results(e.runs);
    parallel_for(configs.size(), spec.parallel, [&](std::size_t i) { results[i] = sim::run_session(configs[i]); });

    Output out(spec.out_path);
    sim::write_metrics_header(out.stream());
    int code = kExitOk;
    for (std::size_t i = 0; i < results.size(); ++i) {
        const auto& r = results[i];
        sim::write_metrics_row(out.stream(), configs[i], r.metrics);
        if (const auto path = trace_file(e, spec, configs[i].seed); !path.empty()) {
            std::ofstream trace(path);
            if (!trace) throw ConfigError(path + ": cannot open trace for writing");
            bft::write_trace(trace, r.trace);
        }
        if (r.metrics.safety_violated()) {
            code = kExitViolation;
            for (const auto& v : r.metrics.violations)
                err << fmt::format("seed {}: safety violation: {}\n", configs[i].seed, v);
        }
    }
    return code;
}

}  // namespace

int run_command(const ExperimentSpec& spec, std::ostream& err)
{
    try {
        const auto e = load_experiment(spec.config_path);
        if (spec.command == "committee-size") {
            const auto rows = committee_size_table(e.committee_size, spec.parallel);
            Output out(spec.out_path);
            write_committee_size_csv(out.stream(), rows, e.committee_size.max_n);
        } else if (spec.command == "tps-sweep") {
            Output out(spec.out_path);
            write_tps_csv(out.stream(), tps_sweep(e.tps));
        } else if (spec.command == "delta") {
            const auto rows = delta_table(e.delta, spec.parallel);
            Output out(spec.out_path);
            write_delta_csv(out.stream(), rows);
        } else if (spec.command == "nic-check") {
            Output out(spec.out_path);
            write_nic_csv(out.stream(), nic_evaluate(e.nic));
        } else if (spec.command == "simulate") {
            return cmd_simulate(e, spec, err);
        } else {
            err << "unknown command '" << spec.command << "'\n";
            return kExitUsage;
        }
    } catch (const ConfigError& ex) {
        err << "error: " << ex.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& ex) {
        err << "error: " << ex.what() << '\n';
        return kExitUsage;
    }
    return kExitOk;
}

}  // namespace ashwa::cli
