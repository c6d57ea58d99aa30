// Copyright 2026 The qudit-epi Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qepi/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <iostream>
#include <optional>

#include "CLI11.hpp"

#include "qepi/error.hpp"
#include "qepi/report.hpp"

namespace qepi {

namespace {

struct Options {
    std::size_t dim = 2;
    std::size_t env_dim1 = 2;
    std::size_t env_dim2 = 2;
    std::size_t trials = 100;
    std::string tau = "random";
    std::string kappa = "grid";
    std::uint64_t seed = kDefaultSeed;
    double tol = 1e-9;
    std::string out = "-";
    int parallel = 0;
    std::string state_kind = "ginibre";
    bool exploratory_kappa = false;
    bool skip_min_form = false;
    bool timing = false;
    std::string timestamp;
};

void add_common(CLI::App &cmd, Options &o) {
    cmd.add_option("--dim", o.dim, "qudit dimension d (2..6)")->capture_default_str();
    cmd.add_option("--env-dim1", o.env_dim1, "dimension of E1 (1..4); E for search-conjecture")
        ->capture_default_str();
    cmd.add_option("--env-dim2", o.env_dim2, "dimension of E2 (1..4)")->capture_default_str();
    cmd.add_option("--trials", o.trials, "trials per experiment")->capture_default_str();
    cmd.add_option("--tau", o.tau, "'random' or a value in [0,1]")->capture_default_str();
    cmd.add_option("--kappa", o.kappa, "'max', 'grid' or a value >= 0")->capture_default_str();
    cmd.add_option("--seed", o.seed, "master seed")->capture_default_str();
    cmd.add_option("--tol", o.tol, "slack tolerance")->capture_default_str();
    cmd.add_option("--out", o.out, "JSONL destination, '-' for stdout")->capture_default_str();
    cmd.add_option("--parallel", o.parallel,
                   "worker threads, 0 = all cores (QUDIT_EPI_THREADS overrides)")
        ->capture_default_str();
    cmd.add_option("--state-kind", o.state_kind, "'ginibre', 'pure' or 'rank-k:K'")
        ->capture_default_str();
    cmd.add_flag("--exploratory-kappa", o.exploratory_kappa,
                 "allow kappa > 1/(ln d)^2; those checks become diagnostics");
    cmd.add_flag("--skip-min-form", o.skip_min_form,
                 "skip the optimizer-based diagnostic in theorem trials");
    cmd.add_flag("--timing", o.timing, "include per-trial wall time in records");
    cmd.add_option("--timestamp", o.timestamp,
                   "manifest timestamp: ISO-8601 text or 'now' (default: SOURCE_DATE_EPOCH or epoch 0)");
}

std::string iso_utc(std::time_t t) {
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string resolve_timestamp(const std::string &flag) {
    if (flag == "now") {
        return iso_utc(std::chrono::system_clock::to_time_t(std::chrono::system_clock::now()));
    }
    if (!flag.empty()) return flag;
    if (const char *epoch = std::getenv("SOURCE_DATE_EPOCH")) {
        char *end = nullptr;
        const long long v = std::strtoll(epoch, &end, 10);
        if (end != epoch && *end == '\0') return iso_utc(static_cast<std::time_t>(v));
    }
    return iso_utc(0);
}

int resolve_threads(int flag) {
    if (const char *env = std::getenv("QUDIT_EPI_THREADS")) {
        char *end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 0) return static_cast<int>(v);
    }
    return flag;
}

TrialConfig build_config(const Options &o) {
    TrialConfig c;
    c.dim = o.dim;
    c.env_dim1 = o.env_dim1;
    c.env_dim2 = o.env_dim2;
    c.trials = o.trials;
    c.tau = TauMode::parse(o.tau);
    c.kappa = KappaMode::parse(o.kappa);
    c.seed = o.seed;
    c.tolerance = o.tol;
    c.state_kind = StateSampler::parse(o.state_kind);
    c.exploratory_kappa = o.exploratory_kappa;
    c.min_form = !o.skip_min_form;
    c.optimizer.seed = o.seed;
    c.validate();
    return c;
}

std::vector<Experiment> experiments_for(const std::string &command) {
    if (command == "verify-lemma") return {Experiment::Lemma};
    if (command == "verify-theorem") return {Experiment::Theorem};
    if (command == "verify-qepi") return {Experiment::Qepi};
    if (command == "concavity-scan") return {Experiment::Concavity};
    if (command == "search-conjecture") return {Experiment::Conjecture};
    return {Experiment::Lemma, Experiment::Theorem, Experiment::Qepi, Experiment::Concavity,
            Experiment::Conjecture};
}

} // namespace

int dispatch(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Randomized checks of entropy power inequalities for the qudit partial swap",
                 "qudit_epi"};
    app.require_subcommand(1);
    Options opts;
    const char *commands[][2] = {
        {"verify-lemma", "conditional output identity and majorization under local measurements"},
        {"verify-theorem", "conditional entropy power inequality, per measurement and min-form"},
        {"verify-qepi", "unconditional entropy power inequality and spectrum majorization"},
        {"concavity-scan", "midpoint concavity of exp(kappa H) on the simplex"},
        {"search-conjecture", "counterexample search for the entropy-conditioned inequality"},
        {"all", "every experiment above with one configuration"},
    };
    for (const auto &c : commands) {
        add_common(*app.add_subcommand(c[0], c[1]), opts);
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        err << app.help();
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << e.what() << "\n";
        const auto subs = app.get_subcommands();
        err << (subs.empty() ? app.help() : subs.front()->help());
        return kExitUsage;
    }
    const std::string command = app.get_subcommands().front()->get_name();

    TrialConfig config;
    try {
        config = build_config(opts);
    } catch (const Error &e) {
        err << "qudit_epi " << command << ": " << e.what() << "\n";
        return kExitUsage;
    }

    RunManifest manifest = default_manifest(command, config);
    manifest.timestamp = resolve_timestamp(opts.timestamp);
    const int threads = resolve_threads(opts.parallel);

    std::vector<TrialRecord> records;
    try {
        for (Experiment e : experiments_for(command)) {
            auto batch = run_batch(e, config, threads);
            records.insert(records.end(), batch.begin(), batch.end());
        }
        if (opts.out == "-") {
            out << render_run(manifest, records, opts.timing);
        } else {
            emit(manifest, records, opts.out, opts.timing);
        }
    } catch (const Error &e) {
        err << "qudit_epi " << command << ": " << e.what() << "\n";
        return kExitUsage;
    }

    const Summary summary = summarize(records);
    err << command << ": " << summary.trials << " trials, " << summary.violations
        << " violations, " << summary.candidates << " candidates, max residual "
        << summary.max_residual << "\n";
    for (const auto &[name, v] : summary.min_slack) {
        err << "  min " << name << " = " << v << "\n";
    }
    return summary.violations > 0 ? kExitFinding : kExitOk;
}

} // namespace qepi
