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

#include "qepi/report.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>

#include "qepi/error.hpp"

namespace qepi {

using nlohmann::json;

namespace {

std::string format_double(double v) {
    if (!std::isfinite(v)) {
        return "null";
    }
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    std::string s(buf);
    if (s.find_first_of(".eE") == std::string::npos) {
        s += ".0";
    }
    return s;
}

void render_into(const json &j, std::string &out) {
    switch (j.type()) {
    case json::value_t::object: {
        out += '{';
        bool first = true;
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (!first) out += ',';
            first = false;
            out += json(it.key()).dump();
            out += ':';
            render_into(it.value(), out);
        }
        out += '}';
        break;
    }
    case json::value_t::array: {
        out += '[';
        bool first = true;
        for (const auto &v : j) {
            if (!first) out += ',';
            first = false;
            render_into(v, out);
        }
        out += ']';
        break;
    }
    case json::value_t::number_float: out += format_double(j.get<double>()); break;
    default: out += j.dump(); break;
    }
}

json double_map(const std::map<std::string, double> &m) {
    json j = json::object();
    for (const auto &[k, v] : m) j[k] = v;
    return j;
}

std::map<std::string, double> double_map_from(const json &j) {
    std::map<std::string, double> m;
    for (auto it = j.begin(); it != j.end(); ++it) {
        m[it.key()] = it.value().is_null() ? std::nan("") : it.value().get<double>();
    }
    return m;
}

template <class F>
auto guarded(const char *what, F &&f) -> decltype(f()) {
    try {
        return f();
    } catch (const json::exception &e) {
        throw Error(ErrorKind::ParseFailure, std::string(what) + ": " + e.what());
    }
}

} // namespace

RunManifest default_manifest(std::string command, const TrialConfig &config) {
    RunManifest m;
    m.command = std::move(command);
    m.config = config;
    m.notes["measurement_family"] = "rank-1 projective, Haar basis, d_E outcomes";
    m.notes["tau_sampling"] = "uniform on [0,1]; trials 0,1,2 forced to 0, 1/2, 1";
    m.notes["conjecture_channel"] =
        "(U_tau on X1X2) (x) I_E, trace X2; d_E=1 samples rho_X1 (x) rho_X2";
    m.notes["state_sampler"] = config.state_kind.to_string() +
                               " (pure: normalized complex Gaussian; ginibre: "
                               "Hilbert-Schmidt GG^dagger/Tr)";
    return m;
}

json to_json(const TrialConfig &c) {
    return json{{"dim", c.dim},
                {"env_dim1", c.env_dim1},
                {"env_dim2", c.env_dim2},
                {"tau", c.tau.to_string()},
                {"kappa", c.kappa.to_string()},
                {"state_kind", c.state_kind.to_string()},
                {"trials", c.trials},
                {"seed", c.seed},
                {"tolerance", c.tolerance},
                {"exploratory_kappa", c.exploratory_kappa},
                {"min_form", c.min_form},
                {"optimizer",
                 {{"restarts", c.optimizer.restarts},
                  {"refine_steps", c.optimizer.refine_steps},
                  {"step_scale", c.optimizer.step_scale}}}};
}

TrialConfig config_from_json(const json &j) {
    return guarded("config", [&] {
        TrialConfig c;
        c.dim = j.at("dim").get<std::size_t>();
        c.env_dim1 = j.at("env_dim1").get<std::size_t>();
        c.env_dim2 = j.at("env_dim2").get<std::size_t>();
        c.tau = TauMode::parse(j.at("tau").get<std::string>());
        c.kappa = KappaMode::parse(j.at("kappa").get<std::string>());
        c.state_kind = StateSampler::parse(j.at("state_kind").get<std::string>());
        c.trials = j.at("trials").get<std::size_t>();
        c.seed = j.at("seed").get<std::uint64_t>();
        c.tolerance = j.at("tolerance").get<double>();
        c.exploratory_kappa = j.at("exploratory_kappa").get<bool>();
        c.min_form = j.at("min_form").get<bool>();
        const json &o = j.at("optimizer");
        c.optimizer.restarts = o.at("restarts").get<std::size_t>();
        c.optimizer.refine_steps = o.at("refine_steps").get<std::size_t>();
        c.optimizer.step_scale = o.at("step_scale").get<double>();
        return c;
    });
}

json to_json(const RunManifest &m) {
    return json{{"type", "manifest"},      {"command", m.command}, {"config", to_json(m.config)},
                {"version", m.version},    {"rng", m.rng},         {"log_base", m.log_base},
                {"timestamp", m.timestamp}, {"notes", m.notes}};
}

RunManifest manifest_from_json(const json &j) {
    return guarded("manifest", [&] {
        if (j.at("type") != "manifest") {
            throw Error(ErrorKind::ParseFailure, "expected a manifest line");
        }
        RunManifest m;
        m.command = j.at("command").get<std::string>();
        m.config = config_from_json(j.at("config"));
        m.version = j.at("version").get<std::string>();
        m.rng = j.at("rng").get<std::string>();
        m.log_base = j.at("log_base").get<std::string>();
        m.timestamp = j.at("timestamp").get<std::string>();
        m.notes = j.value("notes", std::map<std::string, std::string>{});
        return m;
    });
}

json to_json(const TrialRecord &r, bool with_timing) {
    json j{{"type", "trial"},
           {"experiment", std::string(to_string(r.experiment))},
           {"index", r.index},
           {"tau", r.tau},
           {"kappa", r.kappa},
           {"slacks", double_map(r.slacks)},
           {"residuals", double_map(r.residuals)},
           {"diagnostics", double_map(r.diagnostics)},
           {"negligible_outcomes", r.negligible_outcomes},
           {"candidate", r.candidate},
           {"pass", r.pass}};
    if (with_timing) j["wall_seconds"] = r.wall_seconds;
    return j;
}

TrialRecord record_from_json(const json &j) {
    return guarded("trial record", [&] {
        if (j.at("type") != "trial") {
            throw Error(ErrorKind::ParseFailure, "expected a trial line");
        }
        TrialRecord r;
        r.experiment = parse_experiment(j.at("experiment").get<std::string>());
        r.index = j.at("index").get<std::size_t>();
        r.tau = j.at("tau").get<double>();
        r.kappa = j.at("kappa").get<std::vector<double>>();
        r.slacks = double_map_from(j.at("slacks"));
        r.residuals = double_map_from(j.at("residuals"));
        r.diagnostics = double_map_from(j.value("diagnostics", json::object()));
        r.negligible_outcomes = j.value("negligible_outcomes", std::size_t{0});
        r.candidate = j.value("candidate", false);
        r.pass = j.at("pass").get<bool>();
        r.wall_seconds = j.value("wall_seconds", 0.0);
        return r;
    });
}

json to_json(const Summary &s) {
    return json{{"type", "summary"},
                {"trials", s.trials},
                {"violations", s.violations},
                {"candidates", s.candidates},
                {"negligible_outcomes", s.negligible_outcomes},
                {"min_slack", double_map(s.min_slack)},
                {"min_diagnostic", double_map(s.min_diagnostic)},
                {"max_residual", s.max_residual},
                {"max_residuals", double_map(s.max_residuals)},
                {"histogram", {{"edges", s.histogram.edges}, {"counts", s.histogram.counts}}}};
}

Summary summary_from_json(const json &j) {
    return guarded("summary", [&] {
        if (j.at("type") != "summary") {
            throw Error(ErrorKind::ParseFailure, "expected a summary line");
        }
        Summary s;
        s.trials = j.at("trials").get<std::size_t>();
        s.violations = j.at("violations").get<std::size_t>();
        s.candidates = j.value("candidates", std::size_t{0});
        s.negligible_outcomes = j.value("negligible_outcomes", std::size_t{0});
        s.min_slack = double_map_from(j.at("min_slack"));
        s.min_diagnostic = double_map_from(j.value("min_diagnostic", json::object()));
        s.max_residual = j.at("max_residual").get<double>();
        s.max_residuals = double_map_from(j.value("max_residuals", json::object()));
        s.histogram.edges = j.at("histogram").at("edges").get<std::vector<double>>();
        s.histogram.counts = j.at("histogram").at("counts").get<std::vector<std::size_t>>();
        return s;
    });
}

std::string render_line(const json &j) {
    std::string out;
    render_into(j, out);
    return out;
}

std::string render_run(const RunManifest &manifest, std::span<const TrialRecord> records,
                       bool with_timing) {
    std::string out = render_line(to_json(manifest));
    out += '\n';
    for (const TrialRecord &r : records) {
        out += render_line(to_json(r, with_timing));
        out += '\n';
    }
    const Summary summary = records.empty() ? empty_summary() : summarize(records);
    json sj = to_json(summary);
    sj["metadata"] = {{"rng", manifest.rng},
                      {"log_base", manifest.log_base},
                      {"version", manifest.version},
                      {"state_sampler", manifest.config.state_kind.to_string()}};
    if (!records.empty()) {
        std::map<std::string, std::pair<std::size_t, std::size_t>> counts;
        for (const TrialRecord &r : records) {
            auto &[trials, violations] = counts[std::string(to_string(r.experiment))];
            ++trials;
            violations += r.pass ? 0 : 1;
        }
        json by = json::object();
        for (const auto &[name, c] : counts) {
            by[name] = {{"trials", c.first}, {"violations", c.second}};
        }
        sj["by_experiment"] = by;
    }
    out += render_line(sj);
    out += '\n';
    return out;
}

void emit(const RunManifest &manifest, std::span<const TrialRecord> records,
          const std::filesystem::path &out, bool with_timing) {
    const std::string text = render_run(manifest, records, with_timing);
    std::ofstream os(out, std::ios::binary | std::ios::trunc);
    if (!os) {
        throw Error(ErrorKind::IoFailure, out.string() + ": " + std::strerror(errno));
    }
    os << text;
    os.flush();
    if (!os) {
        throw Error(ErrorKind::IoFailure, out.string() + ": write failed: " + std::strerror(errno));
    }
}

RunFile parse_run(const std::string &text) {
    std::istringstream is(text);
    std::string line;
    std::vector<json> lines;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        lines.push_back(guarded("jsonl line", [&] { return json::parse(line); }));
    }
    if (lines.size() < 2) {
        throw Error(ErrorKind::ParseFailure, "run file needs a manifest and a summary line");
    }
    RunFile run;
    run.manifest = manifest_from_json(lines.front());
    for (std::size_t i = 1; i + 1 < lines.size(); ++i) {
        run.records.push_back(record_from_json(lines[i]));
    }
    run.summary = summary_from_json(lines.back());
    return run;
}

RunFile read_run(const std::filesystem::path &in) {
    std::ifstream is(in, std::ios::binary);
    if (!is) {
        throw Error(ErrorKind::IoFailure, in.string() + ": " + std::strerror(errno));
    }
    std::ostringstream ss;
    ss << is.rdbuf();
    return parse_run(ss.str());
}

} // namespace qepi
