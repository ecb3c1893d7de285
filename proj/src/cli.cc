// Copyright 2026 The qswitch Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qswitch/cli.h"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qswitch/bb84_protocol.h"
#include "qswitch/depol_switch.h"
#include "qswitch/errors.h"
#include "qswitch/pauli_switch.h"
#include "qswitch/switch_bruteforce.h"

namespace qswitch {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr const char *kSweepHelp = R"(CSV columns by mode:
  pauli, pauli-random  n,p0,p1,p2,p3,pn,pn_class,lambda,mu,nu,capacity_composite,
                       capacity_switch,delta_c,coherent_composite,coherent_switch,delta_i
  pauli-edges          edge,n,p0,p1,p2,p3,pn,pn_zero,pn_class,class_zero
  depol                d,n,p,pn,lambda1,lambda2,capacity_composite,capacity_switch,delta_c
  bb84                 q,composite_error_rate,raw_upper_bound,composite_upper_bound,
                       switch_coherent_info,advantage
Rows come in grid order. Lines starting with '#' carry the tool version and
the configuration. Numbers have 12 significant digits; nu and lambda2 are
empty when P_n = 0.)";

struct Options {
    std::string spec;
    int n = 2;
    std::string method = "closed";
    std::uint64_t cap = 10'000'000;
    std::uint64_t seed = 7;
    double tolerance = 1e-10;
    double perturb = 0;

    std::string mode;
    std::string n_list = "2";
    std::string d_list = "2";
    std::string grid = "0:1";
    std::optional<double> step;
    int count = 100;
    std::string out_path = "-";
    std::string format = "csv";

    std::optional<double> q;
};

double round12(double x) {
    double r = std::stod(format_number(x));
    return r == 0 ? 0.0 : r;
}

ordered_json number(double x) { return round12(x); }

ordered_json optional_number(const std::optional<double> &x) { return x ? number(*x) : ordered_json(nullptr); }

PauliChannel pauli_from_rng(std::mt19937_64 &rng) {
    constexpr std::uint64_t kScale = 1'000'000'000;
    std::uniform_int_distribution<std::uint64_t> cut(0, kScale);
    std::array<std::uint64_t, 3> c{cut(rng), cut(rng), cut(rng)};
    std::sort(c.begin(), c.end());
    std::array<std::uint64_t, 4> k{c[0], c[1] - c[0], c[2] - c[1], kScale - c[2]};
    Vec4 p;
    for (int i = 0; i < 4; ++i) p[i] = static_cast<double>(k[i]) / static_cast<double>(kScale);
    return PauliChannel(p);
}

ChannelSpec load_spec(const Options &o) {
    if (o.spec.empty()) throw DomainError("--spec is required");
    if (o.spec == "random") return random_pauli(o.seed);
    auto first = o.spec.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && o.spec[first] == '{') return parse_channel_spec(o.spec);
    std::ifstream in(o.spec);
    if (!in) throw DomainError("cannot read spec file " + o.spec);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_channel_spec(buf.str());
}

ordered_json spec_json(const ChannelSpec &spec) { return ordered_json::parse(channel_spec_to_json(spec)); }

std::vector<int> parse_int_list(const std::string &text, int lo, int hi, const char *what) {
    std::vector<int> values;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            auto dash = item.find('-', 1);
            int a = std::stoi(item.substr(0, dash));
            int b = dash == std::string::npos ? a : std::stoi(item.substr(dash + 1));
            if (b < a) throw DomainError("");
            for (int v = a; v <= b; ++v) values.push_back(v);
        } catch (const std::exception &) {
            throw DomainError(std::string("bad ") + what + " list: " + text);
        }
    }
    if (values.empty()) throw DomainError(std::string("empty ") + what + " list");
    for (int v : values) {
        if (v < lo || v > hi) {
            throw DomainError(std::string(what) + " must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) +
                              "]");
        }
    }
    return values;
}

// Points lo + (hi - lo) k / count; step must divide the range.
std::vector<double> linear_grid(const std::string &grid, double step) {
    auto colon = grid.find(':');
    double lo, hi;
    try {
        if (colon == std::string::npos) throw DomainError("");
        lo = std::stod(grid.substr(0, colon));
        hi = std::stod(grid.substr(colon + 1));
    } catch (const std::exception &) {
        throw DomainError("--grid must look like lo:hi, got " + grid);
    }
    if (!(lo >= 0 && hi <= 1 && lo <= hi)) throw DomainError("--grid must lie inside [0, 1]");
    if (!(step > 0)) throw DomainError("--step must be positive");
    auto count = std::llround((hi - lo) / step);
    if (std::abs(static_cast<double>(count) * step - (hi - lo)) > 1e-9) {
        throw DomainError("--step must divide the grid range");
    }
    std::vector<double> points;
    for (long long k = 0; k <= count; ++k) {
        points.push_back(count == 0 ? lo : lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(count));
    }
    return points;
}

int simplex_divisions(double step) {
    if (!(step > 0 && step <= 1)) throw DomainError("--step must lie in (0, 1]");
    auto n = std::llround(1 / step);
    if (std::abs(static_cast<double>(n) * step - 1) > 1e-9) throw DomainError("--step must divide 1");
    return static_cast<int>(n);
}

// Evaluates every task on a thread pool and returns the results in task order.
std::vector<ordered_json> run_parallel(const std::vector<std::function<ordered_json()>> &tasks) {
    std::vector<ordered_json> rows(tasks.size());
    std::vector<std::exception_ptr> errors(tasks.size());
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (size_t i = next++; i < tasks.size(); i = next++) {
            try {
                rows[i] = tasks[i]();
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    unsigned threads = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(), 16));
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    }
    for (auto &e : errors)
        if (e) std::rethrow_exception(e);
    return rows;
}

ordered_json pauli_gain_json(const PauliChannel &ch, int n) {
    GainReport g = gain_report(ch, n);
    ordered_json j;
    j["pn"] = number(g.pn);
    j["pn_class"] = n >= 2 ? to_string(pn_zero_classify(ch, n)) : "";
    j["lambda"] = number(g.lambda);
    j["mu"] = number(g.mu);
    j["nu"] = optional_number(g.nu);
    j["capacity_composite"] = number(g.capacity_composite);
    j["capacity_switch"] = number(g.capacity_switch);
    j["delta_c"] = number(g.delta_c);
    j["coherent_composite"] = number(g.coherent_composite);
    j["coherent_switch"] = number(g.coherent_switch);
    j["delta_i"] = number(g.delta_i);
    return j;
}

ordered_json depol_gain_json(int d, double p, int n) {
    DepolBranches b = depol_branches(d, p, n);
    double composite = capacity_depol(d, p, n);
    double switched = capacity_depol_switch(b);
    ordered_json j;
    j["pn"] = number(b.pn);
    j["lambda1"] = number(b.lambda1);
    j["lambda2"] = optional_number(b.lambda2);
    j["capacity_composite"] = number(composite);
    j["capacity_switch"] = number(switched);
    j["delta_c"] = number(switched - composite);
    return j;
}

ordered_json protocol_json(const ProtocolReport &r) {
    ordered_json j;
    j["q"] = number(r.q);
    j["composite_error_rate"] = number(r.composite_error_rate);
    j["raw_upper_bound"] = number(r.raw_upper_bound);
    j["composite_upper_bound"] = number(r.composite_upper_bound);
    j["switch_coherent_info"] = number(r.switch_coherent_info);
    j["advantage"] = r.advantage;
    return j;
}

ordered_json with_prefix(ordered_json prefix, const ordered_json &rest) {
    for (const auto &[k, v] : rest.items()) prefix[k] = v;
    return prefix;
}

ordered_json pauli_point(int n, const Vec4 &p) {
    ordered_json j;
    j["n"] = n;
    for (int i = 0; i < 4; ++i) j["p" + std::to_string(i)] = number(p[i]);
    return j;
}

int cmd_pn(const Options &o, std::ostream &out) {
    ChannelSpec spec = load_spec(o);
    double pn;
    if (o.method == "exact") {
        KrausChannel k = to_kraus(spec);
        pn = pn_exact(copies(k, o.n), PermutationSet::forward_backward(o.n), {.cap = o.cap});
    } else if (auto *pauli = std::get_if<PauliChannel>(&spec)) {
        pn = pn_pauli(*pauli, o.n);
    } else if (auto *depol = std::get_if<DepolChannel>(&spec)) {
        pn = pn_depol(depol->d, depol->p, o.n);
    } else {
        throw DomainError("no closed form for kraus channels; use --method exact");
    }
    ordered_json j;
    j["command"] = "pn";
    j["spec"] = spec_json(spec);
    j["n"] = o.n;
    j["method"] = o.method;
    j["pn"] = number(pn);
    out << j.dump(2) << "\n";
    return kExitOk;
}

int cmd_gain(const Options &o, std::ostream &out) {
    ChannelSpec spec = load_spec(o);
    ordered_json j;
    j["command"] = "gain";
    j["spec"] = spec_json(spec);
    j["n"] = o.n;
    if (auto *pauli = std::get_if<PauliChannel>(&spec)) {
        j = with_prefix(j, pauli_gain_json(*pauli, o.n));
    } else if (auto *depol = std::get_if<DepolChannel>(&spec)) {
        j = with_prefix(j, depol_gain_json(depol->d, depol->p, o.n));
    } else {
        throw DomainError("gain needs a pauli or depolarizing spec");
    }
    out << j.dump(2) << "\n";
    return kExitOk;
}

int cmd_verify(const Options &o, std::ostream &out) {
    ChannelSpec spec = load_spec(o);
    CMatrix closed(1, 1);
    double pn_closed;
    if (auto *pauli = std::get_if<PauliChannel>(&spec)) {
        BranchCoeffs b = branch_coeffs(*pauli, o.n);
        b.s[0] += o.perturb;
        b.s[1] -= o.perturb;
        closed = switch_choi_pauli(b);
        pn_closed = b.t[0] + b.t[1] + b.t[2] + b.t[3];
    } else if (auto *depol = std::get_if<DepolChannel>(&spec)) {
        DepolBranches b = depol_branches(depol->d, depol->p, o.n);
        b.lambda1 += o.perturb;
        closed = switch_choi_depol(b);
        pn_closed = b.pn;
    } else {
        throw DomainError("verify needs a pauli or depolarizing spec");
    }
    KrausChannel k = to_kraus(spec);
    SwitchOutput oracle = effective_switch(copies(k, o.n), PermutationSet::forward_backward(o.n),
                                           ControlState::uniform(2), {.cap = o.cap});
    double distance = frobenius_distance(closed, oracle.choi);
    double pn_oracle = pn_from_output(oracle);
    bool pass = distance < o.tolerance && std::abs(pn_closed - pn_oracle) < o.tolerance;

    ordered_json j;
    j["command"] = "verify";
    j["spec"] = spec_json(spec);
    j["n"] = o.n;
    j["tolerance"] = o.tolerance;
    j["choi_distance"] = distance;
    j["pn_closed"] = number(pn_closed);
    j["pn_exact"] = number(pn_oracle);
    j["pn_difference"] = std::abs(pn_closed - pn_oracle);
    j["pass"] = pass;
    out << j.dump(2) << "\n";
    return pass ? kExitOk : kExitVerifyFailed;
}

int cmd_bb84(const Options &o, std::ostream &out) {
    ordered_json j;
    j["command"] = "bb84";
    if (o.q) {
        j = with_prefix(j, protocol_json(protocol_report(*o.q)));
        out << j.dump(2) << "\n";
        return kExitOk;
    }
    double step = o.step.value_or(0.001);
    auto grid = linear_grid(o.grid, step);
    CrossoverScan scan = crossover_scan(grid.front(), grid.back(), step);
    j["grid"] = o.grid;
    j["step"] = step;
    j["points"] = scan.rows.size();
    j["advantage_points"] = std::count_if(scan.rows.begin(), scan.rows.end(), [](auto &r) { return r.advantage; });
    if (scan.low) {
        j["interval"] = {{"grid_low", number(*scan.grid_low)},
                         {"grid_high", number(*scan.grid_high)},
                         {"low", number(*scan.low)},
                         {"high", number(*scan.high)}};
    } else {
        j["interval"] = nullptr;
    }
    out << j.dump(2) << "\n";
    return kExitOk;
}

std::string csv_cell(const ordered_json &v) {
    if (v.is_null()) return "";
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    if (v.is_number_float()) return format_number(v.get<double>());
    if (v.is_number()) return v.dump();
    return v.get<std::string>();
}

int cmd_sweep(const Options &o, std::ostream &out) {
    std::vector<std::function<ordered_json()>> tasks;
    ordered_json config;
    config["mode"] = o.mode;

    if (o.mode == "pauli" || o.mode == "pauli-edges" || o.mode == "pauli-random") {
        auto ns = parse_int_list(o.n_list, 1, kMaxClosedFormN, "n");
        config["n"] = ns;
        std::vector<Vec4> points;
        std::vector<std::string> labels;
        if (o.mode == "pauli-random") {
            if (o.count < 1) throw DomainError("--count must be positive");
            config["count"] = o.count;
            config["seed"] = o.seed;
            std::mt19937_64 rng(o.seed);
            for (int i = 0; i < o.count; ++i) points.push_back(pauli_from_rng(rng).p);
        } else {
            double step = o.step.value_or(0.05);
            int div = simplex_divisions(step);
            config["step"] = step;
            if (o.mode == "pauli") {
                for (int a = 0; a <= div; ++a)
                    for (int b = 0; a + b <= div; ++b)
                        for (int c = 0; a + b + c <= div; ++c)
                            points.push_back({double(a) / div, double(b) / div, double(c) / div,
                                              double(div - a - b - c) / div});
            } else {
                for (int i = 0; i < 4; ++i)
                    for (int k = i + 1; k < 4; ++k)
                        for (int s = 0; s <= div; ++s) {
                            Vec4 p{0, 0, 0, 0};
                            p[i] = double(div - s) / div;
                            p[k] = double(s) / div;
                            points.push_back(p);
                            labels.push_back(std::to_string(i) + "-" + std::to_string(k));
                        }
            }
        }
        bool edges = o.mode == "pauli-edges";
        for (int n : ns) {
            for (size_t i = 0; i < points.size(); ++i) {
                Vec4 p = points[i];
                std::string label = edges ? labels[i] : "";
                tasks.push_back([p, n, edges, label] {
                    PauliChannel ch(p);
                    if (!edges) return with_prefix(pauli_point(n, p), pauli_gain_json(ch, n));
                    double pn = pn_pauli(ch, n);
                    ordered_json j;
                    j["edge"] = label;
                    j = with_prefix(j, pauli_point(n, p));
                    j["pn"] = number(pn);
                    j["pn_zero"] = pn < 1e-12;
                    if (n >= 2) {
                        PnZeroClass c = pn_zero_classify(ch, n);
                        j["pn_class"] = to_string(c);
                        j["class_zero"] = c != PnZeroClass::Nonzero;
                    } else {
                        j["pn_class"] = "";
                        j["class_zero"] = true;
                    }
                    return j;
                });
            }
        }
    } else if (o.mode == "depol") {
        auto ns = parse_int_list(o.n_list, 1, kMaxScanN, "n");
        auto ds = parse_int_list(o.d_list, 2, 64, "d");
        double step = o.step.value_or(0.01);
        auto ps = linear_grid(o.grid, step);
        config["d"] = ds;
        config["n"] = ns;
        config["grid"] = o.grid;
        config["step"] = step;
        for (int d : ds)
            for (int n : ns)
                for (double p : ps)
                    tasks.push_back([d, n, p] {
                        ordered_json j;
                        j["d"] = d;
                        j["n"] = n;
                        j["p"] = number(p);
                        return with_prefix(j, depol_gain_json(d, p, n));
                    });
    } else if (o.mode == "bb84") {
        double step = o.step.value_or(0.001);
        auto qs = linear_grid(o.grid, step);
        config["grid"] = o.grid;
        config["step"] = step;
        for (double q : qs) tasks.push_back([q] { return protocol_json(protocol_report(q)); });
    } else {
        throw DomainError("unknown sweep mode " + o.mode);
    }
    config["format"] = o.format;

    std::vector<ordered_json> rows = run_parallel(tasks);

    std::ofstream file;
    std::ostream *sink = &out;
    if (o.out_path != "-") {
        file.open(o.out_path);
        if (!file) throw DomainError("cannot open " + o.out_path + " for writing");
        sink = &file;
    }
    if (o.format == "json") {
        ordered_json doc;
        doc["tool"] = "qswitch";
        doc["version"] = kVersion;
        doc["config"] = config;
        doc["rows"] = rows;
        *sink << doc.dump(2) << "\n";
    } else {
        *sink << "# qswitch " << kVersion << "\n# config: " << config.dump() << "\n";
        if (!rows.empty()) {
            std::string sep;
            for (const auto &[k, v] : rows.front().items()) {
                *sink << sep << k;
                sep = ",";
            }
            *sink << "\n";
        }
        for (const auto &row : rows) {
            std::string sep;
            for (const auto &[k, v] : row.items()) {
                *sink << sep << csv_cell(v);
                sep = ",";
            }
            *sink << "\n";
        }
    }
    sink->flush();
    if (!*sink) throw std::runtime_error("write failed");
    return kExitOk;
}

void add_spec(CLI::App *cmd, Options &o) {
    cmd->add_option("--spec", o.spec, "Channel: JSON file, inline JSON, or 'random' (Pauli, uses --seed)")
        ->required();
    cmd->add_option("--seed", o.seed, "Seed for --spec random")->capture_default_str();
}

}  // namespace

std::string format_number(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

PauliChannel random_pauli(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return pauli_from_rng(rng);
}

int run_cli(std::span<const std::string> args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Causal gain of the quantum SWITCH for Pauli and depolarizing channels", "qswitch"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);
    Options o;

    auto *pn = app.add_subcommand("pn", "P_n for n copies under forward/backward order");
    add_spec(pn, o);
    pn->add_option("--n", o.n, "Number of copies")->required()->check(CLI::Range(1, 64));
    pn->add_option("--method", o.method, "closed or exact (brute-force enumeration)")
        ->check(CLI::IsMember({"closed", "exact"}))
        ->capture_default_str();
    pn->add_option("--cap", o.cap, "Enumeration budget for --method exact")->capture_default_str();

    auto *gain = app.add_subcommand("gain", "Capacities and causal gains as JSON");
    add_spec(gain, o);
    gain->add_option("--n", o.n, "Number of copies")->required()->check(CLI::Range(1, 64));

    auto *sweep = app.add_subcommand("sweep", "Grid evaluation to CSV or JSON");
    sweep->footer(kSweepHelp);
    sweep->add_option("--mode", o.mode, "pauli, pauli-edges, pauli-random, depol or bb84")
        ->required()
        ->check(CLI::IsMember({"pauli", "pauli-edges", "pauli-random", "depol", "bb84"}));
    sweep->add_option("--n", o.n_list, "Copies, e.g. 2,3,4 or 2-8")->capture_default_str();
    sweep->add_option("--d", o.d_list, "Dimensions for depol, e.g. 2-8")->capture_default_str();
    sweep->add_option("--grid", o.grid, "lo:hi range of p (depol) or q (bb84)")->capture_default_str();
    sweep->add_option("--step", o.step, "Grid step (defaults: pauli 0.05, depol 0.01, bb84 0.001)");
    sweep->add_option("--count", o.count, "Points for pauli-random")->capture_default_str();
    sweep->add_option("--seed", o.seed, "Seed for pauli-random")->capture_default_str();
    sweep->add_option("--out", o.out_path, "Output file, '-' for stdout")->capture_default_str();
    sweep->add_option("--format", o.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();

    auto *verify = app.add_subcommand("verify", "Closed form against brute-force enumeration");
    add_spec(verify, o);
    verify->add_option("--n", o.n, "Number of copies")->required()->check(CLI::Range(2, 20));
    verify->add_option("--tolerance", o.tolerance, "Pass threshold")->capture_default_str();
    verify->add_option("--cap", o.cap, "Enumeration budget")->capture_default_str();
    verify->add_option("--perturb", o.perturb, "Shift a closed-form coefficient (negative control)")
        ->group("Testing");

    auto *bb84 = app.add_subcommand("bb84", "Private-communication protocol report or crossover scan");
    bb84->add_option("--q", o.q, "Single error rate");
    bb84->add_option("--grid", o.grid, "lo:hi range of q for the scan")->capture_default_str();
    bb84->add_option("--step", o.step, "Scan step (default 0.001)");

    std::vector<const char *> argv{"qswitch"};
    for (const auto &a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError &e) {
        return app.exit(e, out, err) == 0 ? kExitOk : kExitInvalid;
    }

    try {
        if (*pn) return cmd_pn(o, out);
        if (*gain) return cmd_gain(o, out);
        if (*sweep) return cmd_sweep(o, out);
        if (*verify) return cmd_verify(o, out);
        if (*bb84) return cmd_bb84(o, out);
    } catch (const CapExceeded &e) {
        err << "error: " << e.what() << "\n";
        return kExitCapExceeded;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitInvalid;
}

}  // namespace qswitch
