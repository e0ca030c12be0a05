// Copyright 2026 The qloq authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <chrono>
#include <ctime>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qloq/compress.hpp"
#include "qloq/cost.hpp"
#include "qloq/fixtures.hpp"
#include "qloq/io.hpp"
#include "qloq/loqc.hpp"
#include "qloq/metrics.hpp"
#include "qloq/qsd.hpp"
#include "qloq/sim.hpp"
#include "qloq/vqe.hpp"

namespace {

using namespace qloq;
namespace fs = std::filesystem;

std::string iso_timestamp() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return buf;
}

/// Collects outputs for one run and writes the manifest at the end.
class RunOutputs {
  public:
    RunOutputs(std::string subcommand, std::string out_dir, std::uint64_t seed)
        : subcommand_(std::move(subcommand)), dir_(std::move(out_dir)), seed_(seed) {
        fs::create_directories(dir_);
    }
    void add_input(const std::string& path) { inputs_.push_back(path); }
    std::string write(const std::string& filename, const std::string& contents) {
        const std::string path = (fs::path(dir_) / filename).string();
        write_file(path, contents);
        digests_.emplace_back(filename, digest_hex(contents));
        return path;
    }
    void finish() {
        const json m = run_manifest(subcommand_, inputs_, seed_, digests_, iso_timestamp());
        const std::string path = (fs::path(dir_) / (subcommand_ + "_manifest.json")).string();
        write_file(path, m.dump(2) + "\n");
    }

  private:
    std::string subcommand_, dir_;
    std::uint64_t seed_;
    std::vector<std::string> inputs_;
    std::vector<std::pair<std::string, std::string>> digests_;
};

QloqMap parse_map_spec(const std::string& spec) {
    // "0,1;2,3" -> QLOQ(0,1)(2,3)
    std::vector<std::vector<int>> part;
    std::stringstream groups(spec);
    std::string group;
    while (std::getline(groups, group, ';')) {
        std::vector<int> qs;
        std::stringstream items(group);
        std::string item;
        while (std::getline(items, item, ',')) qs.push_back(std::stoi(item));
        part.push_back(std::move(qs));
    }
    QloqMap map(part);
    auto v = map.validate();
    require(v.empty(), v.empty() ? "" : "bad map spec: " + v.front().message);
    return map;
}

std::vector<int> bound_partition(long long n, long long g) {
    std::vector<int> part;
    long long left = n;
    while (left > 0) {
        part.push_back(static_cast<int>(std::min(left, g)));
        left -= std::min(left, g);
    }
    return part;
}

bool bound_is_estimate(const std::vector<int>& part, long long k) {
    if (k == 0 || part.size() < 3) return false;
    for (std::size_t i = 1; i < part.size(); ++i)
        if (part[i] != part[0]) return true;
    return false;
}

// -- subcommand bodies --------------------------------------------------------

int run_fixtures(const std::string& name, const std::string& out_dir) {
    if (name.empty()) {
        for (const auto& n : fixture_names()) {
            Fixture f = builtin_fixture(n);
            std::cout << n << ": " << f.description;
            if (f.ansatz.param_count > 0) std::cout << " [" << f.ansatz.param_count << " params]";
            if (f.declared_entanglers >= 0)
                std::cout << " [" << f.declared_entanglers << " entanglers]";
            std::cout << "\n";
        }
        return 0;
    }
    Fixture f = builtin_fixture(name);
    RunOutputs run("fixtures", out_dir, 0);
    json j = circuit_to_json(f.ansatz.base, f.ansatz.map);
    j["name"] = f.name;
    j["description"] = f.description;
    j["param_count"] = f.ansatz.param_count;
    if (f.declared_entanglers >= 0) j["entanglers"] = f.declared_entanglers;
    run.write("fixture_" + name + ".json", j.dump(2) + "\n");
    run.finish();
    std::cout << "wrote fixture_" << name << ".json\n";
    return 0;
}

int run_cost(const std::string& circuit_path, const std::string& map_spec, bool aux, bool heur,
             bool strict, const std::string& out_dir) {
    RunOutputs run("cost", out_dir, 0);
    run.add_input(circuit_path);
    ParsedCircuit parsed = parse_circuit(read_file(circuit_path));
    QloqMap map = !map_spec.empty() ? parse_map_spec(map_spec)
                  : parsed.map     ? *parsed.map
                                   : QloqMap::qubit_encoding(parsed.circuit.num_qubits);
    CostOptions opt;
    opt.aux_levels = aux;
    opt.heuristic = heur;
    opt.strict = strict;
    CostReport report = circuit_cost(parsed.circuit, map, opt);
    run.write("cost_report.json", cost_report_to_json(report).dump(2) + "\n");
    run.write("cost_report.csv", cost_report_to_csv(report));
    run.finish();
    std::cout << "total physical entanglers: " << report.total
              << (report.has_unsupported ? " (contains unsupported gates)" : "") << "\n";
    return 0;
}

int run_bounds(long long n, long long g, bool table, const std::string& out_dir) {
    if (table) {
        RunOutputs run("bounds", out_dir, 0);
        CsvBuilder csv({"n", "G1", "G2", "G3"});
        for (int nn = 2; nn <= 6; ++nn) {
            std::vector<std::string> row = {std::to_string(nn)};
            for (int gg = 1; gg <= 3; ++gg) {
                const auto part = bound_partition(nn, gg);
                const long long k = qloq_unitary_lower_bound(part);
                row.push_back(std::to_string(k) + (bound_is_estimate(part, k) ? "*" : ""));
            }
            csv.append_row(row);
        }
        run.write("lower_bounds.csv", csv.str());
        run.finish();
        std::cout << "wrote lower_bounds.csv (* marks procedure estimates)\n";
        return 0;
    }
    const auto part = bound_partition(n, g);
    const long long k = qloq_unitary_lower_bound(part);
    std::cout << k;
    if (bound_is_estimate(part, k))
        std::cout << " (*estimate: the counting procedure leaves a carrier unentangled)";
    std::cout << "\n";
    return 0;
}

int run_qsd(const std::string& unitary_path, int random_n, const std::string& mode, int g,
            bool remap, bool verify, std::uint64_t seed, const std::string& out_dir) {
    RunOutputs run("qsd", out_dir, seed);
    Mat u;
    if (!unitary_path.empty()) {
        run.add_input(unitary_path);
        u = matrix_from_json(json::parse(read_file(unitary_path)));
    } else {
        require(random_n >= 2, "provide --unitary FILE or --random N");
        u = random_unitary(1 << random_n, seed);
    }
    QsdResult result;
    if (remap) {
        require(mode == "qloq", "--remap applies to qloq mode");
        result = synthesize_qsd_with_remap(u, g);
    } else {
        result = synthesize_qsd(u, mode == "qubit" ? QsdMode::Qubit : QsdMode::Qloq,
                                mode == "qubit" ? 2 : g);
    }
    run.write("qsd_circuit.json", physical_to_json(result.circuit).dump() + "\n");
    run.write("qsd_cost.csv", cost_report_to_csv(result.report));
    std::cout << "entanglers: " << result.circuit.entangler_count() << "\n";
    if (verify) {
        double fidelity = 0;
        if (!remap) {
            fidelity = equivalent_up_to_global_phase(circuit_unitary(result.circuit), u, 1e-9)
                           .fidelity;
        } else {
            // compare on the payload subspace (ancilla slots in and out of |0>)
            const QloqMap& map = result.circuit.map;
            int n = 0;
            while ((Eigen::Index(1) << n) < u.rows()) ++n;
            const long dim = 1L << n;
            Mat got(dim, dim);
            for (long col = 0; col < dim; ++col) {
                MixedRadixState probe(map);
                Vec full = Vec::Zero(probe.dim());
                long idx = 0;
                for (int q = 0; q < n; ++q)
                    if ((col >> (n - 1 - q)) & 1) idx |= 1L << map.bit_shift(q);
                full(idx) = 1.0;
                MixedRadixState st(map, full);
                st.apply(result.circuit);
                for (long row = 0; row < dim; ++row) {
                    long ridx = 0;
                    for (int q = 0; q < n; ++q)
                        if ((row >> (n - 1 - q)) & 1) ridx |= 1L << map.bit_shift(q);
                    got(row, col) = st.amplitudes()(ridx);
                }
            }
            fidelity = equivalent_up_to_global_phase(got, u, 1e-9).fidelity;
        }
        const bool ok = fidelity >= 1.0 - 1e-9;
        std::cout << (ok ? "verified" : "VERIFICATION FAILED") << ", fidelity = "
                  << format_double(fidelity, 12) << "\n";
        run.finish();
        return ok ? 0 : 1;
    }
    run.finish();
    return 0;
}

int run_compress(bool fig4, int n_qubits, int max_gates, int step, long trials,
                 std::uint64_t seed, bool table4, bool table5, bool mc, int g, int n,
                 long long big_n, const std::string& out_dir) {
    RunOutputs run("compress", out_dir, seed);
    if (fig4) {
        CsvBuilder csv({"N", "gates", "fraction", "stderr"});
        for (int m = 1; m <= max_gates; m += step) {
            auto est = compressible_fraction(n_qubits, m, trials, seed);
            csv.append_row({std::to_string(n_qubits), std::to_string(m),
                            format_double(est.fraction), format_double(est.stderr_)});
        }
        run.write("compressible_fraction.csv", csv.str());
        run.finish();
        std::cout << "wrote compressible_fraction.csv\n";
        return 0;
    }
    if (table4) {
        CsvBuilder csv({"g", "n", "threshold_N"});
        for (int gg = 2; gg <= 7; ++gg)
            for (int nn = 2; nn <= 9; ++nn) {
                auto t = threshold_scan(gg, nn);
                csv.append_row({std::to_string(gg), std::to_string(nn),
                                t ? std::to_string(*t) : "none"});
            }
        run.write("ratio_thresholds.csv", csv.str());
        run.finish();
        std::cout << "wrote ratio_thresholds.csv\n";
        return 0;
    }
    if (table5) {
        CsvBuilder csv({"g", "n", "R_at_1e12"});
        for (int gg = 1; gg <= 7; ++gg)
            for (int nn = 2; nn <= 9; ++nn)
                csv.append_row({std::to_string(gg), std::to_string(nn),
                                format_double(expected_ratio_closed({gg, nn, 1000000000000LL}))});
        run.write("ratio_asymptotics.csv", csv.str());
        run.finish();
        std::cout << "wrote ratio_asymptotics.csv\n";
        return 0;
    }
    if (mc) {
        auto est = expected_ratio_mc({g, n, big_n}, trials, seed);
        const double closed = expected_ratio_closed({g, n, big_n});
        std::cout << "R_mc = " << format_double(est.ratio) << " +- "
                  << format_double(est.stderr_) << " (closed form "
                  << format_double(closed) << ")\n";
        run.finish();
        return 0;
    }
    std::cout << "R = " << format_double(expected_ratio_closed({g, n, big_n})) << "\n";
    run.finish();
    return 0;
}

int run_metrics(std::string fixtures_arg, bool all, long pairs, int bins, long samples,
                std::uint64_t seed, const std::string& out_dir) {
    std::vector<std::string> names;
    if (all) {
        for (const auto& n : fixture_names())
            if (builtin_fixture(n).ansatz.param_count > 0) names.push_back(n);
    } else {
        std::stringstream ss(fixtures_arg);
        std::string item;
        while (std::getline(ss, item, ',')) names.push_back(item);
    }
    require(!names.empty(), "no fixtures selected (use --fixtures or --all)");
    RunOutputs run("metrics", out_dir, seed);
    SweepSettings settings;
    settings.pairs = pairs;
    settings.bins = bins;
    settings.samples = samples;
    settings.seed = seed;
    auto rows = benchmark_sweep(names, settings);
    CsvBuilder csv({"id", "entanglers", "params", "expr", "ent"});
    for (const auto& r : rows) {
        csv.append_row({r.id, std::to_string(r.entanglers), std::to_string(r.params),
                        format_double(r.expr, 6), format_double(r.ent, 6)});
        std::cout << r.id << ": Expr " << format_double(r.expr, 4) << ", Ent "
                  << format_double(r.ent, 4) << "\n";
    }
    run.write("metrics.csv", csv.str());
    run.finish();
    return 0;
}

int run_vqe(const std::string& hamiltonian_path, const std::string& ansatz_name, long shots,
            std::uint64_t seed, long budget, const std::string& input,
            const std::string& out_dir) {
    RunOutputs run("vqe", out_dir, seed);
    run.add_input(hamiltonian_path);
    PauliHamiltonian h = parse_hamiltonian(read_file(hamiltonian_path));
    Fixture f = builtin_fixture(ansatz_name);
    VqeOptions opt;
    opt.shots_per_group = shots;
    opt.seed = seed;
    opt.budget = budget;
    opt.input_state = input;
    VqeTrace trace = vqe_run(f.ansatz, h, opt);
    CsvBuilder csv({"iteration", "energy", "stderr", "shots"});
    for (const auto& it : trace.iterations)
        csv.append_row({std::to_string(it.index), format_double(it.energy, 12),
                        format_double(it.stderr_, 6), std::to_string(it.shots)});
    run.write("vqe_trace.csv", csv.str());
    run.finish();
    std::cout << "terms: " << h.terms.size() << ", groups: " << h.groups.size() << "\n";
    std::cout << "best energy: " << format_double(trace.best_energy, 12)
              << (trace.converged ? " (converged)" : " (budget exhausted)") << "\n";
    return 0;
}

int run_loqc(bool fig11, int n_max, const std::string& scenarios_path, bool builtin_scenarios,
             const std::string& map_spec, long long entanglers, long long dump_ports,
             const std::string& out_dir) {
    RunOutputs run("loqc", out_dir, 0);
    if (fig11) {
        CsvBuilder csv({"N", "G", "success"});
        for (int g = 1; g <= 3; ++g)
            for (int n = 2; n <= n_max; ++n)
                csv.append_row({std::to_string(n), std::to_string(g),
                                format_double(layer_success(LayerKind::HeraldedKnill, n, g), 12)});
        run.write("heralded_layers.csv", csv.str());
        run.finish();
        std::cout << "wrote heralded_layers.csv\n";
        return 0;
    }
    if (!scenarios_path.empty() || builtin_scenarios) {
        std::vector<SpeedupScenario> scenarios;
        if (builtin_scenarios) {
            scenarios.push_back({"lih-4q", 0.448, 1.0 / 81, 9000, 20, 218, 103});
            scenarios.push_back({"layer-6q", 2.0 / 27, 1.0 / 729, 500, 1, 1, 1});
        } else {
            run.add_input(scenarios_path);
            for (const auto& sj : json::parse(read_file(scenarios_path))) {
                SpeedupScenario s;
                s.name = sj.value("name", "scenario");
                s.success_a = sj.at("success_a").get<double>();
                s.success_b = sj.at("success_b").get<double>();
                s.rate_a = sj.value("rate_a", 1.0);
                s.rate_b = sj.value("rate_b", 1.0);
                s.iters_a = sj.value("iters_a", 1.0);
                s.iters_b = sj.value("iters_b", 1.0);
                scenarios.push_back(std::move(s));
            }
        }
        CsvBuilder csv({"name", "speedup"});
        for (const auto& row : speedup_table(scenarios)) {
            csv.append_row({row.name, format_double(row.speedup, 9)});
            std::cout << row.name << ": " << format_double(row.speedup, 6) << "x\n";
        }
        run.write("speedups.csv", csv.str());
        run.finish();
        return 0;
    }
    require(!map_spec.empty(), "choose --fig11, --scenarios, --builtin-scenarios or --map");
    QloqMap map = parse_map_spec(map_spec);
    PhysicalCircuit pc;
    pc.map = map;
    for (long long i = 0; i < entanglers; ++i)
        pc.ops.push_back(PhysicalOp::cx(0, 0, map.num_carriers() - 1, 0, 1));
    auto est = resources(map, pc, dump_ports);
    std::cout << "photons: " << est.photons << "\nmodes: " << est.modes << "\n";
    run.finish();
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"qubit-logic-on-qudits circuit compilation and resource analysis"};
    app.require_subcommand(1);

    // fixtures
    auto* fix = app.add_subcommand("fixtures", "list or export built-in circuits");
    std::string fix_name, fix_out = ".";
    fix->add_option("--name", fix_name, "fixture to export");
    fix->add_option("--out", fix_out, "output directory");

    // cost
    auto* cost = app.add_subcommand("cost", "gate-by-gate entangler pricing under a map");
    std::string cost_circuit, cost_map, cost_out = ".";
    bool cost_aux = false, cost_heur = false, cost_strict = false;
    cost->add_option("--circuit", cost_circuit, "circuit JSON file")->required();
    cost->add_option("--map", cost_map, "map spec like '0,1;2,3' (overrides the file)");
    cost->add_flag("--aux-levels", cost_aux, "price external spans with auxiliary levels");
    cost->add_flag("--heuristic", cost_heur, "upper-bound unsupported spans");
    cost->add_flag("--strict", cost_strict, "fail on unsupported spans");
    cost->add_option("--out", cost_out, "output directory");

    // bounds
    auto* bounds = app.add_subcommand("bounds", "unitary-decomposition entangler lower bounds");
    long long b_n = 4, b_g = 2;
    bool b_table = false;
    std::string b_out = ".";
    bounds->add_option("--n", b_n, "qubit count");
    bounds->add_option("--G", b_g, "max qubits per carrier");
    bounds->add_flag("--table", b_table, "emit the n=2..6, G=1..3 grid");
    bounds->add_option("--out", b_out, "output directory");

    // qsd
    auto* qsd = app.add_subcommand("qsd", "Shannon-decompose a unitary");
    std::string q_unitary, q_mode = "qloq", q_out = ".";
    int q_random = 0, q_g = 2;
    bool q_remap = false, q_verify = false;
    std::uint64_t q_seed = 1;
    qsd->add_option("--unitary", q_unitary, "unitary JSON grid");
    qsd->add_option("--random", q_random, "synthesize a seeded random n-qubit unitary");
    qsd->add_option("--mode", q_mode, "qubit | qloq")->check(CLI::IsMember({"qubit", "qloq"}));
    qsd->add_option("--g", q_g, "carrier size for qloq mode");
    qsd->add_flag("--remap", q_remap, "bracket with remapping fragments");
    qsd->add_flag("--verify", q_verify, "check the synthesized circuit against the input");
    qsd->add_option("--seed", q_seed, "seed for --random");
    qsd->add_option("--out", q_out, "output directory");

    // compress
    auto* comp = app.add_subcommand("compress", "gate-by-gate compression statistics");
    bool c_fig4 = false, c_t4 = false, c_t5 = false, c_mc = false;
    int c_N = 4, c_max_gates = 60, c_step = 1, c_g = 2, c_n = 2;
    long c_trials = 10000;
    long long c_bigN = 10;
    std::uint64_t c_seed = 7;
    std::string c_out = ".";
    comp->add_flag("--fig4", c_fig4, "compressible-fraction decay curve");
    comp->add_option("--N", c_N, "qubit count for --fig4");
    comp->add_option("--max-gates", c_max_gates, "largest gate count for --fig4");
    comp->add_option("--step", c_step, "gate-count step for --fig4");
    comp->add_option("--trials", c_trials, "Monte Carlo trials");
    comp->add_option("--seed", c_seed, "seed");
    comp->add_flag("--table4", c_t4, "smallest N with R > 1, per (g, n)");
    comp->add_flag("--table5", c_t5, "R at N = 1e12, per (g, n)");
    comp->add_flag("--mc", c_mc, "Monte Carlo check of the closed-form ratio");
    comp->add_option("--g", c_g, "carrier size for ratio queries");
    comp->add_option("--n", c_n, "gate arity for ratio queries");
    comp->add_option("--qubits", c_bigN, "circuit width N for ratio queries");
    comp->add_option("--out", c_out, "output directory");

    // metrics
    auto* met = app.add_subcommand("metrics", "expressibility / entangling-capability sweep");
    std::string m_fixtures, m_out = ".";
    bool m_all = false;
    long m_pairs = 5000, m_samples = 1000;
    int m_bins = 75;
    std::uint64_t m_seed = 2;
    met->add_option("--fixtures", m_fixtures, "comma-separated fixture names");
    met->add_flag("--all", m_all, "sweep every parameterized fixture");
    met->add_option("--pairs", m_pairs, "fidelity sample pairs");
    met->add_option("--bins", m_bins, "histogram bins");
    met->add_option("--samples", m_samples, "entangling-capability samples");
    met->add_option("--seed", m_seed, "seed");
    met->add_option("--out", m_out, "output directory");

    // vqe
    auto* vqe = app.add_subcommand("vqe", "variational eigensolver driver");
    std::string v_h, v_ansatz = "su4-carrier", v_input, v_out = ".";
    long v_shots = 0, v_budget = 2000;
    std::uint64_t v_seed = 1;
    vqe->add_option("--hamiltonian", v_h, "JSON-lines Pauli terms")->required();
    vqe->add_option("--ansatz", v_ansatz, "fixture name");
    vqe->add_option("--shots", v_shots, "shots per group (0 = exact)");
    vqe->add_option("--seed", v_seed, "seed");
    vqe->add_option("--budget", v_budget, "objective evaluation budget");
    vqe->add_option("--input", v_input, "computational-basis input bitstring");
    vqe->add_option("--out", v_out, "output directory");

    // loqc
    auto* loqc = app.add_subcommand("loqc", "linear-optical resource estimates");
    bool l_fig11 = false, l_builtin = false;
    int l_nmax = 12;
    std::string l_scenarios, l_map, l_out = ".";
    long long l_entanglers = 0, l_dump = 0;
    loqc->add_flag("--fig11", l_fig11, "heralded layer success curves");
    loqc->add_option("--n-max", l_nmax, "largest N for the curves");
    loqc->add_option("--scenarios", l_scenarios, "speedup scenario JSON");
    loqc->add_flag("--builtin-scenarios", l_builtin, "run the built-in scenario pair");
    loqc->add_option("--map", l_map, "map spec for resource counting");
    loqc->add_option("--entanglers", l_entanglers, "entangler count for resource counting");
    loqc->add_option("--dump-ports", l_dump, "extra balancing modes");
    loqc->add_option("--out", l_out, "output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return 2;
    }

    try {
        if (fix->parsed()) return run_fixtures(fix_name, fix_out);
        if (cost->parsed())
            return run_cost(cost_circuit, cost_map, cost_aux, cost_heur, cost_strict, cost_out);
        if (bounds->parsed()) return run_bounds(b_n, b_g, b_table, b_out);
        if (qsd->parsed())
            return run_qsd(q_unitary, q_random, q_mode, q_g, q_remap, q_verify, q_seed, q_out);
        if (comp->parsed())
            return run_compress(c_fig4, c_N, c_max_gates, c_step, c_trials, c_seed, c_t4, c_t5,
                                c_mc, c_g, c_n, c_bigN, c_out);
        if (met->parsed())
            return run_metrics(m_fixtures, m_all, m_pairs, m_bins, m_samples, m_seed, m_out);
        if (vqe->parsed()) return run_vqe(v_h, v_ansatz, v_shots, v_seed, v_budget, v_input, v_out);
        if (loqc->parsed())
            return run_loqc(l_fig11, l_nmax, l_scenarios, l_builtin, l_map, l_entanglers, l_dump,
                            l_out);
    } catch (const qloq::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
