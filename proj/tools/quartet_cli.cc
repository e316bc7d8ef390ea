// Copyright 2026 The Quartet Authors
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

#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "quartet/entanglement.h"
#include "quartet/graph_classifier.h"
#include "quartet/graph_state.h"
#include "quartet/report.h"
#include "quartet/steering.h"

using nlohmann::json;
using namespace quartet;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 2;
constexpr int kExitInput = 3;

/// Bad user input; reported with exit code 3.
class InputError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

struct Options {
    int d = 3;
    std::optional<int> d_flag;
    std::vector<int> dims;
    std::string family;
    std::optional<long long> gamma;
    std::string graph;
    std::string generators = "graph";
    std::string format = "json";
    std::string out;
    bool exhaustive = false;
    unsigned seed = 1;
    int count = 100;
};

/// A named family or the Γ(γ) graph on the square with a free 1-4 weight.
struct GraphChoice {
    std::optional<Family> family;
    std::optional<long long> gamma;
    std::optional<AdjacencyMatrix> matrix;

    AdjacencyMatrix graph(PrimeDim dim) const {
        if (matrix) {
            return *matrix;
        }
        if (family) {
            return family_graph(*family, dim);
        }
        return gamma_graph(dim, *gamma);
    }
    std::string name() const {
        if (matrix) {
            return "matrix";
        }
        if (family) {
            return family_name(*family);
        }
        return "psi:" + std::to_string(*gamma);
    }
};

std::string read_text(const std::string& arg) {
    if (!arg.empty() && arg.front() == '{') {
        return arg;
    }
    std::ifstream in(arg);
    if (!in) {
        throw InputError("cannot read graph file '" + arg + "'");
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

AdjacencyMatrix parse_graph_json(const std::string& arg, std::optional<int> cli_d) {
    json j;
    try {
        j = json::parse(read_text(arg));
    } catch (const json::parse_error& e) {
        throw InputError(std::string("graph JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("gamma") || !j["gamma"].is_array() || j["gamma"].size() != kQudits) {
        throw InputError("graph JSON must be {\"d\": int, \"gamma\": [[int x 4] x 4]}");
    }
    int d = cli_d.value_or(0);
    if (j.contains("d")) {
        if (!j["d"].is_number_integer()) {
            throw InputError("graph JSON field d must be an integer");
        }
        const int jd = j["d"].get<int>();
        if (cli_d && *cli_d != jd) {
            throw InputError("--d disagrees with the d field of the graph JSON");
        }
        d = jd;
    }
    if (d == 0) {
        throw InputError("no dimension: pass --d or set d in the graph JSON");
    }
    std::array<std::array<long long, kQudits>, kQudits> entries{};
    for (int n = 0; n < kQudits; n++) {
        const json& row = j["gamma"][static_cast<std::size_t>(n)];
        if (!row.is_array() || row.size() != kQudits) {
            throw InputError("graph JSON gamma must be 4x4");
        }
        for (int m = 0; m < kQudits; m++) {
            if (!row[static_cast<std::size_t>(m)].is_number_integer()) {
                throw InputError("graph JSON entries must be integers");
            }
            entries[static_cast<std::size_t>(n)][static_cast<std::size_t>(m)] =
                row[static_cast<std::size_t>(m)].get<long long>();
        }
    }
    return AdjacencyMatrix(PrimeDim(d), entries);
}

GraphChoice parse_choice(const Options& o) {
    GraphChoice choice;
    if (!o.graph.empty()) {
        if (!o.family.empty()) {
            throw InputError("pass either --family or --graph, not both");
        }
        choice.matrix = parse_graph_json(o.graph, o.d_flag);
        return choice;
    }
    if (o.family == "G") {
        choice.family = Family::kGhz;
    } else if (o.family == "C") {
        choice.family = Family::kCluster;
    } else if (o.family == "P") {
        choice.family = Family::kP;
    } else if (o.family.rfind("psi", 0) == 0) {
        if (o.family.size() > 4 && o.family[3] == ':') {
            try {
                choice.gamma = std::stoll(o.family.substr(4));
            } catch (const std::exception&) {
                throw InputError("bad gamma in --family " + o.family);
            }
        } else if (o.family == "psi" && o.gamma) {
            choice.gamma = *o.gamma;
        } else {
            throw InputError("--family psi needs a weight: psi:<gamma> or --gamma");
        }
    } else if (o.family.empty()) {
        throw InputError("a graph is required: --family G|C|P|psi:<gamma> or --graph JSON");
    } else {
        throw InputError("unknown family '" + o.family + "'");
    }
    return choice;
}

void emit(const Options& o, const std::string& text) {
    if (o.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(o.out, std::ios::binary);
    if (!f) {
        throw InputError("cannot write '" + o.out + "'");
    }
    f << text;
}

std::string amplitudes_csv(const json& state) {
    std::ostringstream out;
    out << "digits,phase_exp,magnitude,probability_exact\n";
    for (const auto& a : state["amplitudes"]) {
        std::string digits;
        for (const auto& v : a["digits"]) {
            digits += std::to_string(v.get<int>());
        }
        out << digits << ',' << (a["phase_exp"].is_null() ? "" : std::to_string(a["phase_exp"].get<int>())) << ','
            << a["magnitude"]["value"].dump() << ','
            << (a["probability"]["exact"].is_null() ? "" : a["probability"]["exact"].get<std::string>()) << '\n';
    }
    return out.str();
}

int cmd_state(const std::string& action, const Options& o) {
    const GraphChoice choice = parse_choice(o);
    const PrimeDim dim = choice.matrix ? choice.matrix->dim() : PrimeDim(o.d);
    if (action == "build") {
        const AdjacencyMatrix g = choice.graph(dim);
        json doc = state_json(build_state(g));
        doc["graph"] = choice.name();
        emit(o, o.format == "csv" ? amplitudes_csv(doc) : doc.dump(2) + "\n");
        return kExitOk;
    }
    if (action == "reduce") {
        StateVector s = choice.family  ? reduced_state(*choice.family, dim)
                        : choice.gamma ? psi_gamma(*choice.gamma, dim)
                                     : throw InputError("reduce needs a named family or psi:<gamma>");
        json doc = state_json(s);
        doc["graph"] = choice.name();
        emit(o, o.format == "csv" ? amplitudes_csv(doc) : doc.dump(2) + "\n");
        return kExitOk;
    }
    // eigen
    std::optional<GeneratorSet> set;
    std::optional<StateVector> s;
    if (o.generators == "tableIIb") {
        if (!choice.family) {
            throw InputError("tableIIb generators exist for G, C and P only");
        }
        set = reduced_generators(*choice.family, dim);
        s = reduced_state(*choice.family, dim);
    } else if (o.generators == "graph") {
        const AdjacencyMatrix g = choice.graph(dim);
        set = generators(g);
        s = build_state(g);
    } else {
        throw InputError("--generators must be graph or tableIIb");
    }
    bool ok = true;
    json checks = json::array();
    std::ostringstream csv;
    csv << "generator,eigen_exp,expected\n";
    for (std::size_t k = 0; k < set->gens().size(); k++) {
        const auto e = verify_eigen(*s, (*set)[k]);
        const int want = set->eigen_exps()[k];
        ok = ok && e && *e == want;
        checks.push_back({{"generator", (*set)[k].to_string()},
                          {"eigen_exp", e ? json(*e) : json(nullptr)},
                          {"expected", want}});
        csv << (*set)[k].to_string() << ',' << (e ? std::to_string(*e) : "") << ',' << want << '\n';
    }
    json doc{{"graph", choice.name()}, {"d", dim.value()}, {"generators", o.generators}, {"checks", std::move(checks)},
             {"status", ok ? "PASS" : "FAIL"}};
    emit(o, o.format == "csv" ? csv.str() : doc.dump(2) + "\n");
    return ok ? kExitOk : kExitMismatch;
}

int cmd_tables(const Options& o) {
    const std::vector<int> dims = o.dims.empty() ? std::vector<int>{3} : o.dims;
    const ReportBundle bundle = build_report(dims);
    emit(o, o.format == "csv" ? bundle.to_csv() : bundle.to_json().dump(2) + "\n");
    for (const auto& c : bundle.cells) {
        std::cerr << (c.pass ? "PASS " : "FAIL ") << c.id << " expected=" << c.expected << " actual=" << c.actual
                  << '\n';
    }
    return bundle.all_pass() ? kExitOk : kExitMismatch;
}

int cmd_classify(const Options& o) {
    if (o.exhaustive) {
        const PrimeDim dim(o.d);
        json doc;
        int code = kExitOk;
        try {
            doc = census_json(classify_exhaustive(dim));
        } catch (const ClassifierMismatch& e) {
            doc = {{"d", o.d}, {"error", e.what()}, {"mismatches", 1}};
            code = kExitMismatch;
        }
        if (o.format == "csv") {
            std::ostringstream csv;
            csv << "key,value\n";
            for (const auto& [k, v] : doc.items()) {
                csv << k << ',' << v.dump() << '\n';
            }
            emit(o, csv.str());
        } else {
            emit(o, doc.dump(2) + "\n");
        }
        return code;
    }
    const GraphChoice choice = parse_choice(o);
    const AdjacencyMatrix g = choice.graph(PrimeDim(choice.matrix ? choice.matrix->dim().value() : o.d));
    const CanonicalResult result = canonicalize(g);
    const auto oracle = oracle_class(g);
    const bool replay_ok = replay(g, result.trace) == result.canonical;
    const bool ok = replay_ok && oracle && *oracle == result.cls;
    json doc = canonical_json(result);
    doc["d"] = g.dim().value();
    doc["oracle_class"] = oracle ? json(class_name(*oracle)) : json(nullptr);
    doc["replay_ok"] = replay_ok;
    if (o.format == "csv") {
        std::ostringstream csv;
        csv << "class,gamma_tilde,oracle_class,trace_length\n"
            << class_name(result.cls) << ',' << (result.gamma_tilde ? std::to_string(*result.gamma_tilde) : "") << ','
            << (oracle ? class_name(*oracle) : "") << ',' << result.trace.size() << '\n';
        emit(o, csv.str());
    } else {
        emit(o, doc.dump(2) + "\n");
    }
    return ok ? kExitOk : kExitMismatch;
}

// Randomized cross-checks: class invariance of random graphs under random
// local operations, and the purity/wedge/concurrence identities.
int cmd_check(const Options& o) {
    const PrimeDim dim(o.d);
    if (!dim.is_odd()) {
        throw DomainError("check needs an odd prime d");
    }
    std::mt19937_64 rng(o.seed);
    std::uniform_int_distribution<int> weight(0, o.d - 1), nonzero(1, o.d - 1), vertex(0, kQudits - 1), kind(0, 2);
    int class_failures = 0;
    for (int trial = 0; trial < o.count; trial++) {
        AdjacencyMatrix g(dim);
        for (int n = 0; n < kQudits; n++) {
            for (int m = n + 1; m < kQudits; m++) {
                g.set_edge(n, m, weight(rng));
            }
        }
        AdjacencyMatrix h = g;
        for (int step = 0; step < 6; step++) {
            const int v = vertex(rng);
            switch (kind(rng)) {
                case 0:
                    h = apply_scale(h, v, nonzero(rng));
                    break;
                case 1:
                    h = apply_star(h, v, weight(rng));
                    break;
                default:
                    h = apply_swap(h, v, vertex(rng));
                    break;
            }
        }
        const auto a = canonicalize(g), b = canonicalize(h);
        const auto oracle = oracle_class(g);
        if (a.cls != b.cls || !oracle || *oracle != a.cls) {
            class_failures++;
        }
    }
    std::normal_distribution<double> gauss;
    int identity_failures = 0;
    for (int trial = 0; trial < o.count; trial++) {
        Eigen::VectorXcd v(static_cast<Eigen::Index>(dim.pow(kQudits)));
        for (Eigen::Index k = 0; k < v.size(); k++) {
            v[k] = {gauss(rng), gauss(rng)};
        }
        const StateVector s(dim, kQudits, v.normalized());
        for (const auto& a : bipartitions()) {
            const double pi = purity(partial_trace(s, a));
            const double c = concurrence(s, a);
            const double e = wedge_measure(s, a);
            if (std::abs(2 * e - (1 - pi)) > 1e-9 || std::abs(c * c - (1 - pi)) > 1e-9) {
                identity_failures++;
            }
        }
    }
    const bool ok = class_failures == 0 && identity_failures == 0;
    json doc{{"d", o.d},
             {"seed", o.seed},
             {"count", o.count},
             {"class_failures", class_failures},
             {"identity_failures", identity_failures},
             {"status", ok ? "PASS" : "FAIL"}};
    emit(o, doc.dump(2) + "\n");
    return ok ? kExitOk : kExitMismatch;
}

void add_output_flags(CLI::App* cmd, Options& o) {
    cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--out", o.out, "Write output to PATH instead of stdout");
}

void add_graph_flags(CLI::App* cmd, Options& o) {
    cmd->add_option("--d", o.d_flag, "Prime qudit dimension");
    cmd->add_option("--family", o.family, "G, C, P or psi:<gamma>");
    cmd->add_option("--gamma", o.gamma, "Weight for --family psi");
    cmd->add_option("--graph", o.graph, "Graph JSON {\"d\":int,\"gamma\":[[...]]}, inline or a file path");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Four-qudit graph states: entanglement, steering and classification"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kToolVersion);
    Options o;

    auto* state = app.add_subcommand("state", "Build, reduce or eigen-check a graph state");
    state->require_subcommand(1);
    std::string action;
    for (const char* name : {"build", "reduce", "eigen"}) {
        auto* sub = state->add_subcommand(name, std::string(name) + " a state");
        add_graph_flags(sub, o);
        add_output_flags(sub, o);
        if (std::string(name) == "eigen") {
            sub->add_option("--generators", o.generators, "graph or tableIIb");
        }
        sub->callback([&action, name] { action = name; });
    }

    auto* tables = app.add_subcommand("tables", "Reproduce the reference tables with self-verification");
    tables->add_option("--d", o.dims, "Odd prime dimension (repeatable)");
    add_output_flags(tables, o);

    auto* classify = app.add_subcommand("classify", "Canonicalize a graph or sweep all graphs");
    add_graph_flags(classify, o);
    classify->add_flag("--exhaustive", o.exhaustive, "Classify all d^6 matrices");
    add_output_flags(classify, o);

    auto* check = app.add_subcommand("check", "Randomized property checks");
    check->add_option("--d", o.d_flag, "Odd prime dimension");
    check->add_option("--seed", o.seed, "RNG seed");
    check->add_option("--count", o.count, "Trials per property")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }
    o.d = o.d_flag.value_or(3);

    try {
        if (*state) {
            return cmd_state(action, o);
        }
        if (*tables) {
            return cmd_tables(o);
        }
        if (*classify) {
            return cmd_classify(o);
        }
        return cmd_check(o);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << '\n';
    } catch (const std::length_error& e) {
        std::cerr << "error: " << e.what() << '\n';
    }
    return kExitInput;
}
