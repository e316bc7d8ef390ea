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

// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits nonzero if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "../oracles.h"
#include "quartet/entanglement.h"
#include "quartet/graph_classifier.h"
#include "quartet/graph_state.h"
#include "quartet/steering.h"

using namespace quartet;

namespace {

const std::array<Family, 3> kFamilies{Family::kGhz, Family::kCluster, Family::kP};

// Collects the first few failure messages of one criterion.
class Failures {
   public:
    void expect(bool ok, const std::function<std::string()>& what) {
        if (ok) {
            return;
        }
        count_++;
        if (messages_.size() < 5) {
            messages_.push_back(what());
        }
    }
    bool ok() const {
        return count_ == 0;
    }
    std::string summary() const {
        std::ostringstream out;
        out << count_ << " failure(s)";
        for (const auto& m : messages_) {
            out << "; " << m;
        }
        return out.str();
    }

   private:
    int count_ = 0;
    std::vector<std::string> messages_;
};

std::string str(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

std::vector<SubsystemId> small_subsystems() {
    std::vector<SubsystemId> out;
    for (int n = 0; n < 4; n++) {
        out.push_back(SubsystemId{n});
        for (int m = n + 1; m < 4; m++) {
            out.push_back(SubsystemId{n, m});
        }
    }
    return out;
}

double max_abs(const Eigen::MatrixXcd& m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

// Column purities 1/d^a for "n", "n,n+2", "n,n+1".
std::array<int, 3> table1_exponents(Family f) {
    switch (f) {
        case Family::kGhz:
            return {1, 1, 1};
        case Family::kCluster:
            return {1, 1, 2};
        case Family::kP:
            return {1, 2, 2};
    }
    return {};
}

void table1(Failures& fail) {
    const std::vector<std::vector<std::string>> columns{
        {"1", "2", "3", "4"}, {"13", "24"}, {"12", "23", "34", "14"}};
    for (int p : {3, 5, 7}) {
        PrimeDim d(p);
        for (Family f : kFamilies) {
            const PurityProfile profile = purity_profile(reduced_state(f, d));
            const auto exps = table1_exponents(f);
            for (std::size_t c = 0; c < columns.size(); c++) {
                const double want = std::pow(p, -exps[c]);
                for (const auto& label : columns[c]) {
                    const double got = profile.at(label);
                    fail.expect(std::abs(got - want) <= 1e-9, [&] {
                        return "d=" + std::to_string(p) + " " + family_name(f) + " " + label + " = " + str(got);
                    });
                }
            }
        }
    }
}

void table3a(Failures& fail) {
    for (int p : {3, 5, 7}) {
        PrimeDim d(p);
        const std::map<Family, std::array<int, 3>> want{
            {Family::kGhz, {4, 0, 4 * p}}, {Family::kCluster, {0, 4, 4 * p}}, {Family::kP, {0, 0, 4 * (p + 1)}}};
        for (Family f : kFamilies) {
            const PathTally t = enumerate_paths(reduced_state(f, d));
            const std::array<int, 3> got{t.first_product(), t.first_snb(), t.first_ghz3()};
            fail.expect(got == want.at(f), [&] {
                return "d=" + std::to_string(p) + " " + family_name(f) + " got (" + std::to_string(got[0]) + "," +
                       std::to_string(got[1]) + "," + std::to_string(got[2]) + ")";
            });
        }
    }
}

void table3b(Failures& fail) {
    for (int p : {3, 5, 7}) {
        PrimeDim d(p);
        const std::map<Family, std::array<int, 2>> want{{Family::kGhz, {24 * p + 12, 12 * p * p}},
                                                        {Family::kCluster, {20 * p + 8, 12 * p * p + 4 * p + 4}},
                                                        {Family::kP, {12 * p + 12, 12 * p * p + 12 * p}}};
        for (Family f : kFamilies) {
            const PathTally t = enumerate_paths(reduced_state(f, d));
            const std::array<int, 2> got{t.pair_product(), t.pair_bell()};
            fail.expect(got == want.at(f), [&] {
                return "d=" + std::to_string(p) + " " + family_name(f) + " got (" + std::to_string(got[0]) + "," +
                       std::to_string(got[1]) + ")";
            });
            fail.expect(got[0] + got[1] == 12 * (p + 1) * (p + 1),
                        [&] { return "d=" + std::to_string(p) + " " + family_name(f) + " row sum"; });
        }
    }
}

void persistency(Failures& fail) {
    PrimeDim d(3);
    const std::map<Family, double> n_ave{{Family::kGhz, 2.31}, {Family::kCluster, 2.65}, {Family::kP, 2.75}};
    const std::map<Family, double> delta{{Family::kGhz, 0.125}, {Family::kCluster, 0.2917}, {Family::kP, 0.5}};
    const std::map<Family, int> n_min{{Family::kGhz, 1}, {Family::kCluster, 2}, {Family::kP, 2}};
    for (Family f : kFamilies) {
        const StateVector s = reduced_state(f, d);
        const PersistencyStats stats = persistency_stats(s);
        const std::string name = family_name(f);
        fail.expect(std::abs(stats.n_ave - n_ave.at(f)) <= 5e-3,
                    [&] { return name + " N_ave = " + str(stats.n_ave); });
        fail.expect(std::abs(stats.delta - delta.at(f)) <= 1e-3, [&] { return name + " delta = " + str(stats.delta); });
        fail.expect(stats.n_min == n_min.at(f), [&] { return name + " N_min = " + std::to_string(stats.n_min); });
        const SchmidtBounds bounds = schmidt_bounds(s);
        fail.expect(bounds.upper == n_min.at(f), [&] { return name + " Schmidt upper = " + std::to_string(bounds.upper); });
        fail.expect(bounds.lower <= bounds.upper + 1e-9, [&] { return name + " Schmidt lower " + str(bounds.lower); });
    }
}

void asymptotics(Failures& fail) {
    for (Family f : kFamilies) {
        double previous = 0.0;
        for (int p : {3, 5, 7, 11}) {
            const double n = persistency_stats(reduced_state(f, PrimeDim(p))).n_ave;
            fail.expect(n > previous, [&] { return family_name(f) + " not increasing at d=" + std::to_string(p); });
            fail.expect(n < 3.0, [&] { return family_name(f) + " N_ave " + str(n) + " at d=" + std::to_string(p); });
            previous = n;
        }
    }
}

void mmes(Failures& fail) {
    for (int p : {3, 5, 7}) {
        PrimeDim d(p);
        for (Family f : kFamilies) {
            const PurityProfile profile = purity_profile(reduced_state(f, d));
            const bool mm1 = is_k_mm(profile, 1);
            const bool mm2 = is_k_mm(profile, 2);
            fail.expect(mm1 && mm2 == (f == Family::kP),
                        [&] { return "d=" + std::to_string(p) + " " + family_name(f) + " flags wrong"; });
        }
    }
    PrimeDim two(2);
    const StateVector p2 = build_state(p_graph(two));
    fail.expect(equal_up_to_phase(p2, build_state(cluster_graph(two))), [] { return "d=2 P differs from C"; });
    fail.expect(!is_k_mm(purity_profile(p2), 2), [] { return "d=2 P reported 2-MM"; });
}

void stabilizer_route(Failures& fail) {
    for (int p : {3, 5}) {
        PrimeDim d(p);
        std::vector<AdjacencyMatrix> graphs{ghz_graph(d), ghz_canonical_graph(d), cluster_graph(d), p_graph(d)};
        for (int gamma = 0; gamma < p; gamma++) {
            graphs.push_back(gamma_graph(d, gamma));
        }
        for (const auto& g : graphs) {
            const StateVector s = build_state(g);
            for (const auto& a : small_subsystems()) {
                const double err = max_abs(reduced_from_stabilizers(g, a).matrix - partial_trace(s, a).matrix);
                fail.expect(err <= 1e-9, [&] { return g.to_string() + " keep " + a.label() + " err " + str(err); });
            }
        }
        for (int gamma = 0; gamma < p; gamma++) {
            const int want = gamma <= 1 ? 2 : 1;
            const int got = max_identity_factors(gamma_graph(d, gamma));
            fail.expect(got == want, [&] {
                return "d=" + std::to_string(p) + " gamma=" + std::to_string(gamma) + " identities " +
                       std::to_string(got);
            });
        }
        fail.expect(max_identity_factors(ghz_canonical_graph(d)) == 2, [&] { return "G identities"; });
    }
}

void classifier(Failures& fail) {
    const ClassCensus census = classify_exhaustive(PrimeDim(3));
    fail.expect(census.processed == 729, [&] { return "processed " + std::to_string(census.processed); });
    fail.expect(census.mismatches == 0, [&] { return "mismatches " + std::to_string(census.mismatches); });
    fail.expect(census.replay_failures == 0, [&] { return "replay failures " + std::to_string(census.replay_failures); });
    for (int p : {3, 5, 7}) {
        PrimeDim d(p);
        for (int gamma = 0; gamma < p; gamma++) {
            const EntanglementClass got = canonicalize(gamma_graph(d, gamma)).cls;
            const EntanglementClass want = gamma <= 1 ? EntanglementClass::kC : EntanglementClass::kP;
            fail.expect(got == want, [&] {
                return "d=" + std::to_string(p) + " gamma=" + std::to_string(gamma) + " -> " + class_name(got);
            });
        }
    }
}

void wedge(Failures& fail) {
    std::mt19937_64 rng(2026);
    PrimeDim d(3);
    for (int trial = 0; trial < 100; trial++) {
        const StateVector s = oracle::random_state(d, 4, rng);
        for (const auto& a : bipartitions()) {
            const double pi = purity(partial_trace(s, a));
            const double e = wedge_measure(s, a);
            const double c = concurrence(s, a);
            fail.expect(std::abs(2 * e - (1 - pi)) <= 1e-9 && std::abs(c * c - (1 - pi)) <= 1e-9,
                        [&] { return "trial " + std::to_string(trial) + " keep " + a.label(); });
        }
    }
}

void properties(Failures& fail) {
    std::mt19937_64 rng(10);

    // Pauli products against explicit matrices.
    int pairs = 0;
    for (int p : {3, 5}) {
        PrimeDim d(p);
        for (int trial = 0; trial < 100; trial++) {
            const PauliWord a = oracle::random_word(d, 1 + trial % 3, rng);
            const PauliWord b = oracle::random_word(d, 1 + trial % 3, rng);
            const Eigen::MatrixXcd want = oracle::pauli_matrix(a) * oracle::pauli_matrix(b);
            const double err = max_abs(dense_matrix(pauli_mul(a, b)) - want);
            fail.expect(err <= 1e-10, [&] { return a.to_string() + " * " + b.to_string(); });
            pairs++;
        }
    }
    fail.expect(pairs >= 200, [] { return "too few Pauli pairs"; });

    // Unbiasedness of every pair of bases.
    for (int p : {3, 5, 7}) {
        PrimeDim d(p);
        const auto bases = MeasurementBasis::all(d);
        for (const auto& a : bases) {
            for (const auto& b : bases) {
                for (int i = 0; i < p; i++) {
                    for (int j = 0; j < p; j++) {
                        const double o = std::norm(inner(mub_eigenstate(a, i, d), mub_eigenstate(b, j, d)));
                        const double want = a == b ? (i == j ? 1.0 : 0.0) : 1.0 / p;
                        fail.expect(std::abs(o - want) <= 1e-9,
                                    [&] { return "MUB " + a.label() + " vs " + b.label() + " d=" + std::to_string(p); });
                    }
                }
            }
        }
    }

    // Steering classes do not depend on which outcome occurred.
    {
        PrimeDim d(3);
        const auto bases = MeasurementBasis::all(d);
        for (Family f : kFamilies) {
            const StateVector s = reduced_state(f, d);
            for (int q1 = 0; q1 < 4; q1++) {
                for (const auto& b1 : bases) {
                    std::optional<StateClass3> first;
                    std::map<std::pair<int, int>, StateClass2> second;
                    for (int o1 = 0; o1 < 3; o1++) {
                        const Projection p1 = project(s, {q1, b1, o1});
                        if (!p1.residual) {
                            continue;
                        }
                        const StateClass3 c3 = classify3(*p1.residual);
                        fail.expect(!first || *first == c3, [&] { return family_name(f) + " first class varies"; });
                        first = c3;
                        for (int q2 = 0; q2 < 3; q2++) {
                            for (const auto& b2 : bases) {
                                for (int o2 = 0; o2 < 3; o2++) {
                                    const Projection p2 = project(*p1.residual, {q2, b2, o2});
                                    if (!p2.residual) {
                                        continue;
                                    }
                                    const StateClass2 c2 = classify2(*p2.residual);
                                    const auto [it, inserted] = second.emplace(std::make_pair(q2, b2.ordinal()), c2);
                                    fail.expect(it->second == c2,
                                                [&] { return family_name(f) + " second class varies"; });
                                }
                            }
                        }
                    }
                    fail.expect(first.has_value(), [&] { return family_name(f) + " no possible outcome"; });
                }
            }
        }
    }

    // Generators and random stabilizers leave their graph states fixed.
    for (int p : {3, 5}) {
        PrimeDim d(p);
        std::uniform_int_distribution<int> digit(0, p - 1);
        std::vector<AdjacencyMatrix> graphs{ghz_graph(d), ghz_canonical_graph(d), cluster_graph(d), p_graph(d)};
        for (int k = 0; k < 4; k++) {
            graphs.push_back(oracle::random_graph(d, rng));
        }
        for (const auto& g : graphs) {
            const StateVector s = build_state(g);
            const GeneratorSet gens = generators(g);
            for (const auto& w : gens.gens()) {
                fail.expect(verify_eigen(s, w) == 0, [&] { return "generator " + w.to_string(); });
            }
            for (int trial = 0; trial < 50; trial++) {
                const PauliWord w = stabilizer(g, {digit(rng), digit(rng), digit(rng), digit(rng)});
                fail.expect(verify_eigen(s, w) == 0, [&] { return "stabilizer " + w.to_string(); });
            }
        }
        for (Family f : kFamilies) {
            const StateVector s = reduced_state(f, d);
            const GeneratorSet gens = reduced_generators(f, d);
            const StabilizerGroup group(gens);
            for (const auto& w : gens.gens()) {
                fail.expect(verify_eigen(s, w) == 0, [&] { return "reduced generator " + w.to_string(); });
            }
            for (int trial = 0; trial < 50; trial++) {
                const PowerTuple powers{digit(rng), digit(rng), digit(rng), digit(rng)};
                const PauliWord w = group.element(powers);
                const auto e = verify_eigen(s, w);
                fail.expect(e && *e == group.eigen_exp(powers), [&] { return "reduced stabilizer " + w.to_string(); });
            }
        }
    }
}

struct Criterion {
    int id;
    std::string title;
    double time_limit;  // seconds, 0 = none
    void (*run)(Failures&);
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "purity table for the reduced states", 1.0, table1},
        {2, "first-measurement tallies", 1.0, table3a},
        {3, "pair-measurement tallies", 10.0, table3b},
        {4, "persistency at d=3", 0.0, persistency},
        {5, "N_ave growth below 3", 0.0, asymptotics},
        {6, "MMES flags", 0.0, mmes},
        {7, "stabilizer route to reduced states", 0.0, stabilizer_route},
        {8, "exhaustive classifier sweep", 30.0, classifier},
        {9, "wedge and concurrence identities", 0.0, wedge},
        {10, "property suite", 0.0, properties},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        Failures fail;
        const auto start = std::chrono::steady_clock::now();
        try {
            c.run(fail);
        } catch (const std::exception& e) {
            fail.expect(false, [&] { return std::string("exception: ") + e.what(); });
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.time_limit > 0) {
            fail.expect(seconds < c.time_limit, [&] { return "took " + str(seconds) + " s, limit " + str(c.time_limit); });
        }
        std::printf("criterion %2d: %s  %-40s %.3f s%s%s\n", c.id, fail.ok() ? "PASS" : "FAIL", c.title.c_str(),
                    seconds, fail.ok() ? "" : "  ", fail.ok() ? "" : fail.summary().c_str());
        failed += !fail.ok();
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
