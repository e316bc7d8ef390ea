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

#include "quartet/steering.h"

#include <algorithm>
#include <cmath>

#include "quartet/entanglement.h"

namespace quartet {

std::vector<MeasurementBasis> MeasurementBasis::all(PrimeDim dim) {
    std::vector<MeasurementBasis> out{z()};
    for (int k = 0; k < dim.value(); k++) {
        out.push_back(xz(k));
    }
    return out;
}

std::string MeasurementBasis::label() const {
    if (kind_ == Kind::kZ) {
        return "Z";
    }
    if (k_ == 0) {
        return "X";
    }
    if (k_ == 1) {
        return "XZ";
    }
    return "XZ^" + std::to_string(k_);
}

PauliWord MeasurementBasis::observable(PrimeDim dim) const {
    if (kind_ == Kind::kZ) {
        return PauliWord::single(dim, 1, 0, 0, 1);
    }
    return PauliWord::single(dim, 1, 0, 1, k_);
}

static void require_odd(PrimeDim dim) {
    if (!dim.is_odd()) {
        throw DomainError("measurement bases are built for odd prime d");
    }
}

StateVector mub_eigenstate(const MeasurementBasis& basis, int outcome, PrimeDim dim) {
    require_odd(dim);
    const int d = dim.value();
    Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(d);
    if (basis.kind() == MeasurementBasis::Kind::kZ) {
        amps[dim.mod(outcome)] = 1.0;
    } else {
        const double scale = 1.0 / std::sqrt(static_cast<double>(d));
        for (long long m = 0; m < d; m++) {
            amps[m] = scale * omega_pow(dim, outcome * m + basis.k() * (m * (m - 1) / 2));
        }
    }
    return StateVector(dim, 1, std::move(amps));
}

int mub_eigen_exp(const MeasurementBasis& basis, int outcome, PrimeDim dim) {
    return basis.kind() == MeasurementBasis::Kind::kZ ? dim.mod(outcome) : dim.mod(-outcome);
}

Projection project(const StateVector& s, const MeasurementEvent& e) {
    const int n = s.qudit_count();
    if (n < 2) {
        throw std::invalid_argument("projection needs at least two qudits");
    }
    if (e.qudit < 0 || e.qudit >= n) {
        throw std::out_of_range("measured qudit outside the state");
    }
    const PrimeDim dim = s.dim();
    const StateVector u = mub_eigenstate(e.basis, e.outcome, dim);
    Eigen::VectorXcd rest = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(dim.pow(n - 1)));
    std::vector<int> rest_digits(static_cast<std::size_t>(n - 1));
    for (std::size_t index = 0; index < s.size(); index++) {
        auto digits = index_digits(dim, n, index);
        int w = 0;
        for (int q = 0; q < n; q++) {
            if (q != e.qudit) {
                rest_digits[static_cast<std::size_t>(w++)] = digits[static_cast<std::size_t>(q)];
            }
        }
        rest[static_cast<Eigen::Index>(flat_index(dim, rest_digits))] +=
            std::conj(u[static_cast<std::size_t>(digits[static_cast<std::size_t>(e.qudit)])]) * s[index];
    }
    Projection out;
    out.probability = rest.squaredNorm() / s.amplitudes().squaredNorm();
    if (out.probability > 1e-12) {
        out.residual = StateVector(dim, n - 1, rest / rest.norm());
    }
    return out;
}

std::string StateClass3::label() const {
    switch (kind) {
        case Kind::kProduct:
            return "product";
        case Kind::kSnB:
            return "S" + std::to_string(separated + 1) + "B";
        case Kind::kGhz3:
            return "GHZ3";
    }
    return "?";
}

std::string to_string(StateClass2 c) {
    return c == StateClass2::kBell ? "Bell" : "product";
}

static bool near(double a, double b) {
    return std::abs(a - b) <= kPurityPatternTol;
}

StateClass3 classify3(const StateVector& s) {
    if (s.qudit_count() != 3) {
        throw std::invalid_argument("classify3 expects a three-qudit state");
    }
    const StateVector normed = s.normalized();
    const double mixed = 1.0 / s.dim().value();
    int pure_sites = 0, mixed_sites = 0, pure_site = -1;
    for (int q = 0; q < 3; q++) {
        const double p = purity(partial_trace(normed, SubsystemId{q}));
        if (near(p, 1.0)) {
            pure_sites++;
            pure_site = q;
        } else if (near(p, mixed)) {
            mixed_sites++;
        }
    }
    if (pure_sites == 3) {
        return {StateClass3::Kind::kProduct};
    }
    if (mixed_sites == 3) {
        return {StateClass3::Kind::kGhz3};
    }
    if (pure_sites == 1 && mixed_sites == 2) {
        return {StateClass3::Kind::kSnB, pure_site};
    }
    throw ClassificationError("three-qudit purity pattern matches no graph-state residue");
}

StateClass2 classify2(const StateVector& s) {
    if (s.qudit_count() != 2) {
        throw std::invalid_argument("classify2 expects a two-qudit state");
    }
    const double p = purity(partial_trace(s.normalized(), SubsystemId{0}));
    if (near(p, 1.0)) {
        return StateClass2::kProduct;
    }
    if (near(p, 1.0 / s.dim().value())) {
        return StateClass2::kBell;
    }
    throw ClassificationError("two-qudit purity does not match a product or Bell state");
}

Measured measure_first_possible(const StateVector& s, int qudit, const MeasurementBasis& basis) {
    for (int outcome = 0; outcome < s.dim().value(); outcome++) {
        Projection p = project(s, {qudit, basis, outcome});
        if (p.residual) {
            return {outcome, std::move(p)};
        }
    }
    throw std::logic_error("no measurement outcome has nonzero probability");
}

PathTally::PathTally(PrimeDim dim, std::vector<FirstRecord> records) : dim_(dim), records_(std::move(records)) {
    for (const auto& first : records_) {
        QuditBranches& qb = branches_[static_cast<std::size_t>(first.qudit)];
        BranchCounts* bc = nullptr;
        switch (first.result.kind) {
            case StateClass3::Kind::kProduct:
                bc = &qb.product;
                break;
            case StateClass3::Kind::kSnB:
                bc = &qb.snb;
                break;
            case StateClass3::Kind::kGhz3:
                bc = &qb.ghz3;
                break;
        }
        bc->first_measurements++;
        for (const auto& second : first.second) {
            (second.result == StateClass2::kBell ? bc->second_bell : bc->second_product)++;
        }
    }
}

int PathTally::first_product() const {
    int n = 0;
    for (const auto& b : branches_) {
        n += b.product.first_measurements;
    }
    return n;
}

int PathTally::first_snb() const {
    int n = 0;
    for (const auto& b : branches_) {
        n += b.snb.first_measurements;
    }
    return n;
}

int PathTally::first_ghz3() const {
    int n = 0;
    for (const auto& b : branches_) {
        n += b.ghz3.first_measurements;
    }
    return n;
}

int PathTally::pair_product() const {
    int n = 0;
    for (const auto& b : branches_) {
        n += b.product.second_product + b.snb.second_product + b.ghz3.second_product;
    }
    return n;
}

int PathTally::pair_bell() const {
    int n = 0;
    for (const auto& b : branches_) {
        n += b.product.second_bell + b.snb.second_bell + b.ghz3.second_bell;
    }
    return n;
}

int path_persistency(const FirstRecord& first, const SecondRecord& second) {
    if (first.result.kind == StateClass3::Kind::kProduct) {
        return 1;
    }
    return second.result == StateClass2::kProduct ? 2 : 3;
}

std::array<int, 4> PathTally::persistency_histogram() const {
    std::array<int, 4> h{};
    for (int q = 0; q < kQudits; q++) {
        auto hq = persistency_histogram(q);
        for (int n = 0; n < 4; n++) {
            h[static_cast<std::size_t>(n)] += hq[static_cast<std::size_t>(n)];
        }
    }
    return h;
}

std::array<int, 4> PathTally::persistency_histogram(int first_qudit) const {
    std::array<int, 4> h{};
    for (const auto& first : records_) {
        if (first.qudit != first_qudit) {
            continue;
        }
        for (const auto& second : first.second) {
            h[static_cast<std::size_t>(path_persistency(first, second))]++;
        }
    }
    return h;
}

PathTally enumerate_paths(const StateVector& s) {
    if (s.qudit_count() != kQudits) {
        throw std::invalid_argument("path enumeration expects a four-qudit state");
    }
    const PrimeDim dim = s.dim();
    const auto bases = MeasurementBasis::all(dim);
    const StateVector normed = s.normalized();
    std::vector<FirstRecord> records;
    for (int q1 = 0; q1 < kQudits; q1++) {
        // Original labels of the three sites left after measuring q1.
        std::vector<int> remaining;
        for (int q = 0; q < kQudits; q++) {
            if (q != q1) {
                remaining.push_back(q);
            }
        }
        for (const auto& b1 : bases) {
            Measured m1 = measure_first_possible(normed, q1, b1);
            const StateVector& psi3 = *m1.projection.residual;
            StateClass3 c3 = classify3(psi3);
            if (c3.kind == StateClass3::Kind::kSnB) {
                c3.separated = remaining[static_cast<std::size_t>(c3.separated)];
            }
            FirstRecord first{q1, b1, m1.outcome, c3, {}};
            for (int local = 0; local < 3; local++) {
                for (const auto& b2 : bases) {
                    Measured m2 = measure_first_possible(psi3, local, b2);
                    first.second.push_back(
                        {remaining[static_cast<std::size_t>(local)], b2, m2.outcome, classify2(*m2.projection.residual)});
                }
            }
            records.push_back(std::move(first));
        }
    }
    return PathTally(dim, std::move(records));
}

PersistencyStats persistency_stats(const PathTally& tally) {
    PersistencyStats stats{};
    const int d = tally.dim().value();
    const double per_qudit_paths = 3.0 * (d + 1) * (d + 1);
    double total = 0.0;
    for (int q = 0; q < kQudits; q++) {
        auto h = tally.persistency_histogram(q);
        const double sum = 1.0 * h[1] + 2.0 * h[2] + 3.0 * h[3];
        stats.n_ave_by_first_qudit[static_cast<std::size_t>(q)] = sum / per_qudit_paths;
        total += sum;
    }
    stats.n_ave = total / (kQudits * per_qudit_paths);
    auto h = tally.persistency_histogram();
    stats.n_min = h[1] > 0 ? 1 : h[2] > 0 ? 2 : 3;
    stats.delta = (tally.pair_bell() - tally.pair_product()) / (kQudits * per_qudit_paths);
    return stats;
}

PersistencyStats persistency_stats(const StateVector& s) {
    return persistency_stats(enumerate_paths(s));
}

std::vector<int> vulnerable_bases(const StateVector& ghz3, int qudit) {
    std::vector<int> out;
    for (const auto& b : MeasurementBasis::all(ghz3.dim())) {
        Measured m = measure_first_possible(ghz3, qudit, b);
        if (classify2(*m.projection.residual) == StateClass2::kProduct) {
            out.push_back(b.ordinal());
        }
    }
    return out;
}

}  // namespace quartet
