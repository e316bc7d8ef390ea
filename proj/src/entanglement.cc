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

#include "quartet/entanglement.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "quartet/steering.h"

namespace quartet {

SubsystemId::SubsystemId(std::vector<int> sites) : sites_(std::move(sites)) {
    std::sort(sites_.begin(), sites_.end());
    if (sites_.empty()) {
        throw std::invalid_argument("subsystem must contain at least one site");
    }
    if (std::adjacent_find(sites_.begin(), sites_.end()) != sites_.end()) {
        throw std::invalid_argument("subsystem lists a site twice");
    }
    if (sites_.front() < 0) {
        throw std::invalid_argument("negative site index");
    }
}

SubsystemId SubsystemId::from_label(const std::string& label) {
    std::vector<int> sites;
    for (char c : label) {
        if (c < '1' || c > '9') {
            throw std::invalid_argument("bad subsystem label '" + label + "'");
        }
        sites.push_back(c - '1');
    }
    return SubsystemId(std::move(sites));
}

bool SubsystemId::contains(int site) const {
    return std::binary_search(sites_.begin(), sites_.end(), site);
}

std::vector<int> SubsystemId::complement(int qudits) const {
    std::vector<int> out;
    for (int q = 0; q < qudits; q++) {
        if (!contains(q)) {
            out.push_back(q);
        }
    }
    return out;
}

std::string SubsystemId::label() const {
    std::string out;
    for (int s : sites_) {
        out += std::to_string(s + 1);
    }
    return out;
}

bool ReducedState::is_valid_density() const {
    if ((matrix - matrix.adjoint()).cwiseAbs().maxCoeff() > 1e-10) {
        return false;
    }
    if (std::abs(matrix.trace() - 1.0) > 1e-10) {
        return false;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(matrix, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff() >= -1e-9;
}

namespace {

/// Coefficient matrix c(a, b) with a over the kept sites and b over the rest.
Eigen::MatrixXcd coefficient_matrix(const StateVector& s, const SubsystemId& keep) {
    const int n = s.qudit_count();
    if (keep.sites().back() >= n) {
        throw std::invalid_argument("subsystem site outside the state");
    }
    if (static_cast<int>(keep.size()) >= n) {
        throw std::invalid_argument("subsystem must leave at least one site traced out");
    }
    const std::vector<int> rest = keep.complement(n);
    const PrimeDim dim = s.dim();
    Eigen::MatrixXcd c(static_cast<Eigen::Index>(dim.pow(static_cast<int>(keep.size()))),
                       static_cast<Eigen::Index>(dim.pow(static_cast<int>(rest.size()))));
    std::vector<int> a_digits(keep.size()), b_digits(rest.size());
    for (std::size_t index = 0; index < s.size(); index++) {
        auto digits = index_digits(dim, n, index);
        for (std::size_t k = 0; k < keep.size(); k++) {
            a_digits[k] = digits[static_cast<std::size_t>(keep.sites()[k])];
        }
        for (std::size_t k = 0; k < rest.size(); k++) {
            b_digits[k] = digits[static_cast<std::size_t>(rest[k])];
        }
        c(static_cast<Eigen::Index>(flat_index(dim, a_digits)), static_cast<Eigen::Index>(flat_index(dim, b_digits))) =
            s[index];
    }
    return c;
}

}  // namespace

ReducedState partial_trace(const StateVector& s, const SubsystemId& keep) {
    const Eigen::MatrixXcd c = coefficient_matrix(s, keep);
    // Row a of c is the associated state ψ_a in B, so ρ(a, a') = Σ_b c(a,b) c(a',b)*.
    return ReducedState{c * c.adjoint(), keep};
}

double purity(const ReducedState& r) {
    // Tr ρ² = Σ |ρ_ij|² for Hermitian ρ.
    return r.matrix.cwiseAbs2().sum();
}

PurityProfile purity_profile(const StateVector& s) {
    if (s.qudit_count() != kQudits) {
        throw std::invalid_argument("purity profiles are defined for four-qudit states");
    }
    PurityProfile profile(s.dim());
    for (int n = 0; n < kQudits; n++) {
        SubsystemId a{n};
        profile.set(a, purity(partial_trace(s, a)));
    }
    for (int n = 0; n < kQudits; n++) {
        for (int m = n + 1; m < kQudits; m++) {
            SubsystemId a{n, m};
            profile.set(a, purity(partial_trace(s, a)));
        }
    }
    return profile;
}

bool is_k_mm(const PurityProfile& profile, int k, double tol) {
    if (k < 1 || k > 2) {
        throw std::invalid_argument("k-MM is checked for k in {1, 2}");
    }
    for (const auto& [a, value] : profile.values()) {
        if (static_cast<int>(a.size()) > k) {
            continue;
        }
        const double minimum = 1.0 / static_cast<double>(profile.dim().pow(static_cast<int>(a.size())));
        if (std::abs(value - minimum) > tol) {
            return false;
        }
    }
    return true;
}

double concurrence(const StateVector& s, const SubsystemId& keep) {
    const double pi_a = purity(partial_trace(s, keep));
    return std::sqrt(std::max(0.0, 1.0 - pi_a));
}

double wedge_measure(const StateVector& s, const SubsystemId& keep) {
    const Eigen::MatrixXcd c = coefficient_matrix(s, keep);
    const Eigen::Index rows = c.rows();
    Eigen::VectorXd norms(rows);
    for (Eigen::Index a = 0; a < rows; a++) {
        norms[a] = c.row(a).squaredNorm();
    }
    double e = 0.0;
    for (Eigen::Index a = 0; a < rows; a++) {
        for (Eigen::Index b = a + 1; b < rows; b++) {
            const std::complex<double> overlap = c.row(a).dot(c.row(b));
            e += norms[a] * norms[b] - std::norm(overlap);
        }
    }
    return e;
}

ReducedState reduced_from_stabilizers(const AdjacencyMatrix& g, const SubsystemId& keep) {
    if (keep.size() < 1 || keep.size() > 2 || keep.sites().back() >= kQudits) {
        throw std::invalid_argument("stabilizer route supports one- and two-site subsystems");
    }
    const PrimeDim dim = g.dim();
    const std::vector<int> traced = keep.complement(kQudits);
    const Eigen::Index size = static_cast<Eigen::Index>(dim.pow(static_cast<int>(keep.size())));
    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(size, size);
    for (std::size_t index = 0; index < dim.pow(kQudits); index++) {
        auto p = index_digits(dim, kQudits, index);
        const PauliWord s = stabilizer(g, {p[0], p[1], p[2], p[3]});
        // Tr(X^x Z^z) vanishes unless x = z = 0.
        if (!std::all_of(traced.begin(), traced.end(), [&s](int q) { return s.is_identity_at(static_cast<std::size_t>(q)); })) {
            continue;
        }
        std::vector<PauliFactor> kept;
        for (int q : keep.sites()) {
            kept.push_back(s[static_cast<std::size_t>(q)]);
        }
        rho += dense_matrix(PauliWord(dim, std::move(kept), s.phase_exp()));
    }
    rho /= static_cast<double>(size);
    return ReducedState{std::move(rho), keep};
}

int max_identity_factors(const AdjacencyMatrix& g) {
    const PrimeDim dim = g.dim();
    int best = 0;
    for (std::size_t index = 1; index < dim.pow(kQudits); index++) {
        auto p = index_digits(dim, kQudits, index);
        const PauliWord s = stabilizer(g, {p[0], p[1], p[2], p[3]});
        best = std::max(best, static_cast<int>(s.identity_count()));
    }
    return best;
}

int schmidt_rank(const StateVector& s, const SubsystemId& keep, double tol) {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(coefficient_matrix(s, keep));
    const auto& sv = svd.singularValues();
    return static_cast<int>((sv.array() > tol).count());
}

std::vector<SubsystemId> bipartitions() {
    return {SubsystemId{0}, SubsystemId{1}, SubsystemId{2}, SubsystemId{3},
            SubsystemId{0, 1}, SubsystemId{0, 2}, SubsystemId{0, 3}};
}

SchmidtBounds schmidt_bounds(const StateVector& s) {
    if (s.qudit_count() != kQudits) {
        throw std::invalid_argument("Schmidt bounds are defined for four-qudit states");
    }
    int max_rank = 1;
    for (const auto& a : bipartitions()) {
        max_rank = std::max(max_rank, schmidt_rank(s, a));
    }
    const double lower = std::log(static_cast<double>(max_rank)) / std::log(static_cast<double>(s.dim().value()));
    if (max_rank == 1) {
        // Rank one across every cut: already a product state.
        return {lower, 0};
    }
    return {lower, persistency_stats(s.normalized()).n_min};
}

}  // namespace quartet
