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

#include "quartet/graph_state.h"

#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace quartet {

AdjacencyMatrix::AdjacencyMatrix(PrimeDim dim) : dim_(dim) {
}

AdjacencyMatrix::AdjacencyMatrix(PrimeDim dim, const std::array<std::array<long long, kQudits>, kQudits>& entries)
    : dim_(dim) {
    for (int n = 0; n < kQudits; n++) {
        for (int m = 0; m < kQudits; m++) {
            entries_[n][m] = dim.mod(entries[n][m]);
        }
    }
    for (int n = 0; n < kQudits; n++) {
        if (entries_[n][n] != 0) {
            throw std::invalid_argument("adjacency matrix has a nonzero diagonal entry at vertex " +
                                        std::to_string(n + 1));
        }
        for (int m = n + 1; m < kQudits; m++) {
            if (entries_[n][m] != entries_[m][n]) {
                throw std::invalid_argument("adjacency matrix is not symmetric at (" + std::to_string(n + 1) +
                                            "," + std::to_string(m + 1) + ")");
            }
        }
    }
}

void AdjacencyMatrix::set_edge(int n, int m, long long w) {
    if (n == m) {
        throw std::invalid_argument("self-loops are not allowed");
    }
    entries_.at(n).at(m) = dim_.mod(w);
    entries_[m][n] = entries_[n][m];
}

int AdjacencyMatrix::edge_count() const {
    int e = 0;
    for (int n = 0; n < kQudits; n++) {
        for (int m = n + 1; m < kQudits; m++) {
            e += entries_[n][m] != 0;
        }
    }
    return e;
}

int AdjacencyMatrix::degree(int n) const {
    int k = 0;
    for (int m = 0; m < kQudits; m++) {
        k += entries_[n][m] != 0;
    }
    return k;
}

bool AdjacencyMatrix::is_connected() const {
    std::array<int, kQudits> parent;
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&parent](int v) {
        while (parent[v] != v) {
            v = parent[v] = parent[parent[v]];
        }
        return v;
    };
    for (int n = 0; n < kQudits; n++) {
        for (int m = n + 1; m < kQudits; m++) {
            if (entries_[n][m] != 0) {
                parent[find(n)] = find(m);
            }
        }
    }
    for (int n = 1; n < kQudits; n++) {
        if (find(n) != find(0)) {
            return false;
        }
    }
    return true;
}

std::string AdjacencyMatrix::to_string() const {
    std::ostringstream out;
    out << "[";
    for (int n = 0; n < kQudits; n++) {
        out << (n ? ",[" : "[");
        for (int m = 0; m < kQudits; m++) {
            out << (m ? "," : "") << entries_[n][m];
        }
        out << "]";
    }
    out << "]";
    return out.str();
}

AdjacencyMatrix ghz_graph(PrimeDim dim) {
    AdjacencyMatrix g(dim);
    g.set_edge(0, 1, 1);
    g.set_edge(0, 2, 1);
    g.set_edge(0, 3, 1);
    return g;
}

AdjacencyMatrix ghz_canonical_graph(PrimeDim dim) {
    AdjacencyMatrix g(dim);
    g.set_edge(0, 3, 1);
    g.set_edge(1, 3, 1);
    g.set_edge(2, 3, 1);
    return g;
}

AdjacencyMatrix cluster_graph(PrimeDim dim) {
    return gamma_graph(dim, 1);
}

AdjacencyMatrix p_graph(PrimeDim dim) {
    AdjacencyMatrix g = cluster_graph(dim);
    g.set_edge(1, 2, -1);
    return g;
}

AdjacencyMatrix gamma_graph(PrimeDim dim, long long gamma) {
    AdjacencyMatrix g(dim);
    g.set_edge(0, 1, 1);
    g.set_edge(1, 2, 1);
    g.set_edge(2, 3, 1);
    g.set_edge(0, 3, gamma);
    return g;
}

AdjacencyMatrix family_graph(Family family, PrimeDim dim) {
    switch (family) {
        case Family::kGhz:
            return ghz_graph(dim);
        case Family::kCluster:
            return cluster_graph(dim);
        case Family::kP:
            return p_graph(dim);
    }
    throw std::invalid_argument("unknown family");
}

std::string family_name(Family family) {
    switch (family) {
        case Family::kGhz:
            return "G";
        case Family::kCluster:
            return "C";
        case Family::kP:
            return "P";
    }
    return "?";
}

StateVector::StateVector(PrimeDim dim, int qudits, Eigen::VectorXcd amplitudes)
    : dim_(dim), qudits_(qudits), amps_(std::move(amplitudes)) {
    if (qudits < 1 || qudits > kQudits) {
        throw std::invalid_argument("state vectors hold between 1 and 4 qudits");
    }
    if (static_cast<std::size_t>(amps_.size()) != dim.pow(qudits)) {
        throw std::invalid_argument("amplitude count does not match d^n");
    }
}

StateVector StateVector::basis(PrimeDim dim, std::span<const int> digits) {
    int n = static_cast<int>(digits.size());
    Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(dim.pow(n)));
    amps[static_cast<Eigen::Index>(flat_index(dim, digits))] = 1.0;
    return StateVector(dim, n, std::move(amps));
}

std::complex<double> StateVector::amplitude(std::span<const int> digits) const {
    if (static_cast<int>(digits.size()) != qudits_) {
        throw std::invalid_argument("digit tuple length does not match qudit count");
    }
    return (*this)[flat_index(dim_, digits)];
}

StateVector StateVector::normalized() const {
    double n = norm();
    if (n == 0.0) {
        throw std::domain_error("cannot normalize the zero vector");
    }
    return StateVector(dim_, qudits_, amps_ / n);
}

std::size_t flat_index(PrimeDim dim, std::span<const int> digits) {
    std::size_t index = 0;
    for (int digit : digits) {
        index = index * static_cast<std::size_t>(dim.value()) + static_cast<std::size_t>(dim.mod(digit));
    }
    return index;
}

std::vector<int> index_digits(PrimeDim dim, int qudits, std::size_t index) {
    std::vector<int> digits(static_cast<std::size_t>(qudits));
    for (int s = qudits - 1; s >= 0; s--) {
        digits[static_cast<std::size_t>(s)] = static_cast<int>(index % static_cast<std::size_t>(dim.value()));
        index /= static_cast<std::size_t>(dim.value());
    }
    return digits;
}

static void require_same_space(const StateVector& a, const StateVector& b) {
    if (a.dim() != b.dim() || a.qudit_count() != b.qudit_count()) {
        throw std::invalid_argument("states live in different Hilbert spaces");
    }
}

std::complex<double> inner(const StateVector& a, const StateVector& b) {
    require_same_space(a, b);
    return a.amplitudes().dot(b.amplitudes());
}

double overlap_magnitude(const StateVector& a, const StateVector& b) {
    return std::abs(inner(a, b)) / (a.norm() * b.norm());
}

bool equal_up_to_phase(const StateVector& a, const StateVector& b, double tol) {
    if (a.dim() != b.dim() || a.qudit_count() != b.qudit_count()) {
        return false;
    }
    return overlap_magnitude(a, b) >= 1.0 - tol;
}

StateVector tensor(const StateVector& a, const StateVector& b) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument("tensor product of states over different dimensions");
    }
    Eigen::VectorXcd amps(a.amplitudes().size() * b.amplitudes().size());
    for (Eigen::Index i = 0; i < a.amplitudes().size(); i++) {
        amps.segment(i * b.amplitudes().size(), b.amplitudes().size()) = a.amplitudes()[i] * b.amplitudes();
    }
    return StateVector(a.dim(), a.qudit_count() + b.qudit_count(), std::move(amps));
}

StateVector permute_qudits(const StateVector& s, std::span<const int> destination) {
    const int n = s.qudit_count();
    if (static_cast<int>(destination.size()) != n) {
        throw std::invalid_argument("permutation length does not match qudit count");
    }
    std::vector<bool> seen(static_cast<std::size_t>(n));
    for (int t : destination) {
        if (t < 0 || t >= n || seen[static_cast<std::size_t>(t)]) {
            throw std::invalid_argument("destination list is not a permutation");
        }
        seen[static_cast<std::size_t>(t)] = true;
    }
    Eigen::VectorXcd out(s.amplitudes().size());
    std::vector<int> moved(static_cast<std::size_t>(n));
    for (std::size_t index = 0; index < s.size(); index++) {
        auto digits = index_digits(s.dim(), n, index);
        for (int q = 0; q < n; q++) {
            moved[static_cast<std::size_t>(destination[static_cast<std::size_t>(q)])] = digits[static_cast<std::size_t>(q)];
        }
        out[static_cast<Eigen::Index>(flat_index(s.dim(), moved))] = s[index];
    }
    return StateVector(s.dim(), n, std::move(out));
}

StateVector apply_single_qudit(const StateVector& s, int site, const Eigen::MatrixXcd& u) {
    const int d = s.dim().value();
    if (site < 0 || site >= s.qudit_count()) {
        throw std::out_of_range("site outside state");
    }
    if (u.rows() != d || u.cols() != d) {
        throw std::invalid_argument("single-qudit operator has the wrong shape");
    }
    // View amplitudes as (outer, d, inner) with the site digit in the middle.
    const std::size_t inner_size = s.dim().pow(s.qudit_count() - site - 1);
    const std::size_t outer_size = s.size() / (inner_size * static_cast<std::size_t>(d));
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(s.amplitudes().size());
    for (std::size_t o = 0; o < outer_size; o++) {
        for (std::size_t i = 0; i < inner_size; i++) {
            const std::size_t base = o * static_cast<std::size_t>(d) * inner_size + i;
            for (int r = 0; r < d; r++) {
                std::complex<double> acc = 0.0;
                for (int c = 0; c < d; c++) {
                    acc += u(r, c) * s[base + static_cast<std::size_t>(c) * inner_size];
                }
                out[static_cast<Eigen::Index>(base + static_cast<std::size_t>(r) * inner_size)] = acc;
            }
        }
    }
    return StateVector(s.dim(), s.qudit_count(), std::move(out));
}

StateVector apply_pauli(const PauliWord& p, const StateVector& s) {
    if (p.dim() != s.dim() || static_cast<int>(p.size()) != s.qudit_count()) {
        throw std::invalid_argument("Pauli word does not match the state");
    }
    const int n = s.qudit_count();
    const PrimeDim dim = s.dim();
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(s.amplitudes().size());
    std::vector<int> shifted(static_cast<std::size_t>(n));
    for (std::size_t index = 0; index < s.size(); index++) {
        auto digits = index_digits(dim, n, index);
        long long phase = p.phase_exp();
        for (int q = 0; q < n; q++) {
            const auto& f = p[static_cast<std::size_t>(q)];
            phase += static_cast<long long>(f.z) * digits[static_cast<std::size_t>(q)];
            shifted[static_cast<std::size_t>(q)] = digits[static_cast<std::size_t>(q)] + f.x;
        }
        out[static_cast<Eigen::Index>(flat_index(dim, shifted))] += omega_pow(dim, phase) * s[index];
    }
    return StateVector(dim, n, std::move(out));
}

Eigen::MatrixXcd fourier_matrix(PrimeDim dim, FourierDirection direction) {
    const int d = dim.value();
    const double scale = 1.0 / std::sqrt(static_cast<double>(d));
    const int sign = direction == FourierDirection::kForward ? 1 : -1;
    Eigen::MatrixXcd f(d, d);
    for (int j = 0; j < d; j++) {
        for (int k = 0; k < d; k++) {
            f(j, k) = scale * omega_pow(dim, static_cast<long long>(sign) * j * k);
        }
    }
    return f;
}

StateVector apply_local_fourier(const StateVector& s, std::span<const int> sites, FourierDirection direction) {
    const Eigen::MatrixXcd f = fourier_matrix(s.dim(), direction);
    StateVector out = s;
    for (int site : sites) {
        out = apply_single_qudit(out, site, f);
    }
    return out;
}

StateVector build_state(const AdjacencyMatrix& g) {
    const PrimeDim dim = g.dim();
    const double amp = 1.0 / static_cast<double>(dim.pow(2));
    Eigen::VectorXcd amps(static_cast<Eigen::Index>(dim.pow(kQudits)));
    for (std::size_t index = 0; index < dim.pow(kQudits); index++) {
        auto j = index_digits(dim, kQudits, index);
        long long phase = 0;
        for (int n = 0; n < kQudits; n++) {
            for (int m = n + 1; m < kQudits; m++) {
                phase += static_cast<long long>(g(n, m)) * j[static_cast<std::size_t>(n)] * j[static_cast<std::size_t>(m)];
            }
        }
        amps[static_cast<Eigen::Index>(index)] = amp * omega_pow(dim, phase);
    }
    return StateVector(dim, kQudits, std::move(amps));
}

StateVector psi_gamma(long long gamma, PrimeDim dim) {
    const int d = dim.value();
    const int g = dim.mod(gamma);
    Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(dim.pow(kQudits)));
    for (int i = 0; i < d; i++) {
        for (int k = 0; k < d; k++) {
            std::array<int, kQudits> digits{i, i + g * k, k, i + k};
            amps[static_cast<Eigen::Index>(flat_index(dim, digits))] += 1.0 / d;
        }
    }
    return StateVector(dim, kQudits, std::move(amps));
}

StateVector reduced_state(Family family, PrimeDim dim) {
    switch (family) {
        case Family::kGhz: {
            Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(dim.pow(kQudits)));
            for (int i = 0; i < dim.value(); i++) {
                std::array<int, kQudits> digits{i, i, i, i};
                amps[static_cast<Eigen::Index>(flat_index(dim, digits))] = 1.0 / std::sqrt(dim.value());
            }
            return StateVector(dim, kQudits, std::move(amps));
        }
        case Family::kCluster:
            return psi_gamma(1, dim);
        case Family::kP:
            return psi_gamma(-1, dim);
    }
    throw std::invalid_argument("unknown family");
}

std::vector<int> reduction_sites(Family family) {
    if (family == Family::kGhz) {
        return {1, 2, 3};
    }
    return {1, 3};
}

GeneratorSet::GeneratorSet(std::vector<PauliWord> gens, std::array<int, kQudits> eigen_exps)
    : gens_(std::move(gens)), eigen_exps_(eigen_exps) {
    if (gens_.size() != static_cast<std::size_t>(kQudits)) {
        throw std::invalid_argument("a generator set holds exactly four words");
    }
    const PrimeDim dim = gens_.front().dim();
    std::vector<std::vector<int>> rows;
    for (std::size_t a = 0; a < gens_.size(); a++) {
        if (gens_[a].size() != static_cast<std::size_t>(kQudits) || gens_[a].dim() != dim) {
            throw std::invalid_argument("generator does not act on four qudits of the common dimension");
        }
        for (std::size_t b = a + 1; b < gens_.size(); b++) {
            if (!commutes(gens_[a], gens_[b])) {
                throw std::invalid_argument("generators " + gens_[a].to_string() + " and " + gens_[b].to_string() +
                                            " do not commute");
            }
        }
        std::vector<int> row;
        for (const auto& f : gens_[a].factors()) {
            row.push_back(f.x);
            row.push_back(f.z);
        }
        rows.push_back(std::move(row));
    }
    if (rank_mod_p(std::move(rows), dim) != kQudits) {
        throw std::invalid_argument("generators are not independent");
    }
    for (auto& r : eigen_exps_) {
        r = dim.mod(r);
    }
}

GeneratorSet generators(const AdjacencyMatrix& g) {
    std::vector<PauliWord> gens;
    for (int n = 0; n < kQudits; n++) {
        std::vector<PauliFactor> f(kQudits);
        for (int m = 0; m < kQudits; m++) {
            f[static_cast<std::size_t>(m)].z = g(n, m);
        }
        f[static_cast<std::size_t>(n)].x = 1;
        gens.emplace_back(g.dim(), std::move(f));
    }
    return GeneratorSet(std::move(gens));
}

GeneratorSet reduced_generators(Family family, PrimeDim dim) {
    std::array<const char*, kQudits> words{};
    switch (family) {
        case Family::kGhz:
            words = {"XXXX", "ZZ^-1II", "ZIZ^-1I", "ZIIZ^-1"};
            break;
        case Family::kCluster:
            words = {"XXIX", "ZZ^-1ZI", "IXXX", "ZIZZ^-1"};
            break;
        case Family::kP:
            words = {"XXIX", "ZZ^-1Z^-1I", "IX^-1XX", "ZIZZ^-1"};
            break;
    }
    std::vector<PauliWord> gens;
    for (const char* w : words) {
        gens.push_back(PauliWord::parse(w, dim));
    }
    return GeneratorSet(std::move(gens));
}

PauliWord stabilizer(const AdjacencyMatrix& g, const PowerTuple& p) {
    std::vector<PauliFactor> f(kQudits);
    long long phase = 0;
    for (int n = 0; n < kQudits; n++) {
        long long z = 0;
        for (int m = 0; m < kQudits; m++) {
            z += static_cast<long long>(g(n, m)) * p[static_cast<std::size_t>(m)];
            if (n > m) {
                phase += static_cast<long long>(g(n, m)) * p[static_cast<std::size_t>(n)] * p[static_cast<std::size_t>(m)];
            }
        }
        f[static_cast<std::size_t>(n)] = {p[static_cast<std::size_t>(n)], g.dim().mod(z)};
    }
    return PauliWord(g.dim(), std::move(f), phase);
}

PauliWord StabilizerGroup::element(const PowerTuple& powers) const {
    PauliWord out = PauliWord::identity(generator_set_.dim(), kQudits);
    for (int n = 0; n < kQudits; n++) {
        out = pauli_mul(out, pauli_pow(generator_set_[static_cast<std::size_t>(n)],
                                       generator_set_.dim().mod(powers[static_cast<std::size_t>(n)])));
    }
    return out;
}

int StabilizerGroup::eigen_exp(const PowerTuple& powers) const {
    long long r = 0;
    for (int n = 0; n < kQudits; n++) {
        r += static_cast<long long>(generator_set_.eigen_exps()[static_cast<std::size_t>(n)]) * powers[static_cast<std::size_t>(n)];
    }
    return generator_set_.dim().mod(r);
}

void StabilizerGroup::for_each(const std::function<void(const PowerTuple&, const PauliWord&)>& visit) const {
    const PrimeDim dim = generator_set_.dim();
    for (std::size_t index = 0; index < size(); index++) {
        auto digits = index_digits(dim, kQudits, index);
        PowerTuple p{digits[0], digits[1], digits[2], digits[3]};
        visit(p, element(p));
    }
}

std::optional<int> verify_eigen(const StateVector& s, const PauliWord& p, double tol) {
    const StateVector image = apply_pauli(p, s);
    const double norm_sq = s.amplitudes().squaredNorm();
    if (norm_sq == 0.0) {
        return std::nullopt;
    }
    const std::complex<double> c = inner(s, image) / norm_sq;
    const double residual = (image.amplitudes() - c * s.amplitudes()).norm() / std::sqrt(norm_sq);
    if (residual > tol) {
        return std::nullopt;
    }
    const int d = s.dim().value();
    const long long r = std::llround(std::arg(c) * d / (2.0 * std::numbers::pi));
    if (std::abs(c - omega_pow(s.dim(), r)) > tol) {
        return std::nullopt;
    }
    return s.dim().mod(r);
}

}  // namespace quartet
