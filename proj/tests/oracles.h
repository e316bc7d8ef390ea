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

// Slow, explicit reference implementations used only to cross-check the
// library in tests.

#ifndef QUARTET_TESTS_ORACLES_H
#define QUARTET_TESTS_ORACLES_H

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "quartet/graph_state.h"
#include "quartet/qudit_algebra.h"

namespace quartet::oracle {

inline std::complex<double> omega(int d, long long k) {
    const double t = 2.0 * std::numbers::pi * static_cast<double>(((k % d) + d) % d) / d;
    return {std::cos(t), std::sin(t)};
}

inline Eigen::MatrixXcd shift(int d) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
    for (int k = 0; k < d; k++) {
        m((k + 1) % d, k) = 1.0;
    }
    return m;
}

inline Eigen::MatrixXcd clock(int d) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
    for (int k = 0; k < d; k++) {
        m(k, k) = omega(d, k);
    }
    return m;
}

inline Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
    Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); i++) {
        for (Eigen::Index j = 0; j < a.cols(); j++) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

inline Eigen::MatrixXcd mpow(const Eigen::MatrixXcd& m, int k) {
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(m.rows(), m.cols());
    for (int i = 0; i < k; i++) {
        out = out * m;
    }
    return out;
}

/// ω^phase ⊗ X^x Z^z by repeated multiplication of the shift and clock matrices.
inline Eigen::MatrixXcd pauli_matrix(const PauliWord& p) {
    const int d = p.dim().value();
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(1, 1);
    for (const auto& f : p.factors()) {
        out = kron(out, mpow(shift(d), f.x) * mpow(clock(d), f.z));
    }
    return omega(d, p.phase_exp()) * out;
}

/// ρ_A from the full density matrix |ψ⟩⟨ψ| by summing over traced digits.
inline Eigen::MatrixXcd partial_trace(const StateVector& s, const std::vector<int>& keep) {
    const PrimeDim dim = s.dim();
    const int n = s.qudit_count();
    std::vector<bool> kept(static_cast<std::size_t>(n), false);
    for (int q : keep) {
        kept[static_cast<std::size_t>(q)] = true;
    }
    const Eigen::VectorXcd psi = s.amplitudes() / s.norm();
    const Eigen::MatrixXcd rho = psi * psi.adjoint();
    const Eigen::Index da = static_cast<Eigen::Index>(dim.pow(static_cast<int>(keep.size())));
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(da, da);
    for (std::size_t i = 0; i < s.size(); i++) {
        const auto di = index_digits(dim, n, i);
        for (std::size_t j = 0; j < s.size(); j++) {
            const auto dj = index_digits(dim, n, j);
            bool same_traced = true;
            for (int q = 0; q < n && same_traced; q++) {
                same_traced = kept[static_cast<std::size_t>(q)] || di[static_cast<std::size_t>(q)] == dj[static_cast<std::size_t>(q)];
            }
            if (!same_traced) {
                continue;
            }
            std::vector<int> ai, aj;
            for (int q : keep) {
                ai.push_back(di[static_cast<std::size_t>(q)]);
                aj.push_back(dj[static_cast<std::size_t>(q)]);
            }
            out(static_cast<Eigen::Index>(flat_index(dim, ai)), static_cast<Eigen::Index>(flat_index(dim, aj))) +=
                rho(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
        }
    }
    return out;
}

inline PauliWord random_word(PrimeDim dim, std::size_t qudits, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> digit(0, dim.value() - 1);
    std::vector<PauliFactor> f(qudits);
    for (auto& x : f) {
        x = {digit(rng), digit(rng)};
    }
    return PauliWord(dim, std::move(f), digit(rng));
}

inline AdjacencyMatrix random_graph(PrimeDim dim, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> digit(0, dim.value() - 1);
    AdjacencyMatrix g(dim);
    for (int n = 0; n < kQudits; n++) {
        for (int m = n + 1; m < kQudits; m++) {
            g.set_edge(n, m, digit(rng));
        }
    }
    return g;
}

inline StateVector random_state(PrimeDim dim, int qudits, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss;
    Eigen::VectorXcd v(static_cast<Eigen::Index>(dim.pow(qudits)));
    for (Eigen::Index k = 0; k < v.size(); k++) {
        v[k] = {gauss(rng), gauss(rng)};
    }
    return StateVector(dim, qudits, v.normalized());
}

}  // namespace quartet::oracle

#endif
