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

#ifndef QUARTET_GRAPH_STATE_H
#define QUARTET_GRAPH_STATE_H

#include <array>
#include <complex>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "quartet/qudit_algebra.h"

namespace quartet {

inline constexpr int kQudits = 4;

/// Weighted graph on four vertices: symmetric, zero-diagonal matrix over Z_d.
/// Vertices are 0-based here; reports and the CLI print them 1-based.
class AdjacencyMatrix {
   public:
    using Entries = std::array<std::array<int, kQudits>, kQudits>;

    explicit AdjacencyMatrix(PrimeDim dim);
    /// Entries are reduced mod d; throws std::invalid_argument when the
    /// reduced matrix is not symmetric or has a nonzero diagonal.
    AdjacencyMatrix(PrimeDim dim, const std::array<std::array<long long, kQudits>, kQudits>& entries);

    PrimeDim dim() const {
        return dim_;
    }
    int operator()(int n, int m) const {
        return entries_[n][m];
    }
    const Entries& entries() const {
        return entries_;
    }

    /// Sets Γ_nm = Γ_mn = w mod d; n ≠ m.
    void set_edge(int n, int m, long long w);

    int edge_count() const;
    int degree(int n) const;
    bool is_connected() const;

    std::string to_string() const;

    friend bool operator==(const AdjacencyMatrix&, const AdjacencyMatrix&) = default;

   private:
    PrimeDim dim_;
    Entries entries_{};
};

/// Star with vertex 1 at the center; the GHZ graph drawn with unit weights.
AdjacencyMatrix ghz_graph(PrimeDim dim);
/// Star centered on vertex 4 with unit weights (classifier target form).
AdjacencyMatrix ghz_canonical_graph(PrimeDim dim);
/// Unit-weight square 1-2-3-4-1.
AdjacencyMatrix cluster_graph(PrimeDim dim);
/// Square 1-2-3-4-1 with the 2-3 edge weighted -1.
AdjacencyMatrix p_graph(PrimeDim dim);
/// Path 1-2-3-4 with unit weights plus the 1-4 edge of weight gamma.
AdjacencyMatrix gamma_graph(PrimeDim dim, long long gamma);

enum class Family { kGhz, kCluster, kP };

AdjacencyMatrix family_graph(Family family, PrimeDim dim);
std::string family_name(Family family);

/// Pure state of n ∈ {1..4} qudits. Amplitudes are indexed row-major in the
/// qudit digits: site 0 is the slowest-varying index.
class StateVector {
   public:
    StateVector(PrimeDim dim, int qudits, Eigen::VectorXcd amplitudes);

    /// Computational basis state |digits⟩.
    static StateVector basis(PrimeDim dim, std::span<const int> digits);

    PrimeDim dim() const {
        return dim_;
    }
    int qudit_count() const {
        return qudits_;
    }
    std::size_t size() const {
        return static_cast<std::size_t>(amps_.size());
    }
    const Eigen::VectorXcd& amplitudes() const {
        return amps_;
    }
    std::complex<double> operator[](std::size_t index) const {
        return amps_[static_cast<Eigen::Index>(index)];
    }
    std::complex<double> amplitude(std::span<const int> digits) const;

    double norm() const {
        return amps_.norm();
    }
    StateVector normalized() const;

   private:
    PrimeDim dim_;
    int qudits_;
    Eigen::VectorXcd amps_;
};

/// Flat index of a digit tuple (site 0 most significant).
std::size_t flat_index(PrimeDim dim, std::span<const int> digits);
/// Inverse of flat_index.
std::vector<int> index_digits(PrimeDim dim, int qudits, std::size_t index);

std::complex<double> inner(const StateVector& a, const StateVector& b);
/// |⟨a|b⟩| / (‖a‖‖b‖), the global-phase-insensitive overlap.
double overlap_magnitude(const StateVector& a, const StateVector& b);
/// States are equal up to a global phase when overlap_magnitude ≥ 1 − tol.
bool equal_up_to_phase(const StateVector& a, const StateVector& b, double tol = 1e-9);

/// Tensor product a ⊗ b (a's sites first).
StateVector tensor(const StateVector& a, const StateVector& b);

/// Relabels qudits: original site s becomes site destination[s].
StateVector permute_qudits(const StateVector& s, std::span<const int> destination);

/// Applies a single-qudit operator (d × d matrix) at one site.
StateVector apply_single_qudit(const StateVector& s, int site, const Eigen::MatrixXcd& u);

/// Action of a Pauli word on a state: X^x Z^z |k⟩ = ω^{zk}|k + x⟩ per site.
StateVector apply_pauli(const PauliWord& p, const StateVector& s);

enum class FourierDirection {
    /// |k⟩ → d^{-1/2} Σ_j ω^{jk} |j⟩.
    kForward,
    /// |j⟩_x → |j⟩: maps the X eigenbasis back to the computational basis.
    kInverse,
};

Eigen::MatrixXcd fourier_matrix(PrimeDim dim, FourierDirection direction = FourierDirection::kForward);

/// Single-qudit Fourier gate at each listed site (0-based).
StateVector apply_local_fourier(const StateVector& s, std::span<const int> sites,
                                FourierDirection direction = FourierDirection::kForward);

/// Graph state Σ_j d^{-2} ω^{Σ_{n<m} Γ_nm j_n j_m} |j⟩, each edge counted once.
StateVector build_state(const AdjacencyMatrix& g);

/// (1/d) Σ_{i,k} |i, i+γk, k, i+k⟩.
StateVector psi_gamma(long long gamma, PrimeDim dim);

/// Locally reduced representatives: G' = d^{-1/2} Σ|iiii⟩, C' = ψ(1), P' = ψ(-1).
StateVector reduced_state(Family family, PrimeDim dim);

/// Sites whose inverse Fourier transform takes build_state(family_graph) to
/// reduced_state(family): {2,3,4} for G, {2,4} for C and P (1-based).
std::vector<int> reduction_sites(Family family);

/// Four commuting, independent stabilizer generators with eigenvalues ω^{r_k}.
class GeneratorSet {
   public:
    /// Throws std::invalid_argument if the words fail to commute pairwise
    /// or are not independent.
    GeneratorSet(std::vector<PauliWord> gens, std::array<int, kQudits> eigen_exps = {});

    const std::vector<PauliWord>& gens() const {
        return gens_;
    }
    const PauliWord& operator[](std::size_t k) const {
        return gens_[k];
    }
    const std::array<int, kQudits>& eigen_exps() const {
        return eigen_exps_;
    }
    PrimeDim dim() const {
        return gens_.front().dim();
    }

   private:
    std::vector<PauliWord> gens_;
    std::array<int, kQudits> eigen_exps_;
};

/// g_n = X_n ⊗_m Z_m^{Γ_nm}, all eigenvalues unity.
GeneratorSet generators(const AdjacencyMatrix& g);

/// Generator sets tabulated for the reduced states G', C', P'.
GeneratorSet reduced_generators(Family family, PrimeDim dim);

using PowerTuple = std::array<int, kQudits>;

/// Closed form ω^{Σ_{n>m} Γ_nm p_n p_m} ⊗_n X_n^{p_n} Z_n^{Σ_m Γ_nm p_m}.
PauliWord stabilizer(const AdjacencyMatrix& g, const PowerTuple& powers);

/// The d^4 products g_1^{p_1} g_2^{p_2} g_3^{p_3} g_4^{p_4}.
class StabilizerGroup {
   public:
    explicit StabilizerGroup(GeneratorSet generator_set) : generator_set_(std::move(generator_set)) {
    }

    const GeneratorSet& generator_set() const {
        return generator_set_;
    }
    std::size_t size() const {
        return generator_set_.dim().pow(kQudits);
    }
    /// Ordered product of generator powers.
    PauliWord element(const PowerTuple& powers) const;
    /// Eigenvalue exponent of element(powers) on the stabilized state.
    int eigen_exp(const PowerTuple& powers) const;

    /// Visits every power tuple (p_1 slowest) with its element.
    void for_each(const std::function<void(const PowerTuple&, const PauliWord&)>& visit) const;

   private:
    GeneratorSet generator_set_;
};

/// Returns r with p|ψ⟩ = ω^r|ψ⟩ (within tol), or nullopt when the state is
/// not an eigenstate of p.
std::optional<int> verify_eigen(const StateVector& s, const PauliWord& p, double tol = 1e-9);

}  // namespace quartet

#endif
