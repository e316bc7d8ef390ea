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

#ifndef QUARTET_ENTANGLEMENT_H
#define QUARTET_ENTANGLEMENT_H

#include <compare>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "quartet/graph_state.h"

namespace quartet {

/// The kept part A of a bipartition: a sorted set of 0-based sites.
class SubsystemId {
   public:
    SubsystemId(std::initializer_list<int> sites) : SubsystemId(std::vector<int>(sites)) {
    }
    explicit SubsystemId(std::vector<int> sites);

    /// Parses a 1-based label such as "13".
    static SubsystemId from_label(const std::string& label);

    const std::vector<int>& sites() const {
        return sites_;
    }
    std::size_t size() const {
        return sites_.size();
    }
    bool contains(int site) const;
    /// Sites of B = complement of A in a system of `qudits` sites.
    std::vector<int> complement(int qudits) const;
    /// 1-based label: {0, 2} → "13".
    std::string label() const;

    friend auto operator<=>(const SubsystemId&, const SubsystemId&) = default;

   private:
    std::vector<int> sites_;
};

/// ρ_A with rows indexed by the kept sites in increasing order.
struct ReducedState {
    Eigen::MatrixXcd matrix;
    SubsystemId subsystem;

    Eigen::Index dimension() const {
        return matrix.rows();
    }
    /// Hermitian and unit trace within 1e-10, minimum eigenvalue ≥ -1e-9.
    bool is_valid_density() const;
};

/// Associated-state Gram matrix ⟨a|ρ_A|a'⟩ = ⟨ψ_{a'}|ψ_a⟩_B.
ReducedState partial_trace(const StateVector& s, const SubsystemId& keep);

double purity(const ReducedState& r);

/// Purities of every one- and two-site subsystem of a four-qudit state.
class PurityProfile {
   public:
    explicit PurityProfile(PrimeDim dim) : dim_(dim) {
    }

    PrimeDim dim() const {
        return dim_;
    }
    void set(const SubsystemId& a, double value) {
        values_[a] = value;
    }
    double at(const SubsystemId& a) const {
        return values_.at(a);
    }
    double at(const std::string& label) const {
        return at(SubsystemId::from_label(label));
    }
    const std::map<SubsystemId, double>& values() const {
        return values_;
    }

   private:
    PrimeDim dim_;
    std::map<SubsystemId, double> values_;
};

PurityProfile purity_profile(const StateVector& s);

/// True iff every subsystem of size ≤ k has purity 1/D_A within tol.
bool is_k_mm(const PurityProfile& profile, int k, double tol = 1e-9);

/// √(1 − π_A).
double concurrence(const StateVector& s, const SubsystemId& keep);

/// Σ_{a<a'} [⟨ψ_a|ψ_a⟩⟨ψ_a'|ψ_a'⟩ − |⟨ψ_a|ψ_a'⟩|²] over associated states in B.
double wedge_measure(const StateVector& s, const SubsystemId& keep);

/// Reduced state assembled from the stabilizers of g whose factors on the
/// traced-out sites are all identity: ρ_A = d^{-|A|} Σ_{S|_B = I} S|_A.
ReducedState reduced_from_stabilizers(const AdjacencyMatrix& g, const SubsystemId& keep);

/// Largest number of identity factors in any non-identity stabilizer of g.
int max_identity_factors(const AdjacencyMatrix& g);

/// Numerical rank (singular values above tol) of the A|B coefficient matrix.
int schmidt_rank(const StateVector& s, const SubsystemId& keep, double tol = 1e-8);

struct SchmidtBounds {
    double lower;  // max over bipartitions of log_d(rank)
    int upper;     // Pauli persistency
};

SchmidtBounds schmidt_bounds(const StateVector& s);

/// The seven bipartitions of four qudits: singles {1},{2},{3},{4} and pair
/// splits {1,2},{1,3},{1,4}.
std::vector<SubsystemId> bipartitions();

}  // namespace quartet

#endif
