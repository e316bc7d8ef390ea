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

#ifndef QUARTET_STEERING_H
#define QUARTET_STEERING_H

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "quartet/graph_state.h"

namespace quartet {

/// One of the d+1 mutually unbiased single-qudit bases: Z, or XZ^k
/// (k = 0 is X).
class MeasurementBasis {
   public:
    enum class Kind { kZ, kXZ };

    static MeasurementBasis z() {
        return MeasurementBasis(Kind::kZ, 0);
    }
    static MeasurementBasis xz(int k) {
        return MeasurementBasis(Kind::kXZ, k);
    }
    /// Z, X, XZ, XZ^2, ..., XZ^{d-1}.
    static std::vector<MeasurementBasis> all(PrimeDim dim);

    Kind kind() const {
        return kind_;
    }
    int k() const {
        return k_;
    }
    /// Position in all(): Z is 0, XZ^k is k + 1.
    int ordinal() const {
        return kind_ == Kind::kZ ? 0 : k_ + 1;
    }
    std::string label() const;
    /// The measured single-qudit observable as a Pauli word.
    PauliWord observable(PrimeDim dim) const;

    friend bool operator==(const MeasurementBasis&, const MeasurementBasis&) = default;

   private:
    MeasurementBasis(Kind kind, int k) : kind_(kind), k_(k) {
    }
    Kind kind_;
    int k_;
};

/// Eigenvector labelled by `outcome`. Z outcome i is |i⟩ (eigenvalue ω^i).
/// XZ^k outcome j is d^{-1/2} Σ_m ω^{jm + k m(m-1)/2} |m⟩ with eigenvalue
/// ω^{-j}, which for k = 0 is the Fourier state |j⟩_x. Requires odd d.
StateVector mub_eigenstate(const MeasurementBasis& basis, int outcome, PrimeDim dim);

/// Eigenvalue exponent of mub_eigenstate(basis, outcome) under the observable.
int mub_eigen_exp(const MeasurementBasis& basis, int outcome, PrimeDim dim);

struct MeasurementEvent {
    int qudit;  // 0-based site of the state being measured
    MeasurementBasis basis;
    int outcome;
};

struct Projection {
    /// Normalized residual on the unmeasured sites; empty when the outcome
    /// has zero probability.
    std::optional<StateVector> residual;
    double probability = 0.0;
};

/// Projects `e.qudit` onto ⟨U(i)| and removes it from the state.
Projection project(const StateVector& s, const MeasurementEvent& e);

/// Raised when a purity pattern does not match any graph-state residue.
class ClassificationError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

struct StateClass3 {
    enum class Kind { kProduct, kSnB, kGhz3 };
    Kind kind;
    int separated = -1;  // site of the unentangled qudit when kind == kSnB

    std::string label() const;
    friend bool operator==(const StateClass3&, const StateClass3&) = default;
};

enum class StateClass2 { kProduct, kBell };

std::string to_string(StateClass2 c);

/// Absolute tolerance for matching purity patterns.
inline constexpr double kPurityPatternTol = 1e-7;

StateClass3 classify3(const StateVector& s);
StateClass2 classify2(const StateVector& s);

/// Smallest outcome index with nonzero probability and its projection.
struct Measured {
    int outcome;
    Projection projection;
};
Measured measure_first_possible(const StateVector& s, int qudit, const MeasurementBasis& basis);

struct SecondRecord {
    int qudit;  // original 0-based label
    MeasurementBasis basis;
    int outcome;
    StateClass2 result;
};

struct FirstRecord {
    int qudit;  // original 0-based label
    MeasurementBasis basis;
    int outcome;
    StateClass3 result;  // separated site in original labels
    std::vector<SecondRecord> second;
};

/// Outcome counts for one first-measurement class on one qudit.
struct BranchCounts {
    int first_measurements = 0;
    int second_product = 0;
    int second_bell = 0;
};

struct QuditBranches {
    BranchCounts product;
    BranchCounts snb;
    BranchCounts ghz3;
};

/// Classified outcomes of all 4(d+1) first and 12(d+1)^2 ordered-pair
/// measurements on a four-qudit state.
class PathTally {
   public:
    PathTally(PrimeDim dim, std::vector<FirstRecord> records);

    PrimeDim dim() const {
        return dim_;
    }
    const std::vector<FirstRecord>& records() const {
        return records_;
    }
    const QuditBranches& branches(int first_qudit) const {
        return branches_[static_cast<std::size_t>(first_qudit)];
    }

    int first_product() const;
    int first_snb() const;
    int first_ghz3() const;
    int pair_product() const;
    int pair_bell() const;

    /// Paths removing all entanglement after N ∈ {1, 2, 3} measurements,
    /// indexed by N (entry 0 unused).
    std::array<int, 4> persistency_histogram() const;
    std::array<int, 4> persistency_histogram(int first_qudit) const;

   private:
    PrimeDim dim_;
    std::vector<FirstRecord> records_;
    std::array<QuditBranches, kQudits> branches_{};
};

/// Enumerates all first measurements (4 qudits × (d+1) bases) and all
/// second measurements on the residues (3 qudits × (d+1) bases).
PathTally enumerate_paths(const StateVector& s);

/// N(path): 1 if the first measurement leaves a product state, 2 if the
/// second does, else 3.
int path_persistency(const FirstRecord& first, const SecondRecord& second);

struct PersistencyStats {
    double n_ave;  // mean N over the 3(d+1)^2 paths of a fixed first qudit
    int n_min;     // Pauli persistency
    double delta;  // [#Bell − #product] / 3(d+1)^2
    std::array<double, kQudits> n_ave_by_first_qudit;
};

PersistencyStats persistency_stats(const PathTally& tally);
PersistencyStats persistency_stats(const StateVector& s);

/// Bases on `qudit` whose measurement turns a 3-qudit GHZ-class state into a
/// product state (as ordinals into MeasurementBasis::all).
std::vector<int> vulnerable_bases(const StateVector& ghz3, int qudit);

}  // namespace quartet

#endif
