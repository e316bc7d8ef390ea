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

#ifndef QUARTET_GRAPH_CLASSIFIER_H
#define QUARTET_GRAPH_CLASSIFIER_H

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "quartet/graph_state.h"

namespace quartet {

/// Multiply row and column `vertex` by f ≠ 0.
struct ScaleOp {
    int vertex;
    int f;
    friend bool operator==(const ScaleOp&, const ScaleOp&) = default;
};

/// Γ_lm += f Γ_l,vertex Γ_vertex,m for every off-diagonal pair l ≠ m.
struct StarOp {
    int vertex;
    int f;
    friend bool operator==(const StarOp&, const StarOp&) = default;
};

/// Exchange vertices a and b (rows and columns).
struct SwapOp {
    int a;
    int b;
    friend bool operator==(const SwapOp&, const SwapOp&) = default;
};

using LCOperation = std::variant<ScaleOp, StarOp, SwapOp>;

AdjacencyMatrix apply_scale(const AdjacencyMatrix& g, int vertex, long long f);
/// The diagonal stays pinned at zero; only l ≠ m entries change.
AdjacencyMatrix apply_star(const AdjacencyMatrix& g, int vertex, long long f);
AdjacencyMatrix apply_swap(const AdjacencyMatrix& g, int a, int b);
AdjacencyMatrix apply_operation(const AdjacencyMatrix& g, const LCOperation& op);
AdjacencyMatrix replay(const AdjacencyMatrix& g, const std::vector<LCOperation>& trace);

enum class EntanglementClass { kG, kC, kP, kNotConnected };

std::string class_name(EntanglementClass c);

struct CanonicalResult {
    EntanglementClass cls;
    /// Weight of the 1-4 edge of the reduced square; present for C and P.
    std::optional<int> gamma_tilde;
    std::vector<LCOperation> trace;
    /// replay(input, trace): the star centered on vertex 4 for G, the square
    /// with 1-4 weight gamma_tilde for C and P, the input for NotConnected.
    AdjacencyMatrix canonical;
};

/// Reduces any four-vertex weighted graph to the G star or the square with
/// a single free weight, recording every local operation applied.
CanonicalResult canonicalize(const AdjacencyMatrix& g);

/// Class read off the purity profile of build_state(g): any bipartition pure
/// means NotConnected; otherwise the number of 2|2 splits at 1/d (3, 1, 0)
/// selects G, C, P. nullopt for any other pattern.
std::optional<EntanglementClass> oracle_class(const AdjacencyMatrix& g);

/// Raised by classify_exhaustive when canonicalization and the purity oracle
/// disagree.
class ClassifierMismatch : public std::runtime_error {
   public:
    ClassifierMismatch(const AdjacencyMatrix& counterexample, const std::string& what)
        : std::runtime_error(what), counterexample_(counterexample) {
    }
    const AdjacencyMatrix& counterexample() const {
        return counterexample_;
    }

   private:
    AdjacencyMatrix counterexample_;
};

struct ClassCensus {
    int d = 0;
    std::size_t processed = 0;
    std::size_t g = 0;
    std::size_t c = 0;
    std::size_t p = 0;
    std::size_t not_connected = 0;
    std::size_t mismatches = 0;
    std::size_t replay_failures = 0;
};

/// Largest d accepted by classify_exhaustive.
inline constexpr int kMaxExhaustiveDim = 5;

/// Canonicalizes all d^6 symmetric zero-diagonal matrices and cross-checks
/// each class against oracle_class. Throws ClassifierMismatch on the first
/// disagreement.
ClassCensus classify_exhaustive(PrimeDim dim);

}  // namespace quartet

#endif
