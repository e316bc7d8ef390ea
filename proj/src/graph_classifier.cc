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

#include "quartet/graph_classifier.h"

#include <cmath>
#include <utility>

#include "quartet/entanglement.h"

namespace quartet {

static void require_vertex(int v) {
    if (v < 0 || v >= kQudits) {
        throw std::out_of_range("vertex index outside 0..3");
    }
}

AdjacencyMatrix apply_scale(const AdjacencyMatrix& g, int vertex, long long f) {
    require_vertex(vertex);
    if (g.dim().mod(f) == 0) {
        throw DomainError("scale factor must be nonzero");
    }
    AdjacencyMatrix out = g;
    for (int m = 0; m < kQudits; m++) {
        if (m != vertex) {
            out.set_edge(vertex, m, static_cast<long long>(g(vertex, m)) * f);
        }
    }
    return out;
}

AdjacencyMatrix apply_star(const AdjacencyMatrix& g, int vertex, long long f) {
    require_vertex(vertex);
    AdjacencyMatrix out = g;
    const long long fm = g.dim().mod(f);
    for (int l = 0; l < kQudits; l++) {
        for (int m = l + 1; m < kQudits; m++) {
            out.set_edge(l, m, g(l, m) + fm * g(l, vertex) * g(vertex, m));
        }
    }
    return out;
}

AdjacencyMatrix apply_swap(const AdjacencyMatrix& g, int a, int b) {
    require_vertex(a);
    require_vertex(b);
    auto relabel = [a, b](int v) { return v == a ? b : v == b ? a : v; };
    AdjacencyMatrix out(g.dim());
    for (int l = 0; l < kQudits; l++) {
        for (int m = l + 1; m < kQudits; m++) {
            out.set_edge(relabel(l), relabel(m), g(l, m));
        }
    }
    return out;
}

AdjacencyMatrix apply_operation(const AdjacencyMatrix& g, const LCOperation& op) {
    return std::visit(
        [&g](const auto& o) -> AdjacencyMatrix {
            using T = std::decay_t<decltype(o)>;
            if constexpr (std::is_same_v<T, ScaleOp>) {
                return apply_scale(g, o.vertex, o.f);
            } else if constexpr (std::is_same_v<T, StarOp>) {
                return apply_star(g, o.vertex, o.f);
            } else {
                return apply_swap(g, o.a, o.b);
            }
        },
        op);
}

AdjacencyMatrix replay(const AdjacencyMatrix& g, const std::vector<LCOperation>& trace) {
    AdjacencyMatrix m = g;
    for (const auto& op : trace) {
        m = apply_operation(m, op);
    }
    return m;
}

std::string class_name(EntanglementClass c) {
    switch (c) {
        case EntanglementClass::kG:
            return "G";
        case EntanglementClass::kC:
            return "C";
        case EntanglementClass::kP:
            return "P";
        case EntanglementClass::kNotConnected:
            return "NotConnected";
    }
    return "?";
}

namespace {

/// Working matrix plus the operations applied to reach it.
class Reducer {
   public:
    explicit Reducer(const AdjacencyMatrix& g) : m_(g) {
    }

    const AdjacencyMatrix& matrix() const {
        return m_;
    }
    std::vector<LCOperation> take_trace() {
        return std::move(trace_);
    }

    int at(int n, int k) const {
        return m_(n, k);
    }
    int inv(long long v) const {
        return field_inv(FieldElem(v, m_.dim())).value();
    }
    int mul(long long a, long long b) const {
        return m_.dim().mod(a * b);
    }

    void scale(int vertex, int f) {
        apply(ScaleOp{vertex, m_.dim().mod(f)});
    }
    void star(int vertex, int f) {
        apply(StarOp{vertex, m_.dim().mod(f)});
    }

    /// Moves the vertex currently at position v to position target[v].
    void permute(const std::array<int, kQudits>& target) {
        std::array<int, kQudits> at_pos{0, 1, 2, 3};  // at_pos[p] = original vertex now at p
        std::array<int, kQudits> source{};            // source[t] = vertex that must land on t
        for (int v = 0; v < kQudits; v++) {
            source[static_cast<std::size_t>(target[static_cast<std::size_t>(v)])] = v;
        }
        for (int t = 0; t < kQudits; t++) {
            int p = 0;
            while (at_pos[static_cast<std::size_t>(p)] != source[static_cast<std::size_t>(t)]) {
                p++;
            }
            if (p != t) {
                apply(SwapOp{t, p});
                std::swap(at_pos[static_cast<std::size_t>(t)], at_pos[static_cast<std::size_t>(p)]);
            }
        }
    }

    /// Scales a square 1-2-3-4 (with optional 1-4 edge) to unit weights on
    /// 1-2, 2-3, 3-4. Returns the resulting 1-4 weight.
    int normalize_path() {
        scale(0, inv(at(0, 1)));
        scale(2, inv(at(1, 2)));
        scale(3, inv(at(2, 3)));
        return at(0, 3);
    }

   private:
    void apply(const LCOperation& op) {
        m_ = apply_operation(m_, op);
        trace_.push_back(op);
    }

    AdjacencyMatrix m_;
    std::vector<LCOperation> trace_;
};

bool has_edge(const AdjacencyMatrix& g, int n, int m) {
    return g(n, m) != 0;
}

}  // namespace

CanonicalResult canonicalize(const AdjacencyMatrix& g) {
    if (g.edge_count() < 3 || !g.is_connected()) {
        return {EntanglementClass::kNotConnected, std::nullopt, {}, g};
    }
    Reducer r(g);
    const PrimeDim dim = g.dim();
    for (;;) {
        const AdjacencyMatrix& m = r.matrix();
        const int edges = m.edge_count();
        if (edges == 6) {
            // ∗_3(-d e^-1 f^-1) clears the 2-4 entry.
            const int d_entry = m(1, 3), e = m(1, 2), f = m(2, 3);
            r.star(2, -r.mul(d_entry, r.inv(r.mul(e, f))));
            continue;
        }
        if (edges == 5) {
            // Place the missing edge at 2-4, then ∗_2(-b/ae) clears 1-3.
            int u = -1, v = -1;
            for (int n = 0; n < kQudits && u < 0; n++) {
                for (int k = n + 1; k < kQudits; k++) {
                    if (!has_edge(m, n, k)) {
                        u = n;
                        v = k;
                        break;
                    }
                }
            }
            std::array<int, kQudits> target{};
            int next = 0;
            std::array<int, 2> others{};
            for (int n = 0; n < kQudits; n++) {
                if (n != u && n != v) {
                    others[static_cast<std::size_t>(next++)] = n;
                }
            }
            target[static_cast<std::size_t>(u)] = 1;
            target[static_cast<std::size_t>(v)] = 3;
            target[static_cast<std::size_t>(others[0])] = 0;
            target[static_cast<std::size_t>(others[1])] = 2;
            r.permute(target);
            const AdjacencyMatrix& p = r.matrix();
            r.star(1, -r.mul(p(0, 2), r.inv(r.mul(p(0, 1), p(1, 2)))));
            continue;
        }
        if (edges == 4) {
            bool cycle = true;
            for (int n = 0; n < kQudits; n++) {
                cycle = cycle && m.degree(n) == 2;
            }
            if (cycle) {
                // Walk the cycle from vertex 0: 0 → n1 → opposite → n2.
                int n1 = -1, n2 = -1, opposite = -1;
                for (int k = 1; k < kQudits; k++) {
                    if (has_edge(m, 0, k)) {
                        (n1 < 0 ? n1 : n2) = k;
                    } else {
                        opposite = k;
                    }
                }
                std::array<int, kQudits> target{};
                target[0] = 0;
                target[static_cast<std::size_t>(n1)] = 1;
                target[static_cast<std::size_t>(opposite)] = 2;
                target[static_cast<std::size_t>(n2)] = 3;
                r.permute(target);
                const int gamma = r.normalize_path();
                AdjacencyMatrix canonical = r.matrix();
                return {gamma == 1 ? EntanglementClass::kC : EntanglementClass::kP, gamma, r.take_trace(),
                        std::move(canonical)};
            }
            // Triangle with a pendant: pendant → 4, its neighbor → 3, then
            // ∗_2(-b/ae) clears 1-3 and leaves the path 1-2-3-4.
            int pendant = 0;
            while (m.degree(pendant) != 1) {
                pendant++;
            }
            int hub = 0;
            while (!has_edge(m, pendant, hub)) {
                hub++;
            }
            std::array<int, kQudits> target{};
            int next = 0;
            for (int n = 0; n < kQudits; n++) {
                if (n == pendant) {
                    target[static_cast<std::size_t>(n)] = 3;
                } else if (n == hub) {
                    target[static_cast<std::size_t>(n)] = 2;
                } else {
                    target[static_cast<std::size_t>(n)] = next++;
                }
            }
            r.permute(target);
            const AdjacencyMatrix& p = r.matrix();
            r.star(1, -r.mul(p(0, 2), r.inv(r.mul(p(0, 1), p(1, 2)))));
            continue;
        }
        if (edges == 3) {
            int center = -1;
            for (int n = 0; n < kQudits; n++) {
                if (m.degree(n) == 3) {
                    center = n;
                }
            }
            if (center >= 0) {
                std::array<int, kQudits> target{0, 1, 2, 3};
                std::swap(target[static_cast<std::size_t>(center)], target[3]);
                r.permute(target);
                for (int leaf = 0; leaf < 3; leaf++) {
                    r.scale(leaf, r.inv(r.at(leaf, 3)));
                }
                AdjacencyMatrix canonical = r.matrix();
                return {EntanglementClass::kG, std::nullopt, r.take_trace(), std::move(canonical)};
            }
            // A path: walk it from one endpoint.
            int end = 0;
            while (m.degree(end) != 1) {
                end++;
            }
            std::array<int, kQudits> target{};
            int prev = -1, cur = end;
            for (int pos = 0; pos < kQudits; pos++) {
                target[static_cast<std::size_t>(cur)] = pos;
                int nxt = -1;
                for (int k = 0; k < kQudits; k++) {
                    if (k != cur && k != prev && has_edge(m, cur, k)) {
                        nxt = k;
                    }
                }
                prev = cur;
                cur = nxt;
            }
            r.permute(target);
            const int gamma = r.normalize_path();
            AdjacencyMatrix canonical = r.matrix();
            return {EntanglementClass::kC, gamma, r.take_trace(), std::move(canonical)};
        }
        // Local operations preserve connectivity, so this is unreachable for
        // connected input.
        throw std::logic_error("reduction left a graph with fewer than three edges: " + m.to_string() + " over d=" +
                               std::to_string(dim.value()));
    }
}

std::optional<EntanglementClass> oracle_class(const AdjacencyMatrix& g) {
    const StateVector s = build_state(g);
    const double d = g.dim().value();
    constexpr double tol = 1e-9;
    for (const auto& a : bipartitions()) {
        if (std::abs(purity(partial_trace(s, a)) - 1.0) <= tol) {
            return EntanglementClass::kNotConnected;
        }
    }
    int at_one_over_d = 0;
    for (const auto& a : {SubsystemId{0, 1}, SubsystemId{0, 2}, SubsystemId{0, 3}}) {
        const double p = purity(partial_trace(s, a));
        if (std::abs(p - 1.0 / d) <= tol) {
            at_one_over_d++;
        } else if (std::abs(p - 1.0 / (d * d)) > tol) {
            return std::nullopt;
        }
    }
    switch (at_one_over_d) {
        case 3:
            return EntanglementClass::kG;
        case 1:
            return EntanglementClass::kC;
        case 0:
            return EntanglementClass::kP;
        default:
            return std::nullopt;
    }
}

ClassCensus classify_exhaustive(PrimeDim dim) {
    if (dim.value() > kMaxExhaustiveDim) {
        throw std::invalid_argument("exhaustive sweep is limited to d <= " + std::to_string(kMaxExhaustiveDim));
    }
    ClassCensus census;
    census.d = dim.value();
    const std::array<std::pair<int, int>, 6> slots{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
    const std::size_t total = dim.pow(6);
    for (std::size_t code = 0; code < total; code++) {
        AdjacencyMatrix g(dim);
        std::size_t rest = code;
        for (const auto& [n, m] : slots) {
            g.set_edge(n, m, static_cast<long long>(rest % static_cast<std::size_t>(dim.value())));
            rest /= static_cast<std::size_t>(dim.value());
        }
        const CanonicalResult result = canonicalize(g);
        census.processed++;
        if (replay(g, result.trace) != result.canonical) {
            census.replay_failures++;
            throw ClassifierMismatch(g, "trace replay does not reproduce the canonical form for " + g.to_string());
        }
        const auto oracle = oracle_class(g);
        if (!oracle || *oracle != result.cls) {
            census.mismatches++;
            throw ClassifierMismatch(g, "canonical class " + class_name(result.cls) + " disagrees with purity oracle (" +
                                            (oracle ? class_name(*oracle) : std::string("unrecognized")) + ") for " +
                                            g.to_string());
        }
        switch (result.cls) {
            case EntanglementClass::kG:
                census.g++;
                break;
            case EntanglementClass::kC:
                census.c++;
                break;
            case EntanglementClass::kP:
                census.p++;
                break;
            case EntanglementClass::kNotConnected:
                census.not_connected++;
                break;
        }
    }
    return census;
}

}  // namespace quartet
