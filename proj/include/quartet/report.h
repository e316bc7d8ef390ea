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

#ifndef QUARTET_REPORT_H
#define QUARTET_REPORT_H

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "quartet/entanglement.h"
#include "quartet/graph_classifier.h"
#include "quartet/steering.h"

namespace quartet {

inline constexpr const char* kToolVersion = "0.1.0";

struct Rational {
    long long num = 0;
    long long den = 1;

    double value() const {
        return static_cast<double>(num) / static_cast<double>(den);
    }
    /// "p/q", or "p" when q = 1.
    std::string to_string() const;
    friend bool operator==(const Rational&, const Rational&) = default;
};

/// num/den in lowest terms with a positive denominator.
Rational make_rational(long long num, long long den);

/// Best continued-fraction approximation with denominator ≤ max_den, if it
/// lies within tol of x.
std::optional<Rational> rationalize(double x, long long max_den = 100000, double tol = 1e-12);

/// x printed with 12 significant digits and parsed back.
double round12(double x);

/// {"exact": "p/q", "value": x}; exact is null when no small rational fits.
nlohmann::json number_json(double x);
nlohmann::json number_json(const Rational& r);

/// Keys are 1-based subsystem labels ("1", "13", ...).
nlohmann::json profile_json(const PurityProfile& profile);
/// Nonzero amplitudes as {digits, phase_exp, magnitude, probability};
/// phase_exp is null when the phase is not a power of ω.
nlohmann::json state_json(const StateVector& s, double tol = 1e-12);
nlohmann::json canonical_json(const CanonicalResult& result);
nlohmann::json census_json(const ClassCensus& census);

/// {"product", "snb", "ghz3"} first-measurement counts.
nlohmann::json table3a_json(const PathTally& tally);
/// {"product", "bell", "total"} ordered-pair counts.
nlohmann::json table3b_json(const PathTally& tally);
/// Per first qudit: each residue class with its count and the split of the
/// second measurements into Bell and product outcomes.
nlohmann::json fig2_json(const PathTally& tally);

/// N_ave, Δ as exact rationals from the path histogram.
struct ExactPersistency {
    Rational n_ave;
    Rational delta;
    int n_min;
    std::array<int, 4> histogram;
};
ExactPersistency exact_persistency(const PathTally& tally);
nlohmann::json persistency_json(const ExactPersistency& p);

struct VerificationCell {
    std::string id;
    std::string expected;
    std::string actual;
    bool pass;
};

struct ReportBundle {
    std::vector<int> dims;
    nlohmann::json body;
    std::vector<VerificationCell> cells;

    bool all_pass() const;
    nlohmann::json to_json() const;
    /// One row per verification cell.
    std::string to_csv() const;
};

inline constexpr int kMaxTablesDim = 13;

/// Purity tables, measurement tallies, branch trees, persistency, MMES flags
/// and the classifier census for each odd prime in dims, with every reference
/// value checked. The census only runs for d ≤ kMaxExhaustiveDim.
ReportBundle build_report(const std::vector<int>& dims);

}  // namespace quartet

#endif
