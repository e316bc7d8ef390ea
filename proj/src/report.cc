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

#include "quartet/report.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numbers>
#include <numeric>
#include <sstream>

namespace quartet {

using nlohmann::json;

std::string Rational::to_string() const {
    if (den == 1) {
        return std::to_string(num);
    }
    return std::to_string(num) + "/" + std::to_string(den);
}

Rational make_rational(long long num, long long den) {
    if (den == 0) {
        throw std::invalid_argument("zero denominator");
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const long long g = std::gcd(num, den);
    return {num / g, den / g};
}

std::optional<Rational> rationalize(double x, long long max_den, double tol) {
    if (!std::isfinite(x)) {
        return std::nullopt;
    }
    // Convergents h/k of the continued fraction of x.
    long long h_prev = 1, h = static_cast<long long>(std::floor(x));
    long long k_prev = 0, k = 1;
    double rest = x - std::floor(x);
    for (int iter = 0; iter < 64; iter++) {
        if (std::abs(x - static_cast<double>(h) / static_cast<double>(k)) <= tol) {
            return make_rational(h, k);
        }
        if (rest < 1e-15) {
            break;
        }
        const double inv = 1.0 / rest;
        const long long a = static_cast<long long>(std::floor(inv));
        rest = inv - std::floor(inv);
        const long long h_next = a * h + h_prev;
        const long long k_next = a * k + k_prev;
        if (k_next > max_den) {
            break;
        }
        h_prev = h;
        h = h_next;
        k_prev = k;
        k = k_next;
    }
    return std::nullopt;
}

static std::string format12(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

double round12(double x) {
    return std::strtod(format12(x).c_str(), nullptr);
}

json number_json(double x) {
    const auto r = rationalize(x);
    return {{"exact", r ? json(r->to_string()) : json(nullptr)}, {"value", round12(x)}};
}

json number_json(const Rational& r) {
    return {{"exact", r.to_string()}, {"value", round12(r.value())}};
}

json profile_json(const PurityProfile& profile) {
    json out = json::object();
    for (const auto& [a, value] : profile.values()) {
        out[a.label()] = number_json(value);
    }
    return out;
}

json state_json(const StateVector& s, double tol) {
    const int d = s.dim().value();
    json amps = json::array();
    for (std::size_t index = 0; index < s.size(); index++) {
        const std::complex<double> a = s[index];
        const double mag = std::abs(a);
        if (mag <= tol) {
            continue;
        }
        const double turns = std::arg(a) * d / (2.0 * std::numbers::pi);
        const double nearest = std::round(turns);
        json phase = nullptr;
        if (std::abs(turns - nearest) < 1e-6) {
            phase = s.dim().mod(static_cast<long long>(nearest));
        }
        amps.push_back({{"digits", index_digits(s.dim(), s.qudit_count(), index)},
                        {"phase_exp", phase},
                        {"magnitude", number_json(mag)},
                        {"probability", number_json(mag * mag)}});
    }
    return {{"d", d}, {"qudits", s.qudit_count()}, {"nonzero", amps.size()}, {"amplitudes", std::move(amps)}};
}

static json matrix_json(const AdjacencyMatrix& g) {
    json rows = json::array();
    for (int n = 0; n < kQudits; n++) {
        json row = json::array();
        for (int m = 0; m < kQudits; m++) {
            row.push_back(g(n, m));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

json canonical_json(const CanonicalResult& result) {
    json trace = json::array();
    for (const auto& op : result.trace) {
        std::visit(
            [&trace](const auto& o) {
                using T = std::decay_t<decltype(o)>;
                if constexpr (std::is_same_v<T, ScaleOp>) {
                    trace.push_back({{"op", "scale"}, {"vertex", o.vertex + 1}, {"f", o.f}});
                } else if constexpr (std::is_same_v<T, StarOp>) {
                    trace.push_back({{"op", "star"}, {"vertex", o.vertex + 1}, {"f", o.f}});
                } else {
                    trace.push_back({{"op", "swap"}, {"a", o.a + 1}, {"b", o.b + 1}});
                }
            },
            op);
    }
    return {{"class", class_name(result.cls)},
            {"gamma_tilde", result.gamma_tilde ? json(*result.gamma_tilde) : json(nullptr)},
            {"trace", std::move(trace)},
            {"canonical", matrix_json(result.canonical)}};
}

json census_json(const ClassCensus& census) {
    return {{"d", census.d},
            {"processed", census.processed},
            {"G", census.g},
            {"C", census.c},
            {"P", census.p},
            {"NotConnected", census.not_connected},
            {"mismatches", census.mismatches},
            {"replay_failures", census.replay_failures}};
}

json table3a_json(const PathTally& tally) {
    return {{"product", tally.first_product()}, {"snb", tally.first_snb()}, {"ghz3", tally.first_ghz3()}};
}

json table3b_json(const PathTally& tally) {
    return {{"product", tally.pair_product()},
            {"bell", tally.pair_bell()},
            {"total", tally.pair_product() + tally.pair_bell()}};
}

static json branch_json(const BranchCounts& b) {
    return {{"first", b.first_measurements}, {"then_product", b.second_product}, {"then_bell", b.second_bell}};
}

json fig2_json(const PathTally& tally) {
    json out = json::array();
    for (int q = 0; q < kQudits; q++) {
        const QuditBranches& qb = tally.branches(q);
        out.push_back({{"first_qudit", q + 1},
                       {"product", branch_json(qb.product)},
                       {"snb", branch_json(qb.snb)},
                       {"ghz3", branch_json(qb.ghz3)}});
    }
    return out;
}

ExactPersistency exact_persistency(const PathTally& tally) {
    const long long d = tally.dim().value();
    const long long paths = 4 * 3 * (d + 1) * (d + 1);
    ExactPersistency p{};
    p.histogram = tally.persistency_histogram();
    const long long weighted = 1LL * p.histogram[1] + 2LL * p.histogram[2] + 3LL * p.histogram[3];
    p.n_ave = make_rational(weighted, paths);
    p.delta = make_rational(tally.pair_bell() - tally.pair_product(), paths);
    p.n_min = p.histogram[1] > 0 ? 1 : p.histogram[2] > 0 ? 2 : 3;
    return p;
}

json persistency_json(const ExactPersistency& p) {
    return {{"n_ave", number_json(p.n_ave)},
            {"n_min", p.n_min},
            {"delta", number_json(p.delta)},
            {"histogram", {{"1", p.histogram[1]}, {"2", p.histogram[2]}, {"3", p.histogram[3]}}}};
}

bool ReportBundle::all_pass() const {
    return std::all_of(cells.begin(), cells.end(), [](const VerificationCell& c) { return c.pass; });
}

json ReportBundle::to_json() const {
    json out = body;
    json v = json::array();
    for (const auto& c : cells) {
        v.push_back({{"id", c.id}, {"expected", c.expected}, {"actual", c.actual}, {"status", c.pass ? "PASS" : "FAIL"}});
    }
    out["verification"] = std::move(v);
    out["status"] = all_pass() ? "PASS" : "FAIL";
    return out;
}

namespace {

// RFC 4180 quoting; column labels like "n,n+1" contain commas.
std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') {
            out += '"';
        }
        out += ch;
    }
    return out + '"';
}

}  // namespace

std::string ReportBundle::to_csv() const {
    std::ostringstream out;
    out << "id,expected,actual,status\n";
    for (const auto& c : cells) {
        out << csv_field(c.id) << ',' << csv_field(c.expected) << ',' << csv_field(c.actual) << ','
            << (c.pass ? "PASS" : "FAIL") << '\n';
    }
    return out.str();
}

namespace {

class Checker {
   public:
    explicit Checker(std::vector<VerificationCell>& cells) : cells_(cells) {
    }

    void exact(const std::string& id, long long expected, long long actual) {
        cells_.push_back({id, std::to_string(expected), std::to_string(actual), expected == actual});
    }
    void flag(const std::string& id, bool expected, bool actual) {
        cells_.push_back({id, expected ? "true" : "false", actual ? "true" : "false", expected == actual});
    }
    void rational(const std::string& id, const Rational& expected, const Rational& actual) {
        cells_.push_back({id, expected.to_string(), actual.to_string(), expected == actual});
    }
    void near(const std::string& id, double expected, double actual, double tol) {
        cells_.push_back({id, format12(expected) + "+-" + format12(tol), format12(actual),
                          std::abs(expected - actual) <= tol});
    }
    void custom(const std::string& id, const std::string& expected, const std::string& actual, bool pass) {
        cells_.push_back({id, expected, actual, pass});
    }

   private:
    std::vector<VerificationCell>& cells_;
};

struct FamilyResult {
    Family family;
    PurityProfile profile;
    PathTally tally;
    ExactPersistency persistency;
    bool mm1;
    bool mm2;
};

// Subsystem columns: single sites, opposite corners of the square, neighbours.
const std::vector<std::pair<std::string, std::vector<std::string>>>& table1_columns() {
    static const std::vector<std::pair<std::string, std::vector<std::string>>> columns{
        {"n", {"1", "2", "3", "4"}}, {"n,n+2", {"13", "24"}}, {"n,n+1", {"12", "23", "34", "14"}}};
    return columns;
}

// Exponent k of the expected purity 1/d^k per column.
std::array<int, 3> table1_exponents(Family f) {
    switch (f) {
        case Family::kGhz:
            return {1, 1, 1};
        case Family::kCluster:
            return {1, 1, 2};
        case Family::kP:
            return {1, 2, 2};
    }
    return {};
}

struct TallyExpectation {
    long long first_product, first_snb, first_ghz3, pair_product, pair_bell;
};

TallyExpectation expected_tally(Family f, long long d) {
    switch (f) {
        case Family::kGhz:
            return {4, 0, 4 * d, 24 * d + 12, 12 * d * d};
        case Family::kCluster:
            return {0, 4, 4 * d, 20 * d + 8, 12 * d * d + 4 * d + 4};
        case Family::kP:
            return {0, 0, 4 * (d + 1), 12 * d + 12, 12 * d * d + 12 * d};
    }
    return {};
}

// Printed three-figure values at d = 3: N_ave and Δ.
std::pair<double, double> printed_d3(Family f) {
    switch (f) {
        case Family::kGhz:
            return {2.31, 0.125};
        case Family::kCluster:
            return {2.65, 0.292};
        case Family::kP:
            return {2.75, 0.50};
    }
    return {};
}

int expected_n_min(Family f) {
    return f == Family::kGhz ? 1 : 2;
}

const std::array<Family, 3> kFamilies{Family::kGhz, Family::kCluster, Family::kP};

}  // namespace

ReportBundle build_report(const std::vector<int>& dims_in) {
    if (dims_in.empty()) {
        throw std::invalid_argument("no dimension given");
    }
    std::vector<int> dims = dims_in;
    std::sort(dims.begin(), dims.end());
    dims.erase(std::unique(dims.begin(), dims.end()), dims.end());
    for (int d : dims) {
        const PrimeDim dim(d);
        if (!dim.is_odd()) {
            throw DomainError("tables need an odd prime d");
        }
        if (d > kMaxTablesDim) {
            throw std::invalid_argument("tables are limited to d <= " + std::to_string(kMaxTablesDim));
        }
    }

    ReportBundle bundle;
    bundle.dims = dims;
    Checker check(bundle.cells);
    json results = json::array();
    std::map<Family, std::vector<std::pair<int, Rational>>> n_ave_series;

    for (int d : dims) {
        const PrimeDim dim(d);
        const std::string dtag = "d" + std::to_string(d);
        json entry{{"d", d}};
        for (Family f : kFamilies) {
            const StateVector s = reduced_state(f, dim);
            PurityProfile profile = purity_profile(s);
            FamilyResult r{f, profile, enumerate_paths(s), {}, is_k_mm(profile, 1), is_k_mm(profile, 2)};
            r.persistency = exact_persistency(r.tally);
            const std::string name = family_name(f);
            const std::string tag = dtag + "." + name;

            // Purity table.
            json columns = json::object();
            const auto exps = table1_exponents(f);
            for (std::size_t c = 0; c < 3; c++) {
                const auto& [col, labels] = table1_columns()[c];
                const double expected = 1.0 / std::pow(static_cast<double>(d), exps[c]);
                bool pass = true;
                double worst = profile.at(labels.front());
                for (const auto& l : labels) {
                    const double v = profile.at(l);
                    if (std::abs(v - expected) > 1e-9) {
                        pass = false;
                        worst = v;
                    }
                }
                columns[col] = number_json(worst);
                const auto exact = rationalize(worst);
                const Rational want = make_rational(1, static_cast<long long>(dim.pow(exps[c])));
                check.custom(tag + ".table1." + col, want.to_string(), exact ? exact->to_string() : format12(worst),
                             pass);
            }
            entry["table1"][name] = {{"columns", std::move(columns)}, {"subsystems", profile_json(profile)}};

            // Measurement tallies.
            const TallyExpectation t = expected_tally(f, d);
            check.exact(tag + ".table3a.product", t.first_product, r.tally.first_product());
            check.exact(tag + ".table3a.snb", t.first_snb, r.tally.first_snb());
            check.exact(tag + ".table3a.ghz3", t.first_ghz3, r.tally.first_ghz3());
            check.exact(tag + ".table3b.product", t.pair_product, r.tally.pair_product());
            check.exact(tag + ".table3b.bell", t.pair_bell, r.tally.pair_bell());
            check.exact(tag + ".table3b.total", 12LL * (d + 1) * (d + 1), r.tally.pair_product() + r.tally.pair_bell());
            entry["table3a"][name] = table3a_json(r.tally);
            entry["table3b"][name] = table3b_json(r.tally);
            entry["fig2_tree"][name] = fig2_json(r.tally);

            // Persistency. The tallies fix N_ave and Δ exactly.
            const long long paths = 12LL * (d + 1) * (d + 1);
            const long long n1 = 3LL * (d + 1) * t.first_product;
            const Rational want_n_ave =
                make_rational(n1 + 2 * (t.pair_product - n1) + 3 * t.pair_bell, paths);
            const Rational want_delta = make_rational(t.pair_bell - t.pair_product, paths);
            check.rational(tag + ".persistency.n_ave", want_n_ave, r.persistency.n_ave);
            check.rational(tag + ".persistency.delta", want_delta, r.persistency.delta);
            check.exact(tag + ".persistency.n_min", expected_n_min(f), r.persistency.n_min);
            if (d == 3) {
                const auto [n_ave_printed, delta_printed] = printed_d3(f);
                check.near(tag + ".persistency.n_ave_printed", n_ave_printed, r.persistency.n_ave.value(), 5e-3);
                check.near(tag + ".persistency.delta_printed", delta_printed, r.persistency.delta.value(), 1e-3);
            }
            check.custom(tag + ".persistency.n_ave_below_3", "<3", r.persistency.n_ave.to_string(),
                         r.persistency.n_ave.value() < 3.0);
            entry["persistency"][name] = persistency_json(r.persistency);
            n_ave_series[f].push_back({d, r.persistency.n_ave});

            // Mixing.
            check.flag(tag + ".mmes.1mm", true, r.mm1);
            check.flag(tag + ".mmes.2mm", f == Family::kP, r.mm2);
            entry["mmes"][name] = {{"1mm", r.mm1}, {"2mm", r.mm2}};
        }

        if (d <= kMaxExhaustiveDim) {
            try {
                const ClassCensus census = classify_exhaustive(dim);
                entry["census"] = census_json(census);
                check.exact(dtag + ".census.processed", static_cast<long long>(dim.pow(6)),
                            static_cast<long long>(census.processed));
                check.exact(dtag + ".census.mismatches", 0, static_cast<long long>(census.mismatches));
            } catch (const ClassifierMismatch& e) {
                entry["census"] = {{"error", e.what()}};
                check.custom(dtag + ".census.mismatches", "0", "counterexample " + e.counterexample().to_string(),
                             false);
            }
        } else {
            entry["census"] = nullptr;  // too many matrices to enumerate
        }
        results.push_back(std::move(entry));
    }

    json monotone = json::object();
    if (dims.size() > 1) {
        for (Family f : kFamilies) {
            const auto& series = n_ave_series[f];
            bool increasing = true;
            std::string actual;
            for (std::size_t k = 0; k < series.size(); k++) {
                if (k > 0) {
                    increasing = increasing && series[k - 1].second.value() < series[k].second.value();
                    actual += " < ";
                }
                actual += series[k].second.to_string();
            }
            check.custom("n_ave_increasing." + family_name(f), "strictly increasing", actual, increasing);
            monotone[family_name(f)] = increasing;
        }
    }

    json ds = json::array();
    for (int d : dims) {
        ds.push_back(d);
    }
    bundle.body = {{"metadata", {{"tool", "quartet"}, {"version", kToolVersion}, {"d", ds}, {"families", {"G", "C", "P"}}}},
                   {"results", std::move(results)},
                   {"n_ave_increasing", std::move(monotone)}};
    return bundle;
}

}  // namespace quartet
