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

#include "quartet/qudit_algebra.h"

#include <cctype>
#include <cmath>
#include <numbers>
#include <sstream>
#include <utility>

namespace quartet {

bool is_prime(long long n) {
    if (n < 2) {
        return false;
    }
    for (long long k = 2; k * k <= n; k++) {
        if (n % k == 0) {
            return false;
        }
    }
    return true;
}

PrimeDim::PrimeDim(int d) : d_(d) {
    if (!is_prime(d)) {
        throw DomainError("dimension " + std::to_string(d) + " is not prime");
    }
}

std::size_t PrimeDim::pow(int k) const {
    std::size_t r = 1;
    for (int i = 0; i < k; i++) {
        r *= static_cast<std::size_t>(d_);
    }
    return r;
}

static void require_same_dim(PrimeDim a, PrimeDim b) {
    if (a != b) {
        throw std::invalid_argument("field elements over different dimensions");
    }
}

FieldElem FieldElem::operator+(FieldElem other) const {
    require_same_dim(dim_, other.dim_);
    return FieldElem(static_cast<long long>(value_) + other.value_, dim_);
}

FieldElem FieldElem::operator-(FieldElem other) const {
    require_same_dim(dim_, other.dim_);
    return FieldElem(static_cast<long long>(value_) - other.value_, dim_);
}

FieldElem FieldElem::operator*(FieldElem other) const {
    require_same_dim(dim_, other.dim_);
    return FieldElem(static_cast<long long>(value_) * other.value_, dim_);
}

FieldElem field_inv(FieldElem a) {
    if (a.is_zero()) {
        throw DomainError("zero has no multiplicative inverse");
    }
    // Extended Euclid on (value, d).
    long long r0 = a.dim().value(), r1 = a.value();
    long long t0 = 0, t1 = 1;
    while (r1 != 0) {
        long long q = r0 / r1;
        std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
        std::tie(t0, t1) = std::make_pair(t1, t0 - q * t1);
    }
    return FieldElem(t0, a.dim());
}

std::complex<double> omega_pow(PrimeDim dim, long long k) {
    double angle = 2.0 * std::numbers::pi * dim.mod(k) / dim.value();
    return std::polar(1.0, angle);
}

PauliWord::PauliWord(PrimeDim dim, std::vector<PauliFactor> factors, long long phase_exp)
    : dim_(dim), factors_(std::move(factors)), phase_exp_(dim.mod(phase_exp)) {
    if (!dim.is_odd()) {
        throw DomainError("the exact Pauli engine requires odd prime d");
    }
    for (auto& f : factors_) {
        f.x = dim.mod(f.x);
        f.z = dim.mod(f.z);
    }
}

PauliWord PauliWord::identity(PrimeDim dim, std::size_t qudits) {
    return PauliWord(dim, std::vector<PauliFactor>(qudits));
}

PauliWord PauliWord::single(PrimeDim dim, std::size_t qudits, std::size_t site, int x, int z) {
    std::vector<PauliFactor> f(qudits);
    f.at(site) = {x, z};
    return PauliWord(dim, std::move(f));
}

namespace {

int parse_exponent(std::string_view text, std::size_t& pos) {
    if (pos >= text.size() || text[pos] != '^') {
        return 1;
    }
    pos++;
    bool neg = false;
    if (pos < text.size() && text[pos] == '-') {
        neg = true;
        pos++;
    }
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) {
        throw std::invalid_argument("malformed exponent in Pauli word '" + std::string(text) + "'");
    }
    int v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        v = v * 10 + (text[pos] - '0');
        pos++;
    }
    return neg ? -v : v;
}

std::string factor_string(const PauliFactor& f, int d) {
    auto power = [d](char letter, int e) {
        std::string s(1, letter);
        if (e == d - 1 && d > 2) {
            s += "^-1";
        } else if (e != 1) {
            s += "^" + std::to_string(e);
        }
        return s;
    };
    if (f.is_identity()) {
        return "I";
    }
    if (f.z == 0) {
        return power('X', f.x);
    }
    if (f.x == 0) {
        return power('Z', f.z);
    }
    return "(" + power('X', f.x) + power('Z', f.z) + ")";
}

}  // namespace

PauliWord PauliWord::parse(std::string_view text, PrimeDim dim) {
    std::vector<PauliFactor> factors;
    std::size_t pos = 0;
    while (pos < text.size()) {
        char c = text[pos];
        if (std::isspace(static_cast<unsigned char>(c))) {
            pos++;
            continue;
        }
        PauliFactor f;
        if (c == 'I') {
            pos++;
        } else if (c == 'X') {
            pos++;
            f.x = parse_exponent(text, pos);
        } else if (c == 'Z') {
            pos++;
            f.z = parse_exponent(text, pos);
        } else if (c == '(') {
            pos++;
            if (pos < text.size() && text[pos] == 'X') {
                pos++;
                f.x = parse_exponent(text, pos);
            }
            if (pos < text.size() && text[pos] == 'Z') {
                pos++;
                f.z = parse_exponent(text, pos);
            }
            if (pos >= text.size() || text[pos] != ')') {
                throw std::invalid_argument("unterminated group in Pauli word '" + std::string(text) + "'");
            }
            pos++;
        } else {
            throw std::invalid_argument("unexpected character in Pauli word '" + std::string(text) + "'");
        }
        factors.push_back(f);
    }
    return PauliWord(dim, std::move(factors));
}

std::size_t PauliWord::identity_count() const {
    std::size_t n = 0;
    for (const auto& f : factors_) {
        n += f.is_identity();
    }
    return n;
}

bool PauliWord::is_trivial() const {
    return identity_count() == factors_.size();
}

std::string PauliWord::to_string() const {
    std::string out;
    if (phase_exp_ != 0) {
        out = "w^" + std::to_string(phase_exp_) + "*";
    }
    for (const auto& f : factors_) {
        out += factor_string(f, dim_.value());
    }
    return out;
}

static void require_compatible(const PauliWord& p, const PauliWord& q) {
    if (p.dim() != q.dim() || p.size() != q.size()) {
        throw std::invalid_argument("Pauli words differ in dimension or qudit count");
    }
}

PauliWord pauli_mul(const PauliWord& p, const PauliWord& q) {
    require_compatible(p, q);
    std::vector<PauliFactor> out(p.size());
    long long phase = static_cast<long long>(p.phase_exp()) + q.phase_exp();
    for (std::size_t s = 0; s < p.size(); s++) {
        // X^a Z^b · X^c Z^e = X^a (Z^b X^c) Z^e = ω^{bc} X^{a+c} Z^{b+e}.
        phase += static_cast<long long>(p[s].z) * q[s].x;
        out[s] = {p[s].x + q[s].x, p[s].z + q[s].z};
    }
    return PauliWord(p.dim(), std::move(out), phase);
}

PauliWord pauli_pow(const PauliWord& p, int k) {
    if (k < 0) {
        throw std::invalid_argument("pauli_pow requires k >= 0");
    }
    PauliWord result = PauliWord::identity(p.dim(), p.size());
    PauliWord base = p;
    while (k > 0) {
        if (k & 1) {
            result = pauli_mul(result, base);
        }
        base = pauli_mul(base, base);
        k >>= 1;
    }
    return result;
}

int commutator_exp(const PauliWord& p, const PauliWord& q) {
    require_compatible(p, q);
    long long e = 0;
    for (std::size_t s = 0; s < p.size(); s++) {
        e += static_cast<long long>(q[s].z) * p[s].x - static_cast<long long>(p[s].z) * q[s].x;
    }
    return p.dim().mod(e);
}

Eigen::MatrixXcd dense_matrix(const PauliWord& p) {
    const int d = p.dim().value();
    std::size_t total = 1;
    for (std::size_t s = 0; s < p.size(); s++) {
        total *= static_cast<std::size_t>(d);
        if (total > kMaxDenseDimension) {
            throw std::length_error("dense Pauli matrix exceeds size limit");
        }
    }

    // X = Σ|k+1⟩⟨k|, Z = Σ ω^k |k⟩⟨k|.
    Eigen::MatrixXcd x = Eigen::MatrixXcd::Zero(d, d);
    Eigen::MatrixXcd z = Eigen::MatrixXcd::Zero(d, d);
    for (int k = 0; k < d; k++) {
        x((k + 1) % d, k) = 1.0;
        z(k, k) = omega_pow(p.dim(), k);
    }
    auto power = [d](const Eigen::MatrixXcd& m, int e) {
        Eigen::MatrixXcd r = Eigen::MatrixXcd::Identity(d, d);
        for (int i = 0; i < e; i++) {
            r = r * m;
        }
        return r;
    };

    Eigen::MatrixXcd result = Eigen::MatrixXcd::Identity(1, 1) * omega_pow(p.dim(), p.phase_exp());
    for (std::size_t s = 0; s < p.size(); s++) {
        Eigen::MatrixXcd site = power(x, p[s].x) * power(z, p[s].z);
        Eigen::MatrixXcd next(result.rows() * d, result.cols() * d);
        for (Eigen::Index r = 0; r < result.rows(); r++) {
            for (Eigen::Index c = 0; c < result.cols(); c++) {
                next.block(r * d, c * d, d, d) = result(r, c) * site;
            }
        }
        result = std::move(next);
    }
    return result;
}

int rank_mod_p(std::vector<std::vector<int>> rows, PrimeDim dim) {
    int rank = 0;
    if (rows.empty()) {
        return 0;
    }
    const std::size_t cols = rows[0].size();
    for (auto& row : rows) {
        for (auto& v : row) {
            v = dim.mod(v);
        }
    }
    for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows.size()); c++) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][c] == 0) {
            pivot++;
        }
        if (pivot == rows.size()) {
            continue;
        }
        std::swap(rows[pivot], rows[rank]);
        int inv = field_inv(FieldElem(rows[rank][c], dim)).value();
        for (auto& v : rows[rank]) {
            v = dim.mod(static_cast<long long>(v) * inv);
        }
        for (std::size_t r = 0; r < rows.size(); r++) {
            if (r == static_cast<std::size_t>(rank) || rows[r][c] == 0) {
                continue;
            }
            long long factor = rows[r][c];
            for (std::size_t k = 0; k < cols; k++) {
                rows[r][k] = dim.mod(rows[r][k] - factor * rows[rank][k]);
            }
        }
        rank++;
    }
    return rank;
}

}  // namespace quartet
