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

#ifndef QUARTET_QUDIT_ALGEBRA_H
#define QUARTET_QUDIT_ALGEBRA_H

#include <complex>
#include <compare>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace quartet {

/// Raised when a value falls outside the algebraic domain of an operation
/// (non-prime dimension, inverse of zero, even dimension in the Pauli engine).
class DomainError : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

bool is_prime(long long n);

/// Prime local dimension d of a qudit.
class PrimeDim {
   public:
    explicit PrimeDim(int d);

    int value() const {
        return d_;
    }
    bool is_odd() const {
        return d_ % 2 == 1;
    }
    /// Canonical representative of v in [0, d).
    int mod(long long v) const {
        long long r = v % d_;
        return static_cast<int>(r < 0 ? r + d_ : r);
    }
    /// d^k as an integer.
    std::size_t pow(int k) const;

    friend bool operator==(PrimeDim, PrimeDim) = default;

   private:
    int d_;
};

/// Element of the prime field Z_d.
class FieldElem {
   public:
    FieldElem(long long value, PrimeDim dim) : value_(dim.mod(value)), dim_(dim) {
    }

    int value() const {
        return value_;
    }
    PrimeDim dim() const {
        return dim_;
    }
    bool is_zero() const {
        return value_ == 0;
    }

    FieldElem operator+(FieldElem other) const;
    FieldElem operator-(FieldElem other) const;
    FieldElem operator*(FieldElem other) const;
    FieldElem operator-() const {
        return FieldElem(-value_, dim_);
    }

    friend bool operator==(FieldElem, FieldElem) = default;

   private:
    int value_;
    PrimeDim dim_;
};

/// Multiplicative inverse in Z_d; throws DomainError for zero.
FieldElem field_inv(FieldElem a);

/// ω^k with ω = exp(2πi/d).
std::complex<double> omega_pow(PrimeDim dim, long long k);

/// One site of a Pauli word: the operator X^x Z^z (X to the left).
struct PauliFactor {
    int x = 0;
    int z = 0;

    bool is_identity() const {
        return x == 0 && z == 0;
    }
    friend auto operator<=>(const PauliFactor&, const PauliFactor&) = default;
};

/// Generalized Pauli operator ω^phase ⊗_n X^{x_n} Z^{z_n} on n qudits.
///
/// Phases are exact integer exponents of ω modulo d. Only odd prime d is
/// admitted: for d = 2 the operator XZ has order 4 and would need a
/// 2d-th root of unity to keep the group closed.
class PauliWord {
   public:
    PauliWord(PrimeDim dim, std::vector<PauliFactor> factors, long long phase_exp = 0);

    static PauliWord identity(PrimeDim dim, std::size_t qudits);
    /// X^x Z^z on a single site of an otherwise identity word.
    static PauliWord single(PrimeDim dim, std::size_t qudits, std::size_t site, int x, int z);

    /// Parses tokens like "XZ^-1IZ" or "I(XZ^2)X^-1Z" (one site per token,
    /// parentheses group a combined X^a Z^b site).
    static PauliWord parse(std::string_view text, PrimeDim dim);

    PrimeDim dim() const {
        return dim_;
    }
    std::size_t size() const {
        return factors_.size();
    }
    int phase_exp() const {
        return phase_exp_;
    }
    const PauliFactor& operator[](std::size_t site) const {
        return factors_[site];
    }
    std::span<const PauliFactor> factors() const {
        return factors_;
    }

    bool is_identity_at(std::size_t site) const {
        return factors_[site].is_identity();
    }
    /// Number of sites carrying an identity factor.
    std::size_t identity_count() const;
    /// True iff every factor is identity (phase ignored).
    bool is_trivial() const;
    /// True iff the word is exactly the identity operator, phase included.
    bool is_identity() const {
        return is_trivial() && phase_exp_ == 0;
    }

    PauliWord with_phase(long long phase_exp) const {
        return PauliWord(dim_, factors_, phase_exp);
    }

    std::string to_string() const;

    friend bool operator==(const PauliWord&, const PauliWord&) = default;

   private:
    PrimeDim dim_;
    std::vector<PauliFactor> factors_;
    int phase_exp_;
};

/// Normal-ordered product p·q, commuting Z^b past X^a with Z^b X^a = ω^{ab} X^a Z^b.
PauliWord pauli_mul(const PauliWord& p, const PauliWord& q);

/// p^k for k ≥ 0.
PauliWord pauli_pow(const PauliWord& p, int k);

/// Symplectic form: q·p = ω^{commutator_exp(p, q)} p·q.
int commutator_exp(const PauliWord& p, const PauliWord& q);

inline bool commutes(const PauliWord& p, const PauliWord& q) {
    return commutator_exp(p, q) == 0;
}

/// Matrices larger than this are refused by dense_matrix.
inline constexpr std::size_t kMaxDenseDimension = 4096;

/// Explicit d^n × d^n matrix of p built from the single-qudit X and Z
/// matrices by Kronecker products. Test oracle only. Site 0 is the most
/// significant digit of the basis index.
Eigen::MatrixXcd dense_matrix(const PauliWord& p);

/// Rank over Z_d of a matrix of residues (row-major rows).
int rank_mod_p(std::vector<std::vector<int>> rows, PrimeDim dim);

}  // namespace quartet

#endif
