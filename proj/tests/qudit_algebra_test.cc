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

#include <random>

#include "gtest/gtest.h"
#include "oracles.h"

using namespace quartet;

static PauliWord X(PrimeDim d) {
    return PauliWord::single(d, 1, 0, 1, 0);
}
static PauliWord Z(PrimeDim d) {
    return PauliWord::single(d, 1, 0, 0, 1);
}

TEST(prime_dim, rejects_non_primes) {
    for (int d : {-3, 0, 1, 4, 6, 9, 15}) {
        EXPECT_THROW(PrimeDim{d}, DomainError) << d;
    }
    for (int d : {2, 3, 5, 7, 11, 13}) {
        EXPECT_EQ(PrimeDim(d).value(), d);
    }
    EXPECT_TRUE(is_prime(97));
    EXPECT_FALSE(is_prime(91));
}

TEST(prime_dim, mod_and_pow) {
    PrimeDim d(5);
    EXPECT_EQ(d.mod(-1), 4);
    EXPECT_EQ(d.mod(-10), 0);
    EXPECT_EQ(d.mod(13), 3);
    EXPECT_EQ(d.pow(0), 1u);
    EXPECT_EQ(d.pow(4), 625u);
}

TEST(field_elem, arithmetic) {
    PrimeDim d(7);
    FieldElem a(3, d), b(5, d);
    EXPECT_EQ((a + b).value(), 1);
    EXPECT_EQ((a - b).value(), 5);
    EXPECT_EQ((a * b).value(), 1);
    EXPECT_EQ((-a).value(), 4);
}

TEST(field_elem, inverse_matches_exhaustive_search) {
    for (int p : {3, 5, 7, 11, 13}) {
        PrimeDim d(p);
        for (int a = 1; a < p; a++) {
            int brute = -1;
            for (int b = 1; b < p; b++) {
                if ((a * b) % p == 1) {
                    brute = b;
                }
            }
            EXPECT_EQ(field_inv(FieldElem(a, d)).value(), brute) << a << " mod " << p;
        }
        EXPECT_THROW(field_inv(FieldElem(0, d)), DomainError);
        EXPECT_THROW(field_inv(FieldElem(p, d)), DomainError);
    }
}

TEST(pauli_word, even_dimension_rejected) {
    EXPECT_THROW(PauliWord(PrimeDim(2), {{1, 0}}), DomainError);
}

TEST(pauli_word, zx_picks_up_one_power_of_omega) {
    PrimeDim d(3);
    const PauliWord zx = pauli_mul(Z(d), X(d));
    const PauliWord xz = pauli_mul(X(d), Z(d));
    EXPECT_EQ(zx[0], xz[0]);
    EXPECT_EQ(d.mod(zx.phase_exp() - xz.phase_exp()), 1);
}

TEST(pauli_word, commuting_powers_exhaustive) {
    for (int p : {3, 5, 7}) {
        PrimeDim d(p);
        for (int a = 0; a < p; a++) {
            for (int b = 0; b < p; b++) {
                // Z^b X^a = ω^{ab} X^a Z^b.
                const PauliWord lhs = pauli_mul(pauli_pow(Z(d), b), pauli_pow(X(d), a));
                const PauliWord rhs = PauliWord(d, {{a, b}}, a * b);
                EXPECT_EQ(lhs, rhs) << a << "," << b << " d=" << p;
            }
        }
    }
}

TEST(pauli_word, dense_single_site_matrices) {
    PrimeDim d(3);
    const auto z = dense_matrix(Z(d));
    const auto x = dense_matrix(X(d));
    for (int k = 0; k < 3; k++) {
        for (int j = 0; j < 3; j++) {
            EXPECT_NEAR(std::abs(z(k, j) - (k == j ? oracle::omega(3, k) : 0.0)), 0.0, 1e-12);
            EXPECT_NEAR(std::abs(x(k, j) - (k == (j + 1) % 3 ? 1.0 : 0.0)), 0.0, 1e-12);
        }
    }
}

TEST(pauli_word, product_matches_matrix_oracle) {
    std::mt19937_64 rng(20260101);
    int pairs = 0;
    for (int p : {3, 5}) {
        PrimeDim d(p);
        for (std::size_t n : {1u, 2u, 3u}) {
            for (int trial = 0; trial < 40; trial++) {
                const PauliWord a = oracle::random_word(d, n, rng);
                const PauliWord b = oracle::random_word(d, n, rng);
                const Eigen::MatrixXcd want = oracle::pauli_matrix(a) * oracle::pauli_matrix(b);
                EXPECT_LE((dense_matrix(pauli_mul(a, b)) - want).cwiseAbs().maxCoeff(), 1e-10);
                EXPECT_LE((dense_matrix(a) - oracle::pauli_matrix(a)).cwiseAbs().maxCoeff(), 1e-10);
                pairs++;
            }
        }
    }
    EXPECT_GE(pairs, 200);
}

TEST(pauli_word, order_divides_d) {
    std::mt19937_64 rng(7);
    for (int p : {3, 5, 7}) {
        PrimeDim d(p);
        for (int trial = 0; trial < 30; trial++) {
            const PauliWord w = oracle::random_word(d, 4, rng);
            EXPECT_TRUE(pauli_pow(w, p).is_identity()) << w.to_string();
        }
    }
}

TEST(pauli_word, commutator_matches_matrices) {
    std::mt19937_64 rng(11);
    PrimeDim d(5);
    for (int trial = 0; trial < 50; trial++) {
        const PauliWord a = oracle::random_word(d, 2, rng);
        const PauliWord b = oracle::random_word(d, 2, rng);
        const int c = commutator_exp(a, b);
        const Eigen::MatrixXcd ab = oracle::pauli_matrix(a) * oracle::pauli_matrix(b);
        const Eigen::MatrixXcd ba = oracle::pauli_matrix(b) * oracle::pauli_matrix(a);
        EXPECT_LE((ba - oracle::omega(5, c) * ab).cwiseAbs().maxCoeff(), 1e-10);
        EXPECT_EQ(commutes(a, b), c == 0);
    }
}

TEST(pauli_word, parse_and_print) {
    PrimeDim d(3);
    const PauliWord w = PauliWord::parse("XZ^-1IZ", d);
    ASSERT_EQ(w.size(), 4u);
    EXPECT_EQ(w[0], (PauliFactor{1, 0}));
    EXPECT_EQ(w[1], (PauliFactor{0, 2}));
    EXPECT_TRUE(w.is_identity_at(2));
    EXPECT_EQ(w.identity_count(), 1u);
    EXPECT_EQ(w.to_string(), "XZ^-1IZ");
    const PauliWord grouped = PauliWord::parse("I(XZ^2)X^-1Z", PrimeDim(5));
    EXPECT_EQ(grouped[1], (PauliFactor{1, 2}));
    EXPECT_EQ(grouped[2], (PauliFactor{4, 0}));
    EXPECT_EQ(PauliWord::parse(grouped.to_string(), PrimeDim(5)), grouped);
    EXPECT_THROW(PauliWord::parse("XQ", d), std::invalid_argument);
}

TEST(pauli_word, identity_and_phase) {
    PrimeDim d(5);
    const PauliWord id = PauliWord::identity(d, 3);
    EXPECT_TRUE(id.is_identity());
    EXPECT_TRUE(id.with_phase(2).is_trivial());
    EXPECT_FALSE(id.with_phase(2).is_identity());
    EXPECT_EQ(id.with_phase(-1).phase_exp(), 4);
}

TEST(pauli_word, mismatched_sizes_rejected) {
    PrimeDim d(3);
    EXPECT_THROW(pauli_mul(PauliWord::identity(d, 2), PauliWord::identity(d, 3)), std::invalid_argument);
    EXPECT_THROW(pauli_mul(PauliWord::identity(d, 2), PauliWord::identity(PrimeDim(5), 2)), std::invalid_argument);
}

TEST(dense_matrix, refuses_large_words) {
    EXPECT_THROW(dense_matrix(PauliWord::identity(PrimeDim(5), 6)), std::length_error);
}

TEST(rank_mod_p, simple_cases) {
    PrimeDim d(3);
    EXPECT_EQ(rank_mod_p({{1, 0}, {0, 1}}, d), 2);
    EXPECT_EQ(rank_mod_p({{1, 2}, {2, 1}}, d), 1);  // second row is 2× the first mod 3
    EXPECT_EQ(rank_mod_p({{0, 0}, {0, 0}}, d), 0);
    EXPECT_EQ(rank_mod_p({{1, 2, 0}, {0, 1, 1}, {1, 0, 1}}, PrimeDim(5)), 3);
}
