#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dickson/ff_core.hpp"

namespace dickson {

/// (p, l) with q = p^l, or nullopt when q is not a prime power. q >= 2.
std::optional<PrimePower> as_prime_power(std::uint64_t q);

/// Outcome of the three Dickson-pair clauses. violated_clause is 1..3 when
/// ok is false (0 for domain violations such as q < 2).
struct PairCheck {
    bool ok = false;
    int violated_clause = 0;
    std::string reason;
};

/// Clause 1: q is a prime power. Clause 2: every prime divisor of n divides
/// q - 1. Clause 3: q == 3 (mod 4) forbids 4 | n.
PairCheck is_dickson_pair(std::uint64_t q, std::uint64_t n);

/// Validated Dickson pair with its factored structure.
struct DicksonPair {
    std::uint64_t q = 0;
    std::uint64_t n = 0;
    std::uint64_t p = 0;
    unsigned l = 0;
    std::vector<std::uint64_t> n_prime_divisors;  // ascending, distinct
};

/// Throws std::invalid_argument naming the violated clause.
DicksonPair make_dickson_pair(std::uint64_t q, std::uint64_t n);

/// The complete residue system i(k) = (q^k - 1)/(q - 1) mod n, k = 1..n,
/// together with its inverse map. Construction asserts that the residues
/// are pairwise distinct and cover 0..n-1.
struct ResidueSystem {
    std::uint64_t q = 0;
    std::uint64_t n = 0;
    std::vector<unsigned> residues;       // residues[k-1] = i(k) mod n
    std::vector<unsigned> k_for_residue_; // [r] = the k with i(k) == r (mod n)

    unsigned residue(unsigned k) const { return residues[k - 1]; }
    unsigned k_for_residue(unsigned r) const { return k_for_residue_[r]; }
};

ResidueSystem residue_indices(const DicksonPair& pair);

std::uint64_t euler_phi(std::uint64_t n);

/// Smallest t >= 1 with a^t == 1 (mod n); requires gcd(a, n) = 1.
/// Returns 1 when n = 1.
std::uint64_t mult_order(std::uint64_t a, std::uint64_t n);

/// Number of restricted-isomorphism classes, phi(n) / ord_n(p).
std::uint64_t class_count(const DicksonPair& pair);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);

}  // namespace dickson
