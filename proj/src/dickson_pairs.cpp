#include "dickson/dickson_pairs.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace dickson {

namespace {

using u64 = std::uint64_t;

std::vector<u64> distinct_primes(u64 n) {
    std::vector<u64> out;
    for (u64 f : factorize(n))
        if (out.empty() || out.back() != f) out.push_back(f);
    return out;
}

}  // namespace

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

std::optional<PrimePower> as_prime_power(std::uint64_t q) {
    if (q < 2) throw std::domain_error("as_prime_power requires q >= 2");
    u64 p = q;
    for (u64 d = 2; d <= q / d; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    // repeated root extraction: q must be a pure power of its smallest prime
    u64 rest = q;
    unsigned l = 0;
    while (rest % p == 0) {
        rest /= p;
        ++l;
    }
    if (rest != 1) return std::nullopt;
    return PrimePower{p, l, q};
}

PairCheck is_dickson_pair(std::uint64_t q, std::uint64_t n) {
    if (q < 2) return {false, 0, "q must be >= 2"};
    if (n < 1) return {false, 0, "n must be >= 1"};
    const auto pp = as_prime_power(q);
    if (!pp) {
        std::ostringstream os;
        os << "clause 1 violated: q = " << q << " is not a prime power";
        return {false, 1, os.str()};
    }
    for (u64 r : distinct_primes(n)) {
        if ((q - 1) % r != 0) {
            std::ostringstream os;
            os << "clause 2 violated: prime divisor " << r << " of n does not divide q - 1 = "
               << (q - 1);
            return {false, 2, os.str()};
        }
    }
    if (q % 4 == 3 && n % 4 == 0)
        return {false, 3, "clause 3 violated: q == 3 (mod 4) and 4 divides n"};
    return {true, 0, ""};
}

DicksonPair make_dickson_pair(std::uint64_t q, std::uint64_t n) {
    const PairCheck check = is_dickson_pair(q, n);
    if (!check.ok) throw std::invalid_argument("(" + std::to_string(q) + "," + std::to_string(n) +
                                               ") is not a Dickson pair: " + check.reason);
    const PrimePower pp = *as_prime_power(q);
    DicksonPair pair{q, n, pp.p, pp.l, distinct_primes(n)};
    if (gcd_u64(q, n) != 1)
        throw internal_contradiction_error("Dickson pair with gcd(q, n) != 1");
    return pair;
}

ResidueSystem residue_indices(const DicksonPair& pair) {
    const u64 n = pair.n;
    ResidueSystem rs;
    rs.q = pair.q;
    rs.n = n;
    rs.residues.resize(n);
    rs.k_for_residue_.assign(n, 0);
    // i(k+1) = q*i(k) + 1, evaluated mod n throughout
    u64 ik = 0;
    for (u64 k = 1; k <= n; ++k) {
        ik = (pair.q % n) * ik % n;
        ik = (ik + 1) % n;
        rs.residues[k - 1] = static_cast<unsigned>(ik);
        if (rs.k_for_residue_[ik] != 0)
            throw internal_contradiction_error(
                "residue system has a repeated residue; (q^k-1)/(q-1) mod n must cover each residue exactly once");
        rs.k_for_residue_[ik] = static_cast<unsigned>(k);
    }
    for (u64 r = 0; r < n; ++r)
        if (rs.k_for_residue_[r] == 0)
            throw internal_contradiction_error(
                "residue system does not cover all residues mod n");
    return rs;
}

std::uint64_t euler_phi(std::uint64_t n) {
    if (n < 1) throw std::invalid_argument("euler_phi requires n >= 1");
    u64 phi = n;
    for (u64 r : distinct_primes(n)) phi = phi / r * (r - 1);
    return phi;
}

std::uint64_t mult_order(std::uint64_t a, std::uint64_t n) {
    if (n < 1) throw std::invalid_argument("mult_order requires n >= 1");
    if (n == 1) return 1;
    if (gcd_u64(a, n) != 1) throw std::domain_error("mult_order requires gcd(a, n) = 1");
    const u64 a0 = a % n;
    u64 x = a0;
    u64 t = 1;
    while (x != 1) {
        x = x * a0 % n;
        ++t;
    }
    return t;
}

std::uint64_t class_count(const DicksonPair& pair) {
    const u64 phi = euler_phi(pair.n);
    const u64 ord = mult_order(pair.p, pair.n);
    if (phi % ord != 0)
        throw internal_contradiction_error("ord_n(p) does not divide phi(n)");
    return phi / ord;
}

}  // namespace dickson
