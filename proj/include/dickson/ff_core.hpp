#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace dickson {

/// Thrown when a computation reaches a state the verified algebra rules
/// out (e.g. a residue system with a repeated residue). Must never fire on
/// valid inputs; if it does, the build of the object itself is unsound.
class internal_contradiction_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

bool is_prime(std::uint64_t n);

/// Prime multiset of n in ascending order (empty for n = 1).
/// Trial division up to 1e6, Pollard rho for what remains.
std::vector<std::uint64_t> factorize(std::uint64_t n);

/// q = p^l with p prime.
struct PrimePower {
    std::uint64_t p = 0;
    unsigned l = 0;
    std::uint64_t q = 0;
};

/// Dense polynomial over Z_p, little-endian: coeffs[i] is the coefficient
/// of x^i. Canonical form has no trailing zeros; the zero polynomial has an
/// empty coefficient vector.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(std::uint64_t p, std::vector<std::uint32_t> coeffs);

    std::uint64_t characteristic() const { return p_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
    std::uint32_t coeff(std::size_t i) const {
        return i < coeffs_.size() ? coeffs_[i] : 0;
    }
    const std::vector<std::uint32_t>& coeffs() const { return coeffs_; }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    std::uint64_t p_ = 2;
    std::vector<std::uint32_t> coeffs_;
};

std::string to_string(const Polynomial& f);

/// Rabin's test: f is irreducible over Z_p iff x^(p^m) == x (mod f) and
/// gcd(x^(p^(m/r)) - x, f) = 1 for every prime r dividing m.
bool is_irreducible(const Polynomial& f);

/// Lexicographically smallest monic irreducible of degree m over Z_p,
/// comparing coefficient vectors (c_0, ..., c_{m-1}). Deterministic.
Polynomial find_irreducible(std::uint64_t p, unsigned m);

/// Element of GF(p^m) as m coordinates over Z_p in the basis 1, x, ..., x^{m-1}.
struct FieldElement {
    std::vector<std::uint32_t> coeffs;

    friend bool operator==(const FieldElement&, const FieldElement&) = default;
};

/// Renders "c0:c1:...:c{m-1}".
std::string to_string(const FieldElement& a);
/// Parses the "c0:c1:..." rendering.
FieldElement parse_element(const std::string& text);

/// GF(p^m) with a fixed monic irreducible modulus and a fixed primitive
/// element. Immutable after construction; all lookup structures are built
/// eagerly, so a field may be shared freely across threads.
///
/// Discrete logs use a full table up to 2^16 elements and baby-step /
/// giant-step above that. Field order is capped at 2^24.
class ExtensionField {
public:
    /// Deterministic field: lex-smallest modulus, lex-smallest primitive element.
    ExtensionField(std::uint64_t p, unsigned m);
    ExtensionField(std::uint64_t p, unsigned m, Polynomial modulus);
    ExtensionField(std::uint64_t p, unsigned m, Polynomial modulus, FieldElement generator);

    std::uint64_t characteristic() const { return p_; }
    unsigned degree() const { return m_; }
    std::uint64_t order() const { return order_; }
    std::uint64_t unit_order() const { return order_ - 1; }
    const Polynomial& modulus() const { return modulus_; }
    const FieldElement& generator() const { return generator_; }
    /// Prime multiset of p^m - 1.
    const std::vector<std::uint64_t>& unit_order_factors() const { return factors_; }
    bool has_dlog_table() const { return !dlog_table_.empty(); }

    FieldElement zero() const { return FieldElement{std::vector<std::uint32_t>(m_, 0)}; }
    FieldElement one() const;
    bool is_zero(const FieldElement& a) const;

    /// Validates length and coefficient range.
    FieldElement element(std::vector<std::uint32_t> coeffs) const;
    /// Mixed-radix code sum c_i * p^i; a bijection [0, p^m) <-> elements.
    std::uint64_t code(const FieldElement& a) const;
    FieldElement element_from_code(std::uint64_t code) const;

    FieldElement add(const FieldElement& a, const FieldElement& b) const;
    FieldElement sub(const FieldElement& a, const FieldElement& b) const;
    FieldElement neg(const FieldElement& a) const;
    FieldElement mul(const FieldElement& a, const FieldElement& b) const;
    /// a != 0; computed as a^(p^m - 2).
    FieldElement inv(const FieldElement& a) const;
    /// Negative exponents go through the inverse (a != 0 required).
    FieldElement pow(const FieldElement& a, std::int64_t e) const;
    /// a^(p^j); Z_p-linear, evaluated against precomputed basis images.
    FieldElement frobenius(const FieldElement& a, unsigned j) const;

    /// The unique e in [0, p^m - 1) with generator^e = a; a != 0.
    std::uint64_t dlog(const FieldElement& a) const;
    std::uint64_t dlog_via_table(const FieldElement& a) const;
    std::uint64_t dlog_via_bsgs(const FieldElement& a) const;

    /// Certificate test: a != 0 and a^((p^m-1)/r) != 1 for every prime r | p^m - 1.
    bool is_primitive(const FieldElement& a) const;
    /// Lex-smallest element of full multiplicative order.
    FieldElement find_primitive() const;
    std::uint64_t element_order(const FieldElement& a) const;

    /// Elements in lexicographic coefficient order (c0 most significant).
    /// index_to_lex(t) enumerates t = 0 .. order-1.
    FieldElement lex_element(std::uint64_t t) const;

private:
    void init();
    void init_dlog_backends();
    void check_element(const FieldElement& a) const;

    std::uint64_t p_ = 0;
    unsigned m_ = 0;
    std::uint64_t order_ = 0;
    Polynomial modulus_;
    FieldElement generator_;
    std::vector<std::uint64_t> factors_;
    // x^(m+i) mod modulus for i = 0 .. m-2, used by mul's reduction step
    std::vector<std::vector<std::uint32_t>> reduction_rows_;
    // frobenius_basis_[j][i] = (x^i)^(p^j)
    std::vector<std::vector<FieldElement>> frobenius_basis_;
    // full dlog backend (order <= 2^16): dlog_table_[code] = exponent
    std::vector<std::uint32_t> dlog_table_;
    // BSGS backend
    std::uint64_t bsgs_step_ = 0;
    std::unordered_map<std::uint64_t, std::uint32_t> bsgs_baby_;
    FieldElement bsgs_giant_;
};

}  // namespace dickson
