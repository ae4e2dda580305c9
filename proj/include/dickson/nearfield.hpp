#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dickson/dickson_pairs.hpp"
#include "dickson/ff_core.hpp"

namespace dickson {

enum class CheckMode { exhaustive, sampled };

struct SampleSpec {
    std::uint64_t count = 1'000'000;
    std::uint64_t seed = 0;
};

/// One verified property. A failed check always carries a witness tuple
/// that re-evaluates to a genuine violation.
struct CheckResult {
    std::string name;
    CheckMode mode = CheckMode::exhaustive;
    std::uint64_t sample_count = 0;
    bool passed = false;
    std::vector<FieldElement> witness;  // empty when passed
};

struct VerificationReport {
    std::vector<CheckResult> checks;
    bool all_passed() const;
};

/// k in [1, n]: the index with b in H * g^((q^k-1)/(q-1)).
struct CosetIndex {
    unsigned k = 0;
};

/// DN(q,n): GF(q^n) with multiplication twisted by the coupling map,
/// a o b = a^(q^k) * b where k is the coset exponent of b. Immutable and
/// freely shareable after construction.
class DicksonNearfield {
public:
    DicksonNearfield(DicksonPair pair, std::shared_ptr<const ExtensionField> field,
                     FieldElement generator, std::string label);

    const DicksonPair& pair() const { return pair_; }
    const ExtensionField& field() const { return *field_; }
    std::shared_ptr<const ExtensionField> field_ptr() const { return field_; }
    const FieldElement& generator() const { return gen_; }
    /// Exponent e with generator = field.generator()^e.
    std::uint64_t generator_exponent() const { return gen_exp_; }
    const ResidueSystem& residues() const { return residues_; }
    const std::string& label() const { return label_; }
    std::uint64_t order() const { return field_->order(); }

    /// b != 0. k = k_for_residue(dlog_g(b) mod n). Below the dlog-table
    /// threshold this reads the table; above it the residue of dlog_g(b) is
    /// extracted through the order-n character b -> b^((q^n-1)/n), which
    /// avoids a full discrete log.
    CosetIndex coset_exponent(const FieldElement& b) const;

    /// a o b: 0 when b = 0, else frobenius(a, l*k) * b.
    FieldElement nf_mul(const FieldElement& a, const FieldElement& b) const;

    /// Unique x with a o x = x o a = 1. Tries x_k = inv(a^(q^k)) for each
    /// k = 1..n and accepts the candidate whose own coset exponent is k;
    /// exactly one is consistent.
    FieldElement nf_inv(const FieldElement& a) const;

    /// Discrete log base this nearfield's generator.
    std::uint64_t dlog(const FieldElement& a) const;

    /// Element at position i of the o-table ordering: 0, g^0, g^1, ...
    FieldElement dlog_order_element(std::uint64_t i) const;

private:
    DicksonPair pair_;
    std::shared_ptr<const ExtensionField> field_;
    FieldElement gen_;
    std::uint64_t gen_exp_ = 0;
    std::uint64_t gen_exp_inv_ = 0;
    ResidueSystem residues_;
    std::string label_;
    // codes of w^r for w = g^((q^n-1)/n), r = 0..n-1, sorted by code
    std::vector<std::pair<std::uint64_t, unsigned>> character_table_;
};

DicksonNearfield construct(const DicksonPair& pair);
DicksonNearfield construct(const DicksonPair& pair, const FieldElement& generator);
/// class_index j picks the generator g^e_j, where e_j is the (j+1)-th
/// positive integer coprime to q^n - 1 whose nearfield is not
/// restricted-isomorphic to an earlier selection.
DicksonNearfield construct_class(const DicksonPair& pair, unsigned class_index);

/// Axiom sweep. Exhaustive mode requires q^n <= 625 (cubic cost); sampled
/// mode draws triples from mt19937_64(seed). Failures are report entries,
/// never exceptions.
VerificationReport verify_axioms(const DicksonNearfield& nf, CheckMode mode,
                                 SampleSpec spec = {});

/// First triple (in ascending dlog order, a outermost) with
/// a o (b+c) != a o b + a o c; nullopt for n = 1.
std::optional<std::array<FieldElement, 3>> left_distributivity_witness(
    const DicksonNearfield& nf);

struct NoncommutativityWitness {
    FieldElement a;    // g^n
    FieldElement b;    // g
    FieldElement lhs;  // g^n o g = g^(nq+1)
    FieldElement rhs;  // g o g^n = g^(n+1)
};

/// Requires n >= 2 (a field for n = 1; domain error).
NoncommutativityWitness noncommutativity_witness(const DicksonNearfield& nf);

/// Exponent-level coupling identity: k_a + k_b == k_{phi_a(b) * a} (mod n)
/// over pairs of nonzero elements. Exhaustive mode requires q^n <= 4096.
CheckResult coupling_property_check(const DicksonNearfield& nf, CheckMode mode,
                                    SampleSpec spec = {});

/// H = <g^n>: o-closed and equal to field multiplication on H x H, cyclic
/// of order (q^n-1)/n, normal in (N^x, o), with cyclic quotient of order n
/// generated by the coset of g. Requires q^n <= 4096.
CheckResult metacyclic_check(const DicksonNearfield& nf);

/// The square-rule product on GF(9) built over x^2+1: x*y when y is a
/// square (membership in the enumerated square set), else x^3*y. Kept free
/// of any coset or dlog machinery so it can stand against nf_mul.
FieldElement n9_oracle(const ExtensionField& gf9, const FieldElement& x,
                       const FieldElement& y);

/// Least j in [0, l*n) such that x -> x^(p^j) carries nf1's o-table onto
/// nf2's; nullopt if none. Requires the same pair over the same field.
std::optional<unsigned> is_isomorphic_restricted(const DicksonNearfield& nf1,
                                                 const DicksonNearfield& nf2);

struct VariantClasses {
    std::vector<DicksonNearfield> representatives;  // first variant of each class
    std::vector<std::uint64_t> rep_exponents;       // generator exponents of reps
    std::uint64_t variant_count = 0;                // generators examined
    std::uint64_t predicted = 0;                    // phi(n) / ord_n(p)
    bool matches = false;                           // found == predicted
};

/// Groups the nearfields of all generators g^e, gcd(e, q^n-1) = 1, into
/// restricted-isomorphism classes. A count mismatch is reported in the
/// result, not thrown. Requires q^n <= 4096.
VariantClasses enumerate_variants(const DicksonPair& pair);

}  // namespace dickson
