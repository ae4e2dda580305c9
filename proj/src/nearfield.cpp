#include "dickson/nearfield.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <sstream>
#include <utility>

namespace dickson {

namespace {

using u64 = std::uint64_t;
using u32 = std::uint32_t;

u64 modinv(u64 a, u64 n) {
    if (n == 1) return 0;
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(n), new_r = static_cast<std::int64_t>(a % n);
    while (new_r != 0) {
        const std::int64_t quot = r / new_r;
        t = std::exchange(new_t, t - quot * new_t);
        r = std::exchange(new_r, r - quot * new_r);
    }
    if (r != 1) throw std::invalid_argument("modinv of a non-unit");
    return static_cast<u64>(t < 0 ? t + static_cast<std::int64_t>(n) : t);
}

u64 powmod_u64(u64 a, u64 e, u64 m) {
    if (m == 1) return 0;
    u64 r = 1;
    a %= m;
    while (e) {
        if (e & 1) r = static_cast<u64>((static_cast<__uint128_t>(r) * a) % m);
        a = static_cast<u64>((static_cast<__uint128_t>(a) * a) % m);
        e >>= 1;
    }
    return r;
}

constexpr u64 kCubicSweepLimit = 625;
constexpr u64 kQuadraticSweepLimit = 4096;
constexpr u64 kPairSampleLimit = 10'000;

}  // namespace

bool VerificationReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.passed; });
}

DicksonNearfield::DicksonNearfield(DicksonPair pair, std::shared_ptr<const ExtensionField> field,
                                   FieldElement generator, std::string label)
    : pair_(std::move(pair)), field_(std::move(field)), gen_(std::move(generator)),
      label_(std::move(label)) {
    const ExtensionField& F = *field_;
    if (F.characteristic() != pair_.p || F.degree() != pair_.l * pair_.n)
        throw std::invalid_argument("field does not match the Dickson pair (expected GF(p^(l*n)))");
    if (!F.is_primitive(gen_))
        throw std::invalid_argument("generator is not primitive (order below q^n - 1)");

    residues_ = residue_indices(pair_);

    const u64 N = F.unit_order();
    gen_exp_ = F.dlog(gen_);
    if (N == 1) gen_exp_ = 1;
    gen_exp_inv_ = modinv(gen_exp_, N);

    if (N % pair_.n != 0)
        throw internal_contradiction_error("n does not divide q^n - 1");

    // order-n character table: w = g^((q^n-1)/n), codes of w^0 .. w^(n-1)
    const FieldElement w = F.pow(gen_, static_cast<std::int64_t>(N / pair_.n));
    FieldElement cur = F.one();
    character_table_.reserve(pair_.n);
    for (unsigned r = 0; r < pair_.n; ++r) {
        character_table_.emplace_back(F.code(cur), r);
        cur = F.mul(cur, w);
    }
    std::sort(character_table_.begin(), character_table_.end());
    for (std::size_t i = 1; i < character_table_.size(); ++i)
        if (character_table_[i].first == character_table_[i - 1].first)
            throw internal_contradiction_error("subgroup character does not have order n");
}

CosetIndex DicksonNearfield::coset_exponent(const FieldElement& b) const {
    const ExtensionField& F = *field_;
    if (F.is_zero(b)) throw std::domain_error("coset exponent of zero");
    const u64 N = F.unit_order();
    unsigned r;
    if (F.has_dlog_table()) {
        r = static_cast<unsigned>(F.dlog_via_table(b) * gen_exp_inv_ % N % pair_.n);
    } else {
        // dlog_g(b) mod n read off the order-n character b -> b^((q^n-1)/n)
        const FieldElement chi = F.pow(b, static_cast<std::int64_t>(N / pair_.n));
        const u64 c = F.code(chi);
        auto it = std::lower_bound(character_table_.begin(), character_table_.end(),
                                   std::make_pair(c, 0u));
        if (it == character_table_.end() || it->first != c)
            throw internal_contradiction_error("character value outside the order-n subgroup");
        r = it->second;
    }
    return CosetIndex{residues_.k_for_residue(r)};
}

FieldElement DicksonNearfield::nf_mul(const FieldElement& a, const FieldElement& b) const {
    const ExtensionField& F = *field_;
    if (F.is_zero(b)) return F.zero();
    const unsigned k = coset_exponent(b).k;
    return F.mul(F.frobenius(a, pair_.l * k), b);
}

FieldElement DicksonNearfield::nf_inv(const FieldElement& a) const {
    const ExtensionField& F = *field_;
    if (F.is_zero(a)) throw std::domain_error("division by zero: 0 has no o-inverse");
    // candidate for twist k is x_k = inv(a^(q^k)) = frobenius(inv(a), l*k);
    // its character is the frobenius image of inv(a)'s character, so one
    // inversion and one character evaluation cover all n candidates
    const FieldElement ia = F.inv(a);
    const u64 N = F.unit_order();
    std::optional<FieldElement> found;
    if (F.has_dlog_table()) {
        for (unsigned k = 1; k <= pair_.n; ++k) {
            const FieldElement x = F.frobenius(ia, pair_.l * k);
            if (coset_exponent(x).k == k) {
                if (found)
                    throw internal_contradiction_error("multiple consistent o-inverse candidates");
                found = x;
            }
        }
    } else {
        const FieldElement chi = F.pow(ia, static_cast<std::int64_t>(N / pair_.n));
        for (unsigned k = 1; k <= pair_.n; ++k) {
            const u64 c = F.code(F.frobenius(chi, pair_.l * k));
            auto it = std::lower_bound(character_table_.begin(), character_table_.end(),
                                       std::make_pair(c, 0u));
            if (it == character_table_.end() || it->first != c)
                throw internal_contradiction_error("character value outside the order-n subgroup");
            if (residues_.k_for_residue(it->second) == k) {
                if (found)
                    throw internal_contradiction_error("multiple consistent o-inverse candidates");
                found = F.frobenius(ia, pair_.l * k);
            }
        }
    }
    if (!found) throw internal_contradiction_error("no consistent o-inverse candidate");
    return *found;
}

std::uint64_t DicksonNearfield::dlog(const FieldElement& a) const {
    const u64 N = field_->unit_order();
    if (N == 1) {
        if (field_->is_zero(a)) throw std::domain_error("discrete log of zero");
        return 0;
    }
    return field_->dlog(a) * gen_exp_inv_ % N;
}

FieldElement DicksonNearfield::dlog_order_element(std::uint64_t i) const {
    if (i == 0) return field_->zero();
    return field_->pow(gen_, static_cast<std::int64_t>(i - 1));
}

DicksonNearfield construct(const DicksonPair& pair) {
    auto field = std::make_shared<const ExtensionField>(pair.p, pair.l * static_cast<unsigned>(pair.n));
    FieldElement gen = field->generator();
    return DicksonNearfield(pair, std::move(field), std::move(gen), "default");
}

DicksonNearfield construct(const DicksonPair& pair, const FieldElement& generator) {
    auto field = std::make_shared<const ExtensionField>(pair.p, pair.l * static_cast<unsigned>(pair.n));
    return DicksonNearfield(pair, std::move(field), generator,
                            "generator=" + to_string(generator));
}

namespace {

// Walks generator exponents e = 1, 2, ... coprime to q^n - 1, keeping the
// first representative of every new restricted-isomorphism class, until
// `wanted` representatives exist or the exponent range is exhausted.
std::vector<DicksonNearfield> class_walk(const DicksonPair& pair,
                                         std::shared_ptr<const ExtensionField> field,
                                         std::size_t wanted, std::uint64_t* variants_seen) {
    const ExtensionField& F = *field;
    const u64 N = F.unit_order();
    std::vector<DicksonNearfield> reps;
    u64 seen = 0;
    const u64 last = N == 1 ? 1 : N - 1;  // q^n = 2 has the single generator g = 1
    for (u64 e = 1; e <= last && reps.size() < wanted; ++e) {
        if (gcd_u64(e, N) != 1) continue;
        ++seen;
        DicksonNearfield cand(pair, field, F.pow(F.generator(), static_cast<std::int64_t>(e)),
                              "class-" + std::to_string(reps.size()));
        bool merged = false;
        for (const DicksonNearfield& rep : reps) {
            if (is_isomorphic_restricted(cand, rep)) {
                merged = true;
                break;
            }
        }
        if (!merged) reps.push_back(std::move(cand));
    }
    if (variants_seen) *variants_seen = seen;
    return reps;
}

}  // namespace

DicksonNearfield construct_class(const DicksonPair& pair, unsigned class_index) {
    const u64 predicted = class_count(pair);
    if (class_index >= predicted)
        throw std::invalid_argument("class_index " + std::to_string(class_index) +
                                    " out of range [0, " + std::to_string(predicted) + ")");
    if (class_index == 0) {
        DicksonNearfield nf = construct(pair);
        return DicksonNearfield(pair, nf.field_ptr(), nf.generator(), "class-0");
    }
    auto field = std::make_shared<const ExtensionField>(pair.p, pair.l * static_cast<unsigned>(pair.n));
    if (field->order() > kQuadraticSweepLimit)
        throw std::invalid_argument("class selection beyond index 0 requires q^n <= 4096");
    auto reps = class_walk(pair, field, class_index + 1, nullptr);
    if (reps.size() <= class_index)
        throw internal_contradiction_error("fewer isomorphism classes found than predicted");
    return std::move(reps[class_index]);
}

VariantClasses enumerate_variants(const DicksonPair& pair) {
    auto field = std::make_shared<const ExtensionField>(pair.p, pair.l * static_cast<unsigned>(pair.n));
    if (field->order() > kQuadraticSweepLimit)
        throw std::invalid_argument("variant enumeration requires q^n <= 4096");
    VariantClasses out;
    out.predicted = class_count(pair);
    out.representatives =
        class_walk(pair, field, std::numeric_limits<std::size_t>::max(), &out.variant_count);
    for (const DicksonNearfield& rep : out.representatives)
        out.rep_exponents.push_back(rep.generator_exponent());
    out.matches = out.representatives.size() == out.predicted;
    return out;
}

std::optional<unsigned> is_isomorphic_restricted(const DicksonNearfield& nf1,
                                                 const DicksonNearfield& nf2) {
    if (nf1.pair().q != nf2.pair().q || nf1.pair().n != nf2.pair().n)
        throw std::invalid_argument("isomorphism test requires the same Dickson pair");
    const ExtensionField& F = nf1.field();
    const ExtensionField& F2 = nf2.field();
    if (F.characteristic() != F2.characteristic() || F.degree() != F2.degree() ||
        !(F.modulus() == F2.modulus()))
        throw std::invalid_argument("isomorphism test requires the same underlying field");

    const u64 N = F.unit_order();
    const u64 n = nf1.pair().n;
    const unsigned ln = F.degree();
    const u64 Q = F.order();

    for (unsigned j = 0; j < ln; ++j) {
        bool ok = true;
        if (F.has_dlog_table()) {
            // Exponent-space check covering every pair (a,b) = (g^u, g^v):
            // psi_j respects the two o-products at (u,v) for all u iff the
            // twist exponents agree at v, i.e. k1(v) == k2(p^j v mod N).
            const u64 pj = powmod_u64(F.characteristic(), j, N);
            const u64 e1i = modinv(N == 1 ? 1 : nf1.generator_exponent() % N, N);
            const u64 e2i = modinv(N == 1 ? 1 : nf2.generator_exponent() % N, N);
            for (u64 v = 0; v < N; ++v) {
                const unsigned k1 = nf1.residues().k_for_residue(
                    static_cast<unsigned>(v * e1i % N % n));
                const unsigned k2 = nf2.residues().k_for_residue(
                    static_cast<unsigned>(v * pj % N * e2i % N % n));
                if (k1 != k2) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                // reconfirm with field arithmetic on all pairs, or 1e4
                // seeded samples when the pair count exceeds that
                const u64 pairs = N * N;
                if (pairs <= kPairSampleLimit) {
                    FieldElement a = F.one();
                    for (u64 u = 0; u < N && ok; ++u) {
                        FieldElement b = F.one();
                        for (u64 v = 0; v < N; ++v) {
                            const FieldElement lhs = F.frobenius(nf1.nf_mul(a, b), j);
                            const FieldElement rhs =
                                nf2.nf_mul(F.frobenius(a, j), F.frobenius(b, j));
                            if (!(lhs == rhs)) {
                                ok = false;
                                break;
                            }
                            b = F.mul(b, nf2.generator());
                        }
                        a = F.mul(a, nf1.generator());
                    }
                } else {
                    std::mt19937_64 rng(0);
                    for (u64 t = 0; t < kPairSampleLimit && ok; ++t) {
                        const FieldElement a = F.element_from_code(1 + rng() % (Q - 1));
                        const FieldElement b = F.element_from_code(1 + rng() % (Q - 1));
                        const FieldElement lhs = F.frobenius(nf1.nf_mul(a, b), j);
                        const FieldElement rhs = nf2.nf_mul(F.frobenius(a, j), F.frobenius(b, j));
                        ok = lhs == rhs;
                    }
                }
            }
        } else {
            std::mt19937_64 rng(0);
            for (u64 t = 0; t < kPairSampleLimit && ok; ++t) {
                const FieldElement a = F.element_from_code(1 + rng() % (Q - 1));
                const FieldElement b = F.element_from_code(1 + rng() % (Q - 1));
                const FieldElement lhs = F.frobenius(nf1.nf_mul(a, b), j);
                const FieldElement rhs = nf2.nf_mul(F.frobenius(a, j), F.frobenius(b, j));
                ok = lhs == rhs;
            }
        }
        if (ok) return j;
    }
    return std::nullopt;
}

FieldElement n9_oracle(const ExtensionField& gf9, const FieldElement& x, const FieldElement& y) {
    if (gf9.characteristic() != 3 || gf9.degree() != 2 ||
        !(gf9.modulus() == Polynomial(3, {1, 0, 1})))
        throw std::invalid_argument("n9_oracle requires GF(9) built over x^2 + 1");
    bool square = false;
    for (u64 c = 0; c < 9; ++c) {
        const FieldElement z = gf9.element_from_code(c);
        if (gf9.mul(z, z) == y) {
            square = true;
            break;
        }
    }
    if (square) return gf9.mul(x, y);
    const FieldElement x3 = gf9.mul(gf9.mul(x, x), x);
    return gf9.mul(x3, y);
}

NoncommutativityWitness noncommutativity_witness(const DicksonNearfield& nf) {
    if (nf.pair().n < 2)
        throw std::domain_error("DN(q,1) is a field; multiplication commutes everywhere");
    const ExtensionField& F = nf.field();
    const FieldElement& g = nf.generator();
    const u64 n = nf.pair().n;
    const u64 q = nf.pair().q;
    NoncommutativityWitness w;
    w.a = F.pow(g, static_cast<std::int64_t>(n));
    w.b = g;
    w.lhs = nf.nf_mul(w.a, w.b);
    w.rhs = nf.nf_mul(w.b, w.a);
    if (!(w.lhs == F.pow(g, static_cast<std::int64_t>(n * q + 1))) ||
        !(w.rhs == F.pow(g, static_cast<std::int64_t>(n + 1))) || w.lhs == w.rhs)
        throw internal_contradiction_error("g^n o g = g^(nq+1) != g^(n+1) = g o g^n failed");
    return w;
}

std::optional<std::array<FieldElement, 3>> left_distributivity_witness(
    const DicksonNearfield& nf) {
    if (nf.pair().n < 2) return std::nullopt;  // a field: left distributivity holds
    const ExtensionField& F = nf.field();
    const u64 Q = F.order();
    // a in {0, 1} and b = 0 or c = 0 can never violate; start past them.
    FieldElement a = nf.generator();
    for (u64 ia = 2; ia < Q; ++ia) {
        FieldElement b = F.one();
        for (u64 ib = 1; ib < Q; ++ib) {
            FieldElement c = F.one();
            for (u64 ic = 1; ic < Q; ++ic) {
                const FieldElement lhs = nf.nf_mul(a, F.add(b, c));
                const FieldElement rhs = F.add(nf.nf_mul(a, b), nf.nf_mul(a, c));
                if (!(lhs == rhs)) return std::array<FieldElement, 3>{a, b, c};
                c = F.mul(c, nf.generator());
            }
            b = F.mul(b, nf.generator());
        }
        a = F.mul(a, nf.generator());
    }
    return std::nullopt;
}

namespace {

// Index tables over elements in ascending dlog order (0 first, then g^0,
// g^1, ...) backing the exhaustive sweeps.
struct IndexTables {
    u64 Q = 0;
    std::vector<FieldElement> elems;
    std::vector<u32> idx_of_code;
    std::vector<u32> add;    // Q*Q, row-major
    std::vector<u32> nfmul;  // Q*Q; [a*Q + b] = index of a o b

    u32 at_add(u64 i, u64 j) const { return add[i * Q + j]; }
    u32 at_mul(u64 i, u64 j) const { return nfmul[i * Q + j]; }
};

IndexTables build_tables(const DicksonNearfield& nf) {
    const ExtensionField& F = nf.field();
    IndexTables t;
    t.Q = F.order();
    t.elems.reserve(t.Q);
    t.elems.push_back(F.zero());
    FieldElement cur = F.one();
    for (u64 e = 0; e + 1 < t.Q; ++e) {
        t.elems.push_back(cur);
        cur = F.mul(cur, nf.generator());
    }
    t.idx_of_code.assign(t.Q, 0);
    for (u64 i = 0; i < t.Q; ++i) t.idx_of_code[F.code(t.elems[i])] = static_cast<u32>(i);

    t.add.resize(t.Q * t.Q);
    for (u64 i = 0; i < t.Q; ++i)
        for (u64 j = 0; j < t.Q; ++j)
            t.add[i * t.Q + j] = t.idx_of_code[F.code(F.add(t.elems[i], t.elems[j]))];

    t.nfmul.resize(t.Q * t.Q);
    for (u64 j = 0; j < t.Q; ++j) {
        if (j == 0) {
            for (u64 i = 0; i < t.Q; ++i) t.nfmul[i * t.Q] = 0;
            continue;
        }
        const unsigned k = nf.coset_exponent(t.elems[j]).k;
        const unsigned fj = nf.pair().l * k;
        for (u64 i = 0; i < t.Q; ++i) {
            const FieldElement v = F.mul(F.frobenius(t.elems[i], fj), t.elems[j]);
            t.nfmul[i * t.Q + j] = t.idx_of_code[F.code(v)];
        }
    }
    return t;
}

CheckResult make_pass(std::string name, CheckMode mode, u64 count) {
    return CheckResult{std::move(name), mode, count, true, {}};
}

CheckResult make_fail(std::string name, CheckMode mode, u64 count,
                      std::vector<FieldElement> witness) {
    return CheckResult{std::move(name), mode, count, false, std::move(witness)};
}

VerificationReport verify_exhaustive(const DicksonNearfield& nf) {
    const ExtensionField& F = nf.field();
    const IndexTables t = build_tables(nf);
    const u64 Q = t.Q;
    VerificationReport rep;

    auto triple_check = [&](const char* name, auto&& pred) {
        for (u64 i = 0; i < Q; ++i)
            for (u64 j = 0; j < Q; ++j)
                for (u64 k = 0; k < Q; ++k)
                    if (!pred(i, j, k)) {
                        rep.checks.push_back(make_fail(name, CheckMode::exhaustive, Q * Q * Q,
                                                       {t.elems[i], t.elems[j], t.elems[k]}));
                        return;
                    }
        rep.checks.push_back(make_pass(name, CheckMode::exhaustive, Q * Q * Q));
    };

    triple_check("add_associativity", [&](u64 i, u64 j, u64 k) {
        return t.at_add(t.at_add(i, j), k) == t.at_add(i, t.at_add(j, k));
    });

    {
        bool ok = true;
        std::vector<FieldElement> w;
        for (u64 i = 0; i < Q && ok; ++i)
            for (u64 j = 0; j < Q; ++j)
                if (t.at_add(i, j) != t.at_add(j, i)) {
                    ok = false;
                    w = {t.elems[i], t.elems[j]};
                    break;
                }
        rep.checks.push_back(ok ? make_pass("add_commutativity", CheckMode::exhaustive, Q * Q)
                                : make_fail("add_commutativity", CheckMode::exhaustive, Q * Q, w));
    }

    {
        bool ok = true;
        std::vector<FieldElement> w;
        for (u64 i = 0; i < Q; ++i)
            if (t.at_add(0, i) != i || t.at_add(i, 0) != i) {
                ok = false;
                w = {t.elems[i]};
                break;
            }
        rep.checks.push_back(ok ? make_pass("add_identity", CheckMode::exhaustive, Q)
                                : make_fail("add_identity", CheckMode::exhaustive, Q, w));
    }

    {
        bool ok = true;
        std::vector<FieldElement> w;
        for (u64 i = 0; i < Q; ++i) {
            const FieldElement x = F.neg(t.elems[i]);
            if (!F.is_zero(F.add(t.elems[i], x))) {
                ok = false;
                w = {t.elems[i]};
                break;
            }
        }
        rep.checks.push_back(ok ? make_pass("add_inverses", CheckMode::exhaustive, Q)
                                : make_fail("add_inverses", CheckMode::exhaustive, Q, w));
    }

    triple_check("mul_associativity", [&](u64 i, u64 j, u64 k) {
        return t.at_mul(t.at_mul(i, j), k) == t.at_mul(i, t.at_mul(j, k));
    });

    triple_check("right_distributivity", [&](u64 i, u64 j, u64 k) {
        return t.at_mul(t.at_add(i, j), k) == t.at_add(t.at_mul(i, k), t.at_mul(j, k));
    });

    {
        bool ok = true;
        std::vector<FieldElement> w;
        for (u64 i = 0; i < Q; ++i)
            if (t.at_mul(1, i) != i || t.at_mul(i, 1) != i) {  // index 1 holds g^0 = 1
                ok = false;
                w = {t.elems[i]};
                break;
            }
        rep.checks.push_back(ok ? make_pass("mul_identity", CheckMode::exhaustive, Q)
                                : make_fail("mul_identity", CheckMode::exhaustive, Q, w));
    }

    {
        bool ok = true;
        std::vector<FieldElement> w;
        for (u64 i = 1; i < Q; ++i) {
            const FieldElement x = nf.nf_inv(t.elems[i]);
            const u32 xi = t.idx_of_code[F.code(x)];
            if (t.at_mul(i, xi) != 1 || t.at_mul(xi, i) != 1) {
                ok = false;
                w = {t.elems[i], x};
                break;
            }
        }
        rep.checks.push_back(ok ? make_pass("mul_inverses", CheckMode::exhaustive, Q - 1)
                                : make_fail("mul_inverses", CheckMode::exhaustive, Q - 1, w));
    }

    {
        bool ok = true;
        std::vector<FieldElement> w;
        for (u64 i = 0; i < Q; ++i)
            if (t.at_mul(0, i) != 0 || t.at_mul(i, 0) != 0) {
                ok = false;
                w = {t.elems[i]};
                break;
            }
        rep.checks.push_back(ok ? make_pass("zero_annihilation", CheckMode::exhaustive, Q)
                                : make_fail("zero_annihilation", CheckMode::exhaustive, Q, w));
    }

    return rep;
}

VerificationReport verify_sampled(const DicksonNearfield& nf, const SampleSpec& spec) {
    const ExtensionField& F = nf.field();
    const u64 Q = F.order();
    VerificationReport rep;

    struct Tracker {
        CheckResult result;
        explicit Tracker(std::string name, u64 count)
            : result{std::move(name), CheckMode::sampled, count, true, {}} {}
        void fail(std::vector<FieldElement> w) {
            if (result.passed) {
                result.passed = false;
                result.witness = std::move(w);
            }
        }
    };

    Tracker add_assoc("add_associativity", spec.count);
    Tracker add_comm("add_commutativity", spec.count);
    Tracker add_id("add_identity", spec.count);
    Tracker add_inv("add_inverses", spec.count);
    Tracker mul_assoc("mul_associativity", spec.count);
    Tracker right_dist("right_distributivity", spec.count);
    Tracker mul_id("mul_identity", spec.count);
    Tracker mul_inv("mul_inverses", spec.count);
    Tracker zero_ann("zero_annihilation", spec.count);

    std::mt19937_64 rng(spec.seed);
    const FieldElement one = F.one();
    for (u64 iter = 0; iter < spec.count; ++iter) {
        const FieldElement a = F.element_from_code(rng() % Q);
        const FieldElement b = F.element_from_code(rng() % Q);
        const FieldElement c = F.element_from_code(rng() % Q);

        if (!(F.add(F.add(a, b), c) == F.add(a, F.add(b, c)))) add_assoc.fail({a, b, c});
        if (!(F.add(a, b) == F.add(b, a))) add_comm.fail({a, b});
        if (!(F.add(a, F.zero()) == a)) add_id.fail({a});
        if (!F.is_zero(F.add(a, F.neg(a)))) add_inv.fail({a});

        if (!(nf.nf_mul(nf.nf_mul(a, b), c) == nf.nf_mul(a, nf.nf_mul(b, c))))
            mul_assoc.fail({a, b, c});
        if (!(nf.nf_mul(F.add(a, b), c) == F.add(nf.nf_mul(a, c), nf.nf_mul(b, c))))
            right_dist.fail({a, b, c});
        if (!(nf.nf_mul(one, a) == a) || !(nf.nf_mul(a, one) == a)) mul_id.fail({a});
        if (!F.is_zero(nf.nf_mul(F.zero(), a)) || !F.is_zero(nf.nf_mul(a, F.zero())))
            zero_ann.fail({a});
        if (!F.is_zero(a)) {
            const FieldElement x = nf.nf_inv(a);
            if (!(nf.nf_mul(a, x) == one) || !(nf.nf_mul(x, a) == one)) mul_inv.fail({a, x});
        }
    }

    for (Tracker* tr : {&add_assoc, &add_comm, &add_id, &add_inv, &mul_assoc, &right_dist,
                        &mul_id, &mul_inv, &zero_ann})
        rep.checks.push_back(std::move(tr->result));
    return rep;
}

}  // namespace

VerificationReport verify_axioms(const DicksonNearfield& nf, CheckMode mode, SampleSpec spec) {
    if (mode == CheckMode::exhaustive) {
        if (nf.order() > kCubicSweepLimit)
            throw std::invalid_argument(
                "exhaustive verification requires q^n <= 625; use sampled mode");
        return verify_exhaustive(nf);
    }
    return verify_sampled(nf, spec);
}

CheckResult coupling_property_check(const DicksonNearfield& nf, CheckMode mode, SampleSpec spec) {
    const ExtensionField& F = nf.field();
    const u64 Q = F.order();
    const u64 n = nf.pair().n;
    const unsigned l = nf.pair().l;

    auto holds = [&](const FieldElement& a, const FieldElement& b,
                     std::vector<FieldElement>* w) {
        const unsigned ka = nf.coset_exponent(a).k;
        const unsigned kb = nf.coset_exponent(b).k;
        const FieldElement c = F.mul(F.frobenius(b, l * ka), a);  // phi_a(b) * a
        const unsigned kc = nf.coset_exponent(c).k;
        if ((ka + kb) % n == kc % n) return true;
        if (w) *w = {a, b, c};
        return false;
    };

    if (mode == CheckMode::exhaustive) {
        if (Q > kQuadraticSweepLimit)
            throw std::invalid_argument(
                "exhaustive coupling check requires q^n <= 4096; use sampled mode");
        const u64 N = Q - 1;
        FieldElement a = F.one();
        for (u64 i = 0; i < N; ++i) {
            FieldElement b = F.one();
            for (u64 j = 0; j < N; ++j) {
                std::vector<FieldElement> w;
                if (!holds(a, b, &w))
                    return make_fail("coupling_identity", CheckMode::exhaustive, N * N,
                                     std::move(w));
                b = F.mul(b, nf.generator());
            }
            a = F.mul(a, nf.generator());
        }
        return make_pass("coupling_identity", CheckMode::exhaustive, N * N);
    }

    std::mt19937_64 rng(spec.seed);
    for (u64 t = 0; t < spec.count; ++t) {
        const FieldElement a = F.element_from_code(1 + rng() % (Q - 1));
        const FieldElement b = F.element_from_code(1 + rng() % (Q - 1));
        std::vector<FieldElement> w;
        if (!holds(a, b, &w))
            return make_fail("coupling_identity", CheckMode::sampled, spec.count, std::move(w));
    }
    return make_pass("coupling_identity", CheckMode::sampled, spec.count);
}

CheckResult metacyclic_check(const DicksonNearfield& nf) {
    const ExtensionField& F = nf.field();
    const u64 Q = F.order();
    if (Q > kQuadraticSweepLimit)
        throw std::invalid_argument("metacyclic check requires q^n <= 4096");
    const u64 N = Q - 1;
    const u64 n = nf.pair().n;
    const u64 h_order = N / n;
    u64 scanned = 0;

    const FieldElement gn = F.pow(nf.generator(), static_cast<std::int64_t>(n));

    // H = <g^n> must be cyclic of order (q^n - 1)/n
    std::vector<bool> in_h(Q, false);
    std::vector<FieldElement> h_elems;
    h_elems.reserve(h_order);
    FieldElement cur = F.one();
    do {
        in_h[F.code(cur)] = true;
        h_elems.push_back(cur);
        cur = F.mul(cur, gn);
    } while (!(cur == F.one()) && h_elems.size() <= N);
    if (h_elems.size() != h_order)
        return make_fail("metacyclic_structure", CheckMode::exhaustive, scanned, {gn});

    // o coincides with field multiplication on H x H (hence H is o-closed)
    for (const FieldElement& h1 : h_elems)
        for (const FieldElement& h2 : h_elems) {
            ++scanned;
            const FieldElement prod = nf.nf_mul(h1, h2);
            if (!(prod == F.mul(h1, h2)) || !in_h[F.code(prod)])
                return make_fail("metacyclic_structure", CheckMode::exhaustive, scanned, {h1, h2});
        }

    // normality of H in (N^x, o)
    FieldElement x = F.one();
    for (u64 i = 0; i < N; ++i) {
        const FieldElement xi = nf.nf_inv(x);
        for (const FieldElement& h : h_elems) {
            ++scanned;
            const FieldElement conj = nf.nf_mul(nf.nf_mul(x, h), xi);
            if (!in_h[F.code(conj)])
                return make_fail("metacyclic_structure", CheckMode::exhaustive, scanned, {x, h});
        }
        x = F.mul(x, nf.generator());
    }

    // quotient of order n, cyclic, generated by the coset of g: the o-powers
    // of g must hit n distinct cosets and return to H at step n
    std::vector<bool> seen(n, false);
    FieldElement gp = nf.generator();
    for (u64 j = 1; j <= n; ++j) {
        ++scanned;
        const unsigned r = static_cast<unsigned>(nf.dlog(gp) % n);
        if (seen[r] || (j == n && r != 0))
            return make_fail("metacyclic_structure", CheckMode::exhaustive, scanned, {gp});
        seen[r] = true;
        gp = nf.nf_mul(gp, nf.generator());
    }

    return make_pass("metacyclic_structure", CheckMode::exhaustive, scanned);
}

}  // namespace dickson
