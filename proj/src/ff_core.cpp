#include "dickson/ff_core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace dickson {

namespace {

using u64 = std::uint64_t;
using u32 = std::uint32_t;

u64 mulmod_u64(u64 a, u64 b, u64 m) {
    return static_cast<u64>((static_cast<__uint128_t>(a) * b) % m);
}

u64 powmod_u64(u64 a, u64 e, u64 m) {
    u64 r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

bool miller_rabin(u64 n, u64 a) {
    u64 d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    u64 x = powmod_u64(a % n, d, n);
    if (x == 1 || x == n - 1) return true;
    for (unsigned i = 1; i < s; ++i) {
        x = mulmod_u64(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

u64 pollard_rho(u64 n) {
    if ((n & 1) == 0) return 2;
    for (u64 c = 1;; ++c) {
        u64 x = 2, y = 2, d = 1;
        while (d == 1) {
            x = (mulmod_u64(x, x, n) + c) % n;
            y = (mulmod_u64(y, y, n) + c) % n;
            y = (mulmod_u64(y, y, n) + c) % n;
            d = std::gcd(x > y ? x - y : y - x, n);
        }
        if (d != n) return d;
    }
}

// ---- dense polynomial arithmetic over Z_p (little-endian coefficient
// vectors, trimmed) used by the irreducibility machinery ----

using Coeffs = std::vector<u32>;

void trim(Coeffs& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Coeffs poly_mul(const Coeffs& a, const Coeffs& b, u64 p) {
    if (a.empty() || b.empty()) return {};
    std::vector<u64> acc(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            acc[i + j] += static_cast<u64>(a[i]) * b[j] % p;
    }
    Coeffs r(acc.size());
    for (std::size_t i = 0; i < acc.size(); ++i) r[i] = static_cast<u32>(acc[i] % p);
    trim(r);
    return r;
}

// remainder of a by monic f
Coeffs poly_mod(Coeffs a, const Coeffs& f, u64 p) {
    trim(a);
    const std::size_t df = f.size() - 1;
    while (a.size() > df) {
        const u64 lead = a.back();
        const std::size_t shift = a.size() - 1 - df;
        if (lead) {
            for (std::size_t i = 0; i < df; ++i) {
                u64 v = a[shift + i] + (p - lead * f[i] % p);
                a[shift + i] = static_cast<u32>(v % p);
            }
        }
        a.pop_back();
        trim(a);
        if (a.size() <= df) break;
    }
    return a;
}

Coeffs poly_mulmod(const Coeffs& a, const Coeffs& b, const Coeffs& f, u64 p) {
    return poly_mod(poly_mul(a, b, p), f, p);
}

Coeffs poly_powmod(Coeffs base, u64 e, const Coeffs& f, u64 p) {
    Coeffs r{1};
    base = poly_mod(std::move(base), f, p);
    while (e) {
        if (e & 1) r = poly_mulmod(r, base, f, p);
        base = poly_mulmod(base, base, f, p);
        e >>= 1;
    }
    return r;
}

Coeffs poly_sub(const Coeffs& a, const Coeffs& b, u64 p) {
    Coeffs r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        u64 av = i < a.size() ? a[i] : 0;
        u64 bv = i < b.size() ? b[i] : 0;
        r[i] = static_cast<u32>((av + p - bv) % p);
    }
    trim(r);
    return r;
}

Coeffs poly_make_monic(Coeffs a, u64 p) {
    trim(a);
    if (a.empty() || a.back() == 1) return a;
    const u64 inv = powmod_u64(a.back(), p - 2, p);
    for (auto& c : a) c = static_cast<u32>(c * inv % p);
    return a;
}

Coeffs poly_gcd(Coeffs a, Coeffs b, u64 p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Coeffs r = poly_mod(a, poly_make_monic(b, p), p);
        a = std::move(b);
        b = std::move(r);
        b = poly_make_monic(std::move(b), p);
        a = poly_make_monic(std::move(a), p);
    }
    return poly_make_monic(std::move(a), p);
}

std::vector<u64> distinct_primes(const std::vector<u64>& multiset) {
    std::vector<u64> out;
    for (u64 f : multiset)
        if (out.empty() || out.back() != f) out.push_back(f);
    return out;
}

constexpr u64 kMaxFieldOrder = u64{1} << 24;

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (u64 d : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % d == 0) return n == d;
    }
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (!miller_rabin(n, a)) return false;
    }
    return true;
}

std::vector<std::uint64_t> factorize(std::uint64_t n) {
    if (n < 1) throw std::invalid_argument("factorize requires n >= 1");
    std::vector<u64> out;
    for (u64 d = 2; d <= 1'000'000 && d * d <= n; d == 2 ? ++d : d += 2) {
        while (n % d == 0) {
            out.push_back(d);
            n /= d;
        }
    }
    // what remains has no prime factor below 1e6; split it with Pollard rho
    std::vector<u64> stack;
    if (n > 1) stack.push_back(n);
    while (!stack.empty()) {
        u64 v = stack.back();
        stack.pop_back();
        if (is_prime(v)) {
            out.push_back(v);
            continue;
        }
        u64 d = pollard_rho(v);
        stack.push_back(d);
        stack.push_back(v / d);
    }
    std::sort(out.begin(), out.end());
    return out;
}

Polynomial::Polynomial(std::uint64_t p, std::vector<std::uint32_t> coeffs)
    : p_(p), coeffs_(std::move(coeffs)) {
    if (p < 2) throw std::invalid_argument("polynomial characteristic must be >= 2");
    for (u32 c : coeffs_)
        if (c >= p) throw std::invalid_argument("polynomial coefficient out of range [0, p)");
    trim(coeffs_);
}

std::string to_string(const Polynomial& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i <= f.degree(); ++i) {
        const u32 c = f.coeff(static_cast<std::size_t>(i));
        if (c == 0) continue;
        if (!first) os << "+";
        if (i == 0)
            os << c;
        else {
            if (c != 1) os << c << "*";
            os << "x";
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

bool is_irreducible(const Polynomial& f) {
    const u64 p = f.characteristic();
    if (!is_prime(p)) throw std::invalid_argument("irreducibility test requires prime characteristic");
    if (!f.is_monic()) throw std::invalid_argument("irreducibility test requires a monic polynomial");
    const int m = f.degree();
    if (m < 1) return false;

    const Coeffs& fv = f.coeffs();
    const Coeffs x = poly_mod(Coeffs{0, 1}, fv, p);

    // chain[i] = x^(p^i) mod f, built by repeated p-th powers
    std::vector<Coeffs> chain(static_cast<std::size_t>(m) + 1);
    chain[0] = x;
    for (int i = 1; i <= m; ++i)
        chain[static_cast<std::size_t>(i)] =
            poly_powmod(chain[static_cast<std::size_t>(i - 1)], p, fv, p);

    if (chain[static_cast<std::size_t>(m)] != x) return false;
    for (u64 r : distinct_primes(factorize(static_cast<u64>(m)))) {
        const Coeffs diff = poly_sub(chain[static_cast<std::size_t>(m) / r], x, p);
        const Coeffs g = poly_gcd(diff, fv, p);
        if (!(g.size() == 1 && g[0] == 1)) return false;
    }
    return true;
}

Polynomial find_irreducible(std::uint64_t p, unsigned m) {
    if (!is_prime(p)) throw std::invalid_argument("find_irreducible requires prime p");
    if (m < 1) throw std::invalid_argument("find_irreducible requires m >= 1");
    // lex scan over (c_0, ..., c_{m-1}), last coordinate fastest
    std::vector<u32> digits(m, 0);
    for (;;) {
        std::vector<u32> coeffs(digits);
        coeffs.push_back(1);
        Polynomial f(p, std::move(coeffs));
        if (is_irreducible(f)) return f;
        int i = static_cast<int>(m) - 1;
        while (i >= 0 && digits[static_cast<std::size_t>(i)] == p - 1) {
            digits[static_cast<std::size_t>(i)] = 0;
            --i;
        }
        if (i < 0)
            throw internal_contradiction_error("no monic irreducible of the requested degree found");
        ++digits[static_cast<std::size_t>(i)];
    }
}

std::string to_string(const FieldElement& a) {
    std::ostringstream os;
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
        if (i) os << ":";
        os << a.coeffs[i];
    }
    return os.str();
}

FieldElement parse_element(const std::string& text) {
    FieldElement out;
    std::size_t start = 0;
    if (text.empty()) throw std::invalid_argument("empty element literal");
    while (start <= text.size()) {
        std::size_t end = text.find(':', start);
        if (end == std::string::npos) end = text.size();
        const std::string tok = text.substr(start, end - start);
        if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("bad element literal: '" + text + "'");
        out.coeffs.push_back(static_cast<u32>(std::stoul(tok)));
        start = end + 1;
        if (end == text.size()) break;
    }
    return out;
}

ExtensionField::ExtensionField(std::uint64_t p, unsigned m)
    : ExtensionField(p, m, find_irreducible(p, m)) {}

ExtensionField::ExtensionField(std::uint64_t p, unsigned m, Polynomial modulus)
    : p_(p), m_(m), modulus_(std::move(modulus)) {
    init();
    generator_ = find_primitive();  // certificate-checked during the scan
    init_dlog_backends();
}

ExtensionField::ExtensionField(std::uint64_t p, unsigned m, Polynomial modulus,
                               FieldElement generator)
    : p_(p), m_(m), modulus_(std::move(modulus)) {
    init();
    check_element(generator);
    if (!is_primitive(generator))
        throw std::invalid_argument("generator is not primitive (order below p^m - 1)");
    generator_ = std::move(generator);
    init_dlog_backends();
}

void ExtensionField::init() {
    if (!is_prime(p_)) throw std::invalid_argument("field characteristic must be prime");
    if (m_ < 1) throw std::invalid_argument("extension degree must be >= 1");
    order_ = 1;
    for (unsigned i = 0; i < m_; ++i) {
        if (order_ > kMaxFieldOrder / p_)
            throw std::invalid_argument("field order above supported bound 2^24");
        order_ *= p_;
    }
    if (order_ > kMaxFieldOrder)
        throw std::invalid_argument("field order above supported bound 2^24");
    if (modulus_.characteristic() != p_)
        throw std::invalid_argument("modulus characteristic mismatch");
    if (modulus_.degree() != static_cast<int>(m_) || !modulus_.is_monic())
        throw std::invalid_argument("modulus must be monic of degree m");
    if (!is_irreducible(modulus_))
        throw std::invalid_argument("modulus is reducible over Z_p");

    // x^(m+i) mod f rows for the multiplication fold
    if (m_ >= 2) {
        reduction_rows_.resize(m_ - 1);
        std::vector<u32> cur(m_);  // x^m mod f = -(c_0 + ... + c_{m-1} x^{m-1})
        for (unsigned i = 0; i < m_; ++i)
            cur[i] = static_cast<u32>((p_ - modulus_.coeff(i)) % p_);
        reduction_rows_[0] = cur;
        for (unsigned i = 1; i + 1 < m_; ++i) {
            std::vector<u32> next(m_, 0);
            const u64 top = cur[m_ - 1];
            for (unsigned j = m_ - 1; j >= 1; --j) next[j] = cur[j - 1];
            next[0] = 0;
            if (top) {
                for (unsigned j = 0; j < m_; ++j)
                    next[j] = static_cast<u32>((next[j] + top * reduction_rows_[0][j]) % p_);
            }
            reduction_rows_[i] = next;
            cur = std::move(next);
        }
    }

    factors_ = factorize(order_ - 1);

    // frobenius_basis_[j][i] = (x^i)^(p^j)
    frobenius_basis_.resize(m_);
    frobenius_basis_[0].resize(m_);
    for (unsigned i = 0; i < m_; ++i) {
        FieldElement e = zero();
        e.coeffs[i] = 1;
        frobenius_basis_[0][i] = std::move(e);
    }
    for (unsigned j = 1; j < m_; ++j) {
        frobenius_basis_[j].resize(m_);
        for (unsigned i = 0; i < m_; ++i)
            frobenius_basis_[j][i] =
                pow(frobenius_basis_[j - 1][i], static_cast<std::int64_t>(p_));
    }
}

void ExtensionField::init_dlog_backends() {
    const u64 n = unit_order();
    if (order_ <= 65536) {
        dlog_table_.assign(order_, UINT32_MAX);
        FieldElement cur = one();
        for (u64 e = 0; e < n; ++e) {
            dlog_table_[code(cur)] = static_cast<u32>(e);
            cur = mul(cur, generator_);
        }
        if (!(cur == one()))
            throw internal_contradiction_error("generator power cycle did not close");
    }
    bsgs_step_ = static_cast<u64>(std::ceil(std::sqrt(static_cast<double>(n))));
    if (bsgs_step_ == 0) bsgs_step_ = 1;
    while (bsgs_step_ * bsgs_step_ < n) ++bsgs_step_;
    bsgs_baby_.reserve(bsgs_step_ * 2);
    FieldElement cur = one();
    for (u64 j = 0; j < bsgs_step_ && j < n; ++j) {
        bsgs_baby_.emplace(code(cur), static_cast<u32>(j));
        cur = mul(cur, generator_);
    }
    bsgs_giant_ = pow(inv(generator_), static_cast<std::int64_t>(bsgs_step_));
}

void ExtensionField::check_element(const FieldElement& a) const {
    if (a.coeffs.size() != m_)
        throw std::invalid_argument("element does not belong to this field (length mismatch)");
    for (u32 c : a.coeffs)
        if (c >= p_)
            throw std::invalid_argument("element does not belong to this field (coefficient out of range)");
}

FieldElement ExtensionField::one() const {
    FieldElement e = zero();
    e.coeffs[0] = 1;
    return e;
}

bool ExtensionField::is_zero(const FieldElement& a) const {
    for (u32 c : a.coeffs)
        if (c) return false;
    return true;
}

FieldElement ExtensionField::element(std::vector<std::uint32_t> coeffs) const {
    FieldElement e{std::move(coeffs)};
    check_element(e);
    return e;
}

std::uint64_t ExtensionField::code(const FieldElement& a) const {
    u64 c = 0;
    for (std::size_t i = a.coeffs.size(); i-- > 0;) c = c * p_ + a.coeffs[i];
    return c;
}

FieldElement ExtensionField::element_from_code(std::uint64_t code) const {
    if (code >= order_) throw std::invalid_argument("element code out of range");
    FieldElement e = zero();
    for (unsigned i = 0; i < m_; ++i) {
        e.coeffs[i] = static_cast<u32>(code % p_);
        code /= p_;
    }
    return e;
}

FieldElement ExtensionField::lex_element(std::uint64_t t) const {
    if (t >= order_) throw std::invalid_argument("lex index out of range");
    FieldElement e = zero();
    for (unsigned i = m_; i-- > 0;) {
        e.coeffs[i] = static_cast<u32>(t % p_);
        t /= p_;
    }
    return e;
}

FieldElement ExtensionField::add(const FieldElement& a, const FieldElement& b) const {
    check_element(a);
    check_element(b);
    FieldElement r = a;
    for (unsigned i = 0; i < m_; ++i) {
        r.coeffs[i] += b.coeffs[i];
        if (r.coeffs[i] >= p_) r.coeffs[i] -= static_cast<u32>(p_);
    }
    return r;
}

FieldElement ExtensionField::sub(const FieldElement& a, const FieldElement& b) const {
    return add(a, neg(b));
}

FieldElement ExtensionField::neg(const FieldElement& a) const {
    check_element(a);
    FieldElement r = a;
    for (unsigned i = 0; i < m_; ++i)
        if (r.coeffs[i]) r.coeffs[i] = static_cast<u32>(p_ - r.coeffs[i]);
    return r;
}

FieldElement ExtensionField::mul(const FieldElement& a, const FieldElement& b) const {
    check_element(a);
    check_element(b);
    if (m_ == 1)
        return FieldElement{{static_cast<u32>(static_cast<u64>(a.coeffs[0]) * b.coeffs[0] % p_)}};
    u64 acc[47] = {0};  // 2*m - 1 <= 47 for m <= 24
    for (unsigned i = 0; i < m_; ++i) {
        const u64 ai = a.coeffs[i];
        if (!ai) continue;
        for (unsigned j = 0; j < m_; ++j) acc[i + j] += ai * b.coeffs[j];
    }
    FieldElement r = zero();
    for (unsigned i = 0; i + 1 < m_; ++i) {
        const u64 c = acc[m_ + i] % p_;
        if (!c) continue;
        const auto& row = reduction_rows_[i];
        for (unsigned j = 0; j < m_; ++j) acc[j] += c * row[j];
    }
    for (unsigned j = 0; j < m_; ++j) r.coeffs[j] = static_cast<u32>(acc[j] % p_);
    return r;
}

FieldElement ExtensionField::inv(const FieldElement& a) const {
    check_element(a);
    if (is_zero(a)) throw std::domain_error("division by zero: 0 has no inverse");
    return pow(a, static_cast<std::int64_t>(order_) - 2);
}

FieldElement ExtensionField::pow(const FieldElement& a, std::int64_t e) const {
    check_element(a);
    if (is_zero(a)) {
        if (e > 0) return zero();
        if (e == 0) return one();
        throw std::domain_error("division by zero: 0 has no negative powers");
    }
    FieldElement base = a;
    u64 ee;
    if (e < 0) {
        base = inv(a);
        ee = static_cast<u64>(-(e + 1)) + 1;
    } else {
        ee = static_cast<u64>(e);
    }
    ee %= unit_order();
    FieldElement r = one();
    while (ee) {
        if (ee & 1) r = mul(r, base);
        base = mul(base, base);
        ee >>= 1;
    }
    return r;
}

FieldElement ExtensionField::frobenius(const FieldElement& a, unsigned j) const {
    check_element(a);
    const unsigned jm = j % m_;
    if (jm == 0) return a;
    const auto& basis = frobenius_basis_[jm];
    u64 acc[24] = {0};
    for (unsigned i = 0; i < m_; ++i) {
        const u64 ai = a.coeffs[i];
        if (!ai) continue;
        for (unsigned t = 0; t < m_; ++t) acc[t] += ai * basis[i].coeffs[t];
    }
    FieldElement r = zero();
    for (unsigned t = 0; t < m_; ++t) r.coeffs[t] = static_cast<u32>(acc[t] % p_);
    return r;
}

std::uint64_t ExtensionField::dlog(const FieldElement& a) const {
    return has_dlog_table() ? dlog_via_table(a) : dlog_via_bsgs(a);
}

std::uint64_t ExtensionField::dlog_via_table(const FieldElement& a) const {
    check_element(a);
    if (is_zero(a)) throw std::domain_error("discrete log of zero");
    if (dlog_table_.empty()) throw std::logic_error("field has no dlog table backend");
    return dlog_table_[code(a)];
}

std::uint64_t ExtensionField::dlog_via_bsgs(const FieldElement& a) const {
    check_element(a);
    if (is_zero(a)) throw std::domain_error("discrete log of zero");
    const u64 n = unit_order();
    FieldElement x = a;
    const u64 giants = n / bsgs_step_ + 2;
    for (u64 i = 0; i < giants; ++i) {
        auto it = bsgs_baby_.find(code(x));
        if (it != bsgs_baby_.end()) {
            const u64 e = i * bsgs_step_ + it->second;
            if (e < n) return e;
        }
        x = mul(x, bsgs_giant_);
    }
    throw internal_contradiction_error("BSGS found no exponent for a nonzero element");
}

bool ExtensionField::is_primitive(const FieldElement& a) const {
    check_element(a);
    if (is_zero(a)) return false;
    const u64 n = unit_order();
    for (u64 r : distinct_primes(factors_)) {
        if (pow(a, static_cast<std::int64_t>(n / r)) == one()) return false;
    }
    return true;
}

FieldElement ExtensionField::find_primitive() const {
    for (u64 t = 1; t < order_; ++t) {
        FieldElement cand = lex_element(t);
        if (is_primitive(cand)) return cand;
    }
    throw internal_contradiction_error("no primitive element found");
}

std::uint64_t ExtensionField::element_order(const FieldElement& a) const {
    check_element(a);
    if (is_zero(a)) throw std::domain_error("zero has no multiplicative order");
    u64 d = unit_order();
    for (u64 r : distinct_primes(factors_)) {
        while (d % r == 0 && pow(a, static_cast<std::int64_t>(d / r)) == one()) d /= r;
    }
    return d;
}

}  // namespace dickson
