#include "dickson/catalog_io.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace dickson {

namespace {

using u64 = std::uint64_t;
using ojson = nlohmann::ordered_json;

std::vector<std::uint32_t> coeff_array(const nlohmann::json& j, const char* key, u64 p) {
    if (!j.contains(key) || !j[key].is_array())
        throw std::invalid_argument(std::string("descriptor field '") + key +
                                    "' missing or not an array");
    std::vector<std::uint32_t> out;
    out.reserve(j[key].size());
    for (const auto& v : j[key]) {
        if (!v.is_number_unsigned())
            throw std::invalid_argument(std::string("descriptor field '") + key +
                                        "' must hold non-negative integers");
        const u64 c = v.get<u64>();
        if (c >= p)
            throw std::invalid_argument(std::string("descriptor field '") + key +
                                        "' has a coefficient outside [0, p)");
        out.push_back(static_cast<std::uint32_t>(c));
    }
    return out;
}

u64 uint_field(const nlohmann::json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_unsigned())
        throw std::invalid_argument(std::string("descriptor field '") + key +
                                    "' missing or not a non-negative integer");
    return j[key].get<u64>();
}

}  // namespace

NearfieldDescriptor descriptor_of(const DicksonNearfield& nf) {
    NearfieldDescriptor d;
    d.format_version = 1;
    d.p = nf.pair().p;
    d.l = nf.pair().l;
    d.n = nf.pair().n;
    d.modulus = nf.field().modulus().coeffs();
    d.generator = nf.generator().coeffs;
    d.label = nf.label();
    return d;
}

std::string serialize_descriptor(const NearfieldDescriptor& d) {
    ojson j;
    j["format_version"] = d.format_version;
    j["p"] = d.p;
    j["l"] = d.l;
    j["n"] = d.n;
    j["modulus"] = d.modulus;
    j["generator"] = d.generator;
    j["label"] = d.label;
    return j.dump();
}

NearfieldDescriptor parse_descriptor(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("descriptor parse error: ") + e.what());
    }
    if (!j.is_object()) throw std::invalid_argument("descriptor must be a JSON object");

    NearfieldDescriptor d;
    const u64 version = uint_field(j, "format_version");
    if (version != 1)
        throw std::invalid_argument("unsupported descriptor format_version " +
                                    std::to_string(version));
    d.format_version = 1;
    d.p = uint_field(j, "p");
    const u64 l = uint_field(j, "l");
    if (l < 1 || l > 64) throw std::invalid_argument("descriptor field 'l' out of range");
    d.l = static_cast<unsigned>(l);
    d.n = uint_field(j, "n");
    if (d.n < 1) throw std::invalid_argument("descriptor field 'n' must be >= 1");
    d.modulus = coeff_array(j, "modulus", d.p);
    d.generator = coeff_array(j, "generator", d.p);
    if (!j.contains("label") || !j["label"].is_string())
        throw std::invalid_argument("descriptor field 'label' missing or not a string");
    d.label = j["label"].get<std::string>();
    return d;
}

DicksonNearfield load_descriptor(const std::string& text) {
    const NearfieldDescriptor d = parse_descriptor(text);

    u64 q = 1;
    for (unsigned i = 0; i < d.l; ++i) {
        if (q > (u64{1} << 40) / d.p)
            throw std::invalid_argument("descriptor validation failed: q = p^l overflows");
        q *= d.p;
    }
    const DicksonPair pair = make_dickson_pair(q, d.n);  // re-checks all pair clauses

    const u64 m = static_cast<u64>(d.l) * d.n;
    if (d.modulus.size() != m + 1)
        throw std::invalid_argument("descriptor validation failed: modulus length must be l*n + 1");
    if (d.modulus.back() != 1)
        throw std::invalid_argument("descriptor validation failed: modulus must be monic");
    if (d.generator.size() != m)
        throw std::invalid_argument("descriptor validation failed: generator length must be l*n");

    // field construction re-certifies irreducibility and primitivity
    auto field = std::make_shared<const ExtensionField>(
        d.p, static_cast<unsigned>(m), Polynomial(d.p, d.modulus), FieldElement{d.generator});
    return DicksonNearfield(pair, std::move(field), FieldElement{d.generator}, d.label);
}

void save_descriptor(const DicksonNearfield& nf, const std::filesystem::path& dest) {
    std::ofstream out(dest, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + dest.string() + " for writing");
    out << serialize_descriptor(descriptor_of(nf)) << "\n";
    if (!out) throw std::runtime_error("write failed: " + dest.string());
}

DicksonNearfield load_descriptor_file(const std::filesystem::path& src) {
    std::ifstream in(src, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + src.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_descriptor(buf.str());
}

void export_cayley(const DicksonNearfield& nf, CayleyOp op, std::ostream& out) {
    const ExtensionField& F = nf.field();
    const u64 Q = F.order();
    if (Q > 4096)
        throw std::invalid_argument("Cayley export requires q^n <= 4096 (table is quadratic)");

    std::vector<FieldElement> elems;
    elems.reserve(Q);
    if (op == CayleyOp::mul) {
        // ascending dlog order: 0, g^0, g^1, ...
        elems.push_back(F.zero());
        FieldElement cur = F.one();
        for (u64 e = 0; e + 1 < Q; ++e) {
            elems.push_back(cur);
            cur = F.mul(cur, nf.generator());
        }
    } else {
        for (u64 t = 0; t < Q; ++t) elems.push_back(F.lex_element(t));
    }

    out << (op == CayleyOp::mul ? "mul" : "add");
    for (const FieldElement& e : elems) out << ',' << to_string(e);
    out << '\n';

    // per-column twist for the multiplicative table: the column operand b
    // fixes the automorphism in a o b
    std::vector<unsigned> col_frob(elems.size(), 0);
    if (op == CayleyOp::mul) {
        for (std::size_t j = 1; j < elems.size(); ++j)
            col_frob[j] = nf.pair().l * nf.coset_exponent(elems[j]).k;
    }

    for (const FieldElement& r : elems) {
        out << to_string(r);
        for (std::size_t j = 0; j < elems.size(); ++j) {
            FieldElement cell;
            if (op == CayleyOp::add) {
                cell = F.add(r, elems[j]);
            } else if (j == 0) {
                cell = F.zero();
            } else {
                cell = F.mul(F.frobenius(r, col_frob[j]), elems[j]);
            }
            out << ',' << to_string(cell);
        }
        out << '\n';
    }
}

std::string export_cayley(const DicksonNearfield& nf, CayleyOp op) {
    std::ostringstream os;
    export_cayley(nf, op, os);
    return os.str();
}

void export_cayley_file(const DicksonNearfield& nf, CayleyOp op,
                        const std::filesystem::path& dest) {
    std::ofstream out(dest, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + dest.string() + " for writing");
    export_cayley(nf, op, out);
    if (!out) throw std::runtime_error("write failed: " + dest.string());
}

CayleyTable parse_cayley(const std::string& csv) {
    CayleyTable t;
    std::istringstream in(csv);
    std::string line;
    bool header = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> tokens;
        std::size_t start = 0;
        while (start <= line.size()) {
            std::size_t end = line.find(',', start);
            if (end == std::string::npos) end = line.size();
            tokens.push_back(line.substr(start, end - start));
            if (end == line.size()) break;
            start = end + 1;
        }
        if (header) {
            t.corner = tokens.at(0);
            for (std::size_t i = 1; i < tokens.size(); ++i)
                t.col_elements.push_back(parse_element(tokens[i]));
            header = false;
            continue;
        }
        if (tokens.size() != t.col_elements.size() + 1)
            throw std::invalid_argument("Cayley row width does not match the header");
        t.row_elements.push_back(parse_element(tokens.at(0)));
        std::vector<FieldElement> cells;
        cells.reserve(tokens.size() - 1);
        for (std::size_t i = 1; i < tokens.size(); ++i) cells.push_back(parse_element(tokens[i]));
        t.cells.push_back(std::move(cells));
    }
    if (header) throw std::invalid_argument("empty Cayley document");
    return t;
}

}  // namespace dickson
