#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "dickson/nearfield.hpp"

namespace dickson {

/// Serialized form of a nearfield. Integers are decimal, coefficient lists
/// little-endian arrays; no floating point anywhere.
struct NearfieldDescriptor {
    int format_version = 1;
    std::uint64_t p = 0;
    unsigned l = 0;
    std::uint64_t n = 0;
    std::vector<std::uint32_t> modulus;    // length l*n + 1, last entry 1
    std::vector<std::uint32_t> generator;  // length l*n
    std::string label;

    friend bool operator==(const NearfieldDescriptor&, const NearfieldDescriptor&) = default;
};

NearfieldDescriptor descriptor_of(const DicksonNearfield& nf);

/// Canonical JSON bytes: fixed key order, compact separators. Two
/// descriptors of the same nearfield serialize byte-identically.
std::string serialize_descriptor(const NearfieldDescriptor& d);

/// Throws std::invalid_argument with the parser's byte position on
/// malformed input. Performs structural validation only.
NearfieldDescriptor parse_descriptor(const std::string& text);

/// Full reload: re-validates pair clauses, modulus irreducibility and
/// generator primitivity, then rebuilds the residue system and dlog
/// backend. Nothing is trusted from the input.
DicksonNearfield load_descriptor(const std::string& text);

void save_descriptor(const DicksonNearfield& nf, const std::filesystem::path& dest);
DicksonNearfield load_descriptor_file(const std::filesystem::path& src);

enum class CayleyOp { add, mul };

/// CSV Cayley table, cell (i,j) = row_i op col_j (the column operand is b
/// in a o b and selects the automorphism). Multiplicative tables list
/// elements in ascending dlog order (0 first, then g^0, g^1, ...);
/// additive tables in lexicographic coefficient order. Cells render as
/// "c0:c1:...". Requires q^n <= 4096.
void export_cayley(const DicksonNearfield& nf, CayleyOp op, std::ostream& out);
std::string export_cayley(const DicksonNearfield& nf, CayleyOp op);
void export_cayley_file(const DicksonNearfield& nf, CayleyOp op,
                        const std::filesystem::path& dest);

struct CayleyTable {
    std::string corner;
    std::vector<FieldElement> row_elements;
    std::vector<FieldElement> col_elements;
    std::vector<std::vector<FieldElement>> cells;
};

CayleyTable parse_cayley(const std::string& csv);

}  // namespace dickson
