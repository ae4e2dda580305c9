#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "dickson/catalog_io.hpp"

using namespace dickson;
using u64 = std::uint64_t;

TEST_CASE("descriptor serialization is canonical and matches the pinned form") {
    const DicksonNearfield nf = construct(make_dickson_pair(3, 2));
    const std::string doc = serialize_descriptor(descriptor_of(nf));
    CHECK(doc ==
          R"({"format_version":1,"p":3,"l":1,"n":2,"modulus":[1,0,1],"generator":[1,1],"label":"default"})");
    CHECK(doc == serialize_descriptor(descriptor_of(nf)));
    // a second build of the same nearfield serializes byte-identically
    CHECK(doc == serialize_descriptor(descriptor_of(construct(make_dickson_pair(3, 2)))));
}

TEST_CASE("descriptor round-trip is field-for-field and table-exact") {
    for (auto [q, n] : std::vector<std::pair<u64, u64>>{{3, 2}, {7, 3}, {5, 2}, {4, 3}, {5, 1}}) {
        const DicksonNearfield nf = construct(make_dickson_pair(q, n));
        const NearfieldDescriptor d = descriptor_of(nf);
        const std::string doc = serialize_descriptor(d);
        CHECK(parse_descriptor(doc) == d);
        CHECK(serialize_descriptor(parse_descriptor(doc)) == doc);

        const DicksonNearfield back = load_descriptor(doc);
        CHECK(back.label() == nf.label());
        const ExtensionField& F = nf.field();
        for (u64 i = 0; i < nf.order(); ++i)
            for (u64 j = 0; j < nf.order(); ++j) {
                const FieldElement a = F.element_from_code(i);
                const FieldElement b = F.element_from_code(j);
                CHECK(nf.nf_mul(a, b) == back.nf_mul(a, b));
            }
    }
}

TEST_CASE("load_descriptor re-validates everything") {
    // x^2 + 2 = (x+1)(x+2) over Z_3
    CHECK_THROWS_WITH_AS(
        load_descriptor(
            R"({"format_version":1,"p":3,"l":1,"n":2,"modulus":[2,0,1],"generator":[1,1],"label":"x"})"),
        doctest::Contains("reducible"), std::invalid_argument);
    // beta has order 4
    CHECK_THROWS_WITH_AS(
        load_descriptor(
            R"({"format_version":1,"p":3,"l":1,"n":2,"modulus":[1,0,1],"generator":[0,1],"label":"x"})"),
        doctest::Contains("not primitive"), std::invalid_argument);
    // (5,3) violates clause 2
    CHECK_THROWS_WITH_AS(
        load_descriptor(
            R"({"format_version":1,"p":5,"l":1,"n":3,"modulus":[3,0,0,1],"generator":[1,1,0],"label":"x"})"),
        doctest::Contains("clause 2"), std::invalid_argument);
    // malformed document: parse error carries a position
    CHECK_THROWS_WITH_AS(load_descriptor("{\"format_version\":1,"),
                         doctest::Contains("parse error"), std::invalid_argument);
    CHECK_THROWS_AS(
        load_descriptor(
            R"({"format_version":2,"p":3,"l":1,"n":2,"modulus":[1,0,1],"generator":[1,1],"label":"x"})"),
        std::invalid_argument);
    // wrong modulus length
    CHECK_THROWS_AS(
        load_descriptor(
            R"({"format_version":1,"p":3,"l":1,"n":2,"modulus":[1,0,0,1],"generator":[1,1],"label":"x"})"),
        std::invalid_argument);
    // non-monic modulus
    CHECK_THROWS_AS(
        load_descriptor(
            R"({"format_version":1,"p":3,"l":1,"n":2,"modulus":[1,0,2],"generator":[1,1],"label":"x"})"),
        std::invalid_argument);
    // floating point is rejected outright
    CHECK_THROWS_AS(
        load_descriptor(
            R"({"format_version":1,"p":3,"l":1,"n":2,"modulus":[1.5,0,1],"generator":[1,1],"label":"x"})"),
        std::invalid_argument);
    CHECK_THROWS_AS(
        load_descriptor(
            R"({"format_version":1,"p":3,"l":1,"n":2,"modulus":[1,0,1],"generator":[1,1]})"),
        std::invalid_argument);
}

TEST_CASE("descriptor files round-trip through the filesystem") {
    const auto tmp = std::filesystem::temp_directory_path() / "dicksonnf_test_descriptor.json";
    const DicksonNearfield nf = construct(make_dickson_pair(7, 3));
    save_descriptor(nf, tmp);
    const DicksonNearfield back = load_descriptor_file(tmp);
    CHECK(serialize_descriptor(descriptor_of(back)) == serialize_descriptor(descriptor_of(nf)));
    std::filesystem::remove(tmp);
    CHECK_THROWS_AS(load_descriptor_file("/nonexistent/dir/x.json"), std::runtime_error);
}

TEST_CASE("Cayley export: ordering, cells, and byte-exact round-trip") {
    const DicksonNearfield nf = construct(make_dickson_pair(3, 2));
    const ExtensionField& F = nf.field();

    const std::string mul_csv = export_cayley(nf, CayleyOp::mul);
    const CayleyTable mt = parse_cayley(mul_csv);
    CHECK(mt.corner == "mul");
    REQUIRE(mt.col_elements.size() == 9);
    // dlog order: 0 first, then g^0, g^1, ...
    CHECK(mt.col_elements[0] == F.zero());
    CHECK(mt.col_elements[1] == F.one());
    CHECK(mt.col_elements[2] == nf.generator());
    CHECK(mt.row_elements == mt.col_elements);
    for (std::size_t i = 0; i < 9; ++i)
        for (std::size_t j = 0; j < 9; ++j)
            CHECK(mt.cells[i][j] == nf.nf_mul(mt.row_elements[i], mt.col_elements[j]));
    // re-export of the parsed data is byte-identical
    CHECK(export_cayley(nf, CayleyOp::mul) == mul_csv);

    const std::string add_csv = export_cayley(nf, CayleyOp::add);
    const CayleyTable at = parse_cayley(add_csv);
    CHECK(at.corner == "add");
    // lexicographic coefficient order
    CHECK(at.col_elements[0] == F.element({0, 0}));
    CHECK(at.col_elements[1] == F.element({0, 1}));
    CHECK(at.col_elements[3] == F.element({1, 0}));
    for (std::size_t i = 0; i < 9; ++i)
        for (std::size_t j = 0; j < 9; ++j) {
            // componentwise mod-3 sums
            const FieldElement& a = at.row_elements[i];
            const FieldElement& b = at.col_elements[j];
            const FieldElement expect{{static_cast<std::uint32_t>((a.coeffs[0] + b.coeffs[0]) % 3),
                                       static_cast<std::uint32_t>((a.coeffs[1] + b.coeffs[1]) % 3)}};
            CHECK(at.cells[i][j] == expect);
        }
    CHECK(export_cayley(nf, CayleyOp::add) == add_csv);

    // the row picks the left operand: row a = 2, square column y -> plain 2*y
    const FieldElement two = F.element({2, 0});
    const FieldElement beta = F.element({0, 1});
    std::size_t row = 0, col = 0;
    for (std::size_t i = 0; i < 9; ++i) {
        if (mt.row_elements[i] == two) row = i;
        if (mt.col_elements[i] == beta) col = i;
    }
    CHECK(mt.cells[row][col] == F.mul(two, beta));
}

TEST_CASE("Cayley export refuses oversized tables") {
    const DicksonNearfield nf = construct(make_dickson_pair(67, 2));  // 4489 > 4096
    CHECK_THROWS_AS(export_cayley(nf, CayleyOp::mul), std::invalid_argument);
}

TEST_CASE("parse_cayley rejects ragged documents") {
    CHECK_THROWS_AS(parse_cayley(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_cayley("mul,0:0,1:0\n0:0,0:0\n"), std::invalid_argument);
}
