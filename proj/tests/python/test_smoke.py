import json

import pytest

import dicksonnf as d


def test_number_theory_helpers():
    assert d.factorize(8) == [2, 2, 2]
    assert d.euler_phi(6) == 2
    assert d.mult_order(2, 7) == 3
    assert d.as_prime_power(9) == (3, 2)
    assert d.as_prime_power(12) is None
    ok, clause, _ = d.is_dickson_pair(13, 6)
    assert ok and clause == 0
    ok, clause, reason = d.is_dickson_pair(5, 3)
    assert not ok and clause == 2 and "clause 2" in reason
    assert d.class_count(7, 3) == 2
    assert d.residue_indices(7, 3) == [1, 2, 0]


def test_extension_field_ops():
    F = d.ExtensionField(3, 2)
    assert F.order == 9
    assert F.modulus == [1, 0, 1]
    assert F.generator == [1, 1]
    assert F.mul([0, 1], [0, 1]) == [2, 0]  # beta^2 = -1
    assert F.add([1, 1], [2, 2]) == [0, 0]
    assert F.inv([2, 0]) == [2, 0]
    assert F.dlog([2, 0]) == 4
    assert F.frobenius([0, 1], 1) == [0, 2]


def test_construct_matches_the_square_rule():
    nf = d.construct(3, 2)
    assert nf.order == 9
    # python-side oracle: squares of GF(9), then x*y or x^3*y
    elements = [[a, b] for a in range(3) for b in range(3)]
    squares = []
    for z in elements:
        s = nf.field_mul(z, z)
        if s not in squares:
            squares.append(s)
    for x in elements:
        x3 = nf.field_mul(nf.field_mul(x, x), x)
        for y in elements:
            expect = nf.field_mul(x, y) if y in squares else nf.field_mul(x3, y)
            assert nf.multiply(x, y) == expect


def test_inverse_and_coset():
    nf = d.construct(7, 3)
    assert nf.coset_exponent([1, 0, 0]) == 3  # identity sits in H, k = n
    a = [3, 1, 0]
    x = nf.inverse(a)
    assert nf.multiply(a, x) == [1, 0, 0]
    assert nf.multiply(x, a) == [1, 0, 0]
    with pytest.raises(ValueError):
        nf.inverse([0, 0, 0])


def test_verify_and_witnesses():
    nf = d.construct(3, 2)
    rep = nf.verify(exhaustive=True)
    assert rep["passed"]
    assert len(rep["checks"]) == 9

    w = nf.noncommutativity_witness()
    assert w["lhs"] != w["rhs"]
    assert nf.left_distributivity_witness() is not None
    assert d.construct(5, 1).left_distributivity_witness() is None

    assert nf.metacyclic_check()["passed"]
    assert nf.coupling_check(exhaustive=True)["passed"]


def test_descriptor_roundtrip():
    nf = d.construct(3, 2)
    doc = nf.descriptor_json()
    parsed = json.loads(doc)
    assert parsed["modulus"] == [1, 0, 1]
    assert parsed["generator"] == [1, 1]
    back = d.load_descriptor(doc)
    assert back.descriptor_json() == doc
    with pytest.raises(ValueError):
        d.load_descriptor(doc.replace('"modulus":[1,0,1]', '"modulus":[2,0,1]'))


def test_classes_and_cayley():
    classes = d.enumerate_variant_classes(7, 3)
    assert classes["predicted"] == 2
    assert classes["found"] == 2
    assert classes["match"]
    assert classes["exponents"] == [1, 5]

    csv = d.construct(3, 2).cayley_csv("mul")
    lines = csv.strip().split("\n")
    assert len(lines) == 10
    assert lines[0].startswith("mul,0:0,1:0,1:1")


def test_invalid_pair_raises():
    with pytest.raises(ValueError):
        d.construct(5, 3)
    with pytest.raises(ValueError):
        d.construct(3, 2, generator=[0, 1])  # beta is not primitive
