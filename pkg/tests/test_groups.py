from fractions import Fraction

import pytest

from hopfchrom.cyclotomic import Cyclo, cyclotomic_polynomial
from hopfchrom.errors import (DomainError, ResourceCapError,
                              UnsupportedGroupError, VerificationFailure)
from hopfchrom.groups import (ClassFunction, PermGroup, Permutation,
                              abelian_irreducibles, burnside_count,
                              conjugacy_classes, inner_product,
                              irreducible_multiplicities, is_effective,
                              leq_char)

ABCD = ("a", "b", "c", "d")


def test_cyclotomic_polynomials():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(2) == (1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(6) == (1, -1, 1)
    # degree is Euler phi
    assert len(cyclotomic_polynomial(12)) - 1 == 4


def test_cyclo_arithmetic():
    i = Cyclo.root(4, 1)
    assert i * i == -1
    assert (i + i.conjugate()).is_rational()
    assert i + i.conjugate() == 0
    assert i * i.conjugate() == 1
    z = Cyclo.root(3, 1)
    assert z * z * z == 1
    assert z + z * z == -1
    assert (z - z).is_zero()


def test_cyclo_rational_interop():
    half = Cyclo.from_rational(4, Fraction(1, 2))
    assert half + half == 1
    assert half == Fraction(1, 2)
    assert hash(half) == hash(Fraction(1, 2))
    with pytest.raises(DomainError):
        Cyclo.root(4, 1) + Cyclo.root(3, 1)


def test_permutation_basics():
    g = Permutation.from_cycles("(a c)(b d)", ABCD)
    assert g("a") == "c" and g("b") == "d"
    assert g * g == Permutation.identity(ABCD)
    assert g.inverse() == g
    assert g.order() == 2
    assert g.cycle_string() == "(a c)(b d)"
    assert Permutation.from_cycles("()", ABCD).is_identity()


def test_permutation_composition_order():
    # self * other applies other first
    s = Permutation.from_cycles("(a b)", ("a", "b", "c"))
    t = Permutation.from_cycles("(b c)", ("a", "b", "c"))
    assert (s * t)("b") == s("c")
    assert (t * s)("a") == t("b")


def test_permutation_parse_forms():
    d = {"a": "b", "b": "a", "c": "c", "d": "d"}
    assert Permutation.parse(d, ABCD) == Permutation.from_cycles("(a b)", ABCD)
    assert Permutation.parse("(a b)", ABCD) == Permutation.from_cycles("(a b)", ABCD)
    with pytest.raises(DomainError):
        Permutation.parse("(a e)", ABCD)


def test_group_closure_and_classes():
    r = Permutation.from_cycles("(a b d c)", ABCD)
    g4 = PermGroup((r,))
    assert g4.order == 4
    assert g4.elements[0].is_identity()
    reps = [p.cycle_string() for p in g4.class_reps]
    assert reps == ["()", "(a b d c)", "(a d)(b c)", "(a c d b)"]
    assert list(g4.class_sizes) == [1, 1, 1, 1]
    assert g4.is_abelian()
    assert g4.exponent() == 4


def test_symmetric_group_classes():
    s3 = PermGroup((Permutation.from_cycles("(a b)", ("a", "b", "c")),
                    Permutation.from_cycles("(a b c)", ("a", "b", "c"))))
    assert s3.order == 6
    assert not s3.is_abelian()
    assert sorted(s3.class_sizes) == [1, 2, 3]
    assert len(conjugacy_classes(s3)) == 3


def test_group_order_cap():
    gens = (Permutation.from_cycles("(a b)", ABCD),
            Permutation.from_cycles("(a b c d)", ABCD))
    with pytest.raises(ResourceCapError):
        PermGroup(gens, cap=10)


def test_class_function_from_element_values():
    r = Permutation.from_cycles("(a b d c)", ABCD)
    g4 = PermGroup((r,))
    cf = ClassFunction.from_element_values(g4, {g: g.order() for g in g4.elements})
    assert cf.values == (1, 4, 2, 4)
    assert cf.at_identity() == 1
    bad = {g: 0 for g in g4.elements}
    bad[g4.elements[1]] = 1
    # constant on classes, so this cannot happen unless the class splits
    cf2 = ClassFunction.from_element_values(g4, bad)
    assert cf2.values == (0, 1, 0, 0)


def test_inner_product_and_burnside():
    r = Permutation.from_cycles("(a b d c)", ABCD)
    g4 = PermGroup((r,))
    reg = ClassFunction.regular(g4)
    triv = ClassFunction.constant(g4, 1)
    assert inner_product(triv, reg) == 1
    assert burnside_count(reg) == 1
    # 84, 0, 12, 0 fixed colorings: 24 orbits
    counts = ClassFunction(g4, (84, 0, 12, 0))
    assert burnside_count(counts) == 24
    with pytest.raises(VerificationFailure):
        burnside_count(ClassFunction(g4, (1, 0, 0, 0)))


def test_abelian_irreducibles_z4():
    r = Permutation.from_cycles("(a b d c)", ABCD)
    g4 = PermGroup((r,))
    irr = abelian_irreducibles(g4)
    assert len(irr) == 4
    # first is trivial
    assert all(v == 1 for v in irr[0].values)
    # characters are orthonormal
    for i, chi in enumerate(irr):
        for j, other in enumerate(irr):
            assert inner_product(chi, other) == (1 if i == j else 0)


def test_abelian_irreducibles_klein():
    g = PermGroup((Permutation.from_cycles("(a b)(c d)", ABCD),
                   Permutation.from_cycles("(a c)(b d)", ABCD)))
    assert g.order == 4
    irr = abelian_irreducibles(g)
    assert len(irr) == 4
    assert all(all(v in (1, -1) for v in chi.values) for chi in irr)


def test_abelian_only():
    s3 = PermGroup((Permutation.from_cycles("(a b)", ("a", "b", "c")),
                    Permutation.from_cycles("(a b c)", ("a", "b", "c"))))
    with pytest.raises(UnsupportedGroupError):
        abelian_irreducibles(s3)
    triv = ClassFunction.constant(s3, 1)
    with pytest.raises(UnsupportedGroupError):
        is_effective(triv)


def test_effective_and_leq():
    r = Permutation.from_cycles("(a b d c)", ABCD)
    g4 = PermGroup((r,))
    reg = ClassFunction.regular(g4)
    ok, details = is_effective(reg)
    assert ok and details == {}
    assert all(m == 1 for _, m in irreducible_multiplicities(reg))
    # (2,0,-2,0) is the sum of the two order-4 characters, hence effective
    ok, _ = is_effective(ClassFunction(g4, (2, 0, -2, 0)))
    assert ok
    # identity value 1 with three zeros has multiplicity 1/4 everywhere
    ok, details = is_effective(ClassFunction(g4, (1, 0, 0, 0)))
    assert not ok and "offending_multiplicity" in details
    a = ClassFunction(g4, (2, 0, 2, 0))
    b = ClassFunction(g4, (12, 0, 0, 0))
    assert leq_char(a, b)[0]
    assert not leq_char(b, a)[0]
    assert leq_char(a, a)[0]


def test_multiplicities_of_permutation_character():
    r = Permutation.from_cycles("(a b d c)", ABCD)
    g4 = PermGroup((r,))
    # natural action character: fixed points per class
    nat = ClassFunction(g4, (4, 0, 0, 0))
    assert [m for _, m in irreducible_multiplicities(nat)] == [1, 1, 1, 1]
