import itertools
import random
from fractions import Fraction

import pytest

from altdef.algebra import (
    IDENTITY_NAMES,
    associator,
    check_identity,
    make_algebra,
    multiply,
    reevaluate_witness,
    restricted_associativity,
    subalgebra_closure,
)
from altdef.catalog import catalog
from altdef.errors import UnknownAlgebraError
from altdef.linalg import _Echelon

F = Fraction


def _coords(a, **named):
    v = [F(0)] * a.dim
    for name, c in named.items():
        v[a.basis_names.index(name)] = F(c)
    return tuple(v)


def nonalt2():
    """Two-dimensional algebra that is not left alternative: e1e1=e2, e2e1=e1."""
    return make_algebra("nonalt2", 2, ("e1", "e2"), {(0, 0): [(1, 1)], (1, 0): [(0, 1)]})


# --- multiplication table ---------------------------------------------------


def test_octonion_table_spot_checks():
    o = catalog("octonions")
    e = [o.basis_element(i) for i in range(8)]
    u, e1, e2, e3, e4, e5, e6, e7 = e
    assert multiply(o, e1, e2) == e4
    assert multiply(o, e1, e1) == tuple(-c for c in u)
    assert multiply(o, e3, e7) == e1
    assert multiply(o, e7, e3) == tuple(-c for c in e1)
    for x in e:
        assert multiply(o, u, x) == x
        assert multiply(o, x, u) == x


def test_multiply_zero_absorbs():
    o = catalog("octonions")
    z = o.zero_element()
    assert multiply(o, z, o.basis_element(3)) == z
    assert multiply(o, o.basis_element(3), z) == z


def test_multiply_is_bilinear_randomized():
    o = catalog("octonions")
    rng = random.Random(23)
    for _ in range(10):
        x = tuple(F(rng.randint(-2, 2)) for _ in range(8))
        xp = tuple(F(rng.randint(-2, 2)) for _ in range(8))
        y = tuple(F(rng.randint(-2, 2)) for _ in range(8))
        al = F(rng.randint(-3, 3), rng.randint(1, 3))
        be = F(rng.randint(-3, 3), rng.randint(1, 3))
        combo = tuple(al * p + be * q for p, q in zip(x, xp))
        lhs = multiply(o, combo, y)
        rhs = tuple(
            al * p + be * q for p, q in zip(multiply(o, x, y), multiply(o, xp, y))
        )
        assert lhs == rhs


def test_multiply_dimension_mismatch():
    o = catalog("octonions")
    with pytest.raises(ValueError):
        multiply(o, (F(1),), o.basis_element(0))


# --- associator -------------------------------------------------------------


def test_associator_vanishes_on_m2():
    m2 = catalog("m2")
    for i, j, k in itertools.product(range(4), repeat=3):
        assert associator(m2, m2.basis_element(i), m2.basis_element(j), m2.basis_element(k)) == m2.zero_element()


def test_octonion_associator_value():
    # (e1 e2) e3 - e1 (e2 e3) = e4 e3 - e1 e5 = -e6 - e6 = -2 e6, by the table
    o = catalog("octonions")
    expected = _coords(o, e6=-2)
    assert associator(o, o.basis_element(1), o.basis_element(2), o.basis_element(3)) == expected


def test_octonion_left_alternativity_pointwise():
    o = catalog("octonions")
    assert associator(o, o.basis_element(1), o.basis_element(1), o.basis_element(3)) == o.zero_element()
    rng = random.Random(31)
    for _ in range(10):
        x = tuple(F(rng.randint(-2, 2), rng.randint(1, 2)) for _ in range(8))
        y = tuple(F(rng.randint(-2, 2), rng.randint(1, 2)) for _ in range(8))
        assert associator(o, x, x, y) == o.zero_element()


# --- identity zoo -----------------------------------------------------------


def test_octonions_identity_zoo():
    o = catalog("octonions")
    for name in (
        "left-alternative",
        "right-alternative",
        "flexible",
        "moufang-1",
        "moufang-2",
        "moufang-3",
        "malcev-commutator",
        "jordan-plus",
    ):
        assert check_identity(o, name).holds, name


def test_octonions_fail_associativity_with_witness():
    o = catalog("octonions")
    report = check_identity(o, "associative")
    assert not report.holds
    # first failing triple in lexicographic order: indices (1, 2, 3)
    assert report.witness.indices == (1, 2, 3)
    assert report.witness.defect == _coords(o, e6=-2)
    assert reevaluate_witness(o, "associative", report.witness) == report.witness.defect


def test_alt4_algebras_alternative_not_associative():
    for name in ("alt4-a", "alt4-b"):
        a = catalog(name)
        assert check_identity(a, "left-alternative").holds
        assert check_identity(a, "right-alternative").holds
        report = check_identity(a, "associative")
        assert not report.holds
        assert reevaluate_witness(a, "associative", report.witness) == report.witness.defect


def test_alt4a_hand_associator():
    a = catalog("alt4-a")
    e = [a.basis_element(i) for i in range(4)]
    # as(e2,e3,e0) = (e2e3)e0 - e2(e3e0) = e1 e0 - e2 e3 = 0 - e1 = -e1
    assert associator(a, e[2], e[3], e[0]) == _coords(a, e1=-1)


def test_catalog_algebras_are_alternative():
    for name in ("octonions", "alt4-a", "alt4-b", "m2", "k-trivial", "zero-3"):
        a = catalog(name)
        assert check_identity(a, "left-alternative").holds, name
        assert check_identity(a, "right-alternative").holds, name


def test_m2_is_associative():
    assert check_identity(catalog("m2"), "associative").holds


def test_nonalt2_fails_left_alternative():
    a = nonalt2()
    report = check_identity(a, "left-alternative")
    assert not report.holds
    assert reevaluate_witness(a, "left-alternative", report.witness) == report.witness.defect


def test_zero_dim_algebra_everything_holds():
    z = catalog("zero-0")
    for name in IDENTITY_NAMES:
        assert check_identity(z, name).holds


def test_unknown_identity_name():
    with pytest.raises(ValueError):
        check_identity(catalog("m2"), "bogus")


# --- catalog ----------------------------------------------------------------


def test_catalog_m2_table():
    m2 = catalog("m2")
    e = [m2.basis_element(i) for i in range(4)]
    # matrix units e1=E11, e2=E12, e3=E21, e4=E22
    assert multiply(m2, e[1], e[2]) == e[0]
    assert multiply(m2, e[2], e[1]) == e[3]
    assert multiply(m2, e[0], e[1]) == e[1]
    assert multiply(m2, e[1], e[0]) == m2.zero_element()


def test_catalog_alt4a_table():
    a = catalog("alt4-a")
    e = [a.basis_element(i) for i in range(4)]
    assert multiply(a, e[2], e[3]) == e[1]
    assert multiply(a, e[3], e[2]) == _coords(a, e1=-1)
    assert multiply(a, e[0], e[0]) == e[0]


def test_catalog_zero():
    z = catalog("zero-3")
    for i in range(3):
        for j in range(3):
            assert multiply(z, z.basis_element(i), z.basis_element(j)) == z.zero_element()


def test_catalog_k_trivial():
    k = catalog("k-trivial")
    e = k.basis_element(0)
    assert multiply(k, e, e) == e


def test_catalog_unknown_name():
    with pytest.raises(UnknownAlgebraError):
        catalog("nope")


# --- subalgebras and Artin --------------------------------------------------


def _spans_same(a, basis, vectors):
    ech = _Echelon(a.dim)
    for v in basis:
        ech.add(v)
    d = ech.dim
    for v in vectors:
        if not ech.contains(v):
            return False
    return d == len(vectors)


def test_octonion_pair_closure_is_quaternions():
    o = catalog("octonions")
    basis, dim = subalgebra_closure(o, [o.basis_element(1), o.basis_element(2)])
    assert dim == 4
    expected = [o.basis_element(i) for i in (0, 1, 2, 4)]
    assert _spans_same(o, basis, expected)


def test_empty_generators_closure():
    o = catalog("octonions")
    basis, dim = subalgebra_closure(o, [])
    assert basis == [] and dim == 0


def test_full_basis_closure_m2():
    m2 = catalog("m2")
    _, dim = subalgebra_closure(m2, [m2.basis_element(i) for i in range(4)])
    assert dim == 4


def test_closure_is_multiplicatively_closed():
    o = catalog("octonions")
    basis, _ = subalgebra_closure(o, [o.basis_element(3), o.basis_element(5)])
    ech = _Echelon(o.dim)
    for v in basis:
        ech.add(v)
    for v in basis:
        for w in basis:
            assert ech.contains(multiply(o, v, w))


def test_artin_pairs_on_octonions():
    o = catalog("octonions")
    for i, j in itertools.combinations(range(8), 2):
        basis, _ = subalgebra_closure(o, [o.basis_element(i), o.basis_element(j)])
        assert restricted_associativity(o, basis).holds, (i, j)


def test_full_octonion_basis_not_associative():
    o = catalog("octonions")
    report = restricted_associativity(o, [o.basis_element(i) for i in range(8)])
    assert not report.holds


def test_restricted_associativity_zero_algebra():
    z = catalog("zero-2")
    assert restricted_associativity(z, [z.basis_element(0), z.basis_element(1)]).holds


def test_restricted_associativity_rejects_open_subspace():
    o = catalog("octonions")
    with pytest.raises(ValueError):
        restricted_associativity(o, [o.basis_element(1)])  # e1*e1 = -u escapes span(e1)
