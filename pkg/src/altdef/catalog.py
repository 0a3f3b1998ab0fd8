"""Built-in algebras: octonions, the two 4-dimensional alternative
non-associative algebras, 2x2 matrix units, zero algebras and the ground
field.
"""

from __future__ import annotations

from .algebra import Algebra, make_algebra
from .errors import UnknownAlgebraError

# Octonion table, row element times column element.  Basis order
# u, e1, ..., e7 with u the two-sided identity; every product is a signed
# basis element.
_OCT = [
    # u      e1     e2     e3     e4     e5     e6     e7
    ["+u", "+e1", "+e2", "+e3", "+e4", "+e5", "+e6", "+e7"],  # u
    ["+e1", "-u", "+e4", "+e7", "-e2", "+e6", "-e5", "-e3"],  # e1
    ["+e2", "-e4", "-u", "+e5", "+e1", "-e3", "+e7", "-e6"],  # e2
    ["+e3", "-e7", "-e5", "-u", "+e6", "+e2", "-e4", "+e1"],  # e3
    ["+e4", "+e2", "-e1", "-e6", "-u", "+e7", "+e3", "-e5"],  # e4
    ["+e5", "-e6", "+e3", "-e2", "-e7", "-u", "+e1", "+e4"],  # e5
    ["+e6", "+e5", "-e7", "+e4", "-e3", "-e1", "-u", "+e2"],  # e6
    ["+e7", "+e3", "+e6", "-e1", "+e5", "-e4", "-e2", "-u"],  # e7
]

_OCT_NAMES = ("u", "e1", "e2", "e3", "e4", "e5", "e6", "e7")


def _octonions() -> Algebra:
    index = {name: i for i, name in enumerate(_OCT_NAMES)}
    entries = {}
    for i, row in enumerate(_OCT):
        for j, cell in enumerate(row):
            sign = 1 if cell[0] == "+" else -1
            entries[(i, j)] = [(index[cell[1:]], sign)]
    return make_algebra("octonions", 8, _OCT_NAMES, entries)


def _alt4a() -> Algebra:
    # e0^2=e0, e0e1=e1, e2e0=e2, e2e3=e1, e3e0=e3, e3e2=-e1
    entries = {
        (0, 0): [(0, 1)],
        (0, 1): [(1, 1)],
        (2, 0): [(2, 1)],
        (2, 3): [(1, 1)],
        (3, 0): [(3, 1)],
        (3, 2): [(1, -1)],
    }
    return make_algebra("alt4-a", 4, ("e0", "e1", "e2", "e3"), entries)


def _alt4b() -> Algebra:
    # e0^2=e0, e0e2=e2, e0e3=e3, e1e0=e1, e2e3=e1, e3e2=-e1
    entries = {
        (0, 0): [(0, 1)],
        (0, 2): [(2, 1)],
        (0, 3): [(3, 1)],
        (1, 0): [(1, 1)],
        (2, 3): [(1, 1)],
        (3, 2): [(1, -1)],
    }
    return make_algebra("alt4-b", 4, ("e0", "e1", "e2", "e3"), entries)


# Matrix unit labels in the default basis convention e1..e4 = E11,E12,E21,E22.
MATRIX_UNITS = ("E11", "E12", "E21", "E22")


def matrix_unit_algebra(name, unit_order=MATRIX_UNITS) -> Algebra:
    """2x2 matrix algebra on the matrix units listed in ``unit_order``.

    E_ab E_cd = [b == c] E_ad; permuting the unit order yields the same
    algebra in a relabelled basis, which is what the basis-convention search
    in the cohomology module iterates over.
    """
    pos = {lab: i for i, lab in enumerate(unit_order)}
    entries = {}
    for lab1 in unit_order:
        a, b = lab1[1], lab1[2]
        for lab2 in unit_order:
            c, d = lab2[1], lab2[2]
            if b == c:
                entries[(pos[lab1], pos[lab2])] = [(pos["E" + a + d], 1)]
    return make_algebra(name, 4, ("e1", "e2", "e3", "e4"), entries)


def _zero(n: int) -> Algebra:
    return make_algebra(f"zero-{n}", n, tuple(f"e{i + 1}" for i in range(n)), {})


def _k_trivial() -> Algebra:
    # the ground field as a one-dimensional unital algebra
    return make_algebra("k-trivial", 1, ("e1",), {(0, 0): [(0, 1)]})


def catalog_names():
    return ("octonions", "alt4-a", "alt4-b", "m2", "k-trivial", "zero-<n>")


def catalog(name: str) -> Algebra:
    """Look up a built-in algebra; zero-<n> is a parametrized family."""
    if name == "octonions":
        return _octonions()
    if name == "alt4-a":
        return _alt4a()
    if name == "alt4-b":
        return _alt4b()
    if name == "m2":
        return matrix_unit_algebra("m2")
    if name == "k-trivial":
        return _k_trivial()
    if name.startswith("zero-"):
        suffix = name[len("zero-"):]
        if suffix.isdigit():
            return _zero(int(suffix))
    raise UnknownAlgebraError(f"unknown catalog algebra: {name!r}")
