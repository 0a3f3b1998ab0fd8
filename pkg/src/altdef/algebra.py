"""Finite-dimensional algebras given by structure constants.

An algebra is the pair (A, mu) with mu a bilinear multiplication encoded by
the rational tensor c[i][j][k]: e_i e_j = sum_k c[i][j][k] e_k.  Elements are
plain tuples of Fractions in the chosen basis.  Everything here is immutable
and all operations are pure functions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .linalg import ZERO, _Echelon

Element = tuple  # length-n tuple of Fraction

_ONE = Fraction(1)
_NEG_ONE = Fraction(-1)


@dataclass(frozen=True, eq=True)
class Algebra:
    name: str
    dim: int
    basis_names: tuple
    constants: tuple  # constants[i][j][k] = Fraction

    def __post_init__(self):
        n = self.dim
        if len(self.basis_names) != n:
            raise ValueError("basis_names length does not match dim")
        if len(set(self.basis_names)) != n:
            raise ValueError("basis_names must be pairwise distinct")
        if len(self.constants) != n or any(
            len(plane) != n or any(len(row) != n for row in plane) for plane in self.constants
        ):
            raise ValueError("structure constant tensor must be dim x dim x dim")
        # Derived lookup tables and the hash are precomputed once; hashing the
        # full tensor on every cache lookup would dominate the hot loops.
        prod = tuple(
            tuple(
                tuple((k, self.constants[i][j][k]) for k in range(n) if self.constants[i][j][k])
                for j in range(n)
            )
            for i in range(n)
        )
        factors = [[] for _ in range(n)]
        for i in range(n):
            for j in range(n):
                for k, c in prod[i][j]:
                    factors[k].append((i, j, c))
        object.__setattr__(self, "_prod_nz", prod)
        object.__setattr__(self, "_factor_nz", tuple(tuple(p) for p in factors))
        object.__setattr__(
            self, "_hash", hash((self.name, self.dim, self.basis_names, self.constants))
        )

    def __hash__(self):
        return self._hash

    def zero_element(self) -> Element:
        return (ZERO,) * self.dim

    def basis_element(self, i) -> Element:
        if not 0 <= i < self.dim:
            raise ValueError(f"basis index {i} out of range for dim {self.dim}")
        return tuple(_ONE if j == i else ZERO for j in range(self.dim))

    def element(self, coords) -> Element:
        coords = tuple(Fraction(x) for x in coords)
        if len(coords) != self.dim:
            raise ValueError("coordinate vector length does not match dim")
        return coords


def _build_constants(dim, entries):
    """Tensor from a {(i, j): [(k, coeff), ...]} table; unlisted products are 0."""
    tensor = [[[ZERO] * dim for _ in range(dim)] for _ in range(dim)]
    for (i, j), terms in entries.items():
        for k, coeff in terms:
            tensor[i][j][k] = Fraction(coeff)
    return tuple(tuple(tuple(row) for row in plane) for plane in tensor)


def make_algebra(name, dim, basis_names, entries) -> Algebra:
    return Algebra(name, dim, tuple(basis_names), _build_constants(dim, entries))


def _product_index(a: Algebra):
    """nz[i][j] = tuple of (k, c[i][j][k]) over nonzero entries."""
    return a._prod_nz


def _factor_index(a: Algebra):
    """pairs[p] = tuple of (i, j, c[i][j][p]) over products with an e_p component."""
    return a._factor_nz


def multiply(a: Algebra, x: Element, y: Element) -> Element:
    """Bilinear extension of the structure constant table."""
    n = a.dim
    if len(x) != n or len(y) != n:
        raise ValueError("element length does not match algebra dimension")
    out = [ZERO] * n
    nz = a._prod_nz
    xs = [(i, v) for i, v in enumerate(x) if v]
    ys = [(j, v) for j, v in enumerate(y) if v]
    for i, xi in xs:
        row = nz[i]
        for j, yj in ys:
            cell = row[j]
            if not cell:
                continue
            s = xi * yj
            for k, c in cell:
                if c == _ONE:
                    out[k] += s
                elif c == _NEG_ONE:
                    out[k] -= s
                else:
                    out[k] += s * c
    return tuple(out)


def associator(a: Algebra, x: Element, y: Element, z: Element) -> Element:
    """as(x,y,z) = (xy)z - x(yz)."""
    left = multiply(a, multiply(a, x, y), z)
    right = multiply(a, x, multiply(a, y, z))
    return tuple(p - q for p, q in zip(left, right))


def _add(x, y):
    return tuple(p + q for p, q in zip(x, y))


def _sub(x, y):
    return tuple(p - q for p, q in zip(x, y))


def _is_zero(x):
    return all(not c for c in x)


@dataclass(frozen=True)
class Witness:
    indices: tuple  # 0-based basis indices, in the tuple order of the checked form
    defect: Element


@dataclass(frozen=True)
class IdentityReport:
    identity: str
    holds: bool
    witness: Witness | None

    def __post_init__(self):
        if self.holds != (self.witness is None):
            raise ValueError("witness must be present exactly when the identity fails")


# Identities with repeated variables are checked through their full
# multilinearizations, which over characteristic 0 vanish if and only if the
# original identity does.  Each defect function below documents the expanded
# form it evaluates; `arity` is the number of basis indices per check.


def _d_associative(a, e):
    return lambda t: associator(a, e[t[0]], e[t[1]], e[t[2]])


def _d_left_alternative(a, e):
    # x(yz) - (xy)z + y(xz) - (yx)z, the linearization of as(x,x,y) = 0
    def defect(t):
        x, y, z = e[t[0]], e[t[1]], e[t[2]]
        return _sub(
            _add(multiply(a, x, multiply(a, y, z)), multiply(a, y, multiply(a, x, z))),
            _add(multiply(a, multiply(a, x, y), z), multiply(a, multiply(a, y, x), z)),
        )

    return defect


def _d_right_alternative(a, e):
    # x(yz) - (xy)z + x(zy) - (xz)y, the linearization of as(x,y,y) = 0
    def defect(t):
        x, y, z = e[t[0]], e[t[1]], e[t[2]]
        return _sub(
            _add(multiply(a, x, multiply(a, y, z)), multiply(a, x, multiply(a, z, y))),
            _add(multiply(a, multiply(a, x, y), z), multiply(a, multiply(a, x, z), y)),
        )

    return defect


def _d_flexible(a, e):
    # as(x,y,z) + as(z,y,x), the linearization of as(x,y,x) = 0
    def defect(t):
        x, y, z = e[t[0]], e[t[1]], e[t[2]]
        return _add(associator(a, x, y, z), associator(a, z, y, x))

    return defect


def _d_moufang1(a, e):
    # as(x,y,z.x) = x.as(y,z,x), polarized in the repeated x
    def defect(t):
        x1, x2, y, z = e[t[0]], e[t[1]], e[t[2]], e[t[3]]
        lhs = _add(
            associator(a, x1, y, multiply(a, z, x2)),
            associator(a, x2, y, multiply(a, z, x1)),
        )
        rhs = _add(
            multiply(a, x1, associator(a, y, z, x2)),
            multiply(a, x2, associator(a, y, z, x1)),
        )
        return _sub(lhs, rhs)

    return defect


def _d_moufang2(a, e):
    # as(x.y,z,x) = as(x,y,z).x, polarized in the repeated x
    def defect(t):
        x1, x2, y, z = e[t[0]], e[t[1]], e[t[2]], e[t[3]]
        lhs = _add(
            associator(a, multiply(a, x1, y), z, x2),
            associator(a, multiply(a, x2, y), z, x1),
        )
        rhs = _add(
            multiply(a, associator(a, x1, y, z), x2),
            multiply(a, associator(a, x2, y, z), x1),
        )
        return _sub(lhs, rhs)

    return defect


def _d_moufang3(a, e):
    # as(y,x^2,z) = x.as(y,x,z) + as(y,x,z).x, polarized in the repeated x
    def defect(t):
        x1, x2, y, z = e[t[0]], e[t[1]], e[t[2]], e[t[3]]
        lhs = _add(
            associator(a, y, multiply(a, x1, x2), z),
            associator(a, y, multiply(a, x2, x1), z),
        )
        a1 = associator(a, y, x1, z)
        a2 = associator(a, y, x2, z)
        rhs = _add(
            _add(multiply(a, x1, a2), multiply(a, a2, x1)),
            _add(multiply(a, x2, a1), multiply(a, a1, x2)),
        )
        return _sub(lhs, rhs)

    return defect


def _d_malcev(a, e):
    # [J(x,y,z),x] = J(x,y,[x,z]) for the commutator bracket, polarized in x
    def br(x, y):
        return _sub(multiply(a, x, y), multiply(a, y, x))

    def jac(x, y, z):
        return _add(_add(br(x, br(y, z)), br(y, br(z, x))), br(z, br(x, y)))

    def defect(t):
        x1, x2, y, z = e[t[0]], e[t[1]], e[t[2]], e[t[3]]
        lhs = _add(br(jac(x1, y, z), x2), br(jac(x2, y, z), x1))
        rhs = _add(jac(x1, y, br(x2, z)), jac(x2, y, br(x1, z)))
        return _sub(lhs, rhs)

    return defect


def _d_jordan(a, e):
    # as+(x^2,y,x) = 0 for mu+(x,y) = xy + yx; full polarization of the cubic x
    def plus(x, y):
        return _add(multiply(a, x, y), multiply(a, y, x))

    def asp(x, y, z):
        return _sub(plus(plus(x, y), z), plus(x, plus(y, z)))

    def defect(t):
        x1, x2, x3, y = e[t[0]], e[t[1]], e[t[2]], e[t[3]]
        return _add(
            _add(asp(plus(x1, x2), y, x3), asp(plus(x1, x3), y, x2)),
            asp(plus(x2, x3), y, x1),
        )

    return defect


# (arity, defect maker, count of leading slots the form is symmetric in)
_IDENTITIES = {
    "associative": (3, _d_associative, 1),
    "left-alternative": (3, _d_left_alternative, 1),
    "right-alternative": (3, _d_right_alternative, 1),
    "flexible": (3, _d_flexible, 1),
    "moufang-1": (4, _d_moufang1, 2),
    "moufang-2": (4, _d_moufang2, 2),
    "moufang-3": (4, _d_moufang3, 2),
    "malcev-commutator": (4, _d_malcev, 2),
    "jordan-plus": (4, _d_jordan, 3),
}

IDENTITY_NAMES = tuple(_IDENTITIES)


def check_identity(a: Algebra, which: str) -> IdentityReport:
    """Brute-force check of a named identity over all basis index tuples.

    The first failing tuple in lexicographic order becomes the witness.
    Polarized forms are symmetric in their polarized slots, so tuples whose
    leading symmetric slots are out of order can be skipped: any failure
    there is preceded lexicographically by its sorted permutation.
    """
    if which not in _IDENTITIES:
        raise ValueError(f"unknown identity name: {which!r}")
    arity, maker, sym = _IDENTITIES[which]
    basis = [a.basis_element(i) for i in range(a.dim)]
    defect = maker(a, basis)
    idx = [0] * arity
    n = a.dim
    if n == 0:
        return IdentityReport(which, True, None)
    while True:
        if all(idx[s] <= idx[s + 1] for s in range(sym - 1)):
            d = defect(tuple(idx))
            if not _is_zero(d):
                return IdentityReport(which, False, Witness(tuple(idx), d))
        pos = arity - 1
        while pos >= 0:
            idx[pos] += 1
            if idx[pos] < n:
                break
            idx[pos] = 0
            pos -= 1
        if pos < 0:
            return IdentityReport(which, True, None)


def reevaluate_witness(a: Algebra, which: str, witness: Witness) -> Element:
    """Evaluate the identity defect at a witness tuple (for report validation)."""
    arity, maker, _sym = _IDENTITIES[which]
    if len(witness.indices) != arity:
        raise ValueError("witness arity does not match the identity")
    basis = [a.basis_element(i) for i in range(a.dim)]
    return maker(a, basis)(witness.indices)


def subalgebra_closure(a: Algebra, generators):
    """Basis of the smallest multiplicatively closed subspace containing the generators.

    Span saturation: keep multiplying basis vectors pairwise and adjoining
    products until the span stops growing.  The returned vectors are the
    reduced echelon basis, so the output is deterministic.
    """
    ech = _Echelon(a.dim)
    for g in generators:
        if len(g) != a.dim:
            raise ValueError("generator length does not match algebra dimension")
        ech.add(g)
    while True:
        current = [tuple(row) for _, row in ech.rows]
        grew = False
        for v in current:
            for w in current:
                if ech.add(multiply(a, v, w)):
                    grew = True
        if not grew:
            break
    basis = [tuple(row) for _, row in ech.rows]
    return basis, len(basis)


def restricted_associativity(a: Algebra, basis) -> IdentityReport:
    """Associativity checked on all triples from the given basis of a closed subspace.

    Witness indices refer to positions in the supplied basis list.
    """
    ech = _Echelon(a.dim)
    for v in basis:
        ech.add(v)
    for v in basis:
        for w in basis:
            if not ech.contains(multiply(a, v, w)):
                raise ValueError("basis does not span a multiplicatively closed subspace")
    for i, x in enumerate(basis):
        for j, y in enumerate(basis):
            for k, z in enumerate(basis):
                d = associator(a, x, y, z)
                if not _is_zero(d):
                    return IdentityReport("associative", False, Witness((i, j, k), d))
    return IdentityReport("associative", True, None)
