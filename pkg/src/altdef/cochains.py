"""Multilinear cochains in coordinates and the differentials of the complex.

A p-cochain is a linear map from the p-th tensor power of the algebra to the
algebra, stored as the dense coordinate vector of length n^(p+1) whose entry
at (i_1, ..., i_p, k) is the e_k-coefficient of the value on the basis tensor
e_{i_1} x ... x e_{i_p}.  Coordinates are ordered lexicographically in
(i_1, ..., i_p, k) and are 0-based internally.

Differentials (n is the ambient dimension, products written by
juxtaposition):

  (d1 f)(x,y)    = f(x)y + x f(y) - f(xy)
  (d2 phi)       = B(phi) + B(phi) o sigma1, where
  B(phi)(x,y,z)  = phi(x,y)z - x phi(y,z) + phi(xy,z) - phi(x,yz)
  (d3 psi)       = the ten-term expansion written out in _delta3_scatter

B is the Hochschild coboundary in the sign convention used throughout this
package; it is the negative of the other common textbook convention, which
changes no kernel, image or cohomology group.  The degree-3 Hochschild
coboundary below follows the same convention.

All evaluation loops iterate over the nonzero entries of the input cochain
and scatter into a dense output, which keeps the matrix assembly for
differential_matrix linear in the number of structure constants.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import Algebra, multiply
from .linalg import ZERO, Matrix

LEFT_ALTERNATIVE = "left-alternative"
HOCHSCHILD = "hochschild"
THEORIES = (LEFT_ALTERNATIVE, HOCHSCHILD)


@dataclass(frozen=True)
class Cochain:
    degree: int
    dim: int
    coeffs: tuple

    def __post_init__(self):
        if self.degree not in (1, 2, 3, 4):
            raise ValueError("cochain degree must be 1..4")
        if len(self.coeffs) != self.dim ** (self.degree + 1):
            raise ValueError("coefficient vector length must be dim**(degree+1)")

    @classmethod
    def zero(cls, degree, dim):
        return cls(degree, dim, (ZERO,) * dim ** (degree + 1))

    @classmethod
    def from_coeffs(cls, degree, dim, coeffs):
        return cls(degree, dim, tuple(Fraction(c) for c in coeffs))

    @classmethod
    def from_entries(cls, degree, dim, entries):
        """Build from {(i_1, ..., i_p, k): value} with 0-based indices."""
        coeffs = [ZERO] * dim ** (degree + 1)
        for idx, value in entries.items():
            if len(idx) != degree + 1 or any(not 0 <= i < dim for i in idx):
                raise ValueError(f"bad coordinate index {idx}")
            flat = 0
            for i in idx:
                flat = flat * dim + i
            coeffs[flat] = Fraction(value)
        return cls(degree, dim, tuple(coeffs))

    def is_zero(self):
        return not any(self.coeffs)

    def nonzeros(self):
        """Yield ((i_1, ..., i_p, k), value) over nonzero coordinates."""
        n = self.dim
        p = self.degree
        for flat, value in enumerate(self.coeffs):
            if value:
                idx = []
                rest = flat
                for _ in range(p + 1):
                    idx.append(rest % n)
                    rest //= n
                yield tuple(reversed(idx)), value

    def value_at(self, *indices):
        """Coefficient at a (i_1, ..., i_p, k) tuple of 0-based indices."""
        if len(indices) != self.degree + 1:
            raise ValueError("index tuple arity does not match degree")
        flat = 0
        for i in indices:
            if not 0 <= i < self.dim:
                raise ValueError(f"index {i} out of range")
            flat = flat * self.dim + i
        return self.coeffs[flat]

    def evaluate(self, a: Algebra, *elements):
        """Pointwise value on elements; the multilinear extension of the table."""
        if len(elements) != self.degree:
            raise ValueError("argument count does not match degree")
        n = self.dim
        out = [ZERO] * n
        for idx, value in self.nonzeros():
            w = value
            for pos in range(self.degree):
                c = elements[pos][idx[pos]]
                if not c:
                    w = ZERO
                    break
                w = w * c
            if w:
                out[idx[-1]] += w
        return tuple(out)

    def __add__(self, other):
        if (self.degree, self.dim) != (other.degree, other.dim):
            raise ValueError("cochain shape mismatch")
        return Cochain(self.degree, self.dim, tuple(p + q for p, q in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        if (self.degree, self.dim) != (other.degree, other.dim):
            raise ValueError("cochain shape mismatch")
        return Cochain(self.degree, self.dim, tuple(p - q for p, q in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return Cochain(self.degree, self.dim, tuple(-c for c in self.coeffs))

    def scale(self, s):
        s = Fraction(s)
        return Cochain(self.degree, self.dim, tuple(s * c for c in self.coeffs))


@dataclass(frozen=True)
class DifferentialMatrix:
    degree: int
    theory: str
    matrix: Matrix


def multiplication_cochain(a: Algebra) -> Cochain:
    """The multiplication itself as a 2-cochain: entry (i,j,k) = c[i][j][k]."""
    n = a.dim
    coeffs = []
    for i in range(n):
        for j in range(n):
            coeffs.extend(a.constants[i][j])
    return Cochain(2, n, tuple(coeffs))


def identity_cochain(n: int) -> Cochain:
    """The identity map as a 1-cochain."""
    entries = {(i, i): 1 for i in range(n)}
    return Cochain.from_entries(1, n, entries) if n else Cochain(1, 0, ())


def sigma1(t: Cochain) -> Cochain:
    """Precomposition with the transposition of the first two tensor slots."""
    if t.degree != 3:
        raise ValueError("sigma1 applies to degree-3 cochains")
    n = t.dim
    out = [ZERO] * len(t.coeffs)
    n2, n3 = n * n, n * n * n
    for idx, value in t.nonzeros():
        a, b, c, k = idx
        out[b * n3 + a * n2 + c * n + k] = value
    return Cochain(3, n, tuple(out))


def sigma2(t: Cochain) -> Cochain:
    """Precomposition with the transposition of the last two tensor slots."""
    if t.degree != 3:
        raise ValueError("sigma2 applies to degree-3 cochains")
    n = t.dim
    out = [ZERO] * len(t.coeffs)
    n2, n3 = n * n, n * n * n
    for idx, value in t.nonzeros():
        a, b, c, k = idx
        out[a * n3 + c * n2 + b * n + k] = value
    return Cochain(3, n, tuple(out))


def _check_dims(a: Algebra, c: Cochain, degree):
    if c.dim != a.dim:
        raise ValueError("cochain dimension does not match the algebra")
    if c.degree != degree:
        raise ValueError(f"expected a degree-{degree} cochain")


def delta1(a: Algebra, f: Cochain) -> Cochain:
    """(d1 f)(x,y) = f(x)y + x f(y) - f(xy)."""
    _check_dims(a, f, 1)
    n = a.dim
    out = [ZERO] * n ** 3
    nz = a._prod_nz
    factors = a._factor_nz
    n2 = n * n
    for (i, j), v in f.nonzeros():
        # f(x) y with x = e_i: scatter over y = e_b through e_j e_b
        for b in range(n):
            for k, c in nz[j][b]:
                out[i * n2 + b * n + k] += v * c
        # x f(y) with y = e_i: scatter over x = e_a through e_a e_j
        for aa in range(n):
            for k, c in nz[aa][j]:
                out[aa * n2 + i * n + k] += v * c
        # -f(xy): every product with an e_i component feeds f(e_i) = v e_j
        for aa, b, c in factors[i]:
            out[aa * n2 + b * n + j] -= c * v
    return Cochain(2, n, tuple(out))


def _bracket2_scatter(a: Algebra, phi: Cochain):
    """Dense coordinates of B(phi)(x,y,z) = phi(x,y)z - x phi(y,z) + phi(xy,z) - phi(x,yz)."""
    n = a.dim
    out = [ZERO] * n ** 4
    nz = a._prod_nz
    factors = a._factor_nz
    n2, n3 = n * n, n * n * n
    for (i, j, p), v in phi.nonzeros():
        # phi(x,y) z at (i, j, b): product e_p e_b
        for b in range(n):
            for k, c in nz[p][b]:
                out[i * n3 + j * n2 + b * n + k] += v * c
        # -x phi(y,z) at (a, i, j): product e_a e_p
        for aa in range(n):
            for k, c in nz[aa][p]:
                out[aa * n3 + i * n2 + j * n + k] -= v * c
        # +phi(xy, z): tuples (a, b, j) with e_a e_b having an e_i component
        for aa, b, c in factors[i]:
            out[aa * n3 + b * n2 + j * n + p] += c * v
        # -phi(x, yz): tuples (i, b, cc) with e_b e_cc having an e_j component
        for b, cc, c in factors[j]:
            out[i * n3 + b * n2 + cc * n + p] -= c * v
    return out


def hochschild_delta2(a: Algebra, phi: Cochain) -> Cochain:
    """Degree-2 Hochschild coboundary in this package's sign convention."""
    _check_dims(a, phi, 2)
    return Cochain(3, a.dim, tuple(_bracket2_scatter(a, phi)))


def delta2(a: Algebra, phi: Cochain) -> Cochain:
    """Left alternative coboundary: the Hochschild coboundary symmetrized in
    the first two slots, (d2 phi)(x,y,z) = B(phi)(x,y,z) + B(phi)(y,x,z)."""
    _check_dims(a, phi, 2)
    n = a.dim
    b = _bracket2_scatter(a, phi)
    n2, n3 = n * n, n * n * n
    out = [ZERO] * n ** 4
    for x in range(n):
        for y in range(n):
            base_xy = x * n3 + y * n2
            base_yx = y * n3 + x * n2
            for rest in range(n2):
                out[base_xy + rest] = b[base_xy + rest] + b[base_yx + rest]
    return Cochain(3, n, tuple(out))


def delta3(a: Algebra, psi: Cochain) -> Cochain:
    """Degree-3 left alternative coboundary, the ten-term expansion

      (d3 psi)(x1,x2,x3,x4) =
          x1 psi(x2,x3,x4) - x1 psi(x3,x2,x4)
        + psi(x1,x2,x3) x4 - psi(x2,x1,x3) x4
        - psi(x1 x2, x3, x4) - psi(x2 x3, x1, x4)
        + psi(x1, x2 x3, x4) + psi(x3, x1 x2, x4)
        - psi(x1, x2, x3 x4) + psi(x2, x1, x3 x4)
    """
    _check_dims(a, psi, 3)
    n = a.dim
    out = [ZERO] * n ** 5
    nz = a._prod_nz
    factors = a._factor_nz
    n2, n3, n4 = n * n, n ** 3, n ** 4
    for (p, q, r, s), v in psi.nonzeros():
        # x1 psi(x2,x3,x4) at (a,p,q,r) and -x1 psi(x3,x2,x4) at (a,q,p,r)
        for aa in range(n):
            for k, c in nz[aa][s]:
                w = v * c
                out[aa * n4 + p * n3 + q * n2 + r * n + k] += w
                out[aa * n4 + q * n3 + p * n2 + r * n + k] -= w
        # psi(x1,x2,x3) x4 at (p,q,r,d) and -psi(x2,x1,x3) x4 at (q,p,r,d)
        for d in range(n):
            for k, c in nz[s][d]:
                w = v * c
                out[p * n4 + q * n3 + r * n2 + d * n + k] += w
                out[q * n4 + p * n3 + r * n2 + d * n + k] -= w
        # -psi(x1 x2, x3, x4) at (a,b,q,r) and -psi(x2 x3, x1, x4) at (q,a,b,r),
        # both through products e_a e_b with an e_p component
        for aa, b, c in factors[p]:
            w = c * v
            out[aa * n4 + b * n3 + q * n2 + r * n + s] -= w
            out[q * n4 + aa * n3 + b * n2 + r * n + s] -= w
        # +psi(x1, x2 x3, x4) at (p,a,b,r) and +psi(x3, x1 x2, x4) at (a,b,p,r),
        # both through products e_a e_b with an e_q component
        for aa, b, c in factors[q]:
            w = c * v
            out[p * n4 + aa * n3 + b * n2 + r * n + s] += w
            out[aa * n4 + b * n3 + p * n2 + r * n + s] += w
        # -psi(x1, x2, x3 x4) at (p,q,c,d) and +psi(x2, x1, x3 x4) at (q,p,c,d)
        for cc, d, c in factors[r]:
            w = c * v
            out[p * n4 + q * n3 + cc * n2 + d * n + s] -= w
            out[q * n4 + p * n3 + cc * n2 + d * n + s] += w
    return Cochain(4, n, tuple(out))


def hochschild_delta3(a: Algebra, psi: Cochain) -> Cochain:
    """Degree-3 Hochschild coboundary, same sign convention as
    hochschild_delta2:

      -x1 psi(x2,x3,x4) + psi(x1 x2, x3, x4) - psi(x1, x2 x3, x4)
      + psi(x1, x2, x3 x4) - psi(x1, x2, x3) x4
    """
    _check_dims(a, psi, 3)
    n = a.dim
    out = [ZERO] * n ** 5
    nz = a._prod_nz
    factors = a._factor_nz
    n2, n3, n4 = n * n, n ** 3, n ** 4
    for (p, q, r, s), v in psi.nonzeros():
        for aa in range(n):
            for k, c in nz[aa][s]:
                out[aa * n4 + p * n3 + q * n2 + r * n + k] -= v * c
        for d in range(n):
            for k, c in nz[s][d]:
                out[p * n4 + q * n3 + r * n2 + d * n + k] -= v * c
        for aa, b, c in factors[p]:
            out[aa * n4 + b * n3 + q * n2 + r * n + s] += c * v
        for aa, b, c in factors[q]:
            out[p * n4 + aa * n3 + b * n2 + r * n + s] -= c * v
        for cc, d, c in factors[r]:
            out[p * n4 + q * n3 + cc * n2 + d * n + s] += c * v
    return Cochain(4, n, tuple(out))


def apply_delta(a: Algebra, c: Cochain, theory=LEFT_ALTERNATIVE) -> Cochain:
    """The coboundary of c in the requested theory (degree read from c)."""
    if theory not in THEORIES:
        raise ValueError(f"unknown theory: {theory!r}")
    if c.degree == 1:
        return delta1(a, c)
    if c.degree == 2:
        return delta2(a, c) if theory == LEFT_ALTERNATIVE else hochschild_delta2(a, c)
    if c.degree == 3:
        return delta3(a, c) if theory == LEFT_ALTERNATIVE else hochschild_delta3(a, c)
    raise ValueError(f"no differential is defined on degree {c.degree}")


def differential_matrix(a: Algebra, degree: int, theory=LEFT_ALTERNATIVE) -> DifferentialMatrix:
    """Matrix of the degree-p differential, n^(p+2) rows by n^(p+1) columns.

    Built column by column from the coordinate basis cochains; column order
    matches the lexicographic coordinate order, so M * coords(phi) equals
    coords(delta phi) for every cochain phi.
    """
    if degree not in (1, 2, 3):
        raise ValueError("differential matrices exist for degrees 1..3")
    if theory not in THEORIES:
        raise ValueError(f"unknown theory: {theory!r}")
    n = a.dim
    in_dim = n ** (degree + 1)
    out_dim = n ** (degree + 2)
    columns = []
    zero = (ZERO,) * in_dim
    for col in range(in_dim):
        basis = Cochain(degree, n, zero[:col] + (Fraction(1),) + zero[col + 1 :])
        columns.append(apply_delta(a, basis, theory).coeffs)
    data = [[columns[j][i] for j in range(in_dim)] for i in range(out_dim)]
    return DifferentialMatrix(degree, theory, Matrix(out_dim, in_dim, data))


def inner_translation_matrix(a: Algebra) -> Matrix:
    """Matrix of a -> [a, .], the n^2 x n map whose image spans the inner
    translations; for associative algebras these are the inner derivations
    and the map is the degree-0 coboundary of the complex."""
    n = a.dim
    m = Matrix.zero(n * n, n)
    for col in range(n):
        for i in range(n):
            for k in range(n):
                val = a.constants[col][i][k] - a.constants[i][col][k]
                if val:
                    m.data[i * n + k][col] = val
    return m


def evaluate_pointwise_delta(a: Algebra, c: Cochain, elements, theory=LEFT_ALTERNATIVE):
    """Value of (delta c) on a tuple of elements, for cross-checking the
    coordinate implementations against direct evaluation."""
    d = apply_delta(a, c, theory)
    return d.evaluate(a, *elements)
