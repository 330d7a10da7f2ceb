"""Unitary families from commutative subfields, and their diversity.

A commutative subfield M = K[g] of the algebra that is stable under the
involution turns every nonzero u in M into a unitary element
x = u * involution(u)^(-1) (the quotient construction behind norm-1
elements of cyclic extensions).  Enumerating u over a rational coordinate
box and deduplicating yields reproducible codebooks of certified unitary
3x3 matrices; since the algebra is division, pairwise differences have
nonzero determinant and the family is fully diverse.

The division property itself is only evidenced here: a bounded exhaustive
search confirms that gamma and gamma^2 are not norms within the searched
box.  Absence of a witness is reported as evidence, never as proof.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import islice, product
from typing import Iterator, Optional, Sequence

import numpy as np

from .algebra import (
    AlgebraSpec,
    AlgElem,
    STANDARD_ALGEBRA,
    char_poly_rational,
    express_in_power_basis,
    involution,
    inverse,
    matrix_embed,
    reduced_norm,
)
from .fields import KElem, LElem, THETA, ZETA3
from .polynomials import Polynomial, discriminant_cubic, has_rational_root
from .rationals import as_rat, factor_small_int


@dataclass(frozen=True)
class Box:
    """Coordinate box: canonical numerators in [-B, B], denominators in [1, D]."""

    numerator_bound: int = 3
    denominator_bound: int = 2

    def __post_init__(self):
        if self.numerator_bound < 1 or self.denominator_bound < 1:
            raise ValueError("box bounds must be at least 1")

    def values(self) -> list[Fraction]:
        """Allowed coordinate values, smallest height first, then by magnitude."""
        vals = set()
        for q in range(1, self.denominator_bound + 1):
            for p in range(-self.numerator_bound, self.numerator_bound + 1):
                vals.add(Fraction(p, q))
        return sorted(vals, key=lambda f: (_height(f), abs(f), f < 0))


def _height(f: Fraction) -> int:
    if f == 0:
        return 0
    return max(abs(f.numerator), f.denominator)


def iter_box_tuples(box: Box, n: int = 6) -> Iterator[tuple[Fraction, ...]]:
    """All nonzero n-tuples over the box, stratified by height.

    Tuples of height H come out before any of height H+1; within a stratum
    the order is lexicographic with the first coordinate varying fastest.
    """
    values = box.values()
    heights = sorted({_height(v) for v in values})
    for h in heights:
        if h == 0:
            continue
        allowed = [v for v in values if _height(v) <= h]
        for rev in product(allowed, repeat=n):
            tup = rev[::-1]
            if max(_height(v) for v in tup) == h:
                yield tup


@dataclass(frozen=True)
class SubfieldSpec:
    """A commutative, involution-stable cubic subfield K[g] of the algebra.

    Elements are c0 + c1*g + c2*g^2 with K coefficients; enumeration runs
    over the six rational parts of (c0, c1, c2).
    """

    kind: str
    k: Optional[int]
    generator: AlgElem
    label: str
    basis: tuple[AlgElem, AlgElem, AlgElem] = field(init=False)

    def __post_init__(self):
        g = self.generator
        if g.is_in_k():
            raise ValueError("generator must lie outside the center K")
        object.__setattr__(self, "basis", (g.spec.one(), g, g * g))
        if express_in_power_basis(involution(g), g) is None:
            raise ValueError(
                f"subfield {self.label} is not stable under the involution"
            )

    def element(self, coords: Sequence[Fraction]) -> AlgElem:
        ks = [
            KElem(as_rat(coords[0]), as_rat(coords[1])),
            KElem(as_rat(coords[2]), as_rat(coords[3])),
            KElem(as_rat(coords[4]), as_rat(coords[5])),
        ]
        acc = self.basis[0].spec.zero()
        for c, b in zip(ks, self.basis):
            acc = acc + b.scale(c)
        return acc


def nu_generator(k: int, spec: AlgebraSpec = STANDARD_ALGEBRA) -> AlgElem:
    """The involution-fixed generator k*theta + (1+zeta3)*E - E^2."""
    return spec.element(LElem(0, k, 0), LElem(KElem(1, 1)), LElem(KElem(-1)))


def subfield(kind: str, k: Optional[int] = None, spec: AlgebraSpec = STANDARD_ALGEBRA) -> SubfieldSpec:
    """Build one of the named subfields: "zeta9", "nu" (with k), or "L"."""
    if kind == "zeta9":
        if spec.gamma != ZETA3:
            raise ValueError("the zeta9 subfield requires gamma = zeta3")
        return SubfieldSpec("zeta9", None, spec.gen(), "Q(zeta9)")
    if kind == "nu":
        if k is None or k < 1:
            raise ValueError("the nu subfield needs a positive integer k")
        return SubfieldSpec("nu", k, nu_generator(k, spec), f"K(nu_{k})")
    if kind == "L":
        return SubfieldSpec("L", None, spec.from_l(THETA), "L")
    raise ValueError(f"unknown subfield kind {kind!r}")


def enumerate_subfield(sub: SubfieldSpec, box: Box) -> Iterator[AlgElem]:
    """All nonzero subfield elements with coordinates inside the box."""
    for tup in iter_box_tuples(box, 6):
        yield sub.element(tup)


def hilbert90_unit(u: AlgElem) -> AlgElem:
    """The unitary element u * involution(u)^(-1).

    Requires u nonzero and u commuting with involution(u); the exact
    postcondition x * involution(x) = 1 is asserted.
    """
    if u.is_zero():
        raise ValueError("u must be nonzero")
    au = involution(u)
    if u * au != au * u:
        raise ValueError("precondition failed: u does not commute with involution(u)")
    x = u * inverse(au)
    assert x * involution(x) == x.spec.one(), "unit postcondition failed"
    return x


def unitary_matrix_numeric(x: AlgElem) -> list[list[complex]]:
    """Complex 3x3 rendering of a certified unitary element (embedding 0).

    The exact unitarity of x is checked, and the numeric matrix must
    satisfy max|M M^dagger - I| <= 1e-10 (anything else is an embedding bug).
    """
    if x * involution(x) != x.spec.one():
        raise ValueError("element is not unitary")
    m = np.array(matrix_embed(x).to_complex(0), dtype=complex)
    defect = np.max(np.abs(m @ m.conj().T - np.eye(3)))
    assert defect <= 1e-10, f"numeric unitarity defect {defect}"
    return [[complex(v) for v in row] for row in m]


@dataclass
class Codebook:
    """An ordered family of certified unitary elements with numeric renderings."""

    subfield_spec: SubfieldSpec
    box: Box
    requested: int
    elements: list[AlgElem]
    matrices: list[list[list[complex]]]
    complete: bool
    precondition_failures: int
    candidates_scanned: int

    def __len__(self):
        return len(self.elements)


def generate_codebook(sub: SubfieldSpec, box: Box, size: int) -> Codebook:
    """Map the enumeration through the unit construction, dedupe, truncate.

    Candidates failing the commuting precondition are skipped and counted.
    If the box runs out before `size` distinct units are found, the partial
    codebook is returned with complete=False.
    """
    if size < 1:
        raise ValueError("size must be at least 1")
    seen: dict[AlgElem, None] = {}
    failures = 0
    scanned = 0
    for u in enumerate_subfield(sub, box):
        scanned += 1
        au = involution(u)
        if u * au != au * u:
            failures += 1
            continue
        x = u * inverse(au)
        assert x * involution(x) == x.spec.one()
        if x not in seen:
            seen[x] = None
            if len(seen) == size:
                break
    elements = list(seen)
    return Codebook(
        subfield_spec=sub,
        box=box,
        requested=size,
        elements=elements,
        matrices=[unitary_matrix_numeric(x) for x in elements],
        complete=len(elements) == size,
        precondition_failures=failures,
        candidates_scanned=scanned,
    )


@dataclass(frozen=True)
class DiversityReport:
    """Minimum-determinant summary of a unitary family."""

    zeta: float
    pair: tuple[int, int]
    min_abs_det: float
    exact_nonzero: bool


def pairwise_determinants(elements: Sequence[AlgElem]) -> Iterator[tuple[int, int, KElem]]:
    """Exact determinants of embedded pairwise differences (elements of K)."""
    for i in range(len(elements)):
        for j in range(i + 1, len(elements)):
            yield i, j, reduced_norm(elements[i] - elements[j])


def min_det_report(elements: Sequence[AlgElem]) -> DiversityReport:
    """Exact zero/nonzero decisions with a numeric minimum modulus."""
    if len(elements) < 2:
        raise ValueError("need at least two elements")
    best: Optional[tuple[float, tuple[int, int]]] = None
    all_nonzero = True
    for i, j, det in pairwise_determinants(elements):
        if det.is_zero():
            all_nonzero = False
            mod = 0.0
        else:
            mod = abs(det.to_complex())
        if best is None or mod < best[0]:
            best = (mod, (i, j))
    assert best is not None
    zeta = 0.5 * best[0] ** (1.0 / 3.0)
    return DiversityReport(
        zeta=zeta, pair=best[1], min_abs_det=best[0], exact_nonzero=all_nonzero
    )


def diversity_product(cb: Codebook) -> DiversityReport:
    """Half the cube root of the minimal pairwise |det|, decided exactly."""
    return min_det_report(cb.elements)


# ---------------------------------------------------------------------------
# Bounded non-norm evidence
# ---------------------------------------------------------------------------


def norm_witness_search(
    target: KElem,
    box: Box = Box(3, 2),
    method: str = "auto",
) -> Optional[LElem]:
    """Exhaustively search the box for u in L with norm(u) = target.

    Returns the first witness in enumeration order, or None if the whole
    box is exhausted.  A witness for gamma or gamma^2 would disprove the
    division property; finding none is evidence only, not proof.

    method: "exact" walks candidates with exact arithmetic; "filtered"
    vectorizes a complex prefilter (tolerance 1e-6, orders of magnitude
    above float error, so no true witness can be rejected) and verifies
    survivors exactly; "auto" picks by box size.
    """
    if method == "auto":
        count = len(box.values()) ** 6
        method = "filtered" if count > 5_000 else "exact"
    if method == "exact":
        return _witness_exact(target, box)
    if method == "filtered":
        return _witness_filtered(target, box)
    raise ValueError(f"unknown method {method!r}")


def _witness_exact(target: KElem, box: Box) -> Optional[LElem]:
    for tup in iter_box_tuples(box, 6):
        u = LElem.from_six_tuple(tup)
        if u.norm_to_k() == target:
            return u
    return None


def _witness_filtered(target: KElem, box: Box, chunk: int = 200_000) -> Optional[LElem]:
    from .fields import THETA_EMBEDDINGS, ZETA3_COMPLEX

    tgt = target.to_complex()
    stream = iter_box_tuples(box, 6)
    while True:
        tuples = list(islice(stream, chunk))
        if not tuples:
            return None
        arr = np.array(tuples, dtype=float)
        norm = np.ones(len(tuples), dtype=complex)
        for t in THETA_EMBEDDINGS:
            re = arr[:, 0] + arr[:, 2] * t + arr[:, 4] * (t * t)
            im = arr[:, 1] + arr[:, 3] * t + arr[:, 5] * (t * t)
            norm *= re + ZETA3_COMPLEX * im
        hits = np.nonzero(np.abs(norm - tgt) < 1e-6)[0]
        for idx in hits:
            u = LElem.from_six_tuple(tuples[int(idx)])
            if u.norm_to_k() == target:
                return u


# ---------------------------------------------------------------------------
# The generator family table
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TableRow:
    k: int
    generator: str
    poly: Polynomial
    discriminant: int
    factors: tuple[tuple[int, int], ...]


def reduce_generator_poly(
    chi: Polynomial,
    coeff_bound: int = 45,
    quad_bound: int = 6,
    denom_bound: int = 9,
) -> Polynomial:
    """Canonical small generator polynomial for the cubic field of chi.

    Searches algebraic integers mu = (a + b*nu + c*nu^2)/d over an integer
    coordinate box (nu a root of chi) and returns the characteristic
    polynomial of the canonical minimum: least trace form T2 = p^2 - 2q,
    then smallest coordinates (|c|, |b|, |a|, d), then positive orientation
    (first nonzero of b, c, a positive).  Deterministic; matches reduced
    generator tables for fields of this size.
    """
    ints = []
    for c in chi.coeffs:
        f = Fraction(c)
        if f.denominator != 1:
            raise ValueError("expected an integral monic cubic")
        ints.append(int(f))
    if len(ints) != 4 or ints[3] != 1:
        raise ValueError("expected an integral monic cubic")
    r0, q0, p0 = ints[0], ints[1], ints[2]
    C = ((0, 0, -r0), (1, 0, -q0), (0, 1, -p0))
    C2 = _matmul3(C, C)
    best = None
    for b in range(-quad_bound, quad_bound + 1):
        for c in range(-quad_bound, quad_bound + 1):
            if b == 0 and c == 0:
                continue
            N = tuple(
                tuple(b * C[i][j] + c * C2[i][j] for j in range(3)) for i in range(3)
            )
            pN, qN, rN = _charpoly3(N)
            for a in range(-coeff_bound, coeff_bound + 1):
                # char poly of N + a*I is chi_N(X - a)
                p = pN - 3 * a
                q = qN - 2 * a * pN + 3 * a * a
                r = rN - a * qN + a * a * pN - a**3
                for d in range(1, denom_bound + 1):
                    if p % d or q % (d * d) or r % (d**3):
                        continue
                    pp, qq, rr = p // d, q // (d * d), r // d**3
                    key = (
                        pp * pp - 2 * qq,
                        (abs(c), abs(b), abs(a), d),
                        _orientation((b, c, a)),
                        (pp, qq, rr),
                    )
                    if best is None or key < best:
                        best = key
    assert best is not None
    pp, qq, rr = best[3]
    return Polynomial([Fraction(rr), Fraction(qq), Fraction(pp), Fraction(1)])


def _orientation(signs: tuple[int, ...]) -> int:
    for s in signs:
        if s > 0:
            return 0
        if s < 0:
            return 1
    return 2


def _matmul3(x, y):
    return tuple(
        tuple(sum(x[i][k] * y[k][j] for k in range(3)) for j in range(3))
        for i in range(3)
    )


def _charpoly3(m) -> tuple[int, int, int]:
    tr = m[0][0] + m[1][1] + m[2][2]
    s = sum(m[i][i] * m[j][j] - m[i][j] * m[j][i] for i, j in ((0, 1), (0, 2), (1, 2)))
    det = (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )
    return (-tr, s, -det)


def subfield_table_row(k: int, spec: AlgebraSpec = STANDARD_ALGEBRA) -> TableRow:
    """Reduced minimal polynomial and factored discriminant for K(nu_k)."""
    if not 1 <= k <= 5:
        raise ValueError("k must be between 1 and 5")
    chi = char_poly_rational(nu_generator(k, spec))
    poly = reduce_generator_poly(chi)
    assert has_rational_root(poly) is None, "reduced polynomial must be irreducible"
    disc = discriminant_cubic(poly)
    assert disc.denominator == 1 and disc > 0
    head = "theta" if k == 1 else f"{k}*theta"
    return TableRow(
        k=k,
        generator=f"nu_{k} = {head}+(1+zeta3)*e-e^2",
        poly=poly,
        discriminant=int(disc),
        factors=tuple(factor_small_int(int(disc))),
    )


def subfield_table(spec: AlgebraSpec = STANDARD_ALGEBRA) -> list[TableRow]:
    return [subfield_table_row(k, spec) for k in range(1, 6)]
