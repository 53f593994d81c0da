"""Exact rational vectors and matrices.

Scalars are :class:`fractions.Fraction`; vectors are tuples of Fractions and
matrices are tuples of row tuples.  Everything is immutable, so values can be
hashed and shared freely.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Iterable, Optional, Sequence

from .errors import DimensionMismatch, ZeroVector

Rational = Fraction
RVector = tuple  # tuple[Fraction, ...]
RMatrix = tuple  # tuple[RVector, ...]


def rational(x) -> Fraction:
    """Coerce ints, Fractions and ``p/q`` strings to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return parse_rational(x)
    if isinstance(x, float):
        raise TypeError("floats are not exact; pass a Fraction or a 'p/q' string")
    return Fraction(x)


def parse_rational(text: str) -> Fraction:
    s = text.strip()
    if not s:
        raise ValueError("empty rational")
    num, sep, den = s.partition("/")
    if not _is_int(num) or (sep and not _is_int(den, signed=False)):
        raise ValueError(f"malformed rational {text!r}")
    if sep:
        if int(den) == 0:
            raise ZeroDivisionError(f"zero denominator in {text!r}")
        return Fraction(int(num), int(den))
    return Fraction(int(num))


def _is_int(s: str, signed: bool = True) -> bool:
    if signed and s[:1] in "+-":
        s = s[1:]
    return s.isdigit()


def format_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def vector(entries: Iterable) -> RVector:
    return tuple(rational(x) for x in entries)


def matrix(rows: Iterable[Iterable]) -> RMatrix:
    m = tuple(vector(r) for r in rows)
    if m and len({len(r) for r in m}) != 1:
        raise DimensionMismatch("matrix rows have different lengths")
    return m


def dot(u: Sequence, v: Sequence) -> Fraction:
    if len(u) != len(v):
        raise DimensionMismatch(f"length {len(u)} vs {len(v)}")
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def add(u: Sequence, v: Sequence) -> RVector:
    return tuple(a + b for a, b in zip(u, v))


def sub(u: Sequence, v: Sequence) -> RVector:
    return tuple(a - b for a, b in zip(u, v))


def scale(c, v: Sequence) -> RVector:
    return tuple(c * a for a in v)


def neg(v: Sequence) -> RVector:
    return tuple(-a for a in v)


def matvec(M: Sequence[Sequence], v: Sequence) -> RVector:
    return tuple(dot(row, v) for row in M)


def is_zero(v: Sequence) -> bool:
    return all(a == 0 for a in v)


def point_key(v: Sequence) -> tuple:
    """Hashable identity of an exact point: reduced (numerator, denominator) pairs."""
    return tuple((q.numerator, q.denominator) for q in map(Fraction, v))


def _row_echelon(M: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form; pivot is the first nonzero entry in column order."""
    rows = [list(map(Fraction, r)) for r in M]
    if not rows:
        return rows, []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        pv = rows[r][c]
        rows[r] = [x / pv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def rank(M: Sequence[Sequence]) -> int:
    return len(_row_echelon(M)[1])


def kernel_basis(M: Sequence[Sequence], ncols: Optional[int] = None) -> list[RVector]:
    """Basis of the right kernel of M.

    ``ncols`` is needed only when M has no rows (the kernel is then everything).
    """
    if not M:
        if ncols is None:
            raise ValueError("ncols required for an empty matrix")
        return [tuple(Fraction(int(i == j)) for j in range(ncols)) for i in range(ncols)]
    ncols = len(M[0])
    rref, pivots = _row_echelon(M)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for row, pc in zip(rref, pivots):
            v[pc] = -row[fc]
        basis.append(tuple(v))
    return basis


def normalize_primitive(v: Sequence) -> RVector:
    """Positive rescaling of v to coprime integer entries."""
    v = [Fraction(x) for x in v]
    if is_zero(v):
        raise ZeroVector("cannot normalize the zero vector")
    den = reduce(lambda a, b: a * b // gcd(a, b), (x.denominator for x in v), 1)
    ints = [int(x * den) for x in v]
    g = reduce(gcd, (abs(x) for x in ints))
    return tuple(Fraction(x // g) for x in ints)


def canonical_sign(v: Sequence) -> RVector:
    """Return v or -v, whichever has a positive first nonzero entry."""
    for x in v:
        if x != 0:
            return tuple(v) if x > 0 else neg(v)
    raise ZeroVector("zero vector has no canonical sign")


def solve_square(M: Sequence[Sequence], rhs: Sequence) -> Optional[RVector]:
    """Unique solution of M x = rhs, or None when M is singular."""
    n = len(M)
    if any(len(r) != n for r in M) or len(rhs) != n:
        raise DimensionMismatch("solve_square needs a square system")
    aug = [list(r) + [rhs[i]] for i, r in enumerate(M)]
    rref, pivots = _row_echelon(aug)
    if pivots[:n] != list(range(n)) or len(pivots) > n:
        return None
    return tuple(rref[i][n] for i in range(n))


def independent_subset(vectors: Sequence[Sequence], start: Sequence[Sequence] = ()) -> list[int]:
    """Greedy scan: indices of ``vectors`` that extend ``start`` independently."""
    chosen = [list(v) for v in start]
    r = rank(chosen) if chosen else 0
    picked = []
    for i, v in enumerate(vectors):
        trial = chosen + [list(v)]
        tr = rank(trial)
        if tr > r:
            chosen, r = trial, tr
            picked.append(i)
    return picked
