"""Band walks and band modules over the gentle algebras on a double line.

For n vertices the quiver has arrows a_i, b_i : i+1 -> i (1 <= i <= n-1)
with relations b_i a_{i+1} = 0 and a_i b_{i+1} = 0.  Walks are cyclic
sequences of signed steps stored in written (composition) order: the
rightmost step is traversed first, and consecutive written steps x, y
compose when from(x) == to(y).

Band modules are built with exact rational entries; Hom dimensions come
from the nullity of the intertwiner system, solved by sparse integer
elimination (the dimension is independent of the base field).
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .dyck import Component
from .errors import (
    DimensionMismatch,
    InvalidComponent,
    InvalidWalk,
    LetterOutOfRange,
    NonPrimitive,
    ZeroLambda,
)
from .words import is_primitive

Matrix = tuple[tuple[Fraction, ...], ...]


@dataclass(frozen=True)
class Step:
    """One signed letter of a walk: arrow kind 'a' or 'b', its index and
    exponent +1 (the arrow) or -1 (its formal inverse)."""

    kind: str
    index: int
    exp: int

    def inverse(self) -> "Step":
        return Step(self.kind, self.index, -self.exp)

    def __str__(self) -> str:
        return f"{self.kind}{self.index}{'-' if self.exp < 0 else ''}"


Walk = tuple[Step, ...]

# traversal endpoints: the arrow runs index+1 -> index, its inverse the
# other way
def step_from(s: Step) -> int:
    return s.index + 1 if s.exp > 0 else s.index


def step_to(s: Step) -> int:
    return s.index if s.exp > 0 else s.index + 1


def _step_key(s: Step) -> tuple[str, int, int]:
    return (s.kind, s.index, 0 if s.exp > 0 else 1)


_TOKEN = re.compile(r"([ab])(\d+)(-?)$")


def walk_to_str(steps: Iterable[Step]) -> str:
    """Serialize a walk, written order, e.g. 'a1 b1- a1 a2 b2- b1-'."""
    return " ".join(str(s) for s in steps)


def walk_from_str(text: str) -> Walk:
    """Parse the serialization produced by walk_to_str."""
    steps = []
    for token in text.split():
        m = _TOKEN.match(token)
        if not m:
            raise InvalidWalk(f"bad step token {token!r}")
        kind, index, minus = m.groups()
        steps.append(Step(kind, int(index), -1 if minus else 1))
    if not steps:
        raise InvalidWalk("empty walk")
    return tuple(steps)


def letter_cycle(i: int) -> Walk:
    """Open walk a_1 ... a_{i-1} b_{i-1}^- ... b_1^- for a letter i >= 2."""
    if i < 2:
        raise LetterOutOfRange(f"letter {i} has no cycle; letters start at 2")
    ups = [Step("a", k, 1) for k in range(1, i)]
    downs = [Step("b", k, -1) for k in range(i - 1, 0, -1)]
    return tuple(ups + downs)


def psi(w: Sequence[int], n: int | None = None) -> Walk:
    """Concatenated letter cycles of a primitive word over {2..n}."""
    word = tuple(w)
    if n is None:
        n = max(word, default=0)
    if any(letter < 2 or letter > n for letter in word):
        raise LetterOutOfRange(f"letters of {word} must lie in 2..{n}")
    if not is_primitive(word):
        raise NonPrimitive(f"{word} is a proper power")
    steps: list[Step] = []
    for letter in word:
        steps.extend(letter_cycle(letter))
    walk = tuple(steps)
    assert validate_band_walk(walk)
    return walk


def validate_band_walk(steps: Sequence[Step], n: int | None = None) -> bool:
    """All band conditions: composable cycle, reduced, no relation or
    inverse relation, primitive, at least one letter of each sign."""
    walk = tuple(steps)
    r = len(walk)
    if r == 0:
        return False
    if n is not None and any(s.index < 1 or s.index >= n for s in walk):
        return False
    for j in range(r):
        x, y = walk[j], walk[(j + 1) % r]
        if step_from(x) != step_to(y):
            return False
        if x.kind == y.kind and x.index == y.index and x.exp != y.exp:
            return False
        # relations are the alternating length-2 paths going up in index
        if x.exp > 0 and y.exp > 0:
            if x.kind != y.kind and y.index == x.index + 1:
                return False
        if x.exp < 0 and y.exp < 0:
            if x.kind != y.kind and x.index == y.index + 1:
                return False
    if not any(s.exp > 0 for s in walk) or not any(s.exp < 0 for s in walk):
        return False
    return all(walk[k:] + walk[:k] != walk for k in range(1, r))


def canonical_walk(steps: Sequence[Step]) -> Walk:
    """Minimal rotation under the order a < b, index order, +1 < -1."""
    walk = tuple(steps)
    rotated = [walk[k:] + walk[:k] for k in range(len(walk))]
    return min(rotated, key=lambda rot: [_step_key(s) for s in rot])


@dataclass
class BandModule:
    """Exact-rational representation attached to a band walk.

    dims[i] is the dimension at vertex i+1; mats[(kind, index)] has shape
    dims[index-1] x dims[index] and satisfies the gentle relations; the
    scalar lam sits on the wrap-around step of the canonical rotation.
    """

    n: int
    dims: tuple[int, ...]
    mats: dict[tuple[str, int], Matrix]
    lam: Fraction
    walk: Walk


def band_module(
    steps: Sequence[Step], lam: Fraction | int, n: int | None = None
) -> BandModule:
    """Band module of a walk with parameter lam (multiplicity 1)."""
    walk = tuple(steps)
    if n is None:
        n = 1 + max((s.index for s in walk), default=0)
    if not validate_band_walk(walk, n):
        raise InvalidWalk(f"not a band walk: {walk_to_str(walk)}")
    lam = Fraction(lam)
    if lam == 0:
        raise ZeroLambda("the band parameter must be non-zero")
    walk = canonical_walk(walk)
    trav = walk[::-1]
    r = len(trav)
    visits = [step_from(s) for s in trav]
    dims = [0] * n
    index_in_vertex = []
    for v in visits:
        index_in_vertex.append(dims[v - 1])
        dims[v - 1] += 1
    entries: dict[tuple[str, int], list[tuple[int, int, Fraction]]] = {}
    for t, s in enumerate(trav):
        nxt = (t + 1) % r
        value = lam if t == r - 1 else Fraction(1)
        if s.exp > 0:
            row, col = index_in_vertex[nxt], index_in_vertex[t]
        else:
            row, col = index_in_vertex[t], index_in_vertex[nxt]
        entries.setdefault((s.kind, s.index), []).append((row, col, value))
    mats: dict[tuple[str, int], Matrix] = {}
    for idx in range(1, n):
        for kind in ("a", "b"):
            rows = [[Fraction(0)] * dims[idx] for _ in range(dims[idx - 1])]
            for row, col, value in entries.get((kind, idx), []):
                assert rows[row][col] == 0
                rows[row][col] = value
            mats[(kind, idx)] = tuple(tuple(row) for row in rows)
    module = BandModule(n=n, dims=tuple(dims), mats=mats, lam=lam, walk=walk)
    assert _relations_hold(module)
    return module


def _matmul(x: Matrix, y: Matrix) -> Matrix:
    inner = len(y)
    cols = len(y[0]) if y else 0
    return tuple(
        tuple(sum((row[k] * y[k][c] for k in range(inner)), Fraction(0)) for c in range(cols))
        for row in x
    )


def _relations_hold(m: BandModule) -> bool:
    for i in range(1, m.n - 1):
        for first, second in (("b", "a"), ("a", "b")):
            prod = _matmul(m.mats[(first, i)], m.mats[(second, i + 1)])
            if any(any(entry for entry in row) for row in prod):
                return False
    return True


def _echelon_rank(rows: Iterable[dict[int, int]]) -> int:
    """Rank of a sparse integer matrix by fraction-free elimination."""
    pivots: dict[int, dict[int, int]] = {}
    for incoming in rows:
        row = {k: v for k, v in incoming.items() if v}
        while row:
            v = min(row)
            piv = pivots.get(v)
            if piv is None:
                g = 0
                for c in row.values():
                    g = math.gcd(g, c)
                if g > 1:
                    row = {k: c // g for k, c in row.items()}
                pivots[v] = row
                break
            a = row.pop(v)
            b = piv[v]
            for k, c in piv.items():
                if k == v:
                    continue
                nc = b * row.get(k, 0) - a * c
                if nc:
                    row[k] = nc
                elif k in row:
                    del row[k]
            for k in row:
                if k not in piv:
                    row[k] = row[k] * b
            if row:
                g = 0
                for c in row.values():
                    g = math.gcd(g, c)
                if g > 1:
                    row = {k: c // g for k, c in row.items()}
    return len(pivots)


def _sparse_columns(mat: Matrix) -> dict[int, list[tuple[int, Fraction]]]:
    cols: dict[int, list[tuple[int, Fraction]]] = {}
    for r, row in enumerate(mat):
        for c, value in enumerate(row):
            if value:
                cols.setdefault(c, []).append((r, value))
    return cols


def _sparse_rows(mat: Matrix) -> dict[int, list[tuple[int, Fraction]]]:
    rows: dict[int, list[tuple[int, Fraction]]] = {}
    for r, row in enumerate(mat):
        for c, value in enumerate(row):
            if value:
                rows.setdefault(r, []).append((c, value))
    return rows


def hom_dim(m: BandModule, w: BandModule) -> int:
    """Dimension of the space of morphisms m -> w.

    Unknowns are per-vertex matrices f_i of shape w.dims[i] x m.dims[i];
    for every arrow g: s -> t the equation f_t M_g = W_g f_s must hold.
    """
    if m.n != w.n:
        raise DimensionMismatch(f"modules over different quivers: {m.n} != {w.n}")
    base = [0] * (m.n + 1)
    for i in range(m.n):
        base[i + 1] = base[i] + w.dims[i] * m.dims[i]
    nvars = base[m.n]

    def var(vertex: int, row: int, col: int) -> int:
        # f at vertex (1-based): row in w basis, col in m basis
        return base[vertex - 1] + row * m.dims[vertex - 1] + col

    equations: list[dict[int, int]] = []
    for idx in range(1, m.n):
        for kind in ("a", "b"):
            src, tgt = idx + 1, idx
            m_cols = _sparse_columns(m.mats[(kind, idx)])
            w_rows = _sparse_rows(w.mats[(kind, idx)])
            for v in range(m.dims[src - 1]):
                mc = m_cols.get(v)
                for u in range(w.dims[tgt - 1]):
                    wr = w_rows.get(u)
                    if not mc and not wr:
                        continue
                    terms: dict[int, Fraction] = {}
                    if mc:
                        for k, value in mc:
                            key = var(tgt, u, k)
                            terms[key] = terms.get(key, Fraction(0)) + value
                    if wr:
                        for k, value in wr:
                            key = var(src, k, v)
                            terms[key] = terms.get(key, Fraction(0)) - value
                    scale = math.lcm(*(t.denominator for t in terms.values()))
                    row = {
                        k: int(t * scale) for k, t in terms.items() if t
                    }
                    if row:
                        equations.append(row)
    return nvars - _echelon_rank(equations)


def is_brick(m: BandModule) -> bool:
    """True iff the endomorphism space of m is one-dimensional."""
    return hom_dim(m, m) == 1


def ext1_dim(x: BandModule, y: BandModule) -> int:
    """dim Ext^1(x, y), which equals dim Hom(y, x) for band modules."""
    return hom_dim(y, x)


def g_vector_of_band(steps: Sequence[Step], n: int | None = None) -> tuple[int, ...]:
    """Top-minus-bottom vertex counts of the cyclic walk.

    A visited vertex is on top when the incoming traversal step is inverse
    and the outgoing one direct, at the bottom in the opposite case.
    """
    walk = tuple(steps)
    if n is None:
        n = 1 + max((s.index for s in walk), default=0)
    if not validate_band_walk(walk, n):
        raise InvalidWalk(f"not a band walk: {walk_to_str(walk)}")
    trav = walk[::-1]
    g = [0] * n
    for t, cur in enumerate(trav):
        prev = trav[t - 1]
        vertex = step_from(cur)
        if prev.exp < 0 and cur.exp > 0:
            g[vertex - 1] += 1
        elif prev.exp > 0 and cur.exp < 0:
            g[vertex - 1] -= 1
    return tuple(g)


def slalom_to_band_walk(component: Component) -> Walk:
    """Band walk of one closed multislalom component.

    Copy-1 segments from edge i up to edge j contribute b_i^- ... b_{j-1}^-;
    copy-2 segments from edge j down to edge i contribute a_{j-1} ... a_i.
    """
    trav: list[Step] = []
    for copy, start, end in component.segments:
        if copy == 1:
            if start >= end:
                raise InvalidComponent(
                    f"copy-1 segment must ascend, got {start} -> {end}"
                )
            trav.extend(Step("b", k, -1) for k in range(start, end))
        else:
            if start <= end:
                raise InvalidComponent(
                    f"copy-2 segment must descend, got {start} -> {end}"
                )
            trav.extend(Step("a", k, 1) for k in range(start - 1, end - 1, -1))
    walk = tuple(reversed(trav))
    if not validate_band_walk(walk):
        raise InvalidComponent(f"segments do not close into a band walk")
    return walk
