"""Face monoids of central rational hyperplane arrangements.

Faces are enumerated as feasible sign vectors; feasibility is decided
exactly by eliminating the equality subspace and running Fourier-Motzkin
on the remaining strict inequalities.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm
from typing import Sequence

import numpy as np

from .invariants import Report, _require, context, ext_dimension, quiver
from .linalg import canonical_span, nullspace, rank_fraction, rref
from .monoid import DEFAULT_CAPS, LRB, CapExceeded, Caps, format_sign, parse_sign, sign_closure
from .topology import RATIONALS, BettiVector, Field

MAX_HYPERPLANES = 8
MAX_DIM = 5


def _frac_vec(v) -> tuple[Fraction, ...]:
    return tuple(Fraction(x) for x in v)


def _primitive(v: Sequence[Fraction]) -> tuple[int, ...]:
    """Positive integer multiple of v with coprime entries."""
    den = lcm(*(x.denominator for x in v)) if v else 1
    ints = [int(x * den) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, x)
    return tuple(x // g for x in ints) if g else tuple(ints)


@dataclass(frozen=True)
class Arrangement:
    """Central arrangement of hyperplanes {x : a.x = 0} in Q^dim."""
    dim: int
    normals: tuple[tuple[Fraction, ...], ...]
    labels: tuple[str, ...] = ()

    def __post_init__(self):
        normals = tuple(_frac_vec(a) for a in self.normals)
        object.__setattr__(self, "normals", normals)
        if not self.labels:
            object.__setattr__(self, "labels", tuple(f"H{i}" for i in range(len(normals))))
        seen = {}
        for i, a in enumerate(normals):
            if len(a) != self.dim:
                raise ValueError(f"normal {i} has length {len(a)}, expected {self.dim}")
            if not any(a):
                raise ValueError(f"normal {i} is zero")
            key = _primitive(a)
            lead = next(x for x in key if x)
            key = tuple(-x for x in key) if lead < 0 else key
            if key in seen:
                raise ValueError(f"normals {seen[key]} and {i} define the same hyperplane")
            seen[key] = i

    def __len__(self):
        return len(self.normals)

    @property
    def rank(self) -> int:
        return rank_fraction(self.normals)

    def quotient(self) -> "Arrangement":
        """The same arrangement on V / (intersection of all hyperplanes).

        Coordinates are taken against an RREF basis of the span of the
        normals; sign vectors of faces are unchanged.
        """
        basis, _ = rref(self.normals)
        r = len(basis)
        if r == self.dim:
            return self
        # express each normal in the basis: solve c . basis = a
        coords = []
        piv = rref(self.normals)[1]
        for a in self.normals:
            # RREF basis has identity at pivot columns, so c_j = a[piv_j]
            c = tuple(a[p] for p in piv)
            check = tuple(sum(cj * b[k] for cj, b in zip(c, basis)) for k in range(self.dim))
            assert check == a, "normal not in its own row space"
            coords.append(c)
        return Arrangement(r, tuple(coords), self.labels)


@dataclass(frozen=True)
class FaceRecord:
    sign: tuple[int, ...]
    dim: int                                          # dimension of the face's span
    support_subspace: tuple[tuple[Fraction, ...], ...]  # RREF basis of that span

    @property
    def label(self) -> str:
        return format_sign(self.sign)


def fm_feasible(constraints: list[tuple[tuple[Fraction, ...], bool]], nvars: int) -> bool:
    """Is there y with c.y > 0 (strict) or c.y >= 0 for every (c, strict)?

    Fourier-Motzkin over Q: combine each positive-coefficient constraint with
    each negative one, strict if either parent is strict.
    """
    cur: dict[tuple[int, ...], bool] = {}

    def add(store, c, strict):
        p = _primitive(c)
        if not any(p):
            return strict           # 0 > 0 is infeasible, 0 >= 0 is vacuous
        store[p] = store.get(p, False) or strict
        return False

    for c, strict in constraints:
        if add(cur, _frac_vec(c), strict):
            return False
    for j in range(nvars - 1, -1, -1):
        pos = [(c, s) for c, s in cur.items() if c[j] > 0]
        neg = [(c, s) for c, s in cur.items() if c[j] < 0]
        nxt: dict[tuple[int, ...], bool] = {}
        for c, s in cur.items():
            if c[j] == 0 and add(nxt, c, s):
                return False
        for (p, sp), (q, sq) in itertools.product(pos, neg):
            combo = tuple(-q[j] * a + p[j] * b for a, b in zip(p, q))
            if add(nxt, tuple(Fraction(x) for x in combo), sp or sq):
                return False
        cur = nxt
    return True


def sign_feasible(A: Arrangement, s) -> bool:
    """Does some x satisfy sign(a_i . x) = s_i for every hyperplane i?"""
    s = parse_sign(s) if isinstance(s, str) else tuple(s)
    if len(s) != len(A):
        raise ValueError(f"sign vector has length {len(s)}, arrangement has {len(A)} hyperplanes")
    return _feasible_prefix(A, s)


def _feasible_prefix(A: Arrangement, s: tuple[int, ...]) -> bool:
    normals = A.normals[:len(s)]
    eq = [a for a, e in zip(normals, s) if e == 0]
    basis = nullspace(eq, A.dim) if eq else [
        [Fraction(int(i == j)) for j in range(A.dim)] for i in range(A.dim)]
    k = len(basis)
    strict = []
    for a, e in zip(normals, s):
        if e == 0:
            continue
        # a . (N y) = sum_j (a . N_j) y_j
        row = tuple(e * sum(ai * bj for ai, bj in zip(a, b)) for b in basis)
        strict.append((row, True))
    if k == 0:
        return not strict
    return fm_feasible(strict, k)


def _face_record(A: Arrangement, s: tuple[int, ...]) -> FaceRecord:
    eq = [a for a, e in zip(A.normals, s) if e == 0]
    basis = nullspace(eq, A.dim) if eq else [
        [Fraction(int(i == j)) for j in range(A.dim)] for i in range(A.dim)]
    return FaceRecord(s, len(basis), canonical_span(basis))


def enumerate_faces(A: Arrangement) -> list[tuple[int, ...]]:
    """Feasible sign vectors, extending feasible prefixes one hyperplane at a time."""
    prefixes = [()]
    for _ in range(len(A)):
        prefixes = [p + (e,) for p in prefixes for e in (0, 1, -1)
                    if _feasible_prefix(A, p + (e,))]
    return prefixes


def face_monoid(A: Arrangement, caps: Caps = DEFAULT_CAPS, name: str = "arrangement") -> LRB:
    """Face monoid of A (quotiented to be essential), validated as an LRB.

    ``meta["faces"]`` holds a FaceRecord per element, ``meta["arrangement"]``
    the quotiented arrangement.
    """
    if len(A) > MAX_HYPERPLANES or A.dim > MAX_DIM:
        raise CapExceeded(f"arrangement caps: n <= {MAX_HYPERPLANES}, d <= {MAX_DIM}")
    Q = A.quotient()
    faces = enumerate_faces(Q)
    B = sign_closure(faces, length=len(Q), caps=caps, name=name)
    if set(B.meta["signs"]) != set(faces):
        raise RuntimeError("feasible sign vectors are not closed under composition")
    records = tuple(_face_record(Q, s) for s in B.meta["signs"])
    ident = records[B.identity]
    if ident.dim != 0:
        raise RuntimeError("identity face is not the origin after quotienting")
    return LRB(B.labels, B.table, B.identity, name,
               {**B.meta, "faces": records, "arrangement": Q, "original": A})


def chambers(B: LRB) -> list[int]:
    return [a for a, s in enumerate(B.meta["signs"]) if all(s)]


@dataclass
class IntersectionLattice:
    subspaces: list[tuple[tuple[Fraction, ...], ...]]   # RREF bases
    dims: list[int]
    contains: np.ndarray            # contains[i, j]: subspace j is inside subspace i
    class_to_subspace: list[int]    # support-lattice class -> subspace index

    def __len__(self):
        return len(self.subspaces)


def _inside(u, v) -> bool:
    """span(u) is a subspace of span(v)."""
    return rank_fraction(list(v) + list(u)) == len(v) if u else True


def intersection_lattice(A: Arrangement, B: LRB | None = None) -> IntersectionLattice:
    """Subspaces cut out by subsets of hyperplanes, matched to the support lattice.

    Verifies that s(face) -> span(face) is a bijection onto the lattice and that
    it reverses order: X <= Y in the support lattice iff span(Y) is inside span(X).
    """
    Q = A.quotient()
    B = B or face_monoid(A)
    found: dict = {}
    for r in range(len(Q) + 1):
        for S in itertools.combinations(range(len(Q)), r):
            eq = [Q.normals[i] for i in S]
            basis = nullspace(eq, Q.dim) if eq else [
                [Fraction(int(i == j)) for j in range(Q.dim)] for i in range(Q.dim)]
            found.setdefault(canonical_span(basis), len(basis))
    subspaces = sorted(found, key=lambda s: (-found[s], s))
    dims = [found[s] for s in subspaces]
    k = len(subspaces)
    contains = np.array([[_inside(subspaces[j], subspaces[i]) for j in range(k)]
                         for i in range(k)], dtype=bool)
    ctx = context(B)
    pos = {s: i for i, s in enumerate(subspaces)}
    class_to_sub = [-1] * len(ctx.L)
    for a, rec in enumerate(B.meta["faces"]):
        c = ctx.L.class_of[a]
        j = pos.get(rec.support_subspace)
        if j is None:
            raise RuntimeError(f"face {rec.label} spans a subspace outside the lattice")
        if class_to_sub[c] not in (-1, j):
            raise RuntimeError(f"support class {c} meets two subspaces")
        class_to_sub[c] = j
    if sorted(class_to_sub) != list(range(k)):
        raise RuntimeError("support lattice and intersection lattice differ in size")
    for X in range(k):
        for Y in range(k):
            if bool(ctx.L.leq[X, Y]) != bool(contains[class_to_sub[X], class_to_sub[Y]]):
                raise RuntimeError(f"order mismatch between classes {X} and {Y}")
    return IntersectionLattice(subspaces, dims, contains, class_to_sub)


def region_count(A: Arrangement) -> int:
    """Number of chambers by deletion-restriction, r(A) = r(A - H) + r(A^H),
    computed on subspaces only (no sign vectors)."""
    Q = A.quotient()
    full = canonical_span([[Fraction(int(i == j)) for j in range(Q.dim)] for i in range(Q.dim)])
    hyps = []
    for a in Q.normals:
        hyps.append(canonical_span(nullspace([a], Q.dim)))
    return _regions(full, tuple(sorted(set(hyps))))


def _meet(u, v) -> tuple:
    """Intersection of span(u) and span(v), as a canonical RREF basis."""
    if not u or not v:
        return ()
    # x = sum a_i u_i = sum b_j v_j  ->  nullspace of [u^T | -v^T]
    d = len(u[0])
    cols = [list(col) for col in zip(*(list(u) + [[-x for x in w] for w in v]))]
    sol = nullspace(cols, len(u) + len(v))
    vecs = [[sum(s[i] * u[i][k] for i in range(len(u))) for k in range(d)] for s in sol]
    return canonical_span(vecs)


@lru_cache(maxsize=None)
def _regions(ambient: tuple, hyps: tuple) -> int:
    if not hyps:
        return 1
    H, rest = hyps[0], hyps[1:]
    restricted = set()
    for K in rest:
        m = _meet(H, K)
        if m != H:
            restricted.add(m)
    return _regions(ambient, rest) + _regions(H, tuple(sorted(restricted)))


def sphere_ext_check(A: Arrangement, field: Field = RATIONALS, strict: bool = False) -> Report:
    """Delta(X, Y) is a (dim X - dim Y - 1)-sphere, Ext is the dimension-gap
    indicator, and the quiver is the Hasse diagram of the intersection lattice."""
    B = face_monoid(A)
    lat = intersection_lattice(A, B)
    ctx = context(B)
    k = len(ctx.L)
    dim_of = [lat.dims[lat.class_to_subspace[c]] for c in range(k)]
    sub_in = lambda X, Y: bool(lat.contains[lat.class_to_subspace[X], lat.class_to_subspace[Y]])
    bad = []
    for X, Y in ctx.L.pairs_lt():
        want = BettiVector.sphere(dim_of[X] - dim_of[Y] - 1)
        got = ctx.betti(X, Y, field)
        if got != want:
            bad.append({"X": X, "Y": Y, "betti": got.as_dict(), "expected": want.as_dict()})
    d = max(dim_of)
    for X in range(k):
        for Y in range(k):
            for n in range(d + 2):
                want = int(sub_in(X, Y) and dim_of[X] - dim_of[Y] == n)
                got = ext_dimension(B, X, Y, n, field)
                if got != want:
                    bad.append({"X": X, "Y": Y, "n": n, "ext": got, "expected": want})
    q = quiver(B, field)
    covers = 0
    for X in range(k):
        for Y in range(k):
            cover = sub_in(X, Y) and X != Y and dim_of[X] - dim_of[Y] == 1
            covers += cover
            if q.arrows[X, Y] != int(cover):
                bad.append({"X": X, "Y": Y, "arrows": int(q.arrows[X, Y]), "cover": cover})
    chamber_count = len(chambers(B))
    regions = region_count(A)
    if chamber_count != regions:
        bad.append({"chambers": chamber_count, "deletion_restriction": regions})
    rep = Report("sphere", not bad, {
        "faces": B.size, "lattice": k, "covers": covers, "arrows": q.total_arrows(),
        "chambers": chamber_count, "regions": regions, "field": str(field),
        "subspace_dims": dim_of}, bad)
    return _require(rep, strict)


def three_lines() -> Arrangement:
    """Three distinct lines through the origin of the plane, signed as in the
    standard picture: H0 = {y=0}, H1 = {x=y}, H2 = {x=-y}."""
    return Arrangement(2, ((0, 1), (1, -1), (1, 1)))


def boolean_arrangement(d: int) -> Arrangement:
    return Arrangement(d, tuple(tuple(int(i == j) for j in range(d)) for i in range(d)))


def braid_arrangement(n: int) -> Arrangement:
    """Hyperplanes x_i = x_j in Q^n (not essential: all contain (1,...,1))."""
    normals = []
    for i, j in itertools.combinations(range(n), 2):
        normals.append(tuple(1 if k == i else -1 if k == j else 0 for k in range(n)))
    return Arrangement(n, tuple(normals))
