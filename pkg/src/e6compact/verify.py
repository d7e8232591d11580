"""Exhaustive exact checks that the built product is a Lie algebra of the
expected shape: anti-symmetry, Jacobi, the Killing form, the Cartan block
V_0 and its root spaces.
"""

from __future__ import annotations

import itertools
import random
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from typing import Sequence

import numpy as np

from . import tables
from .builder import e6_table_entries, verify_invariance
from .notation import parse_vec
from .rep78 import (
    DIM,
    NBLOCKS,
    BlockOperator,
    Vec78,
    apply,
    basis_label,
    build_generators,
    d_elements,
    parse_word,
)
from .report import SuiteReport
from .scalars import ONE, OMEGA, THETA, ZERO, fmt_rational
from .tensor import StructureTensor, bracket_eval

__all__ = [
    "bracket_eval",
    "exact_rank",
    "in_span",
    "jacobi_sweep",
    "killing_gram",
    "hermitian_gram",
    "ldlt_pivots",
    "verify_antisymmetry",
    "verify_jacobi_all",
    "verify_jacobi_cases",
    "verify_killing",
    "verify_cartan_and_roots",
    "verify_displayed",
    "verify_all_invariance",
]

NTRIPLES = DIM * (DIM - 1) * (DIM - 2) // 6


# ---------------------------------------------------------------------------
# small exact linear algebra


def exact_rank(rows: Sequence[Sequence[Fraction]]) -> int:
    m = [list(map(Fraction, r)) for r in rows]
    rank, ncols = 0, len(m[0]) if m else 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(m)) if m[i][col]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        p = m[rank]
        for i in range(rank + 1, len(m)):
            if m[i][col]:
                f = m[i][col] / p[col]
                m[i] = [x - f * y for x, y in zip(m[i], p)]
        rank += 1
    return rank


def in_span(v: Vec78, basis: Sequence[Vec78]) -> bool:
    """Real span membership."""
    rows = [b.coords for b in basis]
    return exact_rank(rows + [v.coords]) == exact_rank(rows)


def _as_int_vec(v: Vec78) -> np.ndarray:
    c = v.coords
    if any(x.denominator != 1 for x in c):
        raise ValueError("integral vector expected")
    return np.array([int(x) for x in c], dtype=np.int64)


# ---------------------------------------------------------------------------
# anti-symmetry and Jacobi


def verify_antisymmetry(tensor: StructureTensor) -> SuiteReport:
    """[u,u] = 0 and [u,v] = -[v,u] on the 3003 unordered basis pairs (plus the diagonal)."""
    rep = SuiteReport("antisymmetry")
    for u in range(DIM):
        zu = tensor.basis_bracket(u, u)
        if zu:
            rep.failures.append(f"[{basis_label(u)},{basis_label(u)}] = {zu}")
        for v in range(u + 1, DIM):
            uv = tensor.basis_bracket(u, v)
            vu = tensor.basis_bracket(v, u)
            rep.check(all(vu.get(w, 0) == -x for w, x in uv.items()) and len(uv) == len(vu),
                      f"[{basis_label(u)},{basis_label(v)}] + [{basis_label(v)},{basis_label(u)}] != 0")
    # the dense array must agree as well
    C, _ = tensor.dense_int()
    if not np.array_equal(C, -C.transpose(1, 0, 2)):
        rep.failures.append("dense array is not antisymmetric")
    return rep


def _jacobi_slice(C: np.ndarray, x: int, modulus: int | None) -> list[tuple[int, int, int, np.ndarray]]:
    flat = C.reshape(DIM, DIM * DIM)
    a1 = (C[x] @ flat).reshape(DIM, DIM, DIM)                          # [[x,y],z]
    a2 = (C.reshape(DIM * DIM, DIM) @ C[:, x, :]).reshape(DIM, DIM, DIM)  # [[y,z],x]
    a3 = (C[:, x, :] @ flat).reshape(DIM, DIM, DIM).transpose(1, 0, 2)  # [[z,x],y]
    J = np.rint(a1 + a2 + a3).astype(np.int64)
    if modulus is not None:
        J %= modulus
    bad = []
    nz = np.any(J != 0, axis=2)
    for y, z in np.argwhere(nz):
        if x < y < z:
            bad.append((x, int(y), int(z), J[y, z].copy()))
    return bad


def jacobi_sweep(C: np.ndarray, modulus: int | None = None, threads: int = 1):
    """Failing triples x<y<z of the Jacobi identity on the dense integer array ``C``.

    The products run through float64 BLAS.  Every partial sum is an integer
    of size at most 3 * 78 * max|C|^2, so below 2**53 the arithmetic is exact
    whatever the summation order; larger inputs are refused.
    One x-slice at a time; the result is sorted, so it does not depend on ``threads``.
    """
    if threads < 1:
        raise ValueError("threads must be >= 1")
    m = int(np.abs(C).max()) if C.size else 0
    if 3 * DIM * m * m >= 2 ** 53:
        raise OverflowError("structure constants too large for the exact float64 sweep")
    Cf = np.ascontiguousarray(C, dtype=np.float64)
    xs = range(DIM - 2)
    if threads == 1:
        parts = [_jacobi_slice(Cf, x, modulus) for x in xs]
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(lambda x: _jacobi_slice(Cf, x, modulus), xs))
    return sorted((b for p in parts for b in p), key=lambda t: t[:3])


def _fmt_dense(vec: np.ndarray, L: int) -> str:
    terms = [f"{fmt_rational(Fraction(int(c), L))}*{basis_label(w)}" for w, c in enumerate(vec) if c]
    return " + ".join(terms) or "0"


def verify_jacobi_all(tensor: StructureTensor, threads: int = 1) -> SuiteReport:
    C, L = tensor.dense_int()
    rep = SuiteReport("jacobi", checks=NTRIPLES)
    for x, y, z, vec in jacobi_sweep(C, threads=threads):
        rep.failures.append(
            f"J({basis_label(x)},{basis_label(y)},{basis_label(z)}) = {_fmt_dense(vec, L * L)}"
        )
    return rep


def jacobi_sum(x: Vec78, y: Vec78, z: Vec78, tensor: StructureTensor) -> Vec78:
    br = lambda p, q: bracket_eval(p, q, tensor)  # noqa: E731
    return br(br(x, y), z) + br(br(y, z), x) + br(br(z, x), y)


JACOBI_CASES = [
    ("non-collinear", "(1,0,0)_0", "(1,0,0)_1", "(1,0,0)_2"),
    ("collinear distinct, z=(1,0,0)_3", "(1,0,0)_0", "(1,0,0)_1", "(1,0,0)_3"),
    ("collinear distinct, z=(w,0,0)_3", "(1,0,0)_0", "(1,0,0)_1", "(w,0,0)_3"),
    ("collinear repeated, z=(w,0,0)_0", "(1,0,0)_0", "(1,0,0)_1", "(w,0,0)_0"),
    ("collinear repeated, z=(0,1,0)_0", "(1,0,0)_0", "(1,0,0)_1", "(0,1,0)_0"),
]


def verify_jacobi_cases(tensor: StructureTensor) -> SuiteReport:
    """The five representative configurations, evaluated on full vectors."""
    rep = SuiteReport("jacobi-cases")
    for name, xs, ys, zs in JACOBI_CASES:
        j = jacobi_sum(parse_vec(xs), parse_vec(ys), parse_vec(zs), tensor)
        rep.check(not j, f"{name}: Jacobi sum = {j}")
    return rep


# ---------------------------------------------------------------------------
# displayed products


def _product_checks(rep: SuiteReport, label: str, rows, tensor: StructureTensor) -> int:
    good = 0
    for xs, ys, zs in rows:
        got = bracket_eval(parse_vec(xs), parse_vec(ys), tensor)
        if rep.check(got == parse_vec(zs), f"{label} [{xs}, {ys}]: displayed {zs}, computed {got}"):
            good += 1
    return good


def verify_displayed(tensor: StructureTensor) -> SuiteReport:
    """The E6 product table, the c-check products, the Jacobi intermediate products and the other displayed values."""
    rep = SuiteReport("tables")
    t1 = 0
    for (x, y), z in sorted(e6_table_entries().items()):
        xv = Vec78.basis(6 * x[0] + 2 * x[1])
        yv = Vec78.basis(6 * y[0] + 2 * y[1])
        got = bracket_eval(xv, yv, tensor)
        if rep.check(got == z, f"e6-table [{xv}, {yv}]: displayed {z}, computed {got}"):
            t1 += 1
    s4 = _product_checks(rep, "c-check", tables.C_CHECK_PRODUCTS, tensor)
    jp = _product_checks(rep, "jacobi-case", tables.JACOBI_PRODUCTS, tensor)
    op = _product_checks(rep, "other", tables.OTHER_PRODUCTS, tensor)
    c = build_generators()["c"]
    ci = 0
    for vs, ws in tables.C_CHECK_IMAGES:
        got = apply(c, parse_vec(vs))
        if rep.check(got == parse_vec(ws), f"c({vs}): displayed {ws}, computed {got}"):
            ci += 1
    rep.note(f"e6-table {t1}/{len(tables.E6_TABLE) * 9}; c-check {s4}/{len(tables.C_CHECK_PRODUCTS)}; "
             f"jacobi-case {jp}/{len(tables.JACOBI_PRODUCTS)}; other {op}/{len(tables.OTHER_PRODUCTS)}; "
             f"c-images {ci}/{len(tables.C_CHECK_IMAGES)}")
    return rep


# ---------------------------------------------------------------------------
# invariance


def verify_all_invariance(tensor: StructureTensor, modulus: int | None = None) -> SuiteReport:
    rep = SuiteReport("invariance" if modulus is None else f"invariance-mod-{modulus}")
    for name, g in build_generators().items():
        r = verify_invariance(tensor, g, name, modulus=modulus)
        rep.checks += r.checks
        for u, v in r.failures[:20]:
            rep.failures.append(f"{name}: [g({basis_label(u)}), g({basis_label(v)})] != g([..])")
        if len(r.failures) > 20:
            rep.failures.append(f"{name}: ... {len(r.failures) - 20} more failing pairs")
    return rep


# ---------------------------------------------------------------------------
# Killing form


def killing_gram(tensor: StructureTensor) -> list[list[Fraction]]:
    """K(u, v) = trace(ad u . ad v) on the real basis."""
    C, L = tensor.dense_int()
    K = np.einsum("uwx,vxw->uv", C, C, optimize=True)
    den = L * L
    return [[Fraction(int(K[u, v]), den) for v in range(DIM)] for u in range(DIM)]


def hermitian_gram() -> list[list[Fraction]]:
    """Real Gram matrix of sum |x_i|^2; |a + b w|^2 = a^2 - ab + b^2."""
    G = [[Fraction(0)] * DIM for _ in range(DIM)]
    for i in range(0, DIM, 2):
        G[i][i] = G[i + 1][i + 1] = Fraction(1)
        G[i][i + 1] = G[i + 1][i] = Fraction(-1, 2)
    return G


def ldlt_pivots(M: Sequence[Sequence[Fraction]]) -> list[Fraction]:
    """Diagonal of D in M = L D L^T (symmetric M, no pivoting).  Stops at a zero pivot."""
    n = len(M)
    A = [list(map(Fraction, r)) for r in M]
    piv = []
    for k in range(n):
        d = A[k][k]
        piv.append(d)
        if d == 0:
            break
        row = A[k]
        for i in range(k + 1, n):
            if row[i]:
                f = row[i] / d
                Ai = A[i]
                for j in range(i, n):
                    if row[j]:
                        Ai[j] -= f * row[j]
                        if j != i:
                            A[j][i] = Ai[j]
    return piv


def _ad_matrix(u: Vec78, tensor: StructureTensor) -> list[list[Fraction]]:
    """Column w is [u, e_w]."""
    cols = [bracket_eval(u, Vec78.basis(w), tensor).coords for w in range(DIM)]
    return [[cols[w][x] for w in range(DIM)] for x in range(DIM)]


def trace_ad_squared(u: Vec78, tensor: StructureTensor) -> Fraction:
    A = _ad_matrix(u, tensor)
    return sum((A[i][j] * A[j][i] for i in range(DIM) for j in range(DIM)), Fraction(0))


def verify_killing(tensor: StructureTensor, samples: int = 100, seed: int = 0) -> tuple[SuiteReport, Fraction | None]:
    rep = SuiteReport("killing")
    K = killing_gram(tensor)
    G = hermitian_gram()
    rep.check(all(K[u][v] == K[v][u] for u in range(DIM) for v in range(u + 1, DIM)), "K not symmetric")
    lam = K[0][0] / G[0][0]
    bad = [(u, v) for u in range(DIM) for v in range(DIM) if K[u][v] != lam * G[u][v]]
    rep.check(not bad, f"K != lambda*G, first at {bad[:1]}")
    rep.check(lam < 0, f"lambda = {lam} is not negative")
    rep.note(f"lambda={fmt_rational(lam)}")

    piv = ldlt_pivots(K)
    neg = sum(1 for p in piv if p < 0)
    rep.check(len(piv) == DIM and neg == DIM, f"LDL^T: {neg} negative pivots out of {DIM}")
    rep.note(f"negative pivots={neg}")

    # independent oracle: trace(ad u ad u) from full-vector brackets
    probes = [Vec78.of(0, THETA, ZERO, ZERO)]
    probes += [Vec78.of(t, ONE, OMEGA, THETA) for t in range(NBLOCKS)]
    for u in probes:
        tr = trace_ad_squared(u, tensor)
        rep.check(tr == lam * u.hermitian_norm(),
                  f"trace(ad u ad u) for u={u}: {tr}, expected {lam * u.hermitian_norm()}")

    # ad-invariance K([x,y],z) = K(x,[y,z]) on random integral triples
    C, L = tensor.dense_int()
    Kint = np.array([[int(k * L * L) for k in row] for row in K], dtype=np.int64)
    rng = random.Random(seed)
    for _ in range(samples):
        x, y, z = (np.array([rng.randint(-2, 2) for _ in range(DIM)], dtype=np.int64) for _ in range(3))
        xy = np.einsum("u,v,uvw->w", x, y, C)
        yz = np.einsum("u,v,uvw->w", y, z, C)
        rep.check(int(xy @ Kint @ z) == int(x @ Kint @ yz), "K([x,y],z) != K(x,[y,z])")
    return rep, lam


# ---------------------------------------------------------------------------
# V_0, the eigenvector v and the root-space correspondences

V_EIGEN = "(1,1,1)_1+(w,wb,wb)_3+(w,1,1)_9"

# (root label in V_0, the two displayed spanning vectors)
CORRESPONDENCES = [
    ("(t,0,0)_0", "(1,1,1)_1+(wb,1,1)_3+(1,wb,wb)_9", "(w,w,w)_1+(1,w,w)_3+(w,1,1)_9"),
    ("(1,1,1)_0", "(t,0,0)_T+(wb,1,1)_2-(1,wb,wb)_8", "(wt,0,0)_T+(1,w,w)_2-(wb,w,w)_8"),
    ("(1,w,w)_0", "(t,0,0)_X-(w,w,w)_E+(w,1,1)_6", "(wt,0,0)_X-(1,1,1)_E+(wb,w,w)_6"),
    ("(1,wb,wb)_0", "(t,0,0)_4+(1,1,1)_5-(wb,1,1)_7", "(wt,0,0)_4+(w,w,w)_5-(w,wb,wb)_7"),
]

STABILIZER_WORDS_V0 = ["d", "d^a", "e", "c^(a^-1) c c^a", "(c^(a^-2) c^(a^5) c^(a^-2) c)^2 b"]


def _v0_basis() -> list[Vec78]:
    return [Vec78.basis(u) for u in range(6)]


def _d_image(src: Vec78, dst: Vec78) -> str | None:
    for key, op in sorted(d_elements().items()):
        if apply(op, src) == dst:
            return "d^{}.(d^a)^{}.(d^(a^2))^{}".format(*key)
    return None


def verify_cartan_and_roots(tensor: StructureTensor) -> SuiteReport:
    rep = SuiteReport("cartan")
    C, _ = tensor.dense_int()
    # (i) V_0 abelian, and no basis vector outside V_0 commutes with all of V_0
    rep.check(not np.any(C[:6, :6, :]), "[V_0, V_0] != 0")
    for u in range(6, DIM):
        rep.check(bool(np.any(C[:6, u, :])), f"{basis_label(u)} commutes with V_0")
    for t in range(NBLOCKS):
        b = slice(6 * t, 6 * t + 6)
        rep.check(not np.any(C[b, b, :]), f"[V_{t}, V_{t}] != 0")

    # (ii) eigen-identities for v
    v = parse_vec(V_EIGEN)
    tv = v.scale(THETA)
    expect = {
        "(1,0,0)_0": tv * 3,
        "(w,0,0)_0": tv * -3,
        "(0,1,0)_0": Vec78.zero(),
        "(0,w,0)_0": Vec78.zero(),
        "(0,0,1)_0": Vec78.zero(),
        "(0,0,w)_0": Vec78.zero(),
    }
    for hs, want in expect.items():
        got = bracket_eval(parse_vec(hs), v, tensor)
        rep.check(got == want, f"[{hs}, v] = {got}, expected {want}")

    # (iii) the four correspondences: ad(V_0)-invariant 2-spaces related by D
    for label, s1, s2 in CORRESPONDENCES:
        span = [parse_vec(s1), parse_vec(s2)]
        rep.check(exact_rank([s.coords for s in span]) == 2, f"{label}: span not 2-dimensional")
        for h in _v0_basis():
            for s in span:
                rep.check(in_span(bracket_eval(h, s, tensor), span),
                          f"{label}: ad({h}) moves {s} out of the span")
        name = _d_image(span[0], span[1])
        rep.check(name is not None, f"{label}: no element of D maps the first vector to the second")
        if name:
            rep.note(f"{label}: second vector = {name} (first)")
    first = [parse_vec(CORRESPONDENCES[0][1]), parse_vec(CORRESPONDENCES[0][2])]
    rep.check(any(in_span(apply(op, v), first) for op in d_elements().values()),
              "no element of D carries v into the (t,0,0)_0 span")

    # (iv) the pointwise stabilizer of V_0
    words = [parse_word(w) for w in STABILIZER_WORDS_V0]
    I = BlockOperator.identity()
    for w, g in zip(STABILIZER_WORDS_V0, words):
        rep.check(all(apply(g, h) == h for h in _v0_basis()), f"{w} does not fix V_0 pointwise")
        rep.check(g ** 3 == I, f"{w} does not cube to 1")
        rep.check(in_span(apply(g, v), [v, tv]), f"{w} does not preserve the eigenspace of v")
    for (wa, ga), (wb, gb) in itertools.combinations(zip(STABILIZER_WORDS_V0, words), 2):
        rep.check(ga * gb == gb * ga, f"{wa} and {wb} do not commute")
    group = {I}
    for g in words:
        group = {x * g ** k for x in group for k in range(3)}
    rep.check(len(group) == 3 ** 5, f"stabilizer words generate a group of order {len(group)}")
    return rep
