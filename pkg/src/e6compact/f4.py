"""The 52-dimensional subalgebra W of vectors (x, y, y)_t, in quaternion notation.

Per block the real-linear bridge sends

    1 -> -(t, 0, 0),  i -> (1, 1, 1),  j -> (1, w, w),  k -> (1, wb, wb)

so left multiplication by the complex w matches left multiplication by the
quaternion w = (-1+i+j+k)/2.  The F4 product is the E6 product times -1/3.
"""

from __future__ import annotations

import itertools
import random
import re
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

import numpy as np

from . import tables
from .rep78 import (
    D_SCALARS,
    DIM,
    NBLOCKS,
    BlockOperator,
    M1,
    M2,
    M3,
    M4,
    Vec78,
    apply,
    block_name,
    build_generators,
    parse_block,
    parse_word,
    row_times,
)
from .report import SuiteReport
from .scalars import (
    OMEGA,
    Q1,
    Q_OMEGA,
    Q_OMEGA_BAR,
    QI,
    QJ,
    QK,
    THETA,
    ZERO,
    EisScalar,
    Quaternion,
)
from .tensor import StructureTensor, bracket_eval
from .verify import exact_rank, in_span

UNITS = {"1": Q1, "i": QI, "j": QJ, "k": QK, "w": Q_OMEGA, "wb": Q_OMEGA_BAR}
LEFT_SCALARS = {"w": Q_OMEGA, "wb": Q_OMEGA_BAR, "t": QI + QJ + QK}
BASIS_UNITS = (Q1, QI, QJ, QK)

# images of 1, i, j, k as (x, y) with the block equal to (x, y, y)
_IMAGES = (
    (-THETA, ZERO),
    (EisScalar(1), EisScalar(1)),
    (EisScalar(1), OMEGA),
    (EisScalar(1), OMEGA * OMEGA),
)


class NotInW(ValueError):
    pass


def quat_to_block(q: Quaternion) -> tuple[EisScalar, EisScalar, EisScalar]:
    x = y = ZERO
    for c, (ix, iy) in zip(q.coeffs(), _IMAGES):
        if c:
            x = x + ix * c
            y = y + iy * c
    return (x, y, y)


def block_to_quat(xyz: Sequence[EisScalar]) -> Quaternion:
    x, y, z = xyz
    if y != z:
        raise NotInW(f"block ({x},{y},{z}) is not of the form (x,y,y)")
    x0, x1, y0, y1 = x.a, x.b, y.a, y.b
    w = -x1 / 2
    kz = (x0 - x1 / 2 - y0 - y1) / 3
    return Quaternion(w, y0 + kz, y1 + kz, kz)


class WVector:
    """13 quaternions q_t; immutable."""

    __slots__ = ("_q",)

    def __init__(self, qs: Sequence[Quaternion]):
        if len(qs) != NBLOCKS:
            raise ValueError("WVector needs 13 quaternions")
        self._q = tuple(qs)

    @classmethod
    def zero(cls) -> "WVector":
        return cls((Quaternion(0),) * NBLOCKS)

    @classmethod
    def of(cls, t, q: Quaternion) -> "WVector":
        qs = [Quaternion(0)] * NBLOCKS
        qs[parse_block(t)] = q
        return cls(qs)

    @property
    def quats(self) -> tuple[Quaternion, ...]:
        return self._q

    def __getitem__(self, t: int) -> Quaternion:
        return self._q[t]

    def __add__(self, o):
        return WVector([p + q for p, q in zip(self._q, o._q)])

    def __sub__(self, o):
        return WVector([p - q for p, q in zip(self._q, o._q)])

    def __neg__(self):
        return WVector([-q for q in self._q])

    def __mul__(self, r):
        return WVector([q * r for q in self._q])

    __rmul__ = __mul__

    def __eq__(self, o):
        return isinstance(o, WVector) and self._q == o._q

    def __hash__(self):
        return hash(self._q)

    def to_vec78(self) -> Vec78:
        return Vec78.from_blocks({t: quat_to_block(q) for t, q in enumerate(self._q) if q})

    @classmethod
    def from_vec78(cls, v: Vec78) -> "WVector":
        return cls([block_to_quat(v.block(t)) for t in range(NBLOCKS)])

    def __str__(self):
        parts = [f"({q})_{block_name(t)}" for t, q in enumerate(self._q) if q]
        return " + ".join(parts) or "0"

    __repr__ = __str__


def w_membership(v: Vec78) -> bool:
    return all(b[1] == b[2] for b in v.blocks())


def w_project(v: Vec78) -> WVector:
    if not w_membership(v):
        raise NotInW(f"{v} is not in W")
    return WVector.from_vec78(v)


# ---------------------------------------------------------------------------
# notation: "wb*1_0 + t*j_3 - k_9", "w_T"

_QTERM = re.compile(r"([+-]?)(?:(wb|w|t)\*)?(1|i|j|k|wb|w)_([0-9XET])")


def parse_wvec(text: str) -> WVector:
    text = text.replace(" ", "").replace("ω̄", "wb").replace("ω", "w").replace("θ", "t")
    out = WVector.zero()
    pos = 0
    for m in _QTERM.finditer(text):
        if m.start() != pos:
            raise ValueError(f"cannot parse {text[pos:m.start()]!r} in {text!r}")
        sign, left, unit, block = m.groups()
        q = UNITS[unit]
        if left:
            q = LEFT_SCALARS[left] * q
        if sign == "-":
            q = -q
        out = out + WVector.of(block, q)
        pos = m.end()
    if pos != len(text) or not text:
        raise ValueError(f"cannot parse {text!r}")
    return out


def parse_right(text: str) -> Quaternion:
    """A product of 1, i, j, k, w, wb such as ``kwb`` (k times wbar)."""
    out = Q1
    pos = 0
    for m in re.finditer(r"wb|w|i|j|k|1", text):
        if m.start() != pos:
            raise ValueError(f"bad quaternion word {text!r}")
        out = out * UNITS[m.group(0)]
        pos = m.end()
    if pos != len(text):
        raise ValueError(f"bad quaternion word {text!r}")
    return out


# ---------------------------------------------------------------------------
# spanning set, closure


def w_basis() -> list[WVector]:
    """q_t for q in 1, i, j, k and t = 0..12 (52 vectors, block-major)."""
    return [WVector.of(t, q) for t in range(NBLOCKS) for q in BASIS_UNITS]


def _int_rows(vs: Iterable[Vec78]) -> np.ndarray:
    rows = []
    for v in vs:
        c = v.coords
        if any(x.denominator != 1 for x in c):
            raise ValueError("integral vectors expected")
        rows.append([int(x) for x in c])
    return np.array(rows, dtype=np.int64)


def _w_mask_ok(Z: np.ndarray) -> np.ndarray:
    """Membership of integer coordinate rows (..., 78) in W."""
    Z = Z.reshape(Z.shape[:-1] + (NBLOCKS, 3, 2))
    return np.all(Z[..., 1, :] == Z[..., 2, :], axis=(-1, -2))


def verify_w_closure(tensor: StructureTensor) -> SuiteReport:
    rep = SuiteReport("f4-closure")
    basis = w_basis()
    vecs = [b.to_vec78() for b in basis]
    rank = exact_rank([v.coords for v in vecs])
    rep.check(rank == 52, f"dim W = {rank}")
    rep.note(f"dim W={rank}")
    C, _ = tensor.dense_int()
    B = _int_rows(vecs)
    P = np.einsum("pu,qv,uvw->pqw", B, B, C, optimize=True)
    ok = _w_mask_ok(P)
    for p, q in itertools.combinations(range(len(basis)), 2):
        rep.check(bool(ok[p, q]), f"[{basis[p]}, {basis[q]}] leaves W")
    g = build_generators()
    for name in "abcd":
        out = [v for v in vecs if not w_membership(apply(g[name], v))]
        rep.check(not out, f"{name} moves {out[:1]} out of W")
    witness = next((v for v in vecs if not w_membership(apply(g["e"], v))), None)
    rep.check(witness is not None, "e preserves W")
    if witness is not None:
        rep.note(f"e leaves W: e({WVector.from_vec78(witness)}) = {apply(g['e'], witness)}")
    return rep


def f4_bracket(p: WVector, q: WVector, tensor: StructureTensor) -> WVector:
    z = bracket_eval(p.to_vec78(), q.to_vec78(), tensor)
    return w_project(z * Fraction(-1, 3))


def verify_f4_axioms(tensor: StructureTensor, samples: int = 1000, seed: int = 0) -> SuiteReport:
    """Anti-symmetry and Jacobi of the restricted product on random integral W-triples."""
    rep = SuiteReport("f4-axioms")
    C, _ = tensor.dense_int()
    B = _int_rows(b.to_vec78() for b in w_basis())
    rng = np.random.default_rng(seed)
    X = rng.integers(-3, 4, size=(samples, 3, len(B))) @ B

    def br(x, y):
        return np.einsum("nu,nv,uvw->nw", x, y, C, optimize=True)

    x, y, z = X[:, 0], X[:, 1], X[:, 2]
    sym = br(x, y) + br(y, x)
    J = br(br(x, y), z) + br(br(y, z), x) + br(br(z, x), y)
    for n in range(samples):
        rep.check(not sym[n].any(), f"sample {n}: [x,y] + [y,x] != 0")
        rep.check(not J[n].any(), f"sample {n}: Jacobi sum != 0")
    return rep


# ---------------------------------------------------------------------------
# displayed F4 products


def f4_table_entries() -> list[tuple[str, str, str]]:
    out = []
    for rows, cols, grid in tables.F4_PRODUCTS:
        for r, row in zip(rows, grid):
            for c, entry in zip(cols, row):
                out.append((r, c, entry))
    return out


def verify_f4_table(tensor: StructureTensor) -> SuiteReport:
    rep = SuiteReport("f4-table")
    good = 0
    for r, c, entry in f4_table_entries():
        got = f4_bracket(parse_wvec(r), parse_wvec(c), tensor)
        want = parse_wvec(entry)
        if rep.check(got == want, f"[{r}, {c}]: displayed {entry}, computed {got}"):
            good += 1
    rep.note(f"matching entries {good}/{len(f4_table_entries())}")
    return rep


# ---------------------------------------------------------------------------
# quaternionic forms of group elements


def _action_image(q: Quaternion, sign: int, starred: bool, right: Quaternion) -> Quaternion:
    base = q.star() if starred else q
    return base * right * sign


def check_action_table(rep: SuiteReport, label: str, op: BlockOperator,
                       table: Mapping[str, tuple[int, bool, str, str]]) -> None:
    for s in sorted(table, key=parse_block):
        sign, starred, right, target = table[s]
        r = parse_right(right)
        bad = []
        for q in BASIS_UNITS:
            got = apply(op, WVector.of(s, q).to_vec78())
            want = WVector.of(target, _action_image(q, sign, starred, r)).to_vec78()
            if got != want:
                bad.append(str(q))
        rep.check(not bad, f"{label} at block {s}: q -> {'-' if sign < 0 else ''}"
                           f"(q{'*' if starred else ''}{right})_{target} fails for q in {bad}")


def verify_quaternionic_actions() -> SuiteReport:
    rep = SuiteReport("f4-actions")
    # M1..M4 on a single block
    for name, M in zip(("M1", "M2", "M3", "M4"), (M1, M2, M3, M4)):
        r = parse_right(tables.M_RIGHT[name])
        bad = [str(q) for q in BASIS_UNITS
               if block_to_quat(row_times(quat_to_block(q), M)) != q * r]
        rep.check(not bad, f"{name} is not right multiplication by {tables.M_RIGHT[name]} (fails on {bad})")
    g = build_generators()
    # b: q_t -> (q w)_{3t}
    b_table = {block_name(t): (1, False, "w", block_name(3 * t % NBLOCKS)) for t in range(NBLOCKS)}
    check_action_table(rep, "b", g["b"], b_table)
    # d: left multiplication by its block scalars
    for t, s in enumerate(D_SCALARS):
        left = {EisScalar(1): Q1, OMEGA: Q_OMEGA, OMEGA * OMEGA: Q_OMEGA_BAR}[s]
        bad = [str(q) for q in BASIS_UNITS
               if apply(g["d"], WVector.of(t, q).to_vec78()) != WVector.of(t, left * q).to_vec78()]
        rep.check(not bad, f"d at block {block_name(t)} is not left multiplication (fails on {bad})")
    # complex conjugation is -*
    for q in BASIS_UNITS:
        x, y, _ = quat_to_block(q)
        rep.check(block_to_quat((x.conj(), y.conj(), y.conj())) == -q.star(),
                  f"conjugation does not induce -* on {q}")
    check_action_table(rep, "c", g["c"], tables.C_ACTION)
    for word, table in tables.WORD_ACTIONS.items():
        check_action_table(rep, word, parse_word(word), table)
    return rep


# ---------------------------------------------------------------------------
# eigenspaces of W_0 and its pointwise stabilizer


def verify_f4_eigencorrespondences(tensor: StructureTensor) -> SuiteReport:
    rep = SuiteReport("f4-eigen")
    w0 = [WVector.of(0, q).to_vec78() for q in BASIS_UNITS]
    for label, s1, s2 in tables.F4_CORRESPONDENCES:
        span = [parse_wvec(s1).to_vec78(), parse_wvec(s2).to_vec78()]
        rep.check(exact_rank([s.coords for s in span]) == 2, f"{label}: span not 2-dimensional")
        h = parse_wvec(label).to_vec78()
        for s in span:
            rep.check(in_span(bracket_eval(h, s, tensor), span),
                      f"ad({label}) moves {WVector.from_vec78(s)} out of the span")
        # stronger: every direction of W_0
        for h in w0:
            for s in span:
                rep.check(in_span(bracket_eval(h, s, tensor), span),
                          f"{label}: ad({WVector.from_vec78(h)}) moves {WVector.from_vec78(s)} out of the span")
    words = [parse_word(w) for w in tables.STABILIZER_WORDS_W0]
    I = BlockOperator.identity()
    for w, g in zip(tables.STABILIZER_WORDS_W0, words):
        rep.check(all(apply(g, h) == h for h in w0), f"{w} does not fix W_0 pointwise")
        rep.check(g ** 3 == I, f"{w} does not cube to 1")
    for (wa, ga), (wb, gb) in itertools.combinations(zip(tables.STABILIZER_WORDS_W0, words), 2):
        rep.check(ga * gb == gb * ga, f"{wa} and {wb} do not commute")
    group = {I}
    for g in words:
        group = {x * g ** k for x in group for k in range(3)}
    rep.check(len(group) == 3 ** 4, f"W_0 stabilizer words generate a group of order {len(group)}")
    return rep


# ---------------------------------------------------------------------------
# export

EXPORT_LABELS = [(name, s * q) for name, s in (("", Q1), ("w", Q_OMEGA), ("wb", Q_OMEGA_BAR))
                 for q in BASIS_UNITS]
F4_HEADER = "f4-table v1 product=e6/-3"


def f4_table(tensor: StructureTensor) -> dict[tuple[int, Quaternion, int, Quaternion], WVector]:
    """Products of (1, w, wb) x (1, i, j, k) on distinct blocks t1 < t2."""
    C, L = tensor.dense_int()
    labels = [q for _, q in EXPORT_LABELS]
    vecs = {}
    for t in range(NBLOCKS):
        for q in labels:
            vecs[(t, q)] = WVector.of(t, q).to_vec78()
    B = np.array([[int(x * 2) for x in v.coords] for v in vecs.values()], dtype=np.int64)
    keys = list(vecs)
    P = np.einsum("pu,qv,uvw->pqw", B, B, C, optimize=True)
    out = {}
    for (i, (t1, q1)), (j, (t2, q2)) in itertools.product(enumerate(keys), repeat=2):
        if t1 >= t2:
            continue
        z = Vec78([Fraction(int(c), -3 * 4 * L) for c in P[i, j]])
        out[(t1, q1, t2, q2)] = w_project(z)
    return out


def export_text(table: Mapping[tuple[int, Quaternion, int, Quaternion], WVector]) -> str:
    order = {q: n for n, (_, q) in enumerate(EXPORT_LABELS)}
    lines = [F4_HEADER]
    for key in sorted(table, key=lambda k: (k[0], order[k[1]], k[2], order[k[3]])):
        t1, q1, t2, q2 = key
        rhs = " + ".join(f"{block_name(t)} {q}" for t, q in enumerate(table[key].quats) if q) or "0"
        lines.append(f"{block_name(t1)} {q1} {block_name(t2)} {q2} -> {rhs}")
    return "\n".join(lines) + "\n"


def import_text(text: str) -> dict[tuple[int, Quaternion, int, Quaternion], WVector]:
    lines = text.splitlines()
    if not lines or lines[0] != F4_HEADER:
        raise ValueError("not an f4-table v1 file")
    out = {}
    for lineno, line in enumerate(lines[1:], start=2):
        lhs, sep, rhs = line.partition(" -> ")
        parts = lhs.split()
        if not sep or len(parts) != 4:
            raise ValueError(f"line {lineno}: expected 't1 q1 t2 q2 -> ...'")
        t1, t2 = parse_block(parts[0]), parse_block(parts[2])
        val = WVector.zero()
        if rhs.strip() != "0":
            for term in rhs.split(" + "):
                tb, q = term.split()
                val = val + WVector.of(tb, Quaternion.parse(q))
        out[(t1, Quaternion.parse(parts[1]), t2, Quaternion.parse(parts[3]))] = val
    return out
