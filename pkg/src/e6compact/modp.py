"""Reduction of the integral structure constants modulo a prime p != 3."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import tables
from .builder import invariance_defects, operator_int_matrix
from .f4 import WVector
from .rep78 import DIM, NBLOCKS, Vec78, apply, basis_label, build_generators, word
from .report import SuiteReport
from .scalars import Q1, QI, QJ, QK, Q_OMEGA
from .tensor import StructureTensor
from .verify import jacobi_sweep

MAX_PRIME = 2 ** 20  # keeps every intermediate sum inside int64


class CharacteristicError(ValueError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % d for d in range(2, int(n ** 0.5) + 1))


def check_prime(p: int) -> int:
    if p == 3:
        raise CharacteristicError("characteristic 3 unsupported")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p >= MAX_PRIME:
        raise ValueError(f"prime {p} too large (limit {MAX_PRIME})")
    return p


class ModScalar:
    """a + b*w in F_p[w]/(w^2 + w + 1); a ring, not always a field."""

    __slots__ = ("a", "b", "p")

    def __init__(self, a: int, b: int, p: int):
        self.a, self.b, self.p = a % p, b % p, p

    def _lift(self, o):
        if isinstance(o, ModScalar):
            if o.p != self.p:
                raise ValueError("mixed characteristics")
            return o
        return ModScalar(int(o), 0, self.p)

    def __add__(self, o):
        o = self._lift(o)
        return ModScalar(self.a + o.a, self.b + o.b, self.p)

    __radd__ = __add__

    def __neg__(self):
        return ModScalar(-self.a, -self.b, self.p)

    def __sub__(self, o):
        return self + (-self._lift(o))

    def __mul__(self, o):
        o = self._lift(o)
        # (a + bw)(c + dw) = ac - bd + (ad + bc - bd) w
        a, b, c, d = self.a, self.b, o.a, o.b
        return ModScalar(a * c - b * d, a * d + b * c - b * d, self.p)

    __rmul__ = __mul__

    def conj(self) -> "ModScalar":
        return ModScalar(self.a - self.b, -self.b, self.p)

    def __eq__(self, o):
        return isinstance(o, ModScalar) and (self.a, self.b, self.p) == (o.a, o.b, o.p)

    def __hash__(self):
        return hash((self.a, self.b, self.p))

    def __bool__(self):
        return bool(self.a or self.b)

    def __repr__(self):
        return f"ModScalar({self.a}+{self.b}w mod {self.p})"


def reduce_rational(x: Fraction, p: int) -> int:
    x = Fraction(x)
    if x.denominator % p == 0:
        raise ValueError(f"{x} is not {p}-integral")
    return x.numerator * pow(x.denominator, -1, p) % p


@dataclass(frozen=True)
class ModPTensor:
    p: int
    C: np.ndarray  # residues in [0, p), full antisymmetric layout

    @property
    def header(self) -> str:
        return f"e6-sc v1 mod={self.p}"

    def to_text(self) -> str:
        lines = [self.header]
        for u, v, w in np.argwhere(self.C):
            if u < v:
                lines.append(f"{u} {v} {w} {self.C[u, v, w]}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "ModPTensor":
        lines = text.splitlines()
        if not lines or not lines[0].startswith("e6-sc v1 mod="):
            raise ValueError("not an e6-sc v1 mod=p file")
        p = check_prime(int(lines[0].split("mod=")[1]))
        C = np.zeros((DIM, DIM, DIM), dtype=np.int64)
        for lineno, line in enumerate(lines[1:], start=2):
            u, v, w, r = (int(x) for x in line.split())
            if not (0 <= u < v < DIM and 0 <= w < DIM and 0 < r < p):
                raise ValueError(f"line {lineno}: invalid entry")
            C[u, v, w] = r
            C[v, u, w] = (-r) % p
        return cls(p, C)

    def __eq__(self, o):
        return isinstance(o, ModPTensor) and self.p == o.p and np.array_equal(self.C, o.C)

    def bracket(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        return np.einsum("u,v,uvw->w", x % self.p, y % self.p, self.C) % self.p


def reduce_tensor(tensor: StructureTensor, p: int) -> ModPTensor:
    check_prime(p)
    C = np.zeros((DIM, DIM, DIM), dtype=np.int64)
    for u, v, w, x in tensor.items():
        r = reduce_rational(x, p)
        C[u, v, w] = r
        C[v, u, w] = (-r) % p
    C.setflags(write=False)
    return ModPTensor(p, C)


def reduce_vec(v: Vec78, p: int) -> np.ndarray:
    return np.array([reduce_rational(x, p) for x in v.coords], dtype=np.int64)


def verify_integrality(tensor: StructureTensor) -> SuiteReport:
    rep = SuiteReport("integrality")
    dens = tensor.denominators()
    rep.check(dens <= {1}, f"denominators {sorted(dens)}")
    return rep


def verify_modp(tp: ModPTensor, tensor: StructureTensor | None = None, threads: int = 1,
                samples: int = 100) -> SuiteReport:
    p, C = tp.p, tp.C
    rep = SuiteReport(f"modp-{p}")
    anti = (C + C.transpose(1, 0, 2)) % p
    for u, v in itertools.combinations_with_replacement(range(DIM), 2):
        rep.check(not anti[u, v].any() and (u != v or not C[u, u].any()),
                  f"mod {p}: [{basis_label(u)},{basis_label(v)}] not antisymmetric")
    bad = jacobi_sweep(C, modulus=p, threads=threads)
    rep.checks += DIM * (DIM - 1) * (DIM - 2) // 6
    for x, y, z, _ in bad[:20]:
        rep.failures.append(f"mod {p}: Jacobi fails at ({basis_label(x)},{basis_label(y)},{basis_label(z)})")
    for name, g in build_generators().items():
        R, Lr = operator_int_matrix(g)
        defects = invariance_defects(C, R, Lr, modulus=p)
        rep.checks += DIM * DIM
        for u, v in defects[:5]:
            rep.failures.append(f"mod {p}: {name} not an automorphism at ({basis_label(u)},{basis_label(v)})")
    if tensor is not None:
        # reduction commutes with the bracket
        C0, L = tensor.dense_int()
        rng = random.Random(p)
        for _ in range(samples):
            x = np.array([rng.randint(-5, 5) for _ in range(DIM)], dtype=np.int64)
            y = np.array([rng.randint(-5, 5) for _ in range(DIM)], dtype=np.int64)
            exact = np.einsum("u,v,uvw->w", x, y, C0)
            rep.check(np.array_equal(exact * pow(L, -1, p) % p, tp.bracket(x, y)),
                      f"mod {p}: reduction does not commute with the bracket")
    return rep


# ---------------------------------------------------------------------------
# characteristic 2


def rank_mod_p(rows: np.ndarray, p: int) -> int:
    m = np.array(rows, dtype=np.int64) % p
    rank = 0
    for col in range(m.shape[1]):
        piv = next((i for i in range(rank, m.shape[0]) if m[i, col]), None)
        if piv is None:
            continue
        m[[rank, piv]] = m[[piv, rank]]
        m[rank] = m[rank] * pow(int(m[rank, col]), -1, p) % p
        for i in range(m.shape[0]):
            if i != rank and m[i, col]:
                m[i] = (m[i] - m[i, col] * m[rank]) % p
        rank += 1
    return rank


IDEAL_LETTERS = {"a": QI + QJ, "b": QJ + QK, "c": QK + QI}
_W_POWERS = (Q1, Q_OMEGA, Q_OMEGA * Q_OMEGA)


def _qvec(t, q) -> np.ndarray:
    v = WVector.of(t, q).to_vec78()
    return reduce_vec(v, 2)


def _parse_letters(text: str) -> list[tuple[str, str]]:
    return [tuple(term.split("_")) for term in text.split("+")]


def _in_ideal(z: np.ndarray) -> bool:
    """The ideal is {(0, y, y)_t} in coordinates mod 2."""
    Z = (z % 2).reshape(NBLOCKS, 3, 2)
    return not Z[:, 0, :].any() and np.array_equal(Z[:, 1, :], Z[:, 2, :])


def _table_matches(t2: ModPTensor, m0: int, m1: int) -> bool:
    """Diagnostic: does the table hold with the factors multiplied on the left by w^m0, w^m1?"""
    for (x, y), entry in tables.CHAR2_TABLE.items():
        xv = _qvec(0, _W_POWERS[m0] * IDEAL_LETTERS[x])
        yv = _qvec(1, _W_POWERS[m1] * IDEAL_LETTERS[y])
        want = sum(_qvec(b, IDEAL_LETTERS[l]) for l, b in _parse_letters(entry)) % 2
        if not np.array_equal(t2.bracket(xv, yv), want):
            return False
    return True


def _letter_relabels(t2: ModPTensor) -> list[dict[str, str]]:
    """Diagnostic: permutations s of a, b, c (the same on every block) with
    [s(x)_0, s(y)_1] = s(z)_3 + s(w)_9 for each displayed [x_0, y_1] = z_3 + w_9."""
    found = []
    for perm in itertools.permutations("abc"):
        s = dict(zip("abc", perm))
        if all(np.array_equal(
                t2.bracket(_qvec(0, IDEAL_LETTERS[s[x]]), _qvec(1, IDEAL_LETTERS[s[y]])),
                sum(_qvec(b, IDEAL_LETTERS[s[l]]) for l, b in _parse_letters(entry)) % 2)
               for (x, y), entry in tables.CHAR2_TABLE.items()):
            found.append(s)
    return found


def char2_ideal(t2: ModPTensor) -> SuiteReport:
    if t2.p != 2:
        raise ValueError("char2_ideal needs the characteristic-2 reduction")
    rep = SuiteReport("char2")
    scale = 1  # the F4 product is the E6 product times -1/3, and -1/3 = 1 mod 2
    # W mod 2: the Hurwitz order 1, i, j, w per block maps onto (x, y, y) mod 2
    f4 = np.array([_qvec(t, q) for t in range(NBLOCKS) for q in (Q1, QI, QJ, Q_OMEGA)])
    rep.check(rank_mod_p(f4, 2) == 52, "Hurwitz lattice of W does not have rank 52 mod 2")
    ideal = np.array([_qvec(t, IDEAL_LETTERS[x]) for t in range(NBLOCKS) for x in "ab"])
    dim = rank_mod_p(ideal, 2)
    rep.check(dim == 26, f"ideal has dimension {dim}")
    rep.note(f"ideal dimension={dim}")
    for t in range(NBLOCKS):
        s = sum(_qvec(t, IDEAL_LETTERS[x]) for x in "abc") % 2
        rep.check(not s.any(), f"a+b+c != 0 at block {t}")
    rep.check(all(_in_ideal(r) for r in ideal), "ideal basis outside {(0,y,y)}")

    P = np.einsum("pu,qv,uvw->pqw", f4, ideal, t2.C, optimize=True) * scale % 2
    for i, j in itertools.product(range(len(f4)), range(len(ideal))):
        rep.check(_in_ideal(P[i, j]), f"[F4 basis {i}, ideal basis {j}] leaves the ideal")
    Q = np.einsum("pu,qv,uvw->pqw", f4, f4, t2.C, optimize=True) * scale % 2
    wmask = Q.reshape(len(f4), len(f4), NBLOCKS, 3, 2)
    rep.check(bool(np.all(wmask[..., 1, :] == wmask[..., 2, :])), "W mod 2 not closed")

    phases = [m for m in itertools.product(range(3), repeat=2) if _table_matches(t2, *m)]
    if phases != [(0, 0)]:
        rep.note("displayed table reproduced with left factors w^m0 x_0, w^m1 y_1 for (m0, m1) in "
                 f"{phases}")
    relabels = [s for s in _letter_relabels(t2) if any(k != v for k, v in s.items())]
    if relabels:
        rep.note("displayed table reproduced after renaming letters "
                 + "; ".join(", ".join(f"{k}->{v}" for k, v in s.items()) for s in relabels))
    g = build_generators()
    group = [word(g["a"] ** i, g["b"] ** j) for i in range(NBLOCKS) for j in range(3)]
    for (x, y), entry in sorted(tables.CHAR2_TABLE.items()):
        xv = WVector.of(0, IDEAL_LETTERS[x]).to_vec78()
        yv = WVector.of(1, IDEAL_LETTERS[y]).to_vec78()
        zv = Vec78.zero()
        for letter, block in _parse_letters(entry):
            zv = zv + WVector.of(block, IDEAL_LETTERS[letter]).to_vec78()
        for n, h in enumerate(group):
            got = t2.bracket(reduce_vec(apply(h, xv), 2), reduce_vec(apply(h, yv), 2)) * scale % 2
            want = reduce_vec(apply(h, zv), 2)
            label = f"[{x}_0, {y}_1] = {entry}" + (f" under a^{n // 3} b^{n % 3}" if n else "")
            rep.check(np.array_equal(got, want), f"mod 2: {label} fails")
    return rep


__all__ = [
    "CharacteristicError",
    "ModPTensor",
    "ModScalar",
    "char2_ideal",
    "check_prime",
    "rank_mod_p",
    "reduce_tensor",
    "verify_integrality",
    "verify_modp",
]
