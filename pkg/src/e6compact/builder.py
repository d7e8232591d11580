"""Construct the bracket from two seed products, and again from the displayed product table.

Products are tracked on *monomial keys* ``(t, k, m)``: the vector with
``w**m`` in coordinate ``k`` of block ``t``.  The bracket is only real
bilinear, so all three phases are kept; a, b, d, e map keys to keys.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping

import numpy as np

from . import tables
from .notation import parse_vec
from .rep78 import (
    DIM,
    NBLOCKS,
    BlockOperator,
    Vec78,
    apply,
    basis_label,
    block_scalars,
    build_generators,
    d_elements,
    line_through,
)
from .scalars import ONE, OMEGA, OMEGA_BAR, ZERO, EisScalar
from .tensor import StructureTensor

log = logging.getLogger(__name__)

Key = tuple[int, int, int]
PHASES = (ONE, OMEGA, OMEGA_BAR)
ALL_KEYS: tuple[Key, ...] = tuple(itertools.product(range(NBLOCKS), range(3), range(3)))


class ConflictError(RuntimeError):
    pass


class IncompleteError(RuntimeError):
    pass


class MismatchError(RuntimeError):
    pass


def key_vec(key: Key) -> Vec78:
    t, k, m = key
    xyz = [ZERO, ZERO, ZERO]
    xyz[k] = PHASES[m]
    return Vec78.of(t, *xyz)


def as_signed_key(v: Vec78) -> tuple[int, Key] | None:
    """``(sign, key)`` if ``v = sign * key_vec(key)``, else None."""
    nz = [(i, x) for i, x in enumerate(v.eis) if x]
    if len(nz) != 1:
        return None
    i, x = nz[0]
    t, k = divmod(i, 3)
    for sign in (1, -1):
        for m, ph in enumerate(PHASES):
            if x == ph * sign:
                return sign, (t, k, m)
    return None


def key_label(key: Key) -> str:
    t, k, m = key
    xyz = ["0", "0", "0"]
    xyz[k] = ("1", "w", "wb")[m]
    return f"({','.join(xyz)})_{'0123456789XET'[t]}"


@dataclass
class PartialProductTable:
    """Products on ordered key pairs, with how each was obtained."""

    values: dict[tuple[Key, Key], Vec78] = field(default_factory=dict)
    provenance: dict[tuple[Key, Key], str] = field(default_factory=dict)

    def record(self, x: Key, y: Key, z: Vec78, tag: str) -> bool:
        """Store ``[x, y] = z``; False if already known.  Inconsistency raises."""
        old = self.values.get((x, y))
        if old is not None:
            if old != z:
                raise ConflictError(
                    f"conflict at [{key_label(x)}, {key_label(y)}]: "
                    f"{old} ({self.provenance[(x, y)]}) vs {z} ({tag})"
                )
            return False
        self.values[(x, y)] = z
        self.provenance[(x, y)] = tag
        return True

    def __len__(self):
        return len(self.values)

    def __contains__(self, pair):
        return pair in self.values

    def __getitem__(self, pair):
        return self.values[pair]

    def missing_pairs(self) -> list[tuple[Key, Key]]:
        return [(x, y) for x in ALL_KEYS for y in ALL_KEYS if (x, y) not in self.values]


def seed_products(seed_text: Iterable[tuple[str, str, str]] | None = None) -> PartialProductTable:
    """The two seed products plus the zero products inside each block."""
    table = PartialProductTable()
    for xs, ys, zs in (seed_text or tables.SEEDS):
        sx = as_signed_key(parse_vec(xs))
        sy = as_signed_key(parse_vec(ys))
        if sx is None or sy is None:
            raise ValueError("seed factors must be monomial basis keys")
        z = parse_vec(zs) * (sx[0] * sy[0])
        table.record(sx[1], sy[1], z, "seed")
    for t in range(NBLOCKS):
        for k1, m1, k2, m2 in itertools.product(range(3), repeat=4):
            table.record((t, k1, m1), (t, k2, m2), Vec78.zero(), "same-block-zero")
    return table


def _key_images(op: BlockOperator) -> dict[Key, tuple[int, Key]]:
    out = {}
    for key in ALL_KEYS:
        img = as_signed_key(apply(op, key_vec(key)))
        if img is None:
            raise ValueError("propagation needs operators mapping keys to signed keys")
        out[key] = img
    return out


def propagate(seeds: PartialProductTable,
              generators: Mapping[str, BlockOperator] | None = None) -> PartialProductTable:
    """Close ``seeds`` under the generators and anti-symmetry."""
    if generators is None:
        g = build_generators()
        generators = {name: g[name] for name in "abde"}
    images = {name: _key_images(op) for name, op in generators.items()}
    table = PartialProductTable(dict(seeds.values), dict(seeds.provenance))
    frontier = sorted(table.values)
    while frontier:
        new: list[tuple[Key, Key]] = []
        for x, y in frontier:
            z = table.values[(x, y)]
            if table.record(y, x, -z, "antisymmetry"):
                new.append((y, x))
            for name, op in generators.items():
                sx, gx = images[name][x]
                sy, gy = images[name][y]
                gz = apply(op, z)
                if sx * sy < 0:
                    gz = -gz
                if table.record(gx, gy, gz, f"generator-image:{name}"):
                    new.append((gx, gy))
        frontier = sorted(new)
    missing = table.missing_pairs()
    if missing:
        shown = ", ".join(f"[{key_label(x)},{key_label(y)}]" for x, y in missing[:5])
        raise IncompleteError(f"{len(missing)} pairs unassigned, e.g. {shown}")
    check_bilinear(table)
    return table


def check_bilinear(table: PartialProductTable) -> None:
    """wbar = -1 - w: the phase-2 entries must follow from phases 0 and 1."""
    for x in ALL_KEYS:
        for y in ALL_KEYS:
            if x[2] != 2 and y[2] != 2:
                continue
            xs = [(x, 1)] if x[2] != 2 else [((x[0], x[1], 0), -1), ((x[0], x[1], 1), -1)]
            ys = [(y, 1)] if y[2] != 2 else [((y[0], y[1], 0), -1), ((y[0], y[1], 1), -1)]
            expect = Vec78.zero()
            for (kx, sx), (ky, sy) in itertools.product(xs, ys):
                term = table.values[(kx, ky)]
                expect = expect + (term if sx * sy > 0 else -term)
            if expect != table.values[(x, y)]:
                raise ConflictError(
                    f"bilinearity conflict at [{key_label(x)}, {key_label(y)}]: "
                    f"{table.values[(x, y)]} vs {expect}"
                )


def to_tensor(table: PartialProductTable) -> StructureTensor:
    """Real basis vector ``6t+2k+s`` is the key ``(t, k, s)``."""

    def bracket(u, v):
        return table.values[(_basis_key(u), _basis_key(v))]

    return StructureTensor.from_brackets(bracket)


def _basis_key(u: int) -> Key:
    t, r = divmod(u, 6)
    return (t, r // 2, r % 2)


def build_propagated(seed_text=None) -> StructureTensor:
    return to_tensor(propagate(seed_products(seed_text)))


# ---------------------------------------------------------------------------
# product-table route


def e6_table_entries(errata: bool = False) -> dict[tuple[Key, Key], Vec78]:
    """The 54 displayed entries as ``{(row key, column key): value}``.

    ``errata=True`` uses :func:`tables.e6_table_errata` instead of the printed grid.
    """
    grid = tables.e6_table_errata() if errata else tables.E6_TABLE
    out = {}
    for (r, s), rows in grid.items():
        for i, row in enumerate(rows):
            for j, text in enumerate(row):
                out[((r, i, 0), (s, j, 0))] = parse_vec(text)
    return out


def e6_table_orientation() -> str:
    """'row-left' if rows are the left factor (consistent with the first seed)."""
    xs, ys, zs = tables.SEEDS[0]
    seed = parse_vec(zs)
    entry = e6_table_entries()[((0, 0, 0), (1, 0, 0))]
    if entry == seed:
        return "row-left"
    if entry == -seed:
        return "row-right"
    raise MismatchError("product table corner entry disagrees with the seed product")


def table_mode_table(errata: bool = False) -> PartialProductTable:
    orientation = e6_table_orientation()
    g = build_generators()
    a = g["a"]
    D = list(d_elements().values())
    dscal = [block_scalars(op) for op in D]
    table = PartialProductTable()
    for t in range(NBLOCKS):
        for k1, m1, k2, m2 in itertools.product(range(3), repeat=4):
            table.record((t, k1, m1), (t, k2, m2), Vec78.zero(), "same-block-zero")
    entries = e6_table_entries(errata)
    # phases through D
    phased = PartialProductTable()
    for (x, y), z in sorted(entries.items()):
        if orientation == "row-right":
            x, y = y, x
        for op, sc in zip(D, dscal):
            mx = PHASES.index(sc[x[0]])
            my = PHASES.index(sc[y[0]])
            phased.record((x[0], x[1], mx), (y[0], y[1], my), apply(op, z), "e6-table+D")
    # translate by powers of a
    for n in range(NBLOCKS):
        an = a ** n
        for (x, y), z in sorted(phased.values.items()):
            tx = ((x[0] + n) % NBLOCKS, x[1], x[2])
            ty = ((y[0] + n) % NBLOCKS, y[1], y[2])
            zz = apply(an, z)
            table.record(tx, ty, zz, "e6-table+D+a")
            table.record(ty, tx, -zz, "antisymmetry")
    missing = table.missing_pairs()
    if missing:
        raise IncompleteError(f"table route leaves {len(missing)} pairs unassigned")
    check_bilinear(table)
    return table


def table_mode_build(errata: bool = False) -> StructureTensor:
    return to_tensor(table_mode_table(errata))


def build(mode: str = "both", seed_text=None, errata: bool = False) -> StructureTensor:
    """Build the canonical tensor; ``mode`` is 'propagate', 'table' or 'both'."""
    if mode not in ("propagate", "table", "both"):
        raise ValueError(f"unknown build mode {mode!r}")
    if mode == "table":
        return table_mode_build(errata)
    tensor = build_propagated(seed_text)
    if mode == "both":
        other = table_mode_build(errata)
        diff = tensor.first_difference(other)
        if diff is not None:
            u, v, w, x, y = diff
            raise MismatchError(
                f"propagation and the product table differ at [{basis_label(u)}, {basis_label(v)}] "
                f"coefficient of {basis_label(w)}: {x} vs {y} "
                f"(product table orientation {e6_table_orientation()})"
            )
    return tensor


_CANONICAL: StructureTensor | None = None


def canonical_tensor() -> StructureTensor:
    """The propagated tensor, built once per process."""
    global _CANONICAL
    if _CANONICAL is None:
        _CANONICAL = build_propagated()
    return _CANONICAL


# ---------------------------------------------------------------------------
# invariance


def operator_int_matrix(op: BlockOperator) -> tuple[np.ndarray, int]:
    """``(R, L)``: integer 78x78 matrix with ``L * real_matrix(op) = R``."""
    rows = op.real_matrix()
    L = 1
    for row in rows:
        for x in row:
            L = L * x.denominator // np.gcd(L, x.denominator)
    R = np.array([[int(x * L) for x in row] for row in rows], dtype=np.int64)
    return R, int(L)


@dataclass
class InvarianceReport:
    generator: str
    checks: int
    failures: list[tuple[int, int]]

    @property
    def ok(self) -> bool:
        return not self.failures


def verify_invariance(tensor: StructureTensor, g: BlockOperator, name: str = "g",
                      modulus: int | None = None) -> InvarianceReport:
    """``[g(u), g(v)] = g([u, v])`` on all 78x78 basis pairs, exactly (or mod ``modulus``)."""
    C, _ = tensor.dense_int()
    R, Lr = operator_int_matrix(g)
    return InvarianceReport(name, DIM * DIM, invariance_defects(C, R, Lr, modulus))


def invariance_defects(C: np.ndarray, R: np.ndarray, Lr: int,
                       modulus: int | None = None) -> list[tuple[int, int]]:
    """Basis pairs where ``[g(u), g(v)] != g([u, v])`` for the real matrix ``R / Lr``."""
    # Lr^2 [gu, gv] = sum R[u,a] R[v,b] C[a,b,w];  Lr^2 g[u,v] = Lr * sum C[u,v,x] R[x,w]
    t1 = np.tensordot(R, C, axes=([1], [0]))  # u, b, w
    lhs = np.einsum("vb,ubw->uvw", R, t1, optimize=True)
    rhs = Lr * np.tensordot(C, R, axes=([2], [0]))
    diff = lhs - rhs
    if modulus is not None:
        diff = diff % modulus
    bad = np.argwhere(np.any(diff != 0, axis=2))
    return [tuple(map(int, p)) for p in bad]
