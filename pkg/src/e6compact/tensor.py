"""Sparse exact structure constants over the canonical real basis of V."""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Iterable, Iterator, Mapping

import numpy as np

from .rep78 import DIM, Vec78
from .scalars import fmt_rational

HEADER = "e6-sc v1 basis=6t+2k+s seed=paper"


class StructureTensor:
    """c^w_{uv} stored for u < v only; every stored constant is nonzero.

    ``[e_u, e_v] = sum_w c[(u, v)][w] e_w`` with ``[e_v, e_u] = -[e_u, e_v]``.
    """

    def __init__(self, entries: Mapping[tuple[int, int], Mapping[int, Fraction]] | None = None,
                 header: str = HEADER):
        self.header = header
        self._c: dict[tuple[int, int], dict[int, Fraction]] = {}
        for (u, v), row in (entries or {}).items():
            if u >= v:
                raise ValueError("structure constants are stored for u < v only")
            row = {w: Fraction(x) for w, x in row.items() if x}
            if row:
                self._c[(u, v)] = row
        self._dense_cache = None

    @classmethod
    def from_brackets(cls, bracket) -> "StructureTensor":
        """Build from a callable ``bracket(u, v) -> Vec78`` on basis indices."""
        entries = {}
        for u in range(DIM):
            for v in range(u + 1, DIM):
                z = bracket(u, v)
                row = {w: c for w, c in enumerate(z.coords) if c}
                if row:
                    entries[(u, v)] = row
        return cls(entries)

    def basis_bracket(self, u: int, v: int) -> dict[int, Fraction]:
        if u == v:
            return {}
        if u < v:
            return dict(self._c.get((u, v), {}))
        return {w: -x for w, x in self._c.get((v, u), {}).items()}

    def items(self) -> Iterator[tuple[int, int, int, Fraction]]:
        for (u, v) in sorted(self._c):
            row = self._c[(u, v)]
            for w in sorted(row):
                yield u, v, w, row[w]

    def __len__(self):
        return sum(len(r) for r in self._c.values())

    def __eq__(self, other):
        return isinstance(other, StructureTensor) and self._c == other._c

    def first_difference(self, other: "StructureTensor") -> tuple[int, int, int, Fraction, Fraction] | None:
        keys = sorted(set(self._c) | set(other._c))
        for key in keys:
            a, b = self._c.get(key, {}), other._c.get(key, {})
            for w in sorted(set(a) | set(b)):
                x, y = a.get(w, Fraction(0)), b.get(w, Fraction(0))
                if x != y:
                    return key[0], key[1], w, x, y
        return None

    def denominators(self) -> set[int]:
        return {x.denominator for row in self._c.values() for x in row.values()}

    def is_integral(self) -> bool:
        return self.denominators() <= {1}

    def common_denominator(self) -> int:
        return lcm(*self.denominators()) if self._c else 1

    def dense_int(self) -> tuple[np.ndarray, int]:
        """``(C, L)`` with ``C[u, v, w] = L * c^w_{uv}`` as int64, full antisymmetric array."""
        if self._dense_cache is None:
            L = self.common_denominator()
            C = np.zeros((DIM, DIM, DIM), dtype=np.int64)
            for u, v, w, x in self.items():
                n = x * L
                if abs(n.numerator) > 2 ** 20:
                    raise OverflowError("structure constant too large for the int64 path")
                C[u, v, w] = int(n)
                C[v, u, w] = -int(n)
            C.setflags(write=False)
            self._dense_cache = (C, L)
        return self._dense_cache

    def max_abs(self) -> Fraction:
        return max((abs(x) for *_, x in self.items()), default=Fraction(0))

    def scaled(self, r) -> "StructureTensor":
        r = Fraction(r)
        return StructureTensor({k: {w: x * r for w, x in row.items()} for k, row in self._c.items()},
                               header=self.header)

    # -- text round trip ----------------------------------------------------

    def to_text(self) -> str:
        lines = [self.header]
        for u, v, w, x in self.items():
            lines.append(f"{u} {v} {w} {fmt_rational(x)}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "StructureTensor":
        lines = text.splitlines()
        if not lines or not lines[0].startswith("e6-sc v1"):
            raise ValueError("not an e6-sc v1 file")
        entries: dict[tuple[int, int], dict[int, Fraction]] = {}
        prev = None
        for lineno, line in enumerate(lines[1:], start=2):
            if not line.strip():
                continue
            parts = line.split()
            if len(parts) != 4:
                raise ValueError(f"line {lineno}: expected 'u v w n[/d]'")
            u, v, w = (int(p) for p in parts[:3])
            x = Fraction(parts[3])
            if not (0 <= u < v < DIM and 0 <= w < DIM) or x == 0:
                raise ValueError(f"line {lineno}: invalid entry")
            if prev is not None and (u, v, w) <= prev:
                raise ValueError(f"line {lineno}: entries not sorted by (u, v, w)")
            prev = (u, v, w)
            entries.setdefault((u, v), {})[w] = x
        return cls(entries, header=lines[0])

    def save(self, path) -> None:
        with open(path, "w", encoding="ascii", newline="\n") as fh:
            fh.write(self.to_text())

    @classmethod
    def load(cls, path) -> "StructureTensor":
        with open(path, encoding="ascii") as fh:
            return cls.from_text(fh.read())


def real_coords(v: Vec78) -> tuple[Fraction, ...]:
    return v.coords


def bracket_eval(x: Vec78, y: Vec78, tensor: StructureTensor) -> Vec78:
    """Real-bilinear evaluation of ``[x, y]``."""
    xc = [(u, c) for u, c in enumerate(x.coords) if c]
    yc = [(v, c) for v, c in enumerate(y.coords) if c]
    out = [Fraction(0)] * DIM
    for u, cu in xc:
        for v, cv in yc:
            if u == v:
                continue
            s = cu * cv
            for w, c in tensor.basis_bracket(u, v).items():
                out[w] += s * c
    return Vec78(out)


def combine(pairs: Iterable[tuple[Fraction, Vec78]]) -> Vec78:
    out = Vec78.zero()
    for r, v in pairs:
        out = out + v * r
    return out
