"""The 78-dimensional real representation.

A vector is 13 blocks of three Eisenstein coordinates.  Its real coordinates
use the basis index ``6*t + 2*k + s`` (``s = 0`` for the unit 1 and ``s = 1``
for the unit w in coordinate ``k`` of block ``t``).

Operators act on row vectors from the right: block ``t`` of the image is the
(optionally conjugated) source block times a 3x3 matrix.  Words compose left
to right, and ``x^y`` means ``y^-1 x y``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .scalars import ONE, OMEGA, OMEGA_BAR, THETA, ZERO, EisScalar, fmt_rational

NBLOCKS = 13
DIM = 78
BLOCK_NAMES = "0123456789XET"

Matrix3 = tuple[tuple[EisScalar, EisScalar, EisScalar], ...]


def block_name(t: int) -> str:
    return BLOCK_NAMES[t % NBLOCKS]


def parse_block(name: str | int) -> int:
    if isinstance(name, int):
        return name % NBLOCKS
    name = name.strip()
    if name in BLOCK_NAMES and len(name) == 1:
        return BLOCK_NAMES.index(name)
    return int(name) % NBLOCKS


def basis_index(t: int, k: int, s: int) -> int:
    return 6 * t + 2 * k + s


def basis_label(u: int) -> str:
    t, r = divmod(u, 6)
    k, s = divmod(r, 2)
    coords = ["0", "0", "0"]
    coords[k] = "w" if s else "1"
    return f"({','.join(coords)})_{block_name(t)}"


# --------------------------------------------------------------------------
# vectors


class Vec78:
    """Exact element of V: 39 Eisenstein coordinates.  Immutable; hashable."""

    __slots__ = ("_x", "_hash")

    def __init__(self, coords: Sequence[Fraction]):
        """Build from the 78 real coordinates."""
        if len(coords) != DIM:
            raise ValueError("Vec78 needs 78 real coordinates")
        self._x = tuple(EisScalar(coords[2 * i], coords[2 * i + 1]) for i in range(DIM // 2))
        self._hash = None

    @classmethod
    def _from_eis(cls, xs: Sequence[EisScalar]) -> "Vec78":
        self = object.__new__(cls)
        self._x = tuple(xs)
        self._hash = None
        return self

    @property
    def coords(self) -> tuple[Fraction, ...]:
        """The 78 real coordinates."""
        out = []
        for x in self._x:
            out.append(x.a)
            out.append(x.b)
        return tuple(out)

    @property
    def eis(self) -> tuple[EisScalar, ...]:
        return self._x

    @classmethod
    def zero(cls) -> "Vec78":
        return cls._from_eis((ZERO,) * (DIM // 2))

    @classmethod
    def basis(cls, u: int) -> "Vec78":
        xs = [ZERO] * (DIM // 2)
        xs[u // 2] = OMEGA if u % 2 else ONE
        return cls._from_eis(xs)

    @classmethod
    def from_blocks(cls, blocks: Mapping[int, Sequence] | Sequence[Sequence]) -> "Vec78":
        """Build from ``{t: (x, y, z)}`` (or a full 13-list) of Eisenstein coordinates."""
        xs = [ZERO] * (DIM // 2)
        items = blocks.items() if isinstance(blocks, Mapping) else enumerate(blocks)
        for t, xyz in items:
            t = parse_block(t)
            for k, x in enumerate(xyz):
                xs[3 * t + k] = xs[3 * t + k] + EisScalar.coerce(x)
        return cls._from_eis(xs)

    @classmethod
    def of(cls, t, x, y, z) -> "Vec78":
        return cls.from_blocks({t: (x, y, z)})

    def block(self, t: int) -> tuple[EisScalar, EisScalar, EisScalar]:
        return self._x[3 * t: 3 * t + 3]

    def blocks(self) -> list[tuple[EisScalar, EisScalar, EisScalar]]:
        return [self._x[3 * t: 3 * t + 3] for t in range(NBLOCKS)]

    def support(self) -> set[int]:
        return {i // 3 for i, x in enumerate(self._x) if x}

    def __add__(self, o: "Vec78") -> "Vec78":
        return Vec78._from_eis([x + y for x, y in zip(self._x, o._x)])

    def __sub__(self, o: "Vec78") -> "Vec78":
        return Vec78._from_eis([x - y for x, y in zip(self._x, o._x)])

    def __neg__(self) -> "Vec78":
        return Vec78._from_eis([-x for x in self._x])

    def __mul__(self, r) -> "Vec78":
        if isinstance(r, (int, Fraction)):
            r = EisScalar.coerce(r)
            return Vec78._from_eis([x * r for x in self._x])
        return NotImplemented

    __rmul__ = __mul__

    def scale(self, s) -> "Vec78":
        """Multiply every Eisenstein coordinate by the complex scalar ``s``."""
        s = EisScalar.coerce(s)
        return Vec78._from_eis([x * s for x in self._x])

    def scale_blocks(self, scalars: Sequence) -> "Vec78":
        return Vec78._from_eis(
            [x * EisScalar.coerce(scalars[i // 3]) for i, x in enumerate(self._x)]
        )

    def hermitian_norm(self) -> Fraction:
        return sum((x.norm() for x in self._x), Fraction(0))

    def __bool__(self):
        return any(self._x)

    def __eq__(self, o):
        return isinstance(o, Vec78) and self._x == o._x

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self._x)
        return self._hash

    def __repr__(self):
        return f"Vec78({self})"

    def __str__(self):
        parts = []
        for t in range(NBLOCKS):
            b = self.block(t)
            if any(b):
                parts.append("(" + ",".join(x.short() for x in b) + ")_" + block_name(t))
        return "+".join(parts) if parts else "0"


# --------------------------------------------------------------------------
# 3x3 Eisenstein matrices


def mat_identity() -> Matrix3:
    return tuple(tuple(ONE if i == j else ZERO for j in range(3)) for i in range(3))


def mat_mul(A: Matrix3, B: Matrix3) -> Matrix3:
    B0, B1, B2 = B
    return tuple(
        tuple(r0 * B0[j] + r1 * B1[j] + r2 * B2[j] for j in range(3))
        for r0, r1, r2 in A
    )


def mat_conj(A: Matrix3) -> Matrix3:
    return tuple(tuple(x.conj() for x in row) for row in A)


def mat_transpose(A: Matrix3) -> Matrix3:
    return tuple(tuple(A[j][i] for j in range(3)) for i in range(3))


def mat_scale(A: Matrix3, s) -> Matrix3:
    s = EisScalar.coerce(s)
    return tuple(tuple(x * s for x in row) for row in A)


def mat_det(A: Matrix3) -> EisScalar:
    return (
        A[0][0] * (A[1][1] * A[2][2] - A[1][2] * A[2][1])
        - A[0][1] * (A[1][0] * A[2][2] - A[1][2] * A[2][0])
        + A[0][2] * (A[1][0] * A[2][1] - A[1][1] * A[2][0])
    )


def mat_inverse(A: Matrix3) -> Matrix3:
    det = mat_det(A)
    if not det:
        raise ZeroDivisionError("singular block matrix")
    inv_det = det.inverse()
    cof = [[ZERO] * 3 for _ in range(3)]
    for i in range(3):
        for j in range(3):
            rows = [r for r in range(3) if r != i]
            cols = [c for c in range(3) if c != j]
            m = A[rows[0]][cols[0]] * A[rows[1]][cols[1]] - A[rows[0]][cols[1]] * A[rows[1]][cols[0]]
            cof[i][j] = m if (i + j) % 2 == 0 else -m
    # inverse = adj / det, adj = cof^T
    return tuple(tuple(cof[j][i] * inv_det for j in range(3)) for i in range(3))


def mat_from_rows(rows) -> Matrix3:
    return tuple(tuple(EisScalar.coerce(x) for x in row) for row in rows)


def monomial(images: Sequence[tuple[int, object]]) -> Matrix3:
    """Matrix of ``(x0,x1,x2) -> (x[i0]*s0, x[i1]*s1, x[i2]*s2)``."""
    M = [[ZERO] * 3 for _ in range(3)]
    for out, (src, s) in enumerate(images):
        M[src][out] = EisScalar.coerce(s)
    return tuple(tuple(r) for r in M)


def diag(s0, s1, s2) -> Matrix3:
    return monomial([(0, s0), (1, s1), (2, s2)])


def is_unitary(A: Matrix3) -> bool:
    return mat_mul(A, mat_transpose(mat_conj(A))) == mat_identity()


def row_times(row: Sequence[EisScalar], M: Matrix3) -> tuple[EisScalar, EisScalar, EisScalar]:
    return tuple(row[0] * M[0][j] + row[1] * M[1][j] + row[2] * M[2][j] for j in range(3))


# --------------------------------------------------------------------------
# operators


@dataclass(frozen=True)
class BlockOperator:
    """Invertible operator given, per target block t, by (source, matrix, conjugate)."""

    source: tuple[int, ...]
    matrix: tuple[Matrix3, ...]
    conjugate: tuple[bool, ...]

    def __post_init__(self):
        if sorted(self.source) != list(range(NBLOCKS)):
            raise ValueError("source blocks must form a permutation of F13")

    @classmethod
    def identity(cls) -> "BlockOperator":
        return cls(tuple(range(NBLOCKS)), (mat_identity(),) * NBLOCKS, (False,) * NBLOCKS)

    def permutation(self) -> dict[int, int]:
        """Block map t -> image block."""
        return {s: t for t, s in enumerate(self.source)}

    def is_linear(self) -> bool:
        return not any(self.conjugate)

    def __call__(self, v: Vec78) -> Vec78:
        return apply(self, v)

    def __mul__(self, other: "BlockOperator") -> "BlockOperator":
        """``f * g`` is the word fg: f first, then g."""
        return compose(self, other)

    def __pow__(self, n: int) -> "BlockOperator":
        if n < 0:
            return inverse(self) ** (-n)
        out, base = BlockOperator.identity(), self
        while n:
            if n & 1:
                out = compose(out, base)
            base = compose(base, base)
            n >>= 1
        return out

    def conj_by(self, y: "BlockOperator") -> "BlockOperator":
        """``self^y = y^-1 self y``."""
        return compose(compose(inverse(y), self), y)

    def real_matrix(self) -> list[list[Fraction]]:
        """78x78 real matrix, row convention: ``v -> v @ R``."""
        rows = []
        for u in range(DIM):
            rows.append(list(apply(self, Vec78.basis(u)).coords))
        return rows

    def to_text(self) -> str:
        lines = []
        for t in range(NBLOCKS):
            entries = " ".join(str(x) for row in self.matrix[t] for x in row)
            flag = " conj" if self.conjugate[t] else ""
            lines.append(f"{block_name(t)} <- {block_name(self.source[t])}{flag} ; {entries}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "BlockOperator":
        src = [None] * NBLOCKS
        mats = [None] * NBLOCKS
        conj = [False] * NBLOCKS
        for line in text.strip().splitlines():
            head, _, body = line.partition(";")
            left, _, right = head.partition("<-")
            t = parse_block(left)
            rparts = right.split()
            src[t] = parse_block(rparts[0])
            conj[t] = len(rparts) > 1 and rparts[1] == "conj"
            vals = [EisScalar.parse(x) for x in body.split()]
            if len(vals) != 9:
                raise ValueError(f"block {t}: expected 9 entries")
            mats[t] = tuple(tuple(vals[3 * i: 3 * i + 3]) for i in range(3))
        if any(s is None for s in src):
            raise ValueError("operator text must define all 13 blocks")
        return cls(tuple(src), tuple(mats), tuple(conj))


def apply(op: BlockOperator, v: Vec78) -> Vec78:
    xs = v.eis
    out = []
    for t in range(NBLOCKS):
        s = 3 * op.source[t]
        row = xs[s: s + 3]
        if not any(row):
            out.extend((ZERO, ZERO, ZERO))
            continue
        if op.conjugate[t]:
            row = tuple(x.conj() for x in row)
        out.extend(row_times(row, op.matrix[t]))
    return Vec78._from_eis(out)


def compose(f: BlockOperator, g: BlockOperator) -> BlockOperator:
    """The operator 'f, then g'."""
    src, mats, conj = [], [], []
    for t in range(NBLOCKS):
        s = g.source[t]
        Mf = f.matrix[s]
        if g.conjugate[t]:
            Mf = mat_conj(Mf)
        src.append(f.source[s])
        mats.append(mat_mul(Mf, g.matrix[t]))
        conj.append(f.conjugate[s] != g.conjugate[t])
    return BlockOperator(tuple(src), tuple(mats), tuple(conj))


def inverse(f: BlockOperator) -> BlockOperator:
    src = [0] * NBLOCKS
    mats = [None] * NBLOCKS
    conj = [False] * NBLOCKS
    for t in range(NBLOCKS):
        s = f.source[t]
        Minv = mat_inverse(f.matrix[t])
        if f.conjugate[t]:
            Minv = mat_conj(Minv)
        src[s] = t
        mats[s] = Minv
        conj[s] = f.conjugate[t]
    return BlockOperator(tuple(src), tuple(mats), tuple(conj))


def operator_order(f: BlockOperator, bound: int) -> int:
    if bound < 1:
        raise ValueError("bound must be >= 1")
    ident = BlockOperator.identity()
    g = f
    for n in range(1, bound + 1):
        if g == ident:
            return n
        g = compose(g, f)
    raise ValueError(f"order exceeds bound {bound}")


def word(*ops: BlockOperator) -> BlockOperator:
    out = BlockOperator.identity()
    for op in ops:
        out = compose(out, op)
    return out


# --------------------------------------------------------------------------
# generators

W, WB = OMEGA, OMEGA_BAR
_T3 = THETA / 3

M1 = mat_scale(mat_from_rows([[W, 1, 1], [1, W, 1], [1, 1, W]]), _T3)
M2 = mat_scale(mat_from_rows([[1, 1, 1], [1, WB, W], [1, W, WB]]), _T3)
M3 = mat_scale(mat_from_rows([[W, W, W], [WB, W, 1], [WB, 1, W]]), _T3)
M4 = mat_scale(mat_from_rows([[1, W, W], [WB, WB, W], [WB, W, WB]]), _T3)

D_SCALARS = (ONE, W, ONE, W, W, W, WB, WB, ONE, W, WB, W, ONE)

# e fixes every block; per-block monomial action, (input coordinate, factor)
# for each output coordinate.
E_TABLE = {
    0: [(0, 1), (1, 1), (2, 1)],
    1: [(2, 1), (0, 1), (1, 1)],
    2: [(1, WB), (2, 1), (0, W)],
    3: [(2, WB), (0, W), (1, 1)],
    4: [(0, 1), (1, W), (2, WB)],
    5: [(1, 1), (2, 1), (0, 1)],
    6: [(1, W), (2, 1), (0, WB)],
    7: [(2, WB), (0, W), (1, 1)],
    8: [(2, W), (0, WB), (1, 1)],
    9: [(2, W), (0, WB), (1, 1)],
    10: [(0, 1), (1, W), (2, WB)],
    11: [(2, 1), (0, 1), (1, 1)],
    12: [(0, 1), (1, W), (2, WB)],
}


def _gen_a() -> BlockOperator:
    return BlockOperator(
        tuple((t - 1) % NBLOCKS for t in range(NBLOCKS)),
        (mat_identity(),) * NBLOCKS,
        (False,) * NBLOCKS,
    )


def _gen_b() -> BlockOperator:
    # v_t -> v_{3t} diag(w, wbar, wbar); 3^-1 = 9 mod 13
    return BlockOperator(
        tuple((9 * t) % NBLOCKS for t in range(NBLOCKS)),
        (diag(W, WB, WB),) * NBLOCKS,
        (False,) * NBLOCKS,
    )


def _gen_c() -> BlockOperator:
    I3 = mat_identity()
    # target: (source, matrix, conjugate)
    rules = {
        0: (0, monomial([(0, -1), (2, -1), (1, -1)]), True),
        1: (1, monomial([(0, -1), (2, -1), (1, -1)]), False),
        9: (3, monomial([(0, -W), (2, -WB), (1, -WB)]), False),
        3: (9, monomial([(0, -WB), (2, -W), (1, -W)]), False),
        10: (4, I3, True),
        4: (10, I3, True),
        12: (12, I3, True),
        2: (2, M1, True),
        8: (8, M2, True),
        6: (5, M3, True),
        5: (6, mat_transpose(M3), True),
        11: (7, M4, True),
        7: (11, mat_transpose(M4), True),
    }
    src = tuple(rules[t][0] for t in range(NBLOCKS))
    mats = tuple(rules[t][1] for t in range(NBLOCKS))
    conj = tuple(rules[t][2] for t in range(NBLOCKS))
    return BlockOperator(src, mats, conj)


def _gen_d() -> BlockOperator:
    return BlockOperator(
        tuple(range(NBLOCKS)),
        tuple(diag(s, s, s) for s in D_SCALARS),
        (False,) * NBLOCKS,
    )


def _gen_e() -> BlockOperator:
    return BlockOperator(
        tuple(range(NBLOCKS)),
        tuple(monomial(E_TABLE[t]) for t in range(NBLOCKS)),
        (False,) * NBLOCKS,
    )


_GENERATORS: dict[str, BlockOperator] | None = None


def build_generators() -> dict[str, BlockOperator]:
    global _GENERATORS
    if _GENERATORS is None:
        _GENERATORS = {
            "a": _gen_a(),
            "b": _gen_b(),
            "c": _gen_c(),
            "d": _gen_d(),
            "e": _gen_e(),
        }
    return dict(_GENERATORS)


def parse_word(text: str, gens: Mapping[str, BlockOperator] | None = None) -> BlockOperator:
    """Evaluate a group word such as ``"c^(a^-1) c c^a"`` or ``"(c^(a^-2) c^(a^5))^2 b"``.

    Grammar: product of factors; factor = atom (``^`` exponent)*; an exponent
    is an integer (power) or an atom (conjugation); atom = generator letter
    or parenthesised word.
    """
    gens = dict(gens or build_generators())
    toks = _tokenize(text)
    pos = 0

    def peek():
        return toks[pos] if pos < len(toks) else None

    def take():
        nonlocal pos
        tok = toks[pos]
        pos += 1
        return tok

    def parse_product():
        out = BlockOperator.identity()
        while peek() is not None and peek() not in (")",):
            out = compose(out, parse_factor())
        return out

    def parse_atom():
        tok = take()
        if tok == "(":
            val = parse_product()
            if take() != ")":
                raise ValueError("unbalanced parentheses in word")
            return val
        if tok in gens:
            return gens[tok]
        raise ValueError(f"unknown symbol {tok!r} in word")

    def parse_factor():
        val = parse_atom()
        while peek() == "^":
            take()
            tok = peek()
            if tok is not None and (tok.lstrip("-").isdigit()):
                val = val ** int(take())
            else:
                val = val.conj_by(parse_atom())
        return val

    result = parse_product()
    if pos != len(toks):
        raise ValueError(f"trailing input in word {text!r}")
    return result


def _tokenize(text: str) -> list[str]:
    toks = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace() or ch == ".":
            i += 1
        elif ch in "()^":
            toks.append(ch)
            i += 1
        elif ch == "-" or ch.isdigit():
            j = i + 1
            while j < len(text) and text[j].isdigit():
                j += 1
            toks.append(text[i:j])
            i = j
        else:
            toks.append(ch)
            i += 1
    return toks


# --------------------------------------------------------------------------
# subgroup D and the relation checks


def d_elements() -> dict[tuple[int, int, int], BlockOperator]:
    """All 27 elements d^i (d^a)^j (d^(a^2))^k keyed by (i, j, k)."""
    g = build_generators()
    a, d = g["a"], g["d"]
    gens = [d, d.conj_by(a), d.conj_by(a ** 2)]
    out = {}
    for i, j, k in itertools.product(range(3), repeat=3):
        out[(i, j, k)] = word(gens[0] ** i, gens[1] ** j, gens[2] ** k)
    return out


def block_scalars(op: BlockOperator) -> tuple[EisScalar, ...] | None:
    """Per-block scalars if ``op`` fixes every block and acts as a scalar on each."""
    out = []
    for t in range(NBLOCKS):
        M = op.matrix[t]
        if op.source[t] != t or op.conjugate[t]:
            return None
        s = M[0][0]
        if M != diag(s, s, s):
            return None
        out.append(s)
    return tuple(out)


def _scalar_name(s: EisScalar) -> str:
    return {ONE: "1", W: "w", WB: "wbar"}.get(s, str(s))


@dataclass
class Check:
    name: str
    ok: bool
    detail: str = ""


def verify_relations() -> list[Check]:
    """Defining relations of the five generators; the D-element in the e-relation is discovered."""
    g = build_generators()
    a, b, c, d, e = (g[x] for x in "abcde")
    I = BlockOperator.identity()
    checks: list[Check] = []

    def eq(name, lhs, rhs, detail=""):
        checks.append(Check(name, lhs == rhs, detail))

    for name, op, n in (("a^13", a, 13), ("b^3", b, 3), ("c^2", c, 2), ("d^3", d, 3), ("e^3", e, 3)):
        eq(f"{name}=1", op ** n, I)
        checks.append(Check(f"order({name[0]})={n}", operator_order(op, 20) == n))
    eq("a^b=a^3", a.conj_by(b), a ** 3)
    eq("e^b=e", e.conj_by(b), e)
    eq("d.d^(a^-1)=d^(a^-3)", d * d.conj_by(a ** -1), d.conj_by(a ** -3))

    D = d_elements()
    # e^a e = e^(a^3) delta^-1  =>  delta = (e^a e)^-1 e^(a^3)
    delta = inverse(e.conj_by(a) * e) * e.conj_by(a ** 3)
    found = [key for key, op in D.items() if op == delta]
    if found:
        i, j, k = found[0]
        sc = block_scalars(delta)
        detail = f"delta=d^{i}.(d^a)^{j}.(d^(a^2))^{k} scalars=({','.join(_scalar_name(s) for s in sc)})"
        checks.append(Check("e^a.e=e^(a^3).delta^-1, delta in D", True, detail))
    else:
        checks.append(Check("e^a.e=e^(a^3).delta^-1, delta in D", False, "no element of D matches"))

    # D elementary abelian of order 27
    distinct = set(D.values())
    dgens = [D[(1, 0, 0)], D[(0, 1, 0)], D[(0, 0, 1)]]
    abelian = all(x * y == y * x for x, y in itertools.combinations(dgens, 2))
    exp3 = all(x ** 3 == I for x in dgens)
    checks.append(Check("D elementary abelian of order 27", len(distinct) == 27 and abelian and exp3,
                        f"order={len(distinct)}"))

    # c on blocks: fixes 0,1,2,8,T; swaps 3<->9, 4<->X, 5<->6, 7<->E
    perm = c.permutation()
    expected = {0: 0, 1: 1, 2: 2, 8: 8, 12: 12, 3: 9, 9: 3, 4: 10, 10: 4, 5: 6, 6: 5, 7: 11, 11: 7}
    checks.append(Check("c block permutation (3,9)(4,X)(5,6)(7,E)", perm == expected))

    for name, op in g.items():
        unitary = all(is_unitary(M) for M in op.matrix)
        checks.append(Check(f"{name} blockwise unitary", unitary))
    return checks


def d_patterns_on_line(line: Sequence[int]) -> set[tuple[EisScalar, ...]]:
    """Scalar patterns of the elements of D restricted to the blocks of ``line``."""
    out = set()
    for op in d_elements().values():
        sc = block_scalars(op)
        out.add(tuple(sc[t] for t in line))
    return out


# --------------------------------------------------------------------------
# roots and the projective plane


def block_roots() -> list[tuple[EisScalar, EisScalar, EisScalar]]:
    """The 72 roots of one block."""
    units = [ONE, W, WB]
    roots = []
    for sign in (1, -1):
        for pos in range(3):
            for u in units:
                v = [ZERO, ZERO, ZERO]
                v[pos] = THETA * u * sign
                roots.append(tuple(v))
        for u0, u1, u2 in itertools.product(units, repeat=3):
            roots.append((u0 * sign, u1 * sign, u2 * sign))
    return roots


def root_set() -> frozenset[Vec78]:
    return frozenset(Vec78.of(t, *r) for t in range(NBLOCKS) for r in block_roots())


def verify_root_preservation(roots: Iterable[Vec78] | None = None) -> list[Check]:
    roots = frozenset(roots) if roots is not None else root_set()
    checks = [Check("|roots|=936", len(roots) == 936, f"count={len(roots)}")]
    for name, op in build_generators().items():
        escaping = [r for r in roots if apply(op, r) not in roots]
        checks.append(Check(f"{name} permutes roots", not escaping,
                            "" if not escaping else f"escaping: {escaping[0]}"))
    return checks


LINES: tuple[frozenset[int], ...] = tuple(
    frozenset({t, (t + 1) % 13, (t + 3) % 13, (t + 9) % 13}) for t in range(NBLOCKS)
)


def line_through(r: int, s: int) -> frozenset[int]:
    if r % 13 == s % 13:
        raise ValueError("line_through needs two distinct points")
    r, s = r % 13, s % 13
    for line in LINES:
        if r in line and s in line:
            return line
    raise AssertionError("projective plane axiom violated")


def collinear(r: int, s: int, t: int) -> bool:
    pts = {r % 13, s % 13, t % 13}
    return any(pts <= line for line in LINES)


def lines_fixed_by(op: BlockOperator) -> list[frozenset[int]]:
    perm = op.permutation()
    return [line for line in LINES if frozenset(perm[p] for p in line) == line]


def extraspecial_check() -> Check:
    """e^a and e^(a^2) on V_0 generate a group of order 27 with centre of order 3."""
    g = build_generators()
    a, e = g["a"], g["e"]
    gens = [e.conj_by(a).matrix[0], e.conj_by(a ** 2).matrix[0]]
    group = {mat_identity()}
    frontier = [mat_identity()]
    while frontier:
        nxt = []
        for x in frontier:
            for y in gens:
                z = mat_mul(x, y)
                if z not in group:
                    group.add(z)
                    nxt.append(z)
        frontier = nxt
    centre = [z for z in group if all(mat_mul(z, y) == mat_mul(y, z) for y in group)]
    ok = len(group) == 27 and len(centre) == 3
    return Check("<e^a,e^(a^2)> on V_0 is extraspecial 3^(1+2)", ok,
                 f"order={len(group)} centre={len(centre)}")
