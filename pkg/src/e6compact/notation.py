"""Text notation for vectors of V.

A vector is a signed sum of terms ``coef(x,y,z)_t``.  Scalars are products of
factors drawn from integers, ``w`` (omega), ``wb`` (omega bar) and ``t``
(theta = sqrt(-3)); juxtaposition or ``*`` multiplies.  The Unicode symbols
ω, ω̄ and θ are accepted too.

>>> str(parse_vec("(wb,1,1)_3-(1,wb,wb)_9"))
'(wb,1,1)_3+(-1,-wb,-wb)_9'
>>> parse_vec(str(parse_vec("t(1,w,0)_X"))) == parse_vec("t(1,w,0)_X")
True
"""

from __future__ import annotations

import re
from fractions import Fraction

from .rep78 import Vec78, parse_block
from .scalars import ONE, OMEGA, OMEGA_BAR, THETA, EisScalar

_FACTOR = re.compile(r"\d+(?:/\d+)?|wb|w|t")
_TERM = re.compile(r"([+-]?)\s*([^()+\-]*?)\s*\(([^)]*)\)_([0-9XET]+)")


def normalize(text: str) -> str:
    return (
        text.replace("ω̄", "wb")
        .replace("̄", "")
        .replace("ω", "w")
        .replace("θ", "t")
        .replace("−", "-")
        .replace(" ", "")
    )


def parse_scalar(text: str) -> EisScalar:
    """A sum of monomials, each a signed product of factors."""
    text = normalize(text)
    if not text:
        raise ValueError("empty scalar")
    parts = [p for p in re.split(r"(?=[+-])", text) if p]
    if len(parts) > 1:
        out = EisScalar(0)
        for p in parts:
            out = out + _parse_monomial(p)
        return out
    return _parse_monomial(text)


def _parse_monomial(text: str) -> EisScalar:
    sign = 1
    while text.startswith(("-", "+")):
        if text[0] == "-":
            sign = -sign
        text = text[1:]
    text = text.replace("*", "")
    if not text:
        return EisScalar.coerce(sign)
    pos = 0
    out = ONE
    for m in _FACTOR.finditer(text):
        if m.start() != pos:
            raise ValueError(f"bad scalar {text!r}")
        tok = m.group(0)
        if tok == "w":
            out = out * OMEGA
        elif tok == "wb":
            out = out * OMEGA_BAR
        elif tok == "t":
            out = out * THETA
        else:
            out = out * EisScalar.coerce(Fraction(tok))
        pos = m.end()
    if pos != len(text):
        raise ValueError(f"bad scalar {text!r}")
    return out * sign


def parse_vec(text: str) -> Vec78:
    text = normalize(text)
    if text in ("0", ""):
        return Vec78.zero()
    out = Vec78.zero()
    pos = 0
    for m in _TERM.finditer(text):
        if text[pos:m.start()].strip():
            raise ValueError(f"cannot parse {text[pos:m.start()]!r} in {text!r}")
        sign, coef, entries, block = m.groups()
        s = parse_scalar(coef) if coef else ONE
        if sign == "-":
            s = -s
        xs = [parse_scalar(x) * s for x in entries.split(",")]
        if len(xs) != 3:
            raise ValueError(f"expected three coordinates in {m.group(0)!r}")
        out = out + Vec78.of(parse_block(block), *xs)
        pos = m.end()
    if text[pos:].strip():
        raise ValueError(f"trailing text {text[pos:]!r} in {text!r}")
    return out
