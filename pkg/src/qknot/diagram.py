"""Enhanced Gauss diagrams and the combinatorial data of the state sum.

A diagram lists its ``2c`` chord endpoints in the order met when walking
round the circle from the basepoint.  Each endpoint is ``(j, eps)`` with
``j`` the 1-based crossing number and ``eps = +1`` for the overpass (outward
arrow) and ``-1`` for the underpass.  A blob ``(p, delta)`` is a ``K^(2 delta)``
mark sitting after the first ``p`` endpoints.
"""

from __future__ import annotations

import re
import warnings
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Iterator, Sequence

__all__ = [
    "EnhancedGaussDiagram",
    "DiagramError",
    "EGDSyntaxError",
    "NonIntegralLinking",
    "NonIntegralExponent",
    "RealizabilityWarning",
    "parse_egd",
    "convert_left_pointing",
    "s_vector",
    "linking_coefficients",
    "d_of_l",
    "c0_of_l",
    "a_mu_exponent",
    "level_walk",
    "valid_states",
    "builtin",
    "BUILTINS",
]


class DiagramError(ValueError):
    """The chord data does not describe an enhanced Gauss diagram."""


class EGDSyntaxError(DiagramError):
    def __init__(self, lineno: int, msg: str):
        self.lineno = lineno
        super().__init__(f"line {lineno}: {msg}")


class NonIntegralLinking(ArithmeticError):
    pass


class NonIntegralExponent(ArithmeticError):
    pass


class RealizabilityWarning(UserWarning):
    """Parity conditions that hold for every diagram of an actual knot."""


@dataclass(frozen=True)
class EnhancedGaussDiagram:
    sigma: tuple[int, ...]
    endpoints: tuple[tuple[int, int], ...]
    blobs: tuple[tuple[int, int], ...] = ()
    name: str | None = None
    left: tuple[int, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "sigma", tuple(int(s) for s in self.sigma))
        object.__setattr__(self, "endpoints", tuple((int(j), int(e)) for j, e in self.endpoints))
        object.__setattr__(self, "blobs", tuple(sorted(((int(p), int(d)) for p, d in self.blobs), key=lambda b: b[0])))
        object.__setattr__(self, "left", tuple(sorted(set(int(j) for j in self.left))))
        self._validate()

    def _validate(self):
        c = len(self.sigma)
        for j, s in enumerate(self.sigma, 1):
            if s not in (1, -1):
                raise DiagramError(f"sign of crossing {j} must be +1 or -1, got {s}")
        if len(self.endpoints) != 2 * c:
            raise DiagramError(f"{c} crossings need {2 * c} endpoints, got {len(self.endpoints)}")
        seen = set()
        for j, e in self.endpoints:
            if not 1 <= j <= c:
                raise DiagramError(f"endpoint refers to crossing {j}, expected 1..{c}")
            if e not in (1, -1):
                raise DiagramError(f"endpoint orientation must be +1 or -1, got {e}")
            if (j, e) in seen:
                role = "overpass" if e == 1 else "underpass"
                raise DiagramError(f"crossing {j} appears more than once as {role}")
            seen.add((j, e))
        for p, d in self.blobs:
            if not 0 <= p <= 2 * c:
                raise DiagramError(f"blob position {p} outside 0..{2 * c}")
            if d not in (1, -1):
                raise DiagramError(f"blob exponent must be +1 or -1, got {d}")
        for j in self.left:
            if not 1 <= j <= c:
                raise DiagramError(f"left-pointing flag on unknown crossing {j}")

    # basic data ----------------------------------------------------------
    @property
    def c(self) -> int:
        return len(self.sigma)

    @property
    def b(self) -> int:
        return len(self.blobs)

    @property
    def writhe(self) -> int:
        return sum(self.sigma)

    def position(self, j: int, eps: int) -> int:
        """0-based index of endpoint ``j+`` or ``j-`` in the sequence."""
        return self.endpoints.index((j, eps))

    def parity_warnings(self) -> list[str]:
        out = []
        for j in range(1, self.c + 1):
            p = abs(self.position(j, 1) - self.position(j, -1))
            if p % 2 == 0:
                out.append(f"p_{j} = {p} is even; p_j parity violates realizability")
        if (self.b + self.c) % 2:
            out.append(f"b + c = {self.b + self.c} is odd; parity violates realizability")
        return out

    def serialize(self) -> str:
        lines = []
        if self.name:
            lines.append(f"knot {self.name}")
        lines.append(f"crossings {self.c}")
        for j, s in enumerate(self.sigma, 1):
            lines.append(f"sign {j} {s:+d}")
        lines.append("sequence" + "".join(f" {j}{'o' if e == 1 else 'u'}" for j, e in self.endpoints))
        for p, d in self.blobs:
            lines.append(f"blob {p} {d:+d}")
        for j in self.left:
            lines.append(f"left {j}")
        return "\n".join(lines) + "\n"

    def _require_enhanced(self):
        if self.left:
            raise DiagramError("diagram still carries left-pointing flags; run convert_left_pointing first")


_TOKEN = re.compile(r"^(\d+)([ou])$")


def parse_egd(text: str, check: bool = True) -> EnhancedGaussDiagram:
    """Parse EGD text.  With ``check`` set, realizability parity problems are
    reported through :class:`RealizabilityWarning`."""
    name = None
    ncross = None
    signs: dict[int, int] = {}
    seq: list[tuple[int, int]] | None = None
    blobs: list[tuple[int, int]] = []
    left: list[int] = []

    def integer(tok, lineno, what):
        try:
            return int(tok)
        except ValueError:
            raise EGDSyntaxError(lineno, f"expected integer {what}, got {tok!r}") from None

    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, *args = line.split()
        if key == "knot":
            if len(args) != 1:
                raise EGDSyntaxError(lineno, "knot takes one name")
            name = args[0]
        elif key == "crossings":
            if len(args) != 1:
                raise EGDSyntaxError(lineno, "crossings takes one count")
            ncross = integer(args[0], lineno, "crossing count")
            if ncross < 0:
                raise EGDSyntaxError(lineno, "negative crossing count")
        elif key == "sign":
            if len(args) != 2:
                raise EGDSyntaxError(lineno, "sign takes a crossing and +1/-1")
            j = integer(args[0], lineno, "crossing")
            if j in signs:
                raise EGDSyntaxError(lineno, f"sign of crossing {j} given twice")
            signs[j] = integer(args[1], lineno, "sign")
        elif key == "sequence":
            if seq is not None:
                raise EGDSyntaxError(lineno, "sequence given twice")
            seq = []
            for tok in args:
                m = _TOKEN.match(tok)
                if not m:
                    raise EGDSyntaxError(lineno, f"bad endpoint token {tok!r} (expected like 3o or 3u)")
                seq.append((int(m.group(1)), 1 if m.group(2) == "o" else -1))
        elif key == "blob":
            if len(args) != 2:
                raise EGDSyntaxError(lineno, "blob takes a position and +1/-1")
            blobs.append((integer(args[0], lineno, "position"), integer(args[1], lineno, "exponent")))
        elif key == "left":
            if len(args) != 1:
                raise EGDSyntaxError(lineno, "left takes one crossing")
            left.append(integer(args[0], lineno, "crossing"))
        else:
            raise EGDSyntaxError(lineno, f"unknown keyword {key!r}")

    if ncross is None:
        raise DiagramError("missing 'crossings' line")
    if set(signs) != set(range(1, ncross + 1)):
        missing = sorted(set(range(1, ncross + 1)) - set(signs))
        raise DiagramError(f"signs missing for crossings {missing}" if missing else "sign given for unknown crossing")
    D = EnhancedGaussDiagram(
        sigma=tuple(signs[j] for j in range(1, ncross + 1)),
        endpoints=tuple(seq or ()),
        blobs=tuple(blobs),
        name=name,
        left=tuple(left),
    )
    if check:
        for msg in D.parity_warnings():
            warnings.warn(msg, RealizabilityWarning, stacklevel=2)
    return D


def convert_left_pointing(D: EnhancedGaussDiagram) -> EnhancedGaussDiagram:
    """Replace left-pointing crossing flags by a ``K^(2s)``/``K^(-2s)`` blob pair
    around the overpass endpoint."""
    blobs = list(D.blobs)
    for j in D.left:
        p = D.position(j, 1) + 1
        s = D.sigma[j - 1]
        blobs += [(p - 1, s), (p, -s)]
    return replace(D, blobs=tuple(blobs), left=())


# ---------------------------------------------------------------------------
# state-dependent quantities


def _prefix(D: EnhancedGaussDiagram, l: Sequence[int]) -> list[int]:
    # pre[i] = sum_{k<i} eps_k l_{j(k)}
    pre = [0]
    for j, e in D.endpoints:
        pre.append(pre[-1] + e * l[j - 1])
    return pre


def _check_state(D, l):
    if len(l) != D.c:
        raise ValueError(f"state has {len(l)} entries, diagram has {D.c} crossings")
    if any(x < 0 for x in l):
        raise ValueError("state entries must be non-negative")


def s_vector(D: EnhancedGaussDiagram, l: Sequence[int]) -> list[int]:
    """Level ``s(j)`` at which the underpass of crossing ``j`` starts."""
    _check_state(D, l)
    pre = _prefix(D, l)
    return [-pre[D.position(j, -1)] for j in range(1, D.c + 1)]


def _twice_linking(D: EnhancedGaussDiagram) -> list[int]:
    sig = [D.sigma[j - 1] for j, _ in D.endpoints]
    suffix = [0] * (len(sig) + 1)
    for i in range(len(sig) - 1, -1, -1):
        suffix[i] = suffix[i + 1] + sig[i]
    return [
        suffix[D.position(j, 1) + 1] - suffix[D.position(j, -1) + 1] - D.sigma[j - 1]
        for j in range(1, D.c + 1)
    ]


def linking_coefficients(D: EnhancedGaussDiagram) -> list[int]:
    """The integers ``q_j`` (half the signed crossings met from ``j+`` to ``j-``)."""
    twice = _twice_linking(D)
    for j, t in enumerate(twice, 1):
        if t % 2:
            raise NonIntegralLinking(f"q_{j} = {Fraction(t, 2)} is not an integer")
    return [t // 2 for t in twice]


def _twice_d(D, l):
    twice_q = _twice_linking(D)
    return sum(t * x for t, x in zip(twice_q, l)) - sum(d for _, d in D.blobs) - sum(D.sigma)


def d_of_l(D: EnhancedGaussDiagram, l: Sequence[int]) -> int:
    """Coefficient of ``mu`` in the exponent of ``q``."""
    _check_state(D, l)
    t = _twice_d(D, l)
    if t % 2:
        raise NonIntegralExponent(f"d(l) = {Fraction(t, 2)} for l = {tuple(l)}")
    return t // 2


def _twice_c0(D, l):
    pre = _prefix(D, l)
    eps = [e for _, e in D.endpoints]
    li = [l[j - 1] for j, _ in D.endpoints]
    sg = [D.sigma[j - 1] for j, _ in D.endpoints]
    t = -_twice_d(D, l)
    t -= 2 * sum(d * pre[p] for p, d in D.blobs)
    t -= sum(s * x for s, x in zip(D.sigma, l))
    t -= sum(sg[i] * eps[i] * li[i] * pre[i] for i in range(len(eps)))
    for j in range(1, D.c + 1):
        t += 2 * D.sigma[j - 1] * pre[D.position(j, -1)] * pre[D.position(j, 1)]
    return t


def c0_of_l(D: EnhancedGaussDiagram, l: Sequence[int]) -> int:
    """Constant term of the q-exponent ``c^mu(l) = d(l) mu + c0(l)``."""
    _check_state(D, l)
    t = _twice_c0(D, l)
    if t % 2:
        raise NonIntegralExponent(f"c0(l) = {Fraction(t, 2)} for l = {tuple(l)}")
    return t // 2


def a_mu_exponent(D: EnhancedGaussDiagram, l: Sequence[int]) -> tuple[int, int]:
    """The v-exponent ``a^mu(l)`` as ``(coefficient of mu, constant)``.

    Built with ``lambda = mu - 1`` exactly as the weight bookkeeping produces
    it, framing correction included.
    """
    _check_state(D, l)
    pre = _prefix(D, l)
    eps = [e for _, e in D.endpoints]
    li = [l[j - 1] for j, _ in D.endpoints]
    sg = [D.sigma[j - 1] for j, _ in D.endpoints]
    # a = A0 + A1 * lam
    a0 = -sum(eps[i] * sg[i] * li[i] * pre[i] for i in range(len(eps)))
    a0 -= 2 * sum(d * pre[p] for p, d in D.blobs)
    a1 = -sum(d for _, d in D.blobs)
    for j in range(1, D.c + 1):
        s = D.sigma[j - 1]
        sm, sp = pre[D.position(j, -1)], pre[D.position(j, 1)]
        a1 += s * (-1 + sm + sp)
        a0 += 2 * s * sm * sp
    return a1, a0 - a1


def level_walk(D: EnhancedGaussDiagram, l: Sequence[int]) -> tuple[bool, list[int]]:
    """Running level of the X/Y word read left to right from the basepoint."""
    _check_state(D, l)
    levels = [-x for x in _prefix(D, l)]
    return all(x >= 0 for x in levels) and levels[-1] == 0, levels


def valid_states(D: EnhancedGaussDiagram, max_each: int | None = None, max_total: int | None = None) -> Iterator[tuple[int, ...]]:
    """States with a valid level walk, ``l_j <= max_each`` and ``sum l <= max_total``.

    Crossings are assigned when first met along the sequence, so a branch is
    cut as soon as its level goes negative.  Output order is lexicographic in
    that assignment order, hence deterministic.
    """
    if max_each is None and max_total is None:
        raise ValueError("need a bound on the states")
    c = D.c
    cap_each = max_each if max_each is not None else max_total
    cap_total = max_total if max_total is not None else c * max_each
    l = [0] * c
    assigned = [False] * c
    eps = D.endpoints

    def walk(i, level, total):
        if i == len(eps):
            yield tuple(l)
            return
        j, e = eps[i]
        k = j - 1
        if assigned[k]:
            nxt = level - e * l[k]
            if nxt >= 0:
                yield from walk(i + 1, nxt, total)
            return
        assigned[k] = True
        hi = min(cap_each, cap_total - total)
        if e == 1:
            hi = min(hi, level)
        for x in range(hi + 1):
            l[k] = x
            yield from walk(i + 1, level - e * x, total + x)
        l[k] = 0
        assigned[k] = False

    yield from walk(0, 0, 0)


# ---------------------------------------------------------------------------
# built-in diagrams
#
# The figures behind these encodings are not available as data, so the blob
# positions and the figure-8 endpoint order were fixed by exhaustive search:
# the figure-8 order below is the only placement of 1+/1- with the basepoint
# before an overpass that gives s(1)=s(4)=l-m, s(2)=s(3)=0,
# q = (-1, 1, -1, 1), d = l+m+1 and c0 = -3/2 l^2 + lm - 1/2 m^2 - 5/2 l + 1/2 m - 1
# on the states (0, l, 0, m).  For the trefoil every blob position in 2..4
# gives c0 = 1 + l/2 + l^2/2; the blob sits just after the overpass of the
# left-pointing crossing 3.  Among the equivalent figure-8 blob placements
# (2,3), (2,4), (2,5), (3,6), (4,6), (5,6) the first is used.

BUILTINS = {
    "unknot": """\
knot unknot
crossings 0
sequence
""",
    "trefoil": """\
knot trefoil
crossings 3
sign 1 +1
sign 2 +1
sign 3 +1
sequence 1o 2u 3o 1u 2o 3u
blob 3 -1
""",
    "figure8": """\
knot figure8
crossings 4
sign 1 +1
sign 2 -1
sign 3 +1
sign 4 -1
sequence 1o 2u 4o 1u 3o 4u 2o 3u
blob 2 -1
blob 3 -1
""",
}


def builtin(name: str) -> EnhancedGaussDiagram:
    try:
        text = BUILTINS[name]
    except KeyError:
        raise KeyError(f"unknown built-in knot {name!r}; known: {sorted(BUILTINS)}") from None
    return parse_egd(text)
