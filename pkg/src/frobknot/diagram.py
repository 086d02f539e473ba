"""Link diagrams as PD codes, state resolutions, the cube of resolutions,
and a state-sum bracket oracle kept independent of the chain machinery.

Convention (fixed here, validated by the polynomial cross-checks): for a
crossing quadruple (a, b, c, d) the 0-smoothing joins a-b and c-d, the
1-smoothing joins a-d and b-c.  Crossing order is file order.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .laurent import Laurent


class PDError(ValueError):
    pass


@dataclass(frozen=True)
class LinkDiagram:
    crossings: tuple  # of (a, b, c, d) arc-label quadruples
    free_loops: int = 0
    n_plus: Optional[int] = None
    n_minus: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, "crossings", tuple(tuple(x) for x in self.crossings))
        seen: dict[int, int] = {}
        for q in self.crossings:
            if len(q) != 4:
                raise PDError("crossing needs exactly four arc labels")
            for a in q:
                if not isinstance(a, int) or a < 1:
                    raise PDError(f"bad arc label {a!r}")
                seen[a] = seen.get(a, 0) + 1
        for a, k in seen.items():
            if k != 2:
                raise PDError(f"arc {a} appears {k} times, expected 2")
        if seen and sorted(seen) != list(range(1, len(seen) + 1)):
            raise PDError("arc labels must be 1..arc_count with no gaps")
        object.__setattr__(self, "_arc_count", len(seen))

    @property
    def arc_count(self) -> int:
        return self._arc_count

    @property
    def n_crossings(self) -> int:
        return len(self.crossings)

    @property
    def oriented(self) -> bool:
        return self.n_plus is not None and self.n_minus is not None

    @property
    def writhe(self) -> int:
        if not self.oriented:
            raise PDError("diagram carries no orientation data")
        return self.n_plus - self.n_minus


def parse_pd(text: str) -> LinkDiagram:
    """Parse the PD file format.

    Lines: ``X a b c d`` per crossing, ``O`` per crossing-free loop,
    optional ``SIGNS + - ...`` (one token per crossing, takes precedence),
    optional ``ORIENT a b c ...`` (one line per component, cyclic edge
    order); ``#`` starts a comment.
    """
    crossings: list[tuple] = []
    loops = 0
    signs_tokens: Optional[list[str]] = None
    orient: list[list[int]] = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        key = parts[0].upper()
        if key == "X":
            if len(parts) != 5:
                raise PDError(f"malformed crossing line: {raw.strip()!r}")
            try:
                crossings.append(tuple(int(x) for x in parts[1:]))
            except ValueError:
                raise PDError(f"malformed crossing line: {raw.strip()!r}") from None
        elif key == "O":
            if len(parts) != 1:
                raise PDError(f"malformed loop line: {raw.strip()!r}")
            loops += 1
        elif key == "SIGNS":
            if signs_tokens is not None:
                raise PDError("duplicate SIGNS header")
            signs_tokens = parts[1:]
        elif key == "ORIENT":
            try:
                orient.append([int(x) for x in parts[1:]])
            except ValueError:
                raise PDError(f"malformed ORIENT line: {raw.strip()!r}") from None
        else:
            raise PDError(f"unrecognized line: {raw.strip()!r}")

    n_plus = n_minus = None
    if signs_tokens is not None:
        if len(signs_tokens) != len(crossings):
            raise PDError("SIGNS must list one sign per crossing")
        if any(t not in "+-" for t in signs_tokens):
            raise PDError("SIGNS tokens must be + or -")
        n_plus = signs_tokens.count("+")
        n_minus = signs_tokens.count("-")
    elif orient:
        n_plus, n_minus = _signs_from_orientation(crossings, orient)
    return LinkDiagram(tuple(crossings), loops, n_plus, n_minus)


def _signs_from_orientation(crossings, components) -> tuple[int, int]:
    succ: dict[int, int] = {}
    for comp in components:
        for i, a in enumerate(comp):
            if a in succ:
                raise PDError(f"arc {a} listed twice in ORIENT data")
            succ[a] = comp[(i + 1) % len(comp)]

    def direction(u, v):
        fwd = succ.get(u) == v
        bwd = succ.get(v) == u
        if fwd and bwd:
            raise PDError(
                "orientation is ambiguous on a two-arc component; use a SIGNS header"
            )
        if fwd:
            return 1
        if bwd:
            return -1
        raise PDError(f"ORIENT data does not connect arcs {u} and {v}")

    n_plus = n_minus = 0
    for a, b, c, d in crossings:
        sign = -direction(a, c) * direction(b, d)
        if sign > 0:
            n_plus += 1
        else:
            n_minus += 1
    return n_plus, n_minus


# ---------------------------------------------------------------------------
# Resolutions
# ---------------------------------------------------------------------------


def resolve(d: LinkDiagram, state: Sequence[int]) -> tuple:
    """Circle partition of the state: tuple of sorted arc-label tuples,
    ordered by minimal label.  Crossing-free loops appear as single
    synthetic negative labels."""
    if len(state) != d.n_crossings:
        raise PDError("state length does not match crossing count")
    parent = {a: a for a in range(1, d.arc_count + 1)}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[max(rx, ry)] = min(rx, ry)

    for (a, b, c, dd), bit in zip(d.crossings, state):
        if bit == 0:
            union(a, b)
            union(c, dd)
        elif bit == 1:
            union(a, dd)
            union(b, c)
        else:
            raise PDError("state bits must be 0 or 1")

    groups: dict[int, list[int]] = {}
    for a in range(1, d.arc_count + 1):
        groups.setdefault(find(a), []).append(a)
    circles = [tuple(sorted(g)) for g in groups.values()]
    circles += [(-(i + 1),) for i in range(d.free_loops)]
    circles.sort(key=lambda c: c[0])
    return tuple(circles)


@dataclass(frozen=True)
class CubeEdge:
    """One cube edge s1 -> s2 (single bit raised).

    kind is "merge" (src positions (i, j) -> dst position (k,)) or "split"
    (src (k,) -> dst (i, j)); positions index the ordered circle lists of
    the two states.  Untouched circles correspond by arc-set identity.
    """

    s1: tuple
    s2: tuple
    kind: str
    src: tuple
    dst: tuple


@dataclass(frozen=True)
class ResolutionCube:
    diagram: LinkDiagram
    circles: dict  # state -> ordered circle tuple
    edges: tuple  # of CubeEdge


def sign_exponent(s1: Sequence[int], s2: Sequence[int]) -> int:
    """Number of 1-bits of s1 strictly before the single raised position."""
    diff = [i for i in range(len(s1)) if s1[i] != s2[i]]
    if len(s1) != len(s2) or len(diff) != 1 or s1[diff[0]] != 0 or s2[diff[0]] != 1:
        raise PDError("states are not cube-adjacent")
    return sum(s1[: diff[0]])


def build_cube(d: LinkDiagram) -> ResolutionCube:
    n = d.n_crossings
    circles = {s: resolve(d, s) for s in itertools.product((0, 1), repeat=n)}
    edges = []
    for s1, c1 in circles.items():
        for pos in range(n):
            if s1[pos] == 1:
                continue
            s2 = s1[:pos] + (1,) + s1[pos + 1 :]
            c2 = circles[s2]
            gone = [i for i, c in enumerate(c1) if c not in c2]
            new = [j for j, c in enumerate(c2) if c not in c1]
            if len(gone) == 2 and len(new) == 1:
                edges.append(CubeEdge(s1, s2, "merge", tuple(gone), tuple(new)))
            elif len(gone) == 1 and len(new) == 2:
                edges.append(CubeEdge(s1, s2, "split", tuple(gone), tuple(new)))
            else:
                raise PDError(
                    f"edge {s1}->{s2} changes circles by ({len(gone)},{len(new)}); corrupt cube"
                )
    edges.sort(key=lambda e: (e.s1, e.s2))
    return ResolutionCube(d, circles, tuple(edges))


# ---------------------------------------------------------------------------
# Bracket oracle
# ---------------------------------------------------------------------------


def kauffman_bracket(d: LinkDiagram) -> Laurent:
    """State sum over all smoothings: sum of A^(#0 - #1) * delta^(circles - 1)
    with delta = -A^2 - A^(-2).  Direct enumeration, no cube involved."""
    delta = Laurent.from_dict({2: -1, -2: -1})
    total = Laurent.zero()
    n = d.n_crossings
    for s in itertools.product((0, 1), repeat=n):
        ones = sum(s)
        c = len(resolve(d, s))
        total = total + Laurent.monomial(n - 2 * ones) * delta**(c - 1)
    return total


def normalized_bracket(d: LinkDiagram) -> Laurent:
    """(-A^3)^(-writhe) times the bracket; an invariant of the oriented link."""
    w = d.writhe
    minus_a3 = Laurent.from_dict({3: -1})
    if w >= 0:
        corr = Laurent.one()
        for _ in range(w):
            corr = corr * Laurent.from_dict({-3: -1})
    else:
        corr = minus_a3 ** (-w)
    return corr * kauffman_bracket(d)


# ---------------------------------------------------------------------------
# Builders
# ---------------------------------------------------------------------------


def unknot_0() -> LinkDiagram:
    return LinkDiagram((), free_loops=1, n_plus=0, n_minus=0)


def unknot_1kink(sign: int) -> LinkDiagram:
    if sign == 1:
        return LinkDiagram(((1, 1, 2, 2),), n_plus=1, n_minus=0)
    if sign == -1:
        return LinkDiagram(((1, 2, 2, 1),), n_plus=0, n_minus=1)
    raise PDError("kink sign must be +1 or -1")


def hopf(sign: int) -> LinkDiagram:
    if sign == 1:
        return LinkDiagram(((1, 3, 2, 4), (2, 4, 1, 3)), n_plus=2, n_minus=0)
    if sign == -1:
        return LinkDiagram(((3, 2, 4, 1), (4, 1, 3, 2)), n_plus=0, n_minus=2)
    raise PDError("hopf sign must be +1 or -1")


def trefoil(hand: str) -> LinkDiagram:
    if hand == "left":
        return LinkDiagram(
            ((1, 4, 2, 5), (3, 6, 4, 1), (5, 2, 6, 3)), n_plus=0, n_minus=3
        )
    if hand == "right":
        return LinkDiagram(
            ((4, 2, 5, 1), (6, 4, 1, 3), (2, 6, 3, 5)), n_plus=3, n_minus=0
        )
    raise PDError("trefoil hand must be 'left' or 'right'")


def figure10_d1() -> LinkDiagram:
    """Two-crossing two-component diagram removable by one RII move."""
    return LinkDiagram(((1, 3, 2, 4), (2, 3, 1, 4)), n_plus=1, n_minus=1)


def figure10_d2() -> LinkDiagram:
    """Crossing-free two-component unlink."""
    return LinkDiagram((), free_loops=2, n_plus=0, n_minus=0)


def rii_pair(base: LinkDiagram, arc: int) -> LinkDiagram:
    """Push a finger of the named arc across itself: two extra crossings
    forming an empty bigon (one positive, one negative).  The result is
    planar-isotopic to the base diagram."""
    if not 1 <= arc <= base.arc_count:
        raise PDError(f"arc {arc} not present in diagram")
    n1, n2, n3, n4 = (base.arc_count + i for i in range(1, 5))
    crossings = []
    replaced = False
    for q in base.crossings:
        out = []
        for a in q:
            if a == arc and replaced:
                out.append(n4)
            else:
                if a == arc:
                    replaced = True
                out.append(a)
        crossings.append(tuple(out))
    crossings.append((arc, n3, n1, n4))
    crossings.append((n1, n3, n2, n2))
    np = base.n_plus + 1 if base.n_plus is not None else None
    nm = base.n_minus + 1 if base.n_minus is not None else None
    return LinkDiagram(tuple(crossings), base.free_loops, np, nm)


BUILDERS = {
    "unknot_0": unknot_0,
    "unknot_1kink_pos": lambda: unknot_1kink(1),
    "unknot_1kink_neg": lambda: unknot_1kink(-1),
    "hopf_pos": lambda: hopf(1),
    "hopf_neg": lambda: hopf(-1),
    "trefoil_left": lambda: trefoil("left"),
    "trefoil_right": lambda: trefoil("right"),
    "figure10_d1": figure10_d1,
    "figure10_d2": figure10_d2,
}
