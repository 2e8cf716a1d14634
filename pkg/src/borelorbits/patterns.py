"""Signed patterns: real Borel orbits on quadratic forms of fixed rank.

A rank-r quadratic form in n variables, up to the action of the real upper
triangular group, is encoded by a pattern on n positions: r of them are
active, an active position is either a signed square term (+ or -) or one
endpoint of an arc pairing two positions into a cross term, and the rest are
zero.  Complex orbits drop the signs (bare dots); arcs may cross or nest
freely.

The symmetric group acts by permuting positions.  For an adjacent
transposition the span decomposition only depends on the two entries at
positions i, i+1:

    + +  or  - -                N0   (span is that single orbit)
    + -  or  - +                N2   (the two sign orders are the open pair,
                                      the arc joining i, i+1 is their lower)
    arc between i and i+1       N2   (the lower orbit of the above span)
    0 0                         P
    anything else               U    (the orbit and its transposed partner)

Which member of a U-pair is open is decided by the ranks of the upper-left
corner submatrices of the corresponding form, the invariant separating
orbits; the open orbit dominates its partner.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass

from .orbits import EdgeType, Orbit, ReflectionTable, Span
from .rootdata import CartanSpec

ZERO = "0"
PLUS = "+"
MINUS = "-"
DOT = "•"

_ENTRY_ORDER = {ZERO: 0, PLUS: 1, MINUS: 2, DOT: 3}
_SORT_TR = str.maketrans(ZERO + PLUS + MINUS + DOT, "0123")
_SIGNS = (PLUS, MINUS)

_ARC_SUFFIX_CACHE: dict[tuple[tuple[int, int], ...], str] = {}


def _arc_suffix(arcs: tuple[tuple[int, int], ...]) -> str:
    """Leading-space arc list, e.g. " [1,2][3,5]"; memoized, arcs repeat a lot."""
    suffix = _ARC_SUFFIX_CACHE.get(arcs)
    if suffix is None:
        suffix = " " + "".join(f"[{j},{k}]" for j, k in arcs)
        _ARC_SUFFIX_CACHE[arcs] = suffix
    return suffix


@dataclass(frozen=True, slots=True)
class SignedPattern:
    """Entries over {0, +, -, dot} plus disjoint arcs between dot positions.

    Positions and arcs are 1-based.  The rank of the encoded form is the
    number of active (non-zero) positions.
    """

    entries: tuple[str, ...]
    arcs: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        for e in self.entries:
            if e not in _ENTRY_ORDER:
                raise ValueError(f"invalid pattern entry {e!r}")
        n = len(self.entries)
        arcs = tuple(sorted((min(j, k), max(j, k)) for j, k in self.arcs))
        object.__setattr__(self, "arcs", arcs)
        used: set[int] = set()
        for j, k in arcs:
            if j == k:
                raise ValueError("arc endpoints must differ")
            for p in (j, k):
                if not 1 <= p <= n:
                    raise ValueError(f"arc endpoint {p} out of range 1..{n}")
                if p in used:
                    raise ValueError(f"position {p} lies on two arcs")
                used.add(p)
                if self.entries[p - 1] != DOT:
                    raise ValueError(f"arc endpoint {p} must be a dot entry")
        # Bare dots (complex mode) cannot be mixed with signs.
        if any(e in _SIGNS for e in self.entries):
            for p, e in enumerate(self.entries, start=1):
                if e == DOT and p not in used:
                    raise ValueError(f"bare dot at {p} in a signed pattern")

    @classmethod
    def _unchecked(cls, entries: tuple[str, ...], arcs: tuple[tuple[int, int], ...]):
        # Internal fast path for operations that preserve validity; arcs must
        # already be normalized (each pair ascending, pairs sorted).
        self = object.__new__(cls)
        object.__setattr__(self, "entries", entries)
        object.__setattr__(self, "arcs", arcs)
        return self

    @property
    def n(self) -> int:
        return len(self.entries)

    @property
    def rank(self) -> int:
        return sum(1 for e in self.entries if e != ZERO)

    @property
    def is_maximal_rank(self) -> bool:
        """Maximal-rank orbits are exactly the arc-free patterns."""
        return not self.arcs

    @property
    def is_open(self) -> bool:
        """Open orbits are sign tuples occupying the leading positions."""
        r = self.rank
        return not self.arcs and all(
            (e in _SIGNS) == (p <= r) for p, e in enumerate(self.entries, start=1)
        )

    @property
    def is_open_complex(self) -> bool:
        """Complex counterpart: bare dots occupying the leading positions."""
        r = self.rank
        return not self.arcs and all(
            (e == DOT) == (p <= r) for p, e in enumerate(self.entries, start=1)
        )

    def sign_counts(self) -> tuple[int, int]:
        return (
            sum(1 for e in self.entries if e == PLUS),
            sum(1 for e in self.entries if e == MINUS),
        )

    def arc_partner(self, p: int) -> int | None:
        for j, k in self.arcs:
            if p == j:
                return k
            if p == k:
                return j
        return None

    # -- serialization -----------------------------------------------------

    def to_text(self) -> str:
        body = "".join(self.entries)
        if not self.arcs:
            return body
        return body + _arc_suffix(self.arcs)

    @classmethod
    def from_text(cls, text: str) -> "SignedPattern":
        parts = text.split(None, 1)
        if not parts:
            raise ValueError("empty pattern text")
        entries = tuple(parts[0])
        arcs = []
        if len(parts) == 2:
            rest = parts[1].strip()
            if not (rest.startswith("[") and rest.endswith("]")):
                raise ValueError(f"malformed arc list {rest!r}")
            for chunk in rest[1:-1].split("]["):
                j, k = chunk.split(",")
                arcs.append((int(j), int(k)))
        return cls(entries=entries, arcs=tuple(arcs))

    def sort_key(self):
        return "".join(self.entries).translate(_SORT_TR), self.arcs

    # -- the symmetric-group action ------------------------------------------

    def apply_transposition(self, i: int) -> "SignedPattern":
        """Swap positions i and i+1, carrying arcs through the swap."""
        self._check_position(i)
        entries = list(self.entries)
        entries[i - 1], entries[i] = entries[i], entries[i - 1]

        def relabel(p: int) -> int:
            if p == i:
                return i + 1
            if p == i + 1:
                return i
            return p

        arcs = []
        for j, k in self.arcs:
            j, k = relabel(j), relabel(k)
            arcs.append((j, k) if j < k else (k, j))
        arcs.sort()
        return SignedPattern._unchecked(tuple(entries), tuple(arcs))

    def _check_position(self, i: int) -> None:
        if not 1 <= i <= self.n - 1:
            raise ValueError(f"position {i} out of range 1..{self.n - 1}")

    # -- orbit comparison via corner ranks -------------------------------------

    def corner_rank(self, rows: int, cols: int) -> int:
        """Rank of the form's matrix restricted to rows <= rows, cols <= cols."""
        rank = 0
        arc_positions = {p for arc in self.arcs for p in arc}
        for p, e in enumerate(self.entries, start=1):
            if e != ZERO and p not in arc_positions:
                if p <= rows and p <= cols:
                    rank += 1
        for j, k in self.arcs:
            if j <= rows and k <= cols:
                rank += 1
            if k <= rows and j <= cols:
                rank += 1
        return rank

    def _corner_rank_steps(self, i: int) -> list[int]:
        # steps[b] is the increase of corner_rank(i, b) over corner_rank(i, b-1);
        # corners with row bound i are the only ones the transposition can change.
        steps = [0] * (self.n + 1)
        arc_positions = set()
        for j, k in self.arcs:
            arc_positions.add(j)
            arc_positions.add(k)
            if j <= i:
                steps[k] += 1
            if k <= i:
                steps[j] += 1
        for p, e in enumerate(self.entries, start=1):
            if p > i:
                break
            if e != ZERO and p not in arc_positions:
                steps[p] += 1
        return steps

    def dominates(self, other: "SignedPattern", i: int) -> bool:
        """Whether this pattern's corner ranks dominate the other's at position i.

        For the two members of a U-pair exactly one direction dominates; the
        dominating pattern is the open orbit of the span.
        """
        mine = self._corner_rank_steps(i)
        theirs = other._corner_rank_steps(i)
        gap = 0
        for b in range(1, self.n + 1):
            gap += mine[b] - theirs[b]
            if gap:
                return gap > 0
        raise ValueError(
            f"patterns {self.to_text()!r} and {other.to_text()!r} have equal corner "
            f"ranks at position {i}; they do not form a U-pair"
        )

    def _u_open_here(self, i: int) -> bool:
        # Closed form of the corner-rank comparison on a U-pair: an active
        # entry dominates a zero, and an arc endpoint dominates when its
        # partner comes first (a shorter arc reaches higher corner ranks).
        x, y = self.entries[i - 1], self.entries[i]
        px = self.arc_partner(i)
        py = self.arc_partner(i + 1)
        if y == ZERO:
            return True
        if x == ZERO:
            return False
        if px is None and py is not None:
            return py > i + 1
        if px is not None and py is None:
            return px < i
        if px is not None and py is not None:
            return px < py
        raise ValueError(
            f"positions {i},{i + 1} of {self.to_text()!r} do not form a U-pair"
        )

    # -- span classification ------------------------------------------------

    def classify_edge(self, i: int) -> tuple[EdgeType, bool]:
        """Edge type at adjacent positions (i, i+1) and openness within the span."""
        self._check_position(i)
        x, y = self.entries[i - 1], self.entries[i]
        if x == ZERO and y == ZERO:
            return EdgeType.P, True
        if x in _SIGNS and y in _SIGNS:
            if x == y:
                return EdgeType.N0, True
            return EdgeType.N2, True
        if (i, i + 1) in self.arcs:
            return EdgeType.N2, False
        return EdgeType.U, self._u_open_here(i)

    def _classify_complex(self, i: int) -> tuple[EdgeType, bool]:
        x, y = self.entries[i - 1], self.entries[i]
        if x == ZERO and y == ZERO:
            return EdgeType.P, True
        if (i, i + 1) in self.arcs:
            return EdgeType.N, False
        if x == DOT and y == DOT and self.arc_partner(i) is None and self.arc_partner(i + 1) is None:
            return EdgeType.N, True
        return EdgeType.U, self._u_open_here(i)

    def unsign(self) -> "SignedPattern":
        """Forget signs: the complex pattern under this real one."""
        return SignedPattern(
            entries=tuple(DOT if e in _SIGNS else e for e in self.entries),
            arcs=self.arcs,
        )


def _double_factorial_matchings(k: int) -> int:
    # number of perfect matchings on 2k points: (2k-1)!!
    out = 1
    for m in range(1, 2 * k, 2):
        out *= m
    return out


def pattern_count(n: int, r: int, signed: bool) -> int:
    """Closed-form pattern count; the enumeration is tested against this."""
    _check_shape(n, r)
    total = 0
    for k in range(0, r // 2 + 1):
        ways = _binomial(r, 2 * k) * _double_factorial_matchings(k)
        if signed:
            ways *= 2 ** (r - 2 * k)
        total += ways
    return _binomial(n, r) * total


def _binomial(n: int, k: int) -> int:
    if k < 0 or k > n:
        return 0
    out = 1
    for t in range(k):
        out = out * (n - t) // (t + 1)
    return out


def _check_shape(n: int, r: int) -> None:
    if n < 1:
        raise ValueError(f"need at least one position, got n={n}")
    if not 0 <= r <= n:
        raise ValueError(f"rank must satisfy 0 <= r <= n, got r={r}, n={n}")


def _matchings(points: tuple[int, ...]):
    if not points:
        yield ()
        return
    first, rest = points[0], points[1:]
    for idx in range(len(rest)):
        pair = (first, rest[idx])
        for tail in _matchings(rest[:idx] + rest[idx + 1 :]):
            yield (pair,) + tail


def enumerate_patterns(n: int, r: int, signed: bool = True) -> list[SignedPattern]:
    """All patterns with n positions and rank r, in lexicographic order."""
    _check_shape(n, r)
    out = []
    for active in itertools.combinations(range(1, n + 1), r):
        for arc_count in range(0, r // 2 + 1):
            for arc_positions in itertools.combinations(active, 2 * arc_count):
                singles = tuple(p for p in active if p not in arc_positions)
                for arcs in _matchings(arc_positions):
                    # _matchings pairs off the smallest remaining point first,
                    # so each arc tuple comes out canonically sorted.
                    if signed:
                        for signs in itertools.product(_SIGNS, repeat=len(singles)):
                            entries = [ZERO] * n
                            for p in arc_positions:
                                entries[p - 1] = DOT
                            for p, s in zip(singles, signs):
                                entries[p - 1] = s
                            out.append(SignedPattern._unchecked(tuple(entries), arcs))
                    else:
                        entries = [ZERO] * n
                        for p in active:
                            entries[p - 1] = DOT
                        out.append(SignedPattern._unchecked(tuple(entries), arcs))
    out.sort(key=SignedPattern.sort_key)
    return out


_RELABEL_CACHE: dict[tuple[tuple[tuple[int, int], ...], int], str] = {}


def _relabeled_arc_suffix(source_arcs, i: int) -> str:
    """Arc suffix after swapping positions i and i+1; memoized."""
    key = (source_arcs, i)
    suffix = _RELABEL_CACHE.get(key)
    if suffix is not None:
        return suffix
    arcs = []
    for j, k in source_arcs:
        if j == i:
            j = i + 1
        elif j == i + 1:
            j = i
        if k == i:
            k = i + 1
        elif k == i + 1:
            k = i
        arcs.append((j, k) if j < k else (k, j))
    arcs.sort()
    suffix = _arc_suffix(tuple(arcs))
    _RELABEL_CACHE[key] = suffix
    return suffix


def _build(n: int, r: int, signed: bool) -> ReflectionTable:
    """Assemble the pattern table in one pass over (pattern, root) cells.

    Each span is emitted exactly once, from a canonical member: the single
    orbit for P/N0, the (+,-) open orbit for N2, the bare-dot orbit for
    complex N, and the open member for U.  Orbit names are manipulated as
    strings; the move index of the table is filled directly.  The test suite
    rebuilds these tables through the validating ReflectionTable constructor
    and checks they agree.
    """
    patterns = enumerate_patterns(n, r, signed=signed)
    complex_mode = not signed
    orbits = []
    rows = []
    for p in patterns:
        name = p.to_text()
        arcs = p.arcs
        arc_free = not arcs
        is_open = arc_free and ZERO not in p.entries[:r]
        orbits.append(Orbit(name, is_open, arc_free))
        if arcs:
            partner = [0] * (n + 2)
            for j, k in arcs:
                partner[j] = k
                partner[k] = j
        else:
            partner = None
        rows.append((name, arcs, partner))

    spans_by_root: dict[int, list[Span]] = {i: [] for i in range(1, n)}
    moves: dict[int, dict[str, str]] = {i: {} for i in range(1, n)}
    span_lists = [spans_by_root[i] for i in range(1, n)]
    move_maps = [moves[i] for i in range(1, n)]
    make_span = Span
    type_p, type_u = EdgeType.P, EdgeType.U
    type_n0, type_n2, type_n = EdgeType.N0, EdgeType.N2, EdgeType.N
    for name, arcs, partner in rows:
        for i0 in range(n - 1):
            i = i0 + 1
            i1 = i + 1
            x = name[i0]
            y = name[i0 + 1]
            x_active = x != ZERO
            if not x_active and y == ZERO:
                span_lists[i0].append(make_span(i, type_p, (name,)))
                continue
            if x_active and x != DOT and y != ZERO and y != DOT:
                if x == y:
                    span_lists[i0].append(make_span(i, type_n0, (name,)))
                elif x == PLUS:
                    other = name[:i0] + y + x + name[i0 + 2 :]
                    arc_name = (
                        name[:i0] + DOT + DOT + name[i0 + 2 : n]
                        + _arc_suffix(tuple(sorted(arcs + ((i, i1),))))
                    )
                    span_lists[i0].append(
                        make_span(i, type_n2, (name, other), (arc_name,))
                    )
                    move = move_maps[i0]
                    move[name] = other
                    move[other] = name
                continue
            if partner is not None:
                px = partner[i]
                py = partner[i1]
                if px == i1:
                    continue  # arc joining i, i+1: lower member of an N2/N span
            else:
                px = py = 0
            if complex_mode and x == DOT and y == DOT and px == 0 and py == 0:
                arc_name = (
                    name[:i0] + DOT + DOT + name[i0 + 2 : n]
                    + _arc_suffix(tuple(sorted(arcs + ((i, i1),))))
                )
                span_lists[i0].append(make_span(i, type_n, (name,), (arc_name,)))
                continue
            # U-pair: emit from the open member only.
            if y == ZERO:
                open_here = True
            elif not x_active:
                open_here = False
            elif px == 0:
                open_here = py > i1
            elif py == 0:
                open_here = px < i
            else:
                open_here = px < py
            if open_here:
                qname = name[:i0] + y + x + name[i0 + 2 :]
                if px or py:
                    qname = qname[:n] + _relabeled_arc_suffix(arcs, i)
                span_lists[i0].append(make_span(i, type_u, (name,), (qname,)))
                move = move_maps[i0]
                move[name] = qname
                move[qname] = name
    return ReflectionTable._from_trusted_parts(
        orbits=orbits,
        cartan=CartanSpec.from_type("A", n - 1),
        spans_by_root=spans_by_root,
        moves=moves,
    )


@functools.lru_cache(maxsize=None)
def build_table(n: int, r: int) -> ReflectionTable:
    """Reflection table of all signed patterns of rank r on n positions.

    The induced permutation of every root coincides with the adjacent
    transposition of entries.
    """
    _check_shape(n, r)
    return _build(n, r, signed=True)


@functools.lru_cache(maxsize=None)
def build_complex_table(n: int, r: int) -> ReflectionTable:
    """Same construction for unsigned (complex) patterns, with types P/U/N."""
    _check_shape(n, r)
    return _build(n, r, signed=False)


@dataclass(frozen=True)
class SylvesterClass:
    """One real-group orbit of open patterns, labelled by inertia indices."""

    plus: int
    minus: int
    orbits: tuple[str, ...]


def sylvester_classes(n: int, r: int) -> tuple[SylvesterClass, ...]:
    """Real-group orbits of the open patterns: r+1 classes labelled (plus, minus)."""
    table = build_table(n, r)
    classes = []
    for block in table.real_group_orbit_classes():
        rep = block[0]
        classes.append(
            SylvesterClass(plus=rep.count(PLUS), minus=rep.count(MINUS), orbits=block)
        )
    classes.sort(key=lambda c: c.minus)
    return tuple(classes)

