"""Crystallographic root systems of exceptional type, with exact integer data.

Roots are stored as integer coefficient vectors over the simple roots
(Bourbaki labelling).  The ambient buildable systems are E6, E7, E8, F4 and
G2; classical series labels (A_n, B_n, C_n, D_n) occur only when identifying
subsystems inside an exceptional system, never as ambient systems.

Conventions fixed here and relied on everywhere else:

* F4: alpha1, alpha2 long, alpha3, alpha4 short.
* G2: alpha1 short, alpha2 long.
* Positive roots are enumerated by (height, reverse-lexicographic) order on
  coefficient vectors; this is the canonical order used for unipotent
  collection and it reproduces the reference tables verbatim.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

Root = tuple[int, ...]


class UnsupportedType(ValueError):
    """Requested ambient root system cannot be built."""


class DimensionMismatch(ValueError):
    """Vectors from different systems, or of the wrong length."""


class NotARoot(ValueError):
    """Coefficient vector is not a root of the system."""


@dataclass(frozen=True)
class RootSystemType:
    series: str
    rank: int

    def __post_init__(self):
        if self.series not in "ABCDEFG" or self.rank < 1:
            raise UnsupportedType(f"bad type {self.series}{self.rank}")

    @property
    def name(self) -> str:
        return f"{self.series}{self.rank}"

    def __str__(self) -> str:
        return self.name


E6 = RootSystemType("E", 6)
E7 = RootSystemType("E", 7)
E8 = RootSystemType("E", 8)
F4 = RootSystemType("F", 4)
G2 = RootSystemType("G", 2)

BUILDABLE = (E6, E7, E8, F4, G2)


def type_from_name(name: str) -> RootSystemType:
    name = name.strip()
    if len(name) < 2 or not name[1:].isdigit():
        raise UnsupportedType(f"cannot parse type {name!r}")
    return RootSystemType(name[0].upper(), int(name[1:]))


@dataclass(frozen=True)
class PolarData:
    polar: frozenset[int]
    dual_polar: frozenset[int]
    copolar: frozenset[int] | None


def _en_edges(n: int) -> list[tuple[int, int]]:
    # Bourbaki E_n: chain 1-3-4-...-n with node 2 hanging off node 4.
    edges = [(1, 3), (2, 4)]
    edges += [(i, i + 1) for i in range(3, n)]
    return edges


def cartan_matrix(t: RootSystemType) -> list[list[int]]:
    """Cartan matrix A[i][j] = <alpha_j, alpha_i^vee>, 0-indexed."""
    n = t.rank
    A = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def join(i, j, aij=-1, aji=-1):
        A[i - 1][j - 1] = aij
        A[j - 1][i - 1] = aji

    if t.series == "A":
        for i in range(1, n):
            join(i, i + 1)
    elif t.series == "B":
        for i in range(1, n - 1):
            join(i, i + 1)
        join(n - 1, n, -1, -2)  # alpha_n short
    elif t.series == "C":
        for i in range(1, n - 1):
            join(i, i + 1)
        join(n - 1, n, -2, -1)  # alpha_n long
    elif t.series == "D":
        for i in range(1, n - 1):
            join(i, i + 1)
        join(n - 2, n)
        A[n - 2][n - 1] = 0
        A[n - 1][n - 2] = 0
        join(n - 2, n)
    elif t.series == "E":
        if n not in (6, 7, 8):
            raise UnsupportedType(f"no E{n}")
        for i, j in _en_edges(n):
            join(i, j)
    elif t.series == "F":
        if n != 4:
            raise UnsupportedType("only F4")
        join(1, 2)
        join(2, 3, -1, -2)  # alpha2 long, alpha3 short
        join(3, 4)
    elif t.series == "G":
        if n != 2:
            raise UnsupportedType("only G2")
        join(1, 2, -3, -1)  # alpha1 short
    return A


def simple_root_norms(t: RootSystemType) -> list[int]:
    """Squared lengths (alpha_i, alpha_i).

    The form is scaled per type so that all pairwise inner products of roots
    are integers (long roots get 2 in the simply laced and B cases, 4 for F4
    and C, 6 for G2).  Only length ratios matter downstream.
    """
    n = t.rank
    if t.series in "ADE":
        return [2] * n
    if t.series == "B":
        return [2] * (n - 1) + [1]
    if t.series == "C":
        return [2] * (n - 1) + [4]
    if t.series == "F":
        return [4, 4, 2, 2]
    if t.series == "G":
        return [2, 6]
    raise UnsupportedType(t.name)


_POLAR_TABLE = {
    # series: (polar, dual polar, copolar); parametric entries handled below.
    "E6": ({2}, {2}, {1, 6}),
    "E7": ({1}, {1}, {6}),
    "E8": ({8}, {8}, {1}),
    "F4": ({1}, {4}, {4}),
    "G2": ({2}, {1}, {1}),
}


def polar_data(t: RootSystemType) -> PolarData:
    """Polar, dual polar and copolar node sets for any irreducible type."""
    n = t.rank
    if t.name in _POLAR_TABLE:
        p, dp, cp = _POLAR_TABLE[t.name]
        return PolarData(frozenset(p), frozenset(dp), frozenset(cp))
    if t.series == "A":
        cp = {2, n - 1} if n >= 3 else None
        return PolarData(
            frozenset({1, n}), frozenset({1, n}), frozenset(cp) if cp else None
        )
    if t.series == "B":
        return PolarData(frozenset({2} if n >= 2 else {1}), frozenset({1}), None)
    if t.series == "C":
        return PolarData(frozenset({1}), frozenset({2}), frozenset({2}))
    if t.series == "D":
        return PolarData(frozenset({2}), frozenset({2}), None)
    raise UnsupportedType(t.name)


def canonical_key(root: Root) -> tuple:
    """Sort key giving the (height, reverse-lex) enumeration of roots."""
    return (sum(root), tuple(-c for c in root))


class RootSystem:
    """An exceptional root system with all pairing data precomputed.

    Roots are indexed 0..2N-1: positives first in canonical order, then the
    negatives in matching order (index of -alpha == index of alpha + N).
    Immutable after construction; safe to share between threads.
    """

    def __init__(self, t: RootSystemType):
        if t not in BUILDABLE:
            raise UnsupportedType(f"{t.name} is not buildable as an ambient system")
        self.type = t
        self.rank = t.rank
        self.cartan = cartan_matrix(t)
        self.norm2 = simple_root_norms(t)
        # Gram matrix of simple roots: (alpha_i, alpha_j) = A[i][j]*norm2[i]/2.
        for i in range(t.rank):
            for j in range(t.rank):
                assert (self.cartan[i][j] * self.norm2[i]) % 2 == 0
        self.gram = [
            [self.cartan[i][j] * self.norm2[i] // 2 for j in range(t.rank)]
            for i in range(t.rank)
        ]
        for i in range(t.rank):
            for j in range(t.rank):
                if self.gram[i][j] != self.gram[j][i]:
                    raise AssertionError("gram matrix not symmetric")
        pos = self._generate_positive()
        pos.sort(key=canonical_key)
        self.positive: list[Root] = pos
        self.num_positive = len(pos)
        self.roots: list[Root] = pos + [tuple(-c for c in r) for r in pos]
        self.index: dict[Root, int] = {r: i for i, r in enumerate(self.roots)}
        self.heights = [sum(r) for r in self.roots]
        self.highest_root = self.positive[-1]
        self.highest_short_root = self._highest_short()
        self.polar = polar_data(t)
        self._sum_index = self._build_sum_table()
        self._coroot_rows = [
            [self.coroot_pairing(r, self.simple_root(i)) for i in range(1, self.rank + 1)]
            for r in self.roots
        ]

    # -- construction -----------------------------------------------------

    def _generate_positive(self) -> list[Root]:
        n = self.rank
        simples = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
        known = set(simples)
        frontier = list(simples)
        while frontier:
            new = []
            for alpha in frontier:
                for i in range(n):
                    pairing = self._coroot_pairing_raw(alpha, simples[i])
                    # alpha_i-string through alpha: p - <alpha, alpha_i^vee> > 0
                    p = 0
                    beta = self._sub(alpha, simples[i])
                    while all(c >= 0 for c in beta) and (beta in known or not any(beta)):
                        if not any(beta):
                            break
                        p += 1
                        beta = self._sub(beta, simples[i])
                    if p - pairing > 0:
                        gamma = tuple(a + b for a, b in zip(alpha, simples[i]))
                        if gamma not in known:
                            known.add(gamma)
                            new.append(gamma)
            frontier = new
        return list(known)

    @staticmethod
    def _sub(a: Root, b: Root) -> Root:
        return tuple(x - y for x, y in zip(a, b))

    def _highest_short(self) -> Root | None:
        if self.type.series in "ADE":
            return None
        long_norm = max(self.norm2)
        shorts = [r for r in self.positive if self.root_norm2(r) < long_norm]
        return max(shorts, key=canonical_key)

    def _build_sum_table(self) -> dict[tuple[int, int], int]:
        table = {}
        idx = self.index
        for i, a in enumerate(self.roots):
            for j, b in enumerate(self.roots):
                if i < j:
                    s = tuple(x + y for x, y in zip(a, b))
                    k = idx.get(s)
                    if k is not None:
                        table[(i, j)] = k
                        table[(j, i)] = k
        return table

    # -- basic queries ----------------------------------------------------

    def simple_root(self, i: int) -> Root:
        """Simple root alpha_i, 1-indexed per Bourbaki."""
        return tuple(1 if j == i - 1 else 0 for j in range(self.rank))

    def is_root(self, v: Root) -> bool:
        return tuple(v) in self.index

    def root_id(self, v: Root) -> int:
        try:
            return self.index[tuple(v)]
        except KeyError:
            raise NotARoot(f"{v} is not a root of {self.type.name}") from None

    def neg(self, rid: int) -> int:
        n = self.num_positive
        return rid + n if rid < n else rid - n

    def is_positive(self, rid: int) -> bool:
        return rid < self.num_positive

    def sum_id(self, i: int, j: int) -> int | None:
        """Index of roots[i] + roots[j], or None if the sum is not a root."""
        return self._sum_index.get((i, j))

    def height(self, v: Root) -> int:
        return sum(v)

    def inner(self, a: Root, b: Root) -> int:
        g = self.gram
        return sum(
            ai * bj * g[i][j]
            for i, ai in enumerate(a)
            if ai
            for j, bj in enumerate(b)
            if bj
        )

    def root_norm2(self, a: Root) -> int:
        return self.inner(a, a)

    def is_long(self, a: Root) -> bool:
        return self.root_norm2(a) == max(self.norm2)

    def _coroot_pairing_raw(self, b: Root, a: Root) -> int:
        num = 2 * self.inner(b, a)
        den = self.inner(a, a)
        assert num % den == 0
        return num // den

    def coroot_pairing(self, b: Root, a: Root) -> int:
        """<b, a^vee> = 2(b,a)/(a,a)."""
        if len(a) != self.rank or len(b) != self.rank:
            raise DimensionMismatch("wrong length for this system")
        if not any(a):
            raise ZeroDivisionError("pairing against the zero vector")
        return self._coroot_pairing_raw(b, a)

    def coroot_pairing_id(self, bid: int, i: int) -> int:
        """<roots[bid], alpha_i^vee> (1-indexed i), from the cached table."""
        return self._coroot_rows[bid][i - 1]

    def coroot_coords(self, a: Root) -> tuple[int, ...]:
        """a^vee as an integer vector over the simple coroots."""
        norm = self.inner(a, a)
        out = []
        for i in range(self.rank):
            num = a[i] * self.norm2[i]
            assert num % norm == 0, "coroot is not integral over simple coroots"
            out.append(num // norm)
        return tuple(out)

    def perpendicular(self, a: Root, b: Root) -> bool:
        return self.inner(a, b) == 0

    # -- order combinatorics ------------------------------------------------

    def dominates(self, b: Root, a: Root) -> bool:
        """b >= a in the dominance order (difference has nonnegative coords)."""
        return all(x >= y for x, y in zip(b, a))

    def closure_up(self, A) -> frozenset[Root]:
        """All roots >= some element of A; A must consist of positive roots."""
        A = [tuple(a) for a in A]
        for a in A:
            rid = self.root_id(a)
            if not self.is_positive(rid):
                raise NotARoot(f"{a} is not a positive root")
        return frozenset(
            b for b in self.positive if any(self.dominates(b, a) for a in A)
        )

    def string_through(self, beta: Root, alpha: Root) -> list[Root]:
        """The alpha-string through beta, in increasing order."""
        down = []
        cur = self._sub(beta, alpha)
        while self.is_root(cur):
            down.append(cur)
            cur = self._sub(cur, alpha)
        out = list(reversed(down)) + [beta]
        cur = tuple(x + y for x, y in zip(beta, alpha))
        while self.is_root(cur):
            out.append(cur)
            cur = tuple(x + y for x, y in zip(cur, alpha))
        return out

    def string_p(self, alpha: Root, beta: Root) -> int:
        """p = max{k : beta - k*alpha is a root}."""
        p = 0
        cur = self._sub(beta, alpha)
        while self.is_root(cur):
            p += 1
            cur = self._sub(cur, alpha)
        return p

    # -- coweights ------------------------------------------------------------

    def pairing(self, coweight, alpha: Root) -> int:
        """<lambda, alpha> for lambda in coweight coordinates: a dot product."""
        if len(coweight) != self.rank or len(alpha) != self.rank:
            raise DimensionMismatch("wrong length for this system")
        return sum(l * a for l, a in zip(coweight, alpha))

    def fundamental_coweight(self, i: int) -> tuple[int, ...]:
        return tuple(1 if j == i - 1 else 0 for j in range(self.rank))

    # -- subsystems -------------------------------------------------------

    def subsystem_positive(self, nodes) -> list[Root]:
        """Positive roots supported on the given simple-root nodes (1-indexed)."""
        nodes = set(nodes)
        out = [
            r
            for r in self.positive
            if all(c == 0 for i, c in enumerate(r, start=1) if i not in nodes)
        ]
        return out

    def subsystem_highest_root(self, nodes) -> Root:
        """Highest root of the (assumed irreducible) subsystem on the nodes."""
        sub = self.subsystem_positive(nodes)
        return max(sub, key=canonical_key)

    def subsystem_highest_short_root(self, nodes) -> Root:
        sub = self.subsystem_positive(nodes)
        long_norm = max(self.root_norm2(r) for r in sub)
        shorts = [r for r in sub if self.root_norm2(r) < long_norm]
        if not shorts:
            raise NotARoot("subsystem is simply laced")
        return max(shorts, key=canonical_key)

    def component_nodes(self, nodes) -> list[frozenset[int]]:
        """Connected components of the Dynkin subdiagram on the given nodes."""
        nodes = set(nodes)
        comps = []
        seen = set()
        for start in sorted(nodes):
            if start in seen:
                continue
            comp = {start}
            frontier = [start]
            while frontier:
                i = frontier.pop()
                for j in nodes:
                    if j not in comp and self.cartan[i - 1][j - 1] != 0:
                        comp.add(j)
                        frontier.append(j)
            seen |= comp
            comps.append(frozenset(comp))
        return comps

    def identify_subdiagram(self, nodes) -> str:
        """Type name of the irreducible Dynkin subdiagram on the given nodes.

        Distinguishes B from C by root lengths in the ambient form; a rank-2
        double-bond component is reported as B2.
        """
        nodes = sorted(nodes)
        n = len(nodes)
        if n == 1:
            return "A1"
        A = {
            (i, j): self.cartan[i - 1][j - 1]
            for i in nodes
            for j in nodes
            if i != j and self.cartan[i - 1][j - 1] != 0
        }
        degrees = {i: sum(1 for (a, b) in A if a == i) for i in nodes}
        multi = [(i, j) for (i, j) in A if A[(i, j)] <= -2]
        branch = [i for i in nodes if degrees[i] >= 3]
        if not multi and not branch:
            return f"A{n}"
        if multi:
            m = min(A[e] for e in multi)
            if m == -3:
                return "G2"
            if n == 2:
                return "B2"
            # Double bond: F4 iff it sits mid-chain, else B/C by short count.
            i, j = multi[0]
            end_degrees = sorted((degrees[i], degrees[j]))
            if n == 4 and end_degrees == [2, 2]:
                return "F4"
            norms = [self.norm2[i - 1] for i in nodes]
            n_short = sum(1 for v in norms if v < max(norms))
            return (f"B{n}" if n_short == 1 else f"C{n}")
        # Simply laced with a branch node.
        b = branch[0]
        arms = sorted(
            len(arm)
            for arm in self._arms(nodes, A, b)
        )
        if arms == [1, 1, n - 3]:
            return f"D{n}"
        if arms[0] == 1 and arms[1] == 2:
            return f"E{n}"
        raise NotARoot(f"unrecognised subdiagram on nodes {nodes}")

    def _arms(self, nodes, A, branch):
        neighbours = [j for j in nodes if (branch, j) in A]
        arms = []
        for nb in neighbours:
            arm = [nb]
            prev, cur = branch, nb
            while True:
                nxt = [j for j in nodes if (cur, j) in A and j != prev]
                if not nxt:
                    break
                prev, cur = cur, nxt[0]
                arm.append(cur)
            arms.append(arm)
        return arms


@lru_cache(maxsize=None)
def build_root_system(t: RootSystemType) -> RootSystem:
    """Build (and cache) the full root system for a buildable ambient type."""
    return RootSystem(t)


def build(name: str) -> RootSystem:
    return build_root_system(type_from_name(name))
