"""Weyl group engine: elements as root permutations, lengths from inversions.

Elements are stored as permutations of the root index set (positives first,
then negatives), never as words; reduced words are recovered on demand by
descent walking.  This gives O(|Phi|) multiplication and exact lengths, and
never requires enumerating the full group (W(E8) has order 696'729'600).
"""

from __future__ import annotations

from functools import lru_cache

from .rootsys import NotARoot, Root, RootSystem


class WeylElement:
    """A Weyl group element acting on roots by index permutation."""

    __slots__ = ("W", "perm", "_inv", "_length", "_hash")

    def __init__(self, W: "WeylGroup", perm: tuple[int, ...]):
        self.W = W
        self.perm = perm
        self._inv = None
        self._length = None
        self._hash = None

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.perm)
        return self._hash

    def __eq__(self, other):
        return isinstance(other, WeylElement) and self.perm == other.perm

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        p, q = self.perm, other.perm
        return WeylElement(self.W, tuple(p[q[i]] for i in range(len(p))))

    def inverse(self) -> "WeylElement":
        if self._inv is None:
            inv = [0] * len(self.perm)
            for i, j in enumerate(self.perm):
                inv[j] = i
            self._inv = WeylElement(self.W, tuple(inv))
            self._inv._inv = self
        return self._inv

    @property
    def length(self) -> int:
        if self._length is None:
            n = self.W.rs.num_positive
            self._length = sum(1 for i in range(n) if self.perm[i] >= n)
        return self._length

    def is_identity(self) -> bool:
        return self.perm == self.W.identity.perm

    def apply_id(self, rid: int) -> int:
        return self.perm[rid]

    def apply(self, root: Root) -> Root:
        return self.W.rs.roots[self.perm[self.W.rs.root_id(root)]]

    def inversion_ids(self) -> frozenset[int]:
        """Phi(w): positive roots sent to negatives by w^{-1}."""
        inv = self.inverse().perm
        n = self.W.rs.num_positive
        return frozenset(i for i in range(n) if inv[i] >= n)

    def inversions(self) -> frozenset[Root]:
        roots = self.W.rs.roots
        return frozenset(roots[i] for i in self.inversion_ids())

    def has_right_descent(self, i: int) -> bool:
        """True iff l(w s_i) < l(w), i.e. w(alpha_i) < 0 (1-indexed i)."""
        rs = self.W.rs
        return self.perm[rs.root_id(rs.simple_root(i))] >= rs.num_positive

    def has_left_descent(self, i: int) -> bool:
        rs = self.W.rs
        return self.inverse().perm[rs.root_id(rs.simple_root(i))] >= rs.num_positive

    def reduced_word(self) -> tuple[int, ...]:
        """Lexicographically minimal reduced word (1-indexed generators)."""
        word = []
        w = self
        while not w.is_identity():
            for i in range(1, self.W.rs.rank + 1):
                if w.has_left_descent(i):
                    word.append(i)
                    w = self.W.simple(i) * w
                    break
            else:
                raise AssertionError("non-identity element with no descent")
        return tuple(word)

    def __repr__(self):
        if self.is_identity():
            return "W<e>"
        return "W<" + ".".join(f"s{i}" for i in self.reduced_word()) + ">"


class WeylGroup:
    """The Weyl group of a root system, with parabolic and coset machinery."""

    def __init__(self, rs: RootSystem):
        self.rs = rs
        self.rank = rs.rank
        size = len(rs.roots)
        self.identity = WeylElement(self, tuple(range(size)))
        self._simple = {}
        for i in range(1, rs.rank + 1):
            ai = rs.simple_root(i)
            perm = []
            for r in rs.roots:
                img = tuple(
                    c - rs.coroot_pairing(r, ai) * a for c, a in zip(r, ai)
                )
                perm.append(rs.root_id(img))
            self._simple[i] = WeylElement(self, tuple(perm))
        self._w0 = None

    def simple(self, i: int) -> WeylElement:
        return self._simple[i]

    def reflection(self, root: Root) -> WeylElement:
        """s_alpha as a root permutation; involution."""
        rs = self.rs
        if not rs.is_root(root):
            raise NotARoot(f"{root} is not a root")
        perm = []
        for r in rs.roots:
            img = tuple(
                c - rs.coroot_pairing(r, root) * a for c, a in zip(r, root)
            )
            perm.append(rs.root_id(img))
        return WeylElement(self, tuple(perm))

    def from_word(self, word) -> WeylElement:
        w = self.identity
        for i in word:
            w = w * self.simple(i)
        return w

    def longest_element(self, nodes=None) -> WeylElement:
        """Longest element w_J of the parabolic on the given nodes (all by default)."""
        if nodes is None:
            if self._w0 is None:
                self._w0 = self.longest_element(range(1, self.rank + 1))
            return self._w0
        nodes = sorted(set(nodes))
        w = self.identity
        while True:
            for i in nodes:
                if not w.has_right_descent(i):
                    w = w * self.simple(i)
                    break
            else:
                return w

    @property
    def w0(self) -> WeylElement:
        return self.longest_element()

    def opposition_map(self) -> dict[int, int]:
        """The permutation pi_0 of the nodes with w_0(alpha_i) = -alpha_{pi_0(i)}."""
        rs = self.rs
        out = {}
        for i in range(1, self.rank + 1):
            img = self.w0.apply(rs.simple_root(i))
            neg = tuple(-c for c in img)
            for j in range(1, self.rank + 1):
                if neg == rs.simple_root(j):
                    out[i] = j
                    break
            else:
                raise AssertionError("w0 does not permute the simple roots")
        return out

    def pi0_root(self, root: Root) -> Root:
        """pi_0(alpha) = -w_0(alpha); permutes the positive roots."""
        return tuple(-c for c in self.w0.apply(root))

    # -- cosets and double cosets ------------------------------------------

    def _coweight_for(self, nodes) -> tuple[int, ...]:
        """A dominant coweight whose stabiliser is exactly W_nodes."""
        other = [i for i in range(1, self.rank + 1) if i not in set(nodes)]
        return tuple(1 if i in other else 0 for i in range(1, self.rank + 1))

    def _coweight_act(self, i: int, lam: tuple[int, ...]) -> tuple[int, ...]:
        """s_i acting on coweight coordinates: lam - lam_i * alpha_i^vee."""
        li = lam[i - 1]
        if li == 0:
            return lam
        row = self.rs.cartan[i - 1]
        return tuple(l - li * row[j] for j, l in enumerate(lam))

    def coset_orbit(self, nodes, budget: int = 10**6):
        """Orbit of the defining coweight of W_nodes: one vector per coset in W/W_nodes.

        Returns (orbit set, parent map) where parent[v] = (i, v') with v = s_i v'.
        """
        start = self._coweight_for(nodes)
        seen = {start: None}
        frontier = [start]
        while frontier:
            new = []
            for v in frontier:
                for i in range(1, self.rank + 1):
                    w = self._coweight_act(i, v)
                    if w not in seen:
                        seen[w] = (i, v)
                        new.append(w)
                        if len(seen) > budget:
                            raise BudgetExceeded(
                                f"coset orbit for W_{sorted(nodes)} exceeds {budget}"
                            )
            frontier = new
        return seen, start

    def min_coset_rep(self, vector, nodes) -> WeylElement:
        """Minimal w with w(lambda_nodes) = vector, via dominance walking."""
        word = []
        v = vector
        start = self._coweight_for(nodes)
        while v != start:
            for i in range(1, self.rank + 1):
                if v[i - 1] < 0:
                    word.append(i)
                    v = self._coweight_act(i, v)
                    break
            else:
                raise AssertionError("vector not in the dominant orbit")
        w = self.identity
        for i in reversed(word):
            w = self.simple(i) * w
        return w

    def double_coset_min(self, w: WeylElement, left_nodes, right_nodes) -> WeylElement:
        """Minimal-length representative of W_J w W_K by greedy descent."""
        left = sorted(set(left_nodes))
        right = sorted(set(right_nodes))
        while True:
            for i in left:
                if w.has_left_descent(i):
                    w = self.simple(i) * w
                    break
            else:
                for i in right:
                    if w.has_right_descent(i):
                        w = w * self.simple(i)
                        break
                else:
                    return w

    def min_double_coset_reps(self, left_nodes, right_nodes, budget: int = 10**6):
        """One minimal-length element per W_J \\ W / W_K double coset, by length."""
        left = sorted(set(left_nodes))
        right = sorted(set(right_nodes))
        orbit, _ = self.coset_orbit(right, budget)
        reps = {}
        seen = set()
        gens = [self.simple(i) for i in left]
        for v in orbit:
            if v in seen:
                continue
            comp = {v}
            frontier = [v]
            while frontier:
                u = frontier.pop()
                for i in left:
                    x = self._coweight_act(i, u)
                    if x not in comp:
                        comp.add(x)
                        frontier.append(x)
            seen |= comp
            # J-dominant member of the component, then greedy double descent.
            vd = next(u for u in comp if all(u[i - 1] >= 0 for i in left))
            w = self.min_coset_rep(vd, right)
            w = self.double_coset_min(w, left, right)
            reps[w] = True
        del gens
        return sorted(reps, key=lambda w: (w.length, w.reduced_word()))

    def orbit(self, nodes, root: Root, budget: int = 10**6) -> frozenset[Root]:
        """The W_nodes-orbit of a root."""
        rs = self.rs
        start = rs.root_id(root)
        seen = {start}
        frontier = [start]
        gens = [self.simple(i) for i in sorted(set(nodes))]
        while frontier:
            new = []
            for rid in frontier:
                for g in gens:
                    x = g.perm[rid]
                    if x not in seen:
                        seen.add(x)
                        new.append(x)
                        if len(seen) > budget:
                            raise BudgetExceeded("root orbit exceeds budget")
            frontier = new
        return frozenset(rs.roots[i] for i in seen)

    def min_occurrences(self, w: WeylElement, i: int) -> int:
        """Minimum number of occurrences of s_i over all reduced words of w.

        Stripping a descent s_j (j != i) from either side preserves the
        minimum, and once w is the minimal representative of its two-sided
        W_{S-i} coset every reduced word starts with s_i.
        """
        others = [j for j in range(1, self.rank + 1) if j != i]
        count = 0
        while True:
            w = self.double_coset_min(w, others, others)
            if w.is_identity():
                return count
            count += 1
            w = self.simple(i) * w


class BudgetExceeded(RuntimeError):
    """Enumeration would exceed the configured budget."""


@lru_cache(maxsize=None)
def weyl_group(rs: RootSystem) -> WeylGroup:
    return WeylGroup(rs)
