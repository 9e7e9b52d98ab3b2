"""Exact field scalars, Chevalley structure constants, and adjoint matrices.

The structure constants N[a][b] with [e_a, e_b] = N e_{a+b} are fixed by the
extraspecial-pair method under the canonical (height, reverse-lex) positive
root order: extraspecial pairs get N = +(p+1), everything else follows from
antisymmetry, N(-a,-b) = -N(a,b), and the standard triple/quadruple sum
relations.  A Jacobi check runs at construction and aborts on inconsistency.

Generator matrices live in the adjoint representation (dimension
rank + |Phi|, basis h_{alpha_1^vee}..h_{alpha_n^vee}, e_alpha).  All divided
powers (ad e_alpha)^k / k! are integral (Chevalley Z-form, asserted), so the
same integer data reduces to any supported field.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .rootsys import RootSystem, build_root_system

# ---------------------------------------------------------------------------
# fields


class ZeroScalar(ZeroDivisionError):
    """A scalar that must be invertible was zero."""


class Field:
    """Exact field interface; elements are plain hashable Python objects."""

    name: str
    char: int
    order: int | None  # None for the rationals

    def add(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def from_int(self, k: int):
        raise NotImplementedError

    @property
    def zero(self):
        return self.from_int(0)

    @property
    def one(self):
        return self.from_int(1)

    def pow(self, a, k: int):
        if k < 0:
            return self.pow(self.inv(a), -k)
        out = self.one
        while k:
            if k & 1:
                out = self.mul(out, a)
            a = self.mul(a, a)
            k >>= 1
        return out

    def elements(self):
        raise NotImplementedError

    def nonzero(self):
        return [a for a in self.elements() if a != self.zero]

    def parse(self, text: str):
        return self.from_int(int(text))

    def format(self, a) -> str:
        return str(a)

    def __repr__(self):
        return self.name


class PrimeField(Field):
    def __init__(self, p: int):
        assert p in (2, 3, 5, 7), "supported primes are 2, 3, 5, 7"
        self.p = p
        self.char = p
        self.order = p
        self.name = f"f{p}"

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroScalar("division by zero")
        return pow(a, self.p - 2, self.p)

    def from_int(self, k):
        return k % self.p

    def elements(self):
        return list(range(self.p))


class GF4(Field):
    """The field with 4 elements, a + b*z with z^2 = z + 1.

    Elements are ints 0..3, value = a + 2*b (bit 0 the constant, bit 1 the z
    coefficient).
    """

    char = 2
    order = 4
    name = "f4"

    _MUL = None

    def __init__(self):
        if GF4._MUL is None:
            table = [[0] * 4 for _ in range(4)]
            for x in range(4):
                for y in range(4):
                    a1, b1 = x & 1, x >> 1
                    a2, b2 = y & 1, y >> 1
                    # (a1 + b1 z)(a2 + b2 z), z^2 = z + 1
                    a = (a1 * a2 + b1 * b2) & 1
                    b = (a1 * b2 + b1 * a2 + b1 * b2) & 1
                    table[x][y] = a + 2 * b
            GF4._MUL = table

    def add(self, a, b):
        return a ^ b

    sub = add

    def mul(self, a, b):
        return GF4._MUL[a][b]

    def neg(self, a):
        return a

    def inv(self, a):
        if a == 0:
            raise ZeroScalar("division by zero")
        return {1: 1, 2: 3, 3: 2}[a]

    def from_int(self, k):
        return k % 2

    def elements(self):
        return [0, 1, 2, 3]

    def parse(self, text):
        text = text.replace(" ", "")
        if text in ("z",):
            return 2
        if text in ("z+1", "1+z"):
            return 3
        return int(text) % 2

    def format(self, a):
        return ["0", "1", "z", "z+1"][a]


class Rationals(Field):
    char = 0
    order = None
    name = "q"

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroScalar("division by zero")
        return 1 / Fraction(a)

    def from_int(self, k):
        return Fraction(k)

    def elements(self):
        raise TypeError("the rationals are infinite")

    def parse(self, text):
        return Fraction(text)


_FIELDS = {}


def get_field(name: str) -> Field:
    key = name.lower()
    if key not in _FIELDS:
        if key in ("f2", "f3", "f5", "f7"):
            _FIELDS[key] = PrimeField(int(key[1]))
        elif key in ("f4", "gf4"):
            _FIELDS[key] = GF4()
        elif key in ("q", "qq", "rational"):
            _FIELDS[key] = Rationals()
        else:
            raise ValueError(f"unsupported field {name!r}")
    return _FIELDS[key]


SUPPORTED_FIELDS = ("f2", "f3", "f4", "f5", "f7", "q")

# ---------------------------------------------------------------------------
# integer sparse matrices (column-major), used for the Z-form only


class IntMat:
    """Sparse integer matrix, column-major: cols[j] = {row: value}."""

    __slots__ = ("n", "cols")

    def __init__(self, n: int, cols=None):
        self.n = n
        self.cols = cols if cols is not None else [dict() for _ in range(n)]

    @classmethod
    def identity(cls, n):
        return cls(n, [{j: 1} for j in range(n)])

    def __matmul__(self, other: "IntMat") -> "IntMat":
        # self @ other: columns of other pushed through self.
        out = []
        scols = self.cols
        for col in other.cols:
            acc: dict[int, int] = {}
            for mid, v in col.items():
                for row, w in scols[mid].items():
                    acc[row] = acc.get(row, 0) + v * w
            out.append({r: v for r, v in acc.items() if v})
        return IntMat(self.n, out)

    def apply(self, vec: dict[int, int]) -> dict[int, int]:
        acc: dict[int, int] = {}
        for j, v in vec.items():
            for row, w in self.cols[j].items():
                acc[row] = acc.get(row, 0) + v * w
        return {r: v for r, v in acc.items() if v}

    def __eq__(self, other):
        return isinstance(other, IntMat) and self.n == other.n and self.cols == other.cols

    def is_identity(self):
        return all(col == {j: 1} for j, col in enumerate(self.cols))

    def scaled(self, k: int) -> "IntMat":
        return IntMat(self.n, [{r: k * v for r, v in col.items()} for col in self.cols])

    def plus(self, other: "IntMat") -> "IntMat":
        out = []
        for a, b in zip(self.cols, other.cols):
            acc = dict(a)
            for r, v in b.items():
                acc[r] = acc.get(r, 0) + v
            out.append({r: v for r, v in acc.items() if v})
        return IntMat(self.n, out)

    def exact_div(self, k: int) -> "IntMat":
        out = []
        for col in self.cols:
            c = {}
            for r, v in col.items():
                assert v % k == 0, "divided power is not integral"
                c[r] = v // k
            out.append(c)
        return IntMat(self.n, out)

    def is_zero(self):
        return all(not col for col in self.cols)


# ---------------------------------------------------------------------------
# field matrices


class FieldMat:
    """Sparse matrix over a Field, column-major like IntMat."""

    __slots__ = ("field", "n", "cols")

    def __init__(self, field: Field, n: int, cols):
        self.field = field
        self.n = n
        self.cols = cols

    @classmethod
    def identity(cls, field, n):
        one = field.one
        return cls(field, n, [{j: one} for j in range(n)])

    @classmethod
    def from_int_mat(cls, field, m: IntMat):
        zero = field.zero
        cols = []
        for col in m.cols:
            c = {}
            for r, v in col.items():
                fv = field.from_int(v)
                if fv != zero:
                    c[r] = fv
            cols.append(c)
        return cls(field, m.n, cols)

    def __matmul__(self, other: "FieldMat") -> "FieldMat":
        F = self.field
        zero = F.zero
        out = []
        scols = self.cols
        for col in other.cols:
            acc = {}
            for mid, v in col.items():
                for row, w in scols[mid].items():
                    p = F.mul(v, w)
                    if row in acc:
                        acc[row] = F.add(acc[row], p)
                    else:
                        acc[row] = p
            out.append({r: v for r, v in acc.items() if v != zero})
        return FieldMat(F, self.n, out)

    def apply(self, vec: dict):
        F = self.field
        zero = F.zero
        acc = {}
        for j, v in vec.items():
            for row, w in self.cols[j].items():
                p = F.mul(v, w)
                if row in acc:
                    acc[row] = F.add(acc[row], p)
                else:
                    acc[row] = p
        return {r: v for r, v in acc.items() if v != zero}

    def __eq__(self, other):
        return (
            isinstance(other, FieldMat)
            and self.n == other.n
            and self.field is other.field
            and self.cols == other.cols
        )

    def __hash__(self):
        return hash(self.key())

    def key(self):
        return tuple(tuple(sorted(col.items())) for col in self.cols)

    def is_identity(self):
        one = self.field.one
        return all(col == {j: one} for j, col in enumerate(self.cols))


# ---------------------------------------------------------------------------
# structure constants


class StructureConstants:
    """N-constants, conjugation signs and commutator tables for one system."""

    def __init__(self, rs: RootSystem):
        self.rs = rs
        self.dim = rs.rank + len(rs.roots)
        self._npos: dict[tuple[int, int], int] = {}
        self._compute_positive_table()
        self._nmemo: dict[tuple[int, int], int] = {}
        self._ad: dict[int, IntMat] = {}
        self._powers: dict[int, list[IntMat]] = {}
        self._check_magnitudes()
        self._jacobi_check()
        self.eta = self._eta_tables()
        self.comm = self._commutator_tables()

    # -- N-constants -------------------------------------------------------

    def _compute_positive_table(self):
        rs = self.rs
        npos = rs.num_positive
        by_sum: dict[int, list[tuple[int, int]]] = {}
        for a in range(npos):
            for b in range(a + 1, npos):
                s = rs.sum_id(a, b)
                if s is not None and s < npos:
                    by_sum.setdefault(s, []).append((a, b))
        inner = rs.inner
        roots = rs.roots
        for g in sorted(by_sum, key=lambda s: rs.heights[s]):
            pairs = sorted(by_sum[g])
            a1, b1 = pairs[0]  # extraspecial: minimal first member
            p = rs.string_p(roots[a1], roots[b1])
            self._npos[(a1, b1)] = p + 1
            self._npos[(b1, a1)] = -(p + 1)
            for a, b in pairs[1:]:
                # Quadruple (a1, b1, -a, -b) sums to zero; no two opposite.
                gg = inner(roots[g], roots[g])
                term1 = term2 = Fraction(0)
                d1 = self._sub_root(b1, a)
                if d1 is not None:
                    n1 = self._n_mixed(b1, self._negid(a))
                    n2 = self._n_mixed(a1, self._negid(b))
                    term1 = Fraction(n1 * n2, inner(roots[d1], roots[d1]))
                d2 = self._sub_root(a1, a)
                if d2 is not None:
                    n3 = self._n_mixed(self._negid(a), a1)
                    n4 = self._n_mixed(b1, self._negid(b))
                    term2 = Fraction(n3 * n4, inner(roots[d2], roots[d2]))
                val = gg * (term1 + term2) / self._npos[(a1, b1)]
                assert val.denominator == 1, "non-integral structure constant"
                v = int(val)
                assert v != 0
                self._npos[(a, b)] = v
                self._npos[(b, a)] = -v

    def _negid(self, rid: int) -> int:
        return self.rs.neg(rid)

    def _sub_root(self, a: int, b: int) -> int | None:
        """Index of roots[a] - roots[b] if that is a root."""
        return self.rs.sum_id(a, self.rs.neg(b))

    def n(self, a: int, b: int) -> int:
        """N with [e_a, e_b] = n(a,b) e_{a+b}; 0 if the sum is not a root."""
        rs = self.rs
        if rs.sum_id(a, b) is None:
            return 0
        key = (a, b)
        npos = rs.num_positive
        if a < npos and b < npos:
            return self._npos[key]
        if key in self._nmemo:
            return self._nmemo[key]
        if a >= npos and b >= npos:
            val = -self.n(a - npos, b - npos)
        elif a >= npos:  # (neg, pos)
            val = -self.n(b, a)
        else:  # (pos, neg)
            s = rs.sum_id(a, b)
            c = b - npos  # b = -c with c positive
            inner = rs.inner
            roots = rs.roots
            if s < npos:
                # a = s + c: triple (a, -c, -s).
                num = inner(roots[s], roots[s]) * self.n(c, s)
                den = inner(roots[a], roots[a])
                assert num % den == 0
                val = -num // den
            else:
                # a - c negative: N(a,-c) = N(c,-a) via (ii) and antisymmetry.
                z = s - npos  # z = c - a positive
                num = inner(roots[z], roots[z]) * self.n(a, z)
                den = inner(roots[c], roots[c])
                assert num % den == 0
                val = -num // den
                # computed N(c, -a); relate back: N(a,-c) = -N(-a,c) = N(c,-a)
        self._nmemo[key] = val
        return val

    def _check_magnitudes(self):
        rs = self.rs
        roots = rs.roots
        for a in range(len(roots)):
            for b in range(len(roots)):
                if rs.sum_id(a, b) is None:
                    continue
                p = rs.string_p(roots[a], roots[b])
                v = self.n(a, b)
                assert abs(v) == p + 1, (roots[a], roots[b], v, p)

    # -- the Lie algebra and its consistency --------------------------------

    def basis_size(self) -> int:
        return self.dim

    def e_index(self, rid: int) -> int:
        return self.rs.rank + rid

    def ad(self, rid: int) -> IntMat:
        """ad(e_gamma) on the Chevalley basis, as an integer matrix."""
        if rid in self._ad:
            return self._ad[rid]
        rs = self.rs
        n = rs.rank
        m = IntMat(self.dim)
        root = rs.roots[rid]
        # [e_gamma, h_j] = -<gamma, alpha_j^vee> e_gamma
        for j in range(1, n + 1):
            c = -rs.coroot_pairing_id(rid, j)
            if c:
                m.cols[j - 1][self.e_index(rid)] = c
        # [e_gamma, e_{-gamma}] = h_{gamma^vee}
        cc = rs.coroot_coords(root)
        col = m.cols[self.e_index(rs.neg(rid))]
        for j, c in enumerate(cc):
            if c:
                col[j] = c
        # [e_gamma, e_beta] = N e_{gamma+beta}
        for b in range(len(rs.roots)):
            if b == rs.neg(rid):
                continue
            s = rs.sum_id(rid, b)
            if s is not None:
                m.cols[self.e_index(b)][self.e_index(s)] = self.n(rid, b)
        self._ad[rid] = m
        return m

    def ad_powers(self, rid: int) -> list[IntMat]:
        """[M_0=I, M_1=ad, M_2=ad^2/2, ...] until zero; all integral."""
        if rid in self._powers:
            return self._powers[rid]
        out = [IntMat.identity(self.dim)]
        adm = self.ad(rid)
        acc = adm
        k = 1
        while not acc.is_zero():
            out.append(acc.exact_div(_factorial(k)))
            k += 1
            acc = adm @ acc
            if k > 6:
                raise AssertionError("ad nilpotency bound exceeded")
        self._powers[rid] = out
        return out

    def bracket_vec(self, a: dict[int, int], b: dict[int, int]) -> dict[int, int]:
        """Lie bracket of two basis-coefficient vectors (integer coefficients)."""
        rs = self.rs
        n = rs.rank
        acc: dict[int, int] = {}

        def add(idx, v):
            if v:
                acc[idx] = acc.get(idx, 0) + v

        for i, x in a.items():
            for j, y in b.items():
                if i < n and j < n:
                    continue
                if i < n:  # [h_i, e_b]
                    add(j, x * y * rs.coroot_pairing_id(j - n, i + 1))
                elif j < n:  # [e_a, h_j]
                    add(i, -x * y * rs.coroot_pairing_id(i - n, j + 1))
                else:
                    ra, rb = i - n, j - n
                    if rb == rs.neg(ra):
                        for k, c in enumerate(rs.coroot_coords(rs.roots[ra])):
                            add(k, x * y * c)
                    else:
                        s = rs.sum_id(ra, rb)
                        if s is not None:
                            add(n + s, x * y * self.n(ra, rb))
        return {k: v for k, v in acc.items() if v}

    def _jacobi_check(self):
        """Abort if ad is not a homomorphism on a spanning set of pairs.

        Checks ad([x,y]) == ad(x)ad(y) - ad(y)ad(x) for all pairs with x a
        simple +/- generator (these generate the algebra), plus a fixed
        sample of other root pairs.
        """
        rs = self.rs
        nroots = len(rs.roots)
        pairs = []
        simples = [rs.root_id(rs.simple_root(i)) for i in range(1, rs.rank + 1)]
        gens = simples + [rs.neg(i) for i in simples]
        for a in gens:
            for b in range(nroots):
                pairs.append((a, b))
        step = max(1, (nroots * nroots) // 3000)
        flat = [(a, b) for a in range(nroots) for b in range(nroots)]
        pairs.extend(flat[::step])
        for a, b in pairs:
            if a == b:
                continue
            ada, adb = self.ad(a), self.ad(b)
            lhs = ada @ adb
            rhs = adb @ ada
            comm = lhs.plus(rhs.scaled(-1))
            ea = {self.e_index(a): 1}
            eb = {self.e_index(b): 1}
            br = self.bracket_vec(ea, eb)
            adbr = IntMat(self.dim)
            for idx, v in br.items():
                if idx < rs.rank:
                    # h component: ad(h)e_beta = <beta, alpha_idx^vee> e_beta
                    for rid in range(nroots):
                        c = v * rs.coroot_pairing_id(rid, idx + 1)
                        if c:
                            col = adbr.cols[self.e_index(rid)]
                            col[self.e_index(rid)] = col.get(self.e_index(rid), 0) + c
                else:
                    adbr = adbr.plus(self.ad(idx - rs.rank).scaled(v))
            if comm != adbr:
                raise AssertionError(
                    f"Jacobi failure for roots {rs.roots[a]}, {rs.roots[b]}"
                )

    # -- group-level tables --------------------------------------------------

    def x_int(self, rid: int, a: int = 1) -> IntMat:
        """x_gamma(a) as an integer matrix (a an integer)."""
        powers = self.ad_powers(rid)
        out = powers[0]
        for k in range(1, len(powers)):
            out = out.plus(powers[k].scaled(a**k))
        return out

    def n_int(self, rid: int) -> IntMat:
        """n_gamma = x_gamma(1) x_{-gamma}(-1) x_gamma(1) over the integers."""
        return self.x_int(rid, 1) @ self.x_int(self.rs.neg(rid), -1) @ self.x_int(rid, 1)

    def _eta_tables(self) -> list[dict[int, int]]:
        """Signs with n_i x_beta(b) n_i^{-1} = x_{s_i beta}(eta[i][beta] b)."""
        rs = self.rs
        out = [None]  # 1-indexed
        from .weyl import weyl_group

        W = weyl_group(rs)
        for i in range(1, rs.rank + 1):
            rid = rs.root_id(rs.simple_root(i))
            nm = self.n_int(rid)
            si = W.simple(i)
            table = {}
            for b in range(len(rs.roots)):
                col = nm.cols[self.e_index(b)]
                entries = {r: v for r, v in col.items() if r >= rs.rank}
                assert len(entries) == 1, "n_i is not monomial on root spaces"
                (row, val), = entries.items()
                assert row == self.e_index(si.perm[b]) and val in (1, -1)
                table[b] = val
            out.append(table)
        return out

    def _commutator_tables(self):
        """For ordered positive pairs (a,b) with a+b a root, the list of
        corrections: x_a(s) x_b(t) = x_b(t) x_a(s) * prod x_mu(C s^i t^j),
        product in canonical root order."""
        rs = self.rs
        npos = rs.num_positive
        tables: dict[tuple[int, int], tuple] = {}
        for a in range(npos):
            ra = rs.roots[a]
            for b in range(npos):
                if b == a:
                    continue
                if rs.sum_id(a, b) is None:
                    continue
                cset = []
                for i in range(1, 4):
                    for j in range(1, 4):
                        mu = tuple(i * x + j * y for x, y in zip(ra, rs.roots[b]))
                        if rs.is_root(mu):
                            cset.append((rs.root_id(mu), i, j))
                cset.sort()  # canonical (height, revlex) order via root ids
                K = (
                    self.x_int(a, -1)
                    @ self.x_int(b, -1)
                    @ self.x_int(a, 1)
                    @ self.x_int(b, 1)
                )
                entries = []
                for mu, i, j in cset:
                    c = self._read_leading(K, mu)
                    entries.append((mu, i, j, c))
                    if c:
                        K = self.x_int(mu, -c) @ K
                assert K.is_identity(), "commutator stripping failed"
                tables[(a, b)] = tuple(e for e in entries if e[3])
        return tables

    def _read_leading(self, m: IntMat, mu: int) -> int:
        """Coefficient of x_mu in a product over roots of height >= ht(mu)."""
        rs = self.rs
        vec = m.apply({self.e_index(rs.neg(mu)): 1})
        cc = rs.coroot_coords(rs.roots[mu])
        for j, c in enumerate(cc):
            if c:
                num = vec.get(j, 0)
                assert num % c == 0
                return num // c
        raise AssertionError("zero coroot")


def _factorial(k):
    out = 1
    for i in range(2, k + 1):
        out *= i
    return out


@lru_cache(maxsize=None)
def structure_constants(rs: RootSystem) -> StructureConstants:
    return StructureConstants(rs)


# ---------------------------------------------------------------------------
# generator matrices over a field


class AdjointGroup:
    """Generator matrices of the adjoint Chevalley group over a fixed field."""

    def __init__(self, rs: RootSystem, field: Field):
        self.rs = rs
        self.field = field
        self.sc = structure_constants(rs)
        self.dim = self.sc.dim
        self._x_powers: dict[int, list[FieldMat]] = {}

    def _powers(self, rid: int) -> list[FieldMat]:
        if rid not in self._x_powers:
            self._x_powers[rid] = [
                FieldMat.from_int_mat(self.field, m) for m in self.sc.ad_powers(rid)
            ]
        return self._x_powers[rid]

    def identity(self) -> FieldMat:
        return FieldMat.identity(self.field, self.dim)

    def gen_x(self, root, a) -> FieldMat:
        """x_alpha(a) = exp(a ad e_alpha)."""
        rid = self.rs.root_id(tuple(root))
        F = self.field
        powers = self._powers(rid)
        cols = [dict(c) for c in FieldMat.identity(F, self.dim).cols]
        out = FieldMat(F, self.dim, cols)
        ak = F.one
        for k in range(1, len(powers)):
            ak = F.mul(ak, a)
            if ak == F.zero:
                break
            mk = powers[k]
            for j in range(self.dim):
                col = mk.cols[j]
                if not col:
                    continue
                dst = out.cols[j]
                for r, v in col.items():
                    p = F.mul(ak, v)
                    if r in dst:
                        s = F.add(dst[r], p)
                        if s == F.zero:
                            del dst[r]
                        else:
                            dst[r] = s
                    elif p != F.zero:
                        dst[r] = p
        return out

    def apply_gen_x(self, rid: int, a, vec: dict) -> dict:
        """Apply x_{roots[rid]}(a) to a sparse vector; faster than gen_x."""
        F = self.field
        powers = self._powers(rid)
        acc = dict(vec)
        ak = F.one
        for k in range(1, len(powers)):
            ak = F.mul(ak, a)
            if ak == F.zero:
                break
            mk = powers[k]
            for j, v in vec.items():
                col = mk.cols[j]
                if not col:
                    continue
                av = F.mul(ak, v)
                for r, w in col.items():
                    p = F.mul(av, w)
                    if r in acc:
                        s = F.add(acc[r], p)
                        if s == F.zero:
                            del acc[r]
                        else:
                            acc[r] = s
                    elif p != F.zero:
                        acc[r] = p
        return acc

    def gen_h(self, coweight, c) -> FieldMat:
        """h_lambda(c): acts by c^{<lambda,beta>} on e_beta, trivially on h."""
        F = self.field
        if c == F.zero:
            raise ZeroScalar("torus parameter must be nonzero")
        rs = self.rs
        cols = []
        for j in range(rs.rank):
            cols.append({j: F.one})
        for rid, root in enumerate(rs.roots):
            k = rs.pairing(tuple(coweight), root)
            cols.append({rs.rank + rid: F.pow(c, k)})
        return FieldMat(F, self.dim, cols)

    def gen_n(self, root, c) -> FieldMat:
        """s_alpha(c) = x_alpha(c) x_{-alpha}(-c^{-1}) x_alpha(c)."""
        F = self.field
        if c == F.zero:
            raise ZeroScalar("reflection parameter must be nonzero")
        rs = self.rs
        neg = tuple(-x for x in tuple(root))
        return (
            self.gen_x(root, c)
            @ self.gen_x(neg, F.neg(F.inv(c)))
            @ self.gen_x(root, c)
        )


@lru_cache(maxsize=None)
def adjoint_group(rs: RootSystem, field_name: str) -> AdjointGroup:
    return AdjointGroup(rs, get_field(field_name))
