"""Exact cyclotomic numbers.

A ``Cyc`` holds an element of Q(zeta_m) as an integer coefficient vector in
the power basis 1, z, ..., z^(phi(m)-1) modulo the m-th cyclotomic
polynomial, together with a positive integer denominator.  All arithmetic is
exact; there is no floating point anywhere.  Conductors lift to the lcm on
mixed operations and are never minimized automatically (hashing uses a
lazily computed minimal canonical form so that equal values hash equally
across conductors).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm

from .numth import euler_phi, factor
from .unity import UnityClass


def _poly_divexact(num: list[int], den: list[int]) -> list[int]:
    """Exact division of integer polynomials (num by den, den monic-led)."""
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for i in range(len(out) - 1, -1, -1):
        c = num[i + len(den) - 1]
        if c % den[-1] != 0:
            raise ArithmeticError("non-exact polynomial division")
        q = c // den[-1]
        out[i] = q
        for j, d in enumerate(den):
            num[i + j] -= q * d
    if any(num):
        raise ArithmeticError("non-exact polynomial division")
    return out


@lru_cache(maxsize=None)
def cyclotomic_poly(m: int) -> tuple[int, ...]:
    """Coefficients (low to high) of the m-th cyclotomic polynomial."""
    if m == 1:
        return (-1, 1)
    num = [0] * (m + 1)
    num[0], num[m] = -1, 1
    den = [1]
    for d in range(1, m):
        if m % d == 0:
            phi_d = cyclotomic_poly(d)
            new = [0] * (len(den) + len(phi_d) - 1)
            for i, a in enumerate(den):
                for j, b in enumerate(phi_d):
                    new[i + j] += a * b
            den = new
    return tuple(_poly_divexact(num, den))


class _Ctx:
    """Cached arithmetic tables for one conductor."""

    def __init__(self, m: int):
        self.m = m
        self.phi = euler_phi(m)
        poly = cyclotomic_poly(m)
        phi = self.phi
        # power[k] = coefficient vector of zeta^k, k in [0, m)
        power: list[tuple[int, ...]] = []
        cur = [0] * phi
        cur[0] = 1
        for _ in range(m):
            power.append(tuple(cur))
            nxt = [0] * (phi + 1)
            for i, c in enumerate(cur):
                nxt[i + 1] = c
            top = nxt[phi]
            if top:
                for i in range(phi):
                    nxt[i] -= top * poly[i]
            cur = nxt[:phi]
        self.power = power
        # reduction rows for x^j, j in [phi, 2*phi-2]
        red: list[tuple[int, ...]] = []
        cur = list(power[phi % m]) if phi < m else None
        if phi < m:
            j = phi
            while j <= 2 * phi - 2:
                red.append(tuple(cur))
                nxt = [0] * (phi + 1)
                for i, c in enumerate(cur):
                    nxt[i + 1] = c
                top = nxt[phi]
                if top:
                    for i in range(phi):
                        nxt[i] -= top * poly[i]
                cur = nxt[:phi]
                j += 1
        self.red = red
        # conj rows: zeta^k -> zeta^(m-k) for basis k
        self.conj_rows = [power[(m - k) % m] for k in range(phi)]

    def galois_rows(self, t: int) -> list[tuple[int, ...]]:
        return [self.power[(k * t) % self.m] for k in range(self.phi)]


@lru_cache(maxsize=None)
def _ctx(m: int) -> _Ctx:
    return _Ctx(m)


def _mul_vec(ctx: _Ctx, a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    phi = ctx.phi
    prod = [0] * (2 * phi - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    prod[i + j] += ai * bj
    out = prod[:phi]
    red = ctx.red
    for j in range(phi, 2 * phi - 1):
        c = prod[j]
        if c:
            row = red[j - phi]
            for i, r in enumerate(row):
                if r:
                    out[i] += c * r
    return tuple(out)


def _apply_rows(rows, coeffs, phi):
    out = [0] * phi
    for k, c in enumerate(coeffs):
        if c:
            row = rows[k]
            for i, r in enumerate(row):
                if r:
                    out[i] += c * r
    return tuple(out)


class Cyc:
    __slots__ = ("m", "num", "den", "_key")

    def __init__(self, m: int, num: tuple[int, ...], den: int = 1, _normalized=False):
        if den == 0:
            raise ZeroDivisionError("Cyc denominator is zero")
        if not _normalized:
            if den < 0:
                den, num = -den, tuple(-c for c in num)
            g = gcd(den, *[abs(c) for c in num]) if any(num) else den
            if g > 1:
                den //= g
                num = tuple(c // g for c in num)
            if not any(num):
                m, num, den = 1, (0,), 1
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)
        object.__setattr__(self, "_key", None)

    def __setattr__(self, *a):
        raise AttributeError("Cyc is immutable")

    # -- constructors ------------------------------------------------
    @classmethod
    def from_int(cls, n: int) -> "Cyc":
        if n == 0:
            return ZERO
        return cls(1, (n,), 1, _normalized=True)

    @classmethod
    def from_fraction(cls, q: Fraction | int) -> "Cyc":
        q = Fraction(q)
        if q == 0:
            return ZERO
        return cls(1, (q.numerator,), q.denominator)

    @classmethod
    def root(cls, u: UnityClass, m: int | None = None) -> "Cyc":
        """zeta_m ** (m * u) for a conductor multiple m of order(u)."""
        if m is None:
            m = u.den
        if m % u.den != 0:
            raise ValueError(f"conductor {m} does not admit a root of order {u.den}")
        k = u.num * (m // u.den)
        ctx = _ctx(m)
        return cls(m, ctx.power[k % m], 1)

    # -- conductor handling ------------------------------------------
    def lift(self, m2: int) -> "Cyc":
        if m2 == self.m:
            return self
        if m2 % self.m != 0:
            raise ValueError(f"cannot lift conductor {self.m} to non-multiple {m2}")
        ctx2 = _ctx(m2)
        step = m2 // self.m
        rows = [ctx2.power[(k * step) % m2] for k in range(len(self.num))]
        return Cyc(m2, _apply_rows(rows, self.num, ctx2.phi), self.den)

    @staticmethod
    def _common(a: "Cyc", b: "Cyc") -> tuple["Cyc", "Cyc"]:
        if a.m == b.m:
            return a, b
        m = lcm(a.m, b.m)
        return a.lift(m), b.lift(m)

    # -- ring operations ---------------------------------------------
    def __add__(self, other) -> "Cyc":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        a, b = Cyc._common(self, other)
        da, db = a.den, b.den
        num = tuple(x * db + y * da for x, y in zip(a.num, b.num))
        return Cyc(a.m, num, da * db)

    __radd__ = __add__

    def __neg__(self) -> "Cyc":
        return Cyc(self.m, tuple(-c for c in self.num), self.den, _normalized=True)

    def __sub__(self, other) -> "Cyc":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other) -> "Cyc":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return ZERO
        a, b = Cyc._common(self, other)
        return Cyc(a.m, _mul_vec(_ctx(a.m), a.num, b.num), a.den * b.den)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Cyc":
        if k < 0:
            return self.inverse() ** (-k)
        out = ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def conj(self) -> "Cyc":
        ctx = _ctx(self.m)
        return Cyc(self.m, _apply_rows(ctx.conj_rows, self.num, ctx.phi), self.den)

    def galois(self, t: int) -> "Cyc":
        """Apply the Galois map zeta -> zeta^t (gcd(t, m) must be 1)."""
        if gcd(t, self.m) != 1:
            raise ValueError("galois twist index must be coprime to the conductor")
        ctx = _ctx(self.m)
        return Cyc(self.m, _apply_rows(ctx.galois_rows(t % self.m), self.num, ctx.phi), self.den)

    def abs2(self) -> "Cyc":
        """x * conj(x); lands in the real subfield, rational in small cases."""
        return self * self.conj()

    # -- predicates / extraction --------------------------------------
    def is_zero(self) -> bool:
        return not any(self.num)

    def is_rational(self) -> bool:
        return not any(self.num[1:])

    def rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return Fraction(self.num[0], self.den)

    def is_integer(self) -> bool:
        return self.is_rational() and self.den == 1

    def integer(self) -> int:
        q = self.rational()
        if q.denominator != 1:
            raise ValueError(f"{self!r} is not a rational integer")
        return q.numerator

    def as_root_of_unity(self) -> UnityClass | None:
        """If x == zeta_m^k (exactly, including -1 factors), its class in Q/Z."""
        if self.den != 1:
            return None
        ctx = _ctx(self.m)
        for k in range(self.m):
            if self.num == ctx.power[k]:
                return UnityClass(k, self.m)
        if self.m % 2 == 1:  # -zeta^k = zeta_{2m}^{m+2k}
            for k in range(self.m):
                if self.num == tuple(-c for c in ctx.power[k]):
                    return UnityClass(self.m + 2 * k, 2 * self.m)
        return None

    # -- canonical form, equality, hashing ----------------------------
    def _canonical(self):
        key = self._key
        if key is None:
            c = self.minimize()
            key = (c.m, c.num, c.den)
            object.__setattr__(self, "_key", key)
        return key

    def minimize(self) -> "Cyc":
        """Equal value at the smallest conductor (conductor minimization on demand)."""
        cur = self
        changed = True
        while changed:
            changed = False
            for p in sorted(factor(cur.m), reverse=True) if cur.m > 1 else []:
                d = cur.m // p
                if d >= 1 and _fixed_by_gal_subfield(cur, d):
                    down = _express_in_subfield(cur, d)
                    if down is not None:
                        cur = down
                        changed = True
                        break
        return cur

    def __eq__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.m == other.m:
            return self.num == other.num and self.den == other.den
        a, b = Cyc._common(self, other)
        return a.num == b.num and a.den == b.den

    def __hash__(self):
        return hash(self._canonical())

    def __repr__(self) -> str:
        if self.is_rational():
            q = self.rational()
            return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"
        terms = []
        for k, c in enumerate(self.num):
            if c:
                z = f"z{self.m}^{k}" if k > 1 else ("1" if k == 0 else f"z{self.m}")
                terms.append(f"{c}*{z}")
        s = " + ".join(terms).replace("+ -", "- ")
        return s if self.den == 1 else f"({s})/{self.den}"

    # -- field inverse -------------------------------------------------
    def inverse(self) -> "Cyc":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero Cyc")
        if self.is_rational():
            q = self.rational()
            return Cyc.from_fraction(1 / q)
        ctx = _ctx(self.m)
        phi = ctx.phi
        # solve (self * y) == 1 as a rational linear system in coeffs(y)
        cols = []
        for k in range(phi):
            e = [0] * phi
            e[k] = 1
            cols.append(_mul_vec(ctx, self.num, tuple(e)))
        mat = [[Fraction(cols[k][i]) for k in range(phi)] for i in range(phi)]
        rhs = [Fraction(self.den if i == 0 else 0) for i in range(phi)]
        sol = _solve_rational(mat, rhs)
        if sol is None:
            raise ZeroDivisionError("Cyc is a zero divisor (cannot happen in a field)")
        den = lcm(*[f.denominator for f in sol]) if sol else 1
        num = tuple(int(f * den) for f in sol)
        return Cyc(self.m, num, den)

    def __truediv__(self, other) -> "Cyc":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return _coerce(other) * self.inverse()


def _coerce(x) -> "Cyc":
    if isinstance(x, Cyc):
        return x
    if isinstance(x, int):
        return Cyc.from_int(x)
    if isinstance(x, Fraction):
        return Cyc.from_fraction(x)
    return NotImplemented


def _solve_rational(mat: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction] | None:
    n = len(mat)
    aug = [row[:] + [rhs[i]] for i, row in enumerate(mat)]
    col = 0
    pivots = []
    for col in range(n):
        piv = next((r for r in range(len(pivots), n) if aug[r][col] != 0), None)
        if piv is None:
            continue
        r = len(pivots)
        aug[r], aug[piv] = aug[piv], aug[r]
        inv = 1 / aug[r][col]
        aug[r] = [v * inv for v in aug[r]]
        for rr in range(n):
            if rr != r and aug[rr][col] != 0:
                f = aug[rr][col]
                aug[rr] = [a - f * b for a, b in zip(aug[rr], aug[r])]
        pivots.append(col)
    sol = [Fraction(0)] * n
    for r, col in enumerate(pivots):
        sol[col] = aug[r][n]
    # verify (system may be singular)
    for i in range(n):
        if sum(mat[i][j] * sol[j] for j in range(n)) != rhs[i]:
            return None
    return sol


def _fixed_by_gal_subfield(x: Cyc, d: int) -> bool:
    """True if x is fixed by Gal(Q(z_m)/Q(z_d)), i.e. by all t = 1 mod d."""
    m = x.m
    for t in range(1, m):
        if t % d == 1 % d and gcd(t, m) == 1 and t != 1:
            if x.galois(t) != x:
                return False
    return True


def _express_in_subfield(x: Cyc, d: int) -> Cyc | None:
    """Rewrite x in conductor d (x assumed Galois-fixed); None if impossible."""
    m = x.m
    step = m // d
    ctx = _ctx(m)
    phi_d = euler_phi(d)
    cols = [ctx.power[(step * j) % m] for j in range(phi_d)]
    mat = [[Fraction(cols[j][i]) for j in range(phi_d)] for i in range(ctx.phi)]
    # overdetermined; solve the square top part then verify all rows
    rhs = [Fraction(c, x.den) for c in x.num]
    sol = _solve_overdetermined(mat, rhs)
    if sol is None:
        return None
    den = lcm(*[f.denominator for f in sol]) if sol else 1
    num = tuple(int(f * den) for f in sol)
    if len(num) < phi_d:
        num = num + (0,) * (phi_d - len(num))
    return Cyc(d, num, den)


def _solve_overdetermined(mat, rhs):
    rows, cols = len(mat), len(mat[0]) if mat else 0
    aug = [mat[i][:] + [rhs[i]] for i in range(rows)]
    pivots = []
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if aug[i][c] != 0), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        inv = 1 / aug[r][c]
        aug[r] = [v * inv for v in aug[r]]
        for i in range(rows):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    sol = [Fraction(0)] * cols
    for i, c in enumerate(pivots):
        sol[c] = aug[i][cols]
    for i in range(rows):
        if sum(mat[i][j] * sol[j] for j in range(cols)) != rhs[i]:
            return None
    return sol


ZERO = Cyc(1, (0,), 1, _normalized=True)
ONE = Cyc(1, (1,), 1, _normalized=True)


def cyc_eval(u: UnityClass, m: int | None = None) -> Cyc:
    """Exact embedding of a Q/Z class as a root of unity in Q(zeta_m)."""
    return Cyc.root(u, m)


def zeta(m: int, k: int = 1) -> Cyc:
    return Cyc.root(UnityClass(k, m), m)
