"""Finite fields F_q and exact matrix algebra over them.

Elements of F_(p^f) are ints in [0, p^f) encoding coefficient vectors base p
against the deterministic defining polynomial: the monic irreducible of
degree f whose non-leading coefficient vector (a_{f-1}, ..., a_0), read as a
base-p integer, is least.  Matrices are flat row-major tuples.  The hot
matrix loops live in a compiled Cython kernel when available, with a
pure-Python twin as fallback.
"""

from __future__ import annotations

from functools import lru_cache

from .numth import factor

try:  # compiled kernel, built by setup.py when Cython is present
    from . import _fqcore as _kernel  # type: ignore
except ImportError:  # pragma: no cover - depends on build environment
    from . import _fqcore_py as _kernel  # type: ignore

KERNEL_IMPLEMENTATION = _kernel.IMPLEMENTATION


def _poly_mul_mod(a, b, mod, p):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] = (out[i + j] + x * y) % p
    # reduce by monic mod
    deg = len(mod) - 1
    for i in range(len(out) - 1, deg - 1, -1):
        c = out[i]
        if c:
            for j in range(deg + 1):
                out[i - deg + j] = (out[i - deg + j] - c * mod[j]) % p
    return out[:deg]


def _poly_pow_x_mod(e, mod, p):
    """x^e mod (mod) over F_p."""
    result = [1]
    base = [0, 1]
    deg = len(mod) - 1
    base = (base + [0] * deg)[:deg] if deg > 1 else _poly_mul_mod([1], base, mod, p)
    result = (result + [0] * deg)[:deg]
    while e:
        if e & 1:
            result = _poly_mul_mod(result, base, mod, p)
        base = _poly_mul_mod(base, base, mod, p)
        e >>= 1
    return result


def _is_irreducible(coeffs, p):
    """coeffs: monic, low-to-high, over F_p."""
    f = len(coeffs) - 1
    if f == 1:
        return True
    # x^(p^f) == x mod g, and x^(p^(f/l)) != x for prime l | f
    xq = _poly_pow_x_mod(p**f, coeffs, p)
    if xq != [0, 1] + [0] * (f - 2):
        return False
    for l in factor(f):
        d = f // l
        xd = _poly_pow_x_mod(p**d, coeffs, p)
        if xd == [0, 1] + [0] * (f - 2):
            return False
    return True


@lru_cache(maxsize=None)
def _defining_poly(p: int, f: int) -> tuple[int, ...]:
    """Lexicographically least monic irreducible of degree f over F_p.

    Least under reading (a_{f-1}, ..., a_1, a_0) as a base-p integer.
    """
    for code in range(p**f):
        coeffs = []
        c = code
        for _ in range(f):
            coeffs.append(c % p)
            c //= p
        poly = coeffs + [1]  # low-to-high, monic
        if poly[0] == 0 and f > 1:
            continue  # reducible (x divides)
        if _is_irreducible(poly, p):
            return tuple(poly)
    raise RuntimeError("no irreducible polynomial found (unreachable)")


class FieldSpec:
    """F_q with q = p^f and full arithmetic lookup tables (desk-scale q)."""

    def __init__(self, p: int, f: int = 1):
        from .numth import is_prime

        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        if f < 1:
            raise ValueError("extension degree must be >= 1")
        self.p = p
        self.f = f
        self.q = p**f
        self.poly = _defining_poly(p, f)
        q = self.q
        # element i encodes sum_j digit_j(i) * x^j
        add = [0] * (q * q)
        mul = [0] * (q * q)
        for a in range(q):
            da = self._digits(a)
            for b in range(a, q):
                db = self._digits(b)
                s = self._encode([(x + y) % p for x, y in zip(da, db)])
                add[a * q + b] = s
                add[b * q + a] = s
        for a in range(q):
            da = self._digits(a)
            for b in range(a, q):
                db = self._digits(b)
                pr = self._encode(_poly_mul_mod(da, db, list(self.poly), p))
                mul[a * q + b] = pr
                mul[b * q + a] = pr
        self.add = add
        self.mul = mul
        self.neg = [self._encode([(-x) % p for x in self._digits(a)]) for a in range(q)]
        inv = [0] * q
        for a in range(1, q):
            for b in range(1, q):
                if mul[a * q + b] == 1:
                    inv[a] = b
                    break
        self.inv = inv
        self.frob = [self.pow(a, p) for a in range(q)]  # x -> x^p
        # element orders and a fixed primitive element (least generator)
        self.gen = next(a for a in range(2, q) if self.element_order(a) == q - 1) if q > 2 else 1
        # discrete log base gen: dlog[a] = k with gen^k = a (a != 0)
        dlog = [0] * q
        x = 1
        for k in range(q - 1):
            dlog[x] = k
            x = mul[x * q + self.gen]
        self.dlog = dlog

    def _digits(self, a: int) -> list[int]:
        out = []
        for _ in range(self.f):
            out.append(a % self.p)
            a //= self.p
        return out

    def _encode(self, digits) -> int:
        out = 0
        for d in reversed(list(digits)):
            out = out * self.p + d % self.p
        return out

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a = self.inv[a]
            e = -e
        out, base = 1, a
        mul, q = self.mul, self.q
        while e:
            if e & 1:
                out = mul[out * q + base]
            base = mul[base * q + base]
            e >>= 1
        return out

    def element_order(self, a: int) -> int:
        if a == 0:
            raise ValueError("0 has no multiplicative order")
        k, x = 1, a
        while x != 1:
            x = self.mul[x * self.q + a]
            k += 1
        return k

    def sub(self, a: int, b: int) -> int:
        return self.add[a * self.q + self.neg[b]]

    def trace_to_prime(self, a: int) -> int:
        """Tr_{F_q/F_p}(a) as an int in [0, p)."""
        t, x = 0, a
        for _ in range(self.f):
            t = self.add[t * self.q + x]
            x = self.frob[x]
        return t  # lies in the prime field: encoding of c is c itself

    def subfield_power_map(self, e: int) -> list[int]:
        """The map x -> x^(p^e) as a table."""
        out = list(range(self.q))
        for _ in range(e):
            out = [self.frob[x] for x in out]
        return out

    def __repr__(self):
        return f"F_{self.q}" if self.f > 1 else f"F_{self.p}"


@lru_cache(maxsize=None)
def field(p: int, f: int = 1) -> FieldSpec:
    return FieldSpec(p, f)


class FqMatrix:
    """Square matrix over a FieldSpec; immutable, hashable."""

    __slots__ = ("F", "n", "data")

    def __init__(self, F: FieldSpec, n: int, data):
        self.F = F
        self.n = n
        self.data = tuple(data)
        if len(self.data) != n * n:
            raise ValueError("matrix data has wrong length")

    @classmethod
    def identity(cls, F: FieldSpec, n: int) -> "FqMatrix":
        return cls(F, n, tuple(1 if i == j else 0 for i in range(n) for j in range(n)))

    @classmethod
    def scalar(cls, F: FieldSpec, n: int, s: int) -> "FqMatrix":
        return cls(F, n, tuple(s if i == j else 0 for i in range(n) for j in range(n)))

    @classmethod
    def from_rows(cls, F: FieldSpec, rows) -> "FqMatrix":
        rows = [list(r) for r in rows]
        n = len(rows)
        return cls(F, n, tuple(x % F.q for r in rows for x in r))

    def rows(self):
        return [list(self.data[i * self.n : (i + 1) * self.n]) for i in range(self.n)]

    def __mul__(self, other: "FqMatrix") -> "FqMatrix":
        F = self.F
        return FqMatrix(F, self.n, _kernel.mat_mul(self.data, other.data, self.n, F.q, F.mul, F.add))

    def __eq__(self, other):
        return isinstance(other, FqMatrix) and self.data == other.data and self.F is other.F

    def __hash__(self):
        return hash(self.data)

    def rank(self) -> int:
        F = self.F
        return _kernel.mat_rank(self.data, self.n, F.q, F.mul, F.add, F.neg, F.inv)

    def is_invertible(self) -> bool:
        return self.rank() == self.n

    def sub_scalar(self, lam: int) -> "FqMatrix":
        F, n = self.F, self.n
        d = list(self.data)
        for i in range(n):
            d[i * n + i] = F.sub(d[i * n + i], lam)
        return FqMatrix(F, n, d)

    def transpose(self) -> "FqMatrix":
        n = self.n
        return FqMatrix(self.F, n, tuple(self.data[j * n + i] for i in range(n) for j in range(n)))

    def map_entries(self, table) -> "FqMatrix":
        return FqMatrix(self.F, self.n, tuple(table[x] for x in self.data))

    def conj_transpose(self, e: int) -> "FqMatrix":
        """Transpose composed with the field power map x -> x^(p^e)."""
        return self.transpose().map_entries(self.F.subfield_power_map(e))

    def inverse(self) -> "FqMatrix":
        F, n, q = self.F, self.n, self.F.q
        mul, add, neg, inv = F.mul, F.add, F.neg, F.inv
        m = [list(self.data[i * n : (i + 1) * n]) + [1 if j == i else 0 for j in range(n)] for i in range(n)]
        rank = 0
        for col in range(n):
            piv = next((r for r in range(rank, n) if m[r][col]), None)
            if piv is None:
                raise ZeroDivisionError("singular matrix")
            m[rank], m[piv] = m[piv], m[rank]
            pivinv = inv[m[rank][col]]
            if pivinv != 1:
                m[rank] = [mul[pivinv * q + v] for v in m[rank]]
            for r in range(n):
                if r != rank and m[r][col]:
                    f_ = neg[m[r][col]]
                    m[r] = [add[a * q + mul[f_ * q + b]] for a, b in zip(m[r], m[rank])]
            rank += 1
        return FqMatrix(F, n, tuple(m[i][n + j] for i in range(n) for j in range(n)))

    def __pow__(self, e: int) -> "FqMatrix":
        if e < 0:
            return self.inverse() ** (-e)
        out = FqMatrix.identity(self.F, self.n)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def order(self, cap: int = 10**6) -> int:
        ident = FqMatrix.identity(self.F, self.n)
        x, k = self, 1
        while x != ident:
            x = x * self
            k += 1
            if k > cap:
                raise RuntimeError("matrix order exceeds cap (non-invertible input?)")
        return k

    def apply(self, v):
        F = self.F
        return _kernel.mat_vec(self.data, tuple(v), self.n, F.q, F.mul, F.add)

    def trace(self) -> int:
        n, F = self.n, self.F
        t = 0
        for i in range(n):
            t = F.add[t * F.q + self.data[i * n + i]]
        return t

    def char_poly(self) -> tuple[int, ...]:
        """Characteristic polynomial coefficients (low to high, monic) over F_q."""
        F, n, q = self.F, self.n, self.F.q
        # Hessenberg-free direct expansion via exact Gaussian elimination on
        # x*I - A over F_q[x] is overkill at desk scale; use Leverrier-type
        # recursion only in char 0, so here: brute interpolation-free minor
        # expansion for small n.
        if n > 6:
            raise NotImplementedError("char_poly implemented for n <= 6")

        def det_poly(rows):
            # rows: list of lists of poly coeff tuples over F_q
            k = len(rows)
            if k == 1:
                return rows[0][0]
            out = None
            for j in range(k):
                entry = rows[0][j]
                if not any(entry):
                    continue
                minor = [[rows[i][jj] for jj in range(k) if jj != j] for i in range(1, k)]
                sub = det_poly(minor)
                term = _polymul_fq(F, entry, sub)
                if j % 2 == 1:
                    term = tuple(F.neg[c] for c in term)
                out = term if out is None else _polyadd_fq(F, out, term)
            return out if out is not None else (0,)

        rows = []
        for i in range(n):
            row = []
            for j in range(n):
                a = self.data[i * n + j]
                if i == j:
                    row.append((F.neg[a], 1))  # x - a
                else:
                    row.append((F.neg[a],))
            rows.append(row)
        poly = list(det_poly(rows))
        while len(poly) < n + 1:
            poly.append(0)
        return tuple(poly)

    def __repr__(self):
        return f"FqMatrix({self.F}, {self.rows()})"


def _polyadd_fq(F, a, b):
    la, lb = len(a), len(b)
    out = []
    for i in range(max(la, lb)):
        x = a[i] if i < la else 0
        y = b[i] if i < lb else 0
        out.append(F.add[x * F.q + y])
    return tuple(out)


def _polymul_fq(F, a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] = F.add[out[i + j] * F.q + F.mul[x * F.q + y]]
    return tuple(out)


def kernel_dim(a: FqMatrix, lam: int = 0) -> int:
    """dim over F_q of ker(a - lam * I)."""
    if not 0 <= lam < a.F.q:
        raise ValueError("scalar outside the field")
    return a.n - a.sub_scalar(lam).rank()


def poly_is_irreducible_fq(F: FieldSpec, coeffs) -> bool:
    """Monic polynomial (low-to-high int coeffs over F_q) irreducible over F_q?

    Brute check by scanning for roots and low-degree factors; desk-scale only.
    """
    coeffs = list(coeffs)
    deg = len(coeffs) - 1
    if deg == 1:
        return True

    def eval_at(x):
        acc = 0
        for c in reversed(coeffs):
            acc = F.add[F.mul[acc * F.q + x] * F.q + c]
        return acc

    if any(eval_at(x) == 0 for x in range(F.q)) and deg > 1:
        return False
    if deg <= 3:
        return True
    # trial division by monic irreducible factors of degree d <= deg // 2
    for d in range(2, deg // 2 + 1):
        for code in range(F.q**d):
            g = []
            c = code
            for _ in range(d):
                g.append(c % F.q)
                c //= F.q
            g.append(1)
            if _fq_poly_divides(F, g, coeffs):
                return False
    return True


def _fq_poly_divides(F, g, f) -> bool:
    f = list(f)
    dg = len(g) - 1
    while len(f) - 1 >= dg:
        lead = f[-1]
        if lead:
            shift = len(f) - 1 - dg
            for i, c in enumerate(g):
                f[shift + i] = F.sub(f[shift + i], F.mul[lead * F.q + c])
        f.pop()
    return not any(f)


def companion_matrix(F: FieldSpec, coeffs) -> FqMatrix:
    """Companion matrix of a monic polynomial (low-to-high coeffs over F_q)."""
    n = len(coeffs) - 1
    rows = [[0] * n for _ in range(n)]
    for i in range(1, n):
        rows[i][i - 1] = 1
    for i in range(n):
        rows[i][n - 1] = F.neg[coeffs[i] % F.q]
    return FqMatrix.from_rows(F, rows)
