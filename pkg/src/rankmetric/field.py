"""Exact arithmetic in finite fields F_Q, Q = p^(e*n), via discrete-log tables.

An element of F_Q is a plain integer in [0, Q): its base-p digits are the
coefficients, little-endian, of the element's polynomial representative in
F_p[t] / (modulus).  0 is the zero element, 1 the multiplicative identity.
This encoding is the on-disk serialization as well, so element values are
meaningful across processes given the same FieldSpec.

A FieldCtx is built once per field (and cached): it fixes a generator g of
F_Q^* (the smallest element index that is primitive), exp/log tables, and
the change of coordinates between F_{q^n} and F_q^n relative to the power
basis {g^0, ..., g^(n-1)}.  Contexts are immutable after construction, so
they can be shared freely between threads and forked workers.

Multiplication, inversion, powers and Frobenius maps run on the log tables;
addition is digit-wise base p (XOR when p = 2).  Every scalar operation has
a vectorised twin (``vadd``, ``vmul``, ``vfrob``, ...) operating on numpy
arrays of element indices; the exhaustive scans in the rest of the package
are built on those.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

DEFAULT_TABLE_CAP = 2 ** 24


# ---------------------------------------------------------------------------
# small integer helpers
# ---------------------------------------------------------------------------

def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of n, ascending."""
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1 if f == 2 else 2
    if n > 1:
        out.append(n)
    return out


def factor_prime_power(q: int) -> tuple[int, int]:
    """Write q = p^e with p prime, or raise ValueError."""
    fs = prime_factors(q)
    if len(fs) != 1:
        raise ValueError(f"{q} is not a prime power")
    p = fs[0]
    e = 0
    while q > 1:
        q //= p
        e += 1
    return p, e


# ---------------------------------------------------------------------------
# dense polynomial arithmetic over F_p (little-endian coefficient tuples)
# ---------------------------------------------------------------------------

def _ptrim(a):
    i = len(a)
    while i > 0 and a[i - 1] == 0:
        i -= 1
    return tuple(a[:i])


def _pmul(a, b, p):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _ptrim(out)


def _pmod(a, m, p):
    a = list(a)
    dm = len(m) - 1
    inv_lead = pow(m[-1], -1, p)
    for i in range(len(a) - 1, dm - 1, -1):
        c = a[i] % p
        if c:
            f = (c * inv_lead) % p
            for j in range(dm + 1):
                a[i - dm + j] = (a[i - dm + j] - f * m[j]) % p
    return _ptrim(a[:dm])


def _pmulmod(a, b, m, p):
    return _pmod(_pmul(a, b, p), m, p)


def _ppowmod(a, k, m, p):
    result = (1,)
    base = _pmod(a, m, p)
    while k:
        if k & 1:
            result = _pmulmod(result, base, m, p)
        base = _pmulmod(base, base, m, p)
        k >>= 1
    return result


def _pgcd(a, b, p):
    a, b = _ptrim(a), _ptrim(b)
    while b:
        a, b = b, _pmod(a, b, p)
    if a:
        inv = pow(a[-1], -1, p)
        a = tuple((c * inv) % p for c in a)
    return a


def _psub(a, b, p):
    la, lb = len(a), len(b)
    out = [((a[i] if i < la else 0) - (b[i] if i < lb else 0)) % p
           for i in range(max(la, lb))]
    return _ptrim(out)


def is_irreducible(modulus, p: int) -> bool:
    """Rabin's test for a polynomial over F_p (little-endian coefficients)."""
    m = _ptrim(modulus)
    d = len(m) - 1
    if d < 1:
        return False
    if d == 1:
        return True
    x = (0, 1)
    for r in prime_factors(d):
        h = _ppowmod(x, p ** (d // r), m, p)
        g = _pgcd(_psub(h, x, p), m, p)
        if len(g) - 1 != 0:
            return False
    h = _ppowmod(x, p ** d, m, p)
    return not _psub(h, x, p)


def _is_primitive_modulus(modulus, p: int) -> bool:
    """True when the class of t generates the multiplicative group."""
    m = _ptrim(modulus)
    d = len(m) - 1
    order = p ** d - 1
    if order == 1:
        return True
    t = (0, 1)
    if _ppowmod(t, order, m, p) != (1,):
        return False
    return all(_ppowmod(t, order // r, m, p) != (1,) for r in prime_factors(order))


def _search_canonical_modulus(p: int, d: int):
    """Smallest (by digit encoding) monic primitive polynomial of degree d."""
    if d == 1:
        return (0, 1)
    for low in range(1, p ** d):
        coeffs = []
        v = low
        for _ in range(d):
            coeffs.append(v % p)
            v //= p
        m = tuple(coeffs) + (1,)
        if is_irreducible(m, p) and _is_primitive_modulus(m, p):
            return m
    raise RuntimeError(f"no primitive polynomial of degree {d} over F_{p}")


# Frozen table of canonical moduli (smallest monic primitive polynomial of
# each degree, little-endian, leading 1 included).  Regenerable with
# _search_canonical_modulus; kept literal so field construction never
# depends on a search.
_CANONICAL_MODULI: dict[tuple[int, int], tuple[int, ...]] = {
    (2, 1): (0, 1),
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (2, 5): (1, 0, 1, 0, 0, 1),
    (2, 6): (1, 1, 0, 0, 0, 0, 1),
    (2, 7): (1, 1, 0, 0, 0, 0, 0, 1),
    (2, 8): (1, 0, 1, 1, 1, 0, 0, 0, 1),
    (2, 9): (1, 0, 0, 0, 1, 0, 0, 0, 0, 1),
    (2, 10): (1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1),
    (2, 11): (1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (2, 12): (1, 1, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0, 1),
    (2, 13): (1, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (2, 14): (1, 1, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (2, 15): (1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (2, 16): (1, 0, 1, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (2, 17): (1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (2, 18): (1, 1, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (2, 19): (1, 1, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (2, 20): (1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (2, 21): (1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (2, 22): (1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (2, 23): (1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (2, 24): (1, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (3, 1): (0, 1),
    (3, 2): (2, 1, 1),
    (3, 3): (1, 2, 0, 1),
    (3, 4): (2, 1, 0, 0, 1),
    (3, 5): (1, 2, 0, 0, 0, 1),
    (3, 6): (2, 1, 0, 0, 0, 0, 1),
    (3, 7): (1, 2, 1, 0, 0, 0, 0, 1),
    (3, 8): (2, 0, 0, 1, 0, 0, 0, 0, 1),
    (3, 9): (1, 0, 1, 2, 0, 0, 0, 0, 0, 1),
    (3, 10): (2, 1, 0, 1, 0, 0, 0, 0, 0, 0, 1),
    (3, 11): (1, 2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (3, 12): (2, 2, 2, 1, 2, 0, 0, 0, 0, 0, 0, 0, 1),
    (3, 13): (1, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (3, 14): (2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (3, 15): (1, 2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (5, 1): (0, 1),
    (5, 2): (2, 1, 1),
    (5, 3): (2, 3, 0, 1),
    (5, 4): (2, 2, 1, 0, 1),
    (5, 5): (2, 4, 0, 0, 0, 1),
    (5, 6): (2, 1, 0, 0, 0, 0, 1),
    (5, 7): (2, 3, 0, 0, 0, 0, 0, 1),
    (5, 8): (3, 2, 1, 0, 0, 0, 0, 0, 1),
    (5, 9): (3, 2, 1, 0, 0, 0, 0, 0, 0, 1),
    (5, 10): (3, 1, 1, 0, 0, 0, 0, 0, 0, 0, 1),
    (7, 1): (0, 1),
    (7, 2): (3, 1, 1),
    (7, 3): (2, 3, 0, 1),
    (7, 4): (5, 3, 1, 0, 1),
    (7, 5): (4, 1, 0, 0, 0, 1),
    (7, 6): (5, 1, 3, 0, 0, 0, 1),
    (7, 7): (2, 6, 0, 0, 0, 0, 0, 1),
    (7, 8): (3, 1, 0, 0, 0, 0, 0, 0, 1),
    (11, 1): (0, 1),
    (11, 2): (7, 1, 1),
    (11, 3): (4, 1, 0, 1),
    (11, 4): (2, 1, 0, 0, 1),
    (11, 5): (4, 1, 1, 0, 0, 1),
    (11, 6): (8, 2, 1, 0, 0, 0, 1),
    (13, 1): (0, 1),
    (13, 2): (2, 1, 1),
    (13, 3): (6, 1, 0, 1),
    (13, 4): (2, 1, 1, 0, 1),
    (13, 5): (2, 4, 0, 0, 0, 1),
    (13, 6): (2, 2, 1, 0, 0, 0, 1),
}


def canonical_modulus(p: int, d: int) -> tuple[int, ...]:
    try:
        return _CANONICAL_MODULI[(p, d)]
    except KeyError:
        return _search_canonical_modulus(p, d)


# ---------------------------------------------------------------------------
# field specification
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FieldSpec:
    """Description of F_{q^n}, q = p^e: prime, tower degrees and modulus.

    ``modulus`` is a monic irreducible of degree e*n over F_p, little-endian.
    """

    p: int
    e: int
    n: int
    modulus: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "modulus", tuple(int(c) % self.p for c in self.modulus))
        if not is_prime(self.p):
            raise ValueError(f"p = {self.p} is not prime")
        if self.e < 1 or self.n < 1:
            raise ValueError("extension degrees must be >= 1")
        m = _ptrim(self.modulus)
        if len(m) - 1 != self.degree:
            raise ValueError(
                f"modulus degree {len(m) - 1} != e*n = {self.degree}")
        if m[-1] != 1:
            raise ValueError("modulus must be monic")
        if not is_irreducible(m, self.p):
            raise ValueError("modulus is reducible over F_p")

    @classmethod
    def canonical(cls, p: int, e: int, n: int) -> "FieldSpec":
        return cls(p, e, n, canonical_modulus(p, e * n))

    @property
    def q(self) -> int:
        return self.p ** self.e

    @property
    def Q(self) -> int:
        return self.p ** (self.e * self.n)

    @property
    def degree(self) -> int:
        return self.e * self.n

    def to_json(self) -> dict:
        return {"p": self.p, "e": self.e, "n": self.n, "modulus": list(self.modulus)}

    @classmethod
    def from_json(cls, obj: dict) -> "FieldSpec":
        return cls(int(obj["p"]), int(obj["e"]), int(obj["n"]),
                   tuple(int(c) for c in obj["modulus"]))


# ---------------------------------------------------------------------------
# F_p matrix helpers (for the coordinate maps)
# ---------------------------------------------------------------------------

def _matinv_mod_p(A: np.ndarray, p: int) -> np.ndarray:
    n = A.shape[0]
    M = np.concatenate([A % p, np.eye(n, dtype=np.int64)], axis=1)
    row = 0
    for col in range(n):
        piv = None
        for r in range(row, n):
            if M[r, col] % p:
                piv = r
                break
        if piv is None:
            raise ValueError("matrix is singular mod p")
        if piv != row:
            M[[row, piv]] = M[[piv, row]]
        M[row] = (M[row] * pow(int(M[row, col]), -1, p)) % p
        for r in range(n):
            if r != row and M[r, col]:
                M[r] = (M[r] - M[r, col] * M[row]) % p
        row += 1
    return M[:, n:] % p


# ---------------------------------------------------------------------------
# the field context
# ---------------------------------------------------------------------------

class FieldCtx:
    """Arithmetic tables for F_{q^n}.  Build through :func:`build_field`."""

    def __init__(self, spec: FieldSpec, cap: int = DEFAULT_TABLE_CAP):
        self.spec = spec
        self.p = spec.p
        self.e = spec.e
        self.n = spec.n
        self.d = spec.degree
        self.q = spec.q
        self.Q = spec.Q
        if self.Q > cap:
            raise ValueError(f"field size {self.Q} exceeds table cap {cap}")
        self.order = self.Q - 1

        self._ppows = np.array([self.p ** i for i in range(self.d)], dtype=np.int64)
        self.modulus = spec.modulus

        self.generator = self._find_generator()
        self._build_log_tables()
        # q^i mod (Q-1) drives Frobenius in log space; q^n = Q = 1 mod (Q-1).
        om = max(self.order, 1)
        self._qpow = [pow(self.q, i, om) for i in range(self.n + 1)]
        self._build_coordinates()
        self._subfields: dict[int, np.ndarray] = {}

    # -- construction ------------------------------------------------------

    def _digits(self, idx: int) -> list[int]:
        out = []
        for _ in range(self.d):
            out.append(idx % self.p)
            idx //= self.p
        return out

    def _index(self, digits) -> int:
        idx = 0
        for c in reversed(list(digits)):
            idx = idx * self.p + int(c) % self.p
        return idx

    def _poly_of(self, idx: int):
        return _ptrim(self._digits(idx))

    def _find_generator(self) -> int:
        if self.Q == 2:
            return 1
        factors = prime_factors(self.order)
        m = _ptrim(self.modulus)
        for idx in range(1, self.Q):
            a = self._poly_of(idx)
            if _ppowmod(a, self.order, m, self.p) != (1,):
                continue
            if all(_ppowmod(a, self.order // r, m, self.p) != (1,) for r in factors):
                return idx
        raise RuntimeError("no primitive element found (modulus not irreducible?)")

    def _build_log_tables(self):
        Q, p, d = self.Q, self.p, self.d
        exp = np.empty(max(self.order, 1), dtype=np.int64)
        g = self.generator
        if g == p and p == 2 and d > 1:
            # multiplication by t is a shift with XOR reduction
            mbits = self._index(self.modulus)
            top = 1 << d
            acc = 1
            for k in range(self.order):
                exp[k] = acc
                acc <<= 1
                if acc & top:
                    acc ^= mbits
        elif g == p and d > 1:
            # multiplication by t: digit shift, subtract lead * modulus
            mod = [int(c) for c in self.modulus[:d]]
            acc = [0] * d
            acc[0] = 1
            ppows = [p ** i for i in range(d)]
            for k in range(self.order):
                v = 0
                for i in range(d):
                    v += acc[i] * ppows[i]
                exp[k] = v
                lead = acc[d - 1]
                acc = [0] + acc[:d - 1]
                if lead:
                    for i in range(d):
                        acc[i] = (acc[i] - lead * mod[i]) % p
        else:
            # generic: multiplication by g as a d x d matrix over F_p
            m = _ptrim(self.modulus)
            gpoly = self._poly_of(g)
            M = np.zeros((d, d), dtype=np.int64)
            for i in range(d):
                col = _pmulmod(gpoly, tuple([0] * i + [1]), m, p)
                for j, c in enumerate(col):
                    M[j, i] = c
            v = np.zeros(d, dtype=np.int64)
            v[0] = 1
            for k in range(self.order):
                exp[k] = int(v @ self._ppows)
                v = (M @ v) % p
        log = np.zeros(Q, dtype=np.int64)
        log[exp] = np.arange(max(self.order, 1), dtype=np.int64)
        self._exp = exp
        self._log = log
        if self.order > 0 and exp[0] != 1:
            raise RuntimeError("exp table corrupt")

    def _build_coordinates(self):
        p, e, n, d = self.p, self.e, self.n, self.d
        # power basis of F_{q^n} over F_q, and an F_p-basis of F_q
        self.power_basis = tuple(self.power(self.generator, i) for i in range(n))
        if self.q > 2:
            h = self.power(self.generator, self.order // (self.q - 1))
        else:
            h = 1
        self._subfield_gen = h
        H = np.zeros((e, d), dtype=np.int64)
        for j in range(e):
            H[j] = self._digits(self.power(h, j))
        B = np.zeros((d, d), dtype=np.int64)
        for i in range(n):
            gi = self.power_basis[i]
            for j in range(e):
                B[:, i * e + j] = self._digits(self.mul(self.power(h, j), gi))
        Binv = _matinv_mod_p(B, p)  # singular would mean g^i not a basis
        # to_coords: digits(c_i) = H^T @ Binv[i*e:(i+1)*e] @ digits(x)
        M = np.zeros((n, d, d), dtype=np.int64)
        for i in range(n):
            M[i] = (H.T @ Binv[i * e:(i + 1) * e, :]) % p
        self._coord_tensor = M

    # -- scalar arithmetic ---------------------------------------------------

    def _check(self, a: int) -> int:
        a = int(a)
        if not 0 <= a < self.Q:
            raise ValueError(f"element index {a} out of range for F_{self.Q}")
        return a

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        p, s, m = self.p, 0, 1
        while a or b:
            s += ((a + b) % p) * m
            a //= p
            b //= p
            m *= p
        return s

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        p, s, m = self.p, 0, 1
        while a:
            s += (-a % p) * m
            a //= p
            m *= p
        return s

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return int(self._exp[(self._log[a] + self._log[b]) % self.order])

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return int(self._exp[(-self._log[a]) % self.order])

    def div(self, a: int, b: int) -> int:
        if b == 0:
            raise ZeroDivisionError("division by zero")
        if a == 0:
            return 0
        return int(self._exp[(self._log[a] - self._log[b]) % self.order])

    def power(self, a: int, k: int) -> int:
        if a == 0:
            if k > 0:
                return 0
            if k == 0:
                return 1
            raise ZeroDivisionError("negative power of zero")
        if self.order == 0:
            return 1
        return int(self._exp[(self._log[a] * k) % self.order])

    def frobenius(self, a: int, i: int) -> int:
        """a^(q^i); i is reduced mod n."""
        if a == 0:
            return 0
        return int(self._exp[(self._log[a] * self._qpow[i % self.n]) % self.order])

    def pfrobenius(self, a: int, k: int) -> int:
        """Absolute Frobenius a^(p^k)."""
        if a == 0:
            return 0
        return int(self._exp[(self._log[a] * pow(self.p, k % self.d, self.order)) % self.order])

    def trace(self, a: int, sub_degree: int = 1) -> int:
        """Trace from F_{q^n} onto F_{q^sub_degree}."""
        s = self._check_subdegree(sub_degree)
        t = 0
        for i in range(self.n // s):
            t = self.add(t, self.frobenius(a, s * i))
        assert self.frobenius(t, s) == t, "trace left the subfield"
        return t

    def norm(self, a: int, sub_degree: int = 1) -> int:
        """Norm from F_{q^n} onto F_{q^sub_degree}."""
        s = self._check_subdegree(sub_degree)
        if a == 0:
            return 0
        k = sum(self._qpow[s * i] for i in range(self.n // s))
        t = int(self._exp[(self._log[a] * k) % self.order])
        assert self.frobenius(t, s) == t, "norm left the subfield"
        return t

    def in_subfield(self, a: int, s: int) -> bool:
        """True iff a^(q^s) == a, i.e. a lies in F_{q^gcd(s, n)}."""
        return self.frobenius(a, s) == a

    def multiplicative_order(self, a: int) -> int:
        if a == 0:
            raise ValueError("zero has no multiplicative order")
        if self.order == 0:
            return 1
        return self.order // math.gcd(int(self._log[a]), self.order)

    def _check_subdegree(self, s: int) -> int:
        s = int(s)
        if s < 1 or self.n % s:
            raise ValueError(f"sub_degree {s} does not divide n = {self.n}")
        return s

    def solve_power(self, m: int, a: int) -> list[int]:
        """All x in F_Q^* with x^m = a (a != 0), ascending by element index."""
        if a == 0:
            raise ValueError("solve_power requires a nonzero right-hand side")
        if self.order == 0:
            return [1]
        mr = m % self.order
        la = int(self._log[a])
        g = math.gcd(mr, self.order)
        if la % g:
            return []
        step = self.order // g
        t0 = (la // g) * pow(mr // g, -1, step) % step
        sols = [int(self._exp[(t0 + k * step) % self.order]) for k in range(g)]
        return sorted(sols)

    # -- enumeration ---------------------------------------------------------

    def enumerate_elements(self) -> np.ndarray:
        return np.arange(self.Q, dtype=np.int64)

    def enumerate_subfield(self, s: int) -> np.ndarray:
        """Elements of F_{q^s} (s | n), ascending by index."""
        s = self._check_subdegree(s)
        if s in self._subfields:
            return self._subfields[s]
        size = self.q ** s - 1
        step = self.order // size
        ks = (np.arange(size, dtype=np.int64) * step) % self.order
        els = np.sort(np.concatenate([np.zeros(1, dtype=np.int64), self._exp[ks]]))
        els.setflags(write=False)
        self._subfields[s] = els
        return els

    # -- vectorised arithmetic ------------------------------------------------

    def vadd(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.p == 2:
            return a ^ b
        da = (a[..., None] // self._ppows) % self.p
        db = (b[..., None] // self._ppows) % self.p
        return ((da + db) % self.p) @ self._ppows

    def vneg(self, a):
        a = np.asarray(a, dtype=np.int64)
        if self.p == 2:
            return a.copy()
        da = (a[..., None] // self._ppows) % self.p
        return ((-da) % self.p) @ self._ppows

    def vsub(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.p == 2:
            return a ^ b
        da = (a[..., None] // self._ppows) % self.p
        db = (b[..., None] // self._ppows) % self.p
        return ((da - db) % self.p) @ self._ppows

    def vmul(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        z = (a == 0) | (b == 0)
        out = self._exp[(self._log[a] + self._log[b]) % self.order]
        return np.where(z, 0, out)

    def vdiv(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if np.any(b == 0):
            raise ZeroDivisionError("division by zero")
        out = self._exp[(self._log[a] - self._log[b]) % self.order]
        return np.where(a == 0, 0, out)

    def vinv(self, a):
        a = np.asarray(a, dtype=np.int64)
        if np.any(a == 0):
            raise ZeroDivisionError("inverse of zero")
        return self._exp[(-self._log[a]) % self.order]

    def vfrob(self, a, i: int):
        a = np.asarray(a, dtype=np.int64)
        out = self._exp[(self._log[a] * self._qpow[i % self.n]) % self.order]
        return np.where(a == 0, 0, out)

    def vpow(self, a, k: int):
        a = np.asarray(a, dtype=np.int64)
        if k == 0:
            return np.ones_like(a)
        if k < 0:
            return self.vinv(self.vpow(a, -k))
        out = self._exp[(self._log[a] * (k % self.order if self.order else 0)) % self.order]
        return np.where(a == 0, 0, out)

    # -- coordinates -----------------------------------------------------------

    def to_coords(self, x):
        """F_q-coordinates w.r.t. the power basis; shape (..., n), entries in F_q."""
        x = np.asarray(x, dtype=np.int64)
        digits = (x[..., None] // self._ppows) % self.p
        cd = np.einsum("...k,idk->...id", digits, self._coord_tensor) % self.p
        return cd @ self._ppows

    def from_coords(self, c):
        """Inverse of to_coords: sum of c_i * g^i."""
        c = np.asarray(c, dtype=np.int64)
        out = np.zeros(c.shape[:-1], dtype=np.int64)
        for i in range(self.n):
            out = self.vadd(out, self.vmul(c[..., i], self.power_basis[i]))
        if out.ndim == 0:
            return int(out)
        return out

    # -- misc -------------------------------------------------------------------

    def element_str(self, a: int) -> str:
        """Human-readable polynomial form of an element."""
        if a == 0:
            return "0"
        terms = []
        for i, c in enumerate(self._digits(a)):
            if c:
                if i == 0:
                    terms.append(f"{c}")
                elif i == 1:
                    terms.append(f"{c}t" if c > 1 else "t")
                else:
                    terms.append(f"{c}t^{i}" if c > 1 else f"t^{i}")
        return " + ".join(terms)

    def __repr__(self):
        return f"FieldCtx(F_{self.Q} = F_{self.q}^{self.n}, g={self.generator})"


# ---------------------------------------------------------------------------
# cached constructors
# ---------------------------------------------------------------------------

_CTX_CACHE: dict[tuple[FieldSpec, int], FieldCtx] = {}


def build_field(spec: FieldSpec, cap: int = DEFAULT_TABLE_CAP) -> FieldCtx:
    key = (spec, cap)
    ctx = _CTX_CACHE.get(key)
    if ctx is None:
        ctx = FieldCtx(spec, cap)
        _CTX_CACHE[key] = ctx
    return ctx


@lru_cache(maxsize=None)
def _canonical_spec(p: int, e: int, n: int) -> FieldSpec:
    return FieldSpec.canonical(p, e, n)


def field_for(q: int, n: int, cap: int = DEFAULT_TABLE_CAP) -> FieldCtx:
    """F_{q^n} with the canonical modulus for (p, e*n)."""
    p, e = factor_prime_power(q)
    return build_field(_canonical_spec(p, e, n), cap)
