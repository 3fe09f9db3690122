"""Exact arithmetic in GF(p^m) for small prime powers (q <= 2^16).

Field elements are plain integers in [0, q).  The integer encodes the
coefficient vector of the element base p: index = sum(c_i * p^i) where the
element is sum(c_i * x^i) modulo the field's irreducible modulus.  With this
encoding 0 is the additive identity and 1 the multiplicative identity, and
for m = 1 the index is just the residue mod p.

Multiplication, inversion and powering go through log/antilog tables built
once per field from the least-index generator of the multiplicative group,
so every operation is O(1) after construction.  Addition is XOR in
characteristic 2 and table- or digit-based otherwise.

Because elements are bare ints they carry no field tag; mixing elements of
different fields is only caught when the index falls outside [0, q).
"""

import math
from functools import lru_cache

MAX_ORDER = 2 ** 16

# Flat addition tables are built for odd q up to this bound; beyond it
# addition falls back to per-digit arithmetic.
_ADD_TABLE_LIMIT = 512

# Default irreducible moduli, coefficients low-to-high, monic.  These are the
# Conway polynomials for the listed (p, m); in particular x^2+x+1 for GF(4),
# x^3+x+1 for GF(8) and x^2+2x+2 for GF(9), which fix the generators used by
# the built-in golden matrices.  Entries are re-verified at construction.
_DEFAULT_MODULI = {
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (2, 5): (1, 0, 1, 0, 0, 1),
    (2, 6): (1, 1, 0, 1, 1, 0, 1),
    (2, 7): (1, 1, 0, 0, 0, 0, 0, 1),
    (2, 8): (1, 0, 1, 1, 1, 0, 0, 0, 1),
    (3, 2): (2, 2, 1),
    (3, 3): (1, 2, 0, 1),
    (5, 2): (2, 4, 1),
    (7, 2): (3, 6, 1),
}


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


# ----------------------------------------------------------------------
# Polynomial helpers over GF(p), used for modulus validation and for raw
# multiplication before the log tables exist.  Polynomials are tuples of
# coefficients low-to-high with no trailing zeros ((),) == 0.
# ----------------------------------------------------------------------

def _poly_trim(c):
    i = len(c)
    while i > 0 and c[i - 1] == 0:
        i -= 1
    return tuple(c[:i])


def _poly_mul(p, a, b):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _poly_trim(out)


def _poly_mod(p, a, mod):
    a = list(a)
    dm = len(mod) - 1
    lead_inv = pow(mod[-1], p - 2, p)
    while len(a) > dm:
        c = a[-1] % p
        if c:
            f = (c * lead_inv) % p
            off = len(a) - 1 - dm
            for i, mi in enumerate(mod):
                a[off + i] = (a[off + i] - f * mi) % p
        a.pop()
    return _poly_trim(a)


def _poly_gcd(p, a, b):
    while b:
        a, b = b, _poly_mod(p, a, b)
    return a


def _poly_powmod(p, base, e, mod):
    result = (1,)
    base = _poly_mod(p, base, mod)
    while e:
        if e & 1:
            result = _poly_mod(p, _poly_mul(p, result, base), mod)
        base = _poly_mod(p, _poly_mul(p, base, base), mod)
        e >>= 1
    return result


def _is_irreducible(p: int, coeffs) -> bool:
    """Rabin's criterion for a monic polynomial over GF(p)."""
    m = len(coeffs) - 1
    if m < 1:
        return False
    if m == 1:
        return True
    x = (0, 1)
    # x^(p^m) == x mod f
    if _poly_powmod(p, x, p ** m, coeffs) != x:
        return False
    # gcd(x^(p^(m/l)) - x, f) == 1 for every prime l | m
    for ell in prime_factors(m):
        t = _poly_powmod(p, x, p ** (m // ell), coeffs)
        diff = list(t) + [0] * max(0, 2 - len(t))
        diff[1] = (diff[1] - 1) % p
        g = _poly_gcd(p, _poly_trim(diff), coeffs)
        if len(g) > 1:
            return False
    return True


def _least_primitive_root(p: int) -> int:
    factors = prime_factors(p - 1)
    for g in range(1, p):
        if all(pow(g, (p - 1) // ell, p) != 1 for ell in factors):
            return g
    raise AssertionError("no primitive root found")


def _find_default_modulus(p: int, m: int) -> tuple[int, ...]:
    if m == 1:
        # x - g with g the least primitive root, so that x is a generator.
        return ((p - _least_primitive_root(p)) % p, 1)
    if (p, m) in _DEFAULT_MODULI:
        return _DEFAULT_MODULI[(p, m)]
    # Smallest irreducible (by low-to-high coefficient encoding) whose root
    # x generates the multiplicative group.  Deterministic.
    q = p ** m
    factors = prime_factors(q - 1)
    for enc in range(1, q):
        coeffs = []
        e = enc
        for _ in range(m):
            coeffs.append(e % p)
            e //= p
        coeffs.append(1)
        coeffs = tuple(coeffs)
        if not _is_irreducible(p, coeffs):
            continue
        x = (0, 1)
        if all(_poly_powmod(p, x, (q - 1) // ell, coeffs) != (1,) for ell in factors):
            return coeffs
    raise ValueError(f"no primitive irreducible of degree {m} over GF({p})")


class GF:
    """The finite field GF(p^m) with a fixed irreducible modulus."""

    def __init__(self, p: int, m: int = 1, modulus=None):
        if not is_prime(p):
            raise ValueError(f"p={p} is not prime")
        if m < 1:
            raise ValueError(f"extension degree m={m} must be >= 1")
        q = p ** m
        if q > MAX_ORDER:
            raise ValueError(f"q={q} exceeds the supported range (q <= {MAX_ORDER})")
        self.p = p
        self.m = m
        self.q = q
        if modulus is None:
            modulus = _find_default_modulus(p, m)
        modulus = tuple(c % p for c in modulus)
        if len(modulus) != m + 1 or modulus[-1] != 1:
            raise ValueError(f"modulus must be monic of degree {m}: {list(modulus)}")
        if not _is_irreducible(p, modulus):
            raise ValueError(f"modulus {list(modulus)} is reducible over GF({p})")
        self.modulus = modulus

        self._digits = [self._index_to_digits(i) for i in range(q)]
        self._build_log_tables()
        self._add_flat = None
        if p != 2 and q <= _ADD_TABLE_LIMIT:
            dig = self._digits
            self._add_flat = [
                self._digits_to_index([(a + b) % p for a, b in zip(dig[x], dig[y])])
                for x in range(q)
                for y in range(q)
            ]
        # eta[x] in {-1, 0, 1}; squares read off the exponent parity.
        self._chi = None
        if p != 2:
            chi = [0] * q
            for i in range(q - 1):
                chi[self._exp[i]] = 1 if i % 2 == 0 else -1
            self._chi = chi
        self._scalar_rows: dict[int, list[int]] = {}

    # -- construction internals -------------------------------------------

    def _index_to_digits(self, i: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.m):
            out.append(i % self.p)
            i //= self.p
        return tuple(out)

    def _digits_to_index(self, digits) -> int:
        out = 0
        for c in reversed(digits):
            out = out * self.p + c
        return out

    def _raw_mul(self, a: int, b: int) -> int:
        """Schoolbook multiply mod modulus, no tables. Used to bootstrap."""
        if a == 0 or b == 0:
            return 0
        if self.m == 1:
            return (a * b) % self.p
        da, db = self._digits[a], self._digits[b]
        prod = [0] * (2 * self.m - 1)
        for i, ai in enumerate(da):
            if ai:
                for j, bj in enumerate(db):
                    prod[i + j] += ai * bj
        red = _poly_mod(self.p, [c % self.p for c in prod], self.modulus)
        return self._digits_to_index(list(red) + [0] * (self.m - len(red)))

    def _raw_pow(self, a: int, e: int) -> int:
        r = 1
        while e:
            if e & 1:
                r = self._raw_mul(r, a)
            a = self._raw_mul(a, a)
            e >>= 1
        return r

    def _build_log_tables(self):
        q = self.q
        factors = prime_factors(q - 1) if q > 2 else []
        g = None
        for cand in range(1, q):
            if all(self._raw_pow(cand, (q - 1) // ell) != 1 for ell in factors):
                g = cand
                break
        if g is None:
            raise AssertionError("no generator found")
        self.generator = g
        exp = [1] * (q - 1)
        log = [0] * q
        v = 1
        for i in range(q - 1):
            exp[i] = v
            log[v] = i
            v = self._raw_mul(v, g)
        self._exp = exp
        self._log = log

    # -- identity ----------------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, GF)
            and (self.p, self.m, self.modulus) == (other.p, other.m, other.modulus)
        )

    def __hash__(self):
        return hash((self.p, self.m, self.modulus))

    def __repr__(self):
        return f"GF(p={self.p}, m={self.m}, mod={list(self.modulus)})"

    # -- element validation --------------------------------------------------

    def check(self, x: int) -> int:
        if not 0 <= x < self.q:
            raise ValueError(f"{x} is not an element index of {self!r} (out of [0, {self.q}))")
        return x

    # -- arithmetic ----------------------------------------------------------

    def add(self, a: int, b: int) -> int:
        self.check(a)
        self.check(b)
        if self.p == 2:
            return a ^ b
        if self._add_flat is not None:
            return self._add_flat[a * self.q + b]
        p = self.p
        return self._digits_to_index(
            [(x + y) % p for x, y in zip(self._digits[a], self._digits[b])]
        )

    def neg(self, a: int) -> int:
        self.check(a)
        if self.p == 2:
            return a
        p = self.p
        return self._digits_to_index([(-x) % p for x in self._digits[a]])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        self.check(a)
        self.check(b)
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]

    def inv(self, a: int) -> int:
        self.check(a)
        if a == 0:
            raise ZeroDivisionError("0 has no multiplicative inverse")
        return self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)]

    def pow(self, a: int, e: int) -> int:
        """a**e with exponent reduction mod q-1 for nonzero a; 0**0 == 1."""
        self.check(a)
        if a == 0:
            if e == 0:
                return 1
            if e < 0:
                raise ZeroDivisionError("0 cannot be raised to a negative power")
            return 0
        return self._exp[(self._log[a] * e) % (self.q - 1)]

    def scalar_row(self, u: int) -> list[int]:
        """The row [u*x for x in 0..q-1], cached. Hot-loop helper."""
        row = self._scalar_rows.get(u)
        if row is None:
            row = [self.mul(u, x) for x in range(self.q)]
            self._scalar_rows[u] = row
        return row

    # -- characters and traces -------------------------------------------------

    def quadratic_character(self, x: int) -> int:
        """eta(x): 1 for nonzero squares, -1 for nonsquares, 0 at 0."""
        if self.p == 2:
            raise ValueError("quadratic character requires odd characteristic")
        self.check(x)
        return self._chi[x]

    def trace(self, x: int, d: int = 1) -> int:
        """Trace onto the subfield GF(p^d): sum of x^(p^(d*i)), i < m/d."""
        if self.m % d != 0:
            raise ValueError(f"subfield degree {d} does not divide m={self.m}")
        self.check(x)
        acc = 0
        t = x
        step = self.p ** d
        for _ in range(self.m // d):
            acc = self.add(acc, t)
            t = self.pow(t, step)
        return acc

    # -- element enumeration -----------------------------------------------------

    def primitive_element(self) -> int:
        """Least-index element of multiplicative order q-1."""
        return self.generator if self.q > 2 else 1

    def elements(self, order: str = "canonical") -> list[int]:
        """All q elements.  'canonical' is 0..q-1; 'powers' is the reference
        column order: descending powers of the generator then 0 for m >= 2,
        and q-1, q-2, ..., 1, 0 for prime fields."""
        if order == "canonical":
            return list(range(self.q))
        if order == "powers":
            if self.m == 1:
                return list(range(self.q - 1, -1, -1))
            return [self._exp[i] for i in range(self.q - 2, -1, -1)] + [0]
        raise ValueError(f"unknown element order {order!r}")

    # -- text forms -----------------------------------------------------------

    def element_to_str(self, x: int, powers: bool = False) -> str:
        self.check(x)
        if not powers or x in (0, 1):
            return str(x)
        return f"g^{self._log[x]}"

    def element_from_str(self, token: str) -> int:
        token = token.strip()
        if token == "g":
            return self.primitive_element()
        if token.startswith("g^"):
            e = int(token[2:])
            return self._exp[e % (self.q - 1)]
        return self.check(int(token))

    def descriptor(self) -> str:
        mod = ",".join(str(c) for c in self.modulus)
        return f"p={self.p} m={self.m} mod={mod}"


@lru_cache(maxsize=None)
def _cached_field(p: int, m: int, modulus) -> GF:
    return GF(p, m, modulus)


def make_field(p: int, m: int = 1, modulus=None) -> GF:
    """Construct (or fetch a cached) GF(p^m). Same inputs, same arithmetic."""
    key = tuple(modulus) if modulus is not None else None
    return _cached_field(p, m, key)


def field_from_order(q: int, modulus=None) -> GF:
    """GF(q) for a prime power q, inferring (p, m)."""
    if q < 2:
        raise ValueError(f"q={q} is not a prime power")
    facs = prime_factors(q)
    if len(facs) != 1:
        raise ValueError(f"q={q} is not a prime power")
    p = facs[0]
    m = round(math.log(q, p))
    if p ** m != q:
        raise ValueError(f"q={q} is not a prime power")
    return make_field(p, m, modulus)


def parse_descriptor(text: str) -> GF:
    """Parse 'p=2 m=3 mod=1,1,0,1' back into a field."""
    parts = dict(tok.split("=", 1) for tok in text.split())
    try:
        p = int(parts["p"])
        m = int(parts["m"])
        mod = [int(c) for c in parts["mod"].split(",")]
    except (KeyError, ValueError) as exc:
        raise ValueError(f"bad field descriptor {text!r}") from exc
    return make_field(p, m, mod)
