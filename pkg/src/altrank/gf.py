"""Small finite fields F_q with table-driven arithmetic.

Elements are encoded as integers in ``[0, q)``: the base-p digits of the
encoding are the coefficients of the polynomial representative, lowest
degree first.  All tables are built once when the field is constructed:
full addition and multiplication tables for small q, exp/log tables for
larger q.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from itertools import product

MAX_FIELD_SIZE = 2**16
# full q*q addition/multiplication tables up to this size, log tables beyond
FULL_TABLE_LIMIT = 256


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


def prime_power(q: int) -> tuple[int, int] | None:
    """Return ``(p, m)`` with ``q == p**m`` and p prime, or None."""
    if q < 2:
        return None
    p = 2
    while p * p <= q and q % p:
        p += 1
    if q % p:
        p = q
    m, r = 0, q
    while r % p == 0:
        r //= p
        m += 1
    if r != 1 or not is_prime(p):
        return None
    return p, m


# --- polynomials over F_p, coefficient lists lowest degree first ----------

def _poly_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a: list[int], b: list[int], p: int) -> list[int]:
    a = _poly_trim([c % p for c in a])
    b = _poly_trim(list(b))
    inv_lead = pow(b[-1], p - 2, p)
    while len(a) >= len(b):
        coef = a[-1] * inv_lead % p
        shift = len(a) - len(b)
        for i, c in enumerate(b):
            a[shift + i] = (a[shift + i] - coef * c) % p
        _poly_trim(a)
    return a


def _monic_polys(p: int, deg: int):
    for low in product(range(p), repeat=deg):
        yield list(low) + [1]


def is_irreducible(poly: list[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree <= deg/2."""
    deg = len(poly) - 1
    if deg < 1:
        return False
    for d in range(1, deg // 2 + 1):
        for g in _monic_polys(p, d):
            if not _poly_mod(poly, g, p):
                return False
    return True


def _encoding(poly: list[int], p: int) -> int:
    return sum(c * p**i for i, c in enumerate(poly))


def smallest_irreducible(p: int, m: int) -> list[int]:
    """Lexicographically smallest monic irreducible of degree m over F_p."""
    cands = sorted(_monic_polys(p, m), key=lambda f: _encoding(f, p))
    for f in cands:
        if is_irreducible(f, p):
            return f
    raise ArithmeticError(f"no irreducible polynomial of degree {m} over F_{p}")


@dataclass(frozen=True, eq=False)
class FieldSpec:
    """The field F_q, q = p**m, together with its arithmetic tables.

    ``modulus`` is stored lowest-degree coefficient first and is monic of
    degree m.  For prime fields it is ``[0, 1]`` and plays no role.
    """

    p: int
    m: int
    modulus: tuple[int, ...]
    q: int = dc_field(init=False)
    add_table: tuple[tuple[int, ...], ...] = dc_field(init=False, repr=False)
    mul_table: tuple[tuple[int, ...], ...] = dc_field(init=False, repr=False)
    neg_table: tuple[int, ...] = dc_field(init=False, repr=False)
    inv_table: tuple[int, ...] = dc_field(init=False, repr=False)
    exp_table: tuple[int, ...] = dc_field(init=False, repr=False)
    log_table: tuple[int, ...] = dc_field(init=False, repr=False)

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"characteristic {self.p} is not prime")
        if self.m < 1:
            raise ValueError(f"extension degree must be >= 1, got {self.m}")
        q = self.p**self.m
        if q > MAX_FIELD_SIZE:
            raise ValueError(f"q = {q} exceeds the supported maximum {MAX_FIELD_SIZE}")
        if self.m > 1:
            if len(self.modulus) != self.m + 1 or self.modulus[-1] != 1:
                raise ValueError("modulus must be monic of degree m")
            if not is_irreducible(list(self.modulus), self.p):
                raise ValueError(f"modulus {self.modulus} is reducible over F_{self.p}")
        object.__setattr__(self, "q", q)
        self._build_tables()

    def _digits(self, a: int) -> list[int]:
        out = []
        for _ in range(self.m):
            out.append(a % self.p)
            a //= self.p
        return out

    def _build_tables(self) -> None:
        p, q = self.p, self.q
        digits = [self._digits(a) for a in range(q)]
        neg = tuple(_encoding([(-x) % p for x in digits[a]], p) for a in range(q))
        if q <= FULL_TABLE_LIMIT:
            add = tuple(
                tuple(_encoding([(x + y) % p for x, y in zip(digits[a], digits[b])], p) for b in range(q))
                for a in range(q)
            )
            mul = tuple(tuple(self._slow_mul(digits[a], digits[b]) for b in range(q)) for a in range(q))
            inv = [0] * q
            for a in range(1, q):
                inv[a] = mul[a].index(1)
            exp = log = ()
        else:
            add = mul = ()
            exp, log = self._log_tables(digits)
            inv = [0] * q
            for a in range(1, q):
                inv[a] = exp[(q - 1 - log[a]) % (q - 1)]
        object.__setattr__(self, "add_table", add)
        object.__setattr__(self, "mul_table", mul)
        object.__setattr__(self, "neg_table", neg)
        object.__setattr__(self, "inv_table", tuple(inv))
        object.__setattr__(self, "exp_table", exp)
        object.__setattr__(self, "log_table", log)

    def _slow_mul(self, da: list[int], db: list[int]) -> int:
        p = self.p
        if self.m == 1:
            return da[0] * db[0] % p
        prod = [0] * (2 * self.m - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] += x * y
        return _encoding(_poly_mod(prod, list(self.modulus), p), p)

    def _log_tables(self, digits):
        q = self.q
        for g in range(2, q) if q > 2 else [1]:
            exp = [1]
            x = 1
            for _ in range(q - 2):
                x = self._slow_mul(digits[x], digits[g])
                if x == 1:
                    break
                exp.append(x)
            if len(exp) == q - 1:
                log = [0] * q
                for i, v in enumerate(exp):
                    log[v] = i
                return tuple(exp), tuple(log)
        raise ArithmeticError("no primitive element found")  # unreachable for a field

    # integer-level arithmetic, used by the matrix code on hot paths
    def add(self, a: int, b: int) -> int:
        if self.add_table:
            return self.add_table[a][b]
        if self.m == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        return _encoding([(x + y) % self.p for x, y in zip(self._digits(a), self._digits(b))], self.p)

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg_table[b])

    def mul(self, a: int, b: int) -> int:
        if self.mul_table:
            return self.mul_table[a][b]
        if a == 0 or b == 0:
            return 0
        return self.exp_table[(self.log_table[a] + self.log_table[b]) % (self.q - 1)]

    def neg(self, a: int) -> int:
        return self.neg_table[a]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse in a field")
        return self.inv_table[a]

    def __call__(self, value: int) -> FieldElement:
        return FieldElement(self, value)

    def elements(self) -> list[FieldElement]:
        return [FieldElement(self, a) for a in range(self.q)]

    def __eq__(self, other) -> bool:
        if not isinstance(other, FieldSpec):
            return NotImplemented
        return (self.p, self.m, self.modulus) == (other.p, other.m, other.modulus)

    def __hash__(self) -> int:
        return hash((self.p, self.m, self.modulus))

    def __repr__(self) -> str:
        if self.m == 1:
            return f"GF({self.q})"
        return f"GF({self.p}^{self.m}, modulus={list(self.modulus)})"


@lru_cache(maxsize=None)
def field(p: int, m: int = 1) -> FieldSpec:
    """Return F_{p^m} with a deterministic modulus."""
    if not is_prime(p):
        raise ValueError(f"characteristic {p} is not prime")
    if m < 1:
        raise ValueError(f"extension degree must be >= 1, got {m}")
    if p**m > MAX_FIELD_SIZE:
        raise ValueError(f"q = {p**m} exceeds the supported maximum {MAX_FIELD_SIZE}")
    modulus = (0, 1) if m == 1 else tuple(smallest_irreducible(p, m))
    return FieldSpec(p, m, modulus)


def field_of_order(q: int) -> FieldSpec:
    pm = prime_power(q)
    if pm is None:
        raise ValueError(f"q = {q} is not a prime power > 1")
    return field(*pm)


@dataclass(frozen=True)
class FieldElement:
    spec: FieldSpec
    value: int

    def __post_init__(self):
        if not 0 <= self.value < self.spec.q:
            raise ValueError(f"value {self.value} out of range for {self.spec!r}")

    def _other(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.spec != self.spec:
                raise ValueError("elements belong to different fields")
            return other.value
        if isinstance(other, int):
            return FieldElement(self.spec, other).value
        raise TypeError(f"cannot combine a field element with {type(other).__name__}")

    def __add__(self, other):
        b = self._other(other)
        return FieldElement(self.spec, self.spec.add(self.value, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._other(other)
        return FieldElement(self.spec, self.spec.sub(self.value, b))

    def __rsub__(self, other):
        return FieldElement(self.spec, self._other(other)) - self

    def __mul__(self, other):
        b = self._other(other)
        return FieldElement(self.spec, self.spec.mul(self.value, b))

    __rmul__ = __mul__

    def __neg__(self):
        return FieldElement(self.spec, self.spec.neg(self.value))

    def inv(self) -> FieldElement:
        return FieldElement(self.spec, self.spec.inv(self.value))

    def __truediv__(self, other):
        return self * FieldElement(self.spec, self._other(other)).inv()

    def __pow__(self, e: int):
        if e < 0:
            return self.inv() ** (-e)
        result, base = FieldElement(self.spec, 1), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __bool__(self) -> bool:
        return self.value != 0

    def __int__(self) -> int:
        return self.value

    def __repr__(self) -> str:
        return f"{self.value}@{self.spec!r}"
