"""Exact integer polynomial arithmetic for link invariants.

Three flavours share one raw representation, a dict {exponent: coefficient}
with int keys and no stored zeros:

  * Conway polynomials in z: non-negative exponents, scale 1;
  * Alexander-side Laurent polynomials in t: exponents scaled by 2 so that
    half-integer powers of t stay integral;
  * Jones polynomials in t: exponents scaled by 4 (quarter powers).

All hot loops work on the raw dicts. The wrapper classes below fix the scale
and keep a sorted coefficient tuple, so values are hashable, comparable and
printable. Determinants are exact (no floats anywhere).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

ONE = {0: 1}


def add(a, b):
    out = dict(a)
    for e, c in b.items():
        v = out.get(e, 0) + c
        if v:
            out[e] = v
        else:
            out.pop(e, None)
    return out


def neg(a):
    return {e: -c for e, c in a.items()}


def sub(a, b):
    return add(a, neg(b))


def mul(a, b):
    out = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            e = e1 + e2
            v = out.get(e, 0) + c1 * c2
            if v:
                out[e] = v
            else:
                out.pop(e, None)
    return out


def smul(a, k):
    return {e: c * k for e, c in a.items()} if k else {}


def eshift(a, k):
    return {e + k: c for e, c in a.items()}


def det(M):
    """Exact determinant of a matrix of coefficient dicts.

    Subset dynamic programming over used columns: O(2^k * k) dict products,
    fine for the k <= 12 matrices this package meets.
    """
    k = len(M)
    if k == 0:
        return dict(ONE)
    prev = {0: dict(ONE)}  # bitmask of used columns -> accumulated minor
    for r in range(k):
        cur = {}
        for cols, val in prev.items():
            for c in range(k):
                bit = 1 << c
                if cols & bit:
                    continue
                ent = M[r][c]
                if not ent:
                    continue
                # parity of inversions added = columns already used above c
                s = -1 if bin(cols >> (c + 1)).count("1") % 2 else 1
                term = smul(mul(val, ent), s)
                key = cols | bit
                cur[key] = add(cur.get(key, {}), term)
        prev = cur
    return prev.get((1 << k) - 1, {})


def z_extract(balanced):
    """Rewrite a balanced Laurent dict in x as a polynomial in z = x - 1/x.

    Peels the top degree repeatedly. Raises ArithmeticError if the input is
    not in the image of the substitution (negative degree left over), which
    for our callers signals a sign-convention bug rather than bad data.
    """
    rem = dict(balanced)
    zx = {1: 1, -1: -1}
    out = {}
    while rem:
        d = max(rem)
        if d < 0:
            raise ArithmeticError("leftover terms of negative degree")
        c = rem[d]
        out[d] = c
        pw = dict(ONE)
        for _ in range(d):
            pw = mul(pw, zx)
        rem = sub(rem, smul(pw, c))
    return out


def z_substitute(conway_coeffs):
    """Expand a z-polynomial dict under z = x - 1/x (x-exponent Laurent)."""
    zx = {1: 1, -1: -1}
    out = {}
    for d, c in conway_coeffs.items():
        pw = dict(ONE)
        for _ in range(d):
            pw = mul(pw, zx)
        out = add(out, smul(pw, c))
    return out


def units_equal(p, q):
    """True iff p == +- t^k * q for some exponent shift k (same scale)."""
    if not p or not q:
        return p == q
    if len(p) != len(q):
        return False
    sh = max(p) - max(q)
    shifted = eshift(q, sh)
    return p == shifted or p == neg(shifted)


def _sorted_items(coeffs):
    return tuple(sorted((int(e), int(c)) for e, c in coeffs.items() if c))


@dataclass(frozen=True)
class ConwayPolynomial:
    """Integer polynomial in z, coefficients sorted by ascending degree.

    The zero polynomial has an empty coefficient tuple and degree None.
    """

    coeffs: tuple = ()

    @classmethod
    def from_dict(cls, d):
        return cls(_sorted_items(d))

    def as_dict(self):
        return dict(self.coeffs)

    @property
    def degree(self):
        return self.coeffs[-1][0] if self.coeffs else None

    @property
    def leading_coefficient(self):
        return self.coeffs[-1][1] if self.coeffs else 0

    def __bool__(self):
        return bool(self.coeffs)

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for e, c in reversed(self.coeffs):
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                var = "z" if e == 1 else f"z^{e}"
                body = var if mag == 1 else f"{mag}*{var}"
            parts.append(("- " if c < 0 else "+ ") + body)
        head = parts[0]
        head = head[2:] if head.startswith("+ ") else "-" + head[2:]
        return " ".join([head] + parts[1:])

    def to_json(self):
        return {"var": "z", "scale": 1,
                "coeffs": {str(e): c for e, c in self.coeffs}}


@dataclass(frozen=True)
class LaurentPolynomial:
    """Integer Laurent polynomial in t with scaled exponents.

    An entry (e, c) means c * t^(e/scale); scale is 2 for Alexander-type
    values (half powers) and 4 for Jones (quarter powers).
    """

    scale: int = 2
    coeffs: tuple = ()

    @classmethod
    def from_dict(cls, d, scale=2):
        return cls(scale, _sorted_items(d))

    def as_dict(self):
        return dict(self.coeffs)

    def mirror(self):
        """t -> 1/t."""
        return LaurentPolynomial(self.scale,
                                 _sorted_items({-e: c for e, c in self.coeffs}))

    def rescaled(self, scale):
        if scale == self.scale:
            return self
        if scale % self.scale:
            raise ValueError(f"cannot rescale {self.scale} -> {scale}")
        f = scale // self.scale
        return LaurentPolynomial(scale, tuple((e * f, c) for e, c in self.coeffs))

    def __bool__(self):
        return bool(self.coeffs)

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for e, c in sorted(self.coeffs, reverse=True):
            mag = abs(c)
            ex = Fraction(e, self.scale)
            if ex == 0:
                body = str(mag)
            else:
                var = "t" if ex == 1 else f"t^({ex})" if ex.denominator > 1 else f"t^{ex}"
                body = var if mag == 1 else f"{mag}*{var}"
            parts.append(("- " if c < 0 else "+ ") + body)
        head = parts[0]
        head = head[2:] if head.startswith("+ ") else "-" + head[2:]
        return " ".join([head] + parts[1:])

    def to_json(self):
        return {"var": "t", "scale": self.scale,
                "coeffs": {str(e): c for e, c in self.coeffs}}


def polynomial_from_json(obj):
    coeffs = {int(e): int(c) for e, c in obj["coeffs"].items()}
    if obj["var"] == "z":
        return ConwayPolynomial.from_dict(coeffs)
    return LaurentPolynomial.from_dict(coeffs, scale=int(obj["scale"]))


def conway_to_laurent(poly: ConwayPolynomial) -> LaurentPolynomial:
    """Substitute z = t^(1/2) - t^(-1/2); x-exponents are scale-2 exponents."""
    return LaurentPolynomial.from_dict(z_substitute(poly.as_dict()), scale=2)


def equal_up_to_unit(p: LaurentPolynomial, q: LaurentPolynomial) -> bool:
    """p == +- t^(k/scale) * q after putting both on a common scale."""
    s = max(p.scale, q.scale)
    if s % min(p.scale, q.scale):
        s = p.scale * q.scale
    return units_equal(p.rescaled(s).as_dict(), q.rescaled(s).as_dict())
