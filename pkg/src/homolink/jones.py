"""Jones polynomial of a braid closure by brute-force Kauffman bracket.

Works for any word, homogeneous or not, which is the point: it is the
disambiguator used when Conway polynomials collide during classification.
The state sum visits all 2^m smoothings, so the length cap is a hard
refusal, not a suggestion.

Exponents are quarter powers of t stored at scale 4. The chirality
convention is fixed by sigma_1^3 -> t^-1 + t^-3 - t^-4, the left-handed
trefoil value; mirroring the word inverts t.
"""

from __future__ import annotations

from .errors import CapExceededError
from .polynomials import LaurentPolynomial, add, mul
from .words import BraidWord

JONES_LENGTH_CAP = 16

_CIRCLE = {2: -1, -2: -1}  # -A^2 - A^-2


class _UnionFind:
    def __init__(self, size):
        self.parent = list(range(size))

    def find(self, a):
        p = self.parent
        while p[a] != a:
            p[a] = p[p[a]]
            a = p[a]
        return a

    def join(self, a, b):
        self.parent[self.find(a)] = self.find(b)


def jones_kauffman(w: BraidWord, cap: int = JONES_LENGTH_CAP) -> LaurentPolynomial:
    word, n, m = w.letters, w.strands, len(w.letters)
    if m > cap:
        raise CapExceededError(
            f"word length {m} exceeds the Kauffman cap {cap} (2^m states)")

    def nid(level, strand):
        return level * n + strand

    total = {}
    for state in range(1 << m):
        uf = _UnionFind((m + 1) * n)
        a_minus_b = 0
        for lv, x in enumerate(word):
            i = abs(x) - 1
            pick_a = not (state >> lv & 1)
            a_minus_b += 1 if pick_a else -1
            if pick_a != (x > 0):
                uf.join(nid(lv, i), nid(lv + 1, i))
                uf.join(nid(lv, i + 1), nid(lv + 1, i + 1))
            else:
                uf.join(nid(lv, i), nid(lv, i + 1))
                uf.join(nid(lv + 1, i), nid(lv + 1, i + 1))
            for st in range(n):
                if st != i and st != i + 1:
                    uf.join(nid(lv, st), nid(lv + 1, st))
        for st in range(n):
            uf.join(nid(m, st), nid(0, st))
        loops = len({uf.find(a) for a in range((m + 1) * n)})
        term = {a_minus_b: 1}
        for _ in range(loops - 1):
            term = mul(term, _CIRCLE)
        total = add(total, term)

    writhe = -sum(1 if x > 0 else -1 for x in word)
    sign = -1 if writhe % 2 else 1
    normalized = mul(total, {-3 * writhe: sign})
    # A-exponents to t-exponents at scale 4 (t^(1/4) = A^(-1))
    return LaurentPolynomial.from_dict({-e: c for e, c in normalized.items()},
                                       scale=4)
