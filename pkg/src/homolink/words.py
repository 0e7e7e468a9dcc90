"""Braid words on n strands and their structural combinatorics.

A word is stored as a tuple of nonzero ints: letter k > 0 is the positive
generator sigma_k (strand k passes under strand k+1), k < 0 its inverse.
The closure of a word is the link obtained by joining top ends to bottom
ends; most functions here are about properties of that closure that can be
read off the word: which generators occur with which signs, which occur
exactly once (weak indices), how strands are permuted.

The raw helpers at the bottom operate on plain (letters, n) pairs and are
shared by the invariant engines; the public operations wrap them in
BraidWord values.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BraidSyntaxError, DisconnectedWordError


@dataclass(frozen=True)
class BraidWord:
    """Immutable braid word: strand count n and signed letter tuple."""

    strands: int
    letters: tuple = ()

    def __post_init__(self):
        if self.strands < 1:
            raise BraidSyntaxError(f"strand count must be >= 1, got {self.strands}")
        letters = tuple(self.letters)
        object.__setattr__(self, "letters", letters)
        for x in letters:
            if x == 0:
                raise BraidSyntaxError("letter 0 is not a generator")
            if abs(x) > self.strands - 1:
                raise BraidSyntaxError(
                    f"letter {x} out of range for {self.strands} strands")

    @classmethod
    def from_letters(cls, letters):
        letters = tuple(letters)
        n = max((abs(x) for x in letters), default=0) + 1
        return cls(n, letters)

    @property
    def n(self):
        return self.strands

    @property
    def m(self):
        return len(self.letters)

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __str__(self):
        body = " ".join(str(x) for x in self.letters) or "(empty)"
        return f"{body} on {self.strands} strands"


@dataclass(frozen=True)
class ExponentProfile:
    """Per-generator occurrence data: position i-1 describes sigma_i."""

    pos: tuple
    neg: tuple

    @property
    def q(self):
        """Occurrence counts q_i."""
        return tuple(p + m for p, m in zip(self.pos, self.neg))

    @property
    def alpha(self):
        """Single signs where defined, None for absent or mixed generators."""
        out = []
        for p, m in zip(self.pos, self.neg):
            if p and not m:
                out.append(1)
            elif m and not p:
                out.append(-1)
            else:
                out.append(None)
        return tuple(out)


@dataclass(frozen=True)
class Permutation:
    """Bijection of {1..n} as a tuple of images (position i-1 -> image)."""

    images: tuple

    def cycles(self):
        n = len(self.images)
        seen = [False] * n
        out = []
        for s in range(n):
            if seen[s]:
                continue
            cyc, j = [], s
            while not seen[j]:
                seen[j] = True
                cyc.append(j + 1)
                j = self.images[j] - 1
            out.append(tuple(cyc))
        return out

    @property
    def cycle_count(self):
        return len(self.cycles())


def parse_word(text: str, strands: int | None = None) -> BraidWord:
    """Parse whitespace-separated signed generator indices.

    Without an explicit strand count the word gets the smallest braid group
    containing it: max |letter| + 1, or 1 for the empty text.
    """
    letters = []
    for tok in text.split():
        try:
            x = int(tok)
        except ValueError:
            raise BraidSyntaxError(f"not an integer token: {tok!r}") from None
        if x == 0:
            raise BraidSyntaxError("letter 0 is not a generator")
        letters.append(x)
    if strands is None:
        return BraidWord.from_letters(letters)
    return BraidWord(strands, tuple(letters))


def exponent_profile(w: BraidWord) -> ExponentProfile:
    pos = [0] * (w.strands - 1)
    neg = [0] * (w.strands - 1)
    for x in w.letters:
        if x > 0:
            pos[x - 1] += 1
        else:
            neg[-x - 1] += 1
    return ExponentProfile(tuple(pos), tuple(neg))


def is_homogeneous(w: BraidWord) -> bool:
    """Each occurring generator has a single sign (empty word counts)."""
    return homogeneous_letters(w.letters)


def weak_indices(w: BraidWord) -> set:
    """Generator indices that occur exactly once; w is weak iff non-empty."""
    q = letter_counts(w.letters, w.strands)
    return {i for i in range(1, w.strands) if q[i] == 1}


def shift(w: BraidWord, i: int) -> BraidWord:
    """Drop generator i and one strand; for i-weak words closure-preserving.

    Letters below i keep their place, letters above i come after, decremented.
    The block order matters: deleting the single sigma_i band merges two
    disks, after which low letters commute past high ones but an interleaved
    order is not otherwise legal. In-place deletion can change the closure
    (first failing case: 1 2 3 1 3, whose closure is a 3-chain, not a knot).
    """
    if not 1 <= i <= w.strands - 1:
        raise ValueError(f"shift index {i} out of range for {w.strands} strands")
    return BraidWord(w.strands - 1, shift_letters(w.letters, i))


def normalize_nonweak(w: BraidWord) -> BraidWord:
    """Shift away weak indices (smallest first) until none remain.

    A fully reducible word collapses to the empty word on one strand. If the
    fixed point is non-empty but skips a generator, the closure is a split
    link; that raises DisconnectedWordError carrying the connected factors.
    """
    word, n = w.letters, w.strands
    while True:
        q = letter_counts(word, n)
        wk = [i for i in range(1, n) if q[i] == 1]
        if not wk:
            break
        word = shift_letters(word, wk[0])
        n -= 1
    if not word:
        return BraidWord(1, ())
    q = letter_counts(word, n)
    if any(q[i] == 0 for i in range(1, n)):
        out = BraidWord(n, word)
        raise DisconnectedWordError(
            f"split closure: word {out} skips a generator",
            factors=split_factors(out))
    return BraidWord(n, word)


def split_factors(w: BraidWord) -> list:
    """Connected factors of a split closure, one per strand interval.

    Strand intervals are separated by absent generators; each interval's
    letters are re-indexed to start at 1. Intervals with no letters are
    unknot factors (empty word on one strand).
    """
    q = letter_counts(w.letters, w.strands)
    factors = []
    start = 1  # first strand of the current interval
    for gap in [i for i in range(1, w.strands) if q[i] == 0] + [w.strands]:
        letters = tuple((abs(x) - start + 1) * (1 if x > 0 else -1)
                        for x in w.letters if start <= abs(x) < gap)
        factors.append(BraidWord(gap - start + 1, letters))
        start = gap + 1
    return factors


def permutation(w: BraidWord) -> Permutation:
    """Product of the transpositions (|x|, |x|+1) in letter order."""
    p = list(range(1, w.strands + 1))
    for x in w.letters:
        i = abs(x) - 1
        p[i], p[i + 1] = p[i + 1], p[i]
    return Permutation(tuple(p))


def component_count(w: BraidWord) -> int:
    return cycle_count(w.letters, w.strands)


def cyclic_permute(w: BraidWord, k: int) -> BraidWord:
    """Rotate letters left by k; conjugation, so closure-preserving."""
    if not w.letters:
        return w
    k %= len(w.letters)
    return BraidWord(w.strands, w.letters[k:] + w.letters[:k])


def far_commute(w: BraidWord, j: int) -> BraidWord:
    """Swap letters j and j+1 (1-based); legal when their indices differ by >= 2."""
    if not 1 <= j <= len(w.letters) - 1:
        raise ValueError(f"position {j} out of range for length {len(w.letters)}")
    a, b = w.letters[j - 1], w.letters[j]
    if abs(abs(a) - abs(b)) <= 1:
        raise ValueError(f"letters {a} and {b} do not commute")
    letters = w.letters[:j - 1] + (b, a) + w.letters[j + 1:]
    return BraidWord(w.strands, letters)


def word_to_json(w: BraidWord) -> dict:
    return {"n": w.strands, "word": list(w.letters)}


def word_from_json(obj) -> BraidWord:
    return BraidWord(int(obj["n"]), tuple(int(x) for x in obj["word"]))


# ---------------------------------------------------------------------------
# raw (letters, n) helpers shared by the invariant engines

def letter_counts(letters, n):
    """q array, 1-indexed: q[i] = occurrences of generator i, q[0] unused."""
    q = [0] * (n + 1)
    for x in letters:
        q[abs(x)] += 1
    return q


def homogeneous_letters(letters) -> bool:
    sgn = {}
    for x in letters:
        s = 1 if x > 0 else -1
        if sgn.setdefault(abs(x), s) != s:
            return False
    return True


def sign_map(letters):
    """Generator -> sign for homogeneous words (last letter wins otherwise)."""
    return {abs(x): (1 if x > 0 else -1) for x in letters}


def shift_letters(letters, i):
    low = [x for x in letters if abs(x) < i]
    high = [x - 1 if x > 0 else x + 1 for x in letters if abs(x) > i]
    return tuple(low + high)


def cycle_count(letters, n) -> int:
    p = list(range(n))
    for x in letters:
        i = abs(x) - 1
        p[i], p[i + 1] = p[i + 1], p[i]
    seen = [False] * n
    count = 0
    for s in range(n):
        if not seen[s]:
            count += 1
            j = s
            while not seen[j]:
                seen[j] = True
                j = p[j]
    return count


def min_rotation(letters):
    """Lexicographically smallest rotation; memo key for cyclic invariants."""
    if not letters:
        return letters
    m = len(letters)
    return min(letters[k:] + letters[:k] for k in range(m))


def connected(letters, n) -> bool:
    q = letter_counts(letters, n)
    return all(q[i] > 0 for i in range(1, n))
