"""Homological monodromy of fibred homogeneous closures.

The fiber surface of a homogeneous connected word carries a monodromy that
factors as one Dehn twist per basis loop, columns composed left to right,
negative columns contributing inverse twists. This module keeps only the
homological shadow: the twist word itself and the induced matrix on first
homology, plus the independent Seifert-form route V^(-1) V^T.

Conventions (transvection sign, which of V^(-1)V^T vs its inverse) were
calibrated once on the trefoil so that the twist route, the matrix route
and the Alexander polynomial all agree, and are frozen here. Reversing the
composition order would conjugate the action; the cross-route equality
test pins it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .errors import DisconnectedWordError, InhomogeneousWordError
from .polynomials import LaurentPolynomial, det
from .seifert import SeifertMatrix, build_surface, seifert_matrix
from .words import (BraidWord, connected, homogeneous_letters, letter_counts,
                    sign_map, split_factors)

_EPS = 1  # transvection sign for a positive twist, calibrated


@dataclass(frozen=True)
class TwistSequence:
    """Ordered Dehn twists ((i, j), sign), first-applied first.

    As mapping classes the product reads right to left, so the matrix of
    the sequence is T(last) * ... * T(first).
    """

    twists: tuple

    def __len__(self):
        return len(self.twists)

    @property
    def basis_loops(self):
        return tuple(sorted({loop for loop, _ in self.twists}))


@dataclass(frozen=True)
class HomologyAction:
    """Integer matrix of the monodromy on H1 of the fiber, with its form."""

    matrix: tuple
    intersection_form: tuple
    basis: tuple

    @property
    def dimension(self):
        return len(self.matrix)

    def preserves_form(self) -> bool:
        M, J = self.matrix, self.intersection_form
        k = len(M)
        for a in range(k):
            for b in range(k):
                v = sum(M[r][a] * J[r][c] * M[c][b]
                        for r in range(k) for c in range(k))
                if v != J[a][b]:
                    return False
        return True

    def determinant(self) -> int:
        wrapped = [[{0: v} if v else {} for v in row] for row in self.matrix]
        d = det(wrapped)
        return d.get(0, 0)


def twist_sequence(w: BraidWord) -> TwistSequence:
    """Per column i: loops (i,1)..(i,q_i - 1), sign alpha(i).

    A negative column is the inverse of the positive product, so its twists
    come out reversed and negated. Total length is m - n + 1 for any
    connected word.
    """
    if not homogeneous_letters(w.letters):
        raise InhomogeneousWordError(
            f"twist_sequence needs a homogeneous word, got {w}")
    if not connected(w.letters, w.strands):
        raise DisconnectedWordError(
            f"twist_sequence needs a connected word, {w} skips a generator",
            factors=split_factors(w))
    q = letter_counts(w.letters, w.strands)
    sgn = sign_map(w.letters)
    out = []
    for i in range(1, w.strands):
        col = [((i, j), sgn[i]) for j in range(1, q[i])]
        if sgn[i] < 0:
            col.reverse()
        out.extend(col)
    return TwistSequence(tuple(out))


def homology_action(seq: TwistSequence, J) -> HomologyAction:
    """Compose the transvections x -> x + sign * <x, loop> * loop over J."""
    basis = seq.basis_loops
    k = len(J)
    if len(basis) != k or any(len(row) != k for row in J):
        raise ValueError(
            f"form dimension {len(J)} does not match {len(basis)} loops")
    index = {loop: a for a, loop in enumerate(basis)}
    M = [[1 if r == c else 0 for c in range(k)] for r in range(k)]
    for loop, s in seq.twists:
        # left-multiply by T^s = I + E, E[idx][l] = eps*s*J[l][idx]; only
        # row idx changes, and E[idx][idx] = 0 because J is skew
        idx = index[loop]
        coef = [_EPS * s * J[l][idx] for l in range(k)]
        M[idx] = [M[idx][c] + sum(coef[l] * M[l][c] for l in range(k))
                  for c in range(k)]
    J_t = tuple(tuple(rw) for rw in J)
    return HomologyAction(tuple(tuple(rw) for rw in M), J_t, basis)


def monodromy_from_seifert(V: SeifertMatrix) -> HomologyAction:
    """The matrix V^(-1) V^T; V is unimodular for fibred data."""
    k = V.dimension
    E = V.entries
    aug = [[Fraction(E[r][c]) for c in range(k)] +
           [Fraction(1 if r == c else 0) for c in range(k)]
           for r in range(k)]
    for col in range(k):
        piv = next((r for r in range(col, k) if aug[r][col]), None)
        if piv is None:
            raise RuntimeError(
                "Seifert matrix is singular; fibred data must be unimodular")
        aug[col], aug[piv] = aug[piv], aug[col]
        pv = aug[col][col]
        aug[col] = [v / pv for v in aug[col]]
        for r in range(k):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    inv = [row[k:] for row in aug]
    M = []
    for r in range(k):
        out = []
        for c in range(k):
            v = sum(inv[r][l] * E[c][l] for l in range(k))
            if v.denominator != 1:
                raise RuntimeError(
                    "Seifert matrix is not unimodular; fibred data cannot "
                    "produce fractional monodromy entries")
            out.append(int(v))
        M.append(tuple(out))
    J = V.intersection_form()
    return HomologyAction(tuple(M), J, V.loops)


def action_of_word(w: BraidWord) -> HomologyAction:
    """Twist-route action of a homogeneous connected word, one call."""
    V = seifert_matrix(build_surface(w))
    return homology_action(twist_sequence(w), V.intersection_form())


def char_poly(action: HomologyAction) -> LaurentPolynomial:
    """det(tI - M), integer t-exponents (scale 1)."""
    M = action.matrix
    k = len(M)
    ent = []
    for r in range(k):
        row = []
        for c in range(k):
            e = {}
            if r == c:
                e[1] = 1
            if M[r][c]:
                e[0] = e.get(0, 0) - M[r][c]
            row.append({ex: cf for ex, cf in e.items() if cf})
        ent.append(row)
    return LaurentPolynomial.from_dict(det(ent), scale=1)


def matrix_order(action: HomologyAction, cap: int = 512):
    """Smallest positive power equal to the identity, or None within cap."""
    k = action.dimension
    ident = tuple(tuple(1 if r == c else 0 for c in range(k)) for r in range(k))
    P = ident
    M = action.matrix
    for order in range(1, cap + 1):
        P = tuple(tuple(sum(P[r][l] * M[l][c] for l in range(k))
                        for c in range(k)) for r in range(k))
        if P == ident:
            return order
    return None


def monodromy_order_bound(w: BraidWord) -> int:
    """lcm(2, q) for the (2, +-q) torus word sigma_1^(+-q), q >= 2."""
    letters = w.letters
    if (w.strands != 2 or len(letters) < 2
            or len(set(letters)) != 1 or abs(letters[0]) != 1):
        raise ValueError(
            f"order bound is stated for sigma_1^q words only, got {w}")
    return lcm(2, len(letters))
