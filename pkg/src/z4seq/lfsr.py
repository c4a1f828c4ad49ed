"""Minimal LFSR synthesis over Z4 plus an independent solvability oracle.

reeds_sloane finds the shortest register by binary search on the length:
solvability of the order-L recurrence system is monotone in L (a shorter
register is also a longer one with a vacuous head), and each candidate is
decided exactly over Z4 through a Howell-form echelon of the column space.
Zero divisors are handled by keying pivots on 2-adic valuation and queueing
the doubled image of every non-unit pivot, so membership reduction is exact.

snf_min_length is the independent oracle: for each length ascending it
decides solvability of the recurrence on the *periodic* sequence by Smith
diagonalization over Z4.  The two routes share no linear algebra.
"""

from dataclasses import dataclass

import numpy as np

from .errors import OracleTooLarge


@dataclass(frozen=True)
class LfsrResult:
    """Shortest register found: digits obey sum(c_j s_{k-j}) = 0 for k >= length."""

    length: int
    connection: tuple  # c_0..c_L over Z4, c_0 a unit
    annihilates: bool


def _conv(poly, seq, k):
    """Coefficient of x^k in poly(x) * seq(x), mod 4."""
    acc = 0
    for j, c in enumerate(poly):
        if j > k:
            break
        if c:
            acc += c * seq[k - j]
    return acc % 4


def _howell_solve(A, b):
    """A particular solution of A x = b over Z4, or None.

    Columns of A (augmented with an identity tail that records the
    combination) are reduced to an echelon set with one pivot per leading
    position; a pivot with even leading entry also contributes its double,
    which reaches further positions.  b is then reduced against the pivots.
    """
    A = np.asarray(A, dtype=np.int64) % 4
    rhs = np.asarray(b, dtype=np.int64) % 4
    m, L = A.shape
    if L == 0:
        return np.zeros(0, dtype=np.int64) if not np.any(rhs % 4) else None
    ident = np.eye(L, dtype=np.int64)
    queue = [np.concatenate([A[:, j], ident[j]]) for j in range(L)]
    pivots: dict[int, np.ndarray] = {}
    while queue:
        v = queue.pop() % 4
        while True:
            lead = np.nonzero(v[:m])[0]
            if lead.size == 0:
                break
            j = int(lead[0])
            pv = pivots.get(j)
            if pv is None:
                pivots[j] = v
                if v[j] % 2 == 0:
                    queue.append(2 * v % 4)
                break
            if pv[j] % 2 == 1:
                v = (v - (v[j] * pv[j] % 4) * pv) % 4  # units are self-inverse
            elif v[j] % 2 == 1:
                pivots[j] = v  # unit pivot displaces the even one
                v = pv
            else:
                v = (v - ((v[j] // 2) * (pv[j] // 2) % 2) * pv) % 4
    x = np.zeros(L, dtype=np.int64)
    r = rhs.copy()
    for j in sorted(pivots):
        if r[j] % 4 == 0:
            continue
        pv = pivots[j]
        if pv[j] % 2 == 1:
            c = r[j] * pv[j] % 4
        elif r[j] % 2 == 0:
            c = (r[j] // 2) * (pv[j] // 2) % 2
        else:
            return None
        r = (r - c * pv[:m]) % 4
        x = (x + c * pv[m:]) % 4
    if np.any(r % 4):
        return None
    return x


def _finite_system(seq, L):
    """Toeplitz system for an order-L recurrence on positions L..len(seq)-1."""
    N = len(seq)
    A = np.empty((N - L, L), dtype=np.int64)
    b = np.empty(N - L, dtype=np.int64)
    for t, i in enumerate(range(L, N)):
        for j in range(1, L + 1):
            A[t, j - 1] = seq[i - j]
        b[t] = -seq[i] % 4
    return A, b


def reeds_sloane(digits, n: int | None = None) -> LfsrResult:
    """Minimal-length linear recurrence over Z4 generating the first n digits.

    For one full period repeated twice the returned length is the linear
    complexity of the periodic sequence.
    """
    seq = [int(d) % 4 for d in (digits if n is None else list(digits)[:n])]
    N = len(seq)
    if all(v == 0 for v in seq):
        return LfsrResult(length=0, connection=(1,), annihilates=True)

    def solve(L):
        if L >= N:
            return np.zeros(L, dtype=np.int64)
        return _howell_solve(*_finite_system(seq, L))

    lo, hi = 1, N
    best = solve(N)
    while lo < hi:
        mid = (lo + hi) // 2
        x = solve(mid)
        if x is not None:
            best, hi = x, mid
        else:
            lo = mid + 1
    L = lo
    poly = [1] + [int(c) % 4 for c in best[:L]]
    ok = all(_conv(poly, seq, i) == 0 for i in range(L, N))
    return LfsrResult(length=L, connection=tuple(poly), annihilates=ok)


# --- independent oracle -----------------------------------------------------

def solvable_z4(A, b) -> bool:
    """Decide solvability of A x = b over Z4 by Smith reduction.

    Elementary row operations are mirrored on b; column operations only
    reparametrize the unknowns.  After diagonalization the pivots are units
    or 2, and compatibility is a per-row valuation check.
    """
    M = np.asarray(A, dtype=np.int64).copy() % 4
    v = np.asarray(b, dtype=np.int64).copy() % 4
    if M.size == 0:
        return bool(np.all(v % 4 == 0))
    nrows, ncols = M.shape
    r = 0
    while r < nrows and r < ncols:
        sub = M[r:, r:]
        picks = np.argwhere(sub % 2 == 1)
        if picks.size == 0:
            picks = np.argwhere(sub == 2)
            if picks.size == 0:
                break
        pi, pj = int(picks[0][0]) + r, int(picks[0][1]) + r
        if pi != r:
            M[[r, pi]] = M[[pi, r]]
            v[[r, pi]] = v[[pi, r]]
        if pj != r:
            M[:, [r, pj]] = M[:, [pj, r]]
        piv = int(M[r, r])
        if piv % 2:
            M[r] = M[r] * piv % 4  # units are self-inverse
            v[r] = v[r] * piv % 4
            col = M[:, r].copy()
            col[r] = 0
            if np.any(col):
                M -= np.outer(col, M[r])
                M %= 4
                v -= col * v[r]
                v %= 4
            M[r, r + 1:] = 0  # column eliminations against a cleared column
        else:
            # the working submatrix is entirely even here
            col = M[r + 1:, r] // 2
            if np.any(col):
                M[r + 1:] -= np.outer(col, M[r])
                M[r + 1:] %= 4
                v[r + 1:] -= col * v[r]
                v[r + 1:] %= 4
            M[r, r + 1:] = 0
        r += 1
    diag = M.diagonal()[:r]
    if np.any((diag == 2) & (v[:r] % 2 != 0)):
        return False
    return bool(np.all(v[r:] % 4 == 0))


def _periodic_system(s, L, period):
    """Toeplitz system for an order-L recurrence on the periodic sequence."""
    A = np.empty((period, L), dtype=np.int64)
    b = np.empty(period, dtype=np.int64)
    for t in range(period):
        i = L + t
        for j in range(1, L + 1):
            A[t, j - 1] = s[(i - j) % period]
        b[t] = -s[i % period] % 4
    return A, b


def snf_min_length(digits, period: int) -> int:
    """Smallest order of a periodic recurrence over Z4, by ascending SNF tests."""
    if period > 64:
        raise OracleTooLarge(f"oracle capped at period 64, got {period}")
    s = [int(d) % 4 for d in digits]
    if len(s) != period:
        raise ValueError(f"{len(s)} digits for period {period}")
    if all(v == 0 for v in s):
        return 0
    for L in range(1, period + 1):
        A, b = _periodic_system(s, L, period)
        if solvable_z4(A, b):
            return L
    raise AssertionError("unreachable: order = period always solves")
