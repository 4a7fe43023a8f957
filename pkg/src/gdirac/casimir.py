"""Normal-ordered Casimir operators, highest weight vectors, Heisenberg shifts.

Two lattices are in play.  The include-zero lattice (plus half =
{0, 1, 2, ...}) carries the cut-off Casimir

    D^(N) = 2 sum_{j<i, |i|,|j|<=N} E_ij E_ji + sum_{|i|<=N} E_ii (E_ii - 2i)

and its window-free limit; the exclude-zero lattice carries the
renormalized variant with diagonal term E_ii (E_ii - 2i + sign(i)).
The naive double sums differ from the normal-ordered ones by the exact
window constants

    naive - normal = N(N+1)   (include-zero window),
    naive - g_ren  = N^2      (exclude-zero window),

the count of raising/lowering pairs crossing the polarization inside
the window.  Note the boundary convention forced by the vacuum sea
{k < 0}: index 0 belongs to the plus half, so the commutator table and
the cocycle treat 0 like a positive index.
"""

from __future__ import annotations

from dataclasses import dataclass

from .fock import FockState, LieElement, diagonal_weight, rhat_apply, rhat_state
from .linalg import Vec
from .scalar import ZERO, Scalar

NAIVE_N = "naive_N"
NORMAL_N = "normal_N"
LIMIT = "limit"
G_REN_N = "g_ren_N"
G_LIMIT = "g_limit"

_TAGS = (NAIVE_N, NORMAL_N, LIMIT, G_REN_N, G_LIMIT)


@dataclass(frozen=True, slots=True)
class CasimirVariant:
    tag: str
    n: int | None = None
    include0: bool = True

    def __post_init__(self):
        if self.tag not in _TAGS:
            raise ValueError(f"unknown casimir variant {self.tag!r}")
        if self.tag in (NAIVE_N, NORMAL_N, G_REN_N) and self.n is None:
            raise ValueError(f"{self.tag} needs a cut-off N")
        if self.tag in (NORMAL_N, LIMIT) and not self.include0:
            raise ValueError(f"{self.tag} lives on the include-zero lattice")
        if self.tag in (G_REN_N, G_LIMIT) and self.include0:
            raise ValueError(f"{self.tag} lives on the exclude-zero lattice")


def _half_sign(i: int, include0: bool) -> int:
    """+1 on the plus half of the lattice, -1 on the minus half."""
    if i > 0 or (i == 0 and include0):
        return 1
    return -1


def _window_indices(n: int, include0: bool) -> list[int]:
    lo = 0 if include0 else 1
    return list(range(-n, 0)) + list(range(lo, n + 1))


def _casimir_state(tag: str, n: int | None, include0: bool, s: FockState) -> Vec:
    if tag in (LIMIT, G_LIMIT):
        # Annihilate-first ordering: every contributing pair stays
        # within the occupied window, so the infinite sums collapse.
        n = s.bound()
    idx = _window_indices(n, include0)
    out: dict = {}

    def add(state, coeff):
        acc = out.get(state, ZERO) + coeff
        if acc:
            out[state] = acc
        else:
            out.pop(state, None)

    # quadratic part: 2 sum_{j<i} E_ij E_ji (raising first)
    for i in idx:
        for j in idx:
            if j >= i:
                continue
            t = rhat_state(j, i, s)
            if t is None:
                continue
            s1, mid = t
            t = rhat_state(i, j, mid)
            if t is None:
                continue
            s2, end = t
            add(end, Scalar.of(2 * s1 * s2))
    # diagonal part (the caller guarantees the support sits inside the
    # window, so the occupied sums are complete)
    sign_corr = 0 if tag in (NORMAL_N, LIMIT) else 1
    diag = 0
    for i in s.plus:
        diag += 1 - 2 * i + sign_corr
    for i in s.minus:
        diag += 1 + 2 * i + sign_corr
    if diag:
        add(s, Scalar.of(diag))
    return Vec(out)


def _naive_state(n: int, include0: bool, s: FockState) -> Vec:
    idx = _window_indices(n, include0)
    out: dict = {}
    for i in idx:
        for j in idx:
            t = rhat_state(j, i, s)
            if t is None:
                continue
            s1, mid = t
            t = rhat_state(i, j, mid)
            if t is None:
                continue
            s2, end = t
            acc = out.get(end, ZERO) + Scalar.of(s1 * s2)
            if acc:
                out[end] = acc
            else:
                out.pop(end, None)
    return Vec(out)


def casimir_apply(variant: CasimirVariant, v: Vec) -> Vec:
    """Apply the selected Casimir variant exactly.

    Windowed variants demand the support inside the window (hard error,
    like the shift operators): evaluating them across the boundary
    would produce plausible but silently truncated numbers.
    """
    out = Vec()
    for s, c in v.terms.items():
        if s.zero_ok != variant.include0:
            raise ValueError("state lattice does not match the variant lattice")
        if variant.n is not None and s.bound() > variant.n:
            raise ValueError("support exceeds the cut-off window")
        if variant.tag == NAIVE_N:
            w = _naive_state(variant.n, variant.include0, s)
        else:
            w = _casimir_state(variant.tag, variant.n, variant.include0, s)
        out = out + w.scaled(c)
    return out


def casimir_commutator(variant: CasimirVariant, m: int, n: int) -> LieElement:
    """Closed form of [Casimir, E_mn]: 2 * halfsign(m) * E_mn across the
    polarization, zero when m and n sit in the same half."""
    if variant.n is not None and max(abs(m), abs(n)) > variant.n:
        raise ValueError("index out of the cut-off window")
    include0 = variant.include0
    if not include0 and (m == 0 or n == 0):
        raise ValueError("index 0 is not on the lattice")
    hm, hn = _half_sign(m, include0), _half_sign(n, include0)
    if hm == hn:
        return LieElement({}, 0, include0)
    return LieElement({(m, n): Scalar.of(2 * hm)}, 0, include0)


def num_of(w: FockState) -> int:
    """Number of antiparticle creators in the canonical word.

    For charge-0 states this is the pair count |plus| = |minus|; it is
    the count that makes the eigenvalue law

        Casimir(w) = [2 num_of(w) + 1 - (m - 1)^2] w   (charge m)

    exact on every canonical basis state of the include-zero lattice.
    """
    return len(w.minus)


def hw_state(m: int) -> FockState:
    """Charge-m highest weight vector on the include-zero lattice."""
    if m > 0:
        return FockState(tuple(range(0, m)), (), True)
    if m < 0:
        return FockState((), tuple(range(m, 0)), True)
    return FockState.vacuum(True)


def hw_weight(m: int, i: int) -> int:
    """Diagonal weight of E_ii on hw_state(m)."""
    if m > 0 and 0 <= i <= m - 1:
        return 1
    if m < 0 and m <= i < 0:
        return -1
    return 0


def heisenberg_apply(n: int, k: int, v: Vec, include0: bool = True) -> Vec:
    """Windowed shift operator s_k = sum_i E_{i,i+k}.

    Hard interior precondition: every occupied |index| must stay
    <= N - |k|, otherwise the windowed sum would silently differ from
    the full one near the boundary.
    """
    if k == 0:
        raise ValueError("k must be nonzero")
    for s in v.terms:
        if s.bound() > n - abs(k):
            raise ValueError("support too close to the window edge")
    out = Vec()
    lo = 0 if include0 else 1
    for i in range(-n, n + 1):
        j = i + k
        if abs(i) > n or abs(j) > n:
            continue
        if (0 in (i, j)) and lo == 1:
            continue
        out = out + rhat_apply(i, j, v)
    return out


def window_identity_residual(n: int, states: list[FockState]) -> Scalar:
    """max residual of sum_{i<j, window}(E_ii - E_jj) = -2 sum_k k E_kk
    on the include-zero window, applied to the given basis states."""
    idx = _window_indices(n, True)
    best = ZERO
    for s in states:
        lhs = 0
        for a, i in enumerate(idx):
            for j in idx[a + 1 :]:
                lhs += diagonal_weight(i, s) - diagonal_weight(j, s)
        rhs = -2 * sum(k * diagonal_weight(k, s) for k in idx)
        r = abs(Scalar.of(lhs - rhs))
        if best < r:
            best = r
    return best
