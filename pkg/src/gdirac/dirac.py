"""The Dirac-type operator on (charge-0 Fock space) x (spinor module).

The operator is the normal-ordered contraction

    D = 1/2 sum_{i*j<0} E_ij (x) gamma_ji

whose two branches either annihilate a particle/antiparticle pair of
the Fock factor while creating a spinor mode, or the reverse.  On
finitely supported vectors each infinite sum collapses to the occupied
indices, so D is exact with no cut-off; the cut-off version sums the
window literally.  Its square, restricted to the diagonal-invariant
sector, equals 1/4 (renormalized Casimir (x) 1 + 1 (x) fermion number).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import casimir as _cas
from .fock import FockState, fock_basis, rhat_apply, rhat_state
from .linalg import ExactMatrix, Vec, spans_equal
from .scalar import HALF_SQRT2, ZERO, Scalar
from .spinor import (
    SpinState,
    fermion_number_apply,
    fermion_number_cutoff_apply,
    gamma_unit_state,
    k_family_apply,
    ktilde_state_terms,
    spin_basis,
)


@dataclass(frozen=True, slots=True)
class TensorState:
    fock: FockState
    spin: SpinState

    def bound(self) -> int:
        return max(self.fock.bound(), self.spin.bound())

    def sort_key(self):
        return (self.fock.sort_key(), self.spin.sort_key())

    def __str__(self) -> str:
        return f"{self.fock}(x){self.spin}"


def tensor_basis_state(fock: FockState, spin: SpinState) -> Vec:
    return Vec.basis(TensorState(fock, spin))


def _add(out: dict, key, coeff: Scalar) -> None:
    acc = out.get(key, ZERO) + coeff
    if acc:
        out[key] = acc
    else:
        out.pop(key, None)


def dirac_apply(v: Vec) -> Vec:
    """Exact Dirac action: the annihilating factors bound every sum."""
    out: dict = {}
    for ts, c in v.terms.items():
        f, s = ts.fock, ts.spin
        half = c * HALF_SQRT2
        # pair annihilation in Fock, mode creation in spin:
        # 1/2 E_{-p,q} (x) gamma_{q,-p} over occupied (q, -p)
        for q in f.plus:
            for p in f.minus:
                t = rhat_state(p, q, f)
                if t is None:
                    continue
                s1, f2 = t
                t = gamma_unit_state(q, p, s)
                if t is None:
                    continue
                s2, sp2 = t
                _add(out, TensorState(f2, sp2), half if s1 * s2 > 0 else -half)
        # pair creation in Fock, mode annihilation in spin:
        # 1/2 E_{m,l} (x) gamma_{l,m} over occupied modes (m, l)
        for m, l in s.modes:
            t = rhat_state(m, l, f)
            if t is None:
                continue
            s1, f2 = t
            t = gamma_unit_state(l, m, s)
            if t is None:
                continue
            s2, sp2 = t
            _add(out, TensorState(f2, sp2), half if s1 * s2 > 0 else -half)
    return Vec(out)


def dirac_cutoff_apply(n: int, v: Vec) -> Vec:
    """Literal windowed sum 1/2 sum_{|i|,|j|<=N, ij<0} E_ij (x) gamma_ji."""
    out: dict = {}
    window = [(i, j) for i in range(1, n + 1) for j in range(-n, 0)]
    for ts, c in v.terms.items():
        f, s = ts.fock, ts.spin
        half = c * HALF_SQRT2
        for i, j in window:
            # (i, j) with i > 0 > j: gamma_ji removes the mode (i, j)
            t = gamma_unit_state(j, i, s)
            if t is not None:
                s2, sp2 = t
                t2 = rhat_state(i, j, f)
                if t2 is not None:
                    s1, f2 = t2
                    _add(out, TensorState(f2, sp2), half if s1 * s2 > 0 else -half)
            # (j, i) with j < 0 < i: gamma_ij creates the mode (i, j)
            t = gamma_unit_state(i, j, s)
            if t is not None:
                s2, sp2 = t
                t2 = rhat_state(j, i, f)
                if t2 is not None:
                    s1, f2 = t2
                    _add(out, TensorState(f2, sp2), half if s1 * s2 > 0 else -half)
    return Vec(out)


def rho_apply(p: int, q: int, v: Vec) -> Vec:
    """Diagonal action rhat(E_pq) (x) 1 + 1 (x) ad(E_pq) for p*q > 0."""
    if p * q <= 0:
        raise ValueError("rho needs indices of a common sign")
    out: dict = {}
    for ts, c in v.terms.items():
        t = rhat_state(p, q, ts.fock)
        if t is not None:
            sign, f2 = t
            _add(out, TensorState(f2, ts.spin), c if sign > 0 else -c)
        for sign, sp2 in ktilde_state_terms(p, q, ts.spin):
            _add(out, TensorState(ts.fock, sp2), c if sign > 0 else -c)
    return Vec(out)


def diagonal_casimir_apply(n: int, v: Vec) -> Vec:
    """sum_{ij>0, window} rho(E_ij) rho(E_ji); kills the invariant sector."""
    out = Vec()
    for sign in (1, -1):
        for i0 in range(1, n + 1):
            for j0 in range(1, n + 1):
                i, j = sign * i0, sign * j0
                out = out + rho_apply(i, j, rho_apply(j, i, v))
    return out


@dataclass(frozen=True, slots=True)
class InvariantBlock:
    trunc: int
    pairs: int
    spin_length: int
    basis: tuple[Vec, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def eigenvalue(self) -> Fraction:
        """Eigenvalue of D^2 on the block."""
        return Fraction(self.pairs + self.spin_length, 2)


def _block_states(n: int, pairs: int, spin_length: int) -> list[TensorState]:
    fs = fock_basis(n, zero_ok=False, charge=0)
    fs = [f for f in fs if len(f.plus) == pairs]
    ss = spin_basis(n, length=spin_length)
    return [TensorState(f, s) for f in fs for s in ss]


def _invariant_nullspace(n: int, pairs: int, spin_length: int, window: int) -> list[Vec]:
    cols = _block_states(n, pairs, spin_length)
    if not cols:
        return []
    col_index = {ts: i for i, ts in enumerate(cols)}
    ops = [(s * i, s * j) for s in (1, -1) for i in range(1, window + 1) for j in range(1, window + 1)]
    rows: dict[tuple, dict[int, Scalar]] = {}
    for ci, ts in enumerate(cols):
        for op_i, (p, q) in enumerate(ops):
            img = rho_apply(p, q, Vec.basis(ts))
            for state, coeff in img.terms.items():
                row = rows.setdefault((op_i, state), {})
                acc = row.get(ci, ZERO) + coeff
                if acc:
                    row[ci] = acc
                else:
                    row.pop(ci, None)
        # pin the column order for reconstruction
    matrix = ExactMatrix([r for r in rows.values() if r], len(cols))
    basis = []
    for vec in matrix.nullspace():
        basis.append(Vec({cols[i]: c for i, c in vec.terms.items()}))
    return basis


def invariant_basis(n: int, pairs: int, spin_length: int) -> InvariantBlock:
    """Exact basis of the diagonal-invariant (pairs, spin_length) block.

    Constraints are imposed for all index pairs of a common sign inside
    the window n+1 (one index beyond the state window); constraints
    reaching further out act as relabelled copies of these, which
    ``constraint_window_robust`` verifies.
    """
    if n < max(pairs, spin_length):
        raise ValueError("truncation too small for the requested block")
    basis = _invariant_nullspace(n, pairs, spin_length, n + 1)
    return InvariantBlock(n, pairs, spin_length, tuple(basis))


def constraint_window_robust(n: int, pairs: int, spin_length: int) -> bool:
    """True when the windows n+1 and n+2 cut out the same block."""
    a = _invariant_nullspace(n, pairs, spin_length, n + 1)
    b = _invariant_nullspace(n, pairs, spin_length, n + 2)
    if not a and not b:
        return True
    return spans_equal(a, b)


def t_square_apply(v: Vec) -> Vec:
    """Renormalized Casimir (x) 1 + 1 (x) fermion number (= 4 D^2 on
    the invariant sector)."""
    g = _cas.CasimirVariant(_cas.G_LIMIT, None, include0=False)
    out: dict = {}
    for ts, c in v.terms.items():
        w = _cas.casimir_apply(g, Vec.basis(ts.fock, c))
        for f2, c2 in w.terms.items():
            _add(out, TensorState(f2, ts.spin), c2)
        fn = fermion_number_apply(Vec.basis(ts.spin, c))
        for s2, c2 in fn.terms.items():
            _add(out, TensorState(ts.fock, s2), c2)
    return Vec(out)


# ---------------------------------------------------------------------------
# Square identities for the cut-off operator


def _spin_op_tensor(v: Vec, spin_fn) -> Vec:
    """1 (x) spin_fn applied factor-wise."""
    grouped: dict[FockState, dict[SpinState, Scalar]] = {}
    for ts, c in v.terms.items():
        grouped.setdefault(ts.fock, {})[ts.spin] = c
    out: dict = {}
    for f, terms in grouped.items():
        w = spin_fn(Vec(terms))
        for s, c in w.terms.items():
            _add(out, TensorState(f, s), c)
    return Vec(out)


def _fock_op_tensor(v: Vec, fock_fn) -> Vec:
    grouped: dict[SpinState, dict[FockState, Scalar]] = {}
    for ts, c in v.terms.items():
        grouped.setdefault(ts.spin, {})[ts.fock] = c
    out: dict = {}
    for s, terms in grouped.items():
        w = fock_fn(Vec(terms))
        for f, c in w.terms.items():
            _add(out, TensorState(f, s), c)
    return Vec(out)


def _h_spin(n, i, j, sv):
    from .spinor import H_N

    return k_family_apply(H_N, n, i, j, sv)


def _square_rhs_raw(n: int, v: Vec) -> Vec:
    """4 x the raw three-term expansion of the cut-off square."""
    pairs = [(i, j) for i in range(1, n + 1) for j in range(-n, 0)]
    pairs += [(j, i) for (i, j) in pairs]
    quarter = Scalar.of(Fraction(1, 4))
    half = Scalar.of(Fraction(1, 2))
    out: dict = {}
    # (1/16) sum (delta_jm E_in - delta_ni E_mj) (x) [gamma_ji, gamma_nm]
    # with gamma = sqrt(2) u this is (1/8)*... ; scaled by 4 -> 1/2.
    for i, j in pairs:
        for m, n2 in pairs:
            contrib = []
            if j == m:
                contrib.append(((i, n2), 1))
            if n2 == i:
                contrib.append(((m, j), -1))
            if not contrib:
                continue
            for ts, c in v.terms.items():
                f, s = ts.fock, ts.spin
                for (ep, eq), sgn in contrib:
                    t = rhat_state(ep, eq, f)
                    if t is None:
                        continue
                    fs, f2 = t
                    base = c * half * (sgn * fs)
                    # [gamma_ji, gamma_nm] = 2(u_ji u_nm - u_nm u_ji)
                    for order in (0, 1):
                        a1, a2 = ((j, i), (n2, m)) if order == 0 else ((n2, m), (j, i))
                        t2 = gamma_unit_state(*a2, s)
                        if t2 is None:
                            continue
                        g1, mid = t2
                        t2 = gamma_unit_state(*a1, mid)
                        if t2 is None:
                            continue
                        g2, end = t2
                        coeff = base * (g1 * g2) if order == 0 else -base * (g1 * g2)
                        _add(out, TensorState(f2, end), coeff)
    # (1/8) sum sign(i) 1 (x) gamma_ij gamma_ji = (1/4) sum sign(i) u u;
    # scaled by 4 -> sign(i) * u_ij u_ji.
    for i, j in pairs:
        sgn = 1 if i > 0 else -1
        for ts, c in v.terms.items():
            f, s = ts.fock, ts.spin
            t = gamma_unit_state(j, i, s)
            if t is None:
                continue
            g1, mid = t
            t = gamma_unit_state(i, j, mid)
            if t is None:
                continue
            g2, end = t
            _add(out, TensorState(f, end), c * (sgn * g1 * g2))
    # (1/4) sum E_ij E_ji (x) 1; scaled by 4 -> E_ij E_ji.
    for i, j in pairs:
        for ts, c in v.terms.items():
            f, s = ts.fock, ts.spin
            t = rhat_state(j, i, f)
            if t is None:
                continue
            s1, mid = t
            t = rhat_state(i, j, mid)
            if t is None:
                continue
            s2, end = t
            _add(out, TensorState(end, s), c * (s1 * s2))
    return Vec(out)


def _square_rhs_hk(n: int, v: Vec) -> Vec:
    """Naive-Casimir form of 4 D_(N)^2 with the diagonal Casimir subtracted."""
    idx = [i for i in range(-n, n + 1) if i != 0]
    same_sign = [(i, j) for i in idx for j in idx if i * j > 0]

    def fock_quad(pairs_list, fv):
        out: dict = {}
        for p, q in pairs_list:
            for f, c in fv.terms.items():
                t = rhat_state(q, p, f)
                if t is None:
                    continue
                s1, mid = t
                t = rhat_state(p, q, mid)
                if t is None:
                    continue
                s2, end = t
                _add(out, end, c * (s1 * s2))
        return Vec(out)

    # Delta_g^(N) (x) 1 : all pairs, both halves, including the diagonal
    all_pairs = [(i, j) for i in idx for j in idx]
    acc = _fock_op_tensor(v, lambda fv: fock_quad(all_pairs, fv))
    # minus the naive diagonal Casimir: E E (x) 1 + 2 E (x) H + 1 (x) H H
    acc = acc - _fock_op_tensor(v, lambda fv: fock_quad(same_sign, fv))
    for i, j in same_sign:
        mid = _spin_op_tensor(v, lambda sv, a=j, b=i: _h_spin(n, a, b, sv))
        mid = _fock_op_tensor(mid, lambda fv, a=i, b=j: rhat_apply(a, b, fv))
        acc = acc - mid.scaled(2)
    hh = Vec()
    for i, j in same_sign:
        hh = hh + _spin_op_tensor(
            v, lambda sv, a=i, b=j: _h_spin(n, a, b, _h_spin(n, b, a, sv))
        )
    acc = acc - hh
    # plus 1 (x) sum H_ij H_ji  (cancels the one inside the diagonal Casimir)
    acc = acc + hh
    # plus 1 (x) sum sign(i) H_ii
    for i in idx:
        sgn = 1 if i > 0 else -1
        acc = acc + _spin_op_tensor(v, lambda sv, a=i: _h_spin(n, a, a, sv)).scaled(sgn)
    return acc


def invariance_residual(v: Vec, window: int) -> Scalar:
    best = ZERO
    for s in (1, -1):
        for i in range(1, window + 1):
            for j in range(1, window + 1):
                r = rho_apply(s * i, s * j, v).max_abs()
                if best < r:
                    best = r
    return best


def square_identity_residual(n: int, form: str, v: Vec) -> Scalar:
    """max coefficient residual between 4 D_(N)^2 v and the named form.

    ``raw``   - the commutator/anticommutator expansion of the square;
    ``hk``    - the naive-Casimir regrouping;
    ``final`` - Casimir_ren^(N) (x) 1 + 1 (x) F_(N), valid on the
                invariant sector only (checked, error otherwise); the
                exact square (no cut-off) is required to agree as well.
    """
    lhs = dirac_cutoff_apply(n, dirac_cutoff_apply(n, v)).scaled(4)
    if form == "raw":
        rhs = _square_rhs_raw(n, v)
    elif form == "hk":
        rhs = _square_rhs_hk(n, v)
    elif form == "final":
        bound = max((ts.bound() for ts in v.terms), default=0)
        if invariance_residual(v, max(n, bound) + 1):
            raise ValueError("final form needs an invariant vector")
        g = _cas.CasimirVariant(_cas.G_REN_N, n, include0=False)
        rhs = _fock_op_tensor(v, lambda fv: _cas.casimir_apply(g, fv))
        rhs = rhs + _spin_op_tensor(v, lambda sv: fermion_number_cutoff_apply(n, sv))
        exact = dirac_apply(dirac_apply(v)).scaled(4)
        r2 = (exact - rhs).max_abs()
        r1 = (lhs - rhs).max_abs()
        return r1 if r2 < r1 else r2
    else:
        raise ValueError(f"unknown square form {form!r}")
    return (lhs - rhs).max_abs()


def spectrum_report(n: int, degree_bound: int) -> dict:
    """Block dimensions and exact D^2 eigenvalues up to the degree bound.

    Raises if the zero-eigenvalue part is anything other than the
    one-dimensional (0, 0) block.
    """
    blocks = []
    kernel_dim = 0
    for pairs in range(degree_bound + 1):
        for k in range(degree_bound + 1):
            blk = invariant_basis(n, pairs, k)
            eig = blk.eigenvalue
            blocks.append({"M": pairs, "k": k, "dim": blk.dim, "eig": str(eig)})
            if eig == 0:
                kernel_dim += blk.dim
            elif blk.dim:
                # nonzero block: eigenvalue certified on the basis
                for vec in blk.basis:
                    resid = dirac_apply(dirac_apply(vec)) - vec.scaled(Scalar.of(eig))
                    if not resid.is_zero():
                        raise RuntimeError("block eigenvalue check failed")
    if kernel_dim != 1:
        raise RuntimeError(f"kernel dimension {kernel_dim} != 1")
    return {"trunc": n, "blocks": blocks, "kernel_dim": kernel_dim}


def tensor_states(bound: int) -> list[TensorState]:
    """Charge-0 tensor basis states bounded by ``bound``."""
    fs = fock_basis(bound, zero_ok=False, charge=0)
    ss = spin_basis(bound)
    out = [TensorState(f, s) for f in fs for s in ss]
    out.sort(key=TensorState.sort_key)
    return out
