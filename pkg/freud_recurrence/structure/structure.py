"""Structure relations of semiclassical weights and their verification.

For a weight with Pearson data lambda (degree p, leading coefficient z) and
phi (monic, degree q+1) the monic orthogonal polynomials satisfy

    lambda(x) P_n(x+1) = sum(A_k(n) P_{n+k}(x), -q-1 <= k <= p)
    phi(x) P_n(x-1) = sum(B_k(n) P_{n+k}(x), -p <= k <= q+1)

with h_{n+k} A_k(n) = L[lambda(x) P_n(x+1) P_{n+k}(x)] and h_{n+k} B_k(n) =
L[phi(x) P_n(x-1) P_{n+k}(x)]. The bands are computed from the moments only,
so checking them against a recurrence table is independent of the engine
that produced the table.

Copyright (C) 2025 Paulo Ferreira de Castro

Licensed under the Open Software License version 3.0, a copy of which can be
found in the LICENSE file.
"""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction

from ..moments.moments import MomentSequence, default_moments, moments_direct
from ..numerics import poly
from ..numerics.scalar import Scalar
from ..numerics.special import hyp_pfq, pochhammer
from ..oracle.error import QuasiDefiniteFailure
from ..oracle.oracle import (
    RecurrenceTable,
    functional_apply_product,
    functional_apply_shifted,
    monic_polys,
)
from ..weights.families import Family
from ..weights.weights import ConvergenceKind, WeightSpec, classify_convergence, pearson_data
from .error import BandOutOfRange
from .report import ResidualGroup, ResidualStat, residual_group

_LOGGER = logging.getLogger(__name__)


def eval_polys(rec: RecurrenceTable, x: "Scalar | int", n_max: int) -> list[Scalar]:
    """P_0(x)..P_N(x) by the three-term recurrence, N <= rec.n_max + 1."""
    if n_max > rec.n_max + 1:
        raise BandOutOfRange(f"P_{n_max} needs beta up to index {n_max - 1}, have {rec.n_max}")
    arith = rec.arith
    x = arith.scalar(x)
    values = [arith.one()]
    prev = arith.zero()
    for n in range(n_max):
        nxt = (x - rec.beta[n]) * values[-1] - rec.gamma[n] * prev
        prev = values[-1]
        values.append(nxt)
    return values


@dataclass(frozen=True)
class StructureCoeffs:
    p: int
    q: int
    n_max: int
    A: dict[tuple[int, int], Scalar]
    B: dict[tuple[int, int], Scalar]
    h: tuple[Scalar, ...]

    @property
    def a_band(self) -> range:
        return range(-self.q - 1, self.p + 1)

    @property
    def b_band(self) -> range:
        return range(-self.p, self.q + 2)

    def a(self, k: int, n: int) -> Scalar | None:
        """A_k(n); zero outside the band or below index 0, None when not computed."""
        return self._entry(self.A, self.a_band, k, n)

    def b(self, k: int, n: int) -> Scalar | None:
        return self._entry(self.B, self.b_band, k, n)

    def _entry(
        self, table: dict[tuple[int, int], Scalar], band: range, k: int, n: int
    ) -> Scalar | None:
        if k not in band or n < 0 or n + k < 0:
            return self.h[0].arith.zero()
        return table.get((k, n))

    def full_band(self, table: dict[tuple[int, int], Scalar], band: range, n: int) -> bool:
        return all((k, n) in table for k in band if n + k >= 0)


def band_top(spec: WeightSpec, rec: RecurrenceTable) -> int:
    """Highest polynomial index whose h is non-zero and whose coefficients are known."""
    top = rec.n_max
    if spec.support_cutoff is not None:
        top = min(top, spec.support_cutoff)
    return top


def structure_coeffs(
    spec: WeightSpec,
    rec: RecurrenceTable,
    n_max: int,
    mom: MomentSequence | None = None,
) -> StructureCoeffs:
    """A_k(n) and B_k(n) for 0 <= n <= N, from inner products.

    Band entries with n + k past the last usable index of `rec` are left
    out. Without explicit moments the default moments of `spec` are used.

    Raises:
        BandOutOfRange: N exceeds the usable range of the table.
        QuasiDefiniteFailure: some h_m vanishes.
    """
    p, q = spec.p, spec.q
    top = band_top(spec, rec)
    if n_max > top:
        raise BandOutOfRange(
            f"Bands up to n={n_max} need recurrence coefficients up to {n_max}, have {top}"
        )
    arith = rec.arith
    pd = pearson_data(spec, arith)
    order = max(2 * top, n_max + top + max(p, q + 1))
    if mom is None:
        mom = default_moments(spec, order, arith)
    polys = monic_polys(rec, top)

    h: list[Scalar] = []
    for m, pm in enumerate(polys):
        hm = functional_apply_product(mom, pm, pm)
        if hm.is_indeterminate():
            raise QuasiDefiniteFailure("h vanishes while computing structure bands", m)
        h.append(hm)

    a_table: dict[tuple[int, int], Scalar] = {}
    b_table: dict[tuple[int, int], Scalar] = {}
    for n in range(n_max + 1):
        lam_n = poly.mul(pd.lambda_coeffs, poly.shift(polys[n], 1))
        phi_n = poly.mul(pd.phi_coeffs, poly.shift(polys[n], -1))
        for k in range(-q - 1, p + 1):
            m = n + k
            if 0 <= m <= top:
                a_table[(k, n)] = functional_apply_product(mom, lam_n, polys[m]) / h[m]
        for k in range(-p, q + 2):
            m = n + k
            if 0 <= m <= top:
                b_table[(k, n)] = functional_apply_product(mom, phi_n, polys[m]) / h[m]
        if __debug__:
            _LOGGER.debug(
                "structure_coeffs: n=%d A=%s",
                n,
                [str(a_table.get((k, n))) for k in range(-q - 1, p + 1)],
            )
    return StructureCoeffs(p, q, n_max, a_table, b_table, tuple(h))


def _req_residual(sc: StructureCoeffs, rec: RecurrenceTable, n: int, k: int) -> Scalar | None:
    """gamma_{n+k+1} A_{k+1}(n) - gamma_n A_{k+1}(n-1) + A_{k-1}(n) - A_{k-1}(n+1)
    - (beta_n - beta_{n+k} - 1) A_k(n), or None when an entry is unknown."""
    a_next, a_next_prev = sc.a(k + 1, n), sc.a(k + 1, n - 1)
    a_prev, a_prev_next = sc.a(k - 1, n), sc.a(k - 1, n + 1)
    a_k = sc.a(k, n)
    if None in (a_next, a_next_prev, a_prev, a_prev_next, a_k) or n + k > rec.n_max:
        return None
    residual = a_prev - a_prev_next - (rec.beta[n] - rec.beta[n + k] - 1) * a_k
    residual = residual - rec.gamma[n] * a_next_prev
    if not a_next.is_exact_zero():
        if n + k + 1 > rec.n_max:
            return None
        residual = residual + rec.gamma[n + k + 1] * a_next
    return residual


def theorem1_residuals(sc: StructureCoeffs, rec: RecurrenceTable, z: Scalar) -> ResidualGroup:
    """Residuals of the band recurrence, the A/B duality and the boundary bands.

    "aq" is only evaluated for n >= q+1, where A_{-q-1}(n) is the product
    gamma_n gamma_{n-1} ... gamma_{n-q}.
    """
    group = residual_group("req", "ab", "ap", "aq", "bq")
    for n in range(sc.n_max + 1):
        for k in sc.a_band:
            if n + k < 0:
                continue
            residual = _req_residual(sc, rec, n, k)
            if residual is None:
                group["req"].skip()
            else:
                group["req"].observe(residual, (n, k))

            a_k = sc.A.get((k, n))
            b_dual = sc.B.get((-k, n + k))
            if a_k is None or b_dual is None:
                group["ab"].skip()
            else:
                group["ab"].observe(a_k - sc.h[n] / sc.h[n + k] * b_dual, (n, k))

        if (a_p := sc.A.get((sc.p, n))) is not None:
            group["ap"].observe(a_p - z, (n,))
        if (b_q := sc.B.get((sc.q + 1, n))) is not None:
            group["bq"].observe(b_q - 1, (n,))
        a_low = sc.A.get((-sc.q - 1, n))
        if n >= sc.q + 1 and a_low is not None:
            product = rec.gamma[n]
            for i in range(1, sc.q + 1):
                product = product * rec.gamma[n - i]
            group["aq"].observe(a_low - product, (n,))

    _log_skipped(group)
    return group


def de_pointwise_check(
    spec: WeightSpec,
    rec: RecurrenceTable,
    sc: StructureCoeffs,
    n_max: int | None = None,
    x_max: int | None = None,
) -> ResidualGroup:
    """Both structure relations at the integers x = 0..x_max.

    The default x_max = n + max(p, q+1) samples one point more than the
    degree of either side, so exact-mode zeros certify the identities. A
    relation is only checked at n when its whole band is known.
    """
    if n_max is None:
        n_max = sc.n_max
    arith = rec.arith
    pd = pearson_data(spec, arith)
    width = max(sc.p, sc.q + 1)
    last_x = x_max if x_max is not None else n_max + width
    top = min(rec.n_max, max((k + n for k, n in sc.A), default=0))
    values = {x: eval_polys(rec, x, top) for x in range(-1, last_x + 2)}
    lam = {x: poly.evaluate(pd.lambda_coeffs, x) for x in range(last_x + 1)}
    phi = {x: poly.evaluate(pd.phi_coeffs, x) for x in range(last_x + 1)}

    group = residual_group("de1", "de2")
    for n in range(n_max + 1):
        xs = range((x_max if x_max is not None else n + width) + 1)
        for name, table, band, pearson, step in (
            ("de1", sc.A, sc.a_band, lam, 1),
            ("de2", sc.B, sc.b_band, phi, -1),
        ):
            if not sc.full_band(table, band, n):
                group[name].skip()
                continue
            for x in xs:
                residual = pearson[x] * values[x + step][n]
                for k in band:
                    if n + k >= 0:
                        residual = residual - table[(k, n)] * values[x][n + k]
                group[name].observe(residual, (n, x))
    _log_skipped(group)
    return group


@dataclass(frozen=True)
class OrthogonalityResult:
    orthogonality: ResidualStat
    gh: ResidualStat
    h: tuple[Scalar, ...]

    def group(self) -> ResidualGroup:
        return {"orthogonality": self.orthogonality, "gh": self.gh}


def summation_moments(spec: WeightSpec, n_max: int, arith, target_err=None) -> MomentSequence:
    """Moments by weighted summation where it is available, the Pearson recurrence otherwise.

    Exact mode on an infinite support has no summation, and a z = 1 weight
    has finitely many convergent moments; both fall back to the recurrence.
    """
    conv = classify_convergence(spec)
    if conv.kind is ConvergenceKind.FINITE_SUPPORT or (
        not arith.is_exact and conv.kind is not ConvergenceKind.MOMENT_LIMITED
    ):
        return moments_direct(spec, n_max, arith, target_err)
    return default_moments(spec, n_max, arith, normalized=arith.is_exact)


def _normalized(value: Scalar, hn: Scalar, hm: Scalar) -> Scalar:
    """value / sqrt(|h_n h_m|)."""
    arith = value.arith
    gram = abs(hn * hm)
    if arith.is_exact:
        if value.value == 0:
            return value
        num, den = gram.value.numerator, gram.value.denominator
        root_num, root_den = math.isqrt(num), math.isqrt(den)
        if root_num * root_num == num and root_den * root_den == den:
            root = Fraction(root_num, root_den)
        else:
            # Only the magnitude matters for a non-zero residual.
            root = Fraction(max(root_num, 1), max(root_den, 1))
        return value / arith.scalar(root)
    root = arith.ctx.sqrt(gram.value)
    return value / arith.from_mpf(root, gram.err / (2 * root))


def _dot(coeffs: poly.Poly, row: list[Scalar]) -> Scalar:
    acc = row[0].arith.zero()
    for c, r in zip(coeffs, row):
        acc = acc + c * r
    return acc


def orthogonality_check(
    spec: WeightSpec,
    rec: RecurrenceTable,
    n_max: int | None = None,
    target_err=None,
    mom: MomentSequence | None = None,
) -> OrthogonalityResult:
    """L[P_n P_m] for m <= n <= N: normalized off-diagonals, h_n, and gamma_n = h_n/h_{n-1}.

    The moments default to weighted sums, see summation_moments.

    Raises:
        Divergent: the weight has no convergent moments.
        QuasiDefiniteFailure: some h_n vanishes.
    """
    if n_max is None:
        n_max = rec.n_max
    arith = rec.arith
    if mom is None:
        mom = summation_moments(spec, 2 * n_max, arith, target_err)
    polys = monic_polys(rec, n_max)

    h: list[Scalar] = []
    off_diagonal: list[tuple[int, int, Scalar]] = []
    for n in range(n_max + 1):
        # row[j] = L[P_n x**j], then L[P_n P_m] = sum(P_m[j] row[j]).
        row = [functional_apply_shifted(mom, polys[n], j) for j in range(n + 1)]
        for m in range(n):
            off_diagonal.append((n, m, _dot(polys[m], row)))
        hn = _dot(polys[n], row)
        if hn.is_indeterminate():
            raise QuasiDefiniteFailure("L[P_n**2] vanishes", n)
        h.append(hn)

    ortho, gh = ResidualStat("orthogonality"), ResidualStat("gh")
    for n, m, value in off_diagonal:
        ortho.observe(_normalized(value, h[n], h[m]), (n, m))
    for n in range(1, n_max + 1):
        gh.observe(rec.gamma[n] - h[n] / h[n - 1], (n,))
    if __debug__:
        _LOGGER.debug("orthogonality_check: h=%s", [str(v) for v in h])
    return OrthogonalityResult(ortho, gh, tuple(h))


def representation_check(
    family: Family, spec: WeightSpec, rec: RecurrenceTable, x_max: int | None = None
) -> ResidualGroup:
    """Compare P_n(x) against the hypergeometric representation of the family.

    Meixner: P_n(x) = (a)_n (1 - 1/z)**-n 2F1(-n, -x; a; 1 - 1/z).
    Hahn:    P_n(x) = (a1)_n (a2)_n / (n+K-1)_n 3F2(-n, -x, n+K-1; a1, a2; 1),
             K = a1 + a2 - b.
    Families without a representation give an empty group.
    """
    arith = rec.arith
    if family is Family.MEIXNER:
        (a,) = (arith.scalar(v) for v in spec.num_params)
        w = 1 - 1 / arith.scalar(spec.z)

        def closed(n: int, x: int) -> Scalar | None:
            series = hyp_pfq([arith.scalar(-n), arith.scalar(-x)], [a], w).value
            return pochhammer(a, n) * series / w**n

    elif family in (Family.HAHN, Family.HAHN_CLASSICAL):
        a1, a2 = (arith.scalar(v) for v in spec.num_params)
        (b,) = (arith.scalar(v) for v in spec.den_params)
        k = a1 + a2 - b

        def closed(n: int, x: int) -> Scalar | None:
            scale = pochhammer(k + (n - 1), n)
            if scale.is_indeterminate():
                return None
            num = [arith.scalar(-n), arith.scalar(-x), k + (n - 1)]
            series = hyp_pfq(num, [a1, a2], arith.one()).value
            return pochhammer(a1, n) * pochhammer(a2, n) / scale * series

    else:
        return {}

    if x_max is None:
        x_max = rec.n_max + 1
    stat = ResidualStat("representation")
    for x in range(x_max + 1):
        values = eval_polys(rec, x, rec.n_max)
        for n, value in enumerate(values):
            expected = closed(n, x)
            if expected is None:
                stat.skip()
            else:
                stat.observe(value - expected, (n, x))
    _log_skipped({"representation": stat})
    return {"representation": stat}


def _log_skipped(group: ResidualGroup):
    for stat in group.values():
        if stat.skipped:
            _LOGGER.info(
                "%s: %d instances need coefficients past the computed range", stat.name, stat.skipped
            )
