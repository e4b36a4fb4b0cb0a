"""Complex polynomial arithmetic, the conjugate-reciprocal involution and roots.

Polynomials are dense coefficient sequences in ascending power order. All
operations are pure; every returned polynomial is normalized so that the
trailing coefficient is significant relative to the largest one.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .errors import DegreeExceedsBound, PointOutOfRegion, ZeroPolynomial
from .tolerances import DEFAULT_TOL, ToleranceConfig

_EPS = 2.220446049250313e-16
_TRIM_REL = 1e-12


@dataclass(frozen=True, init=False)
class Poly:
    """A complex polynomial; ``coeffs[i]`` multiplies ``lambda**i``.

    The zero polynomial is the empty tuple. Construction trims trailing
    coefficients whose modulus is below ``eps_trim`` times the largest
    coefficient modulus, keeping degrees honest after cancellation.
    """

    coeffs: tuple[complex, ...]

    def __init__(self, coeffs=(), eps_trim: float = _TRIM_REL):
        cs = [complex(c) for c in coeffs]
        top = max((abs(c) for c in cs), default=0.0)
        cutoff = eps_trim * top
        end = len(cs)
        while end > 0 and abs(cs[end - 1]) <= cutoff:
            end -= 1
        object.__setattr__(self, "coeffs", tuple(cs[:end]))

    # -- basic queries ------------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree of the polynomial; the zero polynomial has degree -1."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def max_coeff(self) -> float:
        return max((abs(c) for c in self.coeffs), default=0.0)

    def coeff(self, k: int) -> complex:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0j

    def padded(self, length: int) -> list[complex]:
        return list(self.coeffs) + [0j] * max(0, length - len(self.coeffs))

    # -- ring operations ----------------------------------------------------

    def __add__(self, other: "Poly") -> "Poly":
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly([a + b for a, b in zip(self.padded(n), other.padded(n))])

    def __sub__(self, other: "Poly") -> "Poly":
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly([a - b for a, b in zip(self.padded(n), other.padded(n))])

    def __neg__(self) -> "Poly":
        return Poly([-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, Poly):
            if self.is_zero() or other.is_zero():
                return Poly()
            out = [0j] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
            return Poly(out)
        return Poly([complex(other) * c for c in self.coeffs])

    __rmul__ = __mul__

    def __call__(self, z: complex) -> complex:
        acc = 0j
        for c in reversed(self.coeffs):
            acc = acc * z + c
        return acc

    def derivative(self) -> "Poly":
        return Poly([k * c for k, c in enumerate(self.coeffs)][1:])

    def conjugate_coeffs(self) -> "Poly":
        return Poly([c.conjugate() for c in self.coeffs])


def poly_one() -> Poly:
    return Poly([1.0])


def conj_reciprocal(f: Poly, n: int) -> Poly:
    """The reflection ``lambda**n * conj(f(1/conj(lambda)))`` as a polynomial.

    Coefficient k of the result is the conjugate of coefficient n-k of f.
    """
    if n < 0:
        raise DegreeExceedsBound(f"reflection bound must be nonnegative, got {n}")
    if f.degree > n:
        raise DegreeExceedsBound(f"degree {f.degree} exceeds reflection bound {n}")
    padded = f.padded(n + 1)
    return Poly([padded[n - k].conjugate() for k in range(n + 1)])


def is_n_symmetric(f: Poly, n: int, tol: ToleranceConfig = DEFAULT_TOL) -> bool:
    """True when f equals its n-reflection within ``eps_residual`` slack."""
    if n < 0 or f.degree > n:
        return False
    mirrored = conj_reciprocal(f, n)
    a = f.padded(n + 1)
    b = mirrored.padded(n + 1)
    gap = max(abs(x - y) for x, y in zip(a, b))
    return gap <= tol.eps_residual * (1.0 + f.max_coeff)


# -- elementary factors -----------------------------------------------------


def q_factor(sigma: complex, tol: ToleranceConfig = DEFAULT_TOL) -> Poly:
    """The 2-symmetric factor (lambda - sigma)(1 - conj(sigma) lambda).

    Requires sigma in the closed unit disc, up to ``eps_circle`` slack.
    """
    sigma = complex(sigma)
    if abs(sigma) > 1.0 + tol.eps_circle:
        raise PointOutOfRegion(f"|sigma| = {abs(sigma):.3g} lies outside the closed disc")
    return Poly([-sigma, 1.0 + abs(sigma) ** 2, -sigma.conjugate()])


def l_factor(tau: complex, tol: ToleranceConfig = DEFAULT_TOL) -> Poly:
    """The 1-symmetric factor i e^{-i theta/2} (lambda - tau) for tau = e^{i theta}.

    theta is the principal argument of tau mapped into [0, 2 pi). tau is
    snapped to exact unit modulus; squaring the result gives ``q_factor(tau)``.
    """
    tau = complex(tau)
    if abs(abs(tau) - 1.0) > tol.eps_circle:
        raise PointOutOfRegion(f"|tau| = {abs(tau):.3g} is not on the unit circle")
    tau /= abs(tau)
    theta = cmath.phase(tau)
    if theta < 0.0:
        theta += 2.0 * math.pi
    front = 1j * cmath.exp(-0.5j * theta)
    return Poly([-front * tau, front])


# -- root finding -----------------------------------------------------------


def _horner_pair(cs, z):
    """Value, derivative and a running modulus bound for the float error."""
    p = cs[-1]
    dp = 0j
    bound = abs(cs[-1])
    az = abs(z)
    for c in reversed(cs[:-1]):
        dp = dp * z + p
        p = p * z + c
        bound = bound * az + abs(c)
    return p, dp, bound


def _deflate(cs, root):
    out = [cs[-1]]
    for c in reversed(cs[1:-1]):
        out.append(c + root * out[-1])
    out.reverse()
    return out


def _newton(cs, z, iters=60):
    best = z
    best_res = abs(_horner_pair(cs, z)[0])
    cur = z
    for _ in range(iters):
        p, dp, bound = _horner_pair(cs, cur)
        if abs(p) <= 4.0 * len(cs) * _EPS * bound:
            return cur
        if dp == 0:
            break
        cur = cur - p / dp
        res = abs(_horner_pair(cs, cur)[0])
        if res < best_res:
            best, best_res = cur, res
    return best


def _quadratic(cs):
    c, b, a = cs
    disc = cmath.sqrt(b * b - 4.0 * a * c)
    if (b.conjugate() * disc).real < 0.0:
        disc = -disc
    q = -0.5 * (b + disc)
    if q == 0:
        return [-b / (2.0 * a), -b / (2.0 * a)]
    return [q / a, c / q]


def _aberth(cs, max_iter=400):
    """All roots of a polynomial with nonzero constant and leading coefficient.

    Simultaneous Ehrlich-Aberth iteration from a deterministic circular start.
    Individual approximations freeze once the residual falls below the Horner
    rounding bound, which is the attainable accuracy also at multiple roots.
    On stagnation the best root is polished and deflated out, and the quotient
    is re-solved.
    """
    d = len(cs) - 1
    if d == 1:
        return [-cs[0] / cs[1]]
    if d == 2:
        return _quadratic(cs)

    radius = abs(cs[0] / cs[-1]) ** (1.0 / d)
    z = [radius * cmath.exp(1j * (2.0 * math.pi * k / d + 0.4)) for k in range(d)]
    frozen = [False] * d

    for _ in range(max_iter):
        moved = False
        for k in range(d):
            if frozen[k]:
                continue
            p, dp, bound = _horner_pair(cs, z[k])
            if abs(p) <= 4.0 * d * _EPS * bound:
                frozen[k] = True
                continue
            if dp == 0:
                z[k] += (1e-6 + 1e-6j) * (1.0 + abs(z[k]))
                moved = True
                continue
            newton = p / dp
            repulsion = 0j
            collision = False
            for j in range(d):
                if j == k:
                    continue
                diff = z[k] - z[j]
                if diff == 0:
                    collision = True
                    break
                repulsion += 1.0 / diff
            if collision:
                z[k] += (1e-6 + 2e-6j) * (1.0 + abs(z[k]))
                moved = True
                continue
            denom = 1.0 - newton * repulsion
            step = newton if denom == 0 else newton / denom
            z[k] -= step
            moved = True
            if abs(step) <= 16.0 * _EPS * (1.0 + abs(z[k])):
                frozen[k] = True
        if not moved:
            break

    if not all(frozen):
        # Stagnation fallback: peel off the best-converged root and recurse.
        best = min(range(d), key=lambda k: abs(_horner_pair(cs, z[k])[0]))
        root = _newton(cs, z[best])
        rest = _aberth(_deflate(cs, root), max_iter)
        return [root] + rest
    return z


_CLUSTER_CAP = 1e-2


def _components(count, linked):
    """Connected components of indices under a pairwise predicate."""
    seen = [False] * count
    groups = []
    for start in range(count):
        if seen[start]:
            continue
        stack = [start]
        seen[start] = True
        component = []
        while stack:
            i = stack.pop()
            component.append(i)
            for j in range(count):
                if not seen[j] and linked(i, j):
                    seen[j] = True
                    stack.append(j)
        groups.append(component)
    return groups


def _abs_bound(cs, z):
    acc = 0.0
    az = abs(z)
    for c in reversed(cs):
        acc = acc * az + abs(c)
    return acc


class _ClusterContext:
    """Derivatives and residual floors of one polynomial, for clustering.

    ``eps_coeff`` declares the relative uncertainty the coefficients carry
    from upstream arithmetic (for example the cancellation in 4 D D~ - E^2);
    the trimming threshold is the natural level. Differentiation scales each
    coefficient linearly, so the relative noise survives it.
    """

    def __init__(self, f: Poly, eps_coeff: float = 0.0):
        self.degree = f.degree
        self.noise = 4.0 * max(f.degree, 1) * _EPS + eps_coeff
        self.derivs = [f]
        g = f
        while g.degree > 0:
            g = g.derivative()
            self.derivs.append(g)

    def residual_floor(self, z: complex, j: int = 0) -> float:
        """Below this, |f^{(j)}(z)| is indistinguishable from zero.

        Combines the evaluation bound and the declared coefficient noise,
        with a peak term so the floor stays meaningful near the origin.
        """
        if j >= len(self.derivs):
            return 0.0
        cs = self.derivs[j].coeffs
        peak = max((abs(c) for c in cs), default=0.0)
        return self.noise * (_abs_bound(cs, z) + peak)

    def resolvability(self, z: complex, m: int) -> float:
        """Radius below which an m-fold root at z cannot be split.

        Where the m-th Taylor coefficient is c_m, the residual stays under
        the rounding floor within |w - z| of order (floor / |c_m|)^(1/m), so
        separate approximations inside that disc carry no information.
        """
        if m >= len(self.derivs):
            return math.inf
        lead = abs(self.derivs[m](z)) / math.factorial(m)
        if lead == 0.0:
            return math.inf
        return (self.residual_floor(z) / lead) ** (1.0 / m)

    def consistent_root(self, z: complex, m: int) -> bool:
        """Backward-error test: f and its first m-1 derivatives vanish at z."""
        return all(
            abs(self.derivs[j](z)) <= 32.0 * self.residual_floor(z, j)
            for j in range(min(m, len(self.derivs)))
        )


def _cluster(roots, eps_root, ctx: _ClusterContext):
    """Cluster raw roots into polished (root, multiplicity) pairs.

    Multiplicity hypotheses are tested from high m downward. The linkage
    radius for a hypothesis combines the eps_root**(1/m) heuristic with the
    residual resolvability radius at each point, capped so that genuinely
    separated roots stay apart; a linked group is accepted only when it holds
    at least m roots and the polished center passes the backward-error test
    that all derivatives below order m vanish numerically. Rejected groups
    fall through to smaller hypotheses.
    """
    pending = [(z, 1) for z in sorted(roots, key=lambda w: (w.real, w.imag))]
    accepted = []
    for m in range(len(pending), 1, -1):
        if m > sum(w for _, w in pending):
            continue
        radii = [
            min(
                max(eps_root ** (1.0 / m), 8.0 * ctx.resolvability(z, m)),
                _CLUSTER_CAP,
            )
            for z, _ in pending
        ]

        def linked(i, j):
            return abs(pending[i][0] - pending[j][0]) <= max(radii[i], radii[j])

        still = []
        for group in _components(len(pending), linked):
            total = sum(pending[i][1] for i in group)
            if total >= m and total > 1:
                centroid = sum(pending[i][0] * pending[i][1] for i in group) / total
                spread = max(abs(pending[i][0] - centroid) for i in group)
                polished = _polish_cluster(ctx, centroid, total, spread, eps_root)
                if ctx.consistent_root(polished, total):
                    accepted.append((polished, total))
                    continue
            still.extend(pending[i] for i in group)
        pending = still
    for z, w in pending:
        accepted.append((_polish_cluster(ctx, z, w, 0.0, eps_root), w))
    return accepted


def _polish_cluster(
    ctx: _ClusterContext, z: complex, mult: int, spread: float, eps_root: float
) -> complex:
    """Refine an m-fold root via Newton on the (m-1)-th derivative."""
    if mult >= len(ctx.derivs):
        return z
    g = ctx.derivs[mult - 1]
    dg = ctx.derivs[mult] if mult < len(ctx.derivs) else None
    if g.is_zero() or dg is None or dg.is_zero():
        return z
    leash = 4.0 * (spread + min(eps_root ** (1.0 / mult), _CLUSTER_CAP)) + 1e-12
    cur = z
    best = z
    best_val = abs(g(z))
    for _ in range(12):
        gv = g(cur)
        dgv = dg(cur)
        if dgv == 0:
            break
        nxt = cur - gv / dgv
        if abs(nxt - z) > leash * (1.0 + abs(z)):
            break
        cur = nxt
        val = abs(g(cur))
        if val < best_val:
            best, best_val = cur, val
        if val == 0.0:
            break
    return best


def roots_with_multiplicity(
    f: Poly, tol: ToleranceConfig = DEFAULT_TOL
) -> tuple[tuple[complex, int], ...]:
    """All roots of f with multiplicities, clustered and centroid-polished.

    Returns pairs (root, multiplicity) sorted by (real, imag); the
    multiplicities sum to ``f.degree``. Roots closer together than the
    accuracy attainable for their combined multiplicity are reported as one
    root at the polished cluster centroid.
    """
    if f.is_zero():
        raise ZeroPolynomial("cannot extract roots of the zero polynomial")
    if f.degree == 0:
        return ()

    scale = f.max_coeff
    cs = [c / scale for c in f.coeffs]

    zeros_at_origin = 0
    while abs(cs[0]) <= tol.eps_trim:
        zeros_at_origin += 1
        cs = cs[1:]

    # Origin roots are decided by the coefficient test, not by clustering.
    clustered = []
    if zeros_at_origin:
        clustered.append((0j, zeros_at_origin))
    if len(cs) > 1:
        ctx = _ClusterContext(f, eps_coeff=tol.eps_trim)
        clustered.extend(_cluster(_aberth(cs), tol.eps_root, ctx))
    clustered.sort(key=lambda item: (item[0].real, item[0].imag))
    return tuple(clustered)


def poly_from_roots(roots, lead: complex = 1.0) -> Poly:
    """Expand ``lead * prod (lambda - r)`` over (root, multiplicity) pairs."""
    acc = Poly([complex(lead)])
    for z, m in roots:
        for _ in range(m):
            acc = acc * Poly([-z, 1.0])
    return acc


def root_location_uncertainties(
    f: Poly, roots, eps_coeff: float = 0.0
) -> tuple[float, ...]:
    """First-order positional error bound for each computed (root, mult) pair.

    An m-fold root is pinned down as a simple zero of the (m-1)-th
    derivative, so its displacement under the rounding floor is the floor of
    that derivative divided by the m-th derivative's magnitude.
    """
    ctx = _ClusterContext(f, eps_coeff=eps_coeff)
    out = []
    for z, m in roots:
        j = min(max(m - 1, 0), len(ctx.derivs) - 1)
        noise = ctx.residual_floor(z, j)
        slope = abs(ctx.derivs[m](z)) if m < len(ctx.derivs) else 0.0
        out.append(noise / slope if slope > 0.0 else math.inf)
    return tuple(out)
