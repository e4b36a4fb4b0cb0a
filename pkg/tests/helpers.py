"""Seeded generators shared by the test modules."""

from __future__ import annotations

import cmath
import math
import random

from gammakit import Poly, SynthesisSpec


def random_poly(rng: random.Random, degree: int) -> Poly:
    coeffs = [complex(rng.gauss(0, 1), rng.gauss(0, 1)) for _ in range(degree + 1)]
    if abs(coeffs[-1]) < 0.1:
        coeffs[-1] += 0.5
    return Poly(coeffs)


def random_unimodular(rng: random.Random) -> complex:
    return cmath.exp(1j * rng.uniform(0.0, 2.0 * math.pi))


def _separated_angles(rng: random.Random, count: int, taken, gap: float) -> list[float]:
    angles = list(taken)
    out = []
    attempts = 0
    while len(out) < count:
        attempts += 1
        if attempts > 10_000:
            raise RuntimeError("could not place separated angles")
        cand = rng.uniform(0.0, 2.0 * math.pi)
        if all(abs(cmath.exp(1j * cand) - cmath.exp(1j * a)) > gap for a in angles):
            angles.append(cand)
            out.append(cand)
    return out


def _separated_disc_points(rng: random.Random, count: int, gap: float) -> list[complex]:
    points: list[complex] = []
    attempts = 0
    while len(points) < count:
        attempts += 1
        if attempts > 10_000:
            raise RuntimeError("could not place separated disc points")
        cand = cmath.rect(0.85 * math.sqrt(rng.random()), rng.uniform(0, 2 * math.pi))
        if all(abs(cand - q) > gap for q in points):
            points.append(cand)
    return points


def random_spec(rng: random.Random, n_max: int = 10) -> SynthesisSpec:
    """A well-separated random prescription: mixed circle and interior nodes."""
    n = rng.randint(1, n_max)
    k0 = rng.randint(0, n // 2)
    k1 = n - 2 * k0
    n_circle = rng.randint(0, n)

    tau_angles = _separated_angles(rng, k1, [], 0.1)
    sigma_angles = _separated_angles(rng, n_circle, tau_angles, 0.1)
    sigmas = [cmath.exp(1j * a) for a in sigma_angles]
    sigmas += _separated_disc_points(rng, n - n_circle, 0.05)
    alphas = _separated_disc_points(rng, k0, 0.05)

    log_hi = math.log(10.0)
    t_plus = math.exp(rng.uniform(math.log(0.1), log_hi))
    t = math.exp(rng.uniform(math.log(0.1), log_hi)) * rng.choice((-1.0, 1.0))
    return SynthesisSpec(
        alphas=tuple(alphas),
        taus=tuple(cmath.exp(1j * a) for a in tau_angles),
        sigmas=tuple(sigmas),
        t_plus=t_plus,
        t=t,
        omega=random_unimodular(rng),
    )


def circle_points(count: int):
    return [cmath.exp(2j * math.pi * j / count) for j in range(count)]


def same_multiset(found, expected, tol: float) -> bool:
    """Match two point lists up to permutation within ``tol``."""
    remaining = list(expected)
    for z in found:
        for i, w in enumerate(remaining):
            if abs(z - w) <= tol:
                remaining.pop(i)
                break
        else:
            return False
    return not remaining
