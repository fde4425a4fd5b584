import cmath
import math

import numpy as np
import pytest

from annulus_zeros import (ProblemParams, cross_g, dirichlet_cross,
                           neumann_cross, oblique_cross, oblique_cross_dz,
                           oblique_cross_scaled, unchecked_params)
from annulus_zeros.errors import DomainError


def half_integer_dirichlet(kappa, z):
    # J_{1/2}, Y_{1/2} closed forms collapse G^{0,0} onto a shifted sine
    return 2 / (math.pi * z * math.sqrt(kappa)) * cmath.sin((kappa - 1) * z)


def test_params_validation():
    with pytest.raises(ValueError):
        ProblemParams(2.0, 1.0)
    with pytest.raises(ValueError):
        ProblemParams(2.0, 0.9)
    with pytest.raises(ValueError):
        ProblemParams(-1.0, 1.5)
    with pytest.raises(ValueError):
        ProblemParams(1.0, 1.5, -0.5)
    # test-only constructor bypasses all of it
    p = unchecked_params(1.0, 1.0, -0.5)
    assert p.kappa == 1.0 and p.beta == -0.5


def test_wronskian_through_cross_g():
    # kappa = 1 turns G^{0,1} into the Wronskian 2/(pi z)
    p = unchecked_params(1.0, 1.0)
    z = 2.0
    assert cross_g(0, 1, p, z) == pytest.approx(1 / math.pi, rel=1e-12)


def test_antisymmetry_at_kappa_one():
    p = unchecked_params(3.0, 1.0)
    for z in (1.5, complex(4.0, 0.7)):
        assert cross_g(0, 0, p, z) == 0
        assert cross_g(1, 1, p, z) == 0
        assert cross_g(0, 1, p, z) + cross_g(1, 0, p, z) == pytest.approx(0.0, abs=1e-14)
        assert dirichlet_cross(p, z) == 0


def test_half_integer_closed_form():
    p = ProblemParams(0.5, 1.5)
    z = 2.0
    assert cross_g(0, 0, p, z) == pytest.approx(half_integer_dirichlet(1.5, z), rel=1e-10)


def test_dirichlet_half_integer_zero():
    p = ProblemParams(0.5, 2.0)
    assert abs(dirichlet_cross(p, math.pi)) <= 1e-10


def test_beta_zero_is_exactly_neumann():
    rng = np.random.default_rng(11)
    for _ in range(10):
        p = ProblemParams(rng.uniform(0, 5), 1 + rng.uniform(0.05, 1.0), 0.0)
        z = complex(rng.uniform(1, 30), rng.uniform(-1, 1))
        assert oblique_cross(p, z) == neumann_cross(p, z)


def test_nu_zero_is_exactly_neumann():
    p = ProblemParams(0.0, 1.2, 0.7)
    z = complex(5.0, 0.3)
    assert oblique_cross(p, z) == neumann_cross(p, z)


def test_neumann_real_on_real_axis():
    p = ProblemParams(2.0, 1.1)
    v = neumann_cross(p, 7.0)
    assert abs(v.imag) <= 1e-14 * abs(v)


def test_scaled_variant():
    p = ProblemParams(2.0, 1.1, 0.5)
    z = complex(3.0, -0.2)
    assert oblique_cross_scaled(p, z) == pytest.approx(
        p.kappa * z * z * oblique_cross(p, z), rel=1e-14)


def test_symmetry_inverse_kappa():
    # g(beta, 1/kappa, kappa z) = -g(beta, kappa, z)
    rng = np.random.default_rng(12)
    for _ in range(25):
        nu = rng.uniform(0, 6)
        kappa = 1 + rng.uniform(0.05, 0.8)
        beta = rng.uniform(0, 2)
        z = complex(rng.uniform(1, 25), rng.uniform(-1.5, 1.5))
        lhs = oblique_cross(unchecked_params(nu, 1 / kappa, beta), kappa * z)
        rhs = -oblique_cross(ProblemParams(nu, kappa, beta), z)
        assert lhs == pytest.approx(rhs, rel=1e-10)


def test_symmetry_negated_argument():
    # g(beta, kappa, -z) = g(beta, kappa, z); keep Im z != 0 to stay off the cut
    rng = np.random.default_rng(13)
    for _ in range(25):
        p = ProblemParams(rng.uniform(0, 6), 1 + rng.uniform(0.05, 0.8),
                          rng.uniform(0, 2))
        z = complex(rng.uniform(1, 25), rng.uniform(0.1, 1.5))
        assert oblique_cross(p, -z) == pytest.approx(oblique_cross(p, z), rel=1e-10)


def test_symmetry_conjugation():
    # conj(g(beta, kappa, z)) = g(-beta, kappa, conj z)
    rng = np.random.default_rng(14)
    for _ in range(25):
        nu = rng.uniform(0, 6)
        kappa = 1 + rng.uniform(0.05, 0.8)
        beta = rng.uniform(0, 2)
        z = complex(rng.uniform(1, 25), rng.uniform(-1.5, 1.5))
        lhs = oblique_cross(ProblemParams(nu, kappa, beta), z).conjugate()
        rhs = oblique_cross(unchecked_params(nu, kappa, -beta), z.conjugate())
        assert lhs == pytest.approx(rhs, rel=1e-10)


def test_dz_against_finite_differences():
    rng = np.random.default_rng(15)
    for _ in range(10):
        p = ProblemParams(3.0, 1.2, 0.5)
        z = complex(rng.uniform(5, 15), rng.uniform(-0.5, 0.5))
        h = 1e-6 * max(1.0, abs(z))
        fd = (oblique_cross(p, z + h) - oblique_cross(p, z - h)) / (2 * h)
        an = oblique_cross_dz(p, z)
        assert an == pytest.approx(fd, rel=1e-5)


def test_dz_half_integer_closed_form():
    # beta = 0, nu = 1/2: differentiate the Neumann closed form numerically at
    # high order to act as an independent reference
    kappa = 1.5
    p = ProblemParams(0.5, kappa)

    def closed(z):
        # G^{1,1} for nu=1/2 from the sine/cosine closed forms
        s, c = cmath.sin(z), cmath.cos(z)
        sk, ck = cmath.sin(kappa * z), cmath.cos(kappa * z)

        def jp(w, sw, cw):
            return math.sqrt(2 / math.pi) * (cw / cmath.sqrt(w) - sw / (2 * w**1.5))

        def yp(w, sw, cw):
            return math.sqrt(2 / math.pi) * (sw / cmath.sqrt(w) + cw / (2 * w**1.5))

        return jp(z, s, c) * yp(kappa * z, sk, ck) - jp(kappa * z, sk, ck) * yp(z, s, c)

    z = 2.0
    h = 1e-5
    # Richardson-extrapolated central difference of the closed form
    d1 = (closed(z + h) - closed(z - h)) / (2 * h)
    d2 = (closed(z + h / 2) - closed(z - h / 2)) / h
    fd = (4 * d2 - d1) / 3
    assert oblique_cross_dz(p, z) == pytest.approx(fd, rel=1e-8)


def test_dz_conjugation_consistency():
    p_plus = ProblemParams(2.0, 1.3, 0.8)
    p_minus = unchecked_params(2.0, 1.3, -0.8)
    z = complex(4.0, 0.6)
    lhs = oblique_cross_dz(p_plus, z.conjugate())
    rhs = oblique_cross_dz(p_minus, z).conjugate()
    assert lhs == pytest.approx(rhs, rel=1e-10)


def test_z_zero_rejected():
    p = ProblemParams(1.0, 1.2, 0.3)
    with pytest.raises(DomainError):
        oblique_cross(p, 0.0)
    with pytest.raises(DomainError):
        oblique_cross_dz(p, 0.0)
