import numpy as np
import pytest

from saftwave import checks, mra, wavelets
from saftwave.params import FIGURE1, FIGURE2, SaftParams

SQRT2 = np.sqrt(2.0)


def test_shannon_lowpass_values():
    h = wavelets.shannon_lowpass
    assert h(FIGURE1, 0) == pytest.approx(1.0 / SQRT2)
    for params in (FIGURE1, FIGURE2):
        assert h(params, 2) == 0 and h(params, 4) == 0 and h(params, -2) == 0
        # odd taps have magnitude sqrt(2)/(pi |n|)
        for n in (1, -1, 3, 7):
            assert abs(h(params, n)) == pytest.approx(SQRT2 / (np.pi * abs(n)))


def test_shannon_highpass_matches_lowpass_reflection():
    # closed forms and the generic reflection rule must agree tap by tap
    for params in (FIGURE1, FIGURE2):
        assert wavelets.shannon_highpass_mismatch(params, 32) < 1e-12


def test_shannon_filters_windows():
    h, d = wavelets.shannon_filters(FIGURE1, 16)
    assert (h.lo, h.hi) == (-16, 16)
    assert (d.lo, d.hi) == (-15, 17)
    with pytest.raises(ValueError):
        wavelets.shannon_filters(FIGURE1, 0)


@pytest.mark.parametrize("params", [FIGURE1, FIGURE2])
def test_shannon_psi_at_half_integers(params):
    # at x = m/2 the base sinc collapses to a Kronecker delta, so
    # psi(m/2) = sqrt(2) * d_m exactly, for any window containing m
    _, d = wavelets.shannon_filters(params, 64)
    x = np.array([0.5, 1.0, -1.5])
    vals = wavelets.shannon_psi(params, 64, x)
    for xi, v in zip(x, vals):
        m = int(round(2 * xi))
        assert v == pytest.approx(SQRT2 * d.coeff(m), abs=1e-12)


def test_haar_filter_taps():
    for params in (FIGURE1, FIGURE2):
        theta = (params.A / 4.0 + params.p) / (2.0 * params.B)
        h, d = wavelets.haar_filters(params)
        assert h.coeff(0) == pytest.approx(1.0 / SQRT2)
        assert h.coeff(1) == pytest.approx(np.exp(-1j * theta) / SQRT2)
        assert (d.lo, d.hi) == (0, 1)


def test_haar_psi_piecewise_values():
    params = FIGURE2
    A, B, p = params.A, params.B, params.p
    x = np.array([-0.2, 0.1, 0.7, 1.3])
    v = wavelets.haar_psi(params, x)
    assert v[0] == 0 and v[3] == 0
    assert v[1] == pytest.approx(-np.exp(-1j * (A * 0.01 + p) / (2 * B)))
    assert v[2] == pytest.approx(np.exp(-1j * (A * 0.49 + p) / (2 * B)))


def test_haar_psi_scalar():
    assert wavelets.haar_psi(FIGURE1, 2.0) == 0.0


def test_haar_synthesis_matches_closed_form_at_p0():
    # with p = 0 the synthesized wavelet and the piecewise closed form agree
    # up to a single global unimodular phase
    params = SaftParams(FIGURE2.A, FIGURE2.B, FIGURE2.C, FIGURE2.D, 0.0, FIGURE2.q)
    x = np.linspace(-0.5, 1.5, 401)
    x = x[np.abs(x - 0.5) > 1e-9]
    _, d = wavelets.haar_filters(params)
    synth = mra.synthesize_psi(params, mra.BOX_SCALING, d, x)
    closed = wavelets.haar_psi(params, x)
    corr = np.sum(synth * np.conj(closed))
    phase = corr / abs(corr)
    assert np.max(np.abs(synth - phase * closed)) < 1e-12


@pytest.mark.parametrize("params", [FIGURE1, FIGURE2])
def test_haar_phi_psi_orthogonal_exact(params):
    # piecewise-exact inner product: the chirps cancel on each half cell
    _, d = wavelets.haar_filters(params)
    assert abs(checks.box_phi_psi_inner(params, d)) < 1e-12


def test_shannon_phi_psi_orthogonal_quadrature():
    assert checks.check_shannon_orthogonality(FIGURE1)["pass"]


def test_wavelet_family_roundtrip():
    fam = wavelets.WaveletFamily.haar(FIGURE1)
    x = np.linspace(-0.25, 1.25, 101)
    direct = mra.synthesize_psi(FIGURE1, mra.BOX_SCALING, fam.d, x)
    assert np.array_equal(fam.psi(x), direct)
    sh = wavelets.WaveletFamily.shannon(FIGURE1, N=8)
    assert sh.scaling() is mra.SINC_SCALING
