import numpy as np
import pytest
from hypothesis import given, strategies as st

from saftwave.params import (FIGURE1, FIGURE2, NonpositiveB, NotUnimodular,
                             SaftParams, invert_params, prefactor, validate)


def unimodular(draw):
    a = draw(st.floats(0.2, 3.0)) * draw(st.sampled_from([-1.0, 1.0]))
    b = draw(st.floats(0.1, 3.0))
    c = draw(st.floats(-3.0, 3.0))
    p = draw(st.floats(-3.0, 3.0))
    q = draw(st.floats(-3.0, 3.0))
    return SaftParams(a, b, c, (1.0 + b * c) / a, p, q)


unimodular_params = st.composite(unimodular)()


def test_presets_are_valid():
    validate(FIGURE1)
    validate(FIGURE2)
    assert FIGURE1.det == pytest.approx(1.0, abs=1e-15)
    assert FIGURE2.det == pytest.approx(1.0, abs=1e-15)


def test_validate_rejects_bad_matrices():
    with pytest.raises(NonpositiveB):
        validate(SaftParams(1.0, -1.0, 1.0, 0.0))
    with pytest.raises(NonpositiveB):
        validate(SaftParams(1.0, 0.0, 1.0, 1.0))
    with pytest.raises(NotUnimodular):
        validate(SaftParams(2.0, 1.0, 0.0, 2.0))


def test_validate_determinant_tolerance():
    validate(SaftParams(1.0, 1.0, 0.0, 1.0 + 5e-13))
    with pytest.raises(NotUnimodular):
        validate(SaftParams(1.0, 1.0, 0.0, 1.0 + 5e-12))


@given(unimodular_params)
def test_prefactor_unit_modulus(params):
    assert abs(abs(prefactor(params)) - 1.0) < 1e-12


def test_prefactor_identity_offsets():
    assert prefactor(SaftParams(1.0, 1.0, -1.0, 0.0)) == 1.0 + 0.0j


@given(unimodular_params)
def test_invert_params_entries(params):
    inv = invert_params(params)
    assert inv.A == params.D and inv.B == -params.B and inv.C == -params.C
    assert inv.D == params.A
    assert inv.p == pytest.approx(params.D * params.p - params.B * params.q)
    assert inv.q == pytest.approx(params.A * params.q - params.C * params.p)
    # adjugate of a unimodular matrix is unimodular
    assert inv.det == pytest.approx(1.0, abs=1e-9)
