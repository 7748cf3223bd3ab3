"""Acceptance gate: nine end-to-end criteria, one printed PASS/FAIL line each."""
import json
import time

import numpy as np

from saftwave import approx, checks, cli, core, mra, sampling, wavelets
from saftwave.params import FIGURE1, FIGURE2, SaftParams
from saftwave.signal import SampledFunction, UniformGrid

PRESETS = (("figure1", FIGURE1), ("figure2", FIGURE2))


def report(num, label, ok, detail):
    line = f"ACCEPTANCE {num} ({label}): {'PASS' if ok else 'FAIL'} — {detail}"
    print(line)
    assert ok, line


def gaussian(half_width=8.0, step=1 / 64, chirp=0.0, freq=0.0):
    grid = UniformGrid.from_range(-half_width, half_width, step)
    x = grid.points
    return SampledFunction(grid, np.exp(-0.5 * x * x + 1j * (chirp * x * x + freq * x)))


def test_criterion_1_fourier_reduction():
    t0 = time.perf_counter()
    rot = SaftParams(0.0, 1.0, -1.0, 0.0, 0.0, 0.0)
    zgrid = UniformGrid.from_range(-8.0, 8.0, 1 / 64)
    F = core.forward(rot, gaussian(), zgrid)
    expected = np.exp(-1j * np.pi / 4.0) * np.exp(-0.5 * zgrid.points ** 2)
    err = float(np.max(np.abs(F.values - expected)))
    dt = time.perf_counter() - t0
    report(1, "Fourier reduction", err <= 1e-6 and dt < 5.0,
           f"max abs err {err:.3e} (tol 1e-6), runtime {dt:.2f}s (< 5s)")


def test_criterion_2_round_trip_parseval():
    t0 = time.perf_counter()
    worst_rt, worst_en = 0.0, 0.0
    for _, params in PRESETS:
        for chirp, freq in ((0.0, 0.0), (0.25, 1.0)):
            f = gaussian(chirp=chirp, freq=freq)
            zgrid = checks.spectrum_grid(params, chirp, freq)
            F = core.forward(params, f, zgrid)
            g = core.inverse(params, F, f.grid)
            e = core.energy(f)
            rel = np.sqrt(core.energy(SampledFunction(f.grid, g.values - f.values)) / e)
            worst_rt = max(worst_rt, float(rel))
            worst_en = max(worst_en, abs(core.energy(F) - e) / e)
    dt = time.perf_counter() - t0
    report(2, "round trip + Parseval",
           worst_rt <= 1e-6 and worst_en <= 1e-5 and dt < 10.0,
           f"round-trip rel L2 {worst_rt:.3e} (tol 1e-6), energy defect {worst_en:.3e} "
           f"(tol 1e-5), runtime {dt:.2f}s (< 10s)")


def test_criterion_3_dilation_identities():
    worst = 0.0
    for _, params in PRESETS:
        for a in (0.5, 2.0, 3.0):
            d1, d2 = checks._scaled_identity_defects(params, a)
            worst = max(worst, d1, d2)
    report(3, "dilation identities", worst <= 1e-5,
           f"max pointwise defect {worst:.3e} over a in {{1/2, 2, 3}} (tol 1e-5)")


def test_criterion_4_sampling_theorem():
    x = np.linspace(-4.0, 4.0, 321)
    worst_exact = 0.0
    worst_ratio_dev = 0.0
    for _, params in PRESETS:
        spec = sampling.BandlimitSpec.nyquist(params, params.B * np.pi)
        recon = sampling.reconstruct(params, sampling.SampleSet({0: 1.0 + 0.0j}, 1.0), spec, x)
        exact = mra.phi_family(params, mra.SINC_SCALING, 0, 0, x)
        worst_exact = max(worst_exact, float(np.max(np.abs(recon - exact))))

        rng = np.random.default_rng(7)
        coeffs = rng.standard_normal(11) + 1j * rng.standard_normal(11)
        f = checks._span_element(params, coeffs)
        over = sampling.BandlimitSpec.nyquist(params, 2.0 * params.B * np.pi)
        xs = np.linspace(-4.0, 4.0, 81)
        t64 = sampling.truncation_tail(params, f, over, xs, 64)
        t128 = sampling.truncation_tail(params, f, over, xs, 128)
        worst_ratio_dev = max(worst_ratio_dev, abs(t128 / t64 - 0.5))
    report(4, "sampling theorem",
           worst_exact <= 1e-12 and worst_ratio_dev <= 0.05,
           f"exact-reconstruction err {worst_exact:.3e} (tol 1e-12), window-doubling "
           f"ratio dev {worst_ratio_dev:.3e} from 0.5 (tol 0.05)")


def test_criterion_5_shift_orthonormality():
    zetas = (np.arange(64) + 0.5) * 2.0 * np.pi / 64.0
    worst_per, worst_gram = 0.0, 0.0
    for phi in (mra.SINC_SCALING, mra.BOX_SCALING):
        worst_per = max(worst_per, max(abs(mra.periodization_defect(phi, z)) for z in zetas))
        G = mra.gram_matrix(FIGURE1, phi, range(-2, 3))
        worst_gram = max(worst_gram, float(np.max(np.abs(G - np.eye(5)))))
    report(5, "shift orthonormality", worst_per <= 2e-4 and worst_gram <= 2e-3,
           f"periodization defect {worst_per:.3e} (tol 2e-4), Gram defect {worst_gram:.3e} "
           f"(tol 2e-3)")


def test_criterion_6_filter_pipeline():
    h = mra.lowpass_from_phi(FIGURE1, mra.SINC_SCALING, -8, 8)
    hgap = max(abs(h.coeff(n) - wavelets.shannon_lowpass(FIGURE1, n)) for n in range(-8, 9))
    zetas = (np.arange(64) + 0.5) * 2.0 * np.pi / 64.0
    hh, dh = wavelets.haar_filters(FIGURE1)
    qmf_h = max(abs(mra.qmf_defect(FIGURE1, hh, z)) for z in zetas)
    cross_h = max(abs(mra.cross_defect(FIGURE1, hh, dh, z)) for z in zetas)
    hs, _ = wavelets.shannon_filters(FIGURE1, 4096)
    away = [z for z in zetas if abs(((z / 2) % np.pi) - np.pi / 2) >= 0.1]
    qmf_s = max(abs(mra.qmf_defect(FIGURE1, hs, z)) for z in away)
    ok = hgap <= 3e-3 and qmf_h <= 1e-12 and cross_h <= 1e-12 and qmf_s <= 1e-2
    report(6, "filter pipeline", ok,
           f"lowpass quadrature gap {hgap:.3e} (tol 3e-3), Haar QMF {qmf_h:.3e} / cross "
           f"{cross_h:.3e} (tol 1e-12), truncated sinc-family QMF {qmf_s:.3e} (tol 1e-2)")


def test_criterion_7_wavelet_synthesis():
    p0 = SaftParams(FIGURE1.A, FIGURE1.B, FIGURE1.C, FIGURE1.D, 0.0, FIGURE1.q)
    x = np.linspace(-0.5, 1.5, 801)
    x = x[np.abs(x - 0.5) > 1e-9]
    _, d0 = wavelets.haar_filters(p0)
    synth = mra.synthesize_psi(p0, mra.BOX_SCALING, d0, x)
    closed = wavelets.haar_psi(p0, x)
    corr = np.sum(synth * np.conj(closed))
    phase = corr / abs(corr)
    phase_dev = float(np.max(np.abs(synth - phase * closed)))

    _, dh = wavelets.haar_filters(FIGURE1)
    haar_inner = abs(checks.box_phi_psi_inner(FIGURE1, dh))
    _, ds = wavelets.shannon_filters(FIGURE1, 512)
    grid = UniformGrid.from_range(-300.0, 300.0, 1 / 8)
    xs = grid.points
    phi0 = mra.phi_family(FIGURE1, mra.SINC_SCALING, 0, 0, xs)
    psi = mra.synthesize_psi(FIGURE1, mra.SINC_SCALING, ds, xs)
    shannon_inner = abs(core.trapezoid(phi0 * np.conj(psi), grid.step))
    ok = phase_dev <= 1e-10 and haar_inner <= 1e-10 and shannon_inner <= 5e-3
    report(7, "wavelet synthesis", ok,
           f"global-phase deviation {phase_dev:.3e} (tol 1e-10), <phi,psi> Haar "
           f"{haar_inner:.3e} (tol 1e-10) / sinc-family {shannon_inner:.3e} (tol 5e-3)")


def test_criterion_8_approximation_benchmark():
    t0 = time.perf_counter()
    target = lambda s: s * s
    details = []
    ok = True
    dominated = []
    for name, params in PRESETS:
        rows = approx.error_table(params, target, 6)
        for key in ("special_affine_linf", "classical_haar_linf"):
            col = [r[key] for r in rows]
            if not all(b < a for a, b in zip(col, col[1:])):
                ok = False
            ratios = [b / a for a, b in zip(col, col[1:])]
            if not all(0.35 <= r <= 0.65 for r in ratios):
                ok = False
        if abs(rows[0]["classical_haar_linf"] - 15.0 / 64.0) > 1e-12:
            ok = False
        dominated.append(all(r["special_affine_linf"] <= r["classical_haar_linf"] for r in rows))
        details.append(f"{name} J=1 special {rows[0]['special_affine_linf']:.6f} vs "
                       f"classical {rows[0]['classical_haar_linf']:.6f}")
    dt = time.perf_counter() - t0
    ok = ok and any(dominated) and dt < 60.0
    report(8, "approximation benchmark", ok,
           "; ".join(details) + f"; ordering holds for {sum(dominated)}/2 presets, "
           f"runtime {dt:.2f}s (< 60s)")


def test_criterion_9_determinism(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    code1 = cli.main(["check", "--preset", "figure1", "-o", str(a)])
    code2 = cli.main(["check", "--preset", "figure1", "-o", str(b)])
    identical = a.read_bytes() == b.read_bytes()
    all_pass = json.loads(a.read_text())["all_pass"]
    ok = code1 == 0 and code2 == 0 and identical and all_pass
    report(9, "determinism", ok,
           f"exit codes ({code1}, {code2}), byte-identical={identical}, all suites pass="
           f"{all_pass}")
