#!/usr/bin/env python3
"""Smoke test for the framecast Python extension.

Builds nothing itself: it expects `cargo build -p framecast-py --release`
(or a debug build) to have produced the cdylib, copies it next to this file
under the importable name, and drives the main pipeline end to end.
"""

import math
import pathlib
import shutil
import sys

HERE = pathlib.Path(__file__).resolve().parent
REPO = HERE.parent


def ensure_module() -> None:
    target = HERE / "framecast.so"
    candidates = [
        REPO / "target" / "release" / "libframecast.so",
        REPO / "target" / "debug" / "libframecast.so",
    ]
    built = [p for p in candidates if p.exists()]
    if not built:
        sys.exit(
            "no built extension found; run `cargo build -p framecast-py --release` first"
        )
    newest = max(built, key=lambda p: p.stat().st_mtime)
    if not target.exists() or target.stat().st_mtime < newest.stat().st_mtime:
        shutil.copy2(newest, target)
    sys.path.insert(0, str(HERE))


ensure_module()
import framecast  # noqa: E402


def check(name: str, ok: bool, detail: str = "") -> None:
    print(f"  {name}: {'ok' if ok else 'FAIL'} {detail}")
    if not ok:
        sys.exit(1)


def rel_error(a, b):
    num = math.sqrt(sum(abs(x - y) ** 2 for x, y in zip(a, b)))
    den = math.sqrt(sum(abs(x) ** 2 for x in a))
    return num / den if den else num


def main() -> None:
    print(f"framecast {framecast.__version__}")

    # Spiral selection under the admissibility inequalities.
    pts = framecast.select_spiral_points(c=1.0, ball_radius=0.25, delta=0.25, count=3)
    check("spiral points", len(pts) == 3, f"thetas={pts.thetas}")
    gaps_ok = True
    prev = 0.0
    for t in pts.thetas:
        if framecast.arc_length(1.0, prev, t) >= 0.5:
            gaps_ok = False
        prev = t
    check("arc gaps < 2*delta", gaps_ok)

    # Disk-grid pipeline: sample the reference parameters, convert, rebuild.
    ref = framecast.SamplePointSet(
        [list(framecast.spiral_point(1.0, t)) for t in (1 / 16, 1 / 8, 1 / 4)]
    )
    frame = framecast.disk_grid_frame(ref, radius=0.25, subdivisions=50)
    check("disk frame shape", frame.dim == 2500 and len(frame) == 3)
    res = frame.to_parseval_in_span()
    check("span dimension", res.span_dim == 3)

    signal = frame.vector(0)
    coeffs = res.frame.measure(signal)
    recon = framecast.reconstruct(res.frame, coeffs)
    err = rel_error(signal, recon)
    check("disk reconstruction", err <= 1e-9, f"relative error {err:.3e}")

    combo = [a - 2 * b + c for a, b, c in zip(frame.vector(0), frame.vector(1), frame.vector(2))]
    err = rel_error(combo, framecast.reconstruct(res.frame, res.frame.measure(combo)))
    check("combination reconstruction", err <= 1e-9, f"relative error {err:.3e}")

    # Exponential frame: conversion reaches unit bounds, measurements
    # transfer without being re-acquired.
    lambdas = [10 / 3, 17 / 4, 26 / 5]
    expo, gram = framecast.interval_exponential_frame(lambdas)
    check(
        "sinc gram entry",
        abs(gram[1][0].real - framecast.sinc(lambdas[1] - lambdas[0])) < 1e-14,
    )
    pres = expo.to_parseval()
    lo, hi = pres.frame.frame_bounds()
    check("parseval bounds", abs(lo - 1) <= 1e-9 and abs(hi - 1) <= 1e-9, f"({lo}, {hi})")

    target = expo.vector(0)
    transferred = pres.transfer_coefficients(expo.measure(target))
    err = rel_error(target, framecast.reconstruct(pres.frame, transferred))
    check("transferred coefficients", err <= 1e-9, f"relative error {err:.3e}")

    # Canonical tight frame agrees with the polar-factor conversion.
    canonical = expo.canonical_tight_frame()
    dev = math.sqrt(pres.frame.symmetric_distance(canonical))
    check("canonical equivalence", dev <= 1e-8, f"deviation {dev:.3e}")

    # Closed-form bounds.
    bound = framecast.truncation_bound(k=2, deriv_l1=1.0, n_tilde=99)
    check(
        "truncation bound value",
        abs(bound - 2 / (100 * (2 * math.pi) ** 2)) < 1e-18,
        f"{bound:.6e}",
    )
    check(
        "harmonic form agreement",
        abs(framecast.truncation_bound_harmonic(1.0, 99) - bound) <= 1e-14 * bound,
    )
    check(
        "decay bound substitution",
        abs(framecast.fourier_decay_bound(1, 2 * math.pi, 1.0) - 1.0) < 1e-14,
    )

    # Partitioned conversion: orthogonal parts coincide with the whole.
    ortho = framecast.Frame(
        [
            [2.0 + 0j, 0j],
            [0j, 0.5 + 0j],
        ]
    )
    union = ortho.subframe_parseval_union([[0], [1]])
    check(
        "orthogonal union coincides",
        union.coincides_with_full and union.frame_operator_deviation <= 1e-10,
    )

    print("smoke test passed")


if __name__ == "__main__":
    main()
