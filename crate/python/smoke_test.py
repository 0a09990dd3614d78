"""Smoke test for the pyncomp extension module."""

import cmath
import math

import pyncomp


def close(x, y, tol=1e-9):
    return abs(x - y) <= tol


def main():
    pentagon = [cmath.exp(2j * math.pi * k / 5) for k in range(5)]
    inner = pyncomp.lambda_k_normal(pentagon, 2)
    radius = max(abs(v) for v in inner)
    assert len(inner) == 5 and close(radius, (3 - math.sqrt(5)) / 2), radius

    diag = [[1, 0, 0, 0], [0, 2, 0, 0], [0, 0, 3, 0], [0, 0, 0, 4]]
    assert pyncomp.lambda_k_hermitian([1, 2, 3, 4], 2) == (2.0, 3.0)
    seg = pyncomp.lambda_k_lisze(diag, 2)
    assert close(min(v.real for v in seg), 2, 1e-6) and close(max(v.real for v in seg), 3, 1e-6)

    square = [1, 1j, -1, -1j]
    a = 0.25 + 0.25j
    assert pyncomp.b_kind(square, a) == "curve"
    samples = pyncomp.sample_b(square, a, 200, seed=3)
    assert samples == pyncomp.sample_b(square, a, 200, seed=3)
    assert all(pyncomp.b_contains(square, a, b) for b in samples)
    assert all(pyncomp.necessary_condition([a, b], square) for b in samples)

    (u, w), residual = pyncomp.rank2_witness(pentagon, 0.1, 0.15j)
    assert residual <= 1e-9
    mu = sum(z * abs(x) ** 2 for z, x in zip(pentagon, u))
    assert close(mu, 0.1)

    assert pyncomp.interlacing_check([1, 2, 3, 4], [1.5, 3.5])
    assert not pyncomp.interlacing_check([1, 2, 3, 4], [4.5, 4.8])

    foci, minor = pyncomp.numerical_range_ellipse([[0, 1], [0, 0]])
    assert foci == [0j, 0j] and close(minor, 1.0)

    try:
        pyncomp.lambda_k_normal([], 1)
    except pyncomp.NcompError:
        pass
    else:
        raise AssertionError("empty spectrum accepted")

    print("pyncomp smoke test passed")


if __name__ == "__main__":
    main()
