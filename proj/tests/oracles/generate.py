"""Reference values frozen into the unit tests, computed with mpmath at 50 digits.

Run: python3 tests/oracles/generate.py
All arguments are exact mpf/mpc values; Python floats never enter a sum.
"""
from fractions import Fraction as Fr

import mpmath as mp

mp.mp.dps = 50
F = mp.mpf
HALF = F(1) / 2


def L(z, a, nu):
    """Normalized function: sum (z^2/4)^n / (Gamma(n+3/2) Gamma(a n + nu + 3/2))."""
    # direct summation at raised precision; nsum extrapolation is unreliable
    # when the terms change sign irregularly (a < 0)
    with mp.workdps(120):
        q = (mp.mpmathify(z) / 2) ** 2
        s = mp.fsum(q**n * mp.rgamma(n + F(3) / 2) * mp.rgamma(a * n + nu + F(3) / 2) for n in range(800))
    return +s


def E12(zeta, a, nu, c):
    kappa = 1 + a
    theta = -nu - F(3) / 2
    A0 = (kappa / a) ** (nu + 1) / mp.sqrt(2 * mp.pi)
    Z = kappa * (a ** (-a) * zeta) ** (1 / kappa)
    return A0 * Z**theta * mp.exp(Z) * mp.fsum(cj * Z ** (-j) for j, cj in enumerate(c))


def H12(zeta, a, nu, J):
    return mp.fsum(mp.gamma(k + HALF) * zeta ** (-k - 1) * mp.rgamma(nu + F(3) / 2 - a * (1 + k))
                   for k in range(J + 1)) / mp.pi


def rgamma_envelope(y):
    return abs(mp.rgamma(y)) if y > 0 else mp.gamma(1 - y) / mp.pi


def optimal_index(envs):
    """Index of the smallest envelope once the envelopes have risen twice in a row."""
    best, rises, prev = None, 0, None
    for i, e in enumerate(envs):
        if e == 0:
            continue
        rises = rises + 1 if prev is not None and e > prev else 0
        if best is None or e < envs[best]:
            best = i
        if rises == 2:
            return best
        prev = e
    return None


def Hhat21(x, s, nu, J):
    first = mp.fsum((-x) ** (-k - 1) * mp.gamma(k + HALF) * mp.rgamma(nu + F(3) / 2 + s * (k + 1))
                    for k in range(J + 1)) / mp.pi
    second = mp.fsum(x ** (-(k - nu - HALF) / s) / mp.factorial(k) * mp.rgamma(F(3) / 2 - (k - nu - HALF) / s)
                     for k in range(J + 1)) / s
    return first, second


TABLE1 = [Fr(1), Fr(-5, 12), Fr(-35, 288), Fr(-665, 10368), Fr(9625, 497664), Fr(1856855, 5971968),
          Fr(606631025, 429981696), Fr(27773871125, 5159780352), Fr(8996211899675, 495338913792),
          Fr(2459153764892825, 53496602689536), Fr(-22173972436540925, 1283918464548864)]


def c1(a, v):
    return -(11 + 24 * v + 12 * v**2 - a * (25 + 24 * v) + 11 * a**2) / (24 * a)


def main():
    a, nu = HALF, F(1) / 4
    ct = [F(f.numerator) / f.denominator for f in TABLE1]
    out = {
        "Gamma(-5/2)": mp.gamma(F(-5) / 2),
        "Gamma(7/2+3i)": mp.gamma(mp.mpc(F(7) / 2, 3)),
        "Gamma(-37/2-51i)": mp.gamma(mp.mpc(F(-37) / 2, -51)),
        "Gamma(3/2)Gamma(7/4)": mp.gamma(F(3) / 2) * mp.gamma(F(7) / 4),
        "rgamma envelope(-5/2)": rgamma_envelope(F(-5) / 2),
        "h(1/2)": mp.sqrt(2),
        "A0(1/2,1/4)": F(3) ** (F(5) / 4) / mp.sqrt(2 * mp.pi),
        "A0(-1/2,1/3)": mp.sqrt(2 * mp.pi),
        "L(0;1/2,1/4)": L(0, a, nu),
        "L(10;1/2,1/4)": L(10, a, nu),
        "L(15;1/2,1/4)": L(15, a, nu),
        "L(20i;1/2,1/4)": L(20j, a, nu).real,
        "L(7;-1/5,1/3)": L(7, -F(1) / 5, F(1) / 3),
        "L(8;-1/5,1/3)": L(8, -F(1) / 5, F(1) / 3),
        "L(8i;-1/4,4/3)": L(8j, -F(1) / 4, F(4) / 3).real,
        "L(3+4i;2,0)": L(mp.mpc(3, 4), 2, 0),
        "L(5/2-i;3/2,-1/3)": L(mp.mpc(F(5) / 2, -1), F(3) / 2, -F(1) / 3),
        "unnormalized L(5;1,1/2)": mp.sqrt(2 / (mp.pi * 5)) * (mp.cosh(5) - 1),
        "L(0;0,1/2)": mp.rgamma(F(3) / 2) * mp.rgamma(2),
        "c1(-1/2,0)": c1(Fr(-1, 2), Fr(0)),
        "E12(25) j<=10": E12(F(25), a, nu, ct),
        "E12((6+5i)^2/4) j<=10": E12(mp.mpc(6, 5) ** 2 / 4, a, nu, ct),
        "H12(25) k<=12": H12(F(25), a, nu, 12),
        "H12(25 e^{7i/10}) k<=9": H12(F(25) * mp.expj(F(7) / 10), a, nu, 9),
        "Hhat21(16;1/5,1/3) k<=6": Hhat21(F(16), F(1) / 5, F(1) / 3, 6),
        "Hhat21 leading, |z|=6, sigma=1/3, nu=4/3":
            mp.gamma(HALF) / 9 / mp.gamma(F(4) / 3 + F(3) / 2 + F(1) / 3) / mp.pi,
    }
    for x in (F(25), F(225) / 4, F(100)):
        envs = [mp.gamma(k + HALF) * x ** (-k - 1) * rgamma_envelope(nu + F(3) / 2 - a * (1 + k)) for k in range(200)]
        b = optimal_index(envs)
        out[f"H12 optimal at x={x}: terms={b}"] = H12(x, a, nu, b - 1)
    for k, v in out.items():
        print(f"{k:45s} {v}")


if __name__ == "__main__":
    main()
