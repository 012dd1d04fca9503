"""Independent high-precision reference values for the test suite.

Everything here uses mpmath's own zeta/gamma/quadrature machinery, so the
numbers are independent of the C++ evaluation paths they check. Run once;
the printed values are frozen into tests/oracle_values.hpp.
"""
import mpmath as mp

mp.mp.dps = 40
pi = mp.pi


def series(term):
    # 30 terms: every series here decays at least like exp(-pi n^2), so the
    # tail is far below 40 digits.
    return mp.fsum(term(n) for n in range(1, 31))


def theta(x):
    return series(lambda n: mp.exp(-pi * n * n * x))


def theta_prime(x):
    return -pi * series(lambda n: n * n * mp.exp(-pi * n * n * x))


def xi_zeta(t, delta):
    s = mp.mpf(0.5) + delta + 1j * t
    return pi ** (-s / 2) * mp.gamma(s / 2) * mp.zeta(s)


def R(x):
    x = abs(mp.mpf(x))
    return mp.exp(-x) - 2 * series(lambda n: mp.exp(x - pi * n * n * mp.exp(4 * x)))


def u_R(x):
    x = abs(mp.mpf(x))
    num = series(lambda n: n * n * (3 - 2 * pi * n * n * mp.exp(4 * x))
                  * mp.exp(6 * x - pi * n * n * mp.exp(4 * x)))
    den = 1 - 2 * series(lambda n: mp.exp(2 * x - pi * n * n * mp.exp(4 * x)))
    return 16 * pi * num / den


def well_rho_quad(n, a, k, lam):
    K = k - 1j * lam
    a = mp.mpf(a)
    if n % 2:
        psi = lambda x: mp.sqrt(2 / a) * mp.cos(n * pi * x / a)
    else:
        psi = lambda x: mp.sqrt(2 / a) * mp.sin(n * pi * x / a)
    amp = mp.quad(lambda x: psi(x) * mp.exp(-1j * K * x), [-a / 2, 0, a / 2])
    return abs(amp) ** 2 / (2 * pi)


def p(name, v):
    if isinstance(v, mp.mpc):
        print(f"{name}: re={mp.nstr(v.real, 20)} im={mp.nstr(v.imag, 20)}")
    else:
        print(f"{name}: {mp.nstr(v, 20)}")


p("theta(1)", theta(1))
p("theta(2)", theta(2))
p("theta(e)", theta(mp.e))
p("theta'(1)", theta_prime(1))
p("4theta'(1)+theta(1)", 4 * theta_prime(1) + theta(1))
p("omega(1)", mp.exp(mp.mpf(1) / 4) * theta(mp.e))
p("phi(0)", -(1 - 2 * theta(1)) / 2)
p("zeta(1/2)", mp.zeta(0.5))
p("zeta(3)", mp.zeta(3))
for (t, d) in [(0, 0), (3, 0.2), (10, 0.3), (20, 0), (5, 0.1), (25, -0.4), (2, 1.5)]:
    p(f"Xi(t={t},delta={d})", xi_zeta(mp.mpf(t), mp.mpf(d)))
for k in range(1, 6):
    p(f"zetazero({k})", mp.zetazero(k).imag)
p("R(0)", R(0))
p("R(0.5)", R(0.5))
p("R(1)", R(1))
p("u_R(0)", u_R(0))
p("u_R(0.3)", u_R(0.3))
mp.mp.dps = 25
p("norm", 2 * mp.quad(lambda x: R(x) ** 2, [0, 0.25, 0.5, 1, 2, 5, 10, 20, 40]) + mp.exp(-80))
mp.mp.dps = 40
p("S(0)*t0^-1", -xi_zeta(0, 0).real / (2 * R(0)))
p("rho_R(0,0)", abs(xi_zeta(0, 0)) ** 2 / (8 * pi))
p("well n=1 a=1 K=(0,1)", well_rho_quad(1, 1, 0, 1))
p("well n=2 a=2 K=(3.5,0.3)", well_rho_quad(2, 2, 3.5, 0.3))
p("well n=3 a=1 K=(-7,-0.9)", well_rho_quad(3, 1, -7, -0.9))
for z in [1, 0.5, 5, 3 + 4j, -2.5 + 0.5j, 0.25 + 100j, -9.7 - 30j, 10 + 1j]:
    p(f"loggamma({z})", mp.loggamma(mp.mpmathify(z)))
