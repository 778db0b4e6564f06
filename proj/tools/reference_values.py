"""Reference values for the test suites, computed with mpmath at 40 digits.

Run: python3 tools/reference_values.py
"""
import mpmath as mp

mp.mp.dps = 40


def zeros(nu, kind, count, upto_step=mp.pi / 64):
    f = (lambda x: mp.besselj(nu, x)) if kind == "J" else (lambda x: mp.bessely(nu, x))
    out, a, fa = [], mp.mpf("1e-3"), None
    fa = f(a)
    while len(out) < count:
        b = a + upto_step
        fb = f(b)
        if fa * fb < 0:
            out.append(mp.findroot(f, (a, b), solver="anderson"))
        a, fa = b, fb
    return out


def first_after(nu, kind, x):
    f = (lambda t: mp.besselj(nu, t)) if kind == "J" else (lambda t: mp.bessely(nu, t))
    a = x + mp.mpf("1e-9")
    fa = f(a)
    while True:
        b = a + mp.pi / 64
        fb = f(b)
        if fa * fb < 0:
            return mp.findroot(f, (a, b), solver="anderson")
        a, fa = b, fb


def show(name, value):
    print(f"{name:40s} {mp.nstr(value, 20)}")


j01 = zeros(0, "J", 1)[0]
j11 = zeros(1, "J", 1)[0]
show("j_{0,1}", j01)
show("j_{1,1}", j11)
show("square lower k=1 ((j11-j01)/0.5)^2", ((j11 - j01) / mp.mpf("0.5")) ** 2)
show("square upper (j01/0.5)^2", (j01 / mp.mpf("0.5")) ** 2)
show("disk rfk j01^2", j01**2)
show("2 pi^2", 2 * mp.pi**2)
R_L = 1 / (1 + 1 / mp.sqrt(2))
show("L-shape R", R_L)
show("inf-Laplacian L-shape (pi/2R)^2", (mp.pi / (2 * R_L)) ** 2)
show("Y_{0.3}(1)", mp.bessely(mp.mpf("0.3"), 1))
show("J_{-0.49}(0.7)", mp.besselj(mp.mpf("-0.49"), mp.mpf("0.7")))
show("first zero of Y_{-0.49}", zeros(mp.mpf("-0.49"), "Y", 1)[0])

# p-Laplacian ball eigenvalue ((p-1)/p) (mu_1^{(-alpha)} / R)^2, alpha = (1 - (n-1)/(p-1))/2
for p, n in [(2, 2), (2, 3), (4, 2), (10, 3)]:
    alpha = (1 - mp.mpf(n - 1) / (p - 1)) / 2
    mu = zeros(-alpha, "J", 1)[0]
    show(f"ball lambda p={p} n={n}", mp.mpf(p - 1) / p * mu**2)

# p = 4, n = 2 vanishing-center lower bound ((p-1)/p)(mu_1^{(alpha-1)}/R)^2
alpha = (1 - mp.mpf(1) / 3) / 2
show("p=4 n=2 theorem1 lower R=1", mp.mpf(3) / 4 * zeros(alpha - 1, "J", 1)[0] ** 2)

# p-scan n=2 R=1
for p in [100, 10**4, 10**6]:
    alpha = (1 - mp.mpf(1) / (p - 1)) / 2
    lo = mp.mpf(p - 1) / p * zeros(alpha - 1, "J", 1)[0] ** 2
    up = mp.mpf(p - 1) / p * zeros(-alpha, "J", 1)[0] ** 2
    show(f"p-scan p={p} lower", lo)
    show(f"p-scan p={p} upper", up)
show("(pi/2)^2", (mp.pi / 2) ** 2)

# Laplacian n=3, convex, R=1: max over k<=64 of (y_k - x_k)^2, alpha = -1/2
best = 0
for kind in ["J", "Y"]:
    xs = zeros(mp.mpf("-0.5"), kind, 64)
    for x in xs:
        y = first_after(mp.mpf("-1.5"), kind, x)
        best = max(best, (y - x) ** 2)
show("n=3 scan k<=64 best (R=1)", best)
show("n=3 ratio to (pi/2)^2", best / (mp.pi / 2) ** 2)

# n = 2 Laplacian, J family, alpha = 0, gaps for k = 1..64
xs = zeros(0, "J", 64)
gaps = [first_after(-1, "J", x) - x for x in xs]
show("n=2 J gap k=1", gaps[0])
show("n=2 J gap k=64", gaps[-1])
print("n=2 J gaps increasing:", all(b > a for a, b in zip(gaps, gaps[1:])))
show("unit square best (R=1/2)", (max(gaps) / mp.mpf("0.5")) ** 2)

# RFK for the cylinder radius 1 height 20 (n = 3)
vol = mp.pi * 20
show("cylinder rfk", (mp.mpf(4) / 3 * mp.pi / vol) ** (mp.mpf(2) / 3) * mp.pi**2)
