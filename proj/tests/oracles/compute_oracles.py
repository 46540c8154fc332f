#!/usr/bin/env python3
"""Independent high-precision oracle for the frozen values used in the C++ tests.

Everything here is evaluated with mpmath at 40 significant digits, using
bisection / direct evaluation / golden-section search written from the
closed-form definitions. Nothing here calls into the C++ library.

Run:  python3 tests/oracles/compute_oracles.py
"""
import mpmath as mp

mp.mp.dps = 40
g = mp.mpf("9.81")


def bisect(f, lo, hi, iters=200):
    flo = f(lo)
    for _ in range(iters):
        mid = (lo + hi) / 2
        fm = f(mid)
        if (fm > 0) == (flo > 0):
            lo, flo = mid, fm
        else:
            hi = mid
    return (lo + hi) / 2


def out(name, v):
    print(f"{name:40s} {mp.nstr(v, 17)}")


# ---------------------------------------------------------------- core
def hc(q):
    return (q / mp.sqrt(g)) ** (mp.mpf(2) / 3)


out("froude(2,2.21)", mp.mpf("2.21") / mp.sqrt(2 * g))
out("froude(0.001,0.3132)", mp.mpf("0.3132") / mp.sqrt(g * mp.mpf("0.001")))
out("critical_height(2)", hc(2))
out("critical_height(4.42)", hc(mp.mpf("4.42")))
out("critical_height(1.53)", hc(mp.mpf("1.53")))
out("manning(0.033,0.7416,2)", mp.mpf("0.033") ** 2 * 4 / mp.mpf("0.7416") ** (mp.mpf(10) / 3))
out("darcy(0.093,1,2)", mp.mpf("0.093") / (8 * g) * 4)

# ---------------------------------------------------------------- bump
def zb(x):
    x = mp.mpf(x)
    return mp.mpf("0.2") - mp.mpf("0.05") * (x - 10) ** 2 if 8 < x < 12 else mp.mpf(0)


def cubic(h, z, q, C):
    return h ** 3 + (z - C) * h ** 2 + q ** 2 / (2 * g)


q = mp.mpf("4.42"); hL = mp.mpf(2)
C_sub = q ** 2 / (2 * g * hL ** 2) + hL
h10 = bisect(lambda h: cubic(h, zb(10), q, C_sub), hc(q), mp.mpf(6))
out("bump_sub h(10)", h10)
out("bump_sub h(9)", bisect(lambda h: cubic(h, zb(9), q, C_sub), hc(q), mp.mpf(6)))
out("bump_sub cubic coeff (z-C) at crest", zb(10) - C_sub)
out("bump_sub q^2/2g", q ** 2 / (2 * g))

q = mp.mpf("1.53"); h_c = hc(q)
C_tr = q ** 2 / (2 * g * h_c ** 2) + h_c + mp.mpf("0.2")
out("noshock h(0) subcritical", bisect(lambda h: cubic(h, 0, q, C_tr), h_c, mp.mpf(6)))
out("noshock h(25) supercritical", bisect(lambda h: cubic(h, 0, q, C_tr), mp.mpf("1e-6"), h_c))

q = mp.mpf("0.18"); hL = mp.mpf("0.33"); h_c = hc(q)
C_c = q ** 2 / (2 * g * h_c ** 2) + h_c + mp.mpf("0.2")
C_L = q ** 2 / (2 * g * hL ** 2) + hL


def h_super(x):
    return bisect(lambda h: cubic(h, zb(x), q, C_c), mp.mpf("1e-8"), h_c)


def h_down(x):
    return bisect(lambda h: cubic(h, zb(x), q, C_L), h_c, mp.mpf(3))


def rh(x):
    h1, h2 = h_super(x), h_down(x)
    return q ** 2 * (1 / h1 - 1 / h2) + g / 2 * (h1 ** 2 - h2 ** 2)


# downstream branch exists once z <= C_L - 1.5 h_c
zlim = C_L - mp.mpf(3) / 2 * h_c
xlim = 10 + mp.sqrt((mp.mpf("0.2") - zlim) / mp.mpf("0.05"))
out("shock: downstream branch exists from x", xlim)
xs = bisect(rh, xlim + mp.mpf("1e-12"), mp.mpf(12), iters=140)
out("shock x_shock", xs)
out("shock h1", h_super(xs))
out("shock h2", h_down(xs))

# ---------------------------------------------------------------- dambreak
hl = mp.mpf("0.005"); hr = mp.mpf("0.001")


def stoker_poly(c):
    # (sqrt(g h_l) - c)^2: the dimensionally consistent form; it reproduces the
    # exact Riemann solution (checked below against the momentum jump).
    return -8 * g * hr * c ** 2 * (mp.sqrt(g * hl) - c) ** 2 + (c ** 2 - g * hr) ** 2 * (c ** 2 + g * hr)


cm = bisect(stoker_poly, mp.sqrt(g * hr), mp.sqrt(g * hl))
out("stoker c_m", cm)
out("stoker h_m", cm ** 2 / g)
out("stoker u_m", 2 * (mp.sqrt(g * hl) - cm))
out("stoker x_C(6)", 5 + 6 * 2 * cm ** 2 * (mp.sqrt(g * hl) - cm) / (cm ** 2 - g * hr))
# independent route: rarefaction + shock with mass and momentum jump conditions
hm_rp = mp.findroot(lambda h: 2 * (mp.sqrt(g * hl) - mp.sqrt(g * h))
                    - (h - hr) * mp.sqrt(g / 2 * (h + hr) / (h * hr)), mp.mpf("0.002"))
out("stoker h_m (Riemann problem)", hm_rp)
out("ritter x_B(6)", 5 + 12 * mp.sqrt(g * hl))
out("ritter u(x0)", mp.mpf(2) / 3 * mp.sqrt(g * hl))

hl = mp.mpf(6); x0 = mp.mpf(1000); C = mp.mpf(40); t = mp.mpf(40)
c0 = mp.sqrt(g * hl)
out("dressler x_A(40)", x0 - t * c0)
out("dressler x_B(40)", x0 + 2 * t * c0)


def u_co(x):
    d = 2 - (x - x0) / (t * c0)
    a2 = 12 / d - mp.mpf(8) / 3 + 8 * mp.sqrt(3) / 189 * d ** mp.mpf(1.5) - mp.mpf(108) / (7 * d ** 2)
    return 2 * c0 / 3 + 2 * (x - x0) / (3 * t) + g ** 2 / C ** 2 * a2 * t


# golden section on a bracket found by dense scan
xa, xb = x0 - t * c0, x0 + 2 * t * c0
n = 20000
best = max(range(n), key=lambda k: u_co(xa + (xb - xa) * k / n))
lo = xa + (xb - xa) * (best - 1) / n
hi = xa + (xb - xa) * (best + 1) / n
phi = (mp.sqrt(5) - 1) / 2
for _ in range(200):
    a = hi - phi * (hi - lo); b = lo + phi * (hi - lo)
    if u_co(a) > u_co(b):
        hi = b
    else:
        lo = a
out("dressler x_T(40)", (lo + hi) / 2)
out("dressler u_tip(40)", u_co((lo + hi) / 2))

# ---------------------------------------------------------------- macdonald
K = (4 / g) ** (mp.mpf(1) / 3)
out("K=(4/g)^(1/3)", K)
out("mcd sub h(500)", K * mp.mpf(3) / 2)
out("mcd sub h(1000)", K * (1 + mp.exp(-4) / 2))
out("mcd super h(500)", K * mp.mpf("0.8"))
out("mcd periodic h(250)", mp.mpf(9) / 8 + mp.mpf(1) / 4)
hd = K * mp.mpf(3) / 2
den = 1 + mp.mpf("0.001") * hd / (3 * mp.mpf("0.01"))
out("diffusion alpha0(h=1.5K)", mp.mpf("0.001") / den)
out("diffusion alpha1(h=1.5K)", mp.mpf("0.01") / den ** 2)

# ---------------------------------------------------------------- pseudo2d
def B1(x):
    return 10 - 5 * mp.exp(-10 * (x / 200 - mp.mpf(1) / 2) ** 2)


def B2(x):
    return (10 - 5 * mp.exp(-50 * (x / 400 - mp.mpf(1) / 3) ** 2)
            - 5 * mp.exp(-50 * (x / 400 - mp.mpf(2) / 3) ** 2))


out("B1(100)", B1(100))
out("B1(0)", B1(0))
out("B2(400/3)", B2(mp.mpf(400) / 3))
out("B2(0)", B2(0))


def manning_term(h, B, Z):
    q = 20; n = mp.mpf("0.03")
    return q ** 2 * n ** 2 * (B + 2 * h * mp.sqrt(1 + Z ** 2)) ** (mp.mpf(4) / 3) / (
        h ** (mp.mpf(10) / 3) * (B + Z * h) ** (mp.mpf(10) / 3))


out("S0 ShortSub(100)", manning_term(mp.mpf("1.2"), 5, 0))
out("S0 ShortSuper(100)", manning_term(mp.mpf("1.0"), 5, 0))
out("ShortSub h(200)", mp.mpf("0.9") + mp.mpf("0.3") * mp.exp(-5))
out("ShortSuper h(0)", mp.mpf("0.5") + mp.mpf("0.5") * mp.exp(-5))
k = [mp.mpf("-0.154375"), mp.mpf("-0.108189"), mp.mpf("-2.014310")]
out("ShortJump h(200) as printed", mp.exp(-8) * sum(k) + mp.mpf("1.5"))
out("ShortJump h(120-) ", mp.mpf("0.7") + mp.mpf("0.3") * (mp.exp(mp.mpf("0.6")) - 1))
out("ShortJump h(120+) ", k[0] + mp.mpf("1.5") * mp.exp(mp.mpf("0.1") * (mp.mpf("0.6") - 1)))
out("LongSub h(400)", mp.mpf("0.9") + mp.mpf("0.3") * mp.exp(-40 * (mp.mpf(2) / 3) ** 2)
    + mp.mpf("0.2") * mp.exp(-35 * (mp.mpf(1) / 3) ** 2))
k6 = [mp.mpf("-0.183691"), mp.mpf("1.519577"), mp.mpf("-18.234429")]
out("LongSmoothJump h(400)", mp.exp(mp.mpf("-0.09") * 280) * sum(k6) + mp.mpf("1.5") - mp.mpf("0.3"))

# ---------------------------------------------------------------- oscillations
out("thacker1d period", 2 * mp.pi / mp.sqrt(2 * g * mp.mpf("0.5")))
a = 1; r0 = mp.mpf("0.8"); h0 = mp.mpf("0.1")
A = (a ** 2 - r0 ** 2) / (a ** 2 + r0 ** 2)
out("radial A", A)
out("radial h(center,t=0)", h0 * (mp.sqrt(1 - A ** 2) / (1 - A) - 1) + h0)
out("radial free surface(center,t=0)", h0 * (mp.sqrt(1 - A ** 2) / (1 - A) - 1))
w = mp.sqrt(8 * g * h0) / a
out("radial omega", w)
out("radial T=3 periods", 3 * 2 * mp.pi / w)
out("planar omega", mp.sqrt(2 * g * h0) / a)
p = mp.sqrt(8 * g * 10 / mp.mpf(3000) ** 2)
out("sampson p", p)
out("sampson s", mp.sqrt(p ** 2 - mp.mpf("0.001") ** 2) / 2)
