#!/usr/bin/env python3
"""Generate poles and residues of the best (N,N) rational approximation to
exp(z) on (-inf, 0] via the Caratheodory-Fejer construction.

Runs the construction in extended precision (mpmath) so that every even N up
to 32 is resolved well below double precision, then writes
`src/inversion/cf_table.rs`. Each table is checked against the inverse
transform of 1/s, 1/s^2 and 1/(s+1) before it is emitted.

    python3 tools/gen_cf_table.py > src/inversion/cf_table.rs
"""

import sys

import mpmath as mp
import numpy as np

mp.mp.dps = 60

SCALE = 9  # transplant scale: x = SCALE * (t - 1) / (t + 1)
K = 200  # Chebyshev coefficients kept (|c_200| ~ 4e-46)
NF = 2048  # sample points on the unit circle
N_VALUES = range(2, 33, 2)


def log(msg):
    print(msg, file=sys.stderr, flush=True)


def dft(x):
    """MATLAB-style forward DFT of a (possibly zero-padded) sequence."""
    nz = [(j, v) for j, v in enumerate(x) if v != 0]
    out = []
    for k in range(NF):
        acc = mp.mpc(0)
        for j, v in nz:
            acc += v * ROOTS[(-j * k) % NF]
        out.append(acc)
    return out


ROOTS = [mp.expjpi(mp.mpf(2 * j) / NF) for j in range(NF)]

log("chebyshev coefficients")
samples = []
for j in range(NF):
    t = ROOTS[j].real
    if j == NF // 2:
        samples.append(mp.mpf(0))
    else:
        samples.append(mp.exp(SCALE * (t - 1) / (t + 1)))
cheb = []
for k in range(K + 1):
    acc = mp.fsum(samples[j] * ROOTS[(-j * k) % NF].real for j in range(NF))
    cheb.append(acc / NF)

# analytic part f(w) = sum_{k=0}^{K} c_k w^k on the circle
analytic = []
for j in range(NF):
    w = ROOTS[j]
    acc = mp.mpc(0)
    for k in range(K, -1, -1):
        acc = acc * w + cheb[k]
    analytic.append(acc)

log("hankel eigendecomposition")
hankel = mp.matrix(K, K)
for i in range(K):
    for j in range(K):
        idx = i + j + 1
        hankel[i, j] = cheb[idx] if idx <= K else mp.mpf(0)
evals, evecs = mp.eigsy(hankel)
order = sorted(range(K), key=lambda i: -abs(evals[i]))


def polyval(coeffs, z):
    acc = mp.mpc(0)
    for c in coeffs:
        acc = acc * z + c
    return acc


def poly_from_roots(roots):
    coeffs = [mp.mpc(1)]
    for r in roots:
        nxt = coeffs + [mp.mpc(0)]
        for i in range(1, len(nxt)):
            nxt[i] -= r * coeffs[i - 1]
        coeffs = nxt
    return coeffs


def polish(coeffs, z):
    deriv = [c * (len(coeffs) - 1 - i) for i, c in enumerate(coeffs[:-1])]
    for _ in range(200):
        step = polyval(coeffs, z) / polyval(deriv, z)
        z -= step
        if abs(step) < mp.mpf(10) ** (-mp.mp.dps + 5) * max(1, abs(z)):
            break
    return z


def cf(n):
    col = order[n]
    lam = evals[col]
    q = [evecs[i, col] for i in range(K)]
    sigma = abs(lam)
    v = q
    u = [mp.sign(lam) * x for x in q]
    u_rev = list(reversed(u))
    pad = [mp.mpf(0)] * (NF - K)
    fu = dft(u_rev + pad)
    fv = dft(v + pad)
    rt = [analytic[j] - sigma * ROOTS[(K * j) % NF] * fu[j] / fv[j] for j in range(NF)]

    approx = np.roots(np.array([float(x) for x in v]))
    outside = [complex(r) for r in approx if abs(r) > 1]
    if len(outside) != n:
        raise RuntimeError(f"N={n}: expected {n} roots outside unit disk, got {len(outside)}")
    qk = [polish(v, mp.mpc(r.real, r.imag)) for r in outside]
    for a in range(n):
        for b in range(a + 1, n):
            if abs(qk[a] - qk[b]) < mp.mpf(10) ** -20:
                raise RuntimeError(f"N={n}: Newton polish merged two roots")
    if any(abs(x) <= 1 for x in qk):
        raise RuntimeError(f"N={n}: polished root fell inside unit disk")

    qc = poly_from_roots(qk)
    pt = [rt[j] * polyval(qc, ROOTS[j]) for j in range(NF)]
    ptc = []
    for k in range(n + 1):
        acc = mp.fsum(pt[j] * ROOTS[(-j * k) % NF] for j in range(NF))
        ptc.append((acc / NF).real)
    ptc = list(reversed(ptc))

    poles, residues = [], []
    for a in range(n):
        others = poly_from_roots([qk[b] for b in range(n) if b != a])
        ck = polyval(ptc, qk[a]) / polyval(others, qk[a])
        zk = SCALE * (qk[a] - 1) ** 2 / (qk[a] + 1) ** 2
        ck = 4 * ck * zk / (qk[a] ** 2 - 1)
        poles.append(zk)
        residues.append(ck)
    return sigma, poles, residues


def invert(poles, residues, transform, t):
    acc = mp.mpc(0)
    for z, w in zip(poles, residues):
        acc += w * transform(z / t)
    return -2 * acc.real / t


PAIRS = [
    (lambda s: 1 / s, lambda t: mp.mpf(1)),
    (lambda s: 1 / s**2, lambda t: t),
    (lambda s: 1 / (s + 1), lambda t: mp.exp(-t)),
]

tables = {}
for n in N_VALUES:
    log(f"N = {n}")
    sigma, poles, residues = cf(n)
    half = sorted(
        [(z, w) for z, w in zip(poles, residues) if z.imag > 0],
        key=lambda p: -p[0].real,
    )
    if len(half) != n // 2:
        raise RuntimeError(f"N={n}: poles are not in conjugate pairs")
    hz = [p[0] for p in half]
    hw = [p[1] for p in half]
    worst = max(
        abs(invert(hz, hw, F, mp.mpf(t)) - f(mp.mpf(t)))
        for F, f in PAIRS
        for t in ("0.1", "1", "10")
    )
    log(f"  sigma = {mp.nstr(sigma, 4)}  worst pair error = {mp.nstr(worst, 4)}")
    tables[n] = (hz, hw)


def lit(x):
    return mp.nstr(x, 20, min_fixed=-mp.inf, max_fixed=mp.inf, strip_zeros=False)


out = []
out.append("// Generated by tools/gen_cf_table.py. Do not edit by hand.")
out.append("#![allow(clippy::excessive_precision)]")
out.append("")
out.append("/// `(pole, residue)` pairs in the upper half-plane, as `[re, im]` parts.")
out.append("pub(crate) type Node = ([f64; 2], [f64; 2]);")
out.append("")
for n, (hz, hw) in tables.items():
    out.append("#[rustfmt::skip]")
    out.append(f"pub(crate) const CF_{n}: [Node; {n // 2}] = [")
    for z, w in zip(hz, hw):
        out.append(
            f"    ([{lit(z.real)}, {lit(z.imag)}], [{lit(w.real)}, {lit(w.imag)}]),"
        )
    out.append("];")
    out.append("")
out.append("pub(crate) fn table(order: usize) -> Option<&'static [Node]> {")
out.append("    match order {")
for n in tables:
    out.append(f"        {n} => Some(&CF_{n}),")
out.append("        _ => None,")
out.append("    }")
out.append("}")
print("\n".join(out))
