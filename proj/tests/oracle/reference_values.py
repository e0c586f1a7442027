#!/usr/bin/env python3
"""Brute-force reference calculations backing the frozen constants in the C++ tests.

Everything here is computed directly from definitions with numpy, independently
of the C++ library: dense DFT/QFT-core matrices, operator Schmidt spectra via
explicit reshape+SVD, the Schmidt-decay bound curve, and truncation-error
ground truths. Run `python3 reference_values.py` and compare the printed values
against the constants embedded in the tests.
"""
import numpy as np

rng = np.random.default_rng(20240809)


def dft_matrix(n):
    N = 2**n
    q = np.arange(N)
    return np.exp(2j * np.pi * np.outer(q, q) / N) / np.sqrt(N)


def bit_reverse(x, n):
    r = 0
    for _ in range(n):
        r = (r << 1) | (x & 1)
        x >>= 1
    return r


def qft_core(n):
    """Column for input q is the product state with site-i phase 0.q_i...q_n."""
    N = 2**n
    cols = np.empty((N, N), dtype=complex)
    for q in range(N):
        col = np.array([1.0 + 0j])
        for i in range(1, n + 1):
            frac = (q % 2 ** (n - i + 1)) / 2 ** (n - i + 1)
            col = np.kron(col, np.array([1.0, np.exp(2j * np.pi * frac)]) / np.sqrt(2))
        cols[:, q] = col
    return cols


def reversal_matrix(n):
    N = 2**n
    P = np.zeros((N, N))
    for q in range(N):
        P[bit_reverse(q, n), q] = 1.0
    return P


def operator_schmidt(U, j):
    n = int(np.log2(U.shape[0]))
    t = U.reshape([2**j, 2 ** (n - j), 2**j, 2 ** (n - j)])
    m = t.transpose(0, 2, 1, 3).reshape(4**j, 4 ** (n - j))
    s = np.linalg.svd(m, compute_uv=False)
    return s / np.linalg.norm(s)


def decay_bound(k):
    return np.exp(-(2 * k + 1) / 2 * np.log((4 * k + 4) / (np.e * np.pi))) / np.sqrt(k)


def column_gate_matrix(n, i):
    """H on site i followed by the controlled phases with control i."""
    N = 2**n
    C = np.zeros((N, N), dtype=complex)
    for q in range(N):
        bits = [(q >> (n - m)) & 1 for m in range(1, n + 1)]
        phase_ctrl = sum(bits[j - 1] / 2 ** (j - i + 1) for j in range(i + 1, n + 1))
        for s in (0, 1):
            out = [*bits]
            out[i - 1] = s
            p = sum(b << (n - m) for m, b in enumerate(out, start=1))
            C[p, q] += np.exp(2j * np.pi * s * (bits[i - 1] / 2 + phase_ctrl)) / np.sqrt(2)
    return C


def column_mpo_dense(n, i):
    """Bond-dimension-2 tensor chain for the same column, contracted to dense."""
    # site tensors (l, out, in, r); identity left of i, H with bond emit at i,
    # diagonal controlled phases right of i.
    tensors = []
    for s in range(1, n + 1):
        if s < i:
            t = np.zeros((1, 2, 2, 1), dtype=complex)
            t[0, :, :, 0] = np.eye(2)
        elif s == i:
            r = 1 if i == n else 2
            t = np.zeros((1, 2, 2, r), dtype=complex)
            for so in (0, 1):
                for si in (0, 1):
                    t[0, so, si, (so if r == 2 else 0)] = np.exp(2j * np.pi * so * si / 2) / np.sqrt(2)
        else:
            l = 2
            r = 1 if s == n else 2
            t = np.zeros((l, 2, 2, r), dtype=complex)
            for b in (0, 1):
                for q in (0, 1):
                    t[b, q, q, (b if r == 2 else 0)] = np.exp(2j * np.pi * b * q / 2 ** (s - i + 1))
        tensors.append(t)
    acc = np.ones((1, 1, 1))  # (rowprefix, colprefix, bond)
    for t in tensors:
        acc = np.einsum("abl,lour->aobur", acc, t)
        acc = acc.reshape(acc.shape[0] * 2, acc.shape[2] * 2, acc.shape[4])
    return acc[:, :, 0]


def mpo_tt(U):
    """Exact tensor-train of U with fused (out_i,in_i) physical legs, via SVD."""
    n = int(np.log2(U.shape[0]))
    t = U.reshape([2] * (2 * n))
    perm = [x for i in range(n) for x in (i, n + i)]
    v = t.transpose(perm).reshape(-1)
    cores, m = [], v.reshape(1 * 4, -1)
    l = 1
    for i in range(n - 1):
        u, s, vh = np.linalg.svd(m, full_matrices=False)
        keep = int((s > 1e-14 * s[0]).sum())
        cores.append(u[:, :keep].reshape(l, 4, keep))
        l = keep
        m = (s[:keep, None] * vh[:keep]).reshape(l * 4, -1)
    cores.append(m.reshape(l, 4, 1))
    return cores


def tt_to_dense(cores):
    n = len(cores)
    acc = np.ones((1, 1))
    for c in cores:
        l, p, r = c.shape
        acc = np.einsum("al,lpr->apr", acc, c).reshape(acc.shape[0] * p, r)
    v = acc[:, 0]
    t = v.reshape([2] * (2 * n))
    perm_rows = list(range(0, 2 * n, 2)) + list(range(1, 2 * n, 2))
    return t.transpose(perm_rows).reshape(2**n, 2**n)


def tt_left_canonical(cores):
    out = []
    carry = np.ones((1, 1))
    for c in cores:
        l, p, r = c.shape
        m = (carry @ c.reshape(l, p * r)).reshape(-1, p, r)
        l2 = m.shape[0]
        q, rr = np.linalg.qr(m.reshape(l2 * p, r))
        out.append(q.reshape(l2, p, q.shape[1]))
        carry = rr
    out[-1] = np.einsum("lpr,rs->lps", out[-1], carry)
    return out


def tt_truncate_all(cores, chi):
    """Right-to-left optimal sweep capping every bond at chi; returns cores and per-bond discarded tails."""
    cores = tt_left_canonical([c.copy() for c in cores])
    n = len(cores)
    tails = {}
    for i in range(n - 1, 0, -1):
        l, p, r = cores[i].shape
        u, s, vh = np.linalg.svd(cores[i].reshape(l, p * r), full_matrices=False)
        keep = min(chi, len(s))
        tails[i] = np.sqrt((s[keep:] ** 2).sum())
        cores[i] = vh[:keep].reshape(keep, p, r)
        carry = u[:, :keep] * s[:keep]
        cores[i - 1] = np.einsum("lpr,rs->lps", cores[i - 1], carry)
    return cores, tails


np.set_printoptions(precision=15, suppress=False, linewidth=120)

print("== decay bound ==")
for k in (2, 3, 4, 8, 16):
    print(f"bound({k}) = {decay_bound(k):.15g}")

print("\n== conventions cross-checks ==")
for n in (1, 2, 3, 6):
    F, Q, R = dft_matrix(n), qft_core(n), reversal_matrix(n)
    print(f"n={n}  ||R@Q - F||_F = {np.linalg.norm(R @ Q - F):.3e}   unitary dev = "
          f"{np.abs(Q @ Q.conj().T - np.eye(2**n)).max():.3e}")

n = 6
Q = qft_core(n)
prod = np.eye(2**n, dtype=complex)
for i in range(1, n + 1):
    prod = column_gate_matrix(n, i) @ prod
print(f"gate-column product vs core, n={n}: {np.linalg.norm(prod - Q):.3e}")
for i in (1, 3, 6):
    print(f"column MPO vs column matrix, i={i}: "
          f"{np.linalg.norm(column_mpo_dense(n, i) - column_gate_matrix(n, i)):.3e}")

print("\n== operator Schmidt spectra ==")
print("Q_2 @ j=1:", operator_schmidt(qft_core(2), 1))
Q6 = qft_core(6)
for j in (1, 2, 3):
    s = operator_schmidt(Q6, j)
    print(f"Q_6 @ j={j} head:", s[:6])
Q8 = qft_core(8)
s84 = operator_schmidt(Q8, 4)
print("Q_8 @ j=4 head:", s84[:10])
ent = -(s84**2 * np.log(s84**2 + (s84 == 0))).sum()
print(f"entropy(Q_8, j=4) = {ent:.15g}")
F6 = dft_matrix(6)
for j in (1, 3):
    s = operator_schmidt(F6, j)
    print(f"F_6 @ j={j}: max-min = {s.max() - s.min():.3e}, value = {s[0]:.15g}")

print("\n== bound vs dense spectra (no violations expected) ==")
worst = 0.0
for n in range(2, 9):
    Qn = qft_core(n)
    for j in range(1, n):
        s = operator_schmidt(Qn, j)
        for k in range(2, len(s)):
            if s[k] > 1e-14:
                worst = max(worst, s[k] / decay_bound(k))
print(f"max sigma_k / bound(k) over n<=8 = {worst:.6f}")

print("\n== n-independence of leading coefficients (mid cut) ==")
mids = {n: operator_schmidt(qft_core(n), n // 2) for n in (8, 9, 10)}
for k in range(6):
    vals = [mids[n][k] for n in mids]
    print(f"k={k}: {vals}  spread={max(vals)-min(vals):.2e}")

print("\n== truncation-error accounting, n=8 ==")
cores = mpo_tt(Q8)
print("exact TT bond dims:", [c.shape[2] for c in cores[:-1]])
print(f"TT reconstruction error: {np.linalg.norm(tt_to_dense(cores) - Q8):.3e}")
spectra = {j: operator_schmidt(Q8, j) for j in range(1, 8)}
nrm = np.linalg.norm(Q8)
for chi in (2, 4, 8, 16):
    tr, tails = tt_truncate_all(cores, chi)
    err = np.linalg.norm(tt_to_dense(tr) - Q8) / nrm
    tail_mid = np.sqrt((spectra[4][chi:] ** 2).sum())
    tail_all = np.sqrt(sum((spectra[j][chi:] ** 2).sum() for j in spectra))
    print(f"chi={chi:2d}: true err={err:.15e}  mid-tail={tail_mid:.15e}  "
          f"all-bond tail={tail_all:.15e}  |err-all|={abs(err-tail_all):.2e}  |err-mid|={abs(err-tail_mid):.2e}")

print("\n== gaussian sampling, n=12, cutoff 1e-10 ==")
nn = 12
x = np.arange(2**nn) / 2**nn
g = np.exp(-((x - 0.5) ** 2) / (2 * 0.1**2)).astype(complex)
g /= np.linalg.norm(g)
m = g.reshape(2, -1)
dims, l = [], 1
err2 = 0.0
cores_g = []
for i in range(nn - 1):
    u, s, vh = np.linalg.svd(m, full_matrices=False)
    w = np.cumsum(s[::-1] ** 2)[::-1]
    keep = int(np.searchsorted(-w, -(1e-10**2) * (s**2).sum()))
    keep = max(keep, 1)
    dims.append(keep)
    cores_g.append(u[:, :keep].reshape(l, 2, keep))
    l = keep
    m = (s[:keep, None] * vh[:keep]).reshape(l * 2, -1)
cores_g.append(m.reshape(l, 2, 1))
acc = np.ones((1, 1))
for c in cores_g:
    acc = np.einsum("al,lpr->apr", acc, c).reshape(-1, c.shape[2])
print("bond dims:", dims)
print(f"decode err: {np.linalg.norm(acc[:, 0] - g):.3e}")

print("\n== fft conventions ==")
nn = 4
N = 2**nn
F = dft_matrix(nn)
k = 3
pw = np.exp(2j * np.pi * k * np.arange(N) / N) / np.sqrt(N)
out = F @ pw
print(f"plane wave k={k} -> argmax at {np.argmax(np.abs(out))} (expect {(N - k) % N}), "
      f"amp={out[(N-k)%N]:.6f}")
delta = np.zeros(N, dtype=complex); delta[0] = 1
print("delta -> uniform:", np.allclose(F @ delta, np.ones(N) / np.sqrt(N)))
