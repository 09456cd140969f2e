#!/usr/bin/env python3
"""Generate STO-3G FCIDUMP files (molecular orbital basis) for small molecules.

Computes one-/two-electron integrals over contracted Cartesian Gaussians
(McMurchie-Davidson scheme), runs a restricted Hartree-Fock SCF with DIIS,
transforms the integrals to the molecular-orbital basis and writes a
chemist-notation FCIDUMP with the 8-fold unique index set.

Usage: python3 scripts/make_fcidump.py <lih|c2> <output-path>
"""

import sys
import numpy as np
from scipy.special import hyp1f1

ANGSTROM_TO_BOHR = 1.8897259886

# STO-3G exponents / contraction coefficients (already scaled).
STO3G = {
    "H": [("S", [3.42525091, 0.62391373, 0.16885540],
           [0.15432897, 0.53532814, 0.44463454])],
    "Li": [("S", [16.1195750, 2.9362007, 0.7946505],
            [0.15432897, 0.53532814, 0.44463454]),
           ("SP", [0.6362897, 0.1478601, 0.0480887],
            [-0.09996723, 0.39951283, 0.70011547],
            [0.15591627, 0.60768372, 0.39195739])],
    "C": [("S", [71.6168370, 13.0450960, 3.5305122],
           [0.15432897, 0.53532814, 0.44463454]),
          ("SP", [2.9412494, 0.6834831, 0.2222899],
           [-0.09996723, 0.39951283, 0.70011547],
           [0.15591627, 0.60768372, 0.39195739])],
}

CHARGES = {"H": 1, "Li": 3, "C": 6}


class Primitive:
    def __init__(self, exponent, coeff, origin, lmn):
        self.a = exponent
        self.c = coeff
        self.origin = np.asarray(origin, dtype=float)
        self.lmn = lmn


class Basis:
    """Contracted, normalized Cartesian Gaussian."""

    def __init__(self, prims):
        self.prims = prims
        norm = np.sqrt(contracted_overlap(self, self))
        for p in self.prims:
            p.c /= norm


def primitive_norm(a, lmn):
    l, m, n = lmn
    num = (2 * a / np.pi) ** 0.75 * (4 * a) ** ((l + m + n) / 2.0)
    den = np.sqrt(dfact(2 * l - 1) * dfact(2 * m - 1) * dfact(2 * n - 1))
    return num / den


def dfact(k):
    if k <= 0:
        return 1.0
    r = 1.0
    while k > 0:
        r *= k
        k -= 2
    return r


def hermite_E(i, j, t, Qx, a, b):
    """Hermite expansion coefficient for Gaussian product along one axis."""
    p = a + b
    q = a * b / p
    if t < 0 or t > i + j:
        return 0.0
    if i == j == t == 0:
        return np.exp(-q * Qx * Qx)
    if j == 0:
        return (1.0 / (2 * p) * hermite_E(i - 1, j, t - 1, Qx, a, b)
                - q * Qx / a * hermite_E(i - 1, j, t, Qx, a, b)
                + (t + 1) * hermite_E(i - 1, j, t + 1, Qx, a, b))
    return (1.0 / (2 * p) * hermite_E(i, j - 1, t - 1, Qx, a, b)
            + q * Qx / b * hermite_E(i, j - 1, t, Qx, a, b)
            + (t + 1) * hermite_E(i, j - 1, t + 1, Qx, a, b))


def prim_overlap(pa, pb):
    a, b = pa.a, pb.a
    S = 1.0
    for ax in range(3):
        S *= hermite_E(pa.lmn[ax], pb.lmn[ax], 0,
                       pa.origin[ax] - pb.origin[ax], a, b)
    return S * (np.pi / (a + b)) ** 1.5


def contracted_overlap(ba, bb):
    s = 0.0
    for pa in ba.prims:
        for pb in bb.prims:
            s += pa.c * pb.c * prim_overlap(pa, pb)
    return s


def prim_kinetic(pa, pb):
    a, b = pa.a, pb.a
    l2, m2, n2 = pb.lmn

    def ov(lmn_shift):
        shifted = Primitive(b, 1.0, pb.origin,
                            tuple(pb.lmn[k] + lmn_shift[k] for k in range(3)))
        return prim_overlap(pa, shifted)

    term0 = b * (2 * (l2 + m2 + n2) + 3) * prim_overlap(pa, pb)
    term1 = -2 * b * b * (ov((2, 0, 0)) + ov((0, 2, 0)) + ov((0, 0, 2)))
    term2 = 0.0
    if l2 >= 2:
        term2 += -0.5 * l2 * (l2 - 1) * ov((-2, 0, 0))
    if m2 >= 2:
        term2 += -0.5 * m2 * (m2 - 1) * ov((0, -2, 0))
    if n2 >= 2:
        term2 += -0.5 * n2 * (n2 - 1) * ov((0, 0, -2))
    return term0 + term1 + term2


def boys(n, x):
    return hyp1f1(n + 0.5, n + 1.5, -x) / (2.0 * n + 1.0)


def hermite_R(t, u, v, n, p, PC):
    """Hermite Coulomb integral by downward recursion."""
    if t == u == v == 0:
        return (-2.0 * p) ** n * boys(n, p * np.dot(PC, PC))
    if t > 0:
        val = 0.0
        if t > 1:
            val += (t - 1) * hermite_R(t - 2, u, v, n + 1, p, PC)
        val += PC[0] * hermite_R(t - 1, u, v, n + 1, p, PC)
        return val
    if u > 0:
        val = 0.0
        if u > 1:
            val += (u - 1) * hermite_R(t, u - 2, v, n + 1, p, PC)
        val += PC[1] * hermite_R(t, u - 1, v, n + 1, p, PC)
        return val
    val = 0.0
    if v > 1:
        val += (v - 1) * hermite_R(t, u, v - 2, n + 1, p, PC)
    val += PC[2] * hermite_R(t, u, v - 1, n + 1, p, PC)
    return val


def prim_nuclear(pa, pb, C):
    a, b = pa.a, pb.a
    p = a + b
    P = (a * pa.origin + b * pb.origin) / p
    AB = pa.origin - pb.origin
    val = 0.0
    for t in range(pa.lmn[0] + pb.lmn[0] + 1):
        Ex = hermite_E(pa.lmn[0], pb.lmn[0], t, AB[0], a, b)
        for u in range(pa.lmn[1] + pb.lmn[1] + 1):
            Ey = hermite_E(pa.lmn[1], pb.lmn[1], u, AB[1], a, b)
            for v in range(pa.lmn[2] + pb.lmn[2] + 1):
                Ez = hermite_E(pa.lmn[2], pb.lmn[2], v, AB[2], a, b)
                val += Ex * Ey * Ez * hermite_R(t, u, v, 0, p, P - C)
    return 2.0 * np.pi / p * val


def prim_eri(pa, pb, pc, pd):
    a, b, c, d = pa.a, pb.a, pc.a, pd.a
    p = a + b
    q = c + d
    alpha = p * q / (p + q)
    P = (a * pa.origin + b * pb.origin) / p
    Q = (c * pc.origin + d * pd.origin) / q
    AB = pa.origin - pb.origin
    CD = pc.origin - pd.origin
    val = 0.0
    for t in range(pa.lmn[0] + pb.lmn[0] + 1):
        E1x = hermite_E(pa.lmn[0], pb.lmn[0], t, AB[0], a, b)
        for u in range(pa.lmn[1] + pb.lmn[1] + 1):
            E1y = hermite_E(pa.lmn[1], pb.lmn[1], u, AB[1], a, b)
            for v in range(pa.lmn[2] + pb.lmn[2] + 1):
                E1z = hermite_E(pa.lmn[2], pb.lmn[2], v, AB[2], a, b)
                for tau in range(pc.lmn[0] + pd.lmn[0] + 1):
                    E2x = hermite_E(pc.lmn[0], pd.lmn[0], tau, CD[0], c, d)
                    for nu in range(pc.lmn[1] + pd.lmn[1] + 1):
                        E2y = hermite_E(pc.lmn[1], pd.lmn[1], nu, CD[1], c, d)
                        for phi in range(pc.lmn[2] + pd.lmn[2] + 1):
                            E2z = hermite_E(pc.lmn[2], pd.lmn[2], phi,
                                            CD[2], c, d)
                            sign = (-1.0) ** (tau + nu + phi)
                            val += (E1x * E1y * E1z * E2x * E2y * E2z * sign
                                    * hermite_R(t + tau, u + nu, v + phi, 0,
                                                alpha, P - Q))
    return val * 2.0 * np.pi ** 2.5 / (p * q * np.sqrt(p + q))


def build_basis(atoms):
    funcs = []
    for sym, pos in atoms:
        for shell in STO3G[sym]:
            if shell[0] == "S":
                _, exps, coeffs = shell
                prims = [Primitive(a, c * primitive_norm(a, (0, 0, 0)), pos,
                                   (0, 0, 0)) for a, c in zip(exps, coeffs)]
                funcs.append(Basis(prims))
            else:  # SP shell
                _, exps, scoef, pcoef = shell
                prims = [Primitive(a, c * primitive_norm(a, (0, 0, 0)), pos,
                                   (0, 0, 0)) for a, c in zip(exps, scoef)]
                funcs.append(Basis(prims))
                for lmn in [(1, 0, 0), (0, 1, 0), (0, 0, 1)]:
                    prims = [Primitive(a, c * primitive_norm(a, lmn), pos, lmn)
                             for a, c in zip(exps, pcoef)]
                    funcs.append(Basis(prims))
    return funcs


def integrals(atoms):
    basis = build_basis(atoms)
    n = len(basis)
    S = np.zeros((n, n))
    T = np.zeros((n, n))
    V = np.zeros((n, n))
    for i in range(n):
        for j in range(i + 1):
            s = t = v = 0.0
            for pa in basis[i].prims:
                for pb in basis[j].prims:
                    cc = pa.c * pb.c
                    s += cc * prim_overlap(pa, pb)
                    t += cc * prim_kinetic(pa, pb)
                    for sym, pos in atoms:
                        v -= CHARGES[sym] * cc * prim_nuclear(
                            pa, pb, np.asarray(pos, dtype=float))
            S[i, j] = S[j, i] = s
            T[i, j] = T[j, i] = t
            V[i, j] = V[j, i] = v

    eri = np.zeros((n, n, n, n))
    done = set()
    for i in range(n):
        for j in range(n):
            for k in range(n):
                for l in range(n):
                    key = tuple(sorted([tuple(sorted((i, j))),
                                        tuple(sorted((k, l)))]))
                    if key in done:
                        continue
                    done.add(key)
                    val = 0.0
                    for pa in basis[i].prims:
                        for pb in basis[j].prims:
                            for pc in basis[k].prims:
                                for pd in basis[l].prims:
                                    val += (pa.c * pb.c * pc.c * pd.c
                                            * prim_eri(pa, pb, pc, pd))
                    for (a, b) in [(i, j), (j, i)]:
                        for (c, d) in [(k, l), (l, k)]:
                            eri[a, b, c, d] = val
                            eri[c, d, a, b] = val
    return S, T, V, eri


def nuclear_repulsion(atoms):
    e = 0.0
    for i in range(len(atoms)):
        for j in range(i):
            zi, zj = CHARGES[atoms[i][0]], CHARGES[atoms[j][0]]
            r = np.linalg.norm(np.asarray(atoms[i][1]) - np.asarray(atoms[j][1]))
            e += zi * zj / r
    return e


def rhf(S, T, V, eri, n_elec, e_nuc, max_iter=200, tol=1e-11):
    n = S.shape[0]
    Hcore = T + V
    w, U = np.linalg.eigh(S)
    X = U @ np.diag(w ** -0.5) @ U.T
    D = np.zeros((n, n))
    nocc = n_elec // 2
    fock_list, err_list = [], []
    E_old = 0.0
    for it in range(max_iter):
        J = np.einsum("pqrs,rs->pq", eri, D)
        K = np.einsum("prqs,rs->pq", eri, D)
        F = Hcore + 2 * J - K
        # DIIS
        err = X.T @ (F @ D @ S - S @ D @ F) @ X
        fock_list.append(F)
        err_list.append(err)
        if len(fock_list) > 8:
            fock_list.pop(0)
            err_list.pop(0)
        if len(fock_list) > 1:
            m = len(fock_list)
            B = -np.ones((m + 1, m + 1))
            B[m, m] = 0.0
            for a in range(m):
                for b in range(m):
                    B[a, b] = np.einsum("pq,pq->", err_list[a], err_list[b])
            rhs = np.zeros(m + 1)
            rhs[m] = -1.0
            try:
                coef = np.linalg.solve(B, rhs)[:m]
                F = sum(c * f for c, f in zip(coef, fock_list))
            except np.linalg.LinAlgError:
                pass
        Fp = X.T @ F @ X
        eps, Cp = np.linalg.eigh(Fp)
        C = X @ Cp
        D = C[:, :nocc] @ C[:, :nocc].T
        E = np.einsum("pq,pq->", D, Hcore + F) + e_nuc
        if abs(E - E_old) < tol and it > 3:
            return E, C, eps
        E_old = E
    raise RuntimeError("SCF did not converge")


def write_fcidump(path, hmo, erimo, e_nuc, n_elec, thresh=1e-12):
    n = hmo.shape[0]
    lines = [f"&FCI NORB={n},NELEC={n_elec},MS2=0,", "&END"]
    for p in range(n):
        for q in range(p + 1):
            for r in range(p + 1):
                smax = q if r == p else r
                for s in range(smax + 1):
                    v = erimo[p, q, r, s]
                    if abs(v) > thresh:
                        lines.append(f"{v:23.16e} {p+1:3d} {q+1:3d} {r+1:3d} {s+1:3d}")
    for p in range(n):
        for q in range(p + 1):
            if abs(hmo[p, q]) > thresh:
                lines.append(f"{hmo[p,q]:23.16e} {p+1:3d} {q+1:3d}   0   0")
    lines.append(f"{e_nuc:23.16e}   0   0   0   0")
    with open(path, "w") as f:
        f.write("\n".join(lines) + "\n")


def main():
    mol, out = sys.argv[1], sys.argv[2]
    if mol == "lih":
        r = 1.5949 * ANGSTROM_TO_BOHR
        atoms = [("Li", (0.0, 0.0, 0.0)), ("H", (0.0, 0.0, r))]
        n_elec = 4
    elif mol == "c2":
        r = 1.2425 * ANGSTROM_TO_BOHR
        atoms = [("C", (0.0, 0.0, 0.0)), ("C", (0.0, 0.0, r))]
        n_elec = 12
    else:
        raise SystemExit(f"unknown molecule {mol}")

    S, T, V, eri = integrals(atoms)
    e_nuc = nuclear_repulsion(atoms)
    E, C, eps = rhf(S, T, V, eri, n_elec, e_nuc)
    print(f"{mol}: RHF energy = {E:.8f} Ha, orbital energies = {np.round(eps, 4)}")

    # Canonical molecular orbitals, columns ordered by orbital energy; the
    # downstream HF reference occupies the leading orbitals (aufbau).
    Hcore = T + V
    hmo = C.T @ Hcore @ C
    erimo = np.einsum("pi,qj,pqrs,rk,sl->ijkl", C, C, eri, C, C, optimize=True)

    write_fcidump(out, hmo, erimo, e_nuc, n_elec)
    print(f"  wrote {out}")


if __name__ == "__main__":
    main()
