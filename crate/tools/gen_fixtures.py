#!/usr/bin/env python3
"""Generate the bundled FCIDUMP fixtures and their metadata.

Computes STO-3G molecular integrals (McMurchie-Davidson scheme), runs a
restricted Hartree-Fock calculation, transforms the integrals to the
molecular-orbital basis, and writes FCIDUMP files plus a metadata JSON
carrying independently computed SCF and determinant-FCI energies.

Usage: python3 tools/gen_fixtures.py [output_dir]
"""

import itertools
import json
import math
import os
import sys

import numpy as np
from scipy.special import gammainc, gamma

ANGSTROM_TO_BOHR = 1.8897259886

# ---------------------------------------------------------------------------
# STO-3G basis data (EMSL tables). Contraction coefficients are for
# normalized primitives.
# ---------------------------------------------------------------------------

STO3G = {
    "H": [
        ("s", [3.425250914, 0.6239137298, 0.1688554040],
              [0.1543289673, 0.5353281423, 0.4446345422]),
    ],
    "Li": [
        ("s", [16.11957475, 2.936200663, 0.7946504870],
              [0.1543289673, 0.5353281423, 0.4446345422]),
        ("sp", [0.6362897469, 0.1478600533, 0.0480886784],
               [-0.09996722919, 0.3995128261, 0.7001154689],
               [0.1559162750, 0.6076837186, 0.3919573931]),
    ],
}

NUCLEAR_CHARGE = {"H": 1, "Li": 3}


def boys(n, x):
    """Boys function F_n(x), vectorized over x."""
    x = np.asarray(x, dtype=float)
    small = x < 1e-12
    out = np.empty_like(x)
    out[small] = 1.0 / (2 * n + 1)
    xb = x[~small]
    out[~small] = gamma(n + 0.5) * gammainc(n + 0.5, xb) / (2 * xb ** (n + 0.5))
    return out


def boys_scalar(n, x):
    if x < 1e-12:
        return 1.0 / (2 * n + 1)
    return gamma(n + 0.5) * gammainc(n + 0.5, x) / (2 * x ** (n + 0.5))


class PrimitiveShellPair:
    pass


def hermite_coefs(l1, l2, a, b, ab_dist):
    """E_t^{ij} Hermite expansion coefficients for one Cartesian direction.

    Returns array E[i, j, t] for i <= l1, j <= l2, t <= i + j.
    ab_dist = A - B along this direction.
    """
    p = a + b
    mu = a * b / p
    tmax = l1 + l2
    E = np.zeros((l1 + 1, l2 + 1, tmax + 2))
    E[0, 0, 0] = math.exp(-mu * ab_dist * ab_dist)
    # distances from the product center
    pa = -b * ab_dist / p  # P - A
    pb = a * ab_dist / p   # P - B
    for i in range(l1 + 1):
        for j in range(l2 + 1):
            if i == 0 and j == 0:
                continue
            for t in range(i + j + 1):
                if i > 0:
                    val = 0.0
                    if t > 0:
                        val += E[i - 1, j, t - 1] / (2 * p)
                    val += pa * E[i - 1, j, t]
                    val += (t + 1) * E[i - 1, j, t + 1]
                else:
                    val = 0.0
                    if t > 0:
                        val += E[i, j - 1, t - 1] / (2 * p)
                    val += pb * E[i, j - 1, t]
                    val += (t + 1) * E[i, j - 1, t + 1]
                E[i, j, t] = val
    return E


def hermite_integrals(tmax, umax, vmax, p, pc):
    """Auxiliary Hermite Coulomb integrals R^0_{tuv}(p, PC)."""
    nmax = tmax + umax + vmax
    rpc2 = pc[0] ** 2 + pc[1] ** 2 + pc[2] ** 2
    fvals = [boys_scalar(n, p * rpc2) for n in range(nmax + 1)]
    # R^n_{000} = (-2p)^n F_n(p * RPC^2)
    base = {(0, 0, 0, n): ((-2.0 * p) ** n) * fvals[n] for n in range(nmax + 1)}

    def rec(t, u, v, n):
        key = (t, u, v, n)
        if key in base:
            return base[key]
        if t < 0 or u < 0 or v < 0:
            return 0.0
        if t > 0:
            val = (t - 1) * rec(t - 2, u, v, n + 1) + pc[0] * rec(t - 1, u, v, n + 1)
        elif u > 0:
            val = (u - 1) * rec(t, u - 2, v, n + 1) + pc[1] * rec(t, u - 1, v, n + 1)
        else:
            val = (v - 1) * rec(t, u, v - 2, n + 1) + pc[2] * rec(t, u, v - 1, n + 1)
        base[key] = val
        return val

    R = np.zeros((tmax + 1, umax + 1, vmax + 1))
    for t in range(tmax + 1):
        for u in range(umax + 1):
            for v in range(vmax + 1):
                R[t, u, v] = rec(t, u, v, 0)
    return R


def primitive_norm(alpha, lmn):
    l, m, n = lmn
    L = l + m + n
    df = lambda k: math.prod(range(k, 0, -2)) if k > 0 else 1
    return ((2 * alpha / math.pi) ** 0.75
            * (4 * alpha) ** (L / 2)
            / math.sqrt(df(2 * l - 1) * df(2 * m - 1) * df(2 * n - 1)))


class BasisFunction:
    """A contracted Cartesian Gaussian."""

    def __init__(self, center, lmn, exps, coefs):
        self.center = np.asarray(center, dtype=float)
        self.lmn = lmn
        self.exps = list(exps)
        self.coefs = [c * primitive_norm(a, lmn) for a, c in zip(exps, coefs)]
        # renormalize the contracted function
        s = overlap_prim_pair(self, self)
        self.coefs = [c / math.sqrt(s) for c in self.coefs]


def overlap_prim_pair(f1, f2):
    val = 0.0
    ab = f1.center - f2.center
    for a, ca in zip(f1.exps, f1.coefs):
        for b, cb in zip(f2.exps, f2.coefs):
            p = a + b
            pref = (math.pi / p) ** 1.5
            term = pref
            for d in range(3):
                E = hermite_coefs(f1.lmn[d], f2.lmn[d], a, b, ab[d])
                term *= E[f1.lmn[d], f2.lmn[d], 0]
            val += ca * cb * term
    return val


def kinetic_pair(f1, f2):
    """Kinetic energy integral via the overlap-derivative relation."""
    val = 0.0
    ab = f1.center - f2.center
    l2 = f1.lmn
    for a, ca in zip(f1.exps, f1.coefs):
        for b, cb in zip(f2.exps, f2.coefs):
            p = a + b
            pref = (math.pi / p) ** 1.5
            # per-direction 1D overlaps with shifted angular momenta on f2
            s = np.zeros((3, 5))  # s[d, shift+2] for shift in -2..2
            for d in range(3):
                j = f2.lmn[d]
                E = hermite_coefs(f1.lmn[d], j + 2, a, b, ab[d])
                for shift in (-2, -1, 0, 1, 2):
                    jj = j + shift
                    s[d, shift + 2] = E[f1.lmn[d], jj, 0] if jj >= 0 else 0.0
            t1d = []
            for d in range(3):
                j = f2.lmn[d]
                t = -2.0 * b * b * s[d, 4] + b * (2 * j + 1) * s[d, 2]
                if j >= 2:
                    t -= 0.5 * j * (j - 1) * s[d, 0]
                t1d.append(t)
            term = (t1d[0] * s[1, 2] * s[2, 2]
                    + s[0, 2] * t1d[1] * s[2, 2]
                    + s[0, 2] * s[1, 2] * t1d[2])
            val += ca * cb * pref * term
    return val


def nuclear_pair(f1, f2, atoms):
    val = 0.0
    ab = f1.center - f2.center
    for a, ca in zip(f1.exps, f1.coefs):
        for b, cb in zip(f2.exps, f2.coefs):
            p = a + b
            P = (a * f1.center + b * f2.center) / p
            Ex = hermite_coefs(f1.lmn[0], f2.lmn[0], a, b, ab[0])
            Ey = hermite_coefs(f1.lmn[1], f2.lmn[1], a, b, ab[1])
            Ez = hermite_coefs(f1.lmn[2], f2.lmn[2], a, b, ab[2])
            tmax = f1.lmn[0] + f2.lmn[0]
            umax = f1.lmn[1] + f2.lmn[1]
            vmax = f1.lmn[2] + f2.lmn[2]
            for (Z, C) in atoms:
                R = hermite_integrals(tmax, umax, vmax, p, P - np.asarray(C))
                term = 0.0
                for t in range(tmax + 1):
                    for u in range(umax + 1):
                        for v in range(vmax + 1):
                            term += (Ex[f1.lmn[0], f2.lmn[0], t]
                                     * Ey[f1.lmn[1], f2.lmn[1], u]
                                     * Ez[f1.lmn[2], f2.lmn[2], v]
                                     * R[t, u, v])
                val -= ca * cb * Z * 2.0 * math.pi / p * term
    return val


def eri_pair(f1, f2, f3, f4):
    """(f1 f2 | f3 f4) in chemists' notation."""
    val = 0.0
    ab = f1.center - f2.center
    cd = f3.center - f4.center
    t1 = [f1.lmn[d] + f2.lmn[d] for d in range(3)]
    t2 = [f3.lmn[d] + f4.lmn[d] for d in range(3)]
    for a, ca in zip(f1.exps, f1.coefs):
        for b, cb in zip(f2.exps, f2.coefs):
            p = a + b
            P = (a * f1.center + b * f2.center) / p
            E1 = [hermite_coefs(f1.lmn[d], f2.lmn[d], a, b, ab[d]) for d in range(3)]
            for c, cc in zip(f3.exps, f3.coefs):
                for d_, cd_ in zip(f4.exps, f4.coefs):
                    q = c + d_
                    Q = (c * f3.center + d_ * f4.center) / q
                    E2 = [hermite_coefs(f3.lmn[d], f4.lmn[d], c, d_, cd[d]) for d in range(3)]
                    alpha = p * q / (p + q)
                    R = hermite_integrals(t1[0] + t2[0], t1[1] + t2[1], t1[2] + t2[2],
                                          alpha, P - Q)
                    term = 0.0
                    for t in range(t1[0] + 1):
                        for u in range(t1[1] + 1):
                            for v in range(t1[2] + 1):
                                e1 = (E1[0][f1.lmn[0], f2.lmn[0], t]
                                      * E1[1][f1.lmn[1], f2.lmn[1], u]
                                      * E1[2][f1.lmn[2], f2.lmn[2], v])
                                if e1 == 0.0:
                                    continue
                                for tt in range(t2[0] + 1):
                                    for uu in range(t2[1] + 1):
                                        for vv in range(t2[2] + 1):
                                            e2 = (E2[0][f3.lmn[0], f4.lmn[0], tt]
                                                  * E2[1][f3.lmn[1], f4.lmn[1], uu]
                                                  * E2[2][f3.lmn[2], f4.lmn[2], vv])
                                            if e2 == 0.0:
                                                continue
                                            sign = (-1.0) ** (tt + uu + vv)
                                            term += e1 * e2 * sign * R[t + tt, u + uu, v + vv]
                    pref = 2.0 * math.pi ** 2.5 / (p * q * math.sqrt(p + q))
                    val += ca * cb * cc * cd_ * pref * term
    return val


def build_basis(atoms_spec):
    """atoms_spec: list of (element, center_bohr). Returns basis functions."""
    basis = []
    for (el, center) in atoms_spec:
        for shell in STO3G[el]:
            if shell[0] == "s":
                _, exps, coefs = shell
                basis.append(BasisFunction(center, (0, 0, 0), exps, coefs))
            elif shell[0] == "sp":
                _, exps, cs, cp = shell
                basis.append(BasisFunction(center, (0, 0, 0), exps, cs))
                for lmn in [(1, 0, 0), (0, 1, 0), (0, 0, 1)]:
                    basis.append(BasisFunction(center, lmn, exps, cp))
    return basis


def integrals(atoms_spec):
    basis = build_basis(atoms_spec)
    n = len(basis)
    atoms = [(NUCLEAR_CHARGE[el], c) for (el, c) in atoms_spec]
    S = np.zeros((n, n))
    T = np.zeros((n, n))
    V = np.zeros((n, n))
    for i in range(n):
        for j in range(i + 1):
            S[i, j] = S[j, i] = overlap_prim_pair(basis[i], basis[j])
            T[i, j] = T[j, i] = kinetic_pair(basis[i], basis[j])
            V[i, j] = V[j, i] = nuclear_pair(basis[i], basis[j], atoms)
    eri = np.zeros((n, n, n, n))
    # unique (ij|kl) under 8-fold symmetry
    pairs = [(i, j) for i in range(n) for j in range(i + 1)]
    for a, (i, j) in enumerate(pairs):
        for (k, l) in pairs[: a + 1]:
            v = eri_pair(basis[i], basis[j], basis[k], basis[l])
            for (p, q) in {(i, j), (j, i)}:
                for (r, s) in {(k, l), (l, k)}:
                    eri[p, q, r, s] = v
                    eri[r, s, p, q] = v
    enuc = 0.0
    for (za, ca), (zb, cb) in itertools.combinations(atoms, 2):
        enuc += za * zb / np.linalg.norm(np.asarray(ca) - np.asarray(cb))
    return S, T, V, eri, enuc


def rhf(S, Hcore, eri, n_electrons, max_iter=200, tol=1e-11):
    n = S.shape[0]
    nocc = n_electrons // 2
    sval, svec = np.linalg.eigh(S)
    X = svec @ np.diag(sval ** -0.5) @ svec.T
    F = Hcore.copy()
    D = np.zeros((n, n))
    e_old = 0.0
    for it in range(max_iter):
        Fp = X.T @ F @ X
        eps, Cp = np.linalg.eigh(Fp)
        C = X @ Cp
        Cocc = C[:, :nocc]
        D_new = 2.0 * Cocc @ Cocc.T
        D = D_new if it == 0 else 0.7 * D_new + 0.3 * D
        J = np.einsum("pqrs,rs->pq", eri, D)
        K = np.einsum("prqs,rs->pq", eri, D)
        F = Hcore + J - 0.5 * K
        e_elec = 0.5 * np.sum(D * (Hcore + F))
        if abs(e_elec - e_old) < tol and it > 3:
            break
        e_old = e_elec
    return e_elec, C, eps


def mo_integrals(Hcore, eri, C):
    h_mo = C.T @ Hcore @ C
    g_mo = np.einsum("pi,qj,pqrs,rk,sl->ijkl", C, C, eri, C, C, optimize=True)
    return h_mo, g_mo


# ---------------------------------------------------------------------------
# Determinant FCI over spin orbitals (independent of the Rust code path).
# ---------------------------------------------------------------------------

def fci_ground_energy(h_mo, g_mo, n_electrons, enuc):
    m = h_mo.shape[0]
    n_so = 2 * m
    na = n_electrons // 2
    nb = n_electrons - na

    # spin orbital p: spatial p//2... use blocked: alpha 0..m-1, beta m..2m-1
    def spatial(p):
        return p % m

    def spin(p):
        return p // m

    def h1(p, q):
        if spin(p) != spin(q):
            return 0.0
        return h_mo[spatial(p), spatial(q)]

    def h2(p, q, r, s):
        # physicists-with-swapped-tail convention: <pq|sr> = (ps|qr)
        if spin(p) != spin(s) or spin(q) != spin(r):
            return 0.0
        return g_mo[spatial(p), spatial(s), spatial(q), spatial(r)]

    alphas = [sum(1 << i for i in c) for c in itertools.combinations(range(m), na)]
    betas = [sum(1 << i for i in c) for c in itertools.combinations(range(m), nb)]
    dets = [(a << m) | b for b in betas for a in alphas]
    # NOTE: modes 0..m-1 are beta here? Keep it simple: full mask over 2m modes,
    # alpha block occupies bits 0..m-1, beta block bits m..2m-1.
    dets = []
    for ca in itertools.combinations(range(m), na):
        for cb in itertools.combinations(range(m), nb):
            mask = sum(1 << i for i in ca) | sum(1 << (m + i) for i in cb)
            dets.append(mask)
    index = {d: i for i, d in enumerate(dets)}
    dim = len(dets)
    H = np.zeros((dim, dim))

    def annihilate(mask, q):
        if not (mask >> q) & 1:
            return None
        sign = (-1) ** bin(mask & ((1 << q) - 1)).count("1")
        return mask & ~(1 << q), sign

    def create(mask, p):
        if (mask >> p) & 1:
            return None
        sign = (-1) ** bin(mask & ((1 << p) - 1)).count("1")
        return mask | (1 << p), sign

    for d, mask in enumerate(dets):
        occ = [p for p in range(n_so) if (mask >> p) & 1]
        # one-body
        for q in occ:
            r1 = annihilate(mask, q)
            m1, s1 = r1
            for p in range(n_so):
                if h1(p, q) == 0.0:
                    continue
                r2 = create(m1, p)
                if r2 is None:
                    continue
                m2, s2 = r2
                H[index[m2], d] += s1 * s2 * h1(p, q)
        # two-body: 0.5 * sum h2[p,q,r,s] a+p a+q ar as
        for s_ in occ:
            rs = annihilate(mask, s_)
            ms, ss = rs
            occ2 = [p for p in range(n_so) if (ms >> p) & 1]
            for r_ in occ2:
                rr = annihilate(ms, r_)
                mr, sr = rr
                for q_ in range(n_so):
                    cq = create(mr, q_)
                    if cq is None:
                        continue
                    mq, sq = cq
                    for p_ in range(n_so):
                        v = h2(p_, q_, r_, s_)
                        if v == 0.0:
                            continue
                        cp = create(mq, p_)
                        if cp is None:
                            continue
                        mp, sp = cp
                        H[index[mp], d] += 0.5 * ss * sr * sq * sp * v
    evals = np.linalg.eigvalsh(H)
    return evals[0] + enuc


# ---------------------------------------------------------------------------
# FCIDUMP writing
# ---------------------------------------------------------------------------

def write_fcidump(path, h_mo, g_mo, enuc, n_electrons, ms2=0, thresh=1e-14):
    m = h_mo.shape[0]
    lines = []
    orbsym = ",".join(["1"] * m)
    lines.append(f"&FCI NORB={m},NELEC={n_electrons},MS2={ms2},")
    lines.append(f" ORBSYM={orbsym},")
    lines.append(" ISYM=1,")
    lines.append("&END")
    seen = set()
    for i in range(m):
        for j in range(i + 1):
            for k in range(m):
                for l in range(k + 1):
                    if (i, j) < (k, l):
                        continue
                    v = g_mo[i, j, k, l]
                    if abs(v) < thresh:
                        continue
                    key = (i, j, k, l)
                    if key in seen:
                        continue
                    seen.add(key)
                    lines.append(f" {v:.16e} {i+1} {j+1} {k+1} {l+1}")
    for i in range(m):
        for j in range(i + 1):
            v = h_mo[i, j]
            if abs(v) < thresh:
                continue
            lines.append(f" {v:.16e} {i+1} {j+1} 0 0")
    lines.append(f" {enuc:.16e} 0 0 0 0")
    with open(path, "w") as f:
        f.write("\n".join(lines) + "\n")


def make_molecule(name, atoms_spec, n_electrons, outdir, tag, fci_max_so=12):
    S, T, V, eri, enuc = integrals(atoms_spec)
    Hcore = T + V
    e_elec, C, eps = rhf(S, Hcore, eri, n_electrons)
    e_scf = e_elec + enuc
    h_mo, g_mo = mo_integrals(Hcore, eri, C)
    m = h_mo.shape[0]
    e_fci = None
    if 2 * m <= fci_max_so:
        e_fci = fci_ground_energy(h_mo, g_mo, n_electrons, enuc)
    fname = f"{tag}.fcidump"
    write_fcidump(os.path.join(outdir, fname), h_mo, g_mo, enuc, n_electrons)
    meta = {
        "name": name,
        "file": fname,
        "n_spatial": m,
        "n_spin_orbitals": 2 * m,
        "n_electrons": n_electrons,
        "ms2": 0,
        "nuclear_repulsion": enuc,
        "scf_energy": e_scf,
        "fci_energy": e_fci,
    }
    print(f"{tag:28s} norb={m:2d} E_scf={e_scf:+.8f}"
          + (f" E_fci={e_fci:+.8f}" if e_fci is not None else ""))
    return meta


def diatomic(el1, el2, r_angstrom):
    r = r_angstrom * ANGSTROM_TO_BOHR
    return [(el1, np.array([0.0, 0.0, 0.0])), (el2, np.array([0.0, 0.0, r]))]


def h_chain(n_atoms, spacing_angstrom):
    d = spacing_angstrom * ANGSTROM_TO_BOHR
    return [("H", np.array([0.0, 0.0, i * d])) for i in range(n_atoms)]


def main():
    outdir = sys.argv[1] if len(sys.argv) > 1 else "fixtures"
    os.makedirs(outdir, exist_ok=True)
    metas = []
    manifests = {}

    h2_points = [0.3, 0.5, 0.7414, 1.0, 1.3, 1.7, 2.1, 2.5]
    rows = []
    for r in h2_points:
        tag = f"h2_{r:.4f}".replace(".", "p")
        meta = make_molecule("H2", diatomic("H", "H", r), 2, outdir, tag)
        meta["bond_length_angstrom"] = r
        metas.append(meta)
        rows.append((r, meta["file"]))
    manifests["h2_scan.manifest"] = rows

    lih_points = [1.0, 1.2, 1.4, 1.5949, 1.8, 2.2, 2.7, 3.2]
    rows = []
    for r in lih_points:
        tag = f"lih_{r:.4f}".replace(".", "p")
        meta = make_molecule("LiH", diatomic("Li", "H", r), 4, outdir, tag)
        meta["bond_length_angstrom"] = r
        metas.append(meta)
        rows.append((r, meta["file"]))
    manifests["lih_scan.manifest"] = rows

    # hydrogen chain family for term-count scaling (4 to 16 spin orbitals)
    rows = []
    spacing = 0.9
    for n_atoms, charge in [(2, 0), (3, 1), (4, 0), (5, 1), (6, 0), (7, 1), (8, 0)]:
        n_el = n_atoms - charge
        label = f"h{n_atoms}" + ("p" if charge else "")
        meta = make_molecule(label.upper(), h_chain(n_atoms, spacing), n_el, outdir,
                             f"chain_{label}")
        meta["bond_length_angstrom"] = spacing
        metas.append(meta)
        rows.append((spacing, meta["file"]))
    manifests["chain_family.manifest"] = rows

    for fname, rows in manifests.items():
        with open(os.path.join(outdir, fname), "w") as f:
            f.write("# bond_length_angstrom  fcidump_path\n")
            for r, path in rows:
                f.write(f"{r} {path}\n")

    with open(os.path.join(outdir, "metadata.json"), "w") as f:
        json.dump(metas, f, indent=2)
    print(f"wrote {len(metas)} fixtures to {outdir}/")


if __name__ == "__main__":
    main()
