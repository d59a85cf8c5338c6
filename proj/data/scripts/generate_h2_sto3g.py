#!/usr/bin/env python3
"""Generate the bundled H2 qubit Hamiltonian (STO-3G, Jordan-Wigner, 4 qubits).

All integrals are closed-form for s-type Gaussians, so no external chemistry
package is needed. The second-quantized Hamiltonian is built as a dense 16x16
matrix in the Jordan-Wigner occupation basis and projected onto the Pauli
basis. Spin-orbital ordering is interleaved: [MO0a, MO0b, MO1a, MO1b], with
spin orbital k mapped to qubit k and qubit 0 the least-significant bit of the
amplitude index.

Usage: generate_h2_sto3g.py [bond_length_angstrom] [outfile]
"""

import json
import sys
from itertools import product

import numpy as np
from scipy.special import erf

ANGSTROM_TO_BOHR = 1.8897259886

# STO-3G hydrogen 1s: exponents and contraction coefficients
H_EXPONENTS = np.array([3.42525091, 0.62391373, 0.16885540])
H_COEFFS = np.array([0.15432897, 0.53532814, 0.44463454])


def boys0(t):
    t = np.asarray(t, dtype=float)
    small = t < 1e-12
    safe = np.where(small, 1.0, t)
    return np.where(small, 1.0, 0.5 * np.sqrt(np.pi / safe) * erf(np.sqrt(safe)))


def primitive_norm(alpha):
    return (2.0 * alpha / np.pi) ** 0.75


def overlap_ss(a, ra, b, rb):
    p = a + b
    ab2 = np.dot(ra - rb, ra - rb)
    return (np.pi / p) ** 1.5 * np.exp(-a * b / p * ab2)


def kinetic_ss(a, ra, b, rb):
    p = a + b
    mu = a * b / p
    ab2 = np.dot(ra - rb, ra - rb)
    return mu * (3.0 - 2.0 * mu * ab2) * (np.pi / p) ** 1.5 * np.exp(-mu * ab2)


def nuclear_ss(a, ra, b, rb, rc, z):
    p = a + b
    mu = a * b / p
    ab2 = np.dot(ra - rb, ra - rb)
    rp = (a * ra + b * rb) / p
    pc2 = np.dot(rp - rc, rp - rc)
    return -z * 2.0 * np.pi / p * np.exp(-mu * ab2) * boys0(p * pc2)


def eri_ssss(a, ra, b, rb, c, rc, d, rd):
    p = a + b
    q = c + d
    ab2 = np.dot(ra - rb, ra - rb)
    cd2 = np.dot(rc - rd, rc - rd)
    rp = (a * ra + b * rb) / p
    rq = (c * rc + d * rd) / q
    pq2 = np.dot(rp - rq, rp - rq)
    pref = 2.0 * np.pi ** 2.5 / (p * q * np.sqrt(p + q))
    return pref * np.exp(-a * b / p * ab2 - c * d / q * cd2) * boys0(p * q / (p + q) * pq2)


def contracted(fn, centers, idx, *extra):
    """Contract a primitive integral over STO-3G shells at the given centers."""
    total = 0.0
    for prims in product(range(3), repeat=len(idx)):
        coef = 1.0
        args = []
        for k, (shell, prim) in enumerate(zip(idx, prims)):
            a = H_EXPONENTS[prim]
            coef *= H_COEFFS[prim] * primitive_norm(a)
            args.extend([a, centers[shell]])
        total += coef * fn(*args, *extra)
    return total


def build_ao_integrals(centers, charges):
    n = len(centers)
    s = np.zeros((n, n))
    t = np.zeros((n, n))
    v = np.zeros((n, n))
    for i in range(n):
        for j in range(n):
            s[i, j] = contracted(overlap_ss, centers, (i, j))
            t[i, j] = contracted(kinetic_ss, centers, (i, j))
            for rc, z in zip(centers, charges):
                v[i, j] += contracted(nuclear_ss, centers, (i, j), rc, z)
    eri = np.zeros((n, n, n, n))
    for i, j, k, l in product(range(n), repeat=4):
        eri[i, j, k, l] = contracted(eri_ssss, centers, (i, j, k, l))
    return s, t + v, eri


def jordan_wigner_ladder(n_modes):
    """Dense annihilation operators a_k with qubit k = bit k of the index."""
    dim = 1 << n_modes
    ops = []
    for k in range(n_modes):
        a = np.zeros((dim, dim))
        for state in range(dim):
            if state & (1 << k):
                sign = (-1) ** bin(state & ((1 << k) - 1)).count("1")
                a[state ^ (1 << k), state] = sign
        ops.append(a)
    return ops


PAULIS = {
    "I": np.eye(2, dtype=complex),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
}


def pauli_matrix(letters):
    """letters[k] acts on qubit k (bit k). kron order: highest qubit leftmost."""
    m = np.eye(1, dtype=complex)
    for letter in letters:
        m = np.kron(PAULIS[letter], m)
    return m


def main():
    bond_angstrom = float(sys.argv[1]) if len(sys.argv) > 1 else 0.50
    outfile = sys.argv[2] if len(sys.argv) > 2 else "h2_sto3g_jw.txt"
    r = bond_angstrom * ANGSTROM_TO_BOHR
    centers = [np.zeros(3), np.array([0.0, 0.0, r])]
    charges = [1.0, 1.0]

    s, hcore, eri = build_ao_integrals(centers, charges)
    e_nuc = charges[0] * charges[1] / r

    # Exact RHF MOs for the symmetric dimer: gerade/ungerade combinations.
    c_g = np.array([1.0, 1.0]) / np.sqrt(2.0 * (1.0 + s[0, 1]))
    c_u = np.array([1.0, -1.0]) / np.sqrt(2.0 * (1.0 - s[0, 1]))
    mo = np.column_stack([c_g, c_u])

    h_mo = mo.T @ hcore @ mo
    eri_mo = np.einsum("pi,qj,rk,sl,pqrs->ijkl", mo, mo, mo, mo, eri)

    # Spin orbitals, interleaved: 2p + spin (0 = alpha, 1 = beta)
    n_so = 4
    def spatial(so):
        return so // 2
    def spin(so):
        return so % 2

    a_ops = jordan_wigner_ladder(n_so)
    dim = 1 << n_so
    h = np.zeros((dim, dim), dtype=complex) + e_nuc * np.eye(dim)
    for p in range(n_so):
        for q in range(n_so):
            if spin(p) != spin(q):
                continue
            h += h_mo[spatial(p), spatial(q)] * (a_ops[p].T @ a_ops[q])
    for p, q, rr, ss_ in product(range(n_so), repeat=4):
        if spin(p) != spin(ss_) or spin(q) != spin(rr):
            continue
        # <pq|rs> = (ps|qr) in chemist notation over spatial parts
        val = eri_mo[spatial(p), spatial(ss_), spatial(q), spatial(rr)]
        h += 0.5 * val * (a_ops[p].T @ a_ops[q].T @ a_ops[rr] @ a_ops[ss_])

    assert np.allclose(h, h.conj().T)

    terms = []
    for letters in product("IXYZ", repeat=n_so):
        coef = np.trace(pauli_matrix(letters) @ h) / dim
        assert abs(coef.imag) < 1e-10
        if abs(coef.real) > 1e-12:
            terms.append(("".join(letters), coef.real))

    evals = np.linalg.eigvalsh(h)
    fci = evals[0]

    with open(outfile, "w") as f:
        f.write("# H2 / STO-3G / Jordan-Wigner, interleaved spin orbitals\n")
        f.write(f"# bond length {bond_angstrom} A, generated by {sys.argv[0].split('/')[-1]}\n")
        for letters, coef in terms:
            f.write(f"{coef:.12f} {letters}\n")

    manifest = {
        "molecule": "H2",
        "geometry": f"H 0 0 0; H 0 0 {bond_angstrom} (angstrom)",
        "basis": "STO-3G",
        "mapping": "jordan-wigner, interleaved spin orbitals, qubit0 = LSB",
        "n_qubits": n_so,
        "n_terms": len(terms),
        "reference_energy_ha": round(float(fci), 12),
        "generator": "data/scripts/generate_h2_sto3g.py",
    }
    with open(outfile.rsplit(".", 1)[0] + ".manifest.json", "w") as f:
        json.dump(manifest, f, indent=2)
        f.write("\n")

    print(f"wrote {outfile}: {len(terms)} terms, FCI = {fci:.8f} Ha, E_nuc = {e_nuc:.8f}")


if __name__ == "__main__":
    main()
