#!/usr/bin/env python3
"""Write the bundled spin-model Hamiltonian files.

Term conventions match the in-library generators: open chains, couplings
listed bond by bond in ascending site order, field terms after the couplings.
"""

import json


def tfim(n, j=1.0, h=1.0):
    terms = []
    for i in range(n - 1):
        s = ["I"] * n
        s[i] = s[i + 1] = "Z"
        terms.append((-j, "".join(s)))
    for i in range(n):
        s = ["I"] * n
        s[i] = "X"
        terms.append((-h, "".join(s)))
    return terms


def xxz(n, j=1.0, delta=0.5):
    terms = []
    for i in range(n - 1):
        for letter, coef in (("X", j), ("Y", j), ("Z", j * delta)):
            s = ["I"] * n
            s[i] = s[i + 1] = letter
            terms.append((coef, "".join(s)))
    return terms


def write(path, terms, description, manifest_extra):
    with open(path, "w") as f:
        f.write(f"# {description}\n")
        for coef, letters in terms:
            f.write(f"{coef:.12f} {letters}\n")
    meta = {"n_qubits": len(terms[0][1]), "n_terms": len(terms),
            "generator": "data/scripts/generate_spin_models.py"}
    meta.update(manifest_extra)
    with open(path.rsplit(".", 1)[0] + ".manifest.json", "w") as f:
        json.dump(meta, f, indent=2)
        f.write("\n")
    print(f"wrote {path} ({len(terms)} terms)")


def main():
    for n in (2, 4, 6, 8):
        write(f"tfim_n{n}.txt", tfim(n),
              f"transverse-field Ising chain, n={n}, J=1, h=1, open boundary",
              {"model": "transverse_field_ising", "J": 1.0, "h": 1.0})
    for n in (12, 14):
        write(f"heisenberg_xxz_n{n}.txt", xxz(n),
              f"Heisenberg XXZ chain, n={n}, J=1, delta=0.5, open boundary",
              {"model": "heisenberg_xxz", "J": 1.0, "delta": 0.5})


if __name__ == "__main__":
    main()
