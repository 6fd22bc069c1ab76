# Copyright 2026 The dipnet Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Independent numpy/scipy oracle for the constants frozen into the C++ tests.

Shares no code with the library: states are built from kets, evolution uses
scipy's expm of the physical Hamiltonian, partial traces use einsum.
Run: python3 tests/oracles/derive.py
"""

import numpy as np
from scipy.linalg import expm

X = np.array([[0, 1], [1, 0]], dtype=complex)
Y = np.array([[0, -1j], [1j, 0]])
Z = np.diag([1.0, -1.0]).astype(complex)
I2 = np.eye(2, dtype=complex)


def ket(bits):
    v = np.zeros(2 ** len(bits), dtype=complex)
    v[int(bits, 2)] = 1
    return v


def proj(v):
    return np.outer(v, v.conj())


def ptrace(rho, keep, n):
    t = rho.reshape([2] * (2 * n))
    letters = "abcdefghijklmnop"
    rows = list(letters[:n])
    cols = list(letters[n:2 * n])
    for q in range(n):
        if q not in keep:
            cols[q] = rows[q]
    out = "".join(rows[q] for q in keep) + "".join(cols[q] for q in keep)
    d = 2 ** len(keep)
    return np.einsum("".join(rows) + "".join(cols) + "->" + out, t).reshape(d, d)


def ptranspose(rho, q, n):
    t = rho.reshape([2] * (2 * n))
    t = np.swapaxes(t, q, n + q)
    return t.reshape(2 ** n, 2 ** n)


def tnorm(a):
    return np.abs(np.linalg.eigvalsh(a)).sum()


def negativity(rho2):
    ev = np.linalg.eigvalsh(ptranspose(rho2, 1, 2))
    return 2 * -ev[ev < 0].sum()


def gneg(rho3, q):
    return max(0.0, tnorm(ptranspose(rho3, q, 3)) - 1)


def pneg(rho3, i, j):
    return max(0.0, tnorm(ptranspose(ptrace(rho3, [i, j], 3), 1, 2)) - 1)


def tangle(rho3):
    na, nb, nc = (gneg(rho3, q) for q in range(3))
    ab, ac, bc = pneg(rho3, 0, 1), pneg(rho3, 0, 2), pneg(rho3, 1, 2)
    return ((na ** 2 - ab ** 2 - ac ** 2) + (nb ** 2 - ab ** 2 - bc ** 2) + (nc ** 2 - ac ** 2 - bc ** 2)) / 3


def l1(rho1, P):
    _, v = np.linalg.eigh(P)
    r = v.conj().T @ rho1 @ v
    return abs(r[0, 1]) + abs(r[1, 0])


def naqc(rho2):
    total = 0.0
    paulis = [X, Y, Z]
    for i, Pi in enumerate(paulis):
        for a in (1, -1):
            Pr = np.kron((I2 + a * Pi) / 2, I2)
            m = ptrace(Pr @ rho2 @ Pr, [1], 2)
            p = np.trace(m).real
            if p < 1e-14:
                continue
            for j, Pj in enumerate(paulis):
                if j != i:
                    total += p * l1(m / p, Pj)
    return total / 2


def naqc_degree(rho2):
    return max(0.0, (naqc(rho2) - np.sqrt(6)) / (3 - np.sqrt(6)))


singlet = proj((ket("01") - ket("10")) / np.sqrt(2))


def werner(x):
    return x * singlet + (1 - x) * np.eye(4) / 4


def hamiltonian(delta, eps):
    XX, YY, ZZ = np.kron(X, X), np.kron(Y, Y), np.kron(Z, Z)
    # Dipolar coupling with D_x = -delta/12 + eps/4, D_y = -delta/12 - eps/4, D_z = delta/6.
    return (-delta / 12 + eps / 4) * XX + (-delta / 12 - eps / 4) * YY + (delta / 6) * ZZ


def network_after(pair1, pair2, tau, eps_tilde, delta=1.3):
    t = -12 * tau / delta
    U = expm(-1j * hamiltonian(delta, eps_tilde * delta) * t)
    Ufull = np.kron(np.kron(I2, U), I2)
    rho = np.kron(pair1, pair2)
    return Ufull @ rho @ Ufull.conj().T


def main():
    w = (ket("001") + ket("010") + ket("100")) / np.sqrt(3)
    ghz = (ket("000") + ket("111")) / np.sqrt(2)
    W, G = proj(w), proj(ghz)
    print("W global negativity focus0  %.15f" % gneg(W, 0))
    print("W pairwise negativity (0,1) %.15f" % pneg(W, 0, 1))
    print("W pi-tangle                 %.15f" % tangle(W))
    print("GHZ global negativity       %.15f" % gneg(G, 0))
    print("GHZ pi-tangle               %.15f" % tangle(G))
    print("Werner 0.5 negativity       %.15f" % negativity(werner(0.5)))
    print("Werner 0.5 naqc average     %.15f" % naqc(werner(0.5)))
    print("Werner 0.9 naqc average     %.15f" % naqc(werner(0.9)))
    print("Werner 0.9 naqc degree      %.15f" % naqc_degree(werner(0.9)))
    print("l1 (I+0.6X)/2 in y          %.15f" % l1((I2 + 0.6 * X) / 2, Y))

    # Evolved MM network at one parameter point, through the physical Hamiltonian.
    tau, eps = 0.1, 0.1
    rho = network_after(singlet, singlet, tau, eps)
    r12 = ptrace(rho, [0, 1], 4)
    r123 = ptrace(rho, [0, 1, 2], 4)
    print("MM tau=0.1 eps=0.1 rho12 negativity  %.15f" % negativity(r12))
    print("MM tau=0.1 eps=0.1 rho12 naqc degree %.15f" % naqc_degree(r12))
    print("MM tau=0.1 eps=0.1 rho12[0,0]        %.15f" % r12[0, 0].real)
    print("MM tau=0.1 eps=0.1 rho12[1,2]        %.15f" % r12[1, 2].real)
    print("MM tau=0.1 eps=0.1 rho123 tangle     %.15f" % tangle(r123))

    rho = network_after(singlet, singlet, 7.33, 0.0)
    print("MM tau=7.33 eps=0 rho13 negativity   %.15f" % negativity(ptrace(rho, [0, 2], 4)))

    wx = werner(0.7)
    rho = network_after(wx, singlet, 0.2, -0.2)
    r12 = ptrace(rho, [0, 1], 4)
    print("WS tau=0.2 eps=-0.2 rho12 negativity %.15f" % negativity(r12))

    # Fixed Hermitian matrix for the eigensolver.
    A = np.array([[2, 1 - 1j, 0.5j, 0], [1 + 1j, -1, 0.25, 2j], [-0.5j, 0.25, 0.5, 1], [0, -2j, 1, 3]])
    print("eigenvalues of A", " ".join("%.15f" % v for v in np.linalg.eigvalsh(A)))


if __name__ == "__main__":
    main()
