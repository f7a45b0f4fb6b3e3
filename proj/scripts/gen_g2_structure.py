#!/usr/bin/env python3
"""Structure constants of g2 = Der(split octonions), written as liekit JSON.

Zorn vector-matrix model: x = (a, v, w, b) with a, b scalars and v, w in Q^3,
  (a,v,w,b)(a',v',w',b') = (aa' + v.w', a v' + b' v - w x w', a' w + b w' + v x v', bb' + w.v').
Coordinates 0 = a, 1..3 = v, 4..6 = w, 7 = b. The diagonal derivations form a
Cartan subalgebra, and every other basis element is a weight vector for it.
"""
import itertools
import json
import sys
from fractions import Fraction as F

N = 8


def cross(p, q):
    return [p[1] * q[2] - p[2] * q[1], p[2] * q[0] - p[0] * q[2], p[0] * q[1] - p[1] * q[0]]


def mul(x, y):
    a, v, w, b = x[0], x[1:4], x[4:7], x[7]
    a2, v2, w2, b2 = y[0], y[1:4], y[4:7], y[7]
    dot = lambda p, q: sum(s * t for s, t in zip(p, q))
    wx = cross(w, w2)
    vx = cross(v, v2)
    return ([a * a2 + dot(v, w2)]
            + [a * v2[i] + b2 * v[i] - wx[i] for i in range(3)]
            + [a2 * w[i] + b * w2[i] + vx[i] for i in range(3)]
            + [b * b2 + dot(w, v2)])


def unit(i):
    return [F(int(i == k)) for k in range(N)]


TABLE = [[mul(unit(i), unit(j)) for j in range(N)] for i in range(N)]


def nullspace(rows, ncols):
    rows = [r[:] for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [F(0)] * ncols
        v[f] = F(1)
        for i, c in enumerate(pivots):
            v[c] = -rows[i][f]
        basis.append(v)
    return basis


def derivations():
    # Unknown D(k, l) at index k*N + l; D(e_i e_j) = D(e_i) e_j + e_i D(e_j).
    eqs = []
    for i, j, out in itertools.product(range(N), range(N), range(N)):
        row = [F(0)] * (N * N)
        for k in range(N):
            row[out * N + k] += TABLE[i][j][k]
            row[k * N + i] -= TABLE[k][j][out]
            row[k * N + j] -= TABLE[i][k][out]
        if any(row):
            eqs.append(row)
    return nullspace(eqs, N * N)


def commutator(x, y):
    return [[sum(x[i][k] * y[k][j] - y[i][k] * x[k][j] for k in range(N)) for j in range(N)] for i in range(N)]


def main(path):
    ders = [[v[r * N:(r + 1) * N] for r in range(N)] for v in derivations()]
    assert len(ders) == 14, len(ders)
    # Diagonal parts of derivations are derivations; they span the torus.
    torus = []
    for d in ders:
        t = [[d[i][j] if i == j else F(0) for j in range(N)] for i in range(N)]
        if any(t[i][i] for i in range(N)):
            torus.append(t)
    # Reduce the torus candidates to an independent pair.
    flat = [[t[i][i] for i in range(N)] for t in torus]
    indep = []
    for f, t in zip(flat, torus):
        trial = [g for g, _ in indep] + [f]
        if len(trial) - len(nullspace([list(c) for c in zip(*trial)], len(trial))) == len(trial):
            indep.append((f, t))
    torus = [t for _, t in indep]
    assert len(torus) == 2
    weight = lambda i, j: tuple(t[i][i] - t[j][j] for t in torus)
    # Split every derivation into torus weight components; each component is a derivation.
    pieces = {}
    for d in ders:
        for i in range(N):
            for j in range(N):
                if i != j and d[i][j] != 0:
                    pieces.setdefault(weight(i, j), [])
        for w in list(pieces):
            comp = [[d[i][j] if i != j and weight(i, j) == w else F(0) for j in range(N)] for i in range(N)]
            if any(any(r) for r in comp):
                pieces[w].append(comp)
    basis, labels = [], []
    for w in sorted(pieces):
        vecs = [sum(m, []) for m in pieces[w]]
        rank_vecs = []
        for v in vecs:
            trial = rank_vecs + [v]
            rk = len(trial) - len(nullspace([list(c) for c in zip(*trial)], len(trial)))
            if rk == len(trial):
                rank_vecs.append(v)
        assert len(rank_vecs) == 1, (w, len(rank_vecs))
        basis.append([rank_vecs[0][r * N:(r + 1) * N] for r in range(N)])
        labels.append("x" + str(len(labels) + 1))
    assert len(basis) == 12
    cartan = [len(basis), len(basis) + 1]
    basis += torus
    labels += ["h1", "h2"]

    flat_basis = [sum(m, []) for m in basis]
    cols = [list(c) for c in zip(*flat_basis)]  # 64 x 14

    def coords(m):
        target = sum(m, [])
        aug = [cols[r] + [target[r]] for r in range(N * N)]
        sol = nullspace(aug, 15)
        sol = [s for s in sol if s[14] != 0]
        assert len(sol) == 1
        s = sol[0]
        return [-s[k] / s[14] for k in range(14)]

    brackets = []
    for i in range(14):
        for j in range(i + 1, 14):
            c = coords(commutator(basis[i], basis[j]))
            nz = {str(k): str(x) for k, x in enumerate(c) if x != 0}
            if nz:
                brackets.append({"i": i, "j": j, "coeffs": nz})
    with open(path, "w") as f:
        json.dump({"dim": 14, "basis": labels, "brackets": brackets, "cartan": cartan}, f, indent=1)
        f.write("\n")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "data/g2.json")
