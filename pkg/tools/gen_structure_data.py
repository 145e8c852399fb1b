#!/usr/bin/env python3
"""Regenerate the bundled Lie-superalgebra structure files.

Each algebra is realized by supermatrices on C^(2|m) (or C^(2|2) for the
quotient case), with the invariant form given by the supertrace; the
script extracts structure constants, validates them, and writes the
.alg files consumed by supervir.walgebra.

Run from the repository root:  python3 tools/gen_structure_data.py
"""

from __future__ import annotations

import sys
from fractions import Fraction
from pathlib import Path

OUT_DIR = Path(__file__).resolve().parent.parent / "src" / "supervir" / "data"

Matrix = tuple[tuple[Fraction, ...], ...]


def zeros(n: int) -> list[list[Fraction]]:
    return [[Fraction(0)] * n for _ in range(n)]


def unit(n: int, i: int, j: int) -> Matrix:
    m = zeros(n)
    m[i][j] = Fraction(1)
    return freeze(m)


def freeze(m) -> Matrix:
    return tuple(tuple(row) for row in m)


def madd(a: Matrix, b: Matrix, ca=1, cb=1) -> Matrix:
    n = len(a)
    return freeze([[ca * a[i][j] + cb * b[i][j] for j in range(n)] for i in range(n)])


def mmul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    out = zeros(n)
    for i in range(n):
        for k in range(n):
            if a[i][k]:
                for j in range(n):
                    if b[k][j]:
                        out[i][j] += a[i][k] * b[k][j]
    return freeze(out)


def scale(a: Matrix, c) -> Matrix:
    return freeze([[Fraction(c) * x for x in row] for row in a])


def supertrace(a: Matrix, parities: tuple[int, ...]) -> Fraction:
    return sum((a[i][i] if parities[i] == 0 else -a[i][i]) for i in range(len(a)))


def supercomm(a: Matrix, b: Matrix, pa: int, pb: int) -> Matrix:
    sign = -1 if (pa and pb) else 1
    return madd(mmul(a, b), mmul(b, a), 1, -sign)


class Algebra:
    def __init__(self, name: str, basis: list[Matrix], parities: list[int],
                 space_parities: tuple[int, ...], triple: tuple[int, int, int],
                 symbols: list[str], project=None):
        self.name = name
        self.basis = basis
        self.parities = parities
        self.space_parities = space_parities
        self.triple = triple
        self.symbols = symbols
        self.project = project or (lambda m: m)
        self.dim = len(basis)

    def coordinates(self, m: Matrix) -> list[Fraction]:
        """Exact coordinates of m in the basis (asserting membership)."""
        m = self.project(m)
        n = len(m)
        rows = n * n
        aug = [[self.basis[c][i][j] for c in range(self.dim)] + [m[i][j]]
               for i in range(n) for j in range(n)]
        # gaussian elimination
        r = 0
        where = [-1] * self.dim
        for col in range(self.dim):
            sel = None
            for rr in range(r, rows):
                if aug[rr][col] != 0:
                    sel = rr
                    break
            if sel is None:
                continue
            aug[r], aug[sel] = aug[sel], aug[r]
            piv = aug[r][col]
            aug[r] = [x / piv for x in aug[r]]
            for rr in range(rows):
                if rr != r and aug[rr][col] != 0:
                    f = aug[rr][col]
                    aug[rr] = [x - f * y for x, y in zip(aug[rr], aug[r])]
            where[col] = r
            r += 1
        coords = [Fraction(0)] * self.dim
        for col in range(self.dim):
            if where[col] >= 0:
                coords[col] = aug[where[col]][-1]
        # consistency: rows beyond rank must have zero rhs
        for rr in range(rows):
            if all(aug[rr][c] == 0 for c in range(self.dim)) and aug[rr][-1] != 0:
                raise AssertionError(f"{self.name}: bracket left the span of the basis")
        return coords

    def bracket_table(self):
        table = {}
        for i in range(self.dim):
            for j in range(self.dim):
                br = supercomm(self.basis[i], self.basis[j], self.parities[i], self.parities[j])
                br = self.project(br)
                coords = self.coordinates(br)
                entries = {k: c for k, c in enumerate(coords) if c != 0}
                if entries:
                    table[(i, j)] = entries
        return table

    def form_matrix(self):
        out = {}
        for i in range(self.dim):
            for j in range(self.dim):
                v = supertrace(mmul(self.basis[i], self.basis[j]), self.space_parities)
                if v != 0:
                    out[(i, j)] = v
        return out


def sp2_block(n: int):
    """e, x, f embedded in the first 2x2 block of an n x n space."""
    e = unit(n, 0, 1)
    f = unit(n, 1, 0)
    x = madd(unit(n, 0, 0), unit(n, 1, 1), Fraction(1, 2), Fraction(-1, 2))
    return e, x, f


def build_spo2m(m: int) -> Algebra:
    """spo(2|m): symplectic on the even 2-space, orthogonal on the odd m-space."""
    n = 2 + m
    space_par = (0, 0) + (1,) * m
    e, x, f = sp2_block(n)
    basis = [e, x, f]
    symbols = ["e", "x", "f"]
    parities = [0, 0, 0]
    for a in range(m):
        for b in range(a + 1, m):
            basis.append(madd(unit(n, 2 + a, 2 + b), unit(n, 2 + b, 2 + a), 1, -1))
            symbols.append(f"t{a}{b}")
            parities.append(0)
    # odd part: upper block B = E_{s,t}, lower block C = B^T J
    jmat = ((Fraction(0), Fraction(1)), (Fraction(-1), Fraction(0)))
    for s in range(2):
        for t in range(m):
            mat = zeros(n)
            mat[s][2 + t] = Fraction(1)
            # C = B^T J: C[t'][s'] = sum_k B[k][t'] J[k][s']
            for tp in range(m):
                for sp in range(2):
                    v = sum(
                        (Fraction(1) if (k == s and tp == t) else Fraction(0)) * jmat[k][sp]
                        for k in range(2)
                    )
                    if v:
                        mat[2 + tp][sp] = v
            basis.append(freeze(mat))
            symbols.append(("u" if s == 0 else "v") + str(t))
            parities.append(1)
    return Algebra(f"spo(2|{m})", basis, parities, space_par, (0, 1, 2), symbols)


def build_sl2() -> Algebra:
    n = 2
    e, x, f = sp2_block(n)
    return Algebra("sl2", [e, x, f], [0, 0, 0], (0, 0), (0, 1, 2), ["e", "x", "f"])


def build_psl22() -> Algebra:
    n = 4
    space_par = (0, 0, 1, 1)
    e, x, f = sp2_block(n)
    # second even sl2 block (indices 2,3)
    ep = unit(n, 2, 3)
    fp = unit(n, 3, 2)
    hp = madd(unit(n, 2, 2), unit(n, 3, 3), Fraction(1, 2), Fraction(-1, 2))
    ident = freeze([[Fraction(1) if i == j else Fraction(0) for j in range(n)] for i in range(n)])

    def project(mat: Matrix) -> Matrix:
        # remove the central multiple of the identity: the diagonal of any
        # supertraceless matrix decomposes over x, hp and the identity
        gamma = (mat[0][0] + mat[1][1]) / 2
        if gamma == 0:
            return mat
        return madd(mat, ident, 1, -gamma)

    basis = [e, x, f, ep, hp, fp]
    symbols = ["e", "x", "f", "ep", "hp", "fp"]
    parities = [0, 0, 0, 0, 0, 0]
    for i in (0, 1):
        for j in (2, 3):
            basis.append(unit(n, i, j))
            symbols.append(f"o{i}{j}")
            parities.append(1)
            basis.append(unit(n, j, i))
            symbols.append(f"o{j}{i}")
            parities.append(1)
    return Algebra("psl(2|2)", basis, parities, space_par, (0, 1, 2), symbols, project=project)


def validate(alg: Algebra, table, form):
    dim = alg.dim
    par = alg.parities

    def brk(i, j):
        return table.get((i, j), {})

    def brk_vec(i, vec: dict[int, Fraction]) -> dict[int, Fraction]:
        out: dict[int, Fraction] = {}
        for j, c in vec.items():
            for k, c2 in brk(i, j).items():
                out[k] = out.get(k, Fraction(0)) + c * c2
        return {k: v for k, v in out.items() if v}

    # super-antisymmetry
    for (i, j), entries in table.items():
        sign = -1 if (par[i] and par[j]) else 1
        other = brk(j, i)
        for k, c in entries.items():
            assert other.get(k, Fraction(0)) == -sign * c, (alg.name, "antisymmetry", i, j)
    # Jacobi superidentity
    for i in range(dim):
        for j in range(dim):
            for k in range(dim):
                lhs = brk_vec(i, brk(j, k))
                rhs1 = {}
                for l, c in brk(i, j).items():
                    for t, c2 in brk(l, k).items():
                        rhs1[t] = rhs1.get(t, Fraction(0)) + c * c2
                sgn = -1 if (par[i] and par[j]) else 1
                rhs2 = brk_vec(j, brk(i, k))
                total = dict(lhs)
                for t, c in rhs1.items():
                    total[t] = total.get(t, Fraction(0)) - c
                for t, c in rhs2.items():
                    total[t] = total.get(t, Fraction(0)) - sgn * c
                assert all(v == 0 for v in total.values()), (alg.name, "jacobi", i, j, k)
    # form: even, supersymmetric, invariant
    for (i, j), v in form.items():
        assert par[i] == par[j], (alg.name, "form parity", i, j)
        sgn = -1 if (par[i] and par[j]) else 1
        assert form.get((j, i), Fraction(0)) == sgn * v, (alg.name, "supersymmetry", i, j)
    def B(i, j):
        return form.get((i, j), Fraction(0))
    for i in range(dim):
        for j in range(dim):
            for k in range(dim):
                lhs = sum(c * B(l, k) for l, c in brk(i, j).items())
                rhs = sum(c * B(i, l) for l, c in brk(j, k).items())
                assert lhs == rhs, (alg.name, "invariance", i, j, k)
    # triple normalization
    ei, xi, fi = alg.triple
    assert brk(xi, ei) == {ei: Fraction(1)}, (alg.name, "[x,e]=e")
    assert brk(xi, fi) == {fi: Fraction(-1)}, (alg.name, "[x,f]=-f")
    assert brk(ei, fi) == {xi: Fraction(2)}, (alg.name, "[e,f]=2x")
    assert B(xi, xi) == Fraction(1, 2), (alg.name, "B(x,x)=1/2")
    print(f"  {alg.name}: dim {dim}, validated")


def casimir_eigenvalue(alg: Algebra, table, form) -> Fraction:
    """Casimir in the adjoint representation; asserts it is scalar."""
    dim = alg.dim
    bm = [[form.get((i, j), Fraction(0)) for j in range(dim)] for i in range(dim)]
    # dual basis: u^j = sum_k inv[k][j] b_k with B(b_i, u^j) = delta_ij
    aug = [row[:] + [Fraction(1) if r == c else Fraction(0) for c in range(dim)]
           for r, row in enumerate(bm)]
    for col in range(dim):
        sel = next(r for r in range(col, dim) if aug[r][col] != 0)
        aug[col], aug[sel] = aug[sel], aug[col]
        piv = aug[col][col]
        aug[col] = [v / piv for v in aug[col]]
        for r in range(dim):
            if r != col and aug[r][col] != 0:
                fct = aug[r][col]
                aug[r] = [v - fct * w for v, w in zip(aug[r], aug[col])]
    inv = [[aug[r][dim + c] for c in range(dim)] for r in range(dim)]

    def ad(i, vec):
        out = {}
        for j, c in vec.items():
            for k, c2 in table.get((i, j), {}).items():
                out[k] = out.get(k, Fraction(0)) + c * c2
        return {k: v for k, v in out.items() if v}

    eig = None
    for a in range(dim):
        acc = {}
        for i in range(dim):
            # u^i = sum_k inv[k][i] b_k; odd pairs enter with a minus sign
            sgn = -1 if alg.parities[i] else 1
            inner = {}
            for k in range(dim):
                if inv[k][i]:
                    for t, c in ad(k, {a: Fraction(1)}).items():
                        inner[t] = inner.get(t, Fraction(0)) + inv[k][i] * c
            for t, c in ad(i, inner).items():
                acc[t] = acc.get(t, Fraction(0)) + sgn * c
        acc = {k: v for k, v in acc.items() if v}
        lam = acc.get(a, Fraction(0))
        rest = {k: v for k, v in acc.items() if k != a}
        assert not rest, (alg.name, "casimir not scalar", a, rest)
        if eig is None:
            eig = lam
        assert lam == eig, (alg.name, "casimir eigenvalue varies", a)
    return eig or Fraction(0)


def emit(alg: Algebra, table, form, path: Path):
    lines = [f"# structure constants for {alg.name} (supertrace form, B(x,x)=1/2)"]
    lines.append(f"name {alg.name}")
    lines.append("symbols " + " ".join(alg.symbols))
    lines.append("parity " + " ".join(str(p) for p in alg.parities))
    lines.append(f"triple {alg.triple[0]} {alg.triple[1]} {alg.triple[2]}")
    lines.append("real_form conjugation")
    for (i, j), entries in sorted(table.items()):
        for k, c in sorted(entries.items()):
            lines.append(f"bracket {i} {j} {k} {c}")
    for (i, j), v in sorted(form.items()):
        lines.append(f"form {i} {j} {v}")
    path.write_text("\n".join(lines) + "\n")
    print(f"  wrote {path}")


def main():
    OUT_DIR.mkdir(parents=True, exist_ok=True)
    algebras = [
        ("sl2.alg", build_sl2()),
        ("spo2_1.alg", build_spo2m(1)),
        ("spo2_2.alg", build_spo2m(2)),
        ("spo2_3.alg", build_spo2m(3)),
        ("psl2_2.alg", build_psl22()),
    ]
    for fname, alg in algebras:
        table = alg.bracket_table()
        form = alg.form_matrix()
        validate(alg, table, form)
        h = casimir_eigenvalue(alg, table, form)
        print(f"  {alg.name}: casimir eigenvalue {h} -> dual coxeter {h/2}")
        emit(alg, table, form, OUT_DIR / fname)


if __name__ == "__main__":
    sys.exit(main())
