"""Independent brute-force Jones oracle used only by the test suite.

Expands every crossing of a braid word into its two smoothings (2^L states),
counts the loops of each fully smoothed trace closure with a union-find over
wire segments, and accumulates the state sum

    bracket = sum over states of  A^(sum of smoothing weights) * d^(loops - 1),
    jones_a = (-A^3)^writhe * bracket,        d = -A^2 - A^-2.

Everything here is deliberately self-contained: plain dict Laurent arithmetic
and no imports from the package under test, so agreement between this module
and the diagram-algebra implementation is a genuine cross-check.
"""

from __future__ import annotations


def padd(a: dict, b: dict) -> dict:
    out = dict(a)
    for e, c in b.items():
        c2 = out.get(e, 0) + c
        if c2:
            out[e] = c2
        else:
            out.pop(e, None)
    return out


def pmul(a: dict, b: dict) -> dict:
    out: dict = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = ea + eb
            c = out.get(e, 0) + ca * cb
            if c:
                out[e] = c
            else:
                out.pop(e, None)
    return out


def ppow(a: dict, n: int) -> dict:
    out = {0: 1}
    for _ in range(n):
        out = pmul(out, a)
    return out


D_POLY = {2: -1, -2: -1}  # loop weight d = -A^2 - A^-2


class _UnionFind:
    def __init__(self):
        self.parent: list[int] = []

    def make(self) -> int:
        self.parent.append(len(self.parent))
        return len(self.parent) - 1

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, x: int, y: int) -> None:
        self.parent[self.find(x)] = self.find(y)


def bruteforce_jones_a(letters: list[tuple[int, int]], strands: int) -> dict:
    """Jones polynomial (in the variable A) of the trace closure of a braid.

    letters: list of (index, exponent) with 1 <= index < strands, exponent +-1.
    Returns a dict mapping A-exponent -> integer coefficient.
    """
    n = strands
    length = len(letters)
    bracket: dict = {}
    for state in range(1 << length):
        uf = _UnionFind()
        start = [uf.make() for _ in range(n)]
        active = list(start)
        a_exp = 0
        for pos, (idx, sign) in enumerate(letters):
            cap = (state >> pos) & 1  # 1: cup-cap smoothing, 0: identity smoothing
            if cap:
                a_exp += sign
                uf.union(active[idx - 1], active[idx])
                w1, w2 = uf.make(), uf.make()
                uf.union(w1, w2)
                active[idx - 1], active[idx] = w1, w2
            else:
                a_exp -= sign
        for j in range(n):  # trace closure
            uf.union(start[j], active[j])
        loops = len({uf.find(x) for x in range(len(uf.parent))})
        bracket = padd(bracket, pmul({a_exp: 1}, ppow(D_POLY, loops - 1)))
    writhe = sum(sign for _, sign in letters)
    prefactor = {3 * writhe: (-1) ** (writhe % 2)}
    return pmul(prefactor, bracket)


def to_t_exponents(poly_a: dict) -> dict:
    """Substitute t = A^-4; requires every A-exponent divisible by 4."""
    out = {}
    for e, c in poly_a.items():
        if e % 4 != 0:
            raise ValueError(f"A-exponent {e} not divisible by 4")
        out[-e // 4] = c
    return out


if __name__ == "__main__":
    cases = {
        "unknot (b1 in B2)": ([(1, 1)], 2),
        "hopf (b1^2 in B2)": ([(1, 1), (1, 1)], 2),
        "trefoil (b1^3 in B2)": ([(1, 1), (1, 1), (1, 1)], 2),
        "figure-eight ((b1 b2^-1)^2 in B3)": ([(1, 1), (2, -1), (1, 1), (2, -1)], 3),
    }
    for name, (letters, strands) in cases.items():
        poly = bruteforce_jones_a(letters, strands)
        print(f"{name}: A-poly = {dict(sorted(poly.items()))}")
        try:
            print(f"  t-poly = {dict(sorted(to_t_exponents(poly).items()))}")
        except ValueError as exc:
            print(f"  t-poly unavailable: {exc}")
