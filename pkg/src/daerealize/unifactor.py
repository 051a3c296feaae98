"""Univariate factorization over Z for small degrees.

Classic Zassenhaus pipeline: factor modulo a good small prime (Berlekamp),
lift the modular factorization with quadratic Hensel steps past a coefficient
bound, then recombine subsets of modular factors by trial division.  Degrees
are capped by the caller, which keeps the subset stage tiny.

Dense polynomials are plain int lists, constant term first, trimmed.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import gcd

from .errors import UnsupportedError

_PRIMES = (
    3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67,
    71, 73, 79, 83, 89, 97, 101, 103, 107, 109, 113, 127, 131, 137, 139,
    149, 151, 157, 163, 167, 173, 179, 181, 191, 193, 197, 199, 211, 223,
    227, 229, 233, 239, 241, 251, 257, 263, 269, 271, 277, 281, 283, 293,
)


def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _deg(a: list[int]) -> int:
    return len(a) - 1


def _mod(a: list[int], m: int) -> list[int]:
    return _trim([c % m for c in a])


def _add(a, b, m):
    n = max(len(a), len(b))
    return _trim([((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)) % m
                  for i in range(n)])


def _sub(a, b, m):
    n = max(len(a), len(b))
    return _trim([((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % m
                  for i in range(n)])


def _mul(a, b, m):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] = (out[i + j] + ca * cb) % m
    return _trim(out)


def _divmod(a, b, m):
    """Division with remainder; lc(b) must be invertible mod m."""
    a = a[:]
    db, lb = _deg(b), b[-1]
    inv = pow(lb, -1, m)
    q = [0] * max(len(a) - db, 1)
    while _deg(a) >= db and a:
        d = _deg(a)
        c = (a[-1] * inv) % m
        q[d - db] = c
        for i in range(db + 1):
            a[d - db + i] = (a[d - db + i] - c * b[i]) % m
        _trim(a)
    return _trim(q), a


def _gcd_p(a, b, p):
    a, b = _mod(a, p), _mod(b, p)
    while b:
        a, b = b, _divmod(a, b, p)[1]
    if a:
        inv = pow(a[-1], -1, p)
        a = [(c * inv) % p for c in a]
    return a


def _ext_gcd_p(a, b, p):
    """(g, s, t) monic with s*a + t*b = g mod p."""
    r0, r1 = _mod(a, p), _mod(b, p)
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        q, r = _divmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, _sub(s0, _mul(q, s1, p), p)
        t0, t1 = t1, _sub(t0, _mul(q, t1, p), p)
    if r0:
        inv = pow(r0[-1], -1, p)
        r0 = [(c * inv) % p for c in r0]
        s0 = [(c * inv) % p for c in s0]
        t0 = [(c * inv) % p for c in t0]
    return r0, s0, t0


def _pow_mod(base, e, f, p):
    result = [1]
    base = _divmod(base, f, p)[1]
    while e:
        if e & 1:
            result = _divmod(_mul(result, base, p), f, p)[1]
        base = _divmod(_mul(base, base, p), f, p)[1]
        e >>= 1
    return result


def _deriv(a, m):
    return _trim([(i * a[i]) % m for i in range(1, len(a))])


def _berlekamp(f: list[int], p: int) -> list[list[int]]:
    """Irreducible monic factors of a monic squarefree f over GF(p)."""
    n = _deg(f)
    if n <= 1:
        return [f]
    # petit matrix: row i = x^(i*p) mod f
    xp = _pow_mod([0, 1], p, f, p)
    rows = [[1] + [0] * (n - 1)]
    cur = [1]
    for _ in range(1, n):
        cur = _divmod(_mul(cur, xp, p), f, p)[1]
        rows.append([cur[j] if j < len(cur) else 0 for j in range(n)])
    # nullspace of (Q - I)^T over GF(p)
    mat = [[(rows[i][j] - (1 if i == j else 0)) % p for i in range(n)] for j in range(n)]
    pivots = {}
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, n) if mat[i][c]), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        inv = pow(mat[r][c], -1, p)
        mat[r] = [(x * inv) % p for x in mat[r]]
        for i in range(n):
            if i != r and mat[i][c]:
                coef = mat[i][c]
                mat[i] = [(mat[i][j] - coef * mat[r][j]) % p for j in range(n)]
        pivots[c] = r
        r += 1
    basis = []
    for c in range(n):
        if c in pivots:
            continue
        vec = [0] * n
        vec[c] = 1
        for pc, pr in pivots.items():
            vec[pc] = (-mat[pr][c]) % p
        basis.append(_trim(vec[:]))
    nfactors = len(basis)
    factors = [f]
    for v in basis:
        if len(factors) == nfactors:
            break
        if _deg(v) < 1:
            continue
        nxt = []
        for w in factors:
            pieces = [w]
            for s in range(p):
                shifted = _sub(v, [s], p)
                new_pieces = []
                for piece in pieces:
                    g = _gcd_p(piece, shifted, p)
                    if 0 < _deg(g) < _deg(piece):
                        new_pieces.append(g)
                        new_pieces.append(_divmod(piece, g, p)[0])
                    else:
                        new_pieces.append(piece)
                pieces = new_pieces
            nxt.extend(pieces)
        factors = nxt
    return sorted(factors)


def _hensel_step(m, f, g, h, s, t):
    """One quadratic lift: mod m data to mod m*m, h stays monic."""
    mm = m * m
    e = _sub(_mod(f, mm), _mul(g, h, mm), mm)
    q, r = _divmod(_mul(s, e, mm), h, mm)
    g1 = _add(_add(g, _mul(t, e, mm), mm), _mul(q, g, mm), mm)
    h1 = _add(h, r, mm)
    b = _sub(_add(_mul(s, g1, mm), _mul(t, h1, mm), mm), [1], mm)
    c, d = _divmod(_mul(s, b, mm), h1, mm)
    s1 = _sub(s, d, mm)
    t1 = _sub(_sub(t, _mul(t, b, mm), mm), _mul(c, g1, mm), mm)
    return g1, h1, s1, t1


def _lift_tree(p, modulus, f, facs):
    """Monic factor lifts of f mod ``modulus``; f = lc(f)*prod(facs) mod p."""
    if len(facs) == 1:
        lc = f[-1] % modulus
        inv = pow(lc, -1, modulus)
        return [_mod([c * inv for c in f], modulus)]
    k = len(facs) // 2
    g = _mod([c * (f[-1] % p) for c in prod_p(facs[:k], p)], p)
    h = prod_p(facs[k:], p)
    one, s, t = _ext_gcd_p(g, h, p)
    if _deg(one) != 0:
        raise UnsupportedError("modular factors are not coprime")
    m = p
    while m < modulus:
        g, h, s, t = _hensel_step(m, f, g, h, s, t)
        m = m * m
    g, h = _mod(g, modulus), _mod(h, modulus)
    return (_lift_tree(p, modulus, g, facs[:k])
            + _lift_tree(p, modulus, h, facs[k:]))


def prod_p(facs, m):
    out = [1]
    for f in facs:
        out = _mul(out, f, m)
    return out


def _symmetric(a, m):
    half = m // 2
    return [c - m if c > half else c for c in a]


def _int_primitive(a: list[int]) -> list[int]:
    g = 0
    for c in a:
        g = gcd(g, abs(c))
    if g == 0:
        return a
    a = [c // g for c in a]
    if a[-1] < 0:
        a = [-c for c in a]
    return a


def _int_divides(a: list[int], b: list[int]) -> list[int] | None:
    """Quotient a/b over Z when the division is exact, else None."""
    r = [Fraction(c) for c in a]
    db = _deg(b)
    if db < 0:
        return None
    q = [Fraction(0)] * max(len(a) - db, 1)
    while True:
        while r and r[-1] == 0:
            r.pop()
        if not r or len(r) - 1 < db:
            break
        c = r[-1] / b[-1]
        d = len(r) - 1
        q[d - db] = c
        for i in range(db + 1):
            r[d - db + i] -= c * b[i]
    if r:
        return None
    if any(x.denominator != 1 for x in q):
        return None
    return _trim([int(x) for x in q])


def factor_squarefree_int(f: list[int]) -> list[list[int]]:
    """Irreducible factors over Z of a primitive squarefree int polynomial.

    Factors are primitive with positive leading coefficient, sorted.  The
    input must be nonconstant, primitive and squarefree.
    """
    f = _trim(f[:])
    n = _deg(f)
    if n <= 0:
        return []
    if f[-1] < 0:
        f = [-c for c in f]
    if n == 1:
        return [f]
    good_p = None
    for p in _PRIMES:
        if f[-1] % p == 0:
            continue
        fp = _mod(f, p)
        if _deg(fp) != n:
            continue
        if _deg(_gcd_p(fp, _deriv(fp, p), p)) == 0:
            good_p = p
            break
    if good_p is None:
        raise UnsupportedError("no usable prime for modular factorization")
    p = good_p
    lc_inv = pow(f[-1] % p, -1, p)
    monic_fp = _mod([c * lc_inv for c in f], p)
    modular = _berlekamp(monic_fp, p)
    if len(modular) == 1:
        return [f]
    # bound on coefficients of any factor times lc, then lift past it
    a_max = max(abs(c) for c in f)
    bound = (n + 1) * (2**n) * a_max * abs(f[-1])
    modulus = p
    while modulus <= 2 * bound:
        modulus *= modulus
    lifted = _lift_tree(p, modulus, _mod(f, modulus), modular)
    result = []
    remaining = f
    indices = list(range(len(lifted)))
    size = 1
    while 2 * size <= len(indices):
        found = True
        while found:
            found = False
            for combo in combinations(indices, size):
                cand = [remaining[-1] % modulus]
                for i in combo:
                    cand = _mul(cand, lifted[i], modulus)
                cand = _int_primitive(_symmetric(cand, modulus))
                if _deg(cand) < 1:
                    continue
                quo = _int_divides(remaining, cand)
                if quo is not None:
                    result.append(cand)
                    remaining = _int_primitive(quo)
                    indices = [i for i in indices if i not in combo]
                    found = 2 * size <= len(indices)
                    break
        size += 1
    if _deg(remaining) > 0:
        result.append(_int_primitive(remaining))
    return sorted(result)
