"""Integer factorization helpers sized for the magnitudes the search meets.

Deterministic Miller-Rabin (valid far beyond 64 bits with the fixed base set),
Brent-cycle Pollard rho, divisor enumeration, and representations of an
integer as an ordered sum of two squares via Gaussian-integer factorization.
Everything is exact and stdlib-only.
"""

from __future__ import annotations

from math import gcd, isqrt
from random import Random

__all__ = [
    "is_probable_prime",
    "factorize",
    "divisors",
    "sqrt_minus_one_mod",
    "two_square_reps",
]

# Deterministic for every n below 3.3 * 10^24, which covers all inputs the
# package produces by a wide margin.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)


def is_probable_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n == p:
            return True
        if n % p == 0:
            return False
    d = n - 1
    r = (d & -d).bit_length() - 1
    d >>= r
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _brent_rho(n: int, rng: Random) -> int:
    """One nontrivial factor of composite odd n."""
    if n % 2 == 0:
        return 2
    while True:
        y = rng.randrange(1, n)
        c = rng.randrange(1, n)
        m = 128
        g = r = q = 1
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = gcd(q, n)
                k += m
            r <<= 1
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = gcd(abs(x - ys), n)
        if g != n:
            return g


def factorize(n: int) -> dict[int, int]:
    """Prime factorization of n >= 1 as {prime: exponent}."""
    if n < 1:
        raise ValueError("factorize expects a positive integer")
    out: dict[int, int] = {}
    for p in _SMALL_PRIMES:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    if n == 1:
        return out
    rng = Random(0x5EED ^ n)
    stack = [n]
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_probable_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        r = isqrt(m)
        if r * r == m:
            stack.extend((r, r))
            continue
        d = _brent_rho(m, rng)
        stack.extend((d, m // d))
    return out


def divisors(n: int) -> list[int]:
    """Sorted positive divisors of n >= 1."""
    divs = [1]
    for p, e in factorize(n).items():
        pk = 1
        extended = []
        for _ in range(e):
            pk *= p
            extended.extend(d * pk for d in divs)
        divs.extend(extended)
    return sorted(divs)


def sqrt_minus_one_mod(p: int) -> int:
    """A square root of -1 modulo a prime p congruent to 1 mod 4."""
    if p % 4 != 1:
        raise ValueError("p must be 1 mod 4")
    a = 2
    while pow(a, (p - 1) // 2, p) != p - 1:
        a += 1
    return pow(a, (p - 1) // 4, p)


def _gaussian_gcd(z, w):
    """gcd in Z[i] by Euclidean division with rounded quotients."""
    while w != (0, 0):
        (a, b), (c, d) = z, w
        norm = c * c + d * d
        # round((a+bi)(c-di)/norm) componentwise
        re_num = a * c + b * d
        im_num = b * c - a * d
        qr = (2 * re_num + norm) // (2 * norm)
        qi = (2 * im_num + norm) // (2 * norm)
        rr = a - (qr * c - qi * d)
        ri = b - (qr * d + qi * c)
        z, w = w, (rr, ri)
    return z


def _gaussian_mul(z, w):
    (a, b), (c, d) = z, w
    return (a * c - b * d, a * d + b * c)


def two_square_reps(n: int) -> list[tuple[int, int]]:
    """All (r, s) with 0 <= r <= s and r^2 + s^2 = n, in ascending order.

    Empty when some prime 3 mod 4 divides n to an odd power.
    """
    if n < 0:
        return []
    if n == 0:
        return [(0, 0)]
    fac = factorize(n)
    real = 1
    gauss_parts = []
    two_exp = 0
    for p, e in sorted(fac.items()):
        if p == 2:
            two_exp = e
        elif p % 4 == 3:
            if e & 1:
                return []
            real *= p ** (e // 2)
        else:
            x = sqrt_minus_one_mod(p)
            pi = _gaussian_gcd((p, 0), (x, 1))
            gauss_parts.append((pi, e))
    base = (real, 0)
    for _ in range(two_exp):
        base = _gaussian_mul(base, (1, 1))
    reps = {base}
    for pi, e in gauss_parts:
        pibar = (pi[0], -pi[1])
        powers = []
        for j in range(e + 1):
            z = (1, 0)
            for _ in range(j):
                z = _gaussian_mul(z, pi)
            for _ in range(e - j):
                z = _gaussian_mul(z, pibar)
            powers.append(z)
        reps = {_gaussian_mul(z, w) for z in reps for w in powers}
    out = {tuple(sorted((abs(a), abs(b)))) for a, b in reps}
    return sorted(out)
