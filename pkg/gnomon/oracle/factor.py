from math import isqrt

from gnomon.oracle.errors import OutOfRange

MAX_N = 10**7

KNOWN_FERMAT_PRIMES = frozenset({3, 5, 17, 257, 65537})

Factorization = tuple[tuple[int, int], ...]


def factorize(n: int) -> Factorization:
    """Prime factorization by trial division as ascending ``(prime, exponent)`` pairs."""
    if n < 1 or n > MAX_N:
        raise OutOfRange(f"{n} is outside the supported range [1, {MAX_N}]")
    factors: list[tuple[int, int]] = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            factors.append((p, e))
        p += 1 if p == 2 else 2
    if n > 1:
        factors.append((n, 1))
    return tuple(factors)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    return all(n % d for d in range(3, isqrt(n) + 1, 2))


def is_power_of_two(n: int) -> bool:
    return n > 0 and n & (n - 1) == 0


def is_fermat_prime(p: int) -> bool:
    """Whether ``p`` is a prime of the form 2^(2^m) + 1."""
    if p in KNOWN_FERMAT_PRIMES:
        return True
    if not is_power_of_two(p - 1):
        return False
    k = (p - 1).bit_length() - 1
    return is_power_of_two(k) and is_prime(p)


def format_factorization(factors: Factorization) -> str:
    return " · ".join(str(p) if e == 1 else f"{p}^{e}" for p, e in factors)
