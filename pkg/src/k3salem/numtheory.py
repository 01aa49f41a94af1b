"""Small number-theoretic helpers (trial division scale)."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    i = 3
    while i * i <= n:
        if n % i == 0:
            return False
        i += 2
    return True


def primes():
    """Generate primes 2, 3, 5, ... indefinitely."""
    n = 2
    while True:
        if is_prime(n):
            yield n
        n += 1 if n == 2 else 2


def euler_phi(n: int) -> int:
    result = n
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def legendre_symbol(a: int, p: int) -> int:
    """Legendre symbol (a|p) for odd prime p, by modular exponentiation."""
    a %= p
    if a == 0:
        return 0
    r = pow(a, (p - 1) // 2, p)
    return 1 if r == 1 else -1
