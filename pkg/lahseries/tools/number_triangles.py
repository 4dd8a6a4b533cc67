"""
Number Triangles
================
Classical combinatorial triangles from their integer recurrences. These never
touch the polynomial machinery, which makes them independent oracles for the
coefficient sums B_{n,k}(1,...,1), A_{n,k}(1,...,1) and L_{n,k}(1,...,1).
"""

from functools import lru_cache


@lru_cache(maxsize=None)
def stirling2_number(n: int, k: int) -> int:
    """S(n+1, k) = k S(n, k) + S(n, k-1)"""
    if n == 0 or k == 0:
        return 1 if n == k else 0
    return k * stirling2_number(n - 1, k) + stirling2_number(n - 1, k - 1)


@lru_cache(maxsize=None)
def signed_stirling1_number(n: int, k: int) -> int:
    """s(n+1, k) = s(n, k-1) - n s(n, k)"""
    if n == 0 or k == 0:
        return 1 if n == k else 0
    return signed_stirling1_number(n - 1, k - 1) - (n - 1) * signed_stirling1_number(n - 1, k)


@lru_cache(maxsize=None)
def _unsigned_lah(n: int, k: int) -> int:
    # L(n+1, k) = (n + k) L(n, k) + L(n, k-1)
    if n == 0 or k == 0:
        return 1 if n == k else 0
    return (n - 1 + k) * _unsigned_lah(n - 1, k) + _unsigned_lah(n - 1, k - 1)


def signed_lah_number(n: int, k: int) -> int:
    """(-1)^n n!/k! C(n-1, k-1)"""
    return (-1) ** n * _unsigned_lah(n, k)
