"""
Integer Square Root

Exact floor square root of arbitrarily large non-negative integers by
integer Newton iteration. No floating point is involved.
"""

from picophi.core.exceptions import DomainError


def isqrt(n: int) -> int:
    """
    Exact floor square root.

    The initial guess 2^ceil(bits/2) is never below the root, and each
    Newton step x -> (x + n // x) // 2 decreases strictly until the root
    is reached, so the loop stops at the first step that does not decrease.

    :param n: Non-negative integer
    :return: r with r*r <= n < (r+1)*(r+1)
    :raises DomainError: If n is negative
    """
    if n < 0:
        raise DomainError(f"isqrt of a negative number: {n}")
    if n < 2:
        return n
    x = 1 << ((n.bit_length() + 1) // 2)
    while True:
        y = (x + n // x) // 2
        if y >= x:
            return x
        x = y


def is_perfect_square(n: int) -> bool:
    """
    Check whether n is the square of an integer.

    :param n: Integer
    :return: True if n >= 0 and isqrt(n)**2 == n
    """
    if n < 0:
        return False
    root = isqrt(n)
    return root * root == n
