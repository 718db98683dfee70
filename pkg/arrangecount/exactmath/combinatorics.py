import math


def binomial(n: int, k: int) -> int:
    """C(n, k), and 0 outside ``0 <= k <= n``."""
    if n < 0 or k < 0 or k > n:
        return 0
    return math.comb(n, k)


def factorial(n: int) -> int:
    return math.factorial(n)


def falling_factorial(x: int, length: int) -> int:
    """x (x - 1) ... (x - length + 1); 1 for length 0."""
    if length < 0:
        raise ValueError(f"length must be non-negative, got {length}")
    result = 1
    for i in range(length):
        result *= x - i
    return result
