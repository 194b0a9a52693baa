"""Moore-type lower bounds for regular graphs."""

from fractions import Fraction


def moore_distance_distribution(n: int, k: int) -> list[int]:
    """Greedy fill of n-1 vertices: k at distance 1, k(k-1) at 2, ..., remainder at the last level."""
    if k < 2:
        raise ValueError(f"degree must be at least 2, got {k}")
    remaining = n - 1
    levels = []
    width = k
    while remaining > 0:
        take = min(width, remaining)
        levels.append(take)
        remaining -= take
        width *= k - 1
    return levels


def moore_mpl_bound(n: int, k: int) -> Fraction:
    """Lower bound on the MPL of any (n,k)-regular graph."""
    if n < 2:
        return Fraction(0)
    levels = moore_distance_distribution(n, k)
    return Fraction(sum(d * count for d, count in enumerate(levels, start=1)), n - 1)


def moore_diameter_bound(n: int, k: int) -> int:
    """Distance at which the Moore ball first covers n vertices."""
    return len(moore_distance_distribution(n, k))
