"""One-variable integer Laurent polynomials as exponent -> coefficient dicts."""

from __future__ import annotations

from .errors import NotDivisible

__all__ = [
    "cleaned",
    "divide_by_one_minus_var",
    "symmetric_normalized",
    "laurent_string",
]


def cleaned(poly: dict[int, int]) -> dict[int, int]:
    """Copy without zero coefficients."""
    return {e: c for e, c in poly.items() if c}


def divide_by_one_minus_var(poly: dict[int, int]) -> dict[int, int]:
    """Exact quotient poly / (1 - q); raises NotDivisible on a remainder.

    With quotient coefficients the running sums of the input from the lowest
    exponent up, exactness is the vanishing of the total sum (poly(1) = 0).
    """
    p = cleaned(poly)
    if not p:
        return {}
    lo, hi = min(p), max(p)
    out: dict[int, int] = {}
    acc = 0
    for e in range(lo, hi + 1):
        acc += p.get(e, 0)
        if e == hi:
            if acc != 0:
                raise NotDivisible(f"remainder {acc} dividing by (1 - q)")
        elif acc:
            out[e] = acc
    return out


def symmetric_normalized(poly: dict[int, int]) -> dict[int, int]:
    """The representative with palindromic exponents and positive value at 1.

    Laurent polynomials satisfying p(q) = p(1/q) up to a unit +-q^k have a
    unique such representative; inputs without one raise ValueError.
    """
    p = cleaned(poly)
    if not p:
        raise ValueError("the zero polynomial has no symmetric normalization")
    lo, hi = min(p), max(p)
    if (lo + hi) % 2:
        raise ValueError("exponent span has odd length; no centered shift exists")
    shift = -(lo + hi) // 2
    q = {e + shift: c for e, c in p.items()}
    if any(q[e] != q.get(-e, 0) for e in q):
        raise ValueError("coefficients are not palindromic under q -> 1/q")
    at_one = sum(q.values())
    if at_one == 0:
        raise ValueError("value 0 at q = 1; sign normalization undefined")
    if at_one < 0:
        q = {e: -c for e, c in q.items()}
    return q


def laurent_string(poly: dict[int, int], var: str = "q") -> str:
    """Human-readable rendering, highest exponent first (e.g. ``q - 1 + q^-1``)."""
    p = cleaned(poly)
    if not p:
        return "0"
    parts: list[str] = []
    for e in sorted(p, reverse=True):
        c = p[e]
        mag = abs(c)
        if e == 0:
            body = str(mag)
        else:
            power = var if e == 1 else f"{var}^{e}"
            body = power if mag == 1 else f"{mag}*{power}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts)
