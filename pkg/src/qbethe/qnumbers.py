"""q-integers, q-factorials and q-shifted factorials by direct iterated products."""

MAX_ORDER = 64


def _check_order(k):
    if k < 0:
        raise ValueError(f"negative order {k}")
    if k > MAX_ORDER:
        raise OverflowError(f"order {k} exceeds supported capacity {MAX_ORDER}")


def qint(k, q):
    """[k]_q = 1 + q + ... + q^(k-1); zero for k = 0."""
    _check_order(k)
    return sum(q**i for i in range(k)) if k else 0 * q


def qfactorial(k, q):
    _check_order(k)
    out = 1
    for i in range(1, k + 1):
        out = out * qint(i, q)
    return out


def qpochhammer(c, q, k):
    """(c; q)_k = (1 - c)(1 - c q)...(1 - c q^(k-1))."""
    _check_order(k)
    out = 1
    for i in range(k):
        out = out * (1 - c * q**i)
    return out
