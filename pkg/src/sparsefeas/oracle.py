"""Independent brute-force verifiers used to cross-check the decision
algorithms: Sturm sequences for exact univariate root counts, grid sign
scans for multivariate nonemptiness certificates, and exact big-integer
product comparison at guarded scale.

Nothing here shares code with the algorithms under test; that isolation
is the point.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from math import gcd

from .errors import PreconditionError, ScaleLimitError
from .sparsepoly import SparsePolynomial, evaluate

# ---------------------------------------------------------------------------
# dense integer univariate polynomial helpers (coefficient lists, low first)


def _dense(f: SparsePolynomial):
    if f.n != 1:
        raise PreconditionError("sturm_count expects a univariate polynomial")
    if f.is_laurent:
        raise PreconditionError("sturm_count expects nonnegative exponents")
    deg = max(t.exponents[0] for t in f.terms)
    cs = [0] * (deg + 1)
    for t in f.terms:
        cs[t.exponents[0]] = t.coefficient
    return cs


def _trim(p):
    while p and p[-1] == 0:
        p.pop()
    return p


def _deriv(p):
    return _trim([i * c for i, c in enumerate(p)][1:])


def _content(p):
    g = 0
    for c in p:
        g = gcd(g, c)
    return g or 1


def _primitive(p):
    g = _content(p)
    return [c // g for c in p]


def _neg_prem(a, b):
    """Negated pseudo-remainder of a by b, scaled only by positive factors
    so sign variations of the chain behave like a genuine Sturm sequence."""
    r = _trim(list(a))
    db, lb = len(b) - 1, b[-1]
    mult = abs(lb)
    sign = 1 if lb > 0 else -1
    while r and len(r) - 1 >= db:
        shift = len(r) - 1 - db
        lead = r[-1]
        r = [c * mult for c in r]
        for i in range(db + 1):
            r[i + shift] -= sign * lead * b[i]
        r = _trim(r)
    if not r:
        return []
    return _primitive([-c for c in r])


def _poly_gcd(a, b):
    a, b = _primitive(_trim(list(a))), _primitive(_trim(list(b)))
    while b:
        r = _neg_prem(a, b)
        a, b = b, r
    return a


def _exact_div(a, b):
    """Exact polynomial division over Q, returned as a primitive integer
    polynomial (the inputs are known to divide)."""
    a = [Fraction(c) for c in a]
    out = [Fraction(0)] * (len(a) - len(b) + 1)
    while len(a) >= len(b) and any(a):
        shift = len(a) - len(b)
        q = a[-1] / b[-1]
        out[shift] = q
        a = [c - q * (b[i - shift] if 0 <= i - shift < len(b) else 0) for i, c in enumerate(a)]
        while a and a[-1] == 0:
            a.pop()
    denom = 1
    for c in out:
        denom = denom * c.denominator // gcd(denom, c.denominator)
    return _primitive([int(c * denom) for c in out])


def _eval(p, x):
    total = Fraction(0)
    for c in reversed(p):
        total = total * x + c
    return total


def _sturm_chain(p):
    chain = [list(p), _deriv(p)]
    while chain[-1]:
        nxt = _neg_prem(chain[-2], chain[-1])
        if not nxt:
            break
        chain.append(nxt)
    return [c for c in chain if c]


def _variations_at(chain, x):
    signs = []
    for p in chain:
        v = _eval(p, x)
        if v != 0:
            signs.append(1 if v > 0 else -1)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _variations_inf(chain, positive: bool):
    signs = []
    for p in chain:
        lc = p[-1]
        deg = len(p) - 1
        s = 1 if lc > 0 else -1
        if not positive and deg % 2 == 1:
            s = -s
        signs.append(s)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def sturm_count(f: SparsePolynomial, lower=None, upper=None) -> int:
    """Exact number of distinct real roots of f in (lower, upper].

    None endpoints mean -infinity / +infinity.  Counting happens on the
    squarefree part, so multiplicities never inflate the answer.
    """
    p = _primitive(_trim(_dense(f)))
    if len(p) <= 1:
        if not p or p[0] != 0:
            return 0
        raise PreconditionError("zero polynomial")
    g = _poly_gcd(p, _deriv(p))
    sf = _exact_div(p, g) if len(g) > 1 else p
    extra = 0
    if lower is not None and _eval(sf, Fraction(lower)) == 0:
        sf = _exact_div(sf, [-Fraction(lower).numerator, Fraction(lower).denominator])
    if upper is not None and _eval(sf, Fraction(upper)) == 0:
        extra = 1
        sf = _exact_div(sf, [-Fraction(upper).numerator, Fraction(upper).denominator])
    if len(sf) <= 1:
        return extra
    chain = _sturm_chain(sf)
    lo = (
        _variations_inf(chain, positive=False)
        if lower is None
        else _variations_at(chain, Fraction(lower))
    )
    hi = (
        _variations_inf(chain, positive=True)
        if upper is None
        else _variations_at(chain, Fraction(upper))
    )
    return lo - hi + extra


def multiple_root_count(f: SparsePolynomial, lower=None, upper=None) -> int:
    """Number of distinct roots of multiplicity >= 2 in (lower, upper]."""
    p = _primitive(_trim(_dense(f)))
    if len(p) <= 1:
        raise PreconditionError("constant polynomial")
    g = _poly_gcd(p, _deriv(p))
    if len(g) <= 1:
        return 0
    from .sparsepoly import make_polynomial

    gp = make_polynomial(1, [((i,), c) for i, c in enumerate(g) if c])
    return sturm_count(gp, lower, upper)


# ---------------------------------------------------------------------------


def grid_scan(f: SparsePolynomial, box, resolution):
    """Scan a rational grid for a zero or an adjacent sign change.

    box is a list of (lo, hi) pairs per variable; resolution the grid
    step.  Returns {"zero": point} or {"sign_change": (p, q)} on success,
    None when the scan is inconclusive.  Absence is never an emptiness
    proof.
    """
    if len(box) != f.n:
        raise PreconditionError("box dimension mismatch")
    h = Fraction(resolution)
    if h <= 0:
        raise PreconditionError("resolution must be positive")
    axes = []
    for lo, hi in box:
        lo, hi = Fraction(lo), Fraction(hi)
        if hi < lo:
            raise PreconditionError("empty box")
        pts = []
        x = lo
        while x <= hi:
            pts.append(x)
            x += h
        axes.append(pts)
    values: dict = {}
    for idx in product(*(range(len(a)) for a in axes)):
        point = tuple(axes[k][i] for k, i in enumerate(idx))
        v = evaluate(f, point)
        if v == 0:
            return {"zero": point}
        values[idx] = v
        for k in range(f.n):
            if idx[k] == 0:
                continue
            prev = idx[:k] + (idx[k] - 1,) + idx[k + 1 :]
            w = values.get(prev)
            if w is not None and (v > 0) != (w > 0):
                q = tuple(axes[t][i] for t, i in enumerate(prev))
                return {"sign_change": (q, point)}
    return None


def exact_product_compare(alphas, betas, us, vs) -> int:
    """Sign of prod alpha^u - prod beta^v by full expansion, guarded.

    Bases are limited to |.| <= 10^3 and exponents to 10^4 so that the
    expansion stays tractable; ScaleLimitError beyond that.
    """
    if not (len(alphas) == len(betas) == len(us) == len(vs)):
        raise PreconditionError("list length mismatch")
    for base in list(alphas) + list(betas):
        if abs(base) > 1000:
            raise ScaleLimitError("base exceeds the expansion guard")
    for e in list(us) + list(vs):
        if e < 0:
            raise PreconditionError("negative exponent")
        if e > 10**4:
            raise ScaleLimitError("exponent exceeds the expansion guard")
    left = 1
    for a, u in zip(alphas, us):
        left *= a**u
    right = 1
    for b, v in zip(betas, vs):
        right *= b**v
    if left > right:
        return 1
    if left < right:
        return -1
    return 0
