"""Decision procedures for roots of sparse polynomials with few terms.

Three root sets of f are decided exactly:

* Z_+(f): roots with all coordinates positive,
* Z*(f):  roots with all coordinates nonzero,
* Z_R(f): all real roots,

for supports that are affinely independent (simplex case, #Supp = dim+1)
or contain a single circuit (#Supp = dim+2).  The positive-orthant
classification goes beyond a verdict: it reports whether Z_+ is empty, a
single point, a singular point, a compact sphere, or has only
non-compact components.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Optional

from .errors import PreconditionError
from .discriminant import CircuitDiscriminant, adisc_sign, adisc_vanish, degenerate_point
from .geometry import (
    affine_dim,
    caged_alternation,
    facet_normals,
    find_circuit,
    initial_form,
    interior_point,
)
from .intlattice import hermite_factor
from .sparsepoly import (
    PointSet,
    SparsePolynomial,
    evaluate,
    make_polynomial,
    support,
)

EMPTY = "EMPTY"
POINT_MULT_1 = "POINT_MULT_1"
SINGULAR_POINT = "SINGULAR_POINT"
COMPACT_SPHERE = "COMPACT_SPHERE"
ALL_NONCOMPACT = "ALL_NONCOMPACT"
NONEMPTY_UNCLASSIFIED = "NONEMPTY_UNCLASSIFIED"

_NONEMPTY_TAGS = {
    POINT_MULT_1,
    SINGULAR_POINT,
    COMPACT_SPHERE,
    ALL_NONCOMPACT,
    NONEMPTY_UNCLASSIFIED,
}


@dataclass(frozen=True)
class FeasibilityReport:
    """Verdicts for the three root sets plus a Z_+ classification.

    Verdicts are "empty", "nonempty", or None when not evaluated.  The
    certificate, when present, is one of: an exact rational root, a
    sign-change pair of rational points, a facet normal, or a degenerate
    point description.
    """

    positive_orthant: Optional[str]
    nonzero_reals: Optional[str]
    all_reals: Optional[str]
    classification: str
    certificate: object = None


def _translated_exponents(f: SparsePolynomial):
    """Exponent vectors relative to the first support point (which becomes
    the origin); harmless on the open orthants where monomials are units."""
    base = f.terms[0].exponents
    return [tuple(e - b for e, b in zip(t.exponents, base)) for t in f.terms]


def _solve_uniform_direction(diffs):
    """A rational w with w . d == 1 for every d in the linearly independent
    list diffs, scaled to an integer vector with uniform positive value."""
    n = len(diffs[0])
    rows = [[Fraction(v) for v in d] + [Fraction(1)] for d in diffs]
    pivots = []
    r = 0
    for col in range(n):
        piv = next((i for i in range(r, len(rows)) if rows[i][col] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = 1 / rows[r][col]
        rows[r] = [v * inv for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col] != 0:
                fac = rows[i][col]
                rows[i] = [a - fac * b for a, b in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
        if r == len(rows):
            break
    w = [Fraction(0)] * n
    for i, col in enumerate(pivots):
        w[col] = rows[i][n]
    denom = 1
    for v in w:
        denom = denom * v.denominator // _gcd(denom, v.denominator)
    wi = [int(v * denom) for v in w]
    return wi, denom


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def _dominant_point(f: SparsePolynomial, j: int):
    """A rational point in the positive orthant where term j dominates, so
    that sign f(x) = sign c_j.  Requires affinely independent support."""
    exps = _translated_exponents(f)
    diffs = [
        [e - ej for e, ej in zip(exps[i], exps[j])]
        for i in range(len(exps))
        if i != j
    ]
    if not diffs:
        return tuple([Fraction(1)] * f.n)
    w, _ = _solve_uniform_direction(diffs)
    t = Fraction(1, 1 + sum(abs(term.coefficient) for term in f.terms))
    return tuple(Fraction(t) ** wk for wk in w)


def _sign_change_pair(f: SparsePolynomial):
    """Two positive rational points where f takes opposite signs; requires
    mixed coefficient signs and affinely independent support."""
    jp = next(i for i, t in enumerate(f.terms) if t.coefficient > 0)
    jn = next(i for i, t in enumerate(f.terms) if t.coefficient < 0)
    p = _dominant_point(f, jp)
    q = _dominant_point(f, jn)
    return p, q


def feas_simplex(f: SparsePolynomial) -> FeasibilityReport:
    """Decide all three root sets for an affinely independent support.

    Mixed coefficient signs make everything nonempty; otherwise an odd
    coordinate among the exponent differences rescues the nonzero and
    real sets; otherwise only the origin can be a root.
    """
    A = support(f)
    if len(A) != affine_dim(A) + 1:
        raise PreconditionError("support is not affinely independent")
    coeffs = [t.coefficient for t in f.terms]
    mixed = any(c > 0 for c in coeffs) and any(c < 0 for c in coeffs)
    if mixed:
        cls = POINT_MULT_1 if f.n == 1 and len(coeffs) == 2 else ALL_NONCOMPACT
        cert = _sign_change_pair(f)
        return FeasibilityReport("nonempty", "nonempty", "nonempty", cls, cert)
    exps = _translated_exponents(f)
    odd = None
    for j in range(1, len(exps)):
        for i in range(f.n):
            if exps[j][i] % 2 == 1:
                odd = (i, j)
                break
        if odd:
            break
    if odd is not None:
        # flipping coordinate i makes the signs mixed in that orthant
        i = odd[0]
        flipped = make_polynomial(
            f.n,
            [
                (t.exponents, t.coefficient * (-1) ** (t.exponents[i] % 2))
                for t in f.terms
            ],
        )
        p, q = _sign_change_pair(flipped)
        cert = (
            tuple(-v if k == i else v for k, v in enumerate(p)),
            tuple(-v if k == i else v for k, v in enumerate(q)),
        )
        return FeasibilityReport("empty", "nonempty", "nonempty", EMPTY, cert)
    if f.is_laurent:
        return FeasibilityReport("empty", "empty", "empty", EMPTY)
    origin_root = all(any(e > 0 for e in t.exponents) for t in f.terms)
    if origin_root:
        cert = tuple([Fraction(0)] * f.n)
        return FeasibilityReport("empty", "empty", "nonempty", EMPTY, cert)
    return FeasibilityReport("empty", "empty", "empty", EMPTY)


def reduce_dimension(f: SparsePolynomial):
    """Rewrite f in dim Supp(f) variables via a unimodular substitution.

    Returns (g, U): the exponents of f, translated to the first support
    point, are mapped by a -> U a into Z^d x {0}, and g keeps the same
    coefficients.  Root sets in the open orthants correspond exactly.
    """
    exps = _translated_exponents(f)
    d = affine_dim(support(f))
    if d >= f.n:
        raise PreconditionError("support already spans full dimension")
    T = [[e[i] for e in exps] for i in range(f.n)]
    H, U = hermite_factor(T)
    for col in range(len(exps)):
        assert all(H[r][col] == 0 for r in range(d, f.n))
    g = make_polynomial(
        max(d, 1),
        [
            (tuple(H[r][col] for r in range(max(d, 1))), f.terms[col].coefficient)
            for col in range(len(exps))
        ],
    )
    return g, U


def _pull_back_point(point, U, n):
    """Map a positive rational point of the reduced instance back through
    the substitution with matrix U (x_j = prod_i y_i^{U[i][j]})."""
    y = list(point) + [Fraction(1)] * (n - len(point))
    out = []
    for j in range(n):
        v = Fraction(1)
        for i in range(n):
            e = U[i][j]
            if e:
                v *= Fraction(y[i]) ** e
        out.append(v)
    return tuple(out)


def _positive_classification(f: SparsePolynomial):
    """(classification, certificate) for Z_+(f), dispatching on the support
    shape and reducing to full dimension first when needed."""
    A = support(f)
    d = affine_dim(A)
    if len(A) > d + 2:
        raise PreconditionError("more than dim + 2 support points")
    if len(A) == d + 1:
        rep = feas_simplex(f)
        return rep.classification, rep.certificate
    if d < f.n:
        g, U = reduce_dimension(f)
        cls, cert = _positive_classification(g)
        if isinstance(cert, tuple) and cert and isinstance(cert[0], Fraction):
            cert = _pull_back_point(cert, U, f.n)
        return cls, cert
    rep = feas_circuit(f)
    return rep.classification, rep.certificate


def feas_circuit(f: SparsePolynomial) -> FeasibilityReport:
    """Classify Z_+(f) for a support of dim+2 points spanning R^n.

    Facet initial forms detect non-compact branches; a degenerate circuit
    triggers a lower-dimensional recursion on the circuit terms; a caged
    sign alternation routes through the circuit discriminant (vanishing:
    one singular point; matching sign: a compact sphere); everything else
    is empty.
    """
    A = support(f)
    n = f.n
    if len(A) != n + 2:
        raise PreconditionError("circuit case needs exactly dim + 2 terms")
    if affine_dim(A) != n:
        raise PreconditionError("support must span full dimension")
    exps = _translated_exponents(f)
    coeffs = [t.coefficient for t in f.terms]
    pts = PointSet(tuple(exps))

    # Step 1: a facet whose initial form already has a positive root
    if n >= 2:
        for w in facet_normals(pts, n):
            face = initial_form(f, list(w))
            fa = support(face)
            if len(fa) != affine_dim(fa) + 1:
                continue
            if feas_simplex(face).positive_orthant == "nonempty":
                return FeasibilityReport(
                    "nonempty", None, None, ALL_NONCOMPACT, {"facet_normal": list(w)}
                )

    located = find_circuit(pts)
    assert located is not None
    C, idx = located

    # Step 2: degenerate circuit -> recurse on the circuit terms alone
    if len(C.points) < len(pts):
        if interior_point(C) is not None:
            h = make_polynomial(n, [(exps[i], coeffs[i]) for i in idx])
            cls, _ = _positive_classification(h)
            if cls in (ALL_NONCOMPACT, COMPACT_SPHERE, NONEMPTY_UNCLASSIFIED):
                return FeasibilityReport(
                    "nonempty", None, None, NONEMPTY_UNCLASSIFIED
                )
        return FeasibilityReport("empty", None, None, EMPTY)

    # Step 3: the whole support is a circuit
    ip = interior_point(C)
    if ip is not None:
        signs = [1 if coeffs[i] > 0 else -1 for i in idx]
        if n == 1:
            order = sorted(range(len(idx)), key=lambda k: exps[idx[k]][0])
            seq = [signs[k] for k in order]
            alternations = sum(
                1 for a, b in zip(seq, seq[1:]) if a != b
            )
            if alternations == 1:
                return FeasibilityReport("nonempty", None, None, POINT_MULT_1)
        if caged_alternation(C, signs) is not None:
            ccoeffs = [coeffs[i] for i in idx]
            if any(signs[j] < 0 for j in range(len(idx)) if j != ip):
                ccoeffs = [-c for c in ccoeffs]
            D = CircuitDiscriminant(C, tuple(ccoeffs))
            if adisc_vanish(D):
                dp = degenerate_point(D)
                return FeasibilityReport(
                    "nonempty", None, None, SINGULAR_POINT, dp
                )
            target = 1 if C.relation[ip] % 2 == 0 else -1
            if adisc_sign(D) == target:
                return FeasibilityReport(
                    "nonempty", None, None, COMPACT_SPHERE
                )

    # Step 4
    return FeasibilityReport("empty", None, None, EMPTY)


def _restricted_instance(f: SparsePolynomial, pattern):
    """Restrict f to the sign/zero pattern: coordinates with 0 are set to
    zero, coordinates with -1 flip term signs by parity.  Returns None
    when every term dies (f vanishes identically on the stratum), else a
    polynomial in the surviving variables."""
    keep = [i for i, e in enumerate(pattern) if e != 0]
    pairs = []
    for t in f.terms:
        if any(t.exponents[i] > 0 for i, e in enumerate(pattern) if e == 0):
            continue
        sign = 1
        for i, e in enumerate(pattern):
            if e == -1 and t.exponents[i] % 2 == 1:
                sign = -sign
        pairs.append((tuple(t.exponents[i] for i in keep), sign * t.coefficient))
    if not pairs:
        return None, keep
    if not keep:
        # the stratum is the origin; a surviving term is a nonzero constant
        return make_polynomial(1, [((0,), c) for _, c in pairs]), keep
    try:
        g = make_polynomial(len(keep), pairs)
    except Exception:
        g = None  # cancellation to zero counts as identically zero
    return g, keep


def _positive_nonempty(f: SparsePolynomial) -> bool:
    cls, _ = _positive_classification(f)
    return cls in _NONEMPTY_TAGS


def feas_real_full(f: SparsePolynomial) -> FeasibilityReport:
    """Decide Z_+, Z*, and Z_R by dispatching over all sign/zero patterns.

    Requires polynomial (nonnegative) exponents.  Each of the 3^n
    patterns restricts f to a stratum and asks a positive-orthant
    question; identical restricted instances are solved once.
    """
    if f.is_laurent:
        raise PreconditionError("real-set dispatch requires polynomial exponents")
    cache: dict = {}

    def solve(g: SparsePolynomial) -> bool:
        key = (g.n, g.terms)
        if key not in cache:
            cache[key] = _positive_nonempty(g)
        return cache[key]

    positive = None
    nonzero = "empty"
    real = "empty"
    pos_cls = EMPTY
    pos_cert = None
    for pattern in product((1, -1, 0), repeat=f.n):
        g, keep = _restricted_instance(f, pattern)
        if g is None:
            hit = True
        elif not keep:
            hit = False  # nonzero constant at the origin
        else:
            A = support(g)
            if len(A) > affine_dim(A) + 2:
                raise PreconditionError(
                    "restriction leaves more than dim + 2 terms"
                )
            hit = solve(g)
        if all(e == 1 for e in pattern):
            positive = "nonempty" if hit else "empty"
            if g is not None:
                pos_cls, pos_cert = _positive_classification(g)
            elif hit:
                pos_cls = NONEMPTY_UNCLASSIFIED
        if hit:
            real = "nonempty"
            if all(e != 0 for e in pattern):
                nonzero = "nonempty"
    return FeasibilityReport(positive, nonzero, real, pos_cls, pos_cert)


_NON_BOUNDS = {1: 0, 2: 2, 3: 6, 4: 9}


def topology_report(f: SparsePolynomial) -> dict:
    """Bounds and exact data for the topology of Z_+(f).

    Reports the compact/non-compact component bounds for the instance's
    dimension, whether the support meets the interior of its hull (when
    it does not, no compact component can exist), the exact
    classification, and exact positive root counts for n = 1.
    """
    n = f.n
    A = support(f)
    d = affine_dim(A)
    cls, cert = _positive_classification(f)
    bounds = {
        "N_comp": 1,
        "N_non": _NON_BOUNDS.get(n, 2 * n + 2),
    }
    meets_interior = False
    if len(A) == d + 2 and d == n:
        located = find_circuit(A)
        if located is not None and len(located[0].points) == len(A):
            meets_interior = interior_point(located[0]) is not None
    n_comp = {
        EMPTY: 0,
        ALL_NONCOMPACT: 0,
        NONEMPTY_UNCLASSIFIED: 0,
        POINT_MULT_1: 1,
        SINGULAR_POINT: 1,
        COMPACT_SPHERE: 1,
    }[cls]
    if not meets_interior and n_comp == 1 and cls == COMPACT_SPHERE:
        n_comp = 0  # unreachable by construction; kept for clarity
    report = {
        "n": n,
        "classification": cls,
        "bounds": bounds,
        "support_meets_hull_interior": meets_interior,
        "N_comp": n_comp,
    }
    if n == 1:
        counts = {
            EMPTY: 0,
            POINT_MULT_1: 1,
            SINGULAR_POINT: 1,
            COMPACT_SPHERE: 2,
            ALL_NONCOMPACT: 1,
            NONEMPTY_UNCLASSIFIED: None,
        }[cls]
        report["positive_roots"] = counts
        if cls == COMPACT_SPHERE:
            report["pair_label"] = "S⁰"
    if cert is not None:
        report["certificate"] = cert
    return report
