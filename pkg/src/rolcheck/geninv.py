"""Moore-Penrose and group inverses with exact existence detection.

The Moore-Penrose inverse of a is the unique b satisfying the four
Penrose equations

    (1) a = aba    (2) b = bab    (3) (ab)* = ab    (4) (ba)* = ba.

Over the Gaussian rationals it always exists (the base field is formally
real, so rank(a* a) = rank(a a*) = rank(a) is automatic); over a prime
field it can fail, which is detected up front.  The group inverse is the
commuting {1,2}-inverse of a square matrix; it exists iff
rank(a^2) = rank(a).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DimensionMismatch, NoMPInverse, NotGroupInvertible, Singular
from .matrices import Matrix, inverse, rank, rank_factorization
from .scalars import PrimeFieldDomain


@dataclass(frozen=True)
class PenroseReport:
    """Exact truth of each Penrose equation for a candidate pair (a, b)."""

    eq1_holds: bool
    eq2_holds: bool
    eq3_holds: bool
    eq4_holds: bool

    def holds(self, ks) -> bool:
        flags = {1: self.eq1_holds, 2: self.eq2_holds, 3: self.eq3_holds, 4: self.eq4_holds}
        return all(flags[k] for k in ks)

    def all_hold(self) -> bool:
        return self.eq1_holds and self.eq2_holds and self.eq3_holds and self.eq4_holds


def penrose_residuals(a: Matrix, b: Matrix) -> PenroseReport:
    """Evaluate all four Penrose equations exactly."""
    if b.rows != a.cols or b.cols != a.rows:
        raise DimensionMismatch(f"candidate {b.shape} does not fit {a.shape}")
    a._same_domain(b)
    ab = a @ b
    ba = b @ a
    return PenroseReport(
        eq1_holds=(ab @ a == a),
        eq2_holds=(ba @ b == b),
        eq3_holds=ab.is_hermitian(),
        eq4_holds=ba.is_hermitian(),
    )


def mp_exists(a: Matrix) -> bool:
    """True iff rank(a) = rank(a* a) = rank(a a*).

    Equivalent to the full-rank factors f, g of a having invertible
    gram matrices f* f and g g*, which is what the inversion formula
    needs."""
    r = rank(a)
    return rank(a.star() @ a) == r and rank(a @ a.star()) == r


def _is_prime_field(a: Matrix) -> bool:
    return isinstance(a.domain, PrimeFieldDomain)


def mp_inverse(a: Matrix) -> Matrix:
    """Moore-Penrose inverse via the full-rank factorization a = f g:

        a+ = g* (g g*)^-1 (f* f)^-1 f*

    For a = 0 the factors are empty and the formula collapses to the
    zero matrix of transposed shape.  The existence test runs only over
    prime fields; over Q(i) it provably always passes."""
    if _is_prime_field(a) and not mp_exists(a):
        raise NoMPInverse(f"rank of a* a or a a* drops below rank(a) over {a.domain.name}")
    fact = rank_factorization(a)
    f, g = fact.f, fact.g
    try:
        gram_g = inverse(g @ g.star())
        gram_f = inverse(f.star() @ f)
    except Singular as exc:  # only reachable over prime fields
        raise NoMPInverse(str(exc)) from exc
    return g.star() @ gram_g @ gram_f @ f.star()


def group_inverse(a: Matrix) -> Matrix:
    """The unique x with axa = a, xax = x, ax = xa, via a = f g and
    x = f (g f)^-2 g; g f is invertible iff rank(a^2) = rank(a)."""
    if a.rows != a.cols:
        raise DimensionMismatch(f"group inverse needs a square matrix, got {a.shape}")
    fact = rank_factorization(a)
    gf = fact.g @ fact.f
    try:
        gf_inv = inverse(gf)
    except Singular as exc:
        raise NotGroupInvertible(f"rank(a^2) < rank(a) = {fact.rank}") from exc
    return fact.f @ gf_inv @ gf_inv @ fact.g


def mp_via_star_group(a: Matrix) -> Matrix:
    """Cross-check route: a+ = (a* a)# a*.

    Must agree exactly with mp_inverse by uniqueness of the
    Moore-Penrose inverse."""
    if _is_prime_field(a) and not mp_exists(a):
        raise NoMPInverse(f"no Moore-Penrose inverse over {a.domain.name}")
    try:
        return group_inverse(a.star() @ a) @ a.star()
    except NotGroupInvertible as exc:
        raise NoMPInverse(str(exc)) from exc


def prop21_check(a: Matrix, b: Matrix) -> bool:
    """Alternate characterization: b = a+ iff a = a a* b* and b* = a b b*."""
    if b.rows != a.cols or b.cols != a.rows:
        raise DimensionMismatch(f"candidate {b.shape} does not fit {a.shape}")
    a._same_domain(b)
    b_star = b.star()
    return a == a @ a.star() @ b_star and b_star == a @ b @ b_star


def commutes_with_pair(c: Matrix, a: Matrix) -> bool:
    """True iff c a = a c and c a* = a* c.

    When a is Moore-Penrose invertible this is equivalent to c commuting
    with a+ and (a+)*; the equivalence is verified by tests, not assumed
    here."""
    if c.rows != c.cols or a.rows != a.cols or c.rows != a.rows:
        raise DimensionMismatch(f"need equal square shapes, got {c.shape} and {a.shape}")
    c._same_domain(a)
    a_star = a.star()
    return c @ a == a @ c and c @ a_star == a_star @ c
