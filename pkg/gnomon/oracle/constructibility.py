"""
Regular polygons and rational angles: constructible iff the denominator is a
power of two times distinct Fermat primes. Every rational verdict is checked
against the independent criterion "Euler's totient is a power of two".
"""

import logging
from math import gcd

from gnomon.oracle.errors import OracleError, OutOfRange
from gnomon.oracle.factor import factorize, format_factorization, is_fermat_prime, is_power_of_two
from gnomon.oracle.types import ConstructibilityVerdict, Reason, ReasonKind, Subject, SubjectKind

logger = logging.getLogger(__name__)

GOLDEN_ANGLE_CITATION = (
    "Take α = 2π/φ and z = e^{iα}. If z were algebraic, the Gelfond–Schneider theorem "
    "(a^b is transcendental for algebraic a ∉ {0, 1} and algebraic irrational b) would make "
    "z^φ = e^{2πi} = 1 transcendental. Hence z is transcendental, so cos α and sin α are not "
    "both algebraic; they are then both transcendental, and so are those of the golden "
    "angle 2π − α. Constructible numbers are algebraic."
)


def _totient(n: int) -> int:
    from sympy import totient

    return int(totient(n))


def _classify(n: int) -> tuple[bool, Reason]:
    factors = factorize(n)
    odd = [(p, e) for p, e in factors if p != 2]

    for p, _ in odd:
        if not is_fermat_prime(p):
            if factors == ((n, 1),):
                text = f"{n} is not a Fermat prime"
            else:
                text = f"{n} = {format_factorization(factors)} and {p} is not a Fermat prime"
            return False, Reason(ReasonKind.NON_FERMAT_PRIME, text, factors, offending_prime=p)

    for p, e in odd:
        if e > 1:
            text = f"{n} = {format_factorization(factors)} repeats the Fermat prime {p}"
            return False, Reason(ReasonKind.REPEATED_FERMAT_PRIME, text, factors, offending_prime=p)

    if not odd:
        text = f"{n} is a power of two"
    elif factors == ((n, 1),):
        text = f"{n} is a Fermat prime"
    else:
        text = f"{n} = {format_factorization(factors)}, a power of two times distinct Fermat primes"
    return True, Reason(ReasonKind.FERMAT_FACTORIZATION, text, factors)


def _verdict(subject: Subject, n: int) -> ConstructibilityVerdict:
    constructible, reason = _classify(n)
    phi_n = _totient(n)
    if constructible != is_power_of_two(phi_n):
        raise OracleError(f"criteria disagree for n = {n}: factorization says {constructible}, totient is {phi_n}")
    return ConstructibilityVerdict(subject=subject, constructible=constructible, reason=reason, totient=phi_n)


def ngon_constructible(n: int) -> ConstructibilityVerdict:
    if n < 3:
        raise OutOfRange(f"a regular polygon needs at least 3 sides, got {n}")
    return _verdict(Subject(SubjectKind.NGON, n=n), n)


def angle_constructible(p: int, q: int) -> ConstructibilityVerdict:
    """The angle 2π·p/q, decided on the reduced denominator q/gcd(p, q)."""
    if q <= 0:
        raise OutOfRange(f"denominator must be positive, got {q}")
    n = q // gcd(p, q)
    subject = Subject(SubjectKind.RATIONAL_ANGLE, n=n, p=p, q=q)
    if n <= 2:
        reason = Reason(ReasonKind.TRIVIAL_ANGLE, f"2π·{p}/{q} is a multiple of π")
        return ConstructibilityVerdict(subject=subject, constructible=True, reason=reason, totient=_totient(n))
    logger.debug("angle 2π·%d/%d reduces to the %d-gon", p, q, n)
    return _verdict(subject, n)


def golden_angle_verdict() -> ConstructibilityVerdict:
    """Not constructible; documented, not computed."""
    reason = Reason(
        ReasonKind.DOCUMENTED_TRANSCENDENCE,
        "sine and cosine are transcendental (Gelfond–Schneider)",
        computed=False,
        citation=GOLDEN_ANGLE_CITATION,
    )
    return ConstructibilityVerdict(subject=Subject(SubjectKind.GOLDEN_ANGLE), constructible=False, reason=reason)
