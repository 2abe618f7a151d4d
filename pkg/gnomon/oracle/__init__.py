from gnomon.oracle.constructibility import angle_constructible, golden_angle_verdict, ngon_constructible
from gnomon.oracle.errors import OracleError, OutOfRange
from gnomon.oracle.factor import factorize, is_fermat_prime, is_power_of_two
from gnomon.oracle.types import ConstructibilityVerdict, Reason, ReasonKind, Subject, SubjectKind

__all__ = [
    "ConstructibilityVerdict",
    "Reason",
    "ReasonKind",
    "Subject",
    "SubjectKind",
    "ngon_constructible",
    "angle_constructible",
    "golden_angle_verdict",
    "factorize",
    "is_fermat_prime",
    "is_power_of_two",
    "OracleError",
    "OutOfRange",
]
