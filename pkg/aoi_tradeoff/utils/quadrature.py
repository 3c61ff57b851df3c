import logging
import math
from typing import Callable, Iterable

from scipy.integrate import quad

from ..exceptions import QuadratureError

logger = logging.getLogger(__name__)

ABSOLUTE_TOLERANCE = 1e-13
RELATIVE_TOLERANCE = 1e-10
# QUADPACK sometimes reports a roundoff warning while its error estimate is
# already tiny; only estimates worse than this are treated as failures.
ACCEPTED_ERROR = 1e-7
SUBDIVISION_LIMIT = 500


def integrate(
    function: Callable[[float], float],
    lower: float,
    upper: float,
    points: Iterable[float] = (),
) -> float:
    """Adaptive quadrature of `function` on [lower, upper], split at `points`.

    The interval ends may be infinite; breakpoints outside the open interval
    are ignored. The pieces are integrated separately so that sharp features
    (a tail switching off, a point mass) land on subinterval boundaries.

    A piece on which QUADPACK stops short of RELATIVE_TOLERANCE is still
    accepted when its error estimate is below ACCEPTED_ERROR relative to the
    value; returned values are thus accurate to 1e-7 at worst, not 1e-10.

    Raises
    ------
    QuadratureError,
        If a piece stops with an error estimate above ACCEPTED_ERROR.
    """
    breaks = sorted({
        float(point)
        for point in points
        if math.isfinite(point) and lower < point < upper
    })
    edges = [lower] + breaks + [upper]

    total = 0.0
    for left, right in zip(edges[:-1], edges[1:]):
        result = quad(
            function,
            left,
            right,
            epsabs=ABSOLUTE_TOLERANCE,
            epsrel=RELATIVE_TOLERANCE,
            limit=SUBDIVISION_LIMIT,
            full_output=1,
        )
        value, abserr = result[0], result[1]
        # a fourth element is the QUADPACK message, present only on failure
        if len(result) > 3:
            logger.debug(
                "Quadrature on [%s, %s] reported: %s (abserr=%s)",
                left, right, result[3], abserr
            )
            if abserr > ACCEPTED_ERROR * max(1.0, abs(value)):
                raise QuadratureError(
                    (
                        "The adaptive quadrature on [{}, {}] did not reach the "
                        "relative tolerance {}: value {} with error estimate {}."
                    ).format(left, right, RELATIVE_TOLERANCE, value, abserr),
                    value,
                    abserr,
                )
        total += value
    return total
