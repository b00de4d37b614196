"""Numeric tolerances used wherever a decision is made in floating point.

``EQ_TOL`` bounds residuals that should vanish exactly; ``MARGIN`` is the
smallest magnitude a quantity may have when its sign decides something.
``MARGIN`` can be overridden through the ``LISSAKNOT_TOL`` environment
variable.
"""
import os

EQ_TOL = 1e-9
MARGIN = 1e-6
#: working precision (bits) for high-precision trig evaluation
WORKPREC = 96


def margin():
    value = os.environ.get("LISSAKNOT_TOL")
    if not value:
        return MARGIN
    return float(value)
