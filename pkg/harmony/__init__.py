"""Exact harmonic-like numbers and mechanical verification of their identities."""

from harmony.app import Harmony
from harmony.exact_math import Rational
from harmony.identities import Identity
from harmony.properties import (Integer, NonNegativeInteger, Parameter,
                                PositiveInteger)
from harmony.sequences import Family, spec
