'''Stores numeric tolerances, caps and environment overrides for every module.'''

import os
from fractions import Fraction

DerivativeOrderCap = 8
ExactPolynomialDegreeLimit = 64

QuadratureTolerance = 1e-10
QuadratureRelativeTolerance = 1e-13
QuadratureSubdivisionLimit = 2000

ApproxTolerance = 1e-10 # |c| <= ApproxTolerance counts as zero in float predicates
EigenDegeneracyTolerance = 1e-9

LinearityProbeScalar = Fraction(3, 7)

DefaultBackend = os.environ.get('SMOOTH_BACKEND', 'exact')
LoggingLevel = os.environ.get('SMOOTH_LOG_LEVEL', 'WARNING')
