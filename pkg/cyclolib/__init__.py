"""Coefficients and heights of cyclotomic polynomials of order three."""
from . import errors, io_cyclo, utils
