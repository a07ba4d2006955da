"""Miscellaneous utilities."""

import argparse
import sys
import time

import sympy


def time_function(function, parameters, verbosity, task_string):
    """Time a function, return the function's output, and print the time taken."""
    start_time = time.time()

    output = function(*parameters)

    if verbosity > 1:
        elapsed_time = (time.time() - start_time)
        print('{:.4} seconds to {}.'.format(elapsed_time, task_string), file=sys.stderr)

    return output


def validate_positive(x):
    """Validate that a value is a positive integer."""
    value = int(x)
    if value >= 1:
        return value
    raise argparse.ArgumentTypeError('{} is not a positive integer'.format(x))


def validate_odd_prime(x):
    """Validate that a value is an odd prime."""
    value = int(x)
    if value > 2 and sympy.isprime(value):
        return value
    raise argparse.ArgumentTypeError('{} is not an odd prime'.format(x))
