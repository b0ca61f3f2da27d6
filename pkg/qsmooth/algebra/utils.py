import logging
import os

# global parameters
DEFAULT_FUEL = 10 ** 6
FUEL_ENV = 'QSMOOTH_FUEL'
NF_CACHE_LIMIT = 200000

# parameter modes
REAL = 'real'
UNITARY = 'unitary'
MODES = (REAL, UNITARY)

# identity word
ONE = ()

shandle = logging.StreamHandler()
shandle.setFormatter(
    logging.Formatter(
        '[%(levelname)s:%(process)d %(module)s:%(lineno)d %(asctime)s] '
        '%(message)s'))
log = logging.getLogger('qsmooth')
log.propagate = False
log.addHandler(shandle)
log.setLevel(logging.INFO)


class QSmoothError(Exception):
    """Base class of every error raised by qsmooth."""


class ScalarError(QSmoothError, ArithmeticError):
    pass


class PoleError(ScalarError):
    pass


class PolyError(ScalarError):
    pass


class PresentationError(QSmoothError):
    pass


class FuelExhausted(QSmoothError):
    pass


class GradingError(QSmoothError):
    pass


class GWAError(QSmoothError):
    pass


class CatalogError(QSmoothError):
    pass


class DslSyntaxError(QSmoothError):
    """Syntax error in a presentation document, with its location."""

    def __init__(self, message, line=None, column=None):
        self.message = message
        self.line = line
        self.column = column
        if line is not None:
            message = '%s (line %d, column %d)' % (message, line, column)
        super().__init__(message)


def default_fuel():
    value = os.environ.get(FUEL_ENV)
    if not value:
        return DEFAULT_FUEL
    try:
        fuel = int(value)
    except ValueError:
        log.warning('Ignoring malformed %s=%r', FUEL_ENV, value)
        return DEFAULT_FUEL
    return max(fuel, 1)
