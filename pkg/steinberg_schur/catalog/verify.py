"""
Module to run a registered verification case by id.
"""
import yaml
from steinberg_schur.catalog.cases import CASE_CLASSES
from steinberg_schur.common.verification_case import VerificationCase
from steinberg_schur.definitions import CASES_PATH


def case_names():
    return list(yaml.safe_load(open(CASES_PATH, encoding='utf-8')))


def make_case(name, settings=None, budget=None, verbose=False):
    """
    Initiate the case class of a registered case according to its method.
    """
    method = VerificationCase(name, settings=settings).method
    return CASE_CLASSES[method](name, settings=settings, budget=budget, verbose=verbose)


def verify(case, settings=None, budget=None, verbose=False):
    """
    Run a verification case.

    Parameters
    ----------
    case : string or VerificationCase (required)
        Case id in cases.yml, or an initiated case.

    settings : Settings (default=None)

    budget : int (default=None)
        Coset budget replacing the registered one.

    verbose : bool (default=False)

    Returns
    -------
    report : VerificationReport
        Status pass, fail or inconclusive (a capped enumeration is inconclusive, never a fail).
    """
    if isinstance(case, str):
        case = make_case(case, settings=settings, budget=budget, verbose=verbose)
    elif not isinstance(case, VerificationCase):
        raise TypeError(f'{case} is not a case id or a VerificationCase')
    if type(case) is VerificationCase:
        raise TypeError(f'{case.name} was initiated without its method, use make_case')
    return case.run()
