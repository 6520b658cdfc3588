"""
Module to define a VerificationCase class with methods to build, run and report a registered case.
"""
import yaml
from steinberg_schur.abelian.family import family_group
from steinberg_schur.abelian.invariants import AbelianInvariants
from steinberg_schur.common.settings import Settings
from steinberg_schur.definitions import CASES_PATH
from steinberg_schur.phirings.recipes import make_ring
from steinberg_schur.rootsys import build


METHODS = ['tc-trivial', 'tc-chain', 'model', 'formula-only']


class VerificationReport:
    """
    Machine-readable outcome of a verification case.

    Parameters
    ----------
    case : string (required)
        Case id.

    method : string (required)

    status : string (required)
        pass, fail or inconclusive.

    numbers : dict (required)
        Every number computed on the way, in the order it was computed.

    notes : list of strings (default=None)
        Reasons for a fail or inconclusive status.
    """
    def __init__(self, case, method, status, numbers, notes=None):
        if status not in ('pass', 'fail', 'inconclusive'):
            raise ValueError(f'Unknown status {status}. Choose from pass, fail, inconclusive')
        self.case = case
        self.method = method
        self.status = status
        self.numbers = numbers
        self.notes = notes or []

    def __repr__(self):
        return f'VerificationReport({self.case!r}, {self.method}, status={self.status})'

    @property
    def passed(self):
        return self.status == 'pass'

    def lines(self):
        """
        Get the report as key=value lines, notes last as # prose.
        """
        lines = [f'case={self.case}', f'method={self.method}']
        lines += [f'{key}={value}' for key, value in self.numbers.items()]
        lines.append(f'status={self.status}')
        lines += [f'# {note}' for note in self.notes]
        return lines


class VerificationCase:
    """
    VerificationCase class to handle a registered case, including to build its ring and run its method.

    The entry of cases.yml is set as attributes: label, family, rank, ring, etale, method, expected,
    expected_order, oracle and budget.

    Parameters
    ----------
    name : string (required)
        Case id in cases.yml.

    settings : Settings (default=None)

    budget : int (default=None)
        Coset budget replacing the registered one.

    verbose : bool (default=False)
    """
    def __init__(self, name, settings=None, budget=None, verbose=False):
        self.name = name
        self.settings = settings or Settings()
        self.verbose = verbose
        self.label = None
        self.etale = None
        self.expected_order = None
        self.oracle = None
        self.budget = None

        # Set information about the case as attributes
        cases_info = yaml.safe_load(open(CASES_PATH, encoding='utf-8'))
        if self.name not in cases_info:
            raise ValueError(f'Unknown case {self.name}. Choose from {list(cases_info)}')
        case_info = cases_info[self.name]
        for info in case_info:
            setattr(self, info.lower(), case_info[info])
        if self.method not in METHODS:
            raise ValueError(f'Case {self.name} has unknown method {self.method}. Choose from {METHODS}')
        self.expected = AbelianInvariants(self.expected)

        # Budgets must be positive
        if budget is not None:
            self.budget = budget
        if self.budget is not None and self.budget <= 0:
            raise ValueError(f'The budget of case {self.name} must be positive, got {self.budget}')

    def __repr__(self):
        return f'{type(self).__name__}({self.name!r})'

    @property
    def max_cosets(self):
        return self.settings.max_cosets if self.budget is None else self.budget

    def root_system(self):
        return build(self.family, self.rank)

    def base_ring(self):
        return make_ring(self.ring, settings=self.settings)

    def algebra(self):
        """
        Get the Phi-ring the Steinberg group of the case is built over.
        """
        from steinberg_schur.catalog.catalog import TitsIndexEntry

        k = self.base_ring()
        if self.label is None:
            return k
        algebra = TitsIndexEntry(self.label).algebra(k, self.etale)
        if algebra is None:
            raise ValueError(f'Case {self.name}: the Tits index {self.label} has no ring builder')
        return algebra

    def prediction(self):
        """
        Get the predicted multiplier: the catalog formula, or the family group when the case has no label.
        """
        from steinberg_schur.catalog.catalog import predict

        if self.label is None:
            return family_group(self.root_system(), self.algebra()).invariants
        return predict(self.label, self.base_ring(), self.etale)

    def log(self, message):
        if self.verbose:
            print(f'# {self.name}: {message}')

    def report(self, status, numbers, notes=None):
        return VerificationReport(self.name, self.method, status, numbers, notes)

    def run(self):
        """
        Run the method of the case and return a VerificationReport.
        """
        raise NotImplementedError
