# Import subpackages
from . import common
from .rootsys import *
from .phirings import *
from .presentations import *
from .enumerator import *
from .abelian import *
from .extensions import *
from .catalog import FORMULAS, TitsIndexEntry, catalog_labels, additive_invariants, predict, verify, make_case, \
    case_names, reproduce_tables

# Import case runner
from .case_runner import CaseRunner
