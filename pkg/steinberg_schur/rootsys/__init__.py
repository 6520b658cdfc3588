from .root_system import RootSystem, RootSubsetReport, build, interval, classify_subset, weyl_orbits, parse_root_system
from .structure_constants import StructureConstants, structure_constants
