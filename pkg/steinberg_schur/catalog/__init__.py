from steinberg_schur.catalog.catalog import FORMULAS, TitsIndexEntry, catalog_labels, additive_invariants, predict
from steinberg_schur.catalog.cases import CASE_CLASSES, TCTrivialCase, TCChainCase, ModelCase, FormulaOnlyCase
from steinberg_schur.catalog.verify import case_names, make_case, verify
from steinberg_schur.catalog.tables import TABLE_ROWS, reproduce_tables
