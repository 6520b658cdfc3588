from steinberg_schur.phirings.finite_ring import FiniteRing, Operation, Signature, nucleus, center, product_ring
from steinberg_schur.phirings.b_ring import BRing
from steinberg_schur.phirings.f4_ring import F4Ring
from steinberg_schur.phirings.recipes import EtaleAlgebra, make_ring, parse_recipe, gf, zmod, dual_numbers, \
    etale_quadratic
from steinberg_schur.phirings.axioms import Axiom, AxiomReport, check_axioms, VARIETIES
from steinberg_schur.phirings.congruence import QuotientResult, quotient, in_variety
from steinberg_schur.phirings.decompositions import IdealDecomposition, ideal_decompose, split_etale
from steinberg_schur.phirings.weak_units import WeakUnitReport, check_weak_unit
from steinberg_schur.phirings.artin import check_artin
from steinberg_schur.phirings.morphisms import find_isomorphism, subdirect_classification, zero_ring
from steinberg_schur.phirings.tits_rings import TITS_RINGS, tits_ring
from steinberg_schur.phirings.ring_io import parse_ring, serialize_ring
