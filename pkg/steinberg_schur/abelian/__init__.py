from steinberg_schur.abelian.invariants import AbelianInvariants
from steinberg_schur.abelian.smith import SmithForm, smith_normal_form, relation_matrix, echelon_rows, abelianization
from steinberg_schur.abelian.groups import GroupTable, cyclic_table, alternating_table, table_from_permutations, \
    table_from_matrices, special_linear_table, parse_group_table, serialize_group_table, read_group_table
from steinberg_schur.abelian.homology import schreier_presentation, image_size_log, h2_bruteforce, schur_multiplier
from steinberg_schur.abelian.family import FamilyCarrier, FamilyGroup, family_group
