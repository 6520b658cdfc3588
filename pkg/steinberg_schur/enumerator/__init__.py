from steinberg_schur.enumerator.todd_coxeter import CosetTable, todd_coxeter, group_order, coset_words, \
    relator_closes, letter_column
from steinberg_schur.enumerator.chain import ChainResult, subgroup_chain_order
from steinberg_schur.enumerator.oracles import MatrixGroupOracle, HomomorphismReport, matrix_order, \
    verify_homomorphism, transvection_images, orthogonal_images
