from steinberg_schur.presentations.words import reduce, invert, multiply, commutator, conjugate, power, \
    exponent_sums, cyclic_normal_form
from steinberg_schur.presentations.presentation import GenKey, RelatorTag, Presentation
from steinberg_schur.presentations.steinberg import steinberg, generator_root, positive_generators
from steinberg_schur.presentations.presentation_io import parse_presentation, serialize_presentation, \
    read_presentation, write_presentation
