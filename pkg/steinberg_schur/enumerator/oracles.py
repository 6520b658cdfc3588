"""
Module with concrete-group oracles: matrix groups closed by breadth-first search and evaluation of
presentations in matrix or permutation groups.
"""
from collections import namedtuple
import galois
import numpy as np

from steinberg_schur.common.settings import Settings


HomomorphismReport = namedtuple('HomomorphismReport', ['holds', 'relator_index', 'relator', 'tag'])


class MatrixGroupOracle:
    """
    Matrix group given by invertible generator matrices over a finite field.

    Parameters
    ----------
    generators : list of galois FieldArray (required)
        Square matrices of one dimension over one field.

    settings : Settings (default=None)
        matrix_cap bounds the number of stored elements.
    """
    def __init__(self, generators, settings=None):
        if not generators:
            raise ValueError('A matrix group oracle needs at least one generator')
        self.field = type(generators[0])
        self.dimension = generators[0].shape[0]
        for matrix in generators:
            if not isinstance(matrix, galois.FieldArray):
                raise TypeError(f'Generators must be galois field arrays, got {type(matrix).__name__}')
            if type(matrix) is not self.field:
                raise ValueError(f'Generators mix the fields {self.field.name} and {type(matrix).name}')
            if matrix.shape != (self.dimension, self.dimension):
                raise ValueError(f'Generator of shape {matrix.shape} does not match dimension {self.dimension}')
            if np.linalg.det(matrix) == 0:
                raise ValueError('Generators must be invertible')
        self.generators = list(generators)
        self.settings = settings or Settings()
        self.q = self.field.order
        self.elements = None
        self.status = None

    def __repr__(self):
        return f'MatrixGroupOracle(dimension={self.dimension}, q={self.q}, generators={len(self.generators)})'

    def _close_prime(self, cap):
        # Batched products modulo p on plain integer arrays
        p = self.field.characteristic
        generators = np.stack([np.asarray(g.view(np.ndarray), dtype=np.int64) for g in self.generators])
        identity = np.eye(self.dimension, dtype=np.int64)
        dtype = np.uint8 if p < 256 else np.int64
        seen = {identity.astype(dtype).tobytes()}
        frontier = identity[None]
        while len(frontier):
            found = []
            for start in range(0, len(frontier), 20000):
                block = frontier[start:start + 20000]
                products = np.matmul(block[:, None], generators[None]) % p
                products = products.reshape(-1, self.dimension, self.dimension)
                for matrix in products:
                    key = matrix.astype(dtype).tobytes()
                    if key not in seen:
                        seen.add(key)
                        found.append(matrix)
                        if len(seen) > cap:
                            return None
            frontier = np.array(found, dtype=np.int64).reshape(-1, self.dimension, self.dimension)
        return len(seen)

    def _close_field(self, cap):
        identity = self.field.Identity(self.dimension)
        seen = {identity.tobytes()}
        frontier = [identity]
        while frontier:
            found = []
            for matrix in frontier:
                for generator in self.generators:
                    product = matrix @ generator
                    key = product.tobytes()
                    if key not in seen:
                        seen.add(key)
                        found.append(product)
                        if len(seen) > cap:
                            return None
            frontier = found
        return len(seen)

    def close(self, cap=None, verbose=False):
        """
        Close the generators under multiplication.

        Returns
        -------
        order : int or None
            The group order, or None (status capped) if more than cap elements are found.
        """
        cap = self.settings.matrix_cap if cap is None else cap
        if cap < 1:
            raise ValueError(f'The matrix cap must be at least 1, got {cap}')
        if self.field.degree == 1:
            order = self._close_prime(cap)
        else:
            order = self._close_field(cap)
        self.status = 'capped' if order is None else 'complete'
        self.elements = order
        if verbose:
            print(f'# matrix group of dimension {self.dimension} over GF({self.q}): status={self.status} order={order}')
        return order


def matrix_order(oracle, cap=None, verbose=False):
    """
    Get the order of a matrix group by BFS closure, or None if the cap is exceeded.
    """
    return oracle.close(cap=cap, verbose=verbose)


def _image_list(presentation, images):
    result = []
    for g in range(1, presentation.generators + 1):
        key = presentation.key_of(g)
        if isinstance(images, (list, tuple)):
            image = images[g - 1] if g - 1 < len(images) else None
        elif key is not None and key in images:
            image = images[key]
        else:
            image = images.get(g)
        if image is None:
            raise ValueError(f'No image given for generator {presentation.names[g - 1]}')
        result.append(image)
    return result


def verify_homomorphism(presentation, images):
    """
    Check that the relators of a presentation hold for the given generator images.

    Parameters
    ----------
    presentation : Presentation (required)

    images : dict or list (required)
        Images keyed by GenKey or by 1-based generator index, or listed in generator order.
        Either all images are square galois matrices over one field (words multiply left to right),
        or all are permutations as integer arrays (x y acts as x then y).

    Returns
    -------
    report : HomomorphismReport
        holds, and the index, word and tag of the first relator that fails.
    """
    values = _image_list(presentation, images)
    if all(isinstance(value, galois.FieldArray) for value in values):
        field, shape = type(values[0]), values[0].shape
        if len(shape) != 2 or shape[0] != shape[1]:
            raise ValueError(f'Matrix images must be square, got shape {shape}')
        for value in values:
            if type(value) is not field or value.shape != shape:
                raise ValueError(f'Images mix shapes or fields: {shape} over {field.name} '
                                 f'and {value.shape} over {type(value).name}')
        identity = field.Identity(shape[0])
        inverses = [np.linalg.inv(value) for value in values]

        def evaluate(word):
            result = identity
            for letter in word:
                result = result @ (values[letter - 1] if letter > 0 else inverses[-letter - 1])
            return result
    else:
        values = [np.asarray(value, dtype=np.int64) for value in values]
        degree = len(values[0])
        for value in values:
            if value.ndim != 1 or len(value) != degree or sorted(value.tolist()) != list(range(degree)):
                raise ValueError(f'Permutation images must be permutations of range({degree})')
        identity = np.arange(degree)
        inverses = [np.argsort(value) for value in values]

        def evaluate(word):
            result = identity
            for letter in word:
                result = (values[letter - 1] if letter > 0 else inverses[-letter - 1])[result]
            return result

    for k, word in enumerate(presentation.relators):
        if not np.array_equal(evaluate(word), identity):
            tag = presentation.tags[k] if k < len(presentation.tags) else None
            return HomomorphismReport(False, k, word, tag)
    return HomomorphismReport(True, None, None, None)


def transvection_images(presentation, field):
    """
    Get the elementary matrices I + p E_ij of the generators of an A-type Steinberg presentation.

    Parameters
    ----------
    presentation : Presentation (required)
        Built over gf(q), whose element ids are the integer representations of field.

    field : galois field class (required)
    """
    images = {}
    for g in range(1, presentation.generators + 1):
        key = presentation.key_of(g)
        if key is None or key.kind != 'long':
            raise ValueError(f'Generator {presentation.names[g - 1]} is not an A-type root generator')
        dimension = len(key.label)
        i, j = key.label.index(1), key.label.index(-1)
        matrix = field.Identity(dimension)
        matrix[i, j] = field(key.element)
        images[key] = matrix
    return images


def orthogonal_images(presentation, rank):
    """
    Get the images of the generators of St(B_l) over the B33 ring of F2 in the orthogonal group
    of x_0^2 + sum x_i x_{-i} on F2^(2l+1).

    The basis is e_0, e_1, ..., e_l, e_{-1}, ..., e_{-l}. Over F2 the long root element x_ij(1) maps
    e_i to e_i + e_j and e_{-j} to e_{-j} + e_{-i}; the short root element x_i(1) maps e_{-i} to
    e_{-i} + e_0 + e_i.
    """
    GF2 = galois.GF(2)
    dimension = 2 * rank + 1

    def position(i):
        return i if i > 0 else rank - i

    images = {}
    for g in range(1, presentation.generators + 1):
        key = presentation.key_of(g)
        if key is None or key.element != 1 or key.kind not in ('long', 'short'):
            raise ValueError('Orthogonal images need a B-type presentation over the B33 ring of F2')
        matrix = GF2.Identity(dimension)
        if key.kind == 'long':
            i, j = key.label
            matrix[position(j), position(i)] = 1
            matrix[position(-i), position(-j)] = 1
        else:
            i, = key.label
            matrix[0, position(-i)] = 1
            matrix[position(i), position(-i)] = 1
        images[key] = matrix
    return images
