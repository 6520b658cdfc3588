"""
Module with the verification methods of registered cases: complete enumeration, subgroup chains, the
D4 model and formula-only checks.
"""
import warnings
import galois

from steinberg_schur.abelian.smith import abelianization
from steinberg_schur.common.verification_case import VerificationCase
from steinberg_schur.enumerator.chain import subgroup_chain_order
from steinberg_schur.enumerator.oracles import MatrixGroupOracle, matrix_order, orthogonal_images, \
    transvection_images, verify_homomorphism
from steinberg_schur.enumerator.todd_coxeter import todd_coxeter
from steinberg_schur.extensions.d4_model import build_d4_model, verify_d4_action
from steinberg_schur.extensions.predicted import predicted_uce
from steinberg_schur.presentations.steinberg import positive_generators, steinberg


class _Outcome:
    """
    Collects the numbers of a run and the reasons that decide its status.
    """
    def __init__(self):
        self.numbers = {}
        self.failures = []
        self.open = []

    def fail(self, note):
        self.failures.append(note)

    def leave_open(self, note):
        self.open.append(note)

    @property
    def status(self):
        if self.failures:
            return 'fail'
        if self.open:
            return 'inconclusive'
        return 'pass'


class EnumerationCase(VerificationCase):
    """
    Shared steps of the enumeration methods: the predicted extension, the oracle and the final checks.
    """
    def build_uce(self, rs, algebra):
        with warnings.catch_warnings():
            warnings.simplefilter('ignore')
            return predicted_uce(rs, algebra, verbose=self.verbose)

    def check_oracle(self, presentation, outcome):
        """
        Evaluate the Steinberg relators in a matrix group and record its order as a lower bound.
        """
        if self.oracle is None:
            return None
        if self.oracle == 'transvection':
            images = transvection_images(presentation, galois.GF(self.base_ring().size))
        elif self.oracle == 'orthogonal':
            images = orthogonal_images(presentation, self.rank)
        else:
            raise ValueError(f'Case {self.name} has unknown oracle {self.oracle}. Choose from transvection, orthogonal')
        homomorphism = verify_homomorphism(presentation, images)
        outcome.numbers['oracle_homomorphism'] = homomorphism.holds
        if not homomorphism.holds:
            outcome.fail(f'oracle relator {homomorphism.relator_index} fails: {homomorphism.tag}')
            return None
        order = matrix_order(MatrixGroupOracle(list(images.values()), settings=self.settings),
                             verbose=self.verbose)
        outcome.numbers['oracle_order'] = order
        if order is None:
            outcome.leave_open('matrix oracle capped')
        return order

    def compare(self, outcome, order, uce_order, uce, oracle_order=None):
        predicted = self.prediction()
        outcome.numbers['predicted'] = predicted
        outcome.numbers['expected'] = self.expected
        if predicted != self.expected:
            outcome.fail(f'predicted {predicted.describe()} but expected {self.expected.describe()}')
        if order is None or uce_order is None:
            outcome.leave_open('enumeration capped')
            return
        ratio, remainder = divmod(uce_order, order)
        outcome.numbers['ratio'] = ratio if not remainder else f'{uce_order}/{order}'
        if self.expected_order is not None and order != self.expected_order:
            outcome.fail(f'order {order} differs from {self.expected_order}')
        if oracle_order is not None and oracle_order != order:
            outcome.fail(f'oracle order {oracle_order} differs from {order}')
        if remainder or ratio != predicted.order:
            encoding = 'exact' if uce.exact else 'inexact'
            outcome.fail(f'|UCE|/|St| = {uce_order}/{order} differs from |predict| = {predicted.order} '
                         f'({encoding} extension encoding)')

    def check_perfect(self, uce, outcome):
        invariants = abelianization(uce.presentation)
        outcome.numbers['uce_abelianization'] = invariants
        if not invariants.is_trivial:
            outcome.fail(f'the extension is not perfect, abelianization {invariants.describe()}')


class TCTrivialCase(EnumerationCase):
    """
    Enumerate St and the predicted extension on the trivial subgroup.
    """
    def run(self):
        outcome = _Outcome()
        rs, algebra = self.root_system(), self.algebra()
        presentation = steinberg(rs, algebra)
        self.log(f'enumerating {presentation.name} with at most {self.max_cosets} cosets')
        table = todd_coxeter(presentation, max_cosets=self.max_cosets, settings=self.settings, verbose=self.verbose)
        outcome.numbers['order'] = table.index
        oracle_order = self.check_oracle(presentation, outcome)

        uce = self.build_uce(rs, algebra)
        self.log(f'enumerating {uce.presentation.name}')
        uce_table = todd_coxeter(uce.presentation, max_cosets=self.max_cosets, settings=self.settings,
                                 verbose=self.verbose)
        outcome.numbers['uce_order'] = uce_table.index
        outcome.numbers['exact'] = uce.exact
        self.check_perfect(uce, outcome)
        self.compare(outcome, table.index, uce_table.index, uce, oracle_order)
        return self.report(outcome.status, outcome.numbers, outcome.failures + outcome.open)


class TCChainCase(EnumerationCase):
    """
    Multiply the index of the positive unipotent subgroup by its order, for St and for the extension
    with the central generators added to the subgroup. Restricted presentations only bound the
    subgroup order from above, so the oracle order is recorded where one exists.
    """
    def run(self):
        outcome = _Outcome()
        rs, algebra = self.root_system(), self.algebra()
        presentation = steinberg(rs, algebra)
        positive = positive_generators(presentation, rs)
        self.log(f'chain through {len(positive)} positive generators of {presentation.name}')
        chain = subgroup_chain_order(presentation, [positive], max_cosets=self.max_cosets, settings=self.settings,
                                     verbose=self.verbose)
        outcome.numbers['indices'] = ','.join(str(index) for index in chain.indices)
        outcome.numbers['order'] = chain.order
        if chain.failing_step is not None:
            outcome.numbers['failing_step'] = chain.failing_step
        oracle_order = self.check_oracle(presentation, outcome) if chain.order is not None else None
        if self.oracle is None and chain.order is not None:
            outcome.leave_open('no matrix oracle, the chain order is only an upper bound')

        uce = self.build_uce(rs, algebra)
        uce_chain = subgroup_chain_order(uce.presentation, [positive + uce.central_generators],
                                         max_cosets=self.max_cosets, settings=self.settings, verbose=self.verbose)
        outcome.numbers['uce_indices'] = ','.join(str(index) for index in uce_chain.indices)
        outcome.numbers['uce_order'] = uce_chain.order
        outcome.numbers['exact'] = uce.exact
        self.check_perfect(uce, outcome)
        self.compare(outcome, chain.order, uce_chain.order, uce, oracle_order)
        return self.report(outcome.status, outcome.numbers, outcome.failures + outcome.open)


class ModelCase(VerificationCase):
    """
    Verify the D4 model M: its relations, the action of St(D4, F2) and the order-64 subgroup.
    """
    def run(self):
        outcome = _Outcome()
        model = build_d4_model()
        check = verify_d4_action(model, verbose=self.verbose)
        outcome.numbers['model_order'] = model.order
        for item in check.items:
            outcome.numbers[item.name.replace(' ', '_')] = item.passed
            if not item.passed:
                outcome.fail(f'{item.name}: {item.detail}')
        predicted = self.prediction()
        outcome.numbers['predicted'] = predicted
        outcome.numbers['expected'] = self.expected
        if predicted != self.expected:
            outcome.fail(f'predicted {predicted.describe()} but expected {self.expected.describe()}')
        return self.report(outcome.status, outcome.numbers, outcome.failures)


class FormulaOnlyCase(VerificationCase):
    """
    Predict the multiplier, emit the predicted extension and check that it is perfect. No group order is claimed.

    Abelianizations are kept per extension in the class attribute abelianizations, so repeated runs in one
    process reduce each relation matrix once.
    """
    abelianizations = {}

    @property
    def extension_key(self):
        return self.label, self.family, self.rank, self.ring, self.etale, self.settings.relator_order_version

    def run(self):
        outcome = _Outcome()
        predicted = self.prediction()
        outcome.numbers['predicted'] = predicted
        outcome.numbers['expected'] = self.expected
        if predicted != self.expected:
            outcome.fail(f'predicted {predicted.describe()} but expected {self.expected.describe()}')

        with warnings.catch_warnings():
            warnings.simplefilter('ignore')
            uce = predicted_uce(self.root_system(), self.algebra(), verbose=self.verbose)
        outcome.numbers['generators'] = uce.presentation.generators
        outcome.numbers['relators'] = len(uce.presentation.relators)
        outcome.numbers['exact'] = uce.exact
        invariants = self.abelianizations.get(self.extension_key)
        if invariants is None:
            invariants = abelianization(uce.presentation)
            self.abelianizations[self.extension_key] = invariants
        else:
            self.log('abelianization taken from an earlier run')
        outcome.numbers['uce_abelianization'] = invariants
        if not invariants.is_trivial:
            outcome.fail(f'the extension is not perfect, abelianization {invariants.describe()}')
        return self.report(outcome.status, outcome.numbers, outcome.failures)


CASE_CLASSES = {
    'tc-trivial': TCTrivialCase,
    'tc-chain': TCChainCase,
    'model': ModelCase,
    'formula-only': FormulaOnlyCase,
}
