"""
Module to compute group orders through a descending chain of subgroups.
"""
from steinberg_schur.common.settings import Settings
from steinberg_schur.enumerator.todd_coxeter import todd_coxeter


class ChainResult:
    """
    Result of subgroup_chain_order.

    Parameters
    ----------
    status : string (required)
        complete or capped.

    indices : list of int (required)
        Index of every completed step, the last entry being the order of the final subgroup.

    failing_step : int (default=None)
        Step that was capped.
    """
    def __init__(self, status, indices, failing_step=None):
        self.status = status
        self.indices = indices
        self.failing_step = failing_step

    def __repr__(self):
        return f'ChainResult(status={self.status!r}, indices={self.indices}, failing_step={self.failing_step})'

    @property
    def order(self):
        if self.status != 'complete':
            return None
        order = 1
        for index in self.indices:
            order *= index
        return order


def subgroup_chain_order(presentation, chain, max_cosets=None, strategy='hlt', settings=None, verbose=False):
    """
    Get the order of a group as the product of the indices along a chain of subgroups.

    Step k enumerates the cosets of the subgroup generated by chain[k] inside the subgroup generated
    by chain[k - 1] (the whole group for k = 0). Each subgroup is presented by the relators of the
    ambient presentation that only involve its generators, so the result is an upper bound for the
    order when a restricted presentation misses relations. The final subgroup is enumerated on
    the trivial subgroup.

    Parameters
    ----------
    presentation : Presentation (required)

    chain : list of lists of int (required)
        Generator indices of the ambient presentation. Every set must be contained in the previous one.

    max_cosets : int (default=None)
        Cap per step. If None, the configured chain_step_cosets is used.

    strategy : string (default='hlt')

    settings : Settings (default=None)

    verbose : bool (default=False)
    """
    settings = settings or Settings()
    cap = settings.chain_step_cosets if max_cosets is None else max_cosets
    current = list(range(1, presentation.generators + 1))
    steps = [list(dict.fromkeys(generators)) for generators in chain]
    if not steps or steps[-1]:
        steps.append([])

    indices = []
    for k, generators in enumerate(steps):
        for g in generators:
            if g not in current:
                raise ValueError(f'Chain step {k}: generator {g} is not in the previous subgroup')
        restricted = presentation.restricted(current, name=f'{presentation.name}/step{k}')
        local = {g: n + 1 for n, g in enumerate(current)}
        subgroup = [(local[g],) for g in generators]
        table = todd_coxeter(restricted, subgroup, max_cosets=cap, strategy=strategy, settings=settings)
        if verbose:
            print(f'# chain step {k}: generators={len(current)} subgroup={len(generators)} '
                  f'status={table.status} index={table.index}')
        if not table.is_complete:
            return ChainResult('capped', indices, failing_step=k)
        indices.append(table.index)
        current = generators
    return ChainResult('complete', indices)
