"""
Module to load the resource budgets and caps shared by all computations.
"""
import os
import yaml
from steinberg_schur.definitions import CONFIG_PATH


class Settings:
    """
    Resource budgets and caps read from config.yml.

    The yaml file is read once and cached on the class. Each key of the settings block is set as a
    lower-case attribute. The environment variable STEINBERG_BUDGET_MB overrides budget_mb.

    Parameters
    ----------
    overrides : dict (default=None)
        Values replacing the configured ones, e.g. {'max_cosets': 1000}.
    """
    data = None

    def __init__(self, overrides=None):
        if Settings.data is None:
            Settings.data = yaml.safe_load(open(CONFIG_PATH, encoding='utf-8'))['settings']

        # Set the configured values as attributes
        for info in Settings.data:
            setattr(self, info.lower(), Settings.data[info])

        # Environment and caller overrides
        budget = os.environ.get('STEINBERG_BUDGET_MB')
        if budget is not None:
            try:
                self.budget_mb = int(budget)
            except ValueError:
                raise ValueError(f'STEINBERG_BUDGET_MB must be an integer, got {budget!r}')
        if overrides is not None:
            for key, value in overrides.items():
                if key.lower() not in Settings.data:
                    raise ValueError(f'Unknown setting {key}. Choose from {sorted(Settings.data)}')
                setattr(self, key.lower(), value)

        # Validate the budgets
        for key in ['ring_size_cap', 'max_cosets', 'chain_step_cosets', 'matrix_cap', 'sample_cap',
                    'h2_group_cap', 'generic_uce_cap', 'generic_conjugation_cap', 'budget_mb']:
            if getattr(self, key) <= 0:
                raise ValueError(f'Setting {key} must be positive, got {getattr(self, key)}')

    def coset_cap(self, columns, requested=None):
        """
        Get the coset cap for a table with the given number of columns, clamped to the memory budget.

        Parameters
        ----------
        columns : int (required)
            Number of columns of the coset table (twice the number of generators).

        requested : int (default=None)
            Requested cap. If None, max_cosets is used.
        """
        cap = self.max_cosets if requested is None else requested
        if cap < 1:
            raise ValueError(f'The coset cap must be at least 1, got {cap}')
        memory_cap = (self.budget_mb * 1024 * 1024) // (4 * max(columns, 1))
        return max(1, min(cap, memory_cap))
