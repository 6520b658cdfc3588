"""
Module to run multiple verification cases at once.
"""
import warnings
from concurrent.futures import ProcessPoolExecutor
import pandas as pd
import yaml
from steinberg_schur.catalog.verify import verify
from steinberg_schur.common.settings import Settings
from steinberg_schur.definitions import CASES_PATH


def _run_case(name, overrides, budget, verbose):
    # Runs in a worker process, so settings travel as plain overrides
    return verify(name, settings=Settings(overrides), budget=budget, verbose=verbose)


class CaseRunner:
    """
    Class to handle multiple verification cases.

    Parameters
    ----------
    settings : dict (default=None)
        Setting overrides passed to every case, e.g. {'max_cosets': 100000}.
    """
    def __init__(self, settings=None):
        self.cases_info = yaml.safe_load(open(CASES_PATH, encoding='utf-8'))
        self.case_names = list(self.cases_info)
        self.overrides = settings or {}
        Settings(self.overrides)

    def get_results(self, cases=None, methods=None, jobs=1, budget=None, verbose=False):
        """
        Run cases and merge their reports.

        Parameters
        ----------
        cases : list (default=None)
            Case ids to run. If None, all cases are run.

        methods : list (default=None)
            If given, only cases with one of these methods are run, e.g. ['formula-only'].

        jobs : int (default=1)
            Number of worker processes. Each case runs single-threaded inside one worker.

        budget : int (default=None)
            Coset budget replacing the registered ones.

        verbose : bool (default=False)

        Returns
        -------
        results : pandas DataFrame
            One row per case sorted by case id, with columns Case, Label, Method, Status, Predicted,
            Expected, Numbers and Notes.
        """
        if jobs < 1:
            raise ValueError(f'jobs must be at least 1, got {jobs}')
        if cases is not None:
            case_names = self.validate_case_names(cases)
        else:
            case_names = self.case_names.copy()
        if methods is not None:
            case_names = [name for name in case_names if self.cases_info[name]['method'] in methods]

        print(f'# Running cases {case_names}...')
        if jobs == 1 or len(case_names) <= 1:
            reports = [_run_case(name, self.overrides, budget, verbose) for name in case_names]
        else:
            with ProcessPoolExecutor(max_workers=jobs) as executor:
                futures = [executor.submit(_run_case, name, self.overrides, budget, verbose) for name in case_names]
                reports = [future.result() for future in futures]

        # Merge all reports
        rows = []
        for report in reports:
            numbers = dict(report.numbers)
            rows.append({
                'Case': report.case,
                'Label': self.cases_info[report.case].get('label'),
                'Method': report.method,
                'Status': report.status,
                'Predicted': str(numbers.pop('predicted', '')),
                'Expected': str(numbers.pop('expected', '')),
                'Numbers': ' '.join(f'{key}={value}' for key, value in numbers.items()),
                'Notes': '; '.join(report.notes),
            })
        columns = ['Case', 'Label', 'Method', 'Status', 'Predicted', 'Expected', 'Numbers', 'Notes']
        results = pd.DataFrame(rows, columns=columns)
        results = results.sort_values(by=['Case']).reset_index(drop=True)
        self.reports = sorted(reports, key=lambda report: report.case)
        return results

    def validate_case_names(self, cases):
        """
        Check whether all names in a list are registered case ids, dropping the others.
        """
        valid_cases = []
        for case in cases:
            if case.strip().lower() not in self.cases_info:
                warnings.warn(f'Case {case} not recognised, skipping. Case options are: {self.case_names}')
            else:
                valid_cases.append(case.strip().lower())
        return valid_cases
