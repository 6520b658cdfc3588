"""
Module to reproduce the table of nontrivial Schur multipliers of Steinberg groups over small rings.
"""
import pandas as pd

from steinberg_schur.common.verification_case import VerificationCase


# Group, ring and the registered case behind each row
TABLE_ROWS = [
    ('A3', '2', 'a3-f2'),
    ('B3', '2', 'b3-f2'),
    ('B3', '3', 'b3-f3'),
    ('C3', '2', 'c3-f2'),
    ('D4', '2', 'd4-f2-model'),
    ('F4', '2', 'f4-f2'),
    ('2A5', '4', '2a5-f4'),
    ('2E6', '4', '2e6-f4'),
    ('A3', 'F2[eps]', 'a3-f2eps'),
    ('B3', 'F2[eps]', 'b3-f2eps'),
    ('D4', 'F2[eps]', 'd4-f2eps'),
]

COLUMNS = ['Group', 'Ring', 'Case', 'Predicted', 'Expected', 'Method', 'Status']


def reproduce_tables(results=None, settings=None):
    """
    Get the table of predicted multipliers with the verification method of every row.

    Parameters
    ----------
    results : pandas DataFrame (default=None)
        Output of CaseRunner.get_results. Rows whose case was run take their status from it, the
        others have status 'not run'.

    settings : Settings (default=None)

    Returns
    -------
    table : pandas DataFrame

    text : string
        The rendered table.
    """
    statuses = {}
    if results is not None:
        statuses = dict(zip(results['Case'], results['Status']))
    rows = []
    for group, ring, name in TABLE_ROWS:
        case = VerificationCase(name, settings=settings)
        predicted = case.prediction()
        rows.append({
            'Group': group,
            'Ring': ring,
            'Case': name,
            'Predicted': predicted.describe(),
            'Expected': case.expected.describe(),
            'Method': case.method,
            'Status': statuses.get(name, 'not run'),
        })
    table = pd.DataFrame(rows, columns=COLUMNS)
    return table, table.to_string(index=False)
