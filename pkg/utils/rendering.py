# utils/rendering.py

"""
Human-readable rendering of CLI documents as pandas tables
"""

from typing import Any, Dict, List

import pandas as pd


def _monomial(exponent: List[int]) -> str:
    parts = []
    for k, e in enumerate(exponent, start=1):
        if e == 1:
            parts.append(f"t{k}")
        elif e:
            parts.append(f"t{k}^{e}")
    return "*".join(parts) or "1"


def _factors(exponents: List, role: str) -> pd.DataFrame:
    vectors = [e if isinstance(e, list) else [e] for e in exponents]
    return pd.DataFrame({
        'role': [role] * len(vectors),
        'exponent': [str(tuple(v)) for v in vectors],
        'factor': [f"(1 - {_monomial(v)})" for v in vectors]
    })


def _key_values(document: Dict[str, Any]) -> pd.DataFrame:
    rows = [(key, value) for key, value in document.items() if not isinstance(value, (list, dict))]
    return pd.DataFrame(rows, columns=['field', 'value'])


def _table(rows: List, columns: List[str]) -> str:
    if not rows:
        return "(empty)"
    return pd.DataFrame(rows, columns=columns).to_string(index=False)


def render_text(command: str, document: Dict[str, Any]) -> str:
    """Tables for one output document"""
    blocks = []
    scalars = _key_values(document)
    if not scalars.empty:
        blocks.append(scalars.to_string(index=False))

    if command == 'poincare':
        s = document['groups']
        blocks.append(f"groups: s1={s['s1']} s2={s['s2']} s0={s['s0']}")
        factors = pd.concat(
            [_factors(document['numerator'], 'numerator'), _factors(document['denominator'], 'denominator')],
            ignore_index=True
        )
        blocks.append(factors.to_string(index=False) if not factors.empty else "(empty)")
    elif document.get('lambdas'):
        blocks.append(_table([[j + 1] + lam for j, lam in enumerate(document['lambdas'])],
                             ['j'] + [f"x{i + 1}" for i in range(len(document['lambdas'][0]))]))
    if 'n' in document and isinstance(document['n'], list):
        blocks.append(_table([[j + 1, n] for j, n in enumerate(document['n'])], ['j', 'n_j']))
    if document.get('gammas'):
        blocks.append(_table([[j + 1] + gamma for j, gamma in enumerate(document['gammas'])],
                             ['j'] + [f"x{i + 1}" for i in range(len(document['gammas'][0]))]))
    if document.get('ws'):
        s = document['groups']
        labels = ['codim1'] * s['s1'] + ['codim2'] * s['s2'] + ['origin'] * s['s0']
        blocks.append(_table([[label] + w for label, w in zip(labels, document['ws'])],
                             ['group'] + [f"e{j + 1}" for j in range(len(document['ws'][0]))]))
    if 'coeffs' in document:
        blocks.append(_table([[str(tuple(a)), c] for a, c in document['coeffs']], ['exponent', 'coefficient']))
    if 'zeta' in document:
        zeta = document['zeta']
        factors = pd.concat(
            [_factors(zeta['numerator'], 'numerator'), _factors(zeta['denominator'], 'denominator')],
            ignore_index=True
        )
        blocks.append(factors.to_string(index=False) if not factors.empty else "(empty)")
    return "\n\n".join(blocks)
