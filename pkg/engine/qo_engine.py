# engine/qo_engine.py

"""
Quasi-Ordinary Engine
Composes the services under one EngineConfig and produces the documents
emitted by the command-line front end
"""

import logging
from typing import Any, Dict, Optional, Sequence, Tuple

from config.engine_config import EngineConfig, get_default_engine_config
from models.qo_models import CharacteristicSequence, EssentialDivisors, SemigroupPresentation
from models.series_models import CyclotomicRational, RecoveryBranch, ShortFormInput, TruncatedSeries
from services.essential_service import essential_matrix, essential_over_singular, singular_locus
from services.inversion_service import recover
from services.poincare_service import count_fibers, expand, poincare_forward, short_form
from services.semigroup_service import validate
from services.zeta_service import equi_check, zeta_mcewan_nemethi
from utils.codec import charseq_to_dict, shortform_to_dict
from utils.exceptions import DimensionMismatch
from utils.helpers import format_vector
from utils.sampler import InstanceSampler

logger = logging.getLogger(__name__)


def _series_document(series: TruncatedSeries) -> Dict[str, Any]:
    return {
        'vars': series.vars,
        'bound': list(series.bound),
        'coeffs': [[list(a), series.coeffs[a]] for a in sorted(series.coeffs)]
    }


class QuasiOrdinaryEngine:
    """Pipeline from characteristic exponents to Poincare series and back"""

    def __init__(self, config: Optional[EngineConfig] = None):
        self.config = config or get_default_engine_config()
        logger.info(f"Quasi-ordinary engine initialized (threads={self.config.threads})")

    # Pipeline stages

    def presentation(self, cs: CharacteristicSequence) -> SemigroupPresentation:
        return validate(cs)

    def essential_data(self, sp: SemigroupPresentation) -> EssentialDivisors:
        ed = essential_over_singular(sp, singular_locus(sp), self.config.max_box_points)
        essential_matrix(ed, sp.d, sp)
        return ed

    def forward(self, cs: CharacteristicSequence, short: bool = False) -> CyclotomicRational:
        sp = self.presentation(cs)
        cr = poincare_forward(sp, self.essential_data(sp))
        return short_form(cr) if short else cr

    # Documents

    def validate_document(self, cs: CharacteristicSequence) -> Dict[str, Any]:
        sp = self.presentation(cs)
        return {
            'valid': True,
            'd': sp.d,
            'g': sp.g,
            'c': sp.c,
            'n': list(sp.ns),
            'normalized': sp.normalized
        }

    def invariants_document(self, cs: CharacteristicSequence) -> Dict[str, Any]:
        sp = self.presentation(cs)
        return {
            'd': sp.d,
            'g': sp.g,
            'c': sp.c,
            'n': list(sp.ns),
            'degree': sp.degree,
            'gammas': [format_vector(gamma) for gamma in sp.gammas],
            'm': list(sp.m),
            'N': [list(row) for row in sp.lattice_N.basis.to_rows()],
            'normalized': sp.normalized
        }

    def essential_document(self, cs: CharacteristicSequence) -> Dict[str, Any]:
        sp = self.presentation(cs)
        sl = singular_locus(sp)
        ed = essential_over_singular(sp, sl, self.config.max_box_points)
        em = essential_matrix(ed, sp.d, sp)
        return {
            'groups': {'s1': ed.s1, 's2': ed.s2, 's0': ed.s0},
            'two_group_mode': ed.two_group_mode,
            'ws': [list(w) for w in ed.ws],
            'singular_locus': {
                'codim1': [i + 1 for i in sl.codim1],
                'codim2': [[i + 1, j + 1] for i, j in sl.codim2]
            },
            'structure': {'ok': em.report.ok, 'violations': em.report.violations}
        }

    def poincare_document(self, cs: CharacteristicSequence, short: bool = False) -> Dict[str, Any]:
        return shortform_to_dict(self.forward(cs, short=short))

    def expand_document(self, cr: CyclotomicRational, bound: Sequence[int]) -> Dict[str, Any]:
        return _series_document(expand(cr, bound, max_points=self.config.max_box_points))

    def count_document(self, cs: CharacteristicSequence, bound: Sequence[int]) -> Dict[str, Any]:
        sp = self.presentation(cs)
        ed = self.essential_data(sp)
        if len(bound) != ed.p:
            raise DimensionMismatch(f"Bound has {len(bound)} entries for {ed.p} variables", datum=list(bound))
        return _series_document(count_fibers(sp, ed, bound, threads=self.config.threads))

    def invert_document(self, sf: ShortFormInput) -> Dict[str, Any]:
        report = recover(sf)
        logger.info(f"Inversion branch {report.branch.value}")
        return {
            'd': report.d,
            'g': report.g,
            'c': report.c,
            'n': list(report.ns),
            'lambdas': [format_vector(lam) for lam in report.lambdas]
        }

    def zeta_document(self, cs: CharacteristicSequence) -> Dict[str, Any]:
        sp = self.presentation(cs)
        report = zeta_mcewan_nemethi(sp, self.essential_data(sp))
        return {
            'case': report.case.value,
            'n': report.n,
            'b': list(report.b),
            'zeta': {
                'numerator': [e[0] for e in report.zeta.numerator],
                'denominator': [e[0] for e in report.zeta.denominator]
            },
            'identity_verified': report.identity_verified,
            'i0': report.i0,
            'h_semigroup': list(report.h_semigroup)
        }

    def equi_document(self, pair: Tuple[ShortFormInput, ShortFormInput]) -> Dict[str, Any]:
        return {'k': equi_check(*pair)}

    def sample_document(self, branch: RecoveryBranch, seed: int) -> Dict[str, Any]:
        return charseq_to_dict(InstanceSampler(seed, self.config).sample(branch))
