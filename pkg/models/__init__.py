# models/__init__.py

from models.lattice_models import IntegerMatrix, LatticeBasis, LatticeMode, RationalVector
from models.qo_models import (
    CharacteristicSequence,
    EssentialDivisors,
    EssentialMatrix,
    SemigroupPresentation,
    SingularLocus,
    StructureReport
)
from models.series_models import (
    CyclotomicRational,
    RecoveryBranch,
    RecoveryReport,
    ShortFormInput,
    TruncatedSeries,
    ZetaCase,
    ZetaReport
)

__all__ = [
    'IntegerMatrix',
    'LatticeBasis',
    'LatticeMode',
    'RationalVector',
    'CharacteristicSequence',
    'EssentialDivisors',
    'EssentialMatrix',
    'SemigroupPresentation',
    'SingularLocus',
    'StructureReport',
    'CyclotomicRational',
    'RecoveryBranch',
    'RecoveryReport',
    'ShortFormInput',
    'TruncatedSeries',
    'ZetaCase',
    'ZetaReport'
]
