# services/__init__.py

from services.lattice_service import hermite_normal_form, lattice_index, dual_sublattice, member
from services.semigroup_service import validate, canonical_form, enumerate_semigroup
from services.essential_service import singular_locus, essential_over_singular, essential_matrix
from services.poincare_service import poincare_forward, short_form, expand, count_fibers, specialize_sum
from services.inversion_service import recover
from services.zeta_service import zeta_mcewan_nemethi, equi_check, plane_branch_series

__all__ = [
    'hermite_normal_form',
    'lattice_index',
    'dual_sublattice',
    'member',
    'validate',
    'canonical_form',
    'enumerate_semigroup',
    'singular_locus',
    'essential_over_singular',
    'essential_matrix',
    'poincare_forward',
    'short_form',
    'expand',
    'count_fibers',
    'specialize_sum',
    'recover',
    'zeta_mcewan_nemethi',
    'equi_check',
    'plane_branch_series'
]
