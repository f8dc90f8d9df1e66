# tests/conftest.py

"""
Shared fixtures: worked examples and the branch-stratified sample corpus
"""

import os
import sys
from fractions import Fraction

import pytest

# Add parent directory to path
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from config.engine_config import get_oracle_engine_config
from models.lattice_models import RationalVector
from models.qo_models import CharacteristicSequence
from services.essential_service import essential_over_singular, singular_locus
from services.semigroup_service import validate
from utils.sampler import InstanceSampler

CORPUS_SEED = 20240611
CORPUS_PER_BRANCH = 50


def charseq(d, *lambdas):
    """charseq(3, ("1/3", 0, 0), ...) -> CharacteristicSequence"""
    return CharacteristicSequence(d, tuple(RationalVector(tuple(Fraction(x) for x in lam)) for lam in lambdas))


def quadratic_cone(d):
    return charseq(d, ("1/2", "1/2") + (0,) * (d - 2))


@pytest.fixture
def worked_example():
    """d = 3, lambda = {(1/3,0,0), (5/9,1/9,0)}"""
    return charseq(3, ("1/3", 0, 0), ("5/9", "1/9", 0))


@pytest.fixture
def worked_presentation(worked_example):
    return validate(worked_example)


@pytest.fixture
def worked_essential(worked_presentation):
    return essential_over_singular(worked_presentation, singular_locus(worked_presentation))


@pytest.fixture(scope="session")
def corpus():
    """(branch, CharacteristicSequence) pairs, CORPUS_PER_BRANCH per branch"""
    sampler = InstanceSampler(CORPUS_SEED, get_oracle_engine_config())
    return sampler.corpus(CORPUS_PER_BRANCH)
