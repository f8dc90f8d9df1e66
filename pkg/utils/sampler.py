# utils/sampler.py

"""
Stratified random-instance generator
Draws normalized characteristic sequences whose essential data selects a
requested inversion branch; coordinate denominators stay below the
configured bound so every derived lattice stays at desk scale
"""

import logging
import random
from fractions import Fraction
from math import lcm
from typing import Dict, List, Optional, Sequence, Tuple

from config.engine_config import EngineConfig, get_default_engine_config
from models.qo_models import CharacteristicSequence
from models.series_models import RecoveryBranch
from services.essential_service import branch_of, essential_over_singular, singular_locus
from services.semigroup_service import validate
from utils.exceptions import QuasiOrdinaryError, SamplerExhausted
from utils.helpers import lex_sorted

logger = logging.getLogger(__name__)

QUADRATIC_CONE = (Fraction(1, 2), Fraction(1, 2))


class InstanceSampler:
    """Seeded generator of normalized presentations, stratified by branch"""

    def __init__(self, seed: int = 0, config: Optional[EngineConfig] = None):
        self.seed = seed
        self.config = config or get_default_engine_config()
        self.rng = random.Random(seed)
        logger.info(f"Instance sampler initialized (seed={seed})")

    def _denominators(self, g: int) -> List[int]:
        """q_1 | q_2 | ... | q_g, each at most max_denominator"""
        top = self.config.max_denominator
        qs = [self.rng.randint(2, top)]
        for _ in range(g - 1):
            qs.append(self.rng.choice([q for q in range(qs[-1], top + 1) if q % qs[-1] == 0]))
        return qs

    def _increment(self, support: Sequence[int], d: int, q: int) -> List[Fraction]:
        step = [Fraction(0)] * d
        while not any(step):
            for i in support:
                step[i] = Fraction(self.rng.randint(0, 2 * q), q)
        return step

    def _chain(self, support: Sequence[int], d: int, g: int) -> List[List[Fraction]]:
        current = [Fraction(0)] * d
        lambdas = []
        for q in self._denominators(g):
            step = self._increment(support, d, q)
            current = [a + b for a, b in zip(current, step)]
            lambdas.append(current)
        return lambdas

    def _with_non_components(self, d: int, k: int, n_last: int) -> List[List[Fraction]]:
        """
        lambda_1..lambda_{g-1} on free coordinates, lambda_g adds 1/n_g on k
        further coordinates and multiples of 1/n_g elsewhere
        """
        free = self.rng.randint(0, d - k)
        g = 1 if free == 0 else self.rng.randint(1, self.config.max_g)
        previous = self._chain(range(free), d, g - 1) if g > 1 else []
        if previous:
            level = lcm(1, *(x.denominator for lam in previous for x in lam))
            if lcm(level, n_last) > self.config.max_denominator:
                n_last = level
        base = previous[-1] if previous else [Fraction(0)] * d
        last = list(base)
        for i in range(free):
            last[i] += Fraction(self.rng.randint(0, 2), n_last)
        for i in range(free, free + k):
            last[i] = Fraction(1, n_last)
        return previous + [last]

    def _propose(self, branch: RecoveryBranch) -> List[List[Fraction]]:
        cfg = self.config
        if branch == RecoveryBranch.DIM2_QUADRATIC_CONE:
            return [list(QUADRATIC_CONE)]
        if branch == RecoveryBranch.DIM2:
            return self._chain(range(2), 2, self.rng.randint(1, cfg.max_g))

        d = self.rng.randint(3, max(3, cfg.max_dim))
        if branch == RecoveryBranch.S2_EQ_1:
            return self._with_non_components(d, 2, 2)
        if branch == RecoveryBranch.S2_GE_2:
            if self.rng.random() < 0.5:
                return self._with_non_components(d, 3, self.rng.randint(2, 3))
            return self._with_non_components(d, 2, 3)
        c = self.rng.randint(1, d)
        return self._chain(range(c), d, self.rng.randint(1, cfg.max_g))

    def sample(self, branch: RecoveryBranch) -> CharacteristicSequence:
        """
        One normalized sequence whose essential data selects the branch

        Raises:
            SamplerExhausted after max_attempts rejected proposals
        """
        for attempt in range(self.config.max_attempts):
            lambdas = self._propose(branch)
            d = len(lambdas[0])
            cs = CharacteristicSequence(d, lex_sorted(lambdas, d))
            try:
                sp = validate(cs)
            except QuasiOrdinaryError:
                continue
            if not sp.normalized:
                continue
            ed = essential_over_singular(sp, singular_locus(sp), self.config.max_box_points)
            if branch_of(ed) == branch:
                logger.debug(f"Sampled {branch.value} after {attempt + 1} proposals")
                return cs
        raise SamplerExhausted(
            f"No {branch.value} instance in {self.config.max_attempts} proposals",
            datum=branch.value
        )

    def corpus(self, per_branch: int, branches: Sequence[RecoveryBranch] = None) -> List[Tuple[RecoveryBranch, CharacteristicSequence]]:
        """per_branch instances of every branch, in branch order"""
        if branches is None:
            branches = [b for b in RecoveryBranch if b != RecoveryBranch.DIM2_QUADRATIC_CONE]
        instances = []
        counts: Dict[str, int] = {}
        for branch in branches:
            for _ in range(per_branch):
                instances.append((branch, self.sample(branch)))
            counts[branch.value] = per_branch
        logger.info(f"Sampled corpus: {counts}")
        return instances
