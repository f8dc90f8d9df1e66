# engine/__init__.py

from .qo_engine import QuasiOrdinaryEngine

__all__ = ['QuasiOrdinaryEngine']
