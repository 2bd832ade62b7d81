"""
Element-wise property definitions
"""

from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Any, Callable, Dict, Optional

from services.perm_core import Permutation

Observed = Optional[Dict[str, Any]]


class BaseProperty(ABC):
    """A statement checked on every element of a population.

    ``check`` returns None when the statement holds and the observed
    values otherwise, so a failing element doubles as its own report.
    """

    @property
    @abstractmethod
    def name(self) -> str:
        pass

    @property
    @abstractmethod
    def group(self) -> str:
        """Population the property ranges over: s, a or q"""
        pass

    @property
    def min_degree(self) -> int:
        return 3 if self.group == "a" else 1

    @abstractmethod
    def check(self, w: Permutation, q: int = 1) -> Observed:
        pass


@dataclass(frozen=True)
class PropertySpec(BaseProperty):
    """Property backed by a plain predicate function"""

    spec_name: str
    spec_group: str
    description: str
    predicate: Callable[[Permutation, int], Observed]

    @property
    def name(self) -> str:
        return self.spec_name

    @property
    def group(self) -> str:
        return self.spec_group

    def check(self, w: Permutation, q: int = 1) -> Observed:
        return self.predicate(w, q)
