"""
Base verifier class and the verification target shared by all stages.
"""

from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from datetime import datetime
from fractions import Fraction
from typing import Any, Dict, List, Optional

from src.drg.classical import ClassicalParameters
from src.drg.intersection_array import IntersectionArray
from src.drg.spectrum import SpectrumOfGamma, spectrum_of_gamma
from src.numerics.matrix import Inertia, SymmetricRationalMatrix, inertia
from src.numerics.rationals import format_rational
from src.oracle.families import build_family
from src.oracle.graph import DistanceMatrix, Graph, all_pairs_distances
from src.oracle.matrices import q_distance_matrix
from src.qdistance.coefficients import q_coefficients
from src.qdistance.spectrum import GeneralizedSpectrum, generalized_spectrum
from src.utils.data import CatalogEntry


@dataclass
class VerificationTarget:
    """A catalog entry with its parsed array, optional explicit graph and per-q caches."""

    entry: CatalogEntry
    ia: IntersectionArray
    params: Optional[ClassicalParameters] = None
    graph: Optional[Graph] = None
    dm: Optional[DistanceMatrix] = None
    _gamma: Optional[SpectrumOfGamma] = field(default=None, repr=False)
    _matrices: Dict[Fraction, SymmetricRationalMatrix] = field(default_factory=dict, repr=False)
    _inertia: Dict[Fraction, Inertia] = field(default_factory=dict, repr=False)
    _spectra: Dict[Fraction, GeneralizedSpectrum] = field(default_factory=dict, repr=False)

    @classmethod
    def from_entry(cls, entry: CatalogEntry) -> "VerificationTarget":
        ia = IntersectionArray.parse(entry.array)
        params = ClassicalParameters.parse(entry.classical) if entry.classical else None
        graph = build_family(entry.family) if entry.family else None
        dm = all_pairs_distances(graph) if graph is not None else None
        return cls(entry, ia, params, graph, dm)

    @property
    def name(self) -> str:
        return self.entry.name

    @property
    def explicit(self) -> bool:
        return self.graph is not None

    @property
    def gamma(self) -> SpectrumOfGamma:
        if self._gamma is None:
            self._gamma = spectrum_of_gamma(self.ia)
        return self._gamma

    def analytic_spectrum(self, q: Fraction) -> GeneralizedSpectrum:
        if q not in self._spectra:
            alpha = q_coefficients(q, self.ia.diameter).as_sequence()
            self._spectra[q] = generalized_spectrum(self.ia, alpha, self.gamma)
        return self._spectra[q]

    def q_matrix(self, q: Fraction) -> SymmetricRationalMatrix:
        if self.dm is None:
            raise ValueError(f"{self.name} has no explicit graph")
        if q not in self._matrices:
            self._matrices[q] = q_distance_matrix(self.dm, q)
        return self._matrices[q]

    def q_inertia(self, q: Fraction) -> Inertia:
        if q not in self._inertia:
            self._inertia[q] = inertia(self.q_matrix(q))
        return self._inertia[q]


def check(name: str, passed: bool, detail: Any = None) -> Dict[str, Any]:
    """One named check outcome."""
    return {"name": name, "passed": bool(passed), "detail": detail}


class BaseVerifier(ABC):
    """Base class for all verification stages."""

    requires_graph = False

    def __init__(self, name: str, config: Optional[Dict[str, Any]] = None):
        """Initialize base verifier."""
        self.name = name
        self.config = config or {}
        self.execution_history: List[Dict[str, Any]] = []

    def run(self, target: VerificationTarget, q_grid: List[Fraction]) -> Dict[str, Any]:
        """Execute the stage, mapping a missing graph to "skipped" and exceptions to "error"."""
        if self.requires_graph and not target.explicit:
            result = {"status": "skipped", "checks": [], "reason": "no explicit construction"}
        else:
            try:
                result = self.execute(target, {"q_grid": q_grid})
            except Exception as exc:
                code = getattr(exc, "code", type(exc).__name__)
                result = {"status": "error", "checks": [], "error": f"{code}: {exc}"}
        self.log_execution(target.name, result)
        return result

    @abstractmethod
    def execute(self, target: VerificationTarget, context: Dict[str, Any]) -> Dict[str, Any]:
        """Execute stage checks. Must be implemented by subclasses."""
        pass

    @staticmethod
    def summarize(checks: List[Dict[str, Any]], **extra) -> Dict[str, Any]:
        status = "pass" if all(c["passed"] for c in checks) else "fail"
        if not checks:
            status = "skipped"
        return {"status": status, "checks": checks, **extra}

    def log_execution(self, target: str, result: Any):
        """Log stage execution."""
        self.execution_history.append({
            "timestamp": datetime.now().isoformat(),
            "target": target,
            "status": result.get("status") if isinstance(result, dict) else None,
        })

    def get_history(self) -> List[Dict[str, Any]]:
        """Get execution history."""
        return self.execution_history


def q_label(q: Fraction) -> str:
    return format_rational(q)
