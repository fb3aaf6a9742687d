"""
Catalog utilities for loading and listing the built-in graph catalog.
"""

from dataclasses import asdict, dataclass, field
from typing import Any, Dict, List, Optional

import pandas as pd
import yaml

from .config import resolve_path
from .errors import ConfigError


@dataclass(frozen=True)
class CatalogEntry:
    """One catalog record; values stay in their text formats until a consumer parses them."""

    name: str
    array: str
    family: Optional[str] = None
    classical: Optional[str] = None
    tags: List[str] = field(default_factory=list)
    expected: Dict[str, Dict[str, int]] = field(default_factory=dict)
    notes: str = ""

    @property
    def explicit(self) -> bool:
        return self.family is not None

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


class CatalogLoader:
    """Load and filter the YAML catalog."""

    def __init__(self, path: str = "data/catalog.yaml"):
        """Initialize catalog loader."""
        self.path = resolve_path(path)
        self.entries: Optional[List[CatalogEntry]] = None

    def load(self) -> List[CatalogEntry]:
        """Load entries from YAML, in file order."""
        if not self.path.exists():
            raise ConfigError(f"Catalog not found: {self.path}")
        with open(self.path, "r") as f:
            try:
                raw = yaml.safe_load(f) or {}
            except yaml.YAMLError as exc:
                raise ConfigError(f"malformed catalog {self.path}: {exc}") from exc

        entries = []
        for item in raw.get("entries", []):
            if "name" not in item or "array" not in item:
                raise ConfigError(f"catalog entry needs 'name' and 'array': {item}")
            expected = {
                key: {str(value): int(mult) for value, mult in snapshot.items()}
                for key, snapshot in (item.get("expected") or {}).items()
            }
            entries.append(CatalogEntry(
                name=str(item["name"]),
                array=str(item["array"]),
                family=item.get("family"),
                classical=item.get("classical"),
                tags=list(item.get("tags", [])),
                expected=expected,
                notes=item.get("notes", ""),
            ))
        self.entries = entries
        return entries

    def _ensure(self) -> List[CatalogEntry]:
        if self.entries is None:
            self.load()
        return self.entries

    def get(self, name: str) -> CatalogEntry:
        for entry in self._ensure():
            if entry.name == name or entry.family == name:
                return entry
        raise KeyError(name)

    def filter(self, tag: str) -> List[CatalogEntry]:
        """Entries carrying ``tag``; "classical" and "explicit" also match by content."""
        entries = self._ensure()
        if tag == "classical":
            return [e for e in entries if e.classical]
        if tag == "explicit":
            return [e for e in entries if e.explicit]
        return [e for e in entries if tag in e.tags]

    def to_frame(self) -> pd.DataFrame:
        """Catalog as a DataFrame, one row per entry."""
        rows = [
            {
                "name": e.name,
                "family": e.family or "",
                "array": e.array,
                "classical": e.classical or "",
                "tags": ",".join(e.tags),
            }
            for e in self._ensure()
        ]
        return pd.DataFrame(rows, columns=["name", "family", "array", "classical", "tags"])
