"""Knot catalog: invariant records plus optional CFK data, loaded from JSON."""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Optional

from .concordance import KnotInvariants, validate
from .errors import CatalogLookupError, DomainError
from .floer_model import CfkData, validate_cfk

ENV_VAR = "CSURG_CATALOG"


@dataclass
class Catalog:
    knots: dict = field(default_factory=dict)
    cfk: dict = field(default_factory=dict)

    def knot(self, name: str) -> KnotInvariants:
        if name not in self.knots:
            raise CatalogLookupError(f"unknown knot {name!r}; known: {', '.join(sorted(self.knots))}")
        return self.knots[name]

    def cfk_data(self, name: str) -> CfkData:
        if name not in self.cfk:
            raise CatalogLookupError(f"no CFK data for {name!r}; available: {', '.join(sorted(self.cfk))}")
        return self.cfk[name]

    def problems(self) -> list[str]:
        out = []
        for name, k in self.knots.items():
            out += [f"{name}: {p}" for p in validate(k)]
        for name, c in self.cfk.items():
            out += [f"{name} (cfk): {p}" for p in validate_cfk(c)]
            if name in self.knots and self.knots[name].tau != c.tau:
                out.append(f"{name}: cfk tau {c.tau} differs from catalog tau {self.knots[name].tau}")
        return out

    def to_json(self) -> dict:
        return {
            "knots": [k.to_json() for k in self.knots.values()],
            "cfk": {name: c.to_json() for name, c in self.cfk.items()},
        }

    @classmethod
    def from_json(cls, obj: dict) -> "Catalog":
        knots = {}
        for rec in obj.get("knots", []):
            k = KnotInvariants.from_json(rec)
            knots[k.name] = k
        cfk = {name: CfkData.from_json(c) for name, c in obj.get("cfk", {}).items()}
        cat = cls(knots, cfk)
        problems = cat.problems()
        if problems:
            raise DomainError("invalid catalog: " + "; ".join(problems))
        return cat


def load_catalog(path: Optional[str] = None) -> Catalog:
    """Load from `path`, else $CSURG_CATALOG, else the bundled catalog."""
    path = path or os.environ.get(ENV_VAR)
    if path:
        text = Path(path).read_text()
    else:
        text = resources.files("csurg").joinpath("data/catalog.json").read_text()
    return Catalog.from_json(json.loads(text))
