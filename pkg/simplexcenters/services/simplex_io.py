import json
import logging
from pathlib import Path
from typing import Any, Dict, Union

from pydantic import ValidationError

from simplexcenters.models.errors import InvalidInputError
from simplexcenters.models.geometry import (
    DEFAULT_TOLERANCE,
    DistanceMatrix,
    GramSpec,
    Simplex,
    Tolerance,
)
from simplexcenters.services.core_geometry import simplex_from_distances, simplex_from_gram

logger = logging.getLogger(__name__)


def parse_simplex(payload: Dict[str, Any], tol: Tolerance = DEFAULT_TOLERANCE) -> Simplex:
    """Simplex from its JSON object; Gram and distance objects are embedded first"""
    if not isinstance(payload, dict):
        raise InvalidInputError("Expected a JSON object with 'vertices', 'gram' or 'entries'")
    try:
        if "gram" in payload:
            return simplex_from_gram(GramSpec.model_validate(payload), tol)
        if "entries" in payload:
            return simplex_from_distances(DistanceMatrix.model_validate(payload), tol)
        if "vertices" in payload:
            if "dimension" not in payload and payload["vertices"]:
                payload = {**payload, "dimension": len(payload["vertices"][0])}
            return Simplex.model_validate(payload)
    except ValidationError as e:
        logger.error(f"Malformed simplex payload: {e}")
        raise InvalidInputError(f"Malformed simplex payload: {e.errors()[0]['msg']}")
    except (TypeError, IndexError) as e:
        raise InvalidInputError(f"Malformed simplex payload: {e}")
    raise InvalidInputError("Expected a JSON object with 'vertices', 'gram' or 'entries'")


def load_simplex_json(source: Union[str, Path], tol: Tolerance = DEFAULT_TOLERANCE) -> Simplex:
    """Read a JSON Simplex or Gram file ('-' is not handled here)"""
    path = Path(source)
    if not path.exists():
        raise InvalidInputError(f"Input file not found: {path}")
    return loads_simplex(path.read_text(encoding="utf-8"), tol)


def loads_simplex(text: str, tol: Tolerance = DEFAULT_TOLERANCE) -> Simplex:
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as e:
        logger.error(f"Invalid JSON input: {e}")
        raise InvalidInputError(f"Invalid JSON: {e.msg} at line {e.lineno}")
    return parse_simplex(payload, tol)


def format_coordinate(value: float) -> str:
    """17 significant digits, enough to restore every double exactly"""
    return format(float(value), ".17g")


def dump_simplex(simplex: Simplex) -> str:
    rows = ", ".join(
        "[" + ", ".join(format_coordinate(x) for x in vertex) + "]" for vertex in simplex.vertices
    )
    return f'{{"dimension": {simplex.dimension}, "vertices": [{rows}]}}'
