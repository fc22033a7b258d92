from pathlib import Path
from typing import Dict, List, Optional
import logging

from simplexcenters.models.errors import UnknownNameError
from simplexcenters.models.geometry import Simplex
from simplexcenters.services.simplex_io import loads_simplex

logger = logging.getLogger(__name__)


def fixture_key(name: str) -> str:
    """REG(4), reg4 and Reg4 all name the same fixture"""
    return name.strip().lower().replace("(", "").replace(")", "")


class FixtureManager:
    """Service responsible for loading and caching named simplex fixtures"""

    def __init__(self, fixtures_dir: Optional[Path] = None):
        if fixtures_dir is None:
            # Default to simplexcenters/fixtures directory
            fixtures_dir = Path(__file__).parent.parent / "fixtures"

        self.fixtures_dir = Path(fixtures_dir)
        self._fixture_cache: Dict[str, Simplex] = {}

        if not self.fixtures_dir.exists():
            logger.warning(f"Fixtures directory not found: {self.fixtures_dir}")

    def get_fixture(self, name: str) -> Simplex:
        """Load fixture with lazy loading and caching"""
        key = fixture_key(name)
        if key not in self._fixture_cache:
            self._load_fixture(key)
        return self._fixture_cache[key]

    def get_fixture_text(self, name: str) -> str:
        """Raw JSON of a fixture, as shipped"""
        return self._fixture_path(fixture_key(name)).read_text(encoding="utf-8")

    def _fixture_path(self, key: str) -> Path:
        fixture_file = self.fixtures_dir / f"{key}.json"
        if not fixture_file.exists():
            error_msg = f"Fixture not found: {key}.json in {self.fixtures_dir}"
            logger.error(error_msg)
            raise UnknownNameError(error_msg, available=self.list_available_fixtures())
        return fixture_file

    def _load_fixture(self, key: str) -> None:
        """Load a fixture file into cache"""
        text = self._fixture_path(key).read_text(encoding="utf-8")
        self._fixture_cache[key] = loads_simplex(text)
        logger.debug(f"Loaded fixture: {key}.json")

    def clear_cache(self) -> None:
        """Clear all cached fixtures"""
        self._fixture_cache.clear()
        logger.info("Cleared fixture cache")

    def list_available_fixtures(self) -> List[str]:
        """List all available fixture names"""
        return sorted(f.stem for f in self.fixtures_dir.glob("*.json"))
